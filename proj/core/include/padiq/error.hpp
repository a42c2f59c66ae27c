#pragma once

#include <stdexcept>
#include <string>

namespace padiq {

// Bad mathematical input: non-prime modulus, zero denominator, degenerate
// recurrence, value outside an operation's domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The modulus admits no primitive roots at all (not 2, 4, p^k or 2p^k).
// Distinct from a negative primitive-root test so callers can tell
// structural impossibility from an ordinary "no".
class no_primitive_roots_error : public domain_error {
public:
    explicit no_primitive_roots_error(const std::string& what) : domain_error(what) {}
};

// A bounded computation ran out of precision or iterations
// (mod-p^K valuation overflow, greedy search cap).
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace padiq
