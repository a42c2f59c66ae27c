#pragma once

#include "padiq/error.hpp"

#include <string>

namespace padiq {

// A p-adic valuation: an integer, or infinity for the zero rational.
class Valuation {
public:
    static Valuation finite(long v) { return Valuation(v, true); }
    static Valuation infinity() { return Valuation(0, false); }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }

    long value() const {
        if (!finite_) throw domain_error("valuation is infinite");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    // infinity compares greater than every finite valuation
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.finite_ && b.finite_) return a.v_ < b.v_;
        return a.finite_ && !b.finite_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return finite(a.v_ + b.v_);
    }

    std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

private:
    Valuation(long v, bool finite) : v_(v), finite_(finite) {}
    long v_;
    bool finite_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

}  // namespace padiq
