#pragma once

#include "padiq/error.hpp"
#include "padiq/integer.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace padiq {

// A finite stand-in for an infinite set of positive integers: sorted,
// distinct, nonempty, every element <= bound.
struct SetSample {
    std::vector<Int> elements;
    std::string generator_label;
    Int bound;

    static SetSample make(std::vector<Int> elements, std::string label, Int bound);
};

// newline-delimited decimal elements with one leading '# label' comment line
void write_sample(std::ostream& os, const SetSample& sample);
SetSample read_sample(std::istream& is);

}  // namespace padiq
