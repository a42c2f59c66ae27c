#include "padiq/sample.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace padiq {

SetSample SetSample::make(std::vector<Int> elements, std::string label, Int bound) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw domain_error("SetSample: empty sample");
    if (elements.front() < 1) throw domain_error("SetSample: elements must be positive");
    if (elements.back() > bound)
        throw domain_error("SetSample: element " + elements.back().get_str() + " exceeds bound " +
                           bound.get_str());
    return SetSample{std::move(elements), std::move(label), std::move(bound)};
}

void write_sample(std::ostream& os, const SetSample& sample) {
    os << "# " << sample.generator_label << " bound=" << sample.bound.get_str() << "\n";
    for (const Int& e : sample.elements) os << e.get_str() << "\n";
}

SetSample read_sample(std::istream& is) {
    std::string line;
    std::string label = "file";
    Int bound = 0;
    std::vector<Int> elems;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (label == "file" && line.size() > 2) label = line.substr(2, line.find(" bound=") - 2);
            continue;
        }
        Int v;
        if (v.set_str(line, 10) != 0) throw domain_error("read_sample: bad line '" + line + "'");
        elems.push_back(v);
        if (v > bound) bound = v;
    }
    return SetSample::make(std::move(elems), std::move(label), std::move(bound));
}

}  // namespace padiq
