#include "padiq/verdict.hpp"

namespace padiq {

std::string to_string(DensityStatus s) {
    switch (s) {
        case DensityStatus::Dense: return "Dense";
        case DensityStatus::NotDense: return "NotDense";
        case DensityStatus::UndecidedByTheory: return "UndecidedByTheory";
    }
    return "?";
}

DensityVerdict DensityVerdict::dense(std::string tag) {
    if (tag.empty()) throw domain_error("DensityVerdict: Dense needs a theorem tag");
    return {DensityStatus::Dense, std::nullopt, std::move(tag)};
}

DensityVerdict DensityVerdict::not_dense(Certificate cert, std::string tag) {
    if (tag.empty()) throw domain_error("DensityVerdict: NotDense needs a theorem tag");
    return {DensityStatus::NotDense, std::move(cert), std::move(tag)};
}

DensityVerdict DensityVerdict::undecided(std::string note) {
    return {DensityStatus::UndecidedByTheory, std::nullopt, std::move(note)};
}

}  // namespace padiq
