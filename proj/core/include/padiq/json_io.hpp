#pragma once

#include "padiq/lucas.hpp"
#include "padiq/oracle.hpp"
#include "padiq/pairs.hpp"
#include "padiq/verdict.hpp"

#include <nlohmann/json.hpp>

namespace padiq {

using json = nlohmann::json;

// big integers render as decimal strings when they do not fit int64
json int_to_json(const Int& n);

json to_json(const Valuation& v);
json to_json(const Certificate& cert);
json to_json(const DensityVerdict& verdict);
// canonical object: keys prime, exponent, window, attained, missing, witnesses
json to_json(const OracleReport& report);
json to_json(const PrimitiveRootProfile& profile);
json to_json(const SieveWitness& witness);

}  // namespace padiq
