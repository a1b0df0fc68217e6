#pragma once

#include "json.hpp"
#include "weyltrunc/report.hpp"
#include "weyltrunc/root_system.hpp"
#include "weyltrunc/weight.hpp"
#include "weyltrunc/weyl_element.hpp"

namespace weyltrunc {

using Json = nlohmann::ordered_json;

/// Integer array in Bourbaki simple-root order.
Json to_json(const Weight& x);
Weight weight_from_json(const Json& j);

/// Canonical word as 1-based simple-reflection labels; identity is [].
Json to_json(const WeylElement& w);

/// {check_id, passed, counts, counterexamples, elapsed_ms}, plus asserted,
/// note and checks when present. elapsed_ms is null unless with_timing.
Json to_json(const VerificationReport& r, bool with_timing);

/// Cartan matrix, positive roots, rho, alpha0, h and |W|.
Json describe(const RootSystem& rs);

}  // namespace weyltrunc
