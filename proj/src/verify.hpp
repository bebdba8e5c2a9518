// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace mdsmom::verify {

using json = nlohmann::ordered_json;

// Named check bundles emitting {suite, inputs, values, deviation, pass}.
// quick = true trims the expensive randomized/numeric parts.
json run_suite(const std::string& name, uint64_t seed, bool quick);

// The exact-identity bundle: g factors, kappa, set identity, sieve, D12,
// hyperplanes (the CLI's `verify all --quick`).
json run_quick_bundle(uint64_t seed);

}  // namespace mdsmom::verify
