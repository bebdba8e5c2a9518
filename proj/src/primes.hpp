// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace mdsmom {

// Primes up to and including `limit`.
std::vector<int64_t> primes_up_to(int64_t limit);

// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
std::vector<int32_t> spf_table(int32_t limit);

// is_squarefree[n] for 0..limit.
std::vector<uint8_t> squarefree_table(int64_t limit);

}  // namespace mdsmom
