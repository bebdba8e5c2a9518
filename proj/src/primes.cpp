// SPDX-License-Identifier: Apache-2.0
#include "primes.hpp"

#include <stdexcept>

namespace mdsmom {

std::vector<int64_t> primes_up_to(int64_t limit) {
  std::vector<int64_t> out;
  if (limit < 2) return out;
  std::vector<uint8_t> comp(static_cast<size_t>(limit) + 1, 0);
  for (int64_t i = 2; i * i <= limit; ++i)
    if (!comp[i])
      for (int64_t j = i * i; j <= limit; j += i) comp[j] = 1;
  for (int64_t i = 2; i <= limit; ++i)
    if (!comp[i]) out.push_back(i);
  return out;
}

std::vector<int32_t> spf_table(int32_t limit) {
  if (limit < 0) throw std::invalid_argument("spf_table: negative limit");
  std::vector<int32_t> spf(static_cast<size_t>(limit) + 1, 0);
  for (int64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0)
      for (int64_t j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
  }
  return spf;
}

std::vector<uint8_t> squarefree_table(int64_t limit) {
  std::vector<uint8_t> sf(static_cast<size_t>(limit) + 1, 1);
  if (limit >= 0) sf[0] = 0;
  for (int64_t p = 2; p * p <= limit; ++p) {
    const int64_t p2 = p * p;
    for (int64_t j = p2; j <= limit; j += p2) sf[j] = 0;
  }
  return sf;
}

}  // namespace mdsmom
