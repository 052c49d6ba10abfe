#pragma once

// Small independent oracles shared by the test binaries.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace munn::testing {

  inline std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  // Stirling numbers of the second kind by the usual recurrence.
  inline std::size_t stirling2(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> s(n + 1,
                                            std::vector<std::size_t>(n + 1, 0));
    s[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= i; ++j) {
        s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
      }
    }
    return k <= n ? s[n][k] : 0;
  }

  inline std::size_t bell(std::size_t n) {
    std::size_t b = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      b += stirling2(n, k);
    }
    return b;
  }

  inline std::size_t ordered_set_partitions(std::size_t n) {
    std::size_t r = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      r += factorial(k) * stirling2(n, k);
    }
    return r;
  }

  inline std::size_t symmetric_inverse_order(std::size_t n) {
    std::size_t r = 0;
    for (std::size_t m = 0; m <= n; ++m) {
      r += binomial(n, m) * binomial(n, m) * factorial(m);
    }
    return r;
  }

  // Partitions of n with every part at most `largest`.
  inline std::size_t partition_count(std::size_t n, std::size_t largest) {
    if (n == 0) {
      return 1;
    }
    std::size_t r = 0;
    for (std::size_t k = 1; k <= std::min(n, largest); ++k) {
      r += partition_count(n - k, k);
    }
    return r;
  }

  inline std::size_t partition_count(std::size_t n) {
    return partition_count(n, n);
  }

}  // namespace munn::testing
