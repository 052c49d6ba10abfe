#include "munn/kernels.hpp"

#include <bit>
#include <limits>

namespace munn {

  void BitMatrix::or_row(std::size_t r, BitMatrix const& other, std::size_t s) {
    auto dst = row(r);
    auto src = other.row(s);
    for (std::size_t w = 0; w < _words; ++w) {
      dst[w] |= src[w];
    }
  }

  bool BitMatrix::row_equal(std::size_t r, std::size_t s) const {
    auto a = row(r);
    auto b = row(s);
    for (std::size_t w = 0; w < _words; ++w) {
      if (a[w] != b[w]) {
        return false;
      }
    }
    return true;
  }

  bool BitMatrix::row_subset(std::size_t r, std::size_t s) const {
    auto a = row(r);
    auto b = row(s);
    for (std::size_t w = 0; w < _words; ++w) {
      if ((a[w] & ~b[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t BitMatrix::row_count(std::size_t r) const {
    std::size_t total = 0;
    for (auto w : row(r)) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  namespace kernels {

    namespace {
      void fill_row(CayleyTree const& tree, index_t x, index_t* out) {
        std::size_t const k = tree.generators;
        out[tree.order[0]]  = x;
        for (std::size_t i = 1; i < tree.order.size(); ++i) {
          index_t const y = tree.order[i];
          out[y]          = tree.right[out[tree.parent[y]] * k + tree.via[y]];
        }
      }

      void ideals_row(std::span<index_t const> table,
                      std::size_t              n,
                      PrincipalIdeals&         out,
                      std::size_t              s) {
        for (std::size_t x = 0; x < n; ++x) {
          out.right.set(s, table[s * n + x]);
          out.left.set(s, table[x * n + s]);
        }
      }

      void two_sided_row(std::size_t n, PrincipalIdeals& out, std::size_t s) {
        // SsS is the union of the left ideals Sx over x in sS.
        for (std::size_t x = 0; x < n; ++x) {
          if (out.right.test(s, x)) {
            out.two_sided.or_row(s, out.left, x);
          }
        }
      }

      std::size_t inverses_of(std::span<index_t const> table,
                              std::size_t              n,
                              std::size_t              s) {
        std::size_t count = 0;
        for (std::size_t t = 0; t < n; ++t) {
          index_t const st = table[s * n + t];
          if (table[st * n + s] == s && table[table[t * n + s] * n + t] == t) {
            ++count;
          }
        }
        return count;
      }

      bool pair_ok(std::span<index_t const> table,
                   std::size_t              n,
                   std::span<Matrix const>  mats,
                   std::size_t              x,
                   std::size_t              y) {
        return mats[table[x * n + y]] == mats[x] * mats[y];
      }
    }  // namespace

    std::vector<index_t> fill_table(CayleyTree const& tree) {
      std::vector<index_t> table(tree.size * tree.size);
      auto const           n = static_cast<std::int64_t>(tree.size);
#pragma omp parallel for schedule(static)
      for (std::int64_t x = 0; x < n; ++x) {
        fill_row(tree, static_cast<index_t>(x), table.data() + x * n);
      }
      return table;
    }

    PrincipalIdeals principal_ideals(std::span<index_t const> table,
                                     std::size_t              n) {
      PrincipalIdeals out{BitMatrix(n, n), BitMatrix(n, n), BitMatrix(n, n)};
      auto const      m = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
      for (std::int64_t s = 0; s < m; ++s) {
        ideals_row(table, n, out, static_cast<std::size_t>(s));
      }
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t s = 0; s < m; ++s) {
        two_sided_row(n, out, static_cast<std::size_t>(s));
      }
      return out;
    }

    std::vector<std::size_t> count_inverses(std::span<index_t const> table,
                                            std::size_t              n) {
      std::vector<std::size_t> out(n);
      auto const               m = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
      for (std::int64_t s = 0; s < m; ++s) {
        out[s] = inverses_of(table, n, static_cast<std::size_t>(s));
      }
      return out;
    }

    std::optional<std::pair<index_t, index_t>>
    homomorphism_failure(std::span<index_t const> table,
                         std::size_t              n,
                         std::span<Matrix const>  mats) {
      // Each thread records the first failing x it owns; the overall answer
      // is the lexicographically least pair, as in the serial scan.
      std::vector<std::size_t> bad_y(n, std::numeric_limits<std::size_t>::max());
      auto const               m = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
      for (std::int64_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!pair_ok(table, n, mats, static_cast<std::size_t>(x), y)) {
            bad_y[x] = y;
            break;
          }
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (bad_y[x] != std::numeric_limits<std::size_t>::max()) {
          return std::pair{static_cast<index_t>(x),
                           static_cast<index_t>(bad_y[x])};
        }
      }
      return std::nullopt;
    }

    namespace serial {
      std::vector<index_t> fill_table(CayleyTree const& tree) {
        std::vector<index_t> table(tree.size * tree.size);
        for (std::size_t x = 0; x < tree.size; ++x) {
          fill_row(tree, static_cast<index_t>(x), table.data() + x * tree.size);
        }
        return table;
      }

      PrincipalIdeals principal_ideals(std::span<index_t const> table,
                                       std::size_t              n) {
        PrincipalIdeals out{BitMatrix(n, n), BitMatrix(n, n), BitMatrix(n, n)};
        for (std::size_t s = 0; s < n; ++s) {
          ideals_row(table, n, out, s);
        }
        for (std::size_t s = 0; s < n; ++s) {
          two_sided_row(n, out, s);
        }
        return out;
      }

      std::vector<std::size_t> count_inverses(std::span<index_t const> table,
                                              std::size_t              n) {
        std::vector<std::size_t> out(n);
        for (std::size_t s = 0; s < n; ++s) {
          out[s] = inverses_of(table, n, s);
        }
        return out;
      }

      std::optional<std::pair<index_t, index_t>>
      homomorphism_failure(std::span<index_t const> table,
                           std::size_t              n,
                           std::span<Matrix const>  mats) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (!pair_ok(table, n, mats, x, y)) {
              return std::pair{static_cast<index_t>(x),
                               static_cast<index_t>(y)};
            }
          }
        }
        return std::nullopt;
      }
    }  // namespace serial

  }  // namespace kernels
}  // namespace munn
