#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version (the one the
// library calls) and a plain serial reference in kernels::serial, kept for
// tests and the benchmark. Both produce identical results: work is split
// over independent output slots, never over a shared accumulator.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "munn/linalg.hpp"

namespace munn {

  using index_t = std::uint32_t;

  // A dense |rows| x |cols| bit matrix, one row per element.
  class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows),
          _cols(cols),
          _words((cols + 63) / 64),
          _bits(rows * _words, 0) {}

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    void set(std::size_t r, std::size_t c) {
      _bits[r * _words + c / 64] |= std::uint64_t(1) << (c % 64);
    }
    bool test(std::size_t r, std::size_t c) const {
      return (_bits[r * _words + c / 64] >> (c % 64)) & 1U;
    }
    std::span<std::uint64_t const> row(std::size_t r) const {
      return {_bits.data() + r * _words, _words};
    }
    std::span<std::uint64_t> row(std::size_t r) {
      return {_bits.data() + r * _words, _words};
    }
    // Row r |= row s of other.
    void or_row(std::size_t r, BitMatrix const& other, std::size_t s);
    bool row_equal(std::size_t r, std::size_t s) const;
    // Is row r a subset of row s?
    bool row_subset(std::size_t r, std::size_t s) const;
    std::size_t row_count(std::size_t r) const;

    bool operator==(BitMatrix const&) const = default;

   private:
    std::size_t                _rows  = 0;
    std::size_t                _cols  = 0;
    std::size_t                _words = 0;
    std::vector<std::uint64_t> _bits;
  };

  namespace kernels {

    // Breadth-first spanning tree of a right Cayley graph, used to fill a
    // multiplication table without touching element values: if
    // y = parent[y] * generator[via[y]] then x*y = (x*parent[y])*generator.
    struct CayleyTree {
      std::size_t          size = 0;
      std::size_t          generators = 0;
      std::vector<index_t> right;   // right[x * generators + g] = x * g_g
      std::vector<index_t> order;   // BFS order, order[0] is the identity
      std::vector<index_t> parent;  // unused for the identity
      std::vector<index_t> via;
    };

    std::vector<index_t> fill_table(CayleyTree const& tree);

    // Principal ideals as bit sets: left[s] = Ss, right[s] = sS,
    // two_sided[s] = SsS.
    struct PrincipalIdeals {
      BitMatrix left;
      BitMatrix right;
      BitMatrix two_sided;
    };

    PrincipalIdeals principal_ideals(std::span<index_t const> table,
                                     std::size_t              n);

    // For each s, the number of t with sts = s and tst = t.
    std::vector<std::size_t> count_inverses(std::span<index_t const> table,
                                            std::size_t              n);

    // First pair (x, y) with phi(xy) != phi(x) phi(y), if any.
    std::optional<std::pair<index_t, index_t>>
    homomorphism_failure(std::span<index_t const> table,
                         std::size_t              n,
                         std::span<Matrix const>  mats);

    namespace serial {
      std::vector<index_t> fill_table(CayleyTree const& tree);
      PrincipalIdeals      principal_ideals(std::span<index_t const> table,
                                            std::size_t              n);
      std::vector<std::size_t> count_inverses(std::span<index_t const> table,
                                              std::size_t              n);
      std::optional<std::pair<index_t, index_t>>
      homomorphism_failure(std::span<index_t const> table,
                           std::size_t              n,
                           std::span<Matrix const>  mats);
    }  // namespace serial

  }  // namespace kernels
}  // namespace munn
