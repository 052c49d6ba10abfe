#pragma once

// Integer partitions, Young tableaux and tabloids, and the Specht
// representations S^lambda of symmetric groups.
//
// Label sets are arbitrary sorted lists of distinct points. A permutation
// p of degree m acts on labels by labels[i] -> labels[p(i)], so the
// matrices only depend on the label order.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "munn/elements.hpp"
#include "munn/monoid.hpp"
#include "munn/representation.hpp"

namespace munn {

  using IntegerPartition = std::vector<std::size_t>;  // weakly decreasing
  using Composition      = std::vector<std::size_t>;

  // In decreasing lexicographic order: (3), (2,1), (1,1,1).
  std::vector<IntegerPartition> partitions(std::size_t n);
  // Number of partitions; checked against the coefficient of x^n in
  // prod 1/(1 - x^k).
  std::size_t p_count(std::size_t n);
  // In decreasing lexicographic order.
  std::vector<Composition> compositions(std::size_t n);

  // Every tuple (mu_1, ..., mu_p) with mu_i a partition of sizes[i], in
  // lexicographic order of the partition lists.
  std::vector<std::vector<IntegerPartition>>
  partition_tuples(std::vector<std::size_t> const& sizes);

  // "(2,1)"; the empty partition is "()".
  std::string      partition_format(std::vector<std::size_t> const& parts);
  IntegerPartition partition_parse(std::string_view text);

  struct Tableau {
    std::vector<std::vector<point_t>> rows;

    IntegerPartition shape() const;
    bool             is_standard() const;
    bool operator==(Tableau const&) const = default;
  };

  // Rows as sorted sets; ordered lexicographically.
  using Tabloid = std::vector<std::vector<point_t>>;

  Tabloid tabloid_of(Tableau const& t);

  // Every filling of the shape by the labels (|labels|! of them).
  std::vector<Tableau> all_tableaux(IntegerPartition const&     shape,
                                    std::vector<point_t> const& labels);
  std::vector<Tableau> standard_tableaux(IntegerPartition const&     shape,
                                         std::vector<point_t> const& labels);
  std::vector<Tabloid> tabloids(IntegerPartition const&     shape,
                                std::vector<point_t> const& labels);

  // Permutations of the label positions preserving every column of t.
  std::vector<Permutation> column_group(Tableau const&              t,
                                        std::vector<point_t> const& labels);

  // Acts on tableaux by relabelling entries.
  Tableau act(Permutation const&          p,
              Tableau const&              t,
              std::vector<point_t> const& labels);

  // M^lambda: the permutation representation on tabloids. `group` is the
  // symmetric group of degree |labels|.
  Representation tabloid_module(IntegerPartition const&        shape,
                                std::vector<point_t> const&    labels,
                                Enumerated<Permutation> const& group);

  // v_T = sum over the column group of sign(h) {hT}, in tabloid coordinates.
  Vector polytabloid(Tableau const&              t,
                     std::vector<point_t> const& labels,
                     std::vector<Tabloid> const& basis);

  struct SpechtData {
    IntegerPartition     shape;
    std::vector<point_t> labels;
    std::vector<Tabloid> tabloid_basis;
    Representation       module;   // M^lambda
    Subspace             span;     // S^lambda inside M^lambda
    Representation       rep;      // S^lambda in its echelon coordinates
  };

  // S^lambda as the span of all polytabloids. Its dimension is checked
  // against the number of standard tableaux.
  SpechtData specht_rep(IntegerPartition const&        shape,
                        std::vector<point_t> const&    labels,
                        Enumerated<Permutation> const& group);
  SpechtData specht_rep(IntegerPartition const& shape);

  struct YoungFactor {
    IntegerPartition     mu;
    std::vector<point_t> block;
  };

  // S^{mu_1} (x) ... (x) S^{mu_p} as a representation of the direct
  // product S_{|block_1|} x ... x S_{|block_p|}, factors in order.
  Representation young_tensor(std::vector<YoungFactor> const& factors);

}  // namespace munn
