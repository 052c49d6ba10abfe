#pragma once

// Finite lattices with a permutation-group action, and the inverse monoid
// S(G, L) of pairs g_a built from them.
//
// An element g_a of S(G, L) behaves like the restriction of g to the down
// set {c : c <= a}. Two expressions g_a and h_a are the same element iff
// g^-1 h fixes every c <= a, so each element is stored with the least
// permutation of its coset g G^{<=a} (the pointwise stabiliser of the down
// set). Products follow g_a h_b = (gh)_{h^-1 . a meet b}.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "munn/elements.hpp"
#include "munn/monoid.hpp"

namespace munn {

  class FiniteLattice {
   public:
    // Meets and joins are derived from the order and validated.
    FiniteLattice(std::vector<std::string> labels, std::vector<char> leq);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    bool leq(index_t a, index_t b) const {
      return _leq[a * size() + b] != 0;
    }
    index_t meet(index_t a, index_t b) const {
      return _meet[a * size() + b];
    }
    index_t join(index_t a, index_t b) const {
      return _join[a * size() + b];
    }
    index_t top() const noexcept {
      return _top;
    }
    index_t bottom() const noexcept {
      return _bottom;
    }
    std::string const& label(index_t a) const {
      return _labels.at(a);
    }
    std::vector<index_t> down_set(index_t a) const;

    // Partial order axioms; meet/join are the unique glb/lub of every pair;
    // top and bottom are the join and meet of everything.
    void validate() const;

   private:
    std::vector<std::string> _labels;
    std::vector<char>        _leq;
    std::vector<index_t>     _meet;
    std::vector<index_t>     _join;
    index_t                  _top    = 0;
    index_t                  _bottom = 0;
  };

  struct GroupAction {
    Enumerated<Permutation> group;
    std::size_t             lattice_size = 0;
    std::vector<index_t>    table;  // table[g * lattice_size + a] = g . a

    index_t act(index_t g, index_t a) const {
      return table[g * lattice_size + a];
    }
    // Identity acts trivially, (gh).a = g.(h.a), and each g is an order
    // automorphism. Throws VerificationFailure.
    void validate(FiniteLattice const& lattice) const;
  };

  enum class LatticeKind { subsets, set_partitions, ordered_partitions_zero };

  std::string_view lattice_kind_name(LatticeKind kind);
  LatticeKind      lattice_kind_parse(std::string_view name);

  using Blocks = std::vector<std::vector<point_t>>;

  struct LatticeInstance {
    LatticeKind                        kind;
    std::size_t                        degree;
    std::vector<std::optional<Blocks>> elements;  // nullopt: adjoined zero
    FiniteLattice                      lattice;
    GroupAction                        action;

    index_t index_of(std::optional<Blocks> const& x) const;
    // The points on which the stabiliser of a acts faithfully after
    // quotienting by its pointwise stabiliser, grouped into the blocks of a:
    // the subset itself for subsets, the ordered blocks for ordered
    // partitions (none for the zero). Set partitions have no such model.
    std::optional<Blocks> point_blocks(index_t a) const;
  };

  inline constexpr std::size_t kMaxLatticeDegree = 5;

  // Built-in lattices with their S_n action. `group_generators` replaces
  // S_n by the subgroup they generate.
  LatticeInstance make_lattice(LatticeKind                     kind,
                               std::size_t                     n,
                               std::vector<Permutation> const& group_generators = {});

  struct StabilizerPair {
    std::vector<index_t> full;       // {g : g.a = a}
    std::vector<index_t> pointwise;  // {g : g.c = c for all c <= a}
  };

  struct SGLElement {
    index_t a;  // lattice index
    index_t g;  // group index of the least coset representative

    bool operator==(SGLElement const&) const = default;
    auto operator<=>(SGLElement const&) const = default;
  };

  struct OrderReport {
    std::vector<std::size_t> index_per_element;  // [G : G^{<=a}] per a
    std::size_t              formula    = 0;
    std::size_t              enumerated = 0;
  };

  struct QuotientGroup {
    index_t              a;
    std::vector<index_t> representatives;  // canonical group indices
    MonoidPtr            group;            // induced multiplication
  };

  class SGLMonoid {
   public:
    explicit SGLMonoid(std::shared_ptr<LatticeInstance const> lattice);

    LatticeInstance const& lattice() const noexcept {
      return *_lattice;
    }
    std::shared_ptr<LatticeInstance const> lattice_ptr() const noexcept {
      return _lattice;
    }
    Enumerated<Permutation> const& group() const noexcept {
      return _lattice->action.group;
    }
    FiniteMonoid const& group_table() const noexcept {
      return *_lattice->action.group.monoid;
    }

    StabilizerPair stabilizers(index_t a) const;

    SGLElement canonical(index_t g, index_t a) const {
      return {a, _canon[a * group().size() + g]};
    }
    // The defining equality predicate, evaluated directly (no canonical
    // forms): a == b and g^-1 h fixes every c <= a.
    bool same_element(index_t g, index_t a, index_t h, index_t b) const;

    SGLElement multiply(SGLElement x, SGLElement y) const;
    SGLElement inverse(SGLElement x) const;
    SGLElement identity() const;

    std::string label(SGLElement x) const;

    // Closure of {units} u {id_a}; throws CapExceeded.
    Enumerated<SGLElement> enumerate(std::size_t cap = kDefaultElementCap) const;
    // Index formula next to the enumerated order; throws
    // VerificationFailure when they disagree.
    OrderReport order() const;

    QuotientGroup maximal_subgroup_at(index_t a) const;

   private:
    std::shared_ptr<LatticeInstance const> _lattice;
    std::vector<std::vector<index_t>>      _pointwise;
    std::vector<index_t>                   _canon;
    std::vector<index_t>                   _group_inverse;
  };

  // The value sum_{Lambda in Pi(n)} [S_n : S_{l_1} x ... x S_{l_p}] that a
  // Young-subgroup description of the uniform block permutation monoid
  // predicts for its order.
  std::size_t young_index_sum(LatticeInstance const& set_partitions);

}  // namespace munn
