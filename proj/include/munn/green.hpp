#pragma once

// Green's relations of an enumerated finite monoid.
//
// s L t when Ss = St, s R t when sS = tS, s J t when SsS = StS, and
// H = L meet R. Classes of each relation are numbered by least member, so
// the numbering only depends on the canonical element order.

#include <cstddef>
#include <string>
#include <vector>

#include "munn/kernels.hpp"
#include "munn/monoid.hpp"

namespace munn {

  struct Partition {
    std::vector<index_t>              of;       // class index per element
    std::vector<std::vector<index_t>> members;  // sorted members per class

    std::size_t count() const noexcept {
      return members.size();
    }
  };

  class GreenStructure {
   public:
    explicit GreenStructure(MonoidPtr monoid);

    FiniteMonoid const& monoid() const noexcept {
      return *_monoid;
    }
    MonoidPtr monoid_ptr() const noexcept {
      return _monoid;
    }

    Partition const& L() const noexcept {
      return _l;
    }
    Partition const& R() const noexcept {
      return _r;
    }
    Partition const& H() const noexcept {
      return _h;
    }
    Partition const& J() const noexcept {
      return _j;
    }

    // J_i <= J_k, i.e. S x S is contained in S y S for x in J_i, y in J_k.
    bool j_leq(index_t i, index_t k) const {
      return _jleq[i * _j.count() + k] != 0;
    }
    // Covering pairs (lower, upper) of the J-order.
    std::vector<std::pair<index_t, index_t>> j_hasse() const;

    std::vector<index_t> idempotents_in(index_t jclass) const;
    // The least idempotent of a J-class; throws if it has none.
    index_t least_idempotent(index_t jclass) const;

    bool is_regular() const;

    kernels::PrincipalIdeals const& ideals() const noexcept {
      return _ideals;
    }

   private:
    MonoidPtr                _monoid;
    kernels::PrincipalIdeals _ideals;
    Partition                _l, _r, _h, _j;
    std::vector<char>        _jleq;
  };

  struct Eggbox {
    index_t                           jclass;
    std::vector<index_t>              rows;        // R-class indices
    std::vector<index_t>              cols;        // L-class indices
    std::vector<index_t>              cells;       // H-class, row-major
    std::vector<char>                 idempotent;  // per cell

    index_t cell(std::size_t r, std::size_t c) const {
      return cells[r * cols.size() + c];
    }
    bool is_idempotent(std::size_t r, std::size_t c) const {
      return idempotent[r * cols.size() + c] != 0;
    }
  };

  // Rows and columns ordered by least member. Throws VerificationFailure
  // if some row and column fail to meet.
  Eggbox eggbox(GreenStructure const& green, index_t jclass);

  struct Subgroup {
    index_t              idempotent;
    std::vector<index_t> members;  // sorted element indices of H_e
    MonoidPtr            group;    // multiplication on positions in members

    index_t local(index_t x) const;
    index_t global(index_t g) const {
      return members[g];
    }
  };

  // H_e as a group with identity e; inverses are checked.
  Subgroup maximal_subgroup(GreenStructure const& green, index_t e);

  struct Transversal {
    index_t              e;
    std::vector<index_t> reps;      // s_i
    std::vector<index_t> hclasses;  // H-class of s_i, sorted

    std::size_t size() const noexcept {
      return reps.size();
    }
    // Position of the representative of the given H-class.
    std::size_t position(index_t hclass) const;
  };

  enum class TransversalPick { least, greatest };

  // One representative per H-class of L_e, with e representing H_e. The
  // default picks the least element of each other H-class.
  Transversal transversal(GreenStructure const& green,
                          index_t               e,
                          TransversalPick       pick = TransversalPick::least);

  struct Decomposition {
    std::size_t i;  // position in the transversal
    index_t     g;  // element of G_e (global index)
  };

  // t = s_i g with g in G_e; the pair is unique and that is checked.
  // Throws std::invalid_argument when t is not in L_e.
  Decomposition hclass_decompose(GreenStructure const& green,
                                 Transversal const&    trans,
                                 index_t               t);

  struct GroupIso {
    index_t              e, f, s, s_star;
    std::vector<index_t> forward;  // g in G_e (global) -> s g s* in G_f
  };

  // g -> s g s* from G_e to G_f, for s in L_e meet R_f; checked to be a
  // bijective homomorphism with inverse h -> s* h s.
  GroupIso jclass_subgroup_iso(GreenStructure const& green,
                               index_t               e,
                               index_t               f,
                               index_t               s);

}  // namespace munn
