#pragma once

// Linear representations of enumerated finite monoids over the rationals.
//
// A Representation stores one matrix per monoid element, indexed like the
// monoid, and is checked to be multiplicative when it is built.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "munn/linalg.hpp"
#include "munn/monoid.hpp"

namespace munn {

  class Representation {
   public:
    // Checks phi(1) = I and phi(x g) = phi(x) phi(g) for every element x
    // and generator g, which is equivalent to multiplicativity on all
    // pairs because the generators generate. Throws VerificationFailure.
    Representation(MonoidPtr monoid, std::size_t dim, std::vector<Matrix> matrices);

    // Extends images of the monoid's generators along the right Cayley
    // graph, then checks as above.
    static Representation from_generators(MonoidPtr                  monoid,
                                          std::size_t                dim,
                                          std::vector<Matrix> const& generator_images);

    static Representation trivial(MonoidPtr monoid);

    FiniteMonoid const& monoid() const noexcept {
      return *_monoid;
    }
    MonoidPtr monoid_ptr() const noexcept {
      return _monoid;
    }
    std::size_t dim() const noexcept {
      return _dim;
    }
    Matrix const& operator()(index_t x) const {
      return _matrices[x];
    }
    std::vector<Matrix> const& matrices() const noexcept {
      return _matrices;
    }

    // All |S|^2 products, through the parallel kernel. Throws
    // VerificationFailure naming the first failing pair.
    void verify_all_pairs() const;

   private:
    MonoidPtr           _monoid;
    std::size_t         _dim;
    std::vector<Matrix> _matrices;
  };

  using Character = std::vector<Rational>;

  Character character(Representation const& rep);
  bool      char_equal(Character const& a, Character const& b);

  // Throws std::invalid_argument unless both live over the same monoid.
  void require_same_monoid(Representation const& a, Representation const& b);

  // The least invariant subspace containing the seeds.
  Subspace spin(Representation const& rep, std::vector<Vector> const& seeds);
  bool     is_invariant(Representation const& rep, Subspace const& u);

  // The action on an invariant subspace in the coordinates of its
  // canonical basis. Throws std::invalid_argument for a non-invariant or
  // zero subspace.
  Representation restrict_to(Representation const& rep, Subspace const& u);

  // The action on V/U in the basis given by the standard vectors at the
  // non-pivot columns of U. Throws std::invalid_argument when U is not
  // invariant or U = V.
  Representation quotient(Representation const& rep, Subspace const& u);

  Representation direct_sum(Representation const& a, Representation const& b);

  // dim of {X : X phi(s) = phi(s) X for all s}.
  std::size_t commutant_dim(Representation const& rep);

  // A basis of {X : X phi_V(s) = phi_U(s) X for all s}; each X is
  // dim U x dim V.
  std::vector<Matrix> intertwiner_space(Representation const& v,
                                        Representation const& u);

  // Joint eigenspaces of the generators for every admissible eigenvalue
  // tuple: {0,1} on idempotents, {-1,1} on units, {-1,0,1} otherwise. A
  // line is invariant iff it lies in one of these, so the list is complete.
  std::vector<Subspace> one_dim_invariant_lines(Representation const& rep);

  // Issued only by the semisimplicity predicate for a monoid that passes
  // Maschke's or the Munn-Oganesyan criterion.
  class SemisimpleCertificate {
   public:
    FiniteMonoid const& monoid() const noexcept {
      return *_monoid;
    }
    std::string const& reason() const noexcept {
      return _reason;
    }
    bool covers(FiniteMonoid const& m) const {
      return _monoid->same_structure(m);
    }

   private:
    SemisimpleCertificate(MonoidPtr monoid, std::string reason)
        : _monoid(std::move(monoid)), _reason(std::move(reason)) {}
    MonoidPtr   _monoid;
    std::string _reason;

    friend class SemisimplicityTest;
  };

  enum class Verdict { yes, no, undetermined };

  struct IrreducibilityResult {
    Verdict                 verdict;
    std::optional<Subspace> witness;  // a proper non-zero invariant subspace
  };

  // The seed family used by the search: all standard basis vectors and
  // the kernel vectors of phi(s) - c I for c in {-1,0,1} and every s.
  std::vector<Vector> search_seeds(Representation const& rep);

  // A proper non-zero invariant subspace found by the invariant-line
  // search or by spinning the seed family, if any.
  std::optional<Subspace> find_invariant_subspace(Representation const& rep);

  // Search mode: yes only for dimension 1, no with a witness, otherwise
  // undetermined.
  IrreducibilityResult is_irreducible(Representation const& rep);
  // Semisimple mode: yes iff the commutant is one-dimensional. Throws
  // std::invalid_argument when the certificate is for another monoid.
  IrreducibilityResult is_irreducible(Representation const&        rep,
                                      SemisimpleCertificate const& cert);

  struct IsoResult {
    Verdict               verdict;
    std::optional<Matrix> witness;  // invertible X with X phi_V = phi_U X
  };

  // Dimensions and characters first, then an invertible small-integer
  // combination of a Hom-space basis. With a certificate, equal characters
  // decide the question.
  IsoResult iso_test(Representation const&        v,
                     Representation const&        u,
                     SemisimpleCertificate const* cert = nullptr);

  // p-th exterior power on the lexicographically ordered p-subsets of the
  // basis; entries are p x p minors.
  Representation exterior_power(Representation const& rep, std::size_t p);

  // Representation of the direct product monoid on V (x) U.
  Representation outer_tensor(Representation const& v, Representation const& u);

  // s . v_i = v_{s(i)}, with v_{s(i)} read as 0 when i is outside dom s.
  Representation mapping_rep(Enumerated<Permutation> const& sn);
  Representation mapping_rep(Enumerated<PartialBijection> const& in);
  Representation mapping_rep(Enumerated<Transformation> const& tn);

}  // namespace munn
