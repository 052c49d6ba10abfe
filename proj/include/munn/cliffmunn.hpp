#pragma once

// Reduction to maximal subgroups, apexes, induction from maximal
// subgroups, semisimplicity certificates, decomposition into irreducibles
// and the Clifford-Munn catalogs of irreducible representations.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "munn/green.hpp"
#include "munn/lattice.hpp"
#include "munn/representation.hpp"
#include "munn/specht.hpp"

namespace munn {

  struct ReducedRep {
    index_t                       e;
    Subgroup                      subgroup;  // G_e
    Subspace                      carrier;   // eV, the column space of phi(e)
    std::optional<Representation> rep;       // empty when eV = 0
  };

  // G_e acting on eV in the coordinates of the carrier's echelon basis.
  // Throws std::invalid_argument when e is not idempotent.
  ReducedRep reduce(GreenStructure const& green, Representation const& v, index_t e);

  struct Support {
    std::vector<index_t>   jclasses;  // regular classes J with eV != 0, e in J
    std::optional<index_t> least;     // the apex, when the support is an
                                      // upward-closed set with a least class
  };

  // The membership test is run on every idempotent of each class and the
  // answers are checked to agree.
  Support support(GreenStructure const& green, Representation const& v);
  // Throws std::invalid_argument when the support has no least class or
  // is not upward closed, which means v was not irreducible.
  index_t apex(GreenStructure const& green, Representation const& v);

  struct InducedRaw {
    index_t        e;
    Transversal    trans;
    std::size_t    block_dim;  // dim V
    Representation rep;        // on |T| blocks of size dim V
  };

  // U = sum of copies s_i (x) V over a transversal of the H-classes in
  // L_e, with t . (s_i (x) v) = s_j (x) g v when t s_i = s_j g, else 0.
  // `v` must be a representation of maximal_subgroup(green, e).group.
  InducedRaw induce_raw(GreenStructure const& green,
                        Representation const& v,
                        index_t               e,
                        TransversalPick       pick = TransversalPick::least);

  // Vectors killed by every element of R_e.
  Subspace annihilator(GreenStructure const& green, InducedRaw const& u);

  // U / Ann_e(U).
  Representation induce(GreenStructure const& green,
                        Representation const& v,
                        index_t               e,
                        TransversalPick       pick = TransversalPick::least);

  // Induction in S(G,L) directly from the lattice: basis d (x) v for d in
  // the orbit of a, in increasing lattice order, with representative beta_d
  // the least group element carrying a to d. g_c sends d (x) v to
  // (g.d) (x) h v when d <= c, where h = beta_{g.d}^-1 g beta_d, and to 0
  // otherwise. `v` is a representation of the maximal subgroup at id_a.
  Representation induce_sgl(SGLMonoid const&              sgl,
                            Enumerated<SGLElement> const& elements,
                            GreenStructure const&         green,
                            Representation const&         v,
                            index_t                       a);

  enum class Semisimplicity { semisimple, not_semisimple, unknown };

  struct SemisimplicityVerdict {
    Semisimplicity                       status;
    std::string                          reason;
    std::optional<SemisimpleCertificate> certificate;
  };

  // Groups: Maschke. Inverse monoids: Munn-Oganesyan over the maximal
  // subgroups. Anything else: unknown.
  class SemisimplicityTest {
   public:
    // `characteristic` is 0 or a prime.
    static SemisimplicityVerdict run(GreenStructure const& green,
                                     unsigned              characteristic = 0);
  };

  bool is_inverse_monoid(GreenStructure const& green);

  enum class SeedOrder { forward, reverse };

  // Irreducible factors of a representation of a certified semisimple
  // monoid, split by invariant subspaces with equivariant projections as
  // complements. Throws VerificationFailure if a reducible piece cannot be
  // split, which contradicts the certificate.
  std::vector<Representation> decompose(Representation const&        v,
                                        SemisimpleCertificate const& cert,
                                        SeedOrder order = SeedOrder::forward);

  // Characters sorted lexicographically, for comparing decompositions.
  std::vector<Character> character_multiset(std::vector<Representation> const& parts);

  // Points moved by maximal subgroups: for an idempotent e the ordered
  // blocks of points G_e permutes, and the image of a point under an
  // element of G_e.
  struct PointAction {
    std::function<std::optional<Blocks>(index_t e)> blocks;
    std::function<point_t(index_t s, point_t x)>    apply;
  };

  PointAction point_action(std::shared_ptr<Enumerated<PartialBijection> const> in);
  PointAction point_action(std::shared_ptr<SGLMonoid const>              sgl,
                           std::shared_ptr<Enumerated<SGLElement> const> elements);
  // G_e permutes the image of e. Usable for induction, not for catalogs.
  PointAction point_action(std::shared_ptr<Enumerated<Transformation> const> tn);

  // G_e matched to S_{|B_1|} x ... x S_{|B_p|} through its action on the
  // blocks. Throws Unsupported when there is no block model or G_e is
  // smaller than the Young subgroup, and VerificationFailure when the map
  // is not an isomorphism.
  struct YoungIdentification {
    Subgroup             subgroup;
    Blocks               blocks;
    std::vector<index_t> to_product;  // local index in G_e -> product index
    MonoidPtr            product;
  };

  YoungIdentification identify_young(GreenStructure const& green,
                                     PointAction const&    points,
                                     index_t               e);

  // young_tensor of the given partitions pulled back to G_e.
  Representation young_irrep(YoungIdentification const&           id,
                             std::vector<IntegerPartition> const& parts);

  // "(2,1)", "(2)x(1)", or "()" for the trivial group.
  std::string young_label(std::vector<IntegerPartition> const& parts);

  struct CatalogEntry {
    index_t                       apex;
    index_t                       idempotent;
    std::vector<IntegerPartition> parts;
    std::string                   label;
    Representation                group_rep;  // irreducible of G_e
    Representation                rep;        // induced to the monoid

    std::size_t dim() const noexcept {
      return rep.dim();
    }
  };

  // One entry per J-class and irreducible of its maximal subgroup, at the
  // least idempotent of the class; sorted by apex class, then by the order
  // the partitions are listed in. Throws Unsupported for monoids that are
  // not inverse or whose subgroups have no block model.
  std::vector<CatalogEntry> cm_catalog(GreenStructure const& green,
                                       PointAction const&    points);

  std::size_t sum_of_squares(std::vector<CatalogEntry> const& catalog);

  struct RoundTrip {
    bool reduce_of_induce;  // (V up S) down G_e iso V
    bool induce_of_reduce;  // (W down G_e) up S iso W
  };

  RoundTrip cm_roundtrip_check(GreenStructure const& green, CatalogEntry const& entry);

  struct RennerCatalog {
    std::shared_ptr<SGLMonoid const>              sgl;
    std::shared_ptr<Enumerated<SGLElement> const> elements;
    std::shared_ptr<GreenStructure const>         green;
    std::vector<std::string>                      jclass_names;  // composition or "0"
    std::vector<std::pair<index_t, index_t>>      hasse;
    // The J-order matches compositions ordered by merging adjacent parts,
    // with the zero class at the bottom.
    bool                                          poset_matches = false;
    std::vector<CatalogEntry>                     catalog;
  };

  inline constexpr std::size_t kMaxRennerDegree = 4;

  // S(S_n, ordered partitions with zero) and its catalog, n <= 4. The
  // catalog is left empty when `with_catalog` is false.
  RennerCatalog renner_permutohedron_catalog(std::size_t n, bool with_catalog = true);

}  // namespace munn
