#include "munn/cliffmunn.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>

#include "munn/kernels.hpp"

namespace munn {

  namespace {
    void require_over(GreenStructure const& green, Representation const& v) {
      if (!v.monoid().same_structure(green.monoid())) {
        throw std::invalid_argument("representation is over a different monoid");
      }
    }

    void require_idempotent(GreenStructure const& green, index_t e) {
      if (e >= green.monoid().size() || !green.monoid().is_idempotent(e)) {
        throw std::invalid_argument("element " + std::to_string(e)
                                    + " is not an idempotent");
      }
    }

    void require_over_subgroup(Subgroup const& sub, Representation const& v) {
      if (!v.monoid().same_structure(*sub.group)) {
        throw std::invalid_argument("representation is not over the maximal "
                                    "subgroup at the idempotent");
      }
    }

    void set_block(Matrix& m, std::size_t bi, std::size_t bj, Matrix const& b) {
      std::size_t const d = b.rows();
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          m(bi * d + r, bj * d + c) = b(r, c);
        }
      }
    }

    bool is_prime(unsigned p) {
      if (p < 2) {
        return false;
      }
      for (unsigned q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
          return false;
        }
      }
      return true;
    }

    bool is_scalar(Matrix const& x) {
      for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
          if (i != j && sgn(x(i, j)) != 0) {
            return false;
          }
          if (i == j && x(i, i) != x(0, 0)) {
            return false;
          }
        }
      }
      return true;
    }

    bool proper(Subspace const& u) {
      return u.dim() > 0 && u.dim() < u.ambient();
    }

    std::optional<Subspace> find_split(Representation const&      v,
                                       std::vector<Matrix> const& commutant,
                                       SeedOrder                  order) {
      auto lines = one_dim_invariant_lines(v);
      if (order == SeedOrder::reverse) {
        std::reverse(lines.begin(), lines.end());
      }
      for (auto const& l : lines) {
        if (proper(l)) {
          return l;
        }
      }
      auto seeds = search_seeds(v);
      if (order == SeedOrder::reverse) {
        std::reverse(seeds.begin(), seeds.end());
      }
      for (auto const& s : seeds) {
        auto u = spin(v, {s});
        if (proper(u)) {
          return u;
        }
      }
      // Images and eigenspaces of commuting maps are invariant.
      std::size_t const d = v.dim();
      for (std::size_t k = 0; k < commutant.size(); ++k) {
        auto const& x = commutant[order == SeedOrder::forward ? k : commutant.size() - 1 - k];
        if (is_scalar(x)) {
          continue;
        }
        auto im = column_space(x);
        if (proper(im)) {
          return im;
        }
        for (int c = -2; c <= 2; ++c) {
          auto ker = kernel(x - Rational(c) * Matrix::identity(d));
          if (proper(ker)) {
            return ker;
          }
        }
      }
      return std::nullopt;
    }

    // An element p of the commutant with p = id on U and im p inside U.
    std::optional<Matrix> equivariant_projection(std::vector<Matrix> const& commutant,
                                                 Subspace const&            u) {
      std::size_t const   d = u.ambient();
      std::size_t const   k = commutant.size();
      std::vector<Vector> rows;
      for (auto const& b : u.basis()) {
        std::vector<Vector> images;
        for (auto const& x : commutant) {
          images.push_back(x * b);
        }
        for (std::size_t r = 0; r < d; ++r) {
          Vector row(k + 1);
          for (std::size_t c = 0; c < k; ++c) {
            row[c] = images[c][r];
          }
          row[k] = -b[r];
          rows.push_back(std::move(row));
        }
      }
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<Vector> residues;
        for (auto const& x : commutant) {
          residues.push_back(u.reduce(x.column(i)));
        }
        for (std::size_t r = 0; r < d; ++r) {
          Vector row(k + 1);
          for (std::size_t c = 0; c < k; ++c) {
            row[c] = residues[c][r];
          }
          rows.push_back(std::move(row));
        }
      }
      auto const solutions = kernel(Matrix::from_rows(rows, k + 1));
      for (auto const& s : solutions.basis()) {
        if (sgn(s[k]) == 0) {
          continue;
        }
        Matrix p(d, d);
        for (std::size_t c = 0; c < k; ++c) {
          p = p + Rational(s[c] / s[k]) * commutant[c];
        }
        return p;
      }
      return std::nullopt;
    }

    void split(Representation const&        v,
               SeedOrder                    order,
               std::vector<Representation>& out) {
      if (v.dim() == 1) {
        out.push_back(v);
        return;
      }
      auto const commutant = intertwiner_space(v, v);
      if (commutant.size() == 1) {
        // Semisimple with End = Q, hence simple.
        out.push_back(v);
        return;
      }
      auto const u = find_split(v, commutant, order);
      if (!u) {
        throw VerificationFailure("decompose: no invariant subspace found in a "
                                  "representation with commutant of dimension "
                                  + std::to_string(commutant.size()));
      }
      auto const p = equivariant_projection(commutant, *u);
      if (!p) {
        throw VerificationFailure("decompose: invariant subspace has no "
                                  "invariant complement");
      }
      auto const w = kernel(*p);
      if (w.dim() + u->dim() != v.dim()) {
        throw VerificationFailure("decompose: projection has the wrong rank");
      }
      split(restrict_to(v, *u), order, out);
      split(restrict_to(v, w), order, out);
    }

    std::size_t position_in(std::vector<point_t> const& block, point_t x) {
      auto it = std::lower_bound(block.begin(), block.end(), x);
      if (it == block.end() || *it != x) {
        throw VerificationFailure("maximal subgroup moves point "
                                  + std::to_string(x + 1) + " out of its block");
      }
      return static_cast<std::size_t>(it - block.begin());
    }

  }  // namespace

  ReducedRep reduce(GreenStructure const& green, Representation const& v, index_t e) {
    require_over(green, v);
    require_idempotent(green, e);
    auto       sub     = maximal_subgroup(green, e);
    auto       carrier = column_space(v(e));
    ReducedRep out{e, sub, carrier, std::nullopt};
    if (carrier.dim() == 0) {
      return out;
    }
    std::size_t const   k = carrier.dim();
    std::vector<Matrix> mats;
    mats.reserve(sub.members.size());
    for (auto g : sub.members) {
      Matrix const& m = v(g);
      Matrix        r(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        auto c = carrier.coordinates(m * carrier.basis()[j]);
        for (std::size_t i = 0; i < k; ++i) {
          r(i, j) = c[i];
        }
      }
      mats.push_back(std::move(r));
    }
    out.rep.emplace(sub.group, k, std::move(mats));
    return out;
  }

  Support support(GreenStructure const& green, Representation const& v) {
    require_over(green, v);
    Support              out;
    std::vector<index_t> regular;
    for (index_t j = 0; j < green.J().count(); ++j) {
      auto const idem = green.idempotents_in(j);
      if (idem.empty()) {
        continue;
      }
      regular.push_back(j);
      bool const nonzero = !v(idem.front()).is_zero();
      for (auto f : idem) {
        if (v(f).is_zero() == nonzero) {
          throw VerificationFailure("idempotents of one J-class disagree on "
                                    "whether they kill the representation");
        }
      }
      if (nonzero) {
        out.jclasses.push_back(j);
      }
    }
    for (auto c : out.jclasses) {
      bool const below_all = std::all_of(out.jclasses.begin(),
                                         out.jclasses.end(),
                                         [&](index_t k) { return green.j_leq(c, k); });
      if (!below_all) {
        continue;
      }
      bool const upward = std::all_of(regular.begin(), regular.end(), [&](index_t k) {
        return !green.j_leq(c, k)
               || std::binary_search(out.jclasses.begin(), out.jclasses.end(), k);
      });
      if (upward) {
        out.least = c;
      }
      break;
    }
    return out;
  }

  index_t apex(GreenStructure const& green, Representation const& v) {
    auto const s = support(green, v);
    if (!s.least) {
      throw std::invalid_argument("support is not an upward-closed interval with a "
                                  "least J-class; the representation is not "
                                  "irreducible");
    }
    return *s.least;
  }

  InducedRaw induce_raw(GreenStructure const& green,
                        Representation const& v,
                        index_t               e,
                        TransversalPick       pick) {
    require_idempotent(green, e);
    auto const sub = maximal_subgroup(green, e);
    require_over_subgroup(sub, v);
    auto              trans = transversal(green, e, pick);
    std::size_t const d     = v.dim();
    std::size_t const k     = trans.size();
    auto const&       m     = green.monoid();
    index_t const     le    = green.L().of[e];

    std::vector<Matrix> mats;
    mats.reserve(m.size());
    for (index_t t = 0; t < m.size(); ++t) {
      Matrix u(k * d, k * d);
      for (std::size_t i = 0; i < k; ++i) {
        index_t const ts = m.multiply(t, trans.reps[i]);
        if (green.L().of[ts] != le) {
          continue;
        }
        auto const dec = hclass_decompose(green, trans, ts);
        set_block(u, dec.i, i, v(sub.local(dec.g)));
      }
      mats.push_back(std::move(u));
    }
    Representation rep(green.monoid_ptr(), k * d, std::move(mats));
    return InducedRaw{e, std::move(trans), d, std::move(rep)};
  }

  Subspace annihilator(GreenStructure const& green, InducedRaw const& u) {
    std::size_t const   n = u.rep.dim();
    std::vector<Vector> rows;
    for (auto s : green.R().members[green.R().of[u.e]]) {
      Matrix const& m = u.rep(s);
      for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(m.row(i));
      }
    }
    return kernel(Matrix::from_rows(rows, n));
  }

  Representation induce(GreenStructure const& green,
                        Representation const& v,
                        index_t               e,
                        TransversalPick       pick) {
    auto raw = induce_raw(green, v, e, pick);
    auto ann = annihilator(green, raw);
    if (ann.dim() == 0) {
      return std::move(raw.rep);
    }
    return quotient(raw.rep, ann);
  }

  Representation induce_sgl(SGLMonoid const&              sgl,
                            Enumerated<SGLElement> const& elements,
                            GreenStructure const&         green,
                            Representation const&         v,
                            index_t                       a) {
    if (!elements.monoid->same_structure(green.monoid())) {
      throw std::invalid_argument("induce_sgl: Green structure of another monoid");
    }
    auto const&   lat    = sgl.lattice();
    auto const&   gtab   = sgl.group_table();
    index_t const gid    = gtab.identity();
    index_t const e      = elements.index_of(sgl.canonical(gid, a));
    auto const    sub    = maximal_subgroup(green, e);
    require_over_subgroup(sub, v);

    std::size_t const    gsize = sgl.group().size();
    std::vector<index_t> ginv(gsize);
    for (index_t g = 0; g < gsize; ++g) {
      for (index_t h = 0; h < gsize; ++h) {
        if (gtab.multiply(g, h) == gid) {
          ginv[g] = h;
          break;
        }
      }
    }

    std::map<index_t, index_t> beta;  // orbit point -> least group element
    for (index_t g = 0; g < gsize; ++g) {
      beta.try_emplace(lat.action.act(g, a), g);
    }
    std::vector<index_t>       orbit;
    std::map<index_t, std::size_t> pos;
    for (auto const& [d, b] : beta) {
      pos[d] = orbit.size();
      orbit.push_back(d);
    }

    std::size_t const   dim = v.dim();
    std::size_t const   k   = orbit.size();
    std::vector<Matrix> mats;
    mats.reserve(elements.size());
    for (auto const& x : elements.elements) {
      Matrix u(k * dim, k * dim);
      for (std::size_t i = 0; i < k; ++i) {
        index_t const d = orbit[i];
        if (!lat.lattice.leq(d, x.a)) {
          continue;
        }
        index_t const d2 = lat.action.act(x.g, d);
        index_t const h  = gtab.multiply(ginv[beta.at(d2)], gtab.multiply(x.g, beta.at(d)));
        index_t const hg = elements.index_of(sgl.canonical(h, a));
        set_block(u, pos.at(d2), i, v(sub.local(hg)));
      }
      mats.push_back(std::move(u));
    }
    return Representation(elements.monoid, k * dim, std::move(mats));
  }

  bool is_inverse_monoid(GreenStructure const& green) {
    auto const& m      = green.monoid();
    auto const  counts = kernels::count_inverses(m.table(), m.size());
    return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 1; });
  }

  SemisimplicityVerdict SemisimplicityTest::run(GreenStructure const& green,
                                                unsigned              characteristic) {
    if (characteristic != 0 && !is_prime(characteristic)) {
      throw std::invalid_argument("characteristic must be 0 or a prime, got "
                                  + std::to_string(characteristic));
    }
    auto const        p = characteristic;
    std::size_t const n = green.monoid().size();
    auto              issue = [&](std::string reason) {
      SemisimplicityVerdict out{Semisimplicity::semisimple, reason, std::nullopt};
      if (p == 0) {
        out.certificate = SemisimpleCertificate(green.monoid_ptr(), std::move(reason));
      }
      return out;
    };

    if (green.J().count() == 1) {
      if (p != 0 && n % p == 0) {
        return {Semisimplicity::not_semisimple,
                "group of order " + std::to_string(n) + " divisible by "
                    + std::to_string(p),
                std::nullopt};
      }
      return issue("Maschke: group of order " + std::to_string(n));
    }
    if (!is_inverse_monoid(green)) {
      return {Semisimplicity::unknown,
              "not a group or an inverse monoid; no criterion applies",
              std::nullopt};
    }
    std::set<std::size_t> orders;
    for (index_t j = 0; j < green.J().count(); ++j) {
      auto const e = green.least_idempotent(j);
      orders.insert(green.H().members[green.H().of[e]].size());
    }
    for (auto o : orders) {
      if (p != 0 && o % p == 0) {
        return {Semisimplicity::not_semisimple,
                "inverse monoid with a maximal subgroup of order "
                    + std::to_string(o) + " divisible by " + std::to_string(p),
                std::nullopt};
      }
    }
    std::string list;
    for (auto o : orders) {
      list += (list.empty() ? "" : ",") + std::to_string(o);
    }
    return issue("Munn-Oganesyan: inverse monoid, maximal subgroup orders {"
                 + list + "}");
  }

  std::vector<Representation> decompose(Representation const&        v,
                                        SemisimpleCertificate const& cert,
                                        SeedOrder                    order) {
    if (!cert.covers(v.monoid())) {
      throw std::invalid_argument("decompose: certificate is for another monoid");
    }
    std::vector<Representation> out;
    split(v, order, out);
    return out;
  }

  std::vector<Character> character_multiset(std::vector<Representation> const& parts) {
    std::vector<Character> out;
    for (auto const& p : parts) {
      out.push_back(character(p));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  PointAction point_action(std::shared_ptr<Enumerated<PartialBijection> const> in) {
    return PointAction{
        [in](index_t e) -> std::optional<Blocks> {
          auto dom = (*in)[e].domain();
          if (dom.empty()) {
            return Blocks{};
          }
          return Blocks{dom};
        },
        [in](index_t s, point_t x) { return (*in)[s](x); }};
  }

  PointAction point_action(std::shared_ptr<SGLMonoid const>              sgl,
                           std::shared_ptr<Enumerated<SGLElement> const> elements) {
    return PointAction{
        [sgl, elements](index_t e) { return sgl->lattice().point_blocks((*elements)[e].a); },
        [sgl, elements](index_t s, point_t x) {
          return sgl->group()[(*elements)[s].g](x);
        }};
  }

  PointAction point_action(std::shared_ptr<Enumerated<Transformation> const> tn) {
    return PointAction{[tn](index_t e) -> std::optional<Blocks> {
                         return Blocks{(*tn)[e].image()};
                       },
                       [tn](index_t s, point_t x) { return (*tn)[s](x); }};
  }

  YoungIdentification identify_young(GreenStructure const& green,
                                     PointAction const&    points,
                                     index_t               e) {
    require_idempotent(green, e);
    auto blocks = points.blocks(e);
    if (!blocks) {
      throw Unsupported("the maximal subgroup at " + green.monoid().label(e)
                        + " has no model as a product of symmetric groups");
    }
    for (auto& b : *blocks) {
      std::sort(b.begin(), b.end());
    }
    auto sub = maximal_subgroup(green, e);

    std::vector<Enumerated<Permutation>> syms;
    std::vector<MonoidPtr>               factors;
    for (auto const& b : *blocks) {
      syms.push_back(symmetric_group(b.size()));
      factors.push_back(syms.back().monoid);
    }
    auto product = direct_product(factors);

    std::size_t const    order = sub.members.size();
    std::vector<index_t> to_product(order);
    for (index_t g = 0; g < order; ++g) {
      std::vector<index_t> coords;
      for (std::size_t i = 0; i < blocks->size(); ++i) {
        auto const&          b = (*blocks)[i];
        std::vector<point_t> images;
        for (auto x : b) {
          images.push_back(static_cast<point_t>(
              position_in(b, points.apply(sub.global(g), x))));
        }
        coords.push_back(syms[i].index_of(Permutation(images)));
      }
      to_product[g] = product_index(factors, coords);
    }

    auto sorted = to_product;
    std::sort(sorted.begin(), sorted.end());
    if (order != product->size()) {
      throw Unsupported("maximal subgroup of order " + std::to_string(order)
                        + " is a proper subgroup of the symmetric groups on its "
                          "blocks");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw VerificationFailure("block action of the maximal subgroup is not "
                                "faithful");
    }
    auto const& g_table = *sub.group;
    for (index_t x = 0; x < order; ++x) {
      for (index_t y = 0; y < order; ++y) {
        if (to_product[g_table.multiply(x, y)]
            != product->multiply(to_product[x], to_product[y])) {
          throw VerificationFailure("block action of the maximal subgroup is not "
                                    "a homomorphism");
        }
      }
    }
    return YoungIdentification{std::move(sub), std::move(*blocks),
                               std::move(to_product), std::move(product)};
  }

  Representation young_irrep(YoungIdentification const&           id,
                             std::vector<IntegerPartition> const& parts) {
    if (parts.size() != id.blocks.size()) {
      throw std::invalid_argument("young_irrep: need one partition per block");
    }
    std::vector<YoungFactor> factors;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      factors.push_back({parts[i], id.blocks[i]});
    }
    auto const y = young_tensor(factors);
    if (!y.monoid().same_structure(*id.product)) {
      throw VerificationFailure("young_irrep: product group mismatch");
    }
    std::vector<Matrix> mats;
    mats.reserve(id.to_product.size());
    for (auto p : id.to_product) {
      mats.push_back(y(p));
    }
    return Representation(id.subgroup.group, y.dim(), std::move(mats));
  }

  std::string young_label(std::vector<IntegerPartition> const& parts) {
    if (parts.empty()) {
      return "()";
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i == 0 ? "" : "x") + partition_format(parts[i]);
    }
    return out;
  }

  std::vector<CatalogEntry> cm_catalog(GreenStructure const& green,
                                       PointAction const&    points) {
    if (!is_inverse_monoid(green)) {
      throw Unsupported("irreducible catalogs need an inverse monoid");
    }
    struct Job {
      index_t                       jclass;
      std::size_t                   group;
      std::vector<IntegerPartition> parts;
    };
    std::vector<YoungIdentification> ids;
    std::vector<Job>                 jobs;
    for (index_t j = 0; j < green.J().count(); ++j) {
      ids.push_back(identify_young(green, points, green.least_idempotent(j)));
      std::vector<std::size_t> sizes;
      for (auto const& b : ids.back().blocks) {
        sizes.push_back(b.size());
      }
      for (auto& t : partition_tuples(sizes)) {
        jobs.push_back({j, ids.size() - 1, std::move(t)});
      }
    }

    std::vector<std::optional<CatalogEntry>> slots(jobs.size());
    std::exception_ptr                       failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      try {
        auto const&   job = jobs[i];
        auto const&   id  = ids[job.group];
        index_t const e   = id.subgroup.idempotent;
        auto          v   = young_irrep(id, job.parts);
        auto          rep = induce(green, v, e);
        if (apex(green, rep) != job.jclass) {
          throw VerificationFailure("induced representation has the wrong apex");
        }
        if (commutant_dim(rep) != 1) {
          throw VerificationFailure("induced representation has a commutant of "
                                    "dimension above 1");
        }
        slots[i].emplace(CatalogEntry{job.jclass, e, job.parts, young_label(job.parts),
                                      std::move(v), std::move(rep)});
      } catch (...) {
#pragma omp critical(munn_catalog_failure)
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }

    std::vector<CatalogEntry> out;
    std::set<Character>       seen;
    for (auto& s : slots) {
      if (!seen.insert(character(s->rep)).second) {
        throw VerificationFailure("two catalog entries share a character");
      }
      out.push_back(std::move(*s));
    }
    return out;
  }

  std::size_t sum_of_squares(std::vector<CatalogEntry> const& catalog) {
    std::size_t s = 0;
    for (auto const& c : catalog) {
      s += c.dim() * c.dim();
    }
    return s;
  }

  RoundTrip cm_roundtrip_check(GreenStructure const& green, CatalogEntry const& entry) {
    auto const verdict = SemisimplicityTest::run(green);
    if (!verdict.certificate) {
      throw std::invalid_argument("round trip needs a semisimple monoid: "
                                  + verdict.reason);
    }
    GreenStructure const group_green(entry.group_rep.monoid_ptr());
    auto const           group_verdict = SemisimplicityTest::run(group_green);

    RoundTrip  out{false, false};
    auto const down = reduce(green, entry.rep, entry.idempotent);
    if (down.rep) {
      out.reduce_of_induce
          = iso_test(*down.rep, entry.group_rep, &*group_verdict.certificate).verdict
            == Verdict::yes;
      auto const up = induce(green, *down.rep, entry.idempotent);
      out.induce_of_reduce
          = iso_test(up, entry.rep, &*verdict.certificate).verdict == Verdict::yes;
    }
    return out;
  }

  RennerCatalog renner_permutohedron_catalog(std::size_t n, bool with_catalog) {
    if (n < 1 || n > kMaxRennerDegree) {
      throw std::invalid_argument("permutohedron catalog needs 1 <= n <= "
                                  + std::to_string(kMaxRennerDegree));
    }
    RennerCatalog out;
    auto lattice = std::make_shared<LatticeInstance const>(
        make_lattice(LatticeKind::ordered_partitions_zero, n));
    out.sgl      = std::make_shared<SGLMonoid const>(lattice);
    out.elements = std::make_shared<Enumerated<SGLElement> const>(out.sgl->enumerate());
    out.green    = std::make_shared<GreenStructure const>(out.elements->monoid);
    auto const& green = *out.green;

    for (index_t j = 0; j < green.J().count(); ++j) {
      auto const  a  = (*out.elements)[green.least_idempotent(j)].a;
      auto const& el = lattice->elements[a];
      if (!el) {
        out.jclass_names.push_back("0");
        continue;
      }
      Composition type;
      for (auto const& b : *el) {
        type.push_back(b.size());
      }
      out.jclass_names.push_back(partition_format(type));
    }
    out.hasse = green.j_hasse();

    // Covers among compositions: merge one adjacent pair; the zero sits
    // below (1,...,1).
    std::set<std::pair<std::string, std::string>> expected, found;
    for (auto const& c : compositions(n)) {
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Composition up(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
        up.push_back(c[i] + c[i + 1]);
        up.insert(up.end(), c.begin() + static_cast<std::ptrdiff_t>(i) + 2, c.end());
        expected.emplace(partition_format(c), partition_format(up));
      }
    }
    expected.emplace("0", partition_format(Composition(n, 1)));
    for (auto const& [lo, hi] : out.hasse) {
      found.emplace(out.jclass_names[lo], out.jclass_names[hi]);
    }
    std::set<std::string> names(out.jclass_names.begin(), out.jclass_names.end());
    out.poset_matches = found == expected && names.size() == out.jclass_names.size()
                        && names.size() == compositions(n).size() + 1;

    if (with_catalog) {
      out.catalog = cm_catalog(green, point_action(out.sgl, out.elements));
    }
    return out;
  }

}  // namespace munn
