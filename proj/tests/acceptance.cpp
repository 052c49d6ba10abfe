// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Every value is recomputed here from an independent count or from
// first principles before it is compared with the library.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "munn/cliffmunn.hpp"
#include "munn/green.hpp"
#include "munn/lattice.hpp"
#include "munn/monoid.hpp"
#include "munn/representation.hpp"
#include "munn/specht.hpp"
#include "support.hpp"

using namespace munn;
namespace t = munn::testing;

namespace {

  struct Failed : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  void expect(bool ok, std::string const& what) {
    if (!ok) {
      throw Failed(what);
    }
  }

  template <typename A, typename B>
  void expect_eq(A const& got, B const& want, std::string const& what) {
    if (!(got == want)) {
      std::ostringstream msg;
      msg << what << ": got " << got << ", expected " << want;
      throw Failed(msg.str());
    }
  }

  std::string join(std::vector<std::size_t> v) {
    std::string out;
    for (auto x : v) {
      out += (out.empty() ? "" : ",") + std::to_string(x);
    }
    return "{" + out + "}";
  }

  // Partial injections of [n], counted point by point.
  std::size_t count_partial_injections(std::size_t i, std::size_t n, std::vector<char>& used) {
    if (i == n) {
      return 1;
    }
    std::size_t total = count_partial_injections(i + 1, n, used);
    for (std::size_t y = 0; y < n; ++y) {
      if (!used[y]) {
        used[y] = 1;
        total += count_partial_injections(i + 1, n, used);
        used[y] = 0;
      }
    }
    return total;
  }

  std::size_t hook_length_dim(IntegerPartition const& shape) {
    std::size_t n = 0;
    for (auto p : shape) {
      n += p;
    }
    std::size_t hooks = 1;
    for (std::size_t r = 0; r < shape.size(); ++r) {
      for (std::size_t c = 0; c < shape[r]; ++c) {
        std::size_t below = 0;
        for (std::size_t k = r + 1; k < shape.size() && shape[k] > c; ++k) {
          ++below;
        }
        hooks *= (shape[r] - c - 1) + below + 1;
      }
    }
    return t::factorial(n) / hooks;
  }

  // J-class sizes in increasing order.
  std::vector<std::size_t> jclass_sizes(GreenStructure const& g) {
    std::vector<std::size_t> out;
    for (auto const& m : g.J().members) {
      out.push_back(m.size());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // (J size, #R, #L, |H|) per class, sorted, plus whether J is a chain.
  struct GreenProfile {
    std::vector<std::array<std::size_t, 4>> classes;
    std::size_t                             l = 0, r = 0, h = 0;
    bool                                    chain = false;
    bool operator==(GreenProfile const&) const = default;
  };

  GreenProfile green_profile(GreenStructure const& g) {
    GreenProfile p;
    for (index_t j = 0; j < g.J().count(); ++j) {
      auto const box = eggbox(g, j);
      p.classes.push_back({g.J().members[j].size(), box.rows.size(), box.cols.size(),
                           g.H().members[box.cells.front()].size()});
    }
    std::sort(p.classes.begin(), p.classes.end());
    p.l     = g.L().count();
    p.r     = g.R().count();
    p.h     = g.H().count();
    p.chain = g.j_hasse().size() + 1 == g.J().count();
    for (index_t a = 0; a < g.J().count(); ++a) {
      for (index_t b = 0; b < g.J().count(); ++b) {
        p.chain = p.chain && (g.j_leq(a, b) || g.j_leq(b, a));
      }
    }
    return p;
  }

  index_t jclass_of_size(GreenStructure const& g, std::size_t size) {
    for (index_t j = 0; j < g.J().count(); ++j) {
      if (g.J().members[j].size() == size) {
        return j;
      }
    }
    throw Failed("no J-class of size " + std::to_string(size));
  }

  Subspace sum_zero(std::size_t n) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Vector v(n);
      v[i]     = 1;
      v[i + 1] = -1;
      vs.push_back(v);
    }
    return Subspace::span(n, vs);
  }

  bool all_ones(Character const& c) {
    return std::all_of(c.begin(), c.end(), [](Rational const& x) { return x == 1; });
  }

  // ---------------------------------------------------------------------

  std::string criterion_orders() {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<char> used(n, 0);
      auto const        brute = count_partial_injections(0, n, used);
      expect_eq(brute, t::symmetric_inverse_order(n), "I_n brute force vs binomial sum");
      expect_eq(symmetric_inverse_monoid(n).monoid->size(), brute, "|I_" + std::to_string(n) + "|");
    }
    expect_eq(full_transformation_monoid(3).monoid->size(), std::size_t{27}, "|T_3|");
    return "|I_n| = 2,7,34,209; |T_3| = 27";
  }

  std::string criterion_sgl_orders() {
    std::ostringstream note;
    auto check = [&](LatticeKind kind, std::size_t n, std::size_t oracle) {
      SGLMonoid const sgl(std::make_shared<LatticeInstance const>(make_lattice(kind, n)));
      auto const      report = sgl.order();
      auto const      name   = std::string(lattice_kind_name(kind)) + ":" + std::to_string(n);
      expect_eq(report.formula, report.enumerated, name + " formula vs enumeration");
      expect_eq(sgl.enumerate().size(), report.enumerated, name + " closure");
      if (oracle != 0) {
        expect_eq(report.enumerated, oracle, name);
      }
      return report.enumerated;
    };
    for (std::size_t n = 1; n <= 4; ++n) {
      check(LatticeKind::subsets, n, t::symmetric_inverse_order(n));
      check(LatticeKind::set_partitions, n, n == 3 ? 16 : 0);
    }
    for (std::size_t n : {3, 4}) {
      // One unit per group element on every nonzero ordered partition, plus 0.
      check(LatticeKind::ordered_partitions_zero, n, 1 + t::factorial(n) * t::ordered_set_partitions(n));
    }
    note << "subsets n<=4, partitions n<=4 (n=3: 16), ordperm 79 and 1801";
    return note.str();
  }

  std::string criterion_subsets_is_in() {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const sgl = std::make_shared<SGLMonoid const>(
          std::make_shared<LatticeInstance const>(make_lattice(LatticeKind::subsets, n)));
      auto const sglm = sgl->enumerate();
      auto const in   = symmetric_inverse_monoid(n);
      expect_eq(sglm.size(), in.size(), "orders");
      if (n <= 3) {
        // g_A is g restricted to A.
        std::vector<index_t> phi(sglm.size());
        std::set<index_t>    seen;
        for (index_t x = 0; x < sglm.size(); ++x) {
          auto const& [a, g] = sglm[x];
          auto const& block  = (*sgl->lattice().elements[a])[0];
          auto const& perm   = sgl->group()[g];
          std::vector<point_t> images(n, kUndefined);
          for (auto p : block) {
            images[p] = perm(p);
          }
          phi[x] = in.index_of(PartialBijection::from_images(images));
          seen.insert(phi[x]);
        }
        expect_eq(seen.size(), in.size(), "restriction map is onto");
        for (index_t x = 0; x < sglm.size(); ++x) {
          for (index_t y = 0; y < sglm.size(); ++y) {
            expect(phi[sglm.monoid->multiply(x, y)] == in.monoid->multiply(phi[x], phi[y]),
                   "multiplication tables differ at n=" + std::to_string(n));
          }
        }
      }
      expect(green_profile(GreenStructure(sglm.monoid)) == green_profile(GreenStructure(in.monoid)),
             "Green profiles differ at n=" + std::to_string(n));
    }
    return "tables agree n<=3, Green profiles agree n<=4";
  }

  std::string criterion_green() {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const     in = symmetric_inverse_monoid(n);
      GreenStructure g(in.monoid);
      std::vector<std::size_t> want;
      for (std::size_t m = 0; m <= n; ++m) {
        want.push_back(t::binomial(n, m) * t::binomial(n, m) * t::factorial(m));
      }
      std::sort(want.begin(), want.end());
      expect(jclass_sizes(g) == want, "I_n J-class sizes");
      for (index_t j = 0; j < g.J().count(); ++j) {
        auto const  box  = eggbox(g, j);
        auto const  rank = in[g.J().members[j].front()].rank();
        std::size_t side = t::binomial(n, rank);
        expect(box.rows.size() == side && box.cols.size() == side, "I_n eggbox shape");
        for (std::size_t r = 0; r < side; ++r) {
          for (std::size_t c = 0; c < side; ++c) {
            expect(box.is_idempotent(r, c) == (r == c), "I_n idempotents off the diagonal");
          }
        }
      }
    }
    auto const     t3 = full_transformation_monoid(3);
    GreenStructure g3(t3.monoid);
    expect(jclass_sizes(g3) == std::vector<std::size_t>{3, 6, 18}, "T_3 J-class sizes");

    // Every t in L_e is s_i g in exactly one way.
    std::size_t checked = 0;
    auto        lemma   = [&](MonoidPtr m) {
      GreenStructure g(m);
      for (auto e : m->idempotents()) {
        auto const trans = transversal(g, e);
        auto const sub   = maximal_subgroup(g, e);
        for (auto tt : g.L().members[g.L().of[e]]) {
          std::size_t ways = 0;
          std::size_t pos  = 0;
          index_t     elem = 0;
          for (std::size_t i = 0; i < trans.size(); ++i) {
            for (auto h : sub.members) {
              if (m->multiply(trans.reps[i], h) == tt) {
                ++ways;
                pos  = i;
                elem = h;
              }
            }
          }
          expect_eq(ways, std::size_t{1}, "decompositions of an element of L_e");
          auto const d = hclass_decompose(g, trans, tt);
          expect(d.i == pos && d.g == elem, "hclass_decompose disagrees with search");
          ++checked;
        }
      }
    };
    for (std::size_t n = 1; n <= 3; ++n) {
      lemma(symmetric_inverse_monoid(n).monoid);
      lemma(full_transformation_monoid(n).monoid);
    }
    return "I_n sizes/eggboxes n<=4, T_3 {3,18,6}, " + std::to_string(checked)
           + " unique decompositions";
  }

  std::string criterion_specht() {
    auto const start = std::chrono::steady_clock::now();
    for (std::size_t n = 1; n <= 5; ++n) {
      std::size_t squares = 0;
      for (auto const& shape : partitions(n)) {
        auto const data = specht_rep(shape);
        expect_eq(data.rep.dim(), hook_length_dim(shape), "dim S^" + partition_format(shape));
        expect_eq(commutant_dim(data.rep), std::size_t{1}, "commutant of S^" + partition_format(shape));
        squares += data.rep.dim() * data.rep.dim();
      }
      expect_eq(squares, t::factorial(n), "sum of squares for S_" + std::to_string(n));
    }
    // Character table of S_3 on identity, transpositions and 3-cycles.
    auto const                                           s3 = symmetric_group(3);
    std::map<std::string, std::array<int, 3>> const table{
        {"(3)", {1, 1, 1}}, {"(1,1,1)", {1, -1, 1}}, {"(2,1)", {2, 0, -1}}};
    for (auto const& [label, row] : table) {
      auto const chi = character(specht_rep(partition_parse(label)).rep);
      for (index_t x = 0; x < s3.size(); ++x) {
        std::size_t fixed = 0;
        for (point_t p = 0; p < 3; ++p) {
          fixed += s3[x](p) == p;
        }
        int const cls = fixed == 3 ? 0 : fixed == 1 ? 1 : 2;
        expect(chi[x] == row[cls], "S_3 character of " + label);
      }
    }
    for (std::size_t n : {4, 5}) {
      auto const standard = specht_rep(IntegerPartition{n - 1, 1}).rep;
      for (std::size_t p = 1; p < n; ++p) {
        IntegerPartition hook{n - p};
        hook.insert(hook.end(), p, 1);
        expect(char_equal(character(exterior_power(standard, p)), character(specht_rep(hook).rep)),
               "exterior power " + std::to_string(p) + " for n=" + std::to_string(n));
      }
    }
    std::chrono::duration<double> const dt = std::chrono::steady_clock::now() - start;
    expect(dt.count() < 10.0, "Specht suite over 10 s");
    return "n<=5 dims, sums, commutants; S_3 table; exterior powers n=4,5";
  }

  std::string criterion_reduction() {
    auto const     in = std::make_shared<Enumerated<PartialBijection> const>(symmetric_inverse_monoid(3));
    GreenStructure g(in->monoid);
    auto const     refl = mapping_rep(*in);
    auto const     rank_class = [&](std::size_t m) { return jclass_of_size(g, t::binomial(3, m) * t::binomial(3, m) * t::factorial(m)); };

    expect_eq(apex(g, refl), rank_class(1), "apex of the partial-reflection rep");
    auto const supp = support(g, refl);
    std::set<index_t> want{rank_class(1), rank_class(2), rank_class(3)};
    expect(std::set<index_t>(supp.jclasses.begin(), supp.jclasses.end()) == want, "support is J1..J3");

    for (std::size_t m = 1; m <= 3; ++m) {
      for (auto e : g.idempotents_in(rank_class(m))) {
        auto const red = reduce(g, refl, e);
        expect(red.rep.has_value(), "reduction vanishes");
        auto const chi = character(*red.rep);
        for (auto x : red.subgroup.members) {
          std::size_t fixed = 0;
          for (auto p : (*in)[x].domain()) {
            fixed += (*in)[x](p) == p;
          }
          expect(chi[red.subgroup.local(x)] == static_cast<long>(fixed), "permuting-coordinates character");
        }
      }
    }

    auto const     tn = full_transformation_monoid(3);
    GreenStructure gt(tn.monoid);
    auto const     w = restrict_to(mapping_rep(tn), sum_zero(3));
    expect_eq(apex(gt, w), jclass_of_size(gt, 18), "apex of W in T_3");

    // Characters at two idempotents of a class agree through g -> s g s*.
    std::size_t pairs = 0;
    auto        invariance = [&](GreenStructure const& gg, Representation const& v) {
      for (index_t j = 0; j < gg.J().count(); ++j) {
        auto const idem = gg.idempotents_in(j);
        for (auto e : idem) {
          for (auto f : idem) {
            index_t s = 0;
            for (auto x : gg.J().members[j]) {
              if (gg.L().of[x] == gg.L().of[e] && gg.R().of[x] == gg.R().of[f]) {
                s = x;
                break;
              }
            }
            auto const iso = jclass_subgroup_iso(gg, e, f, s);
            auto const re  = reduce(gg, v, e);
            auto const rf  = reduce(gg, v, f);
            expect(re.rep.has_value() == rf.rep.has_value(), "support depends on the idempotent");
            if (re.rep) {
              auto const ce = character(*re.rep);
              auto const cf = character(*rf.rep);
              for (std::size_t k = 0; k < re.subgroup.members.size(); ++k) {
                expect(ce[k] == cf[rf.subgroup.local(iso.forward[k])], "idempotent invariance");
              }
            }
            ++pairs;
          }
        }
      }
    };
    invariance(g, refl);
    invariance(gt, w);
    return "apex J1 with support J1..J3, S_m characters, apex(W) = J2, "
           + std::to_string(pairs) + " idempotent pairs invariant";
  }

  std::string criterion_induction() {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const     in = symmetric_inverse_monoid(n);
      GreenStructure g(in.monoid);
      index_t        z = 0;
      for (index_t x = 0; x < in.size(); ++x) {
        z = in[x].rank() == 0 ? x : z;
      }
      auto const sub0 = maximal_subgroup(g, z);
      auto const u0   = induce(g, Representation::trivial(sub0.group), z);
      expect(u0.dim() == 1 && all_ones(character(u0)), "trivial at zero induces the trivial rep");

      index_t e1 = 0;
      for (auto e : in.monoid->idempotents()) {
        if (in[e].rank() == 1) {
          e1 = e;
          break;
        }
      }
      auto const sub1 = maximal_subgroup(g, e1);
      auto const u1   = induce(g, Representation::trivial(sub1.group), e1);
      expect(char_equal(character(u1), character(mapping_rep(in))),
             "trivial at J1 induces the partial-reflection rep");
    }

    auto const     tn = full_transformation_monoid(3);
    GreenStructure gt(tn.monoid);
    auto const     c  = gt.least_idempotent(jclass_of_size(gt, 3));
    auto const     sc = maximal_subgroup(gt, c);
    auto const     raw = induce_raw(gt, Representation::trivial(sc.group), c);
    auto const     ann = annihilator(gt, raw);
    expect(ann.dim() == 2 && ann == sum_zero(3), "T_3 annihilator is the sum-zero hyperplane");
    auto const q = induce(gt, Representation::trivial(sc.group), c);
    expect(q.dim() == 1 && all_ones(character(q)), "T_3 quotient is trivial");

    std::size_t inductions = 0;
    auto        no_ann     = [&](GreenStructure const& g, PointAction const& pts) {
      for (auto const& entry : cm_catalog(g, pts)) {
        auto const r = induce_raw(g, entry.group_rep, entry.idempotent);
        expect_eq(annihilator(g, r).dim(), std::size_t{0}, "annihilator in an inverse monoid");
        ++inductions;
      }
    };
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const in = std::make_shared<Enumerated<PartialBijection> const>(symmetric_inverse_monoid(n));
      no_ann(GreenStructure(in->monoid), point_action(in));
    }
    for (auto kind : {LatticeKind::subsets, LatticeKind::ordered_partitions_zero}) {
      auto const sgl = std::make_shared<SGLMonoid const>(
          std::make_shared<LatticeInstance const>(make_lattice(kind, 3)));
      auto const els = std::make_shared<Enumerated<SGLElement> const>(sgl->enumerate());
      no_ann(GreenStructure(els->monoid), point_action(sgl, els));
    }
    return "zero and J1 examples for n<=3, T_3 hyperplane, " + std::to_string(inductions)
           + " inductions with zero annihilator";
  }

  std::string criterion_t3() {
    auto const     tn = full_transformation_monoid(3);
    GreenStructure g(tn.monoid);
    auto const     rep = mapping_rep(tn);
    Vector         seed(3);
    seed[0] = 1;
    seed[1] = -1;
    auto const w = spin(rep, {seed});
    expect(w.dim() == 2 && w == sum_zero(3) && is_invariant(rep, w), "spin finds W");
    expect(one_dim_invariant_lines(rep).empty(), "mapping rep of T_3 has an invariant line");
    // A complement to W would be an invariant line.
    auto const verdict = SemisimplicityTest::run(g);
    expect(!verdict.certificate.has_value(), "T_3 certified semisimple");
    // The trap: a one-dimensional commutant next to a proper invariant subspace.
    expect_eq(commutant_dim(rep), std::size_t{1}, "commutant of the T_3 mapping rep");
    auto const search = is_irreducible(rep);
    expect(search.verdict == Verdict::no && search.witness && search.witness->dim() > 0
               && search.witness->dim() < 3,
           "search mode reports T_3 mapping rep reducible");
    return "W = sum-zero plane by spin, no invariant lines, commutant 1 yet reducible";
  }

  std::string criterion_catalogs() {
    auto const start = std::chrono::steady_clock::now();
    auto       run   = [](GreenStructure const& g, std::vector<CatalogEntry> const& cat) {
      for (auto const& e : cat) {
        auto const rt = cm_roundtrip_check(g, e);
        expect(rt.reduce_of_induce && rt.induce_of_reduce, "roundtrip " + e.label);
      }
    };
    std::ostringstream note;
    for (std::size_t n : {3, 4}) {
      auto const in = std::make_shared<Enumerated<PartialBijection> const>(symmetric_inverse_monoid(n));
      GreenStructure const g(in->monoid);
      auto const           cat = cm_catalog(g, point_action(in));
      // One entry per partition of each m <= n.
      std::size_t entries = 0;
      for (std::size_t m = 0; m <= n; ++m) {
        entries += t::partition_count(m);
      }
      expect_eq(cat.size(), entries, "I_" + std::to_string(n) + " entries");
      expect_eq(sum_of_squares(cat), t::symmetric_inverse_order(n), "I_n sum of squares");
      if (n == 3) {
        std::vector<std::size_t> dims;
        for (auto const& e : cat) {
          dims.push_back(e.dim());
        }
        std::sort(dims.begin(), dims.end());
        expect(dims == std::vector<std::size_t>{1, 1, 1, 2, 3, 3, 3}, "I_3 dims " + join(dims));
      }
      run(g, cat);
      note << "I_" << n << ": " << cat.size() << " irreps, sum " << sum_of_squares(cat) << "; ";
    }
    auto const renner = renner_permutohedron_catalog(3);
    expect_eq(renner.catalog.size(), std::size_t{9}, "Renner n=3 entries");
    expect_eq(sum_of_squares(renner.catalog), std::size_t{79}, "Renner n=3 sum of squares");
    expect(renner.poset_matches, "Renner n=3 J-poset is compositions of 3 plus 0");
    std::set<std::string> names(renner.jclass_names.begin(), renner.jclass_names.end());
    expect(names == std::set<std::string>{"0", "(3)", "(2,1)", "(1,2)", "(1,1,1)"}, "Renner class names");
    run(*renner.green, renner.catalog);
    std::chrono::duration<double> const dt = std::chrono::steady_clock::now() - start;
    expect(dt.count() < 30.0, "catalogs over 30 s");
    note << "Renner 3: 9 irreps, sum 79; all roundtrips pass";
    return note.str();
  }

  std::string criterion_jordan_holder() {
    std::size_t runs = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
      auto const     sn = symmetric_group(n);
      GreenStructure g(sn.monoid);
      auto const     cert = *SemisimplicityTest::run(g).certificate;
      auto const     m    = mapping_rep(sn);
      std::vector<IntegerPartition> const shapes = partitions(n);
      auto const specht = [&](IntegerPartition const& s) {
        std::vector<point_t> labels(n);
        std::iota(labels.begin(), labels.end(), 0);
        return specht_rep(s, labels, sn).rep;
      };
      std::vector<std::pair<Representation, std::vector<Character>>> cases;
      // M^(n-1,1) = S^(n) + S^(n-1,1).
      cases.push_back({m, character_multiset({specht(IntegerPartition{n}),
                                               specht(IntegerPartition{n - 1, 1})})});
      cases.push_back({direct_sum(m, m),
                       character_multiset({specht({n}), specht({n - 1, 1}), specht({n}),
                                           specht({n - 1, 1})})});
      cases.push_back({direct_sum(specht(shapes.back()), m),
                       character_multiset({specht(shapes.back()), specht({n}), specht({n - 1, 1})})});
      for (auto const& [v, want] : cases) {
        auto const fwd = character_multiset(decompose(v, cert, SeedOrder::forward));
        auto const rev = character_multiset(decompose(v, cert, SeedOrder::reverse));
        expect(fwd == rev, "seed orders disagree");
        expect(fwd == want, "composition factors differ from the Specht oracle");
        runs += 2;
      }
    }
    return std::to_string(runs) + " decompositions, both seed orders agree, n<=4";
  }

  std::string criterion_partition_flag() {
    SGLMonoid const sgl3(std::make_shared<LatticeInstance const>(make_lattice(LatticeKind::set_partitions, 3)));
    expect_eq(sgl3.order().enumerated, young_index_sum(sgl3.lattice()), "n=3 values");
    auto const lat4 = std::make_shared<LatticeInstance const>(make_lattice(LatticeKind::set_partitions, 4));
    SGLMonoid const sgl4(lat4);
    auto const      report = sgl4.order();
    auto const      young  = young_index_sum(*lat4);
    expect_eq(young, std::size_t{131}, "Young-index sum");
    expect_eq(report.formula, report.enumerated, "definitional formula vs enumeration");
    bool const flag = report.enumerated != young;
    expect(flag, "discrepancy flag not raised");
    std::ostringstream out, err;
    cli::run({"munn", "order", "SGL:partitions:4"}, out, err);
    expect(out.str().find("\nyoung_index_agree no\n") != std::string::npos,
           "order report does not flag the discrepancy");
    return "|S(S_4,Pi(4))| = " + std::to_string(report.enumerated)
           + " by definition and enumeration; Young-index sum = 131; DISCREPANCY FLAGGED";
  }

  std::string criterion_golden() {
    std::ifstream cases(std::string(MUNN_GOLDEN_DIR) + "/cases.txt");
    expect(cases.good(), "cannot read the golden case list");
    std::string line;
    std::size_t count = 0;
    while (std::getline(cases, line)) {
      if (line.empty() || line[0] == '#') {
        continue;
      }
      std::istringstream       words(line);
      std::string              stem, w;
      std::vector<std::string> args{"munn"};
      words >> stem;
      while (words >> w) {
        args.push_back(w);
      }
      std::ifstream      file(std::string(MUNN_GOLDEN_DIR) + "/" + stem + ".txt");
      std::ostringstream want, out, err;
      want << file.rdbuf();
      expect_eq(cli::run(args, out, err), 0, stem + " exit code");
      expect(out.str() == want.str(), stem + " differs from its golden file");
      ++count;
    }
    expect(count > 0, "no golden cases");
    return std::to_string(count) + " reports byte-identical";
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<std::string()>>> const criteria{
      {"orders by enumeration", criterion_orders},
      {"S(G,L) order formula", criterion_sgl_orders},
      {"S(S_n,subsets) = I_n", criterion_subsets_is_in},
      {"Green structure", criterion_green},
      {"Specht modules", criterion_specht},
      {"reduction and apex", criterion_reduction},
      {"induction", criterion_induction},
      {"T_3 not semisimple", criterion_t3},
      {"Clifford-Munn catalogs", criterion_catalogs},
      {"Jordan-Holder stability", criterion_jordan_holder},
      {"partition lattice flag", criterion_partition_flag},
      {"CLI golden files", criterion_golden},
  };
  int  number = 0;
  bool all    = true;
  for (auto const& [name, check] : criteria) {
    ++number;
    auto const  start = std::chrono::steady_clock::now();
    std::string detail;
    bool        ok = true;
    try {
      detail = check();
    } catch (std::exception const& e) {
      ok     = false;
      detail = e.what();
    }
    std::chrono::duration<double> const dt = std::chrono::steady_clock::now() - start;
    all                                     = all && ok;
    std::printf("%s %2d %-24s %6.2fs  %s\n", ok ? "PASS" : "FAIL", number, name.c_str(), dt.count(),
                detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
