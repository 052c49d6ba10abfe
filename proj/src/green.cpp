#include "munn/green.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace munn {

  namespace {
    // Group elements by equal rows of an ideal bit matrix.
    Partition classes_from_rows(BitMatrix const& ideals) {
      Partition                                        out;
      std::map<std::vector<std::uint64_t>, index_t>    seen;
      out.of.resize(ideals.rows());
      for (std::size_t x = 0; x < ideals.rows(); ++x) {
        auto row      = ideals.row(x);
        auto [it, ok] = seen.try_emplace(
            std::vector<std::uint64_t>(row.begin(), row.end()),
            static_cast<index_t>(out.members.size()));
        if (ok) {
          out.members.emplace_back();
        }
        out.of[x] = it->second;
        out.members[it->second].push_back(static_cast<index_t>(x));
      }
      return out;
    }
  }  // namespace

  GreenStructure::GreenStructure(MonoidPtr monoid)
      : _monoid(std::move(monoid)),
        _ideals(kernels::principal_ideals(_monoid->table(), _monoid->size())) {
    _l = classes_from_rows(_ideals.left);
    _r = classes_from_rows(_ideals.right);
    _j = classes_from_rows(_ideals.two_sided);

    std::map<std::pair<index_t, index_t>, index_t> lr;
    std::size_t const                               n = _monoid->size();
    _h.of.resize(n);
    for (index_t x = 0; x < n; ++x) {
      auto [it, ok] = lr.try_emplace({_l.of[x], _r.of[x]},
                                     static_cast<index_t>(_h.members.size()));
      if (ok) {
        _h.members.emplace_back();
      }
      _h.of[x] = it->second;
      _h.members[it->second].push_back(x);
    }

    std::size_t const nj = _j.count();
    _jleq.assign(nj * nj, 0);
    for (index_t i = 0; i < nj; ++i) {
      for (index_t k = 0; k < nj; ++k) {
        _jleq[i * nj + k] = _ideals.two_sided.row_subset(_j.members[i][0],
                                                         _j.members[k][0]);
      }
    }
  }

  std::vector<std::pair<index_t, index_t>> GreenStructure::j_hasse() const {
    std::vector<std::pair<index_t, index_t>> out;
    std::size_t const                        nj = _j.count();
    for (index_t i = 0; i < nj; ++i) {
      for (index_t k = 0; k < nj; ++k) {
        if (i == k || !j_leq(i, k)) {
          continue;
        }
        bool covered = true;
        for (index_t m = 0; m < nj && covered; ++m) {
          if (m != i && m != k && j_leq(i, m) && j_leq(m, k)) {
            covered = false;
          }
        }
        if (covered) {
          out.emplace_back(i, k);
        }
      }
    }
    return out;
  }

  std::vector<index_t> GreenStructure::idempotents_in(index_t jclass) const {
    std::vector<index_t> out;
    for (index_t x : _j.members.at(jclass)) {
      if (_monoid->is_idempotent(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  index_t GreenStructure::least_idempotent(index_t jclass) const {
    auto idem = idempotents_in(jclass);
    if (idem.empty()) {
      throw std::invalid_argument("J-class " + std::to_string(jclass)
                                  + " contains no idempotent");
    }
    return idem.front();
  }

  bool GreenStructure::is_regular() const {
    for (index_t j = 0; j < _j.count(); ++j) {
      if (idempotents_in(j).empty()) {
        return false;
      }
    }
    return true;
  }

  Eggbox eggbox(GreenStructure const& green, index_t jclass) {
    Eggbox out;
    out.jclass = jclass;
    for (index_t x : green.J().members.at(jclass)) {
      out.rows.push_back(green.R().of[x]);
      out.cols.push_back(green.L().of[x]);
    }
    // Class indices are assigned by least member, so sorting by index is
    // sorting by least member.
    for (auto* v : {&out.rows, &out.cols}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    constexpr index_t kNone = static_cast<index_t>(-1);
    out.cells.assign(out.rows.size() * out.cols.size(), kNone);
    out.idempotent.assign(out.cells.size(), 0);
    for (index_t x : green.J().members[jclass]) {
      auto r = std::lower_bound(out.rows.begin(), out.rows.end(), green.R().of[x])
               - out.rows.begin();
      auto c = std::lower_bound(out.cols.begin(), out.cols.end(), green.L().of[x])
               - out.cols.begin();
      std::size_t const cell = r * out.cols.size() + c;
      out.cells[cell]        = green.H().of[x];
      if (green.monoid().is_idempotent(x)) {
        if (out.idempotent[cell]) {
          throw VerificationFailure("two idempotents in one H-class");
        }
        out.idempotent[cell] = 1;
      }
    }
    if (std::find(out.cells.begin(), out.cells.end(), kNone) != out.cells.end()) {
      throw VerificationFailure("an L-class and an R-class of one J-class "
                                "do not meet");
    }
    return out;
  }

  index_t Subgroup::local(index_t x) const {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    if (it == members.end() || *it != x) {
      throw std::out_of_range("element not in the maximal subgroup");
    }
    return static_cast<index_t>(it - members.begin());
  }

  Subgroup maximal_subgroup(GreenStructure const& green, index_t e) {
    auto const& m = green.monoid();
    if (!m.is_idempotent(e)) {
      throw std::invalid_argument("maximal_subgroup: " + m.label(e)
                                  + " is not idempotent");
    }
    Subgroup out{e, green.H().members[green.H().of[e]], nullptr};
    out.group = restrict_monoid(m, out.members, e);
    auto const& g = *out.group;
    for (index_t x = 0; x < g.size(); ++x) {
      bool has_inverse = false;
      for (index_t y = 0; y < g.size() && !has_inverse; ++y) {
        has_inverse = g.multiply(x, y) == g.identity()
                      && g.multiply(y, x) == g.identity();
      }
      if (!has_inverse) {
        throw VerificationFailure("H-class of an idempotent is not a group");
      }
    }
    return out;
  }

  std::size_t Transversal::position(index_t hclass) const {
    auto it = std::lower_bound(hclasses.begin(), hclasses.end(), hclass);
    if (it == hclasses.end() || *it != hclass) {
      throw std::out_of_range("H-class not in the transversal");
    }
    return static_cast<std::size_t>(it - hclasses.begin());
  }

  Transversal transversal(GreenStructure const& green,
                          index_t               e,
                          TransversalPick       pick) {
    if (!green.monoid().is_idempotent(e)) {
      throw std::invalid_argument("transversal: base is not idempotent");
    }
    Transversal out;
    out.e = e;
    for (index_t x : green.L().members[green.L().of[e]]) {
      out.hclasses.push_back(green.H().of[x]);
    }
    std::sort(out.hclasses.begin(), out.hclasses.end());
    out.hclasses.erase(std::unique(out.hclasses.begin(), out.hclasses.end()),
                       out.hclasses.end());
    for (index_t h : out.hclasses) {
      auto const& mem = green.H().members[h];
      if (h == green.H().of[e]) {
        out.reps.push_back(e);
      } else {
        out.reps.push_back(pick == TransversalPick::least ? mem.front()
                                                          : mem.back());
      }
    }
    return out;
  }

  Decomposition hclass_decompose(GreenStructure const& green,
                                 Transversal const&    trans,
                                 index_t               t) {
    auto const& m = green.monoid();
    if (green.L().of[t] != green.L().of[trans.e]) {
      throw std::invalid_argument("hclass_decompose: " + m.label(t)
                                  + " is not in L_e");
    }
    std::size_t const i = trans.position(green.H().of[t]);
    std::optional<index_t> found;
    for (index_t g : green.H().members[green.H().of[trans.e]]) {
      if (m.multiply(trans.reps[i], g) == t) {
        if (found) {
          throw VerificationFailure("decomposition t = s_i g is not unique");
        }
        found = g;
      }
    }
    if (!found) {
      throw VerificationFailure("no decomposition t = s_i g for "
                                + m.label(t));
    }
    return {i, *found};
  }

  GroupIso jclass_subgroup_iso(GreenStructure const& green,
                               index_t               e,
                               index_t               f,
                               index_t               s) {
    auto const& m = green.monoid();
    if (!m.is_idempotent(e) || !m.is_idempotent(f)) {
      throw std::invalid_argument("jclass_subgroup_iso: not idempotents");
    }
    if (green.J().of[e] != green.J().of[f]) {
      throw std::invalid_argument("jclass_subgroup_iso: e and f are not "
                                  "J-related");
    }
    if (green.L().of[s] != green.L().of[e] || green.R().of[s] != green.R().of[f]) {
      throw std::invalid_argument("jclass_subgroup_iso: s is not in L_e "
                                  "meet R_f");
    }
    // s* lies in L_f meet R_e with s* s = e and s s* = f.
    std::optional<index_t> s_star;
    for (index_t t : green.J().members[green.J().of[e]]) {
      if (m.multiply(t, s) == e && m.multiply(s, t) == f
          && m.multiply(m.multiply(s, t), s) == s
          && m.multiply(m.multiply(t, s), t) == t) {
        s_star = t;
        break;
      }
    }
    if (!s_star) {
      throw VerificationFailure("no inverse of s with s* s = e, s s* = f");
    }
    GroupIso out{e, f, s, *s_star, {}};
    auto const& ge = green.H().members[green.H().of[e]];
    auto const& gf = green.H().members[green.H().of[f]];
    for (index_t g : ge) {
      index_t const h = m.multiply(m.multiply(s, g), *s_star);
      if (!std::binary_search(gf.begin(), gf.end(), h)) {
        throw VerificationFailure("s g s* left G_f");
      }
      if (m.multiply(m.multiply(*s_star, h), s) != g) {
        throw VerificationFailure("h -> s* h s does not invert g -> s g s*");
      }
      out.forward.push_back(h);
    }
    auto sorted = out.forward;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != gf) {
      throw VerificationFailure("g -> s g s* is not onto G_f");
    }
    for (std::size_t a = 0; a < ge.size(); ++a) {
      for (std::size_t b = 0; b < ge.size(); ++b) {
        index_t const ab = m.multiply(ge[a], ge[b]);
        auto const    k  = std::lower_bound(ge.begin(), ge.end(), ab) - ge.begin();
        if (out.forward[k] != m.multiply(out.forward[a], out.forward[b])) {
          throw VerificationFailure("g -> s g s* is not a homomorphism");
        }
      }
    }
    return out;
  }

}  // namespace munn
