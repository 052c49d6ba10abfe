#include "munn/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace munn {

  ////////////////////////////////////////////////////////////////////////
  // FiniteLattice
  ////////////////////////////////////////////////////////////////////////

  FiniteLattice::FiniteLattice(std::vector<std::string> labels,
                               std::vector<char>        order)
      : _labels(std::move(labels)), _leq(std::move(order)) {
    std::size_t const n = _labels.size();
    if (n == 0 || _leq.size() != n * n) {
      throw std::invalid_argument("FiniteLattice: bad order relation");
    }
    std::vector<std::size_t> below(n, 0), above(n, 0);
    for (index_t a = 0; a < n; ++a) {
      for (index_t c = 0; c < n; ++c) {
        below[a] += leq(c, a);
        above[a] += leq(a, c);
      }
    }
    _meet.assign(n * n, 0);
    _join.assign(n * n, 0);
    for (index_t a = 0; a < n; ++a) {
      for (index_t b = a; b < n; ++b) {
        // The glb is the common lower bound whose down set is exactly the
        // set of common lower bounds; dually for the lub.
        std::size_t lower = 0, upper = 0;
        for (index_t c = 0; c < n; ++c) {
          lower += leq(c, a) && leq(c, b);
          upper += leq(a, c) && leq(b, c);
        }
        std::optional<index_t> glb, lub;
        for (index_t c = 0; c < n; ++c) {
          if (leq(c, a) && leq(c, b) && below[c] == lower) {
            glb = c;
          }
          if (leq(a, c) && leq(b, c) && above[c] == upper) {
            lub = c;
          }
        }
        if (!glb || !lub) {
          throw VerificationFailure("lattice axiom violated: no "
                                    + std::string(!glb ? "meet" : "join")
                                    + " for " + _labels[a] + ", "
                                    + _labels[b]);
        }
        _meet[a * n + b] = _meet[b * n + a] = *glb;
        _join[a * n + b] = _join[b * n + a] = *lub;
      }
    }
    _top = _bottom = 0;
    for (index_t a = 1; a < n; ++a) {
      _top    = join(_top, a);
      _bottom = meet(_bottom, a);
    }
    validate();
  }

  std::vector<index_t> FiniteLattice::down_set(index_t a) const {
    std::vector<index_t> out;
    for (index_t c = 0; c < size(); ++c) {
      if (leq(c, a)) {
        out.push_back(c);
      }
    }
    return out;
  }

  void FiniteLattice::validate() const {
    std::size_t const n = size();
    for (index_t a = 0; a < n; ++a) {
      if (!leq(a, a)) {
        throw VerificationFailure("order not reflexive at " + label(a));
      }
      for (index_t b = 0; b < n; ++b) {
        if (a != b && leq(a, b) && leq(b, a)) {
          throw VerificationFailure("order not antisymmetric");
        }
        for (index_t c = 0; c < n; ++c) {
          if (leq(a, b) && leq(b, c) && !leq(a, c)) {
            throw VerificationFailure("order not transitive");
          }
        }
        index_t const m = meet(a, b), j = join(a, b);
        if (!leq(m, a) || !leq(m, b) || !leq(a, j) || !leq(b, j)) {
          throw VerificationFailure("meet/join are not bounds");
        }
        for (index_t c = 0; c < n; ++c) {
          if (leq(c, a) && leq(c, b) && !leq(c, m)) {
            throw VerificationFailure("meet is not greatest");
          }
          if (leq(a, c) && leq(b, c) && !leq(j, c)) {
            throw VerificationFailure("join is not least");
          }
        }
      }
      if (!leq(a, _top) || !leq(_bottom, a)) {
        throw VerificationFailure("top/bottom are not extremal");
      }
    }
  }

  void GroupAction::validate(FiniteLattice const& lattice) const {
    auto const&       g_table = *group.monoid;
    std::size_t const n       = lattice.size();
    for (index_t a = 0; a < n; ++a) {
      if (act(g_table.identity(), a) != a) {
        throw VerificationFailure("identity acts non-trivially");
      }
    }
    for (index_t g = 0; g < group.size(); ++g) {
      for (index_t h = 0; h < group.size(); ++h) {
        for (index_t a = 0; a < n; ++a) {
          if (act(g_table.multiply(g, h), a) != act(g, act(h, a))) {
            throw VerificationFailure("action is not compatible with "
                                      "multiplication");
          }
        }
      }
      for (index_t a = 0; a < n; ++a) {
        for (index_t b = 0; b < n; ++b) {
          if (lattice.leq(a, b) != lattice.leq(act(g, a), act(g, b))) {
            throw VerificationFailure("group element "
                                      + g_table.label(g)
                                      + " is not an order automorphism");
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Built-in lattices
  ////////////////////////////////////////////////////////////////////////

  std::string_view lattice_kind_name(LatticeKind kind) {
    switch (kind) {
      case LatticeKind::subsets:
        return "subsets";
      case LatticeKind::set_partitions:
        return "partitions";
      case LatticeKind::ordered_partitions_zero:
        return "ordperm";
    }
    return "?";
  }

  LatticeKind lattice_kind_parse(std::string_view name) {
    if (name == "subsets") {
      return LatticeKind::subsets;
    } else if (name == "partitions") {
      return LatticeKind::set_partitions;
    } else if (name == "ordperm") {
      return LatticeKind::ordered_partitions_zero;
    }
    throw ParseError("unknown lattice kind \"" + std::string(name)
                     + "\" (expected subsets, partitions or ordperm)");
  }

  namespace {
    void set_partitions_rec(std::size_t        i,
                            std::size_t        n,
                            Blocks&            current,
                            std::vector<Blocks>& out) {
      if (i == n) {
        out.push_back(current);
        return;
      }
      for (std::size_t b = 0; b < current.size(); ++b) {
        current[b].push_back(static_cast<point_t>(i));
        set_partitions_rec(i + 1, n, current, out);
        current[b].pop_back();
      }
      current.push_back({static_cast<point_t>(i)});
      set_partitions_rec(i + 1, n, current, out);
      current.pop_back();
    }

    std::vector<Blocks> all_set_partitions(std::size_t n) {
      std::vector<Blocks> out;
      Blocks              current;
      set_partitions_rec(0, n, current, out);
      for (auto& p : out) {
        std::sort(p.begin(), p.end());
      }
      return out;
    }

    bool subset_of(std::vector<point_t> const& a, std::vector<point_t> const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    // Index of the block of `outer` containing `inner`, or -1.
    int containing_block(std::vector<point_t> const& inner, Blocks const& outer) {
      for (std::size_t j = 0; j < outer.size(); ++j) {
        if (subset_of(inner, outer[j])) {
          return static_cast<int>(j);
        }
      }
      return -1;
    }

    bool leq_blocks(LatticeKind                   kind,
                    std::optional<Blocks> const& x,
                    std::optional<Blocks> const& y) {
      if (!x) {
        return true;
      }
      if (!y) {
        return false;
      }
      switch (kind) {
        case LatticeKind::subsets:
          return subset_of((*x)[0], (*y)[0]);
        case LatticeKind::set_partitions:
          return std::all_of(x->begin(), x->end(), [&](auto const& blk) {
            return containing_block(blk, *y) >= 0;
          });
        case LatticeKind::ordered_partitions_zero: {
          // Each block lies in some block, and block order is respected:
          // if L_i in D_j and L_k in D_l with i < k then j <= l.
          int last = -1;
          for (auto const& blk : *x) {
            int const j = containing_block(blk, *y);
            if (j < 0 || j < last) {
              return false;
            }
            last = j;
          }
          return true;
        }
      }
      return false;
    }

    std::optional<Blocks> act_on(LatticeKind                   kind,
                                 Permutation const&            g,
                                 std::optional<Blocks> const& x) {
      if (!x) {
        return std::nullopt;
      }
      Blocks out = *x;
      for (auto& blk : out) {
        for (auto& p : blk) {
          p = g(p);
        }
        std::sort(blk.begin(), blk.end());
      }
      if (kind == LatticeKind::set_partitions) {
        std::sort(out.begin(), out.end());
      }
      return out;
    }

    std::string block_label(LatticeKind kind, std::optional<Blocks> const& x) {
      if (!x) {
        return "0";
      }
      std::ostringstream out;
      if (kind == LatticeKind::subsets) {
        out << '{';
        for (std::size_t i = 0; i < (*x)[0].size(); ++i) {
          out << (i == 0 ? "" : ",") << (*x)[0][i] + 1;
        }
        out << '}';
        return out.str();
      }
      out << (kind == LatticeKind::set_partitions ? '{' : '(');
      for (std::size_t b = 0; b < x->size(); ++b) {
        out << (b == 0 ? "" : ",");
        for (auto p : (*x)[b]) {
          out << p + 1;
        }
      }
      out << (kind == LatticeKind::set_partitions ? '}' : ')');
      return out.str();
    }
  }  // namespace

  index_t LatticeInstance::index_of(std::optional<Blocks> const& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x) {
      throw std::out_of_range("not a lattice element");
    }
    return static_cast<index_t>(it - elements.begin());
  }

  std::optional<Blocks> LatticeInstance::point_blocks(index_t a) const {
    auto const& x = elements.at(a);
    switch (kind) {
      case LatticeKind::subsets:
        return x;
      case LatticeKind::ordered_partitions_zero:
        return x ? *x : Blocks{};
      case LatticeKind::set_partitions:
        return std::nullopt;
    }
    return std::nullopt;
  }

  LatticeInstance make_lattice(LatticeKind                     kind,
                               std::size_t                     n,
                               std::vector<Permutation> const& group_generators) {
    if (n < 1 || n > kMaxLatticeDegree) {
      throw std::invalid_argument("lattice degree must be in 1.."
                                  + std::to_string(kMaxLatticeDegree));
    }
    std::vector<std::optional<Blocks>> elements;
    switch (kind) {
      case LatticeKind::subsets:
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
          std::vector<point_t> set;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) {
              set.push_back(static_cast<point_t>(i));
            }
          }
          elements.emplace_back(Blocks{set});
        }
        break;
      case LatticeKind::set_partitions:
        for (auto& p : all_set_partitions(n)) {
          elements.emplace_back(std::move(p));
        }
        break;
      case LatticeKind::ordered_partitions_zero:
        elements.emplace_back(std::nullopt);
        for (auto p : all_set_partitions(n)) {
          std::sort(p.begin(), p.end());
          do {
            elements.emplace_back(p);
          } while (std::next_permutation(p.begin(), p.end()));
        }
        break;
    }
    std::sort(elements.begin(), elements.end());

    std::size_t const        m = elements.size();
    std::vector<char>        leq(m * m);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
      labels.push_back(block_label(kind, elements[a]));
      for (std::size_t b = 0; b < m; ++b) {
        leq[a * m + b] = leq_blocks(kind, elements[a], elements[b]);
      }
    }
    FiniteLattice lattice(std::move(labels), std::move(leq));

    auto gens = group_generators.empty() ? symmetric_group_generators(n)
                                         : group_generators;
    GroupAction action{
        closure(
            gens,
            Permutation::identity(n),
            [](auto const& a, auto const& b) { return compose(a, b); },
            [](auto const& a) { return permutation_format(a); }),
        m,
        {}};
    LatticeInstance out{kind, n, std::move(elements), std::move(lattice), {}};
    action.table.resize(action.group.size() * m);
    for (index_t g = 0; g < action.group.size(); ++g) {
      for (index_t a = 0; a < m; ++a) {
        action.table[g * m + a]
            = out.index_of(act_on(kind, action.group[g], out.elements[a]));
      }
    }
    action.validate(out.lattice);
    out.action = std::move(action);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SGLMonoid
  ////////////////////////////////////////////////////////////////////////

  SGLMonoid::SGLMonoid(std::shared_ptr<LatticeInstance const> lattice)
      : _lattice(std::move(lattice)) {
    auto const&       L  = _lattice->lattice;
    auto const&       G  = group_table();
    std::size_t const ng = G.size();
    _group_inverse.resize(ng);
    for (index_t g = 0; g < ng; ++g) {
      for (index_t h = 0; h < ng; ++h) {
        if (G.multiply(g, h) == G.identity()) {
          _group_inverse[g] = h;
        }
      }
    }
    _pointwise.resize(L.size());
    _canon.resize(L.size() * ng);
    for (index_t a = 0; a < L.size(); ++a) {
      auto const down = L.down_set(a);
      for (index_t g = 0; g < ng; ++g) {
        if (std::all_of(down.begin(), down.end(), [&](index_t c) {
              return _lattice->action.act(g, c) == c;
            })) {
          _pointwise[a].push_back(g);
        }
      }
      for (index_t g = 0; g < ng; ++g) {
        index_t least = g;
        for (index_t k : _pointwise[a]) {
          least = std::min(least, G.multiply(g, k));
        }
        _canon[a * ng + g] = least;
      }
    }
  }

  StabilizerPair SGLMonoid::stabilizers(index_t a) const {
    auto const&    G = group_table();
    StabilizerPair out;
    for (index_t g = 0; g < G.size(); ++g) {
      if (_lattice->action.act(g, a) == a) {
        out.full.push_back(g);
      }
    }
    out.pointwise = _pointwise.at(a);
    // pointwise is a normal subgroup of full.
    for (index_t g : out.full) {
      for (index_t k : out.pointwise) {
        index_t const conj
            = G.multiply(G.multiply(g, k), _group_inverse[g]);
        if (!std::binary_search(
                out.pointwise.begin(), out.pointwise.end(), conj)) {
          throw VerificationFailure("pointwise stabiliser is not normal");
        }
      }
      if (!std::binary_search(out.full.begin(), out.full.end(), g)) {
        throw VerificationFailure("pointwise stabiliser not contained");
      }
    }
    for (index_t k : out.pointwise) {
      if (!std::binary_search(out.full.begin(), out.full.end(), k)) {
        throw VerificationFailure("pointwise stabiliser not contained");
      }
    }
    return out;
  }

  bool SGLMonoid::same_element(index_t g, index_t a, index_t h, index_t b) const {
    if (a != b) {
      return false;
    }
    auto const&   G = group_table();
    index_t const k = G.multiply(_group_inverse[g], h);
    for (index_t c : _lattice->lattice.down_set(a)) {
      if (_lattice->action.act(k, c) != c) {
        return false;
      }
    }
    return true;
  }

  SGLElement SGLMonoid::multiply(SGLElement x, SGLElement y) const {
    auto const&   G = group_table();
    index_t const c = _lattice->lattice.meet(
        _lattice->action.act(_group_inverse[y.g], x.a), y.a);
    return canonical(G.multiply(x.g, y.g), c);
  }

  SGLElement SGLMonoid::inverse(SGLElement x) const {
    return canonical(_group_inverse[x.g], _lattice->action.act(x.g, x.a));
  }

  SGLElement SGLMonoid::identity() const {
    return canonical(group_table().identity(), _lattice->lattice.top());
  }

  std::string SGLMonoid::label(SGLElement x) const {
    return group_table().label(x.g) + "_" + _lattice->lattice.label(x.a);
  }

  Enumerated<SGLElement> SGLMonoid::enumerate(std::size_t cap) const {
    std::vector<SGLElement> gens;
    auto const&             L = _lattice->lattice;
    for (auto g : group_table().generators()) {
      gens.push_back(canonical(g, L.top()));
    }
    for (index_t a = 0; a < L.size(); ++a) {
      gens.push_back(canonical(group_table().identity(), a));
    }
    return closure(
        gens,
        identity(),
        [this](SGLElement x, SGLElement y) { return multiply(x, y); },
        [this](SGLElement x) { return label(x); },
        cap);
  }

  OrderReport SGLMonoid::order() const {
    OrderReport out;
    std::size_t const ng = group_table().size();
    for (index_t a = 0; a < _lattice->lattice.size(); ++a) {
      out.index_per_element.push_back(ng / _pointwise[a].size());
      out.formula += out.index_per_element.back();
    }
    out.enumerated = enumerate().size();
    if (out.formula != out.enumerated) {
      throw VerificationFailure("|S(G,L)| formula gives "
                                + std::to_string(out.formula)
                                + " but enumeration gives "
                                + std::to_string(out.enumerated));
    }
    return out;
  }

  QuotientGroup SGLMonoid::maximal_subgroup_at(index_t a) const {
    QuotientGroup out{a, {}, nullptr};
    for (index_t g : stabilizers(a).full) {
      out.representatives.push_back(canonical(g, a).g);
    }
    std::sort(out.representatives.begin(), out.representatives.end());
    out.representatives.erase(
        std::unique(out.representatives.begin(), out.representatives.end()),
        out.representatives.end());
    std::size_t const    k = out.representatives.size();
    std::vector<index_t> table(k * k);
    auto const&          G = group_table();
    auto pos = [&](index_t g) {
      return static_cast<index_t>(
          std::lower_bound(
              out.representatives.begin(), out.representatives.end(), g)
          - out.representatives.begin());
    };
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = pos(
            canonical(G.multiply(out.representatives[i], out.representatives[j]), a)
                .g);
      }
    }
    std::vector<std::string> labels;
    for (auto g : out.representatives) {
      labels.push_back(G.label(g));
    }
    std::vector<index_t> gens(k);
    std::iota(gens.begin(), gens.end(), 0);
    auto group = std::make_shared<FiniteMonoid>(
        k, std::move(table), pos(canonical(G.identity(), a).g), std::move(gens),
        std::move(labels));
    group->validate();
    out.group = std::move(group);
    return out;
  }

  std::size_t young_index_sum(LatticeInstance const& lattice) {
    if (lattice.kind != LatticeKind::set_partitions) {
      throw std::invalid_argument("young_index_sum needs the partition lattice");
    }
    auto factorial = [](std::size_t k) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        f *= i;
      }
      return f;
    };
    std::size_t total = 0;
    for (auto const& x : lattice.elements) {
      std::size_t young = 1;
      for (auto const& blk : *x) {
        young *= factorial(blk.size());
      }
      total += factorial(lattice.degree) / young;
    }
    return total;
  }

}  // namespace munn
