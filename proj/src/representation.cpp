#include "munn/representation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>

#include "munn/kernels.hpp"

namespace munn {

  Representation::Representation(MonoidPtr           monoid,
                                 std::size_t         dim,
                                 std::vector<Matrix> matrices)
      : _monoid(std::move(monoid)), _dim(dim), _matrices(std::move(matrices)) {
    if (_dim == 0) {
      throw std::invalid_argument("representations must be non-zero");
    }
    if (_matrices.size() != _monoid->size()) {
      throw std::invalid_argument("one matrix per monoid element is needed");
    }
    for (auto const& m : _matrices) {
      if (m.rows() != _dim || m.cols() != _dim) {
        throw std::invalid_argument("matrix has the wrong shape");
      }
    }
    if (!_matrices[_monoid->identity()].is_identity()) {
      throw VerificationFailure("the identity does not act as the identity");
    }
    for (index_t x = 0; x < _monoid->size(); ++x) {
      for (index_t g : _monoid->generators()) {
        if (_matrices[_monoid->multiply(x, g)] != _matrices[x] * _matrices[g]) {
          throw VerificationFailure("not multiplicative at ("
                                    + _monoid->label(x) + ", "
                                    + _monoid->label(g) + ")");
        }
      }
    }
  }

  Representation Representation::from_generators(
      MonoidPtr                  monoid,
      std::size_t                dim,
      std::vector<Matrix> const& generator_images) {
    auto const& gens = monoid->generators();
    if (generator_images.size() != gens.size()) {
      throw std::invalid_argument("one image per generator is needed");
    }
    std::vector<Matrix> mats(monoid->size());
    std::vector<bool>   done(monoid->size(), false);
    std::deque<index_t> queue{monoid->identity()};
    mats[monoid->identity()] = Matrix::identity(dim);
    done[monoid->identity()] = true;
    while (!queue.empty()) {
      index_t const x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        index_t const y = monoid->multiply(x, gens[k]);
        if (!done[y]) {
          done[y] = true;
          mats[y] = mats[x] * generator_images[k];
          queue.push_back(y);
        }
      }
    }
    if (std::find(done.begin(), done.end(), false) != done.end()) {
      throw std::invalid_argument("the generators do not generate the monoid");
    }
    return Representation(std::move(monoid), dim, std::move(mats));
  }

  Representation Representation::trivial(MonoidPtr monoid) {
    std::vector<Matrix> mats(monoid->size(), Matrix::identity(1));
    return Representation(std::move(monoid), 1, std::move(mats));
  }

  void Representation::verify_all_pairs() const {
    auto bad = kernels::homomorphism_failure(
        _monoid->table(), _monoid->size(), _matrices);
    if (bad) {
      throw VerificationFailure("not multiplicative at ("
                                + _monoid->label(bad->first) + ", "
                                + _monoid->label(bad->second) + ")");
    }
  }

  Character character(Representation const& rep) {
    Character out;
    out.reserve(rep.monoid().size());
    for (auto const& m : rep.matrices()) {
      out.push_back(m.trace());
    }
    return out;
  }

  bool char_equal(Character const& a, Character const& b) {
    return a == b;
  }

  void require_same_monoid(Representation const& a, Representation const& b) {
    if (!a.monoid().same_structure(b.monoid())) {
      throw std::invalid_argument("representations of different monoids");
    }
  }

  Subspace spin(Representation const& rep, std::vector<Vector> const& seeds) {
    EchelonBasis        basis(rep.dim());
    std::vector<Vector> frontier;
    for (auto const& v : seeds) {
      if (v.size() != rep.dim()) {
        throw std::invalid_argument("spin: seed of the wrong length");
      }
      if (basis.add(v)) {
        frontier.push_back(v);
      }
    }
    while (!frontier.empty() && basis.rank() < rep.dim()) {
      Vector v = std::move(frontier.back());
      frontier.pop_back();
      for (index_t g : rep.monoid().generators()) {
        Vector w = rep(g) * v;
        if (basis.add(w)) {
          frontier.push_back(std::move(w));
        }
      }
    }
    return Subspace::span(rep.dim(), basis.rows());
  }

  bool is_invariant(Representation const& rep, Subspace const& u) {
    for (auto const& b : u.basis()) {
      for (index_t g : rep.monoid().generators()) {
        if (!u.contains(rep(g) * b)) {
          return false;
        }
      }
    }
    return true;
  }

  Representation restrict_to(Representation const& rep, Subspace const& u) {
    if (u.dim() == 0 || u.ambient() != rep.dim()) {
      throw std::invalid_argument("restrict_to: need a non-zero subspace of V");
    }
    if (!is_invariant(rep, u)) {
      throw std::invalid_argument("restrict_to: subspace is not invariant");
    }
    std::size_t const   k = u.dim();
    std::vector<Matrix> mats;
    mats.reserve(rep.monoid().size());
    for (auto const& m : rep.matrices()) {
      Matrix r(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        auto c = u.coordinates(m * u.basis()[j]);
        for (std::size_t i = 0; i < k; ++i) {
          r(i, j) = c[i];
        }
      }
      mats.push_back(std::move(r));
    }
    return Representation(rep.monoid_ptr(), k, std::move(mats));
  }

  Representation quotient(Representation const& rep, Subspace const& u) {
    if (u.ambient() != rep.dim()) {
      throw std::invalid_argument("quotient: subspace of the wrong ambient");
    }
    if (u.dim() == rep.dim()) {
      throw std::invalid_argument("quotient: V/V is the zero representation");
    }
    if (!is_invariant(rep, u)) {
      throw std::invalid_argument("quotient: subspace is not invariant");
    }
    std::vector<bool> pivot(rep.dim(), false);
    for (auto p : u.pivots()) {
      pivot[p] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < rep.dim(); ++i) {
      if (!pivot[i]) {
        free.push_back(i);
      }
    }
    std::size_t const   k = free.size();
    std::vector<Matrix> mats;
    mats.reserve(rep.monoid().size());
    for (auto const& m : rep.matrices()) {
      Matrix q(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        // Reduction modulo U clears the pivot columns; what is left are
        // the quotient coordinates.
        Vector w = u.reduce(m.column(free[j]));
        for (std::size_t i = 0; i < k; ++i) {
          q(i, j) = w[free[i]];
        }
      }
      mats.push_back(std::move(q));
    }
    return Representation(rep.monoid_ptr(), k, std::move(mats));
  }

  Representation direct_sum(Representation const& a, Representation const& b) {
    require_same_monoid(a, b);
    std::vector<Matrix> mats;
    mats.reserve(a.monoid().size());
    for (index_t x = 0; x < a.monoid().size(); ++x) {
      mats.push_back(block_diagonal(a(x), b(x)));
    }
    return Representation(a.monoid_ptr(), a.dim() + b.dim(), std::move(mats));
  }

  namespace {
    // Solutions X (rows x cols) of X A_g = B_g X for all generators g.
    std::vector<Matrix> solve_intertwining(Representation const& v,
                                           Representation const& u) {
      std::size_t const rows = u.dim(), cols = v.dim();
      std::size_t const unknowns = rows * cols;
      EchelonBasis      eqs(unknowns);
      for (index_t g : v.monoid().generators()) {
        Matrix const& a = v(g);
        Matrix const& b = u(g);
        for (std::size_t i = 0; i < rows && eqs.rank() < unknowns; ++i) {
          for (std::size_t k = 0; k < cols && eqs.rank() < unknowns; ++k) {
            // (X A)_{ik} - (B X)_{ik}
            Vector row(unknowns);
            for (std::size_t j = 0; j < cols; ++j) {
              row[i * cols + j] += a(j, k);
            }
            for (std::size_t j = 0; j < rows; ++j) {
              row[j * cols + k] -= b(i, j);
            }
            if (!is_zero(row)) {
              eqs.add(row);
            }
          }
        }
      }
      std::vector<Matrix> out;
      for (auto const& sol : eqs.null_space()) {
        Matrix x(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          for (std::size_t j = 0; j < cols; ++j) {
            x(i, j) = sol[i * cols + j];
          }
        }
        out.push_back(std::move(x));
      }
      return out;
    }

    bool is_unit(FiniteMonoid const& m, index_t x) {
      for (index_t y = 0; y < m.size(); ++y) {
        if (m.multiply(x, y) == m.identity() && m.multiply(y, x) == m.identity()) {
          return true;
        }
      }
      return false;
    }

    Matrix shifted(Matrix m, Rational const& c) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, i) -= c;
      }
      return m;
    }
  }  // namespace

  std::size_t commutant_dim(Representation const& rep) {
    return solve_intertwining(rep, rep).size();
  }

  std::vector<Matrix> intertwiner_space(Representation const& v,
                                        Representation const& u) {
    require_same_monoid(v, u);
    return solve_intertwining(v, u);
  }

  std::vector<Subspace> one_dim_invariant_lines(Representation const& rep) {
    auto const& m    = rep.monoid();
    auto const& gens = m.generators();
    // Eigenspaces per generator and admissible eigenvalue.
    std::vector<std::vector<Subspace>> spaces(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::vector<int> values;
      if (m.is_idempotent(gens[k])) {
        values = {0, 1};
      } else if (is_unit(m, gens[k])) {
        values = {-1, 1};
      } else {
        values = {-1, 0, 1};
      }
      for (int c : values) {
        auto ker = kernel(shifted(rep(gens[k]), Rational(c)));
        if (ker.dim() > 0) {
          spaces[k].push_back(std::move(ker));
        }
      }
    }
    std::vector<Subspace>                              out;
    std::function<void(std::size_t, Subspace const&)> rec
        = [&](std::size_t k, Subspace const& current) {
            if (k == gens.size()) {
              out.push_back(current);
              return;
            }
            for (auto const& s : spaces[k]) {
              auto next = current.intersect(s);
              if (next.dim() > 0) {
                rec(k + 1, next);
              }
            }
          };
    rec(0, Subspace::whole(rep.dim()));
    return out;
  }

  std::vector<Vector> search_seeds(Representation const& rep) {
    std::set<Vector> seen;
    std::vector<Vector> out;
    auto push = [&](Vector const& v) {
      if (!is_zero(v) && seen.insert(v).second) {
        out.push_back(v);
      }
    };
    for (std::size_t i = 0; i < rep.dim(); ++i) {
      Vector e(rep.dim());
      e[i] = 1;
      push(e);
    }
    for (auto const& m : rep.matrices()) {
      for (int c : {-1, 0, 1}) {
        auto const ker = kernel(shifted(m, Rational(c)));
        for (auto const& v : ker.basis()) {
          push(v);
        }
      }
    }
    return out;
  }

  std::optional<Subspace> find_invariant_subspace(Representation const& rep) {
    if (rep.dim() == 1) {
      return std::nullopt;
    }
    auto lines = one_dim_invariant_lines(rep);
    if (!lines.empty()) {
      return Subspace::span(rep.dim(), {lines.front().basis().front()});
    }
    for (auto const& seed : search_seeds(rep)) {
      auto s = spin(rep, {seed});
      if (s.dim() > 0 && s.dim() < rep.dim()) {
        return s;
      }
    }
    return std::nullopt;
  }

  IrreducibilityResult is_irreducible(Representation const& rep) {
    if (rep.dim() == 1) {
      return {Verdict::yes, std::nullopt};
    }
    if (auto w = find_invariant_subspace(rep)) {
      return {Verdict::no, std::move(w)};
    }
    return {Verdict::undetermined, std::nullopt};
  }

  IrreducibilityResult is_irreducible(Representation const&        rep,
                                      SemisimpleCertificate const& cert) {
    if (!cert.covers(rep.monoid())) {
      throw std::invalid_argument("semisimplicity certificate is for "
                                  "another monoid");
    }
    if (commutant_dim(rep) == 1) {
      return {Verdict::yes, std::nullopt};
    }
    return {Verdict::no, find_invariant_subspace(rep)};
  }

  IsoResult iso_test(Representation const&        v,
                     Representation const&        u,
                     SemisimpleCertificate const* cert) {
    require_same_monoid(v, u);
    if (v.dim() != u.dim() || !char_equal(character(v), character(u))) {
      return {Verdict::no, std::nullopt};
    }
    auto basis = solve_intertwining(v, u);
    if (basis.empty()) {
      return {Verdict::no, std::nullopt};
    }
    auto try_combo = [&](std::vector<int> const& coeffs) -> std::optional<Matrix> {
      Matrix x(u.dim(), v.dim());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i] != 0) {
          x = x + Rational(coeffs[i]) * basis[i];
        }
      }
      if (determinant(x) != 0) {
        return x;
      }
      return std::nullopt;
    };
    std::size_t const k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<int> c(k, 0);
      c[i] = 1;
      if (auto x = try_combo(c)) {
        return {Verdict::yes, std::move(x)};
      }
    }
    if (k <= 4) {
      std::vector<int> c(k, -2);
      while (true) {
        if (auto x = try_combo(c)) {
          return {Verdict::yes, std::move(x)};
        }
        std::size_t i = 0;
        while (i < k && c[i] == 2) {
          c[i++] = -2;
        }
        if (i == k) {
          break;
        }
        ++c[i];
      }
    } else {
      std::mt19937                    rng(0x150);
      std::uniform_int_distribution<> pick(-2, 2);
      for (int trial = 0; trial < 256; ++trial) {
        std::vector<int> c(k);
        for (auto& ci : c) {
          ci = pick(rng);
        }
        if (auto x = try_combo(c)) {
          return {Verdict::yes, std::move(x)};
        }
      }
    }
    if (cert != nullptr && cert->covers(v.monoid())) {
      return {Verdict::yes, std::nullopt};
    }
    return {Verdict::undetermined, std::nullopt};
  }

  namespace {
    std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t p) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              cur;
      std::function<void(std::size_t)>      rec = [&](std::size_t start) {
        if (cur.size() == p) {
          out.push_back(cur);
          return;
        }
        for (std::size_t i = start; i < n; ++i) {
          cur.push_back(i);
          rec(i + 1);
          cur.pop_back();
        }
      };
      rec(0);
      return out;
    }
  }  // namespace

  Representation exterior_power(Representation const& rep, std::size_t p) {
    if (p > rep.dim()) {
      throw std::invalid_argument("exterior_power: p exceeds the dimension");
    }
    auto const          subsets = lex_subsets(rep.dim(), p);
    std::size_t const   k       = subsets.size();
    std::vector<Matrix> mats;
    mats.reserve(rep.monoid().size());
    for (auto const& m : rep.matrices()) {
      Matrix w(k, k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
          Matrix minor(p, p);
          for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) {
              minor(i, j) = m(subsets[r][i], subsets[c][j]);
            }
          }
          w(r, c) = determinant(minor);
        }
      }
      mats.push_back(std::move(w));
    }
    return Representation(rep.monoid_ptr(), k, std::move(mats));
  }

  Representation outer_tensor(Representation const& v, Representation const& u) {
    auto product = direct_product({v.monoid_ptr(), u.monoid_ptr()});
    std::vector<Matrix> mats(product->size());
    for (index_t x = 0; x < v.monoid().size(); ++x) {
      for (index_t y = 0; y < u.monoid().size(); ++y) {
        mats[product_index({v.monoid_ptr(), u.monoid_ptr()}, {x, y})]
            = kronecker(v(x), u(y));
      }
    }
    return Representation(product, v.dim() * u.dim(), std::move(mats));
  }

  namespace {
    template <typename T>
    Representation mapping_rep_impl(Enumerated<T> const& m) {
      std::size_t const   n = m.elements.front().degree();
      std::vector<Matrix> mats;
      mats.reserve(m.size());
      for (auto const& s : m.elements) {
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          point_t const j = s(static_cast<point_t>(i));
          if (j != kUndefined) {
            a(static_cast<std::size_t>(j), i) = 1;
          }
        }
        mats.push_back(std::move(a));
      }
      return Representation(m.monoid, n, std::move(mats));
    }
  }  // namespace

  Representation mapping_rep(Enumerated<Permutation> const& sn) {
    return mapping_rep_impl(sn);
  }
  Representation mapping_rep(Enumerated<PartialBijection> const& in) {
    return mapping_rep_impl(in);
  }
  Representation mapping_rep(Enumerated<Transformation> const& tn) {
    return mapping_rep_impl(tn);
  }

}  // namespace munn
