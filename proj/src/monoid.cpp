#include "munn/monoid.hpp"

#include <random>

namespace munn {

  FiniteMonoid::FiniteMonoid(std::size_t              size,
                             std::vector<index_t>     table,
                             index_t                  identity,
                             std::vector<index_t>     generators,
                             std::vector<std::string> labels)
      : _size(size),
        _table(std::move(table)),
        _identity(identity),
        _generators(std::move(generators)),
        _labels(std::move(labels)) {
    if (_size == 0 || _table.size() != _size * _size || _identity >= _size) {
      throw std::invalid_argument("FiniteMonoid: inconsistent table");
    }
    if (!_labels.empty() && _labels.size() != _size) {
      throw std::invalid_argument("FiniteMonoid: label count mismatch");
    }
  }

  std::string FiniteMonoid::label(index_t x) const {
    return _labels.empty() ? "#" + std::to_string(x) : _labels.at(x);
  }

  std::vector<index_t> FiniteMonoid::idempotents() const {
    std::vector<index_t> out;
    for (index_t x = 0; x < _size; ++x) {
      if (is_idempotent(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  void FiniteMonoid::validate() const {
    for (auto v : _table) {
      if (v >= _size) {
        throw VerificationFailure("multiplication table not closed");
      }
    }
    for (index_t x = 0; x < _size; ++x) {
      if (multiply(x, _identity) != x || multiply(_identity, x) != x) {
        throw VerificationFailure("identity law fails at element "
                                  + label(x));
      }
    }
    auto check = [this](index_t x, index_t y, index_t z) {
      if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
        throw VerificationFailure("associativity fails at (" + label(x)
                                  + ", " + label(y) + ", " + label(z) + ")");
      }
    };
    if (_size <= kFullAssociativityCheck) {
      for (index_t x = 0; x < _size; ++x) {
        for (index_t y = 0; y < _size; ++y) {
          for (index_t z = 0; z < _size; ++z) {
            check(x, y, z);
          }
        }
      }
    } else {
      std::mt19937_64                        rng(0x5eed);
      std::uniform_int_distribution<index_t> pick(
          0, static_cast<index_t>(_size - 1));
      for (int i = 0; i < 200000; ++i) {
        check(pick(rng), pick(rng), pick(rng));
      }
    }
  }

  bool FiniteMonoid::same_structure(FiniteMonoid const& that) const {
    return this == &that
           || (_size == that._size && _identity == that._identity
               && _table == that._table);
  }

  MonoidPtr direct_product(std::vector<MonoidPtr> const& factors) {
    std::size_t n = 1;
    for (auto const& f : factors) {
      n *= f->size();
    }
    // coords[x] holds the factor indices of element x.
    std::vector<std::vector<index_t>> coords(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t rest = x;
      coords[x].resize(factors.size());
      for (std::size_t i = factors.size(); i-- > 0;) {
        coords[x][i] = static_cast<index_t>(rest % factors[i]->size());
        rest /= factors[i]->size();
      }
    }
    std::vector<index_t> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::vector<index_t> c(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
          c[i] = factors[i]->multiply(coords[x][i], coords[y][i]);
        }
        table[x * n + y] = product_index(factors, c);
      }
    }
    std::vector<index_t> id(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      id[i] = factors[i]->identity();
    }
    std::vector<index_t> gens;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (auto g : factors[i]->generators()) {
        auto c = id;
        c[i]   = g;
        gens.push_back(product_index(factors, c));
      }
    }
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        s += (i == 0 ? "" : "x") + factors[i]->label(coords[x][i]);
      }
      labels.push_back(factors.empty() ? "1" : s);
    }
    return std::make_shared<FiniteMonoid>(n,
                                          std::move(table),
                                          product_index(factors, id),
                                          std::move(gens),
                                          std::move(labels));
  }

  index_t product_index(std::vector<MonoidPtr> const& factors,
                        std::vector<index_t> const&   coords) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      x = x * factors[i]->size() + coords[i];
    }
    return static_cast<index_t>(x);
  }

  std::vector<Permutation> symmetric_group_generators(std::size_t n) {
    if (n < 2) {
      return {Permutation::identity(n)};
    }
    return {Permutation::transposition(n, 0, 1), Permutation::long_cycle(n)};
  }

  Enumerated<Permutation> symmetric_group(std::size_t n, std::size_t cap) {
    return closure(
        symmetric_group_generators(n),
        Permutation::identity(n),
        [](auto const& a, auto const& b) { return compose(a, b); },
        [](auto const& a) { return permutation_format(a); },
        cap);
  }

  Enumerated<PartialBijection> symmetric_inverse_monoid(std::size_t n, std::size_t cap) {
    std::vector<PartialBijection> gens;
    for (auto const& p : symmetric_group_generators(n)) {
      gens.push_back(p.as_partial_bijection());
    }
    // id on [n-1]; for n = 1 this is the zero map.
    std::vector<point_t> dom(n - 1);
    std::iota(dom.begin(), dom.end(), 0);
    gens.push_back(PartialBijection::partial_identity(n, dom));
    return closure(
        gens,
        PartialBijection::identity(n),
        [](auto const& a, auto const& b) { return compose(a, b); },
        [](auto const& a) { return cycle_link_format(a); },
        cap);
  }

  Enumerated<Transformation> full_transformation_monoid(std::size_t n, std::size_t cap) {
    std::vector<Transformation> gens;
    for (auto const& p : symmetric_group_generators(n)) {
      gens.push_back(p.as_transformation());
    }
    if (n >= 2) {
      // 2 -> 1, everything else fixed.
      auto images = Transformation::identity(n).images();
      images[1]   = 0;
      gens.emplace_back(images);
    }
    return closure(
        gens,
        Transformation::identity(n),
        [](auto const& a, auto const& b) { return compose(a, b); },
        [](auto const& a) { return transformation_format(a); },
        cap);
  }

  MonoidPtr restrict_monoid(FiniteMonoid const&         m,
                            std::vector<index_t> const& members,
                            index_t                     identity) {
    std::map<index_t, index_t> local;
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[members[i]] = static_cast<index_t>(i);
    }
    std::size_t const    n = members.size();
    std::vector<index_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = local.find(m.multiply(members[i], members[j]));
        if (it == local.end()) {
          throw VerificationFailure("restrict_monoid: subset not closed");
        }
        table[i * n + j] = it->second;
      }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(m.label(members[i]));
    }
    // Greedy generating set: keep an element iff it is not yet reached.
    std::vector<index_t> gens;
    std::vector<bool>    reached(n, false);
    reached[local.at(identity)] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (reached[i]) {
        continue;
      }
      gens.push_back(static_cast<index_t>(i));
      std::vector<index_t> frontier;
      for (std::size_t x = 0; x < n; ++x) {
        if (reached[x]) {
          frontier.push_back(static_cast<index_t>(x));
        }
      }
      while (!frontier.empty()) {
        index_t const x = frontier.back();
        frontier.pop_back();
        for (auto g : gens) {
          index_t const y = table[x * n + g];
          if (!reached[y]) {
            reached[y] = true;
            frontier.push_back(y);
          }
        }
      }
    }
    return std::make_shared<FiniteMonoid>(
        n, std::move(table), local.at(identity), std::move(gens), std::move(labels));
  }

}  // namespace munn
