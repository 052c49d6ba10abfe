#pragma once

// Enumerated finite monoids: a dense multiplication table over element
// indices, plus a closure engine that produces one from generators.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "munn/elements.hpp"
#include "munn/errors.hpp"
#include "munn/kernels.hpp"

namespace munn {

  inline constexpr std::size_t kDefaultElementCap = 100000;

  class FiniteMonoid {
   public:
    FiniteMonoid(std::size_t          size,
                 std::vector<index_t> table,
                 index_t              identity,
                 std::vector<index_t> generators,
                 std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return _size;
    }
    index_t multiply(index_t x, index_t y) const {
      return _table[static_cast<std::size_t>(x) * _size + y];
    }
    index_t identity() const noexcept {
      return _identity;
    }
    std::vector<index_t> const& generators() const noexcept {
      return _generators;
    }
    std::vector<index_t> const& table() const noexcept {
      return _table;
    }
    // Element names for reports; falls back to "#i".
    std::string label(index_t x) const;

    bool is_idempotent(index_t x) const {
      return multiply(x, x) == x;
    }
    std::vector<index_t> idempotents() const;

    // Table closed, identity laws, associativity (exhaustive up to
    // kFullAssociativityCheck elements, sampled beyond). Throws
    // VerificationFailure.
    void validate() const;

    // Same table and identity (labels and generators are not compared).
    bool same_structure(FiniteMonoid const& that) const;

    static constexpr std::size_t kFullAssociativityCheck = 200;

   private:
    std::size_t              _size;
    std::vector<index_t>     _table;
    index_t                  _identity;
    std::vector<index_t>     _generators;
    std::vector<std::string> _labels;
  };

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  // Generators of the direct product are the images of each factor's
  // generators; elements are ordered lexicographically by factor index.
  MonoidPtr direct_product(std::vector<MonoidPtr> const& factors);
  // Index of (i_1, ..., i_k) in the direct product.
  index_t product_index(std::vector<MonoidPtr> const& factors,
                        std::vector<index_t> const&   coords);

  template <typename T>
  struct Enumerated {
    MonoidPtr      monoid;
    std::vector<T> elements;  // sorted canonically; index = position

    index_t index_of(T const& x) const {
      auto it = std::lower_bound(elements.begin(), elements.end(), x);
      if (it == elements.end() || !(*it == x)) {
        throw std::out_of_range("element not in the monoid");
      }
      return static_cast<index_t>(it - elements.begin());
    }
    bool contains(T const& x) const {
      return std::binary_search(elements.begin(), elements.end(), x);
    }
    T const& operator[](index_t i) const {
      return elements[i];
    }
    std::size_t size() const noexcept {
      return elements.size();
    }
  };

  // Breadth-first product closure. The result is sorted by T's ordering,
  // so two runs on the same generators agree exactly. Throws CapExceeded.
  template <typename T, typename Multiply, typename Label>
  Enumerated<T> closure(std::vector<T> const& generators,
                        T const&              identity,
                        Multiply&&            multiply,
                        Label&&               label,
                        std::size_t           cap = kDefaultElementCap) {
    std::vector<T> gens = generators;
    if (gens.empty()) {
      throw std::invalid_argument("closure: empty generator list");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<T>               found{identity};
    std::map<T, index_t>         lookup{{identity, 0}};
    std::vector<index_t>         parent{0};
    std::vector<index_t>         via{0};
    std::vector<index_t>         right;
    std::size_t const            k = gens.size();
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        T    y        = multiply(found[i], gens[g]);
        auto [it, ok] = lookup.try_emplace(y, static_cast<index_t>(found.size()));
        if (ok) {
          if (found.size() >= cap) {
            throw CapExceeded("closure exceeded the element cap of "
                              + std::to_string(cap));
          }
          found.push_back(std::move(y));
          parent.push_back(static_cast<index_t>(i));
          via.push_back(static_cast<index_t>(g));
        }
        right.push_back(it->second);
      }
    }

    // Renumber into canonical order; std::map iteration is already sorted.
    std::size_t const    n = found.size();
    std::vector<index_t> rank(n);
    Enumerated<T>        out;
    out.elements.reserve(n);
    for (auto const& [value, old] : lookup) {
      rank[old] = static_cast<index_t>(out.elements.size());
      out.elements.push_back(value);
    }
    kernels::CayleyTree tree;
    tree.size       = n;
    tree.generators = k;
    tree.right.resize(n * k);
    tree.parent.resize(n);
    tree.via.resize(n);
    for (std::size_t old = 0; old < n; ++old) {
      for (std::size_t g = 0; g < k; ++g) {
        tree.right[rank[old] * k + g] = rank[right[old * k + g]];
      }
      tree.order.push_back(rank[old]);
      tree.parent[rank[old]] = rank[parent[old]];
      tree.via[rank[old]]    = via[old];
    }
    std::vector<index_t> gen_indices;
    for (auto const& g : gens) {
      gen_indices.push_back(rank[lookup.at(g)]);
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto const& x : out.elements) {
      labels.push_back(label(x));
    }
    auto monoid = std::make_shared<FiniteMonoid>(n,
                                                 kernels::fill_table(tree),
                                                 rank[0],
                                                 std::move(gen_indices),
                                                 std::move(labels));
    monoid->validate();
    out.monoid = std::move(monoid);
    return out;
  }

  // The standard desk-scale families, generated by (1 2), (1 2 ... n) and,
  // for I_n and T_n, one rank-(n-1) element.
  Enumerated<Permutation> symmetric_group(std::size_t n,
                                          std::size_t cap = kDefaultElementCap);
  Enumerated<PartialBijection> symmetric_inverse_monoid(std::size_t n,
                                                        std::size_t cap = kDefaultElementCap);
  Enumerated<Transformation> full_transformation_monoid(std::size_t n,
                                                        std::size_t cap = kDefaultElementCap);

  std::vector<Permutation> symmetric_group_generators(std::size_t n);

  // Sub-monoid on the given indices (which must be closed under
  // multiplication and contain `identity`), renumbered in the given order.
  MonoidPtr restrict_monoid(FiniteMonoid const&          m,
                            std::vector<index_t> const&  members,
                            index_t                      identity);

}  // namespace munn
