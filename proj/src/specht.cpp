#include "munn/specht.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace munn {

  namespace {
    void partitions_rec(std::size_t                    rest,
                        std::size_t                    max_part,
                        IntegerPartition&              current,
                        std::vector<IntegerPartition>& out) {
      if (rest == 0) {
        out.push_back(current);
        return;
      }
      for (std::size_t k = std::min(rest, max_part); k >= 1; --k) {
        current.push_back(k);
        partitions_rec(rest - k, k, current, out);
        current.pop_back();
      }
    }

    void compositions_rec(std::size_t               rest,
                          Composition&              current,
                          std::vector<Composition>& out) {
      if (rest == 0) {
        out.push_back(current);
        return;
      }
      for (std::size_t k = rest; k >= 1; --k) {
        current.push_back(k);
        compositions_rec(rest - k, current, out);
        current.pop_back();
      }
    }

    std::size_t position_of(std::vector<point_t> const& labels, point_t x) {
      auto it = std::lower_bound(labels.begin(), labels.end(), x);
      if (it == labels.end() || *it != x) {
        throw std::invalid_argument("entry is not one of the labels");
      }
      return static_cast<std::size_t>(it - labels.begin());
    }

    void check_labels(IntegerPartition const&     shape,
                      std::vector<point_t> const& labels) {
      if (!std::is_sorted(labels.begin(), labels.end())
          || std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw std::invalid_argument("labels must be sorted and distinct");
      }
      if (std::accumulate(shape.begin(), shape.end(), std::size_t(0))
          != labels.size()) {
        throw std::invalid_argument("shape size differs from the label count");
      }
      if (!std::is_sorted(shape.rbegin(), shape.rend())
          || std::find(shape.begin(), shape.end(), 0) != shape.end()) {
        throw std::invalid_argument("not a partition: "
                                    + partition_format(shape));
      }
    }
  }  // namespace

  std::vector<IntegerPartition> partitions(std::size_t n) {
    std::vector<IntegerPartition> out;
    IntegerPartition              current;
    partitions_rec(n, n, current, out);
    return out;
  }

  std::size_t p_count(std::size_t n) {
    // Coefficients of prod_{k=1}^{n} 1/(1 - x^k) up to x^n.
    std::vector<std::size_t> coeff(n + 1, 0);
    coeff[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = k; i <= n; ++i) {
        coeff[i] += coeff[i - k];
      }
    }
    std::size_t const count = partitions(n).size();
    if (count != coeff[n]) {
      throw VerificationFailure("partition count disagrees with the "
                                "generating function");
    }
    return count;
  }

  std::vector<Composition> compositions(std::size_t n) {
    std::vector<Composition> out;
    Composition              current;
    compositions_rec(n, current, out);
    return out;
  }

  std::vector<std::vector<IntegerPartition>>
  partition_tuples(std::vector<std::size_t> const& sizes) {
    std::vector<std::vector<IntegerPartition>> out{{}};
    for (auto s : sizes) {
      std::vector<std::vector<IntegerPartition>> next;
      for (auto const& prefix : out) {
        for (auto const& mu : partitions(s)) {
          auto t = prefix;
          t.push_back(mu);
          next.push_back(std::move(t));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  std::string partition_format(std::vector<std::size_t> const& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(parts[i]);
    }
    return out + ")";
  }

  IntegerPartition partition_parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      throw ParseError("partition must look like (2,1): \"" + std::string(text)
                       + "\"");
    }
    IntegerPartition out;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto const  comma = body.find(',');
      auto const  tok   = body.substr(0, comma);
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0) {
        throw ParseError("bad partition part \"" + std::string(tok) + "\"");
      }
      out.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      body.remove_prefix(comma + 1);
      if (body.empty()) {
        throw ParseError("trailing comma in partition");
      }
    }
    if (!std::is_sorted(out.rbegin(), out.rend())) {
      throw ParseError("partition parts must be weakly decreasing");
    }
    return out;
  }

  IntegerPartition Tableau::shape() const {
    IntegerPartition out;
    for (auto const& r : rows) {
      out.push_back(r.size());
    }
    return out;
  }

  bool Tableau::is_standard() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) {
          return false;
        }
        if (i + 1 < rows.size() && j < rows[i + 1].size()
            && rows[i][j] > rows[i + 1][j]) {
          return false;
        }
      }
    }
    return true;
  }

  Tabloid tabloid_of(Tableau const& t) {
    Tabloid out = t.rows;
    for (auto& r : out) {
      std::sort(r.begin(), r.end());
    }
    return out;
  }

  std::vector<Tableau> all_tableaux(IntegerPartition const&     shape,
                                    std::vector<point_t> const& labels) {
    check_labels(shape, labels);
    std::vector<Tableau> out;
    auto                 perm = labels;
    do {
      Tableau     t;
      std::size_t k = 0;
      for (auto len : shape) {
        t.rows.emplace_back(perm.begin() + k, perm.begin() + k + len);
        k += len;
      }
      out.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  std::vector<Tableau> standard_tableaux(IntegerPartition const&     shape,
                                         std::vector<point_t> const& labels) {
    std::vector<Tableau> out;
    for (auto& t : all_tableaux(shape, labels)) {
      if (t.is_standard()) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  std::vector<Tabloid> tabloids(IntegerPartition const&     shape,
                                std::vector<point_t> const& labels) {
    std::vector<Tabloid> out;
    for (auto const& t : all_tableaux(shape, labels)) {
      out.push_back(tabloid_of(t));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Permutation> column_group(Tableau const&              t,
                                        std::vector<point_t> const& labels) {
    std::size_t const m = labels.size();
    // Column j holds the positions of its entries, top to bottom.
    std::vector<std::vector<std::size_t>> columns;
    for (auto const& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (columns.size() <= j) {
          columns.emplace_back();
        }
        columns[j].push_back(position_of(labels, row[j]));
      }
    }
    std::vector<Permutation> out;
    std::vector<point_t>     images(m);
    std::iota(images.begin(), images.end(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
      if (c == columns.size()) {
        out.emplace_back(images);
        return;
      }
      auto sorted = columns[c];
      std::sort(sorted.begin(), sorted.end());
      auto targets = sorted;
      do {
        for (std::size_t i = 0; i < sorted.size(); ++i) {
          images[sorted[i]] = static_cast<point_t>(targets[i]);
        }
        rec(c + 1);
      } while (std::next_permutation(targets.begin(), targets.end()));
      for (auto p : sorted) {
        images[p] = static_cast<point_t>(p);
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  Tableau act(Permutation const&          p,
              Tableau const&              t,
              std::vector<point_t> const& labels) {
    Tableau out = t;
    for (auto& row : out.rows) {
      for (auto& x : row) {
        x = labels[static_cast<std::size_t>(p(static_cast<point_t>(position_of(labels, x))))];
      }
    }
    return out;
  }

  Representation tabloid_module(IntegerPartition const&        shape,
                                std::vector<point_t> const&    labels,
                                Enumerated<Permutation> const& group) {
    check_labels(shape, labels);
    if (group.elements.front().degree() != labels.size()) {
      throw std::invalid_argument("tabloid_module: group degree differs from "
                                  "the label count");
    }
    auto const          basis = tabloids(shape, labels);
    std::size_t const   d     = basis.size();
    std::vector<Matrix> mats;
    mats.reserve(group.size());
    for (auto const& p : group.elements) {
      Matrix m(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        auto img = tabloid_of(act(p, Tableau{basis[j]}, labels));
        auto i   = std::lower_bound(basis.begin(), basis.end(), img) - basis.begin();
        m(static_cast<std::size_t>(i), j) = 1;
      }
      mats.push_back(std::move(m));
    }
    return Representation(group.monoid, d, std::move(mats));
  }

  Vector polytabloid(Tableau const&              t,
                     std::vector<point_t> const& labels,
                     std::vector<Tabloid> const& basis) {
    Vector v(basis.size());
    for (auto const& h : column_group(t, labels)) {
      auto img = tabloid_of(act(h, t, labels));
      auto it  = std::lower_bound(basis.begin(), basis.end(), img);
      if (it == basis.end() || *it != img) {
        throw std::invalid_argument("polytabloid: tabloid outside the basis");
      }
      v[static_cast<std::size_t>(it - basis.begin())] += h.sign();
    }
    return v;
  }

  SpechtData specht_rep(IntegerPartition const&        shape,
                        std::vector<point_t> const&    labels,
                        Enumerated<Permutation> const& group) {
    auto                module = tabloid_module(shape, labels, group);
    auto                basis  = tabloids(shape, labels);
    std::vector<Vector> polys;
    for (auto const& t : all_tableaux(shape, labels)) {
      polys.push_back(polytabloid(t, labels, basis));
    }
    auto span = Subspace::span(basis.size(), polys);
    if (span.dim() != standard_tableaux(shape, labels).size()) {
      throw VerificationFailure("dim S" + partition_format(shape)
                                + " differs from the standard tableau count");
    }
    auto rep = restrict_to(module, span);
    return SpechtData{shape,
                      labels,
                      std::move(basis),
                      std::move(module),
                      std::move(span),
                      std::move(rep)};
  }

  SpechtData specht_rep(IntegerPartition const& shape) {
    std::size_t const    n = std::accumulate(shape.begin(), shape.end(), std::size_t(0));
    std::vector<point_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return specht_rep(shape, labels, symmetric_group(n));
  }

  Representation young_tensor(std::vector<YoungFactor> const& factors) {
    if (factors.empty()) {
      return Representation::trivial(direct_product({}));
    }
    std::vector<point_t> seen;
    for (auto const& f : factors) {
      if (std::accumulate(f.mu.begin(), f.mu.end(), std::size_t(0))
          != f.block.size()) {
        throw std::invalid_argument("young_tensor: block size mismatch for "
                                    + partition_format(f.mu));
      }
      seen.insert(seen.end(), f.block.begin(), f.block.end());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw std::invalid_argument("young_tensor: blocks overlap");
    }
    auto factor_rep = [](YoungFactor const& f) {
      auto block = f.block;
      std::sort(block.begin(), block.end());
      return specht_rep(f.mu, block, symmetric_group(block.size())).rep;
    };
    Representation out = factor_rep(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      out = outer_tensor(out, factor_rep(factors[i]));
    }
    // Nested binary products have the same element order and table as the
    // flat product of all factors, so the result is rebuilt over that.
    std::vector<MonoidPtr> groups;
    for (auto const& f : factors) {
      groups.push_back(symmetric_group(f.block.size()).monoid);
    }
    auto flat = direct_product(groups);
    if (!flat->same_structure(out.monoid())) {
      throw VerificationFailure("young_tensor: product monoid mismatch");
    }
    return Representation(flat, out.dim(), out.matrices());
  }

}  // namespace munn
