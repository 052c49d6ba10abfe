#include "munn/models.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace munn {

  namespace {
    std::vector<std::string_view> split(std::string_view text, char sep) {
      std::vector<std::string_view> out;
      while (true) {
        auto const p = text.find(sep);
        out.push_back(text.substr(0, p));
        if (p == std::string_view::npos) {
          return out;
        }
        text.remove_prefix(p + 1);
      }
    }

    std::size_t parse_degree(std::string_view tok, std::string_view whole) {
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || n == 0) {
        throw ParseError("bad degree \"" + std::string(tok) + "\" in \""
                         + std::string(whole) + "\"");
      }
      return n;
    }

    std::string trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    template <typename T>
    std::size_t rank_of(T const& x) {
      if constexpr (std::is_same_v<T, Permutation>) {
        return x.degree();
      } else {
        return x.rank();
      }
    }

    template <typename T, typename Parse>
    std::vector<T> parse_all(GeneratorList const& list, Parse&& parse) {
      std::vector<T> out;
      for (auto const& text : list.elements) {
        out.push_back(parse(text));
        if (out.back().degree() != list.degree) {
          throw ParseError("element \"" + text + "\" has degree "
                           + std::to_string(out.back().degree()) + ", expected "
                           + std::to_string(list.degree));
        }
      }
      if (out.empty()) {
        throw ParseError("generator file lists no elements");
      }
      return out;
    }

    template <typename T>
    auto compose_fn() {
      return [](T const& a, T const& b) { return compose(a, b); };
    }
  }  // namespace

  std::string MonoidSpec::text() const {
    switch (kind) {
      case SpecKind::symmetric: return "S:" + std::to_string(degree);
      case SpecKind::inverse: return "I:" + std::to_string(degree);
      case SpecKind::transformation: return "T:" + std::to_string(degree);
      case SpecKind::sgl:
        return "SGL:" + std::string(lattice_kind_name(lattice)) + ":"
               + std::to_string(degree);
      case SpecKind::generators: return "gens:" + path;
    }
    return {};
  }

  MonoidSpec parse_monoid_spec(std::string_view text) {
    MonoidSpec spec;
    if (text.substr(0, 5) == "gens:") {
      spec.kind = SpecKind::generators;
      spec.path = std::string(text.substr(5));
      if (spec.path.empty()) {
        throw ParseError("gens: needs a file name");
      }
      return spec;
    }
    auto const parts = split(text, ':');
    if (parts.size() == 2 && parts[0].size() == 1) {
      switch (parts[0][0]) {
        case 'S': spec.kind = SpecKind::symmetric; break;
        case 'I': spec.kind = SpecKind::inverse; break;
        case 'T': spec.kind = SpecKind::transformation; break;
        default: throw ParseError("unknown monoid family in \"" + std::string(text) + "\"");
      }
      spec.degree = parse_degree(parts[1], text);
      return spec;
    }
    if (parts.size() == 3 && parts[0] == "SGL") {
      spec.kind    = SpecKind::sgl;
      spec.lattice = lattice_kind_parse(parts[1]);
      spec.degree  = parse_degree(parts[2], text);
      return spec;
    }
    throw ParseError("unrecognised monoid spec \"" + std::string(text)
                     + "\"; expected S:n, I:n, T:n, SGL:<lattice>:n or gens:<file>");
  }

  GeneratorList read_generator_list(std::istream& in) {
    std::string                line;
    std::optional<GeneratorList> list;
    std::size_t                lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto const hash = line.find('#');
      auto const body = trim(std::string_view(line).substr(0, hash));
      if (body.empty()) {
        continue;
      }
      if (!list) {
        std::istringstream head(body);
        std::string        kind, degree, extra;
        head >> kind >> degree >> extra;
        if (degree.empty() || !extra.empty()) {
          throw ParseError("line " + std::to_string(lineno)
                           + ": expected \"<S|I|T> <degree>\"");
        }
        GeneratorList g{ElementKind::permutation, parse_degree(degree, body), {}};
        if (kind == "S") {
          g.kind = ElementKind::permutation;
        } else if (kind == "I") {
          g.kind = ElementKind::partial_bijection;
        } else if (kind == "T") {
          g.kind = ElementKind::transformation;
        } else {
          throw ParseError("line " + std::to_string(lineno) + ": unknown element kind \""
                           + kind + "\"");
        }
        list = std::move(g);
        continue;
      }
      list->elements.push_back(body);
    }
    if (!list) {
      throw ParseError("generator file is empty");
    }
    return *list;
  }

  MonoidModel MonoidModel::load(MonoidSpec const& spec, std::size_t cap) {
    MonoidModel m;
    m._spec = spec;
    auto keep = [&m](auto enumerated) {
      using E   = std::decay_t<decltype(enumerated)>;
      auto ptr  = std::make_shared<E const>(std::move(enumerated));
      m._monoid = ptr->monoid;
      m._elements = ptr;
    };

    switch (spec.kind) {
      case SpecKind::symmetric: keep(symmetric_group(spec.degree, cap)); break;
      case SpecKind::inverse: keep(symmetric_inverse_monoid(spec.degree, cap)); break;
      case SpecKind::transformation:
        keep(full_transformation_monoid(spec.degree, cap));
        break;
      case SpecKind::sgl: {
        auto lattice = std::make_shared<LatticeInstance const>(
            make_lattice(spec.lattice, spec.degree));
        m._sgl = std::make_shared<SGLMonoid const>(lattice);
        keep(m._sgl->enumerate(cap));
        break;
      }
      case SpecKind::generators: {
        std::ifstream in(spec.path);
        if (!in) {
          throw ParseError("cannot open generator file \"" + spec.path + "\"");
        }
        auto const  list = read_generator_list(in);
        std::size_t n    = list.degree;
        switch (list.kind) {
          case ElementKind::permutation:
            keep(closure(parse_all<Permutation>(list,
                                                [n](auto const& s) {
                                                  return permutation_parse(s, n);
                                                }),
                         Permutation::identity(n),
                         compose_fn<Permutation>(),
                         [](auto const& p) { return permutation_format(p); },
                         cap));
            break;
          case ElementKind::partial_bijection:
            keep(closure(parse_all<PartialBijection>(list,
                                                     [n](auto const& s) {
                                                       return cycle_link_parse(s, n);
                                                     }),
                         PartialBijection::identity(n),
                         compose_fn<PartialBijection>(),
                         [](auto const& p) { return cycle_link_format(p); },
                         cap));
            break;
          case ElementKind::transformation:
            keep(closure(parse_all<Transformation>(list,
                                                   [](auto const& s) {
                                                     return transformation_parse(s);
                                                   }),
                         Transformation::identity(n),
                         compose_fn<Transformation>(),
                         [](auto const& t) { return transformation_format(t); },
                         cap));
            break;
        }
        m._spec.degree = n;
        break;
      }
    }
    return m;
  }

  GreenStructure const& MonoidModel::green() const {
    if (!_green) {
      _green = std::make_shared<GreenStructure const>(_monoid);
    }
    return *_green;
  }

  void MonoidModel::name_jclasses() const {
    if (!_names.empty()) {
      return;
    }
    auto const&              g = green();
    std::size_t const        k = g.J().count();
    std::vector<std::string> base(k);
    for (index_t j = 0; j < k; ++j) {
      index_t const x = g.J().members[j].front();
      std::visit(
          [&](auto const& ptr) {
            using P = std::decay_t<decltype(ptr)>;
            if constexpr (std::is_same_v<P, std::monostate>) {
              base[j] = "J" + std::to_string(j);
            } else if constexpr (std::is_same_v<P, std::shared_ptr<Enumerated<SGLElement> const>>) {
              auto const& el = _sgl->lattice().elements[(*ptr)[x].a];
              if (!el) {
                base[j] = "J0";
              } else if (_spec.lattice == LatticeKind::subsets) {
                base[j] = "J" + std::to_string(el->front().size());
              } else {
                std::vector<std::size_t> type;
                for (auto const& b : *el) {
                  type.push_back(b.size());
                }
                if (_spec.lattice == LatticeKind::set_partitions) {
                  std::sort(type.rbegin(), type.rend());
                }
                base[j] = "J" + partition_format(type);
              }
            } else {
              base[j] = "J" + std::to_string(rank_of((*ptr)[x]));
            }
          },
          _elements);
    }
    std::map<std::string, std::size_t> count, seen;
    for (auto const& b : base) {
      ++count[b];
    }
    _names.resize(k);
    for (index_t j = 0; j < k; ++j) {
      _names[j] = count[base[j]] == 1 ? base[j]
                                      : base[j] + "." + std::to_string(++seen[base[j]]);
    }
    _order.resize(k);
    std::iota(_order.begin(), _order.end(), 0);
    auto ideal = [&](index_t j) {
      return g.ideals().two_sided.row_count(g.J().members[j].front());
    };
    std::sort(_order.begin(), _order.end(), [&](index_t a, index_t b) {
      auto const ia = ideal(a), ib = ideal(b);
      return ia != ib ? ia > ib : _names[a] < _names[b];
    });
  }

  std::vector<index_t> const& MonoidModel::jclass_order() const {
    name_jclasses();
    return _order;
  }

  std::string const& MonoidModel::jclass_name(index_t j) const {
    name_jclasses();
    return _names.at(j);
  }

  index_t MonoidModel::jclass_parse(std::string_view text) const {
    name_jclasses();
    auto const& g = green();
    std::string name(text);
    if (!name.empty() && std::all_of(name.begin(), name.end(), ::isdigit)) {
      name = "J" + name;
    }
    for (index_t j = 0; j < _names.size(); ++j) {
      if (_names[j] == name) {
        return j;
      }
    }
    if (name == "units") {
      return g.J().of[_monoid->identity()];
    }
    bool const constants = name == "constants" && _spec.kind == SpecKind::transformation;
    if (name == "minimal" || constants) {
      return _order.back();
    }
    if (name == "zero") {
      for (index_t z = 0; z < _monoid->size(); ++z) {
        bool is_zero = true;
        for (index_t x = 0; x < _monoid->size() && is_zero; ++x) {
          is_zero = _monoid->multiply(z, x) == z && _monoid->multiply(x, z) == z;
        }
        if (is_zero) {
          return g.J().of[z];
        }
      }
      throw ParseError("this monoid has no zero element");
    }
    std::string known;
    for (auto j : _order) {
      known += " " + _names[j];
    }
    throw ParseError("unknown J-class \"" + std::string(text) + "\"; classes are"
                     + known);
  }

  bool MonoidModel::is_inverse() const {
    return is_inverse_monoid(green());
  }

  std::optional<PointAction> MonoidModel::point_action() const {
    return std::visit(
        [&](auto const& ptr) -> std::optional<PointAction> {
          using P = std::decay_t<decltype(ptr)>;
          if constexpr (std::is_same_v<P, std::shared_ptr<Enumerated<SGLElement> const>>) {
            return munn::point_action(_sgl, ptr);
          } else if constexpr (std::is_same_v<P, std::shared_ptr<Enumerated<PartialBijection> const>>
                               || std::is_same_v<P, std::shared_ptr<Enumerated<Transformation> const>>) {
            return munn::point_action(ptr);
          } else if constexpr (std::is_same_v<P, std::shared_ptr<Enumerated<Permutation> const>>) {
            // A group is its own maximal subgroup; it acts on all points.
            std::size_t const n = _spec.degree;
            return PointAction{[n](index_t) -> std::optional<Blocks> {
                                 std::vector<point_t> all(n);
                                 std::iota(all.begin(), all.end(), 0);
                                 return Blocks{all};
                               },
                               [ptr](index_t s, point_t x) { return (*ptr)[s](x); }};
          } else {
            return std::nullopt;
          }
        },
        _elements);
  }

  Representation MonoidModel::mapping_rep() const {
    return std::visit(
        [&](auto const& ptr) -> Representation {
          using P = std::decay_t<decltype(ptr)>;
          if constexpr (std::is_same_v<P, std::shared_ptr<Enumerated<SGLElement> const>>
                        || std::is_same_v<P, std::monostate>) {
            throw Unsupported("no mapping representation for " + _spec.text());
          } else {
            return munn::mapping_rep(*ptr);
          }
        },
        _elements);
  }

}  // namespace munn
