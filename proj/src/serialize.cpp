#include "munn/serialize.hpp"

#include <sstream>

namespace munn {

  namespace {
    struct LineReader {
      std::istream& in;
      std::size_t   lineno = 0;

      std::string next() {
        std::string line;
        while (std::getline(in, line)) {
          ++lineno;
          if (!line.empty()) {
            return line;
          }
        }
        throw ParseError("representation text ends early");
      }

      // "key value" -> value; fails unless the key matches.
      std::string expect(std::string const& key) {
        auto line = next();
        if (line.compare(0, key.size() + 1, key + " ") != 0 && line != key) {
          fail("expected \"" + key + "\", got \"" + line + "\"");
        }
        return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
      }
    };

    std::size_t to_size(LineReader const& r, std::string const& s) {
      try {
        std::size_t pos = 0;
        auto const  v   = std::stoull(s, &pos);
        if (pos != s.size()) {
          r.fail("bad number \"" + s + "\"");
        }
        return static_cast<std::size_t>(v);
      } catch (std::logic_error const&) {
        r.fail("bad number \"" + s + "\"");
      }
    }
  }  // namespace

  RepresentationText to_text(Representation const& rep,
                             std::string const&    monoid,
                             std::string const&    over) {
    RepresentationText out{monoid, over, rep.dim(), {}, rep.matrices()};
    for (index_t x = 0; x < rep.monoid().size(); ++x) {
      out.labels.push_back(rep.monoid().label(x));
    }
    return out;
  }

  void write_representation(std::ostream& out, RepresentationText const& rep) {
    out << "representation\n"
        << "monoid " << rep.monoid << "\n"
        << "over " << rep.over << "\n"
        << "elements " << rep.matrices.size() << "\n"
        << "dim " << rep.dim << "\n";
    for (std::size_t x = 0; x < rep.matrices.size(); ++x) {
      out << "element " << rep.labels[x] << "\n";
      auto const& m = rep.matrices[x];
      for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "row";
        for (std::size_t j = 0; j < m.cols(); ++j) {
          out << ' ' << rational_format(m(i, j));
        }
        out << "\n";
      }
    }
    out << "end\n";
  }

  RepresentationText read_representation(std::istream& in) {
    LineReader         r{in};
    RepresentationText out;
    r.expect("representation");
    out.monoid = r.expect("monoid");
    out.over   = r.expect("over");
    auto const count = to_size(r, r.expect("elements"));
    out.dim          = to_size(r, r.expect("dim"));
    for (std::size_t x = 0; x < count; ++x) {
      out.labels.push_back(r.expect("element"));
      Matrix m(out.dim, out.dim);
      for (std::size_t i = 0; i < out.dim; ++i) {
        std::istringstream row(r.expect("row"));
        std::string        tok;
        std::size_t        j = 0;
        while (row >> tok) {
          if (j == out.dim) {
            r.fail("too many entries in a row");
          }
          m(i, j++) = rational_parse(tok);
        }
        if (j != out.dim) {
          r.fail("too few entries in a row");
        }
      }
      out.matrices.push_back(std::move(m));
    }
    r.expect("end");
    return out;
  }

}  // namespace munn
