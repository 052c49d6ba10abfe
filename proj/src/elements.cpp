#include "munn/elements.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "munn/errors.hpp"

namespace munn {

  namespace {
    void check_degree(std::size_t a, std::size_t b, char const* what) {
      if (a != b) {
        throw std::invalid_argument(std::string(what)
                                    + ": degree mismatch ("
                                    + std::to_string(a) + " vs "
                                    + std::to_string(b) + ")");
      }
    }

    void check_point(point_t x, std::size_t n) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw std::invalid_argument("point " + std::to_string(x)
                                    + " out of range for degree "
                                    + std::to_string(n));
      }
    }

    void write_block(std::ostringstream&         out,
                     std::vector<point_t> const& block,
                     char                        open,
                     char                        close) {
      out << open;
      for (std::size_t i = 0; i < block.size(); ++i) {
        out << (i == 0 ? "" : ",") << block[i] + 1;
      }
      out << close;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PartialBijection
  ////////////////////////////////////////////////////////////////////////

  PartialBijection::PartialBijection(std::size_t n) : _images(n, kUndefined) {}

  PartialBijection PartialBijection::identity(std::size_t n) {
    PartialBijection s(n);
    std::iota(s._images.begin(), s._images.end(), 0);
    return s;
  }

  PartialBijection
  PartialBijection::partial_identity(std::size_t                 n,
                                     std::vector<point_t> const& domain) {
    PartialBijection s(n);
    for (point_t x : domain) {
      check_point(x, n);
      s._images[x] = x;
    }
    return s;
  }

  PartialBijection PartialBijection::from_pairs(
      std::size_t                                      n,
      std::vector<std::pair<point_t, point_t>> const& pairs) {
    std::vector<point_t> images(n, kUndefined);
    for (auto [x, y] : pairs) {
      check_point(x, n);
      check_point(y, n);
      if (images[x] != kUndefined) {
        throw std::invalid_argument("point " + std::to_string(x)
                                    + " mapped twice");
      }
      images[x] = y;
    }
    return from_images(std::move(images));
  }

  PartialBijection PartialBijection::from_images(std::vector<point_t> images) {
    std::size_t const n = images.size();
    std::vector<bool> seen(n, false);
    for (point_t y : images) {
      if (y == kUndefined) {
        continue;
      }
      check_point(y, n);
      if (seen[y]) {
        throw std::invalid_argument("image point " + std::to_string(y)
                                    + " repeated; not injective");
      }
      seen[y] = true;
    }
    PartialBijection s(n);
    s._images = std::move(images);
    return s;
  }

  std::vector<point_t> PartialBijection::domain() const {
    std::vector<point_t> out;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined) {
        out.push_back(static_cast<point_t>(i));
      }
    }
    return out;
  }

  std::vector<point_t> PartialBijection::image() const {
    std::vector<point_t> out;
    for (point_t y : _images) {
      if (y != kUndefined) {
        out.push_back(y);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::pair<point_t, point_t>> PartialBijection::pairs() const {
    std::vector<std::pair<point_t, point_t>> out;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined) {
        out.emplace_back(static_cast<point_t>(i), _images[i]);
      }
    }
    return out;
  }

  std::size_t PartialBijection::rank() const {
    return static_cast<std::size_t>(
        std::count_if(_images.begin(), _images.end(), [](point_t y) {
          return y != kUndefined;
        }));
  }

  bool PartialBijection::is_idempotent() const {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined
          && _images[i] != static_cast<point_t>(i)) {
        return false;
      }
    }
    return true;
  }

  std::strong_ordering
  PartialBijection::operator<=>(PartialBijection const& that) const {
    if (auto c = degree() <=> that.degree(); c != 0) {
      return c;
    }
    auto const lhs = domain();
    auto const rhs = that.domain();
    if (auto c = std::lexicographical_compare_three_way(
            lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
        c != 0) {
      return c;
    }
    for (point_t x : lhs) {
      if (auto c = (*this)(x) <=> that(x); c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  PartialBijection compose(PartialBijection const& s,
                           PartialBijection const& t) {
    check_degree(s.degree(), t.degree(), "compose");
    std::vector<point_t> images(s.degree(), kUndefined);
    for (std::size_t i = 0; i < images.size(); ++i) {
      point_t const y = t(static_cast<point_t>(i));
      if (y != kUndefined) {
        images[i] = s(y);
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  PartialBijection inverse(PartialBijection const& s) {
    std::vector<point_t> images(s.degree(), kUndefined);
    for (auto [x, y] : s.pairs()) {
      images[y] = x;
    }
    return PartialBijection::from_images(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<point_t> images)
      : _images(std::move(images)) {
    for (point_t y : _images) {
      check_point(y, _images.size());
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<point_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Transformation(std::move(images));
  }

  std::vector<point_t> Transformation::image() const {
    std::vector<point_t> out(_images);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<std::vector<point_t>> Transformation::kernel() const {
    std::vector<std::vector<point_t>> fibres;
    std::vector<int>                  slot(_images.size(), -1);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      point_t const y = _images[i];
      if (slot[y] == -1) {
        slot[y] = static_cast<int>(fibres.size());
        fibres.emplace_back();
      }
      fibres[slot[y]].push_back(static_cast<point_t>(i));
    }
    return fibres;
  }

  std::size_t Transformation::rank() const {
    return image().size();
  }

  bool Transformation::is_idempotent() const {
    return compose(*this, *this) == *this;
  }

  Transformation compose(Transformation const& s, Transformation const& t) {
    check_degree(s.degree(), t.degree(), "compose");
    std::vector<point_t> images(s.degree());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = s(t(static_cast<point_t>(i)));
    }
    return Transformation(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<point_t> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (point_t y : _images) {
      check_point(y, _images.size());
      if (seen[y]) {
        throw std::invalid_argument("not a permutation: image "
                                    + std::to_string(y + 1) + " repeated");
      }
      seen[y] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<point_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  Permutation Permutation::transposition(std::size_t n, point_t a, point_t b) {
    auto images = identity(n)._images;
    check_point(a, n);
    check_point(b, n);
    std::swap(images[a], images[b]);
    return Permutation(std::move(images));
  }

  Permutation Permutation::long_cycle(std::size_t n) {
    std::vector<point_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = static_cast<point_t>((i + 1) % n);
    }
    return Permutation(std::move(images));
  }

  bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != static_cast<point_t>(i)) {
        return false;
      }
    }
    return true;
  }

  int Permutation::sign() const {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      for (std::size_t j = i + 1; j < _images.size(); ++j) {
        inversions += _images[i] > _images[j];
      }
    }
    return inversions % 2 == 0 ? 1 : -1;
  }

  Transformation Permutation::as_transformation() const {
    return Transformation(_images);
  }

  PartialBijection Permutation::as_partial_bijection() const {
    return PartialBijection::from_images(_images);
  }

  Permutation compose(Permutation const& s, Permutation const& t) {
    check_degree(s.degree(), t.degree(), "compose");
    std::vector<point_t> images(s.degree());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = s(t(static_cast<point_t>(i)));
    }
    return Permutation(std::move(images));
  }

  Permutation inverse(Permutation const& s) {
    std::vector<point_t> images(s.degree());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[s(static_cast<point_t>(i))] = static_cast<point_t>(i);
    }
    return Permutation(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  std::string cycle_link_format(PartialBijection const& s) {
    std::size_t const n = s.degree();
    std::vector<bool> in_image(n, false);
    for (point_t y : s.image()) {
      in_image[y] = true;
    }
    std::vector<bool>                 used(n, false);
    std::vector<std::vector<point_t>> links;
    for (std::size_t x = 0; x < n; ++x) {
      if (s.defined_at(x) && !in_image[x]) {
        std::vector<point_t> block;
        point_t              p = static_cast<point_t>(x);
        while (p != kUndefined) {
          block.push_back(p);
          used[p] = true;
          p       = s(p);
        }
        links.push_back(std::move(block));
      }
    }
    std::vector<std::vector<point_t>> cycles;
    for (std::size_t x = 0; x < n; ++x) {
      if (!used[x] && s.defined_at(x)) {
        std::vector<point_t> block;
        point_t              p = static_cast<point_t>(x);
        do {
          block.push_back(p);
          used[p] = true;
          p       = s(p);
        } while (p != static_cast<point_t>(x));
        cycles.push_back(std::move(block));
      }
    }
    // Cycles are discovered from their least point already, in increasing
    // order. Links start where they must; sort them by least point.
    auto least = [](std::vector<point_t> const& b) {
      return *std::min_element(b.begin(), b.end());
    };
    std::sort(links.begin(), links.end(), [&](auto const& a, auto const& b) {
      return least(a) < least(b);
    });
    if (cycles.empty() && links.empty()) {
      return "0";
    }
    std::ostringstream out;
    for (auto const& c : cycles) {
      write_block(out, c, '(', ')');
    }
    for (auto const& l : links) {
      write_block(out, l, '[', ']');
    }
    return out.str();
  }

  namespace {
    struct Cursor {
      std::string_view text;
      std::size_t      pos = 0;

      void skip_space() {
        while (pos < text.size()
               && std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
      }
      bool done() {
        skip_space();
        return pos >= text.size();
      }
      char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
      }
      void expect(char c) {
        if (peek() != c) {
          throw ParseError("expected '" + std::string(1, c) + "' at offset "
                           + std::to_string(pos) + " in \""
                           + std::string(text) + "\"");
        }
        ++pos;
      }
      long integer() {
        skip_space();
        long       value = 0;
        auto const first = text.data() + pos;
        auto const last  = text.data() + text.size();
        auto [ptr, ec]   = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) {
          throw ParseError("expected an integer at offset "
                           + std::to_string(pos) + " in \""
                           + std::string(text) + "\"");
        }
        pos += static_cast<std::size_t>(ptr - first);
        return value;
      }
      // A bracketed list of 1-based points, converted to 0-based.
      std::vector<point_t> list(char open, char close, std::size_t n) {
        expect(open);
        std::vector<point_t> out;
        if (peek() == close) {
          throw ParseError("empty block in \"" + std::string(text) + "\"");
        }
        while (true) {
          long const v = integer();
          if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw ParseError("point " + std::to_string(v)
                             + " out of range 1.." + std::to_string(n));
          }
          out.push_back(static_cast<point_t>(v - 1));
          char const c = peek();
          if (c == ',') {
            ++pos;
          } else if (c == close) {
            ++pos;
            return out;
          } else {
            throw ParseError("malformed block in \"" + std::string(text)
                             + "\"");
          }
        }
      }
    };
  }  // namespace

  PartialBijection cycle_link_parse(std::string_view text, std::size_t n) {
    Cursor               cur{text};
    std::vector<point_t> images(n, kUndefined);
    std::vector<bool>    seen(n, false);
    auto                 mark = [&](point_t x) {
      if (seen[x]) {
        throw ParseError("point " + std::to_string(x + 1) + " repeated in \""
                         + std::string(text) + "\"");
      }
      seen[x] = true;
    };
    if (cur.peek() == '0') {
      cur.integer();
      if (!cur.done()) {
        throw ParseError("trailing input after zero map in \""
                         + std::string(text) + "\"");
      }
      return PartialBijection(n);
    }
    while (!cur.done()) {
      char const c = cur.peek();
      if (c == '(') {
        auto block = cur.list('(', ')', n);
        for (std::size_t i = 0; i < block.size(); ++i) {
          mark(block[i]);
          images[block[i]] = block[(i + 1) % block.size()];
        }
      } else if (c == '[') {
        auto block = cur.list('[', ']', n);
        for (std::size_t i = 0; i < block.size(); ++i) {
          mark(block[i]);
          if (i + 1 < block.size()) {
            images[block[i]] = block[i + 1];
          }
        }
      } else {
        throw ParseError("unexpected character '" + std::string(1, c)
                         + "' in \"" + std::string(text) + "\"");
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  std::string transformation_format(Transformation const& t) {
    std::ostringstream out;
    write_block(out, t.images(), '[', ']');
    return out.str();
  }

  Transformation transformation_parse(std::string_view text) {
    Cursor cur{text};
    // The degree is the tuple length; points are range-checked afterwards.
    auto const block = cur.list('[', ']', static_cast<std::size_t>(-1) / 2);
    if (!cur.done()) {
      throw ParseError("trailing input in \"" + std::string(text) + "\"");
    }
    for (point_t y : block) {
      if (static_cast<std::size_t>(y) >= block.size()) {
        throw ParseError("image " + std::to_string(y + 1)
                         + " out of range for degree "
                         + std::to_string(block.size()));
      }
    }
    return Transformation(block);
  }

  std::string permutation_format(Permutation const& p) {
    if (p.degree() == 0) {
      return "()";
    }
    return cycle_link_format(p.as_partial_bijection());
  }

  Permutation permutation_parse(std::string_view text, std::size_t n) {
    Cursor cur{text};
    if (cur.peek() == '[') {
      auto t = transformation_parse(text);
      if (t.degree() != n) {
        throw ParseError("expected " + std::to_string(n) + " images in \""
                         + std::string(text) + "\"");
      }
      try {
        return Permutation(t.images());
      } catch (std::invalid_argument const& e) {
        throw ParseError(e.what());
      }
    }
    auto s      = cycle_link_parse(text, n);
    auto images = s.images();
    // Unlisted points are fixed in permutation notation.
    for (std::size_t i = 0; i < n; ++i) {
      if (images[i] == kUndefined) {
        images[i] = static_cast<point_t>(i);
      }
    }
    try {
      return Permutation(images);
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace munn
