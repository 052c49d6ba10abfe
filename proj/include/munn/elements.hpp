#pragma once

// Concrete elements of the symmetric group S_n, the symmetric inverse monoid
// I_n and the full transformation monoid T_n.
//
// Points are 0-based everywhere in the API; the text codecs are the only
// place where the 1-based notation of the literature appears. Products are
// right-to-left: compose(s, t) applies t first, then s.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace munn {

  using point_t = int;
  inline constexpr point_t kUndefined = -1;

  class Permutation;

  class PartialBijection {
   public:
    // The zero map of degree n (empty domain).
    explicit PartialBijection(std::size_t n = 0);

    static PartialBijection identity(std::size_t n);
    static PartialBijection partial_identity(std::size_t                 n,
                                             std::vector<point_t> const& domain);
    static PartialBijection from_pairs(
        std::size_t                                      n,
        std::vector<std::pair<point_t, point_t>> const& pairs);
    // images[i] is the image of i or kUndefined.
    static PartialBijection from_images(std::vector<point_t> images);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    point_t operator()(point_t i) const {
      return _images[static_cast<std::size_t>(i)];
    }
    bool defined_at(point_t i) const {
      return (*this)(i) != kUndefined;
    }

    std::vector<point_t>                     domain() const;
    std::vector<point_t>                     image() const;
    std::vector<std::pair<point_t, point_t>> pairs() const;
    std::size_t                              rank() const;
    std::vector<point_t> const&              images() const noexcept {
      return _images;
    }

    bool is_idempotent() const;

    bool operator==(PartialBijection const&) const = default;
    // Canonical order: (sorted domain tuple, corresponding image tuple),
    // lexicographically.
    std::strong_ordering operator<=>(PartialBijection const& that) const;

   private:
    std::vector<point_t> _images;
  };

  PartialBijection compose(PartialBijection const& s, PartialBijection const& t);
  PartialBijection inverse(PartialBijection const& s);

  class Transformation {
   public:
    explicit Transformation(std::vector<point_t> images);
    static Transformation identity(std::size_t n);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    point_t operator()(point_t i) const {
      return _images[static_cast<std::size_t>(i)];
    }
    std::vector<point_t> const& images() const noexcept {
      return _images;
    }
    std::vector<point_t> image() const;
    // Kernel as a list of fibres, each sorted, fibres ordered by least point.
    std::vector<std::vector<point_t>> kernel() const;
    std::size_t                       rank() const;
    bool                              is_idempotent() const;

    bool operator==(Transformation const&) const = default;
    auto operator<=>(Transformation const&) const = default;

   private:
    std::vector<point_t> _images;
  };

  Transformation compose(Transformation const& s, Transformation const& t);

  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<point_t> images);
    static Permutation identity(std::size_t n);
    // The transposition of points a and b.
    static Permutation transposition(std::size_t n, point_t a, point_t b);
    // The cycle 0 -> 1 -> ... -> n-1 -> 0.
    static Permutation long_cycle(std::size_t n);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    point_t operator()(point_t i) const {
      return _images[static_cast<std::size_t>(i)];
    }
    std::vector<point_t> const& images() const noexcept {
      return _images;
    }
    bool is_identity() const;
    // +1 or -1 by inversion-count parity.
    int sign() const;

    Transformation   as_transformation() const;
    PartialBijection as_partial_bijection() const;

    bool operator==(Permutation const&) const = default;
    auto operator<=>(Permutation const&) const = default;

   private:
    std::vector<point_t> _images;
  };

  Permutation compose(Permutation const& s, Permutation const& t);
  Permutation inverse(Permutation const& s);

  // Cycle-link notation: cycles "(a,b,c)" and links "[a,b,c]" (a->b->c with
  // c outside the domain), 1-based. Canonical output lists cycles first,
  // each rotated to start at its least point, then links; within each
  // group blocks are sorted by least point. The zero map is written "0".
  std::string      cycle_link_format(PartialBijection const& s);
  PartialBijection cycle_link_parse(std::string_view text, std::size_t n);

  // "[i1,...,in]", 1-based.
  std::string    transformation_format(Transformation const& t);
  Transformation transformation_parse(std::string_view text);

  // Permutations in cycle notation with fixed points shown, e.g. "(1,2)(3)".
  std::string permutation_format(Permutation const& p);
  // Accepts either cycle notation or an image tuple "[...]".
  Permutation permutation_parse(std::string_view text, std::size_t n);

}  // namespace munn
