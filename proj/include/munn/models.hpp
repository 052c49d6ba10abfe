#pragma once

// Monoids named by short specs, as used on the command line:
//   S:n  I:n  T:n  SGL:subsets:n  SGL:partitions:n  SGL:ordperm:n  gens:<file>
// A generator file starts with a line "<S|I|T> <degree>" followed by one
// element per line in the element text forms; '#' starts a comment.

#include <cstddef>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "munn/cliffmunn.hpp"
#include "munn/green.hpp"
#include "munn/lattice.hpp"
#include "munn/monoid.hpp"
#include "munn/representation.hpp"

namespace munn {

  enum class SpecKind { symmetric, inverse, transformation, sgl, generators };

  struct MonoidSpec {
    SpecKind    kind    = SpecKind::symmetric;
    std::size_t degree  = 0;
    LatticeKind lattice = LatticeKind::subsets;
    std::string path;  // generators only

    std::string text() const;
  };

  // Throws ParseError.
  MonoidSpec parse_monoid_spec(std::string_view text);

  // The element family of a generator file.
  enum class ElementKind { permutation, partial_bijection, transformation };

  struct GeneratorList {
    ElementKind              kind;
    std::size_t              degree;
    std::vector<std::string> elements;
  };

  GeneratorList read_generator_list(std::istream& in);

  class MonoidModel {
   public:
    // Throws ParseError, CapExceeded, or std::invalid_argument for
    // out-of-range degrees.
    static MonoidModel load(MonoidSpec const& spec,
                            std::size_t       cap = kDefaultElementCap);

    MonoidSpec const& spec() const noexcept {
      return _spec;
    }
    MonoidPtr monoid() const noexcept {
      return _monoid;
    }
    FiniteMonoid const& operator*() const noexcept {
      return *_monoid;
    }
    GreenStructure const& green() const;

    // Present for SGL specs.
    SGLMonoid const* sgl() const noexcept {
      return _sgl.get();
    }

    // Classes from the top of the J-order down; ties by name.
    std::vector<index_t> const& jclass_order() const;
    // "J<rank>" for element families, "J<size>" for subsets, "J<type>"
    // for (ordered) partitions, "J0" for the adjoined zero. Classes that
    // would share a name get ".1", ".2", ... in index order.
    std::string const& jclass_name(index_t j) const;
    // A class name, a bare number k for "J<k>", or one of the aliases
    // units, zero, minimal (and constants for T:n). Throws ParseError.
    index_t jclass_parse(std::string_view text) const;

    bool is_inverse() const;

    // Block model of maximal subgroups, when there is one.
    std::optional<PointAction> point_action() const;

    // s . v_i = v_{s(i)}; throws Unsupported for SGL specs.
    Representation mapping_rep() const;

   private:
    MonoidModel() = default;
    void name_jclasses() const;

    MonoidSpec _spec;
    MonoidPtr  _monoid;
    std::variant<std::monostate,
                 std::shared_ptr<Enumerated<Permutation> const>,
                 std::shared_ptr<Enumerated<PartialBijection> const>,
                 std::shared_ptr<Enumerated<Transformation> const>,
                 std::shared_ptr<Enumerated<SGLElement> const>>
                                     _elements;
    std::shared_ptr<SGLMonoid const> _sgl;

    mutable std::shared_ptr<GreenStructure const> _green;
    mutable std::vector<std::string>              _names;
    mutable std::vector<index_t>                  _order;
  };

}  // namespace munn
