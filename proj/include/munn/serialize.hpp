#pragma once

// Line-oriented key/value text for representations:
//
//   representation
//   monoid I:3
//   over <what the matrices are indexed by>
//   elements 34
//   dim 3
//   element <label>
//   row 1 0 0
//   ...
//   end
//
// Entries are exact rationals written "p/q", including "3/1" and "0/1". Elements
// appear in the monoid's canonical order.

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "munn/linalg.hpp"
#include "munn/representation.hpp"

namespace munn {

  struct RepresentationText {
    std::string              monoid;
    std::string              over;
    std::size_t              dim = 0;
    std::vector<std::string> labels;
    std::vector<Matrix>      matrices;
  };

  RepresentationText to_text(Representation const& rep,
                             std::string const&    monoid,
                             std::string const&    over);

  void write_representation(std::ostream& out, RepresentationText const& rep);
  // Throws ParseError.
  RepresentationText read_representation(std::istream& in);

}  // namespace munn
