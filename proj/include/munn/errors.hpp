#pragma once

#include <stdexcept>
#include <string>

namespace munn {

  // Malformed textual input: element notation, monoid specs, generator files.
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An enumeration grew past its configured element cap.
  class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A well-formed request outside what the library handles, such as an
  // irreducible catalog for a monoid that is not inverse.
  class Unsupported : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A computed object failed one of its own postconditions (homomorphism
  // law, lattice axioms, formula/enumeration agreement, ...). Seeing one of
  // these means there is a bug somewhere.
  class VerificationFailure : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace munn
