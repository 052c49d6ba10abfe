#pragma once

// Exact linear algebra over the rationals: dense matrices, reduced echelon
// forms, kernels, and subspaces held in a canonical echelon basis.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace munn {

  using Rational = mpq_class;
  using Vector   = std::vector<Rational>;

  // Always "p/q" with q > 0, e.g. "-1/2", "3/1", "0/1".
  std::string rational_format(Rational const& x);
  // Accepts "p/q" or "p".
  Rational rational_parse(std::string_view text);

  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::vector<Vector> const& rows, std::size_t cols);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Rational& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    bool     is_zero() const;
    bool     is_identity() const;
    Rational trace() const;
    Matrix   transpose() const;

    bool operator==(Matrix const&) const = default;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _entries;
  };

  Matrix operator*(Matrix const& a, Matrix const& b);
  Matrix operator+(Matrix const& a, Matrix const& b);
  Matrix operator-(Matrix const& a, Matrix const& b);
  Matrix operator*(Rational const& c, Matrix const& a);
  Vector operator*(Matrix const& a, Vector const& v);

  // Block-diagonal sum and Kronecker product.
  Matrix block_diagonal(Matrix const& a, Matrix const& b);
  Matrix kronecker(Matrix const& a, Matrix const& b);

  Rational determinant(Matrix m);

  bool is_zero(Vector const& v);

  // Row space of a growing set of vectors, kept in fully reduced echelon
  // form (each pivot is 1 and is the only non-zero in its column among the
  // stored rows). Rows are ordered by pivot column.
  class EchelonBasis {
   public:
    explicit EchelonBasis(std::size_t ambient = 0) : _ambient(ambient) {}

    std::size_t ambient() const noexcept {
      return _ambient;
    }
    std::size_t rank() const noexcept {
      return _rows.size();
    }
    std::vector<Vector> const& rows() const noexcept {
      return _rows;
    }
    std::vector<std::size_t> const& pivots() const noexcept {
      return _pivots;
    }

    // Subtracts the stored rows from v; the result is zero iff v lies in
    // the span.
    Vector reduce(Vector v) const;
    // Returns true iff v was independent of the stored rows.
    bool add(Vector const& v);
    bool contains(Vector const& v) const;
    // Null space of the stored rows viewed as equations.
    std::vector<Vector> null_space() const;

   private:
    std::size_t              _ambient;
    std::vector<Vector>      _rows;
    std::vector<std::size_t> _pivots;
  };

  class Subspace {
   public:
    explicit Subspace(std::size_t ambient = 0) : _basis(ambient) {}

    static Subspace zero(std::size_t ambient) {
      return Subspace(ambient);
    }
    static Subspace whole(std::size_t ambient);
    static Subspace span(std::size_t ambient, std::vector<Vector> const& vs);

    std::size_t ambient() const noexcept {
      return _basis.ambient();
    }
    std::size_t dim() const noexcept {
      return _basis.rank();
    }
    // The canonical (reduced echelon) basis.
    std::vector<Vector> const& basis() const noexcept {
      return _basis.rows();
    }
    std::vector<std::size_t> const& pivots() const noexcept {
      return _basis.pivots();
    }

    bool   contains(Vector const& v) const;
    bool   contains(Subspace const& other) const;
    Vector reduce(Vector const& v) const {
      return _basis.reduce(v);
    }
    // Coordinates of v (assumed to lie in the subspace) in the canonical
    // basis: the entries of v at the pivot columns.
    Vector coordinates(Vector const& v) const;

    Subspace intersect(Subspace const& other) const;
    Subspace sum(Subspace const& other) const;

    bool operator==(Subspace const& that) const;

   private:
    EchelonBasis _basis;
  };

  struct RrefResult {
    Matrix                   echelon;
    std::size_t              rank = 0;
    std::vector<std::size_t> pivots;
    Subspace                 kernel;
    Subspace                 image;  // column space
  };

  RrefResult rref(Matrix const& m);
  Subspace   kernel(Matrix const& m);
  Subspace   column_space(Matrix const& m);
  std::size_t rank(Matrix const& m);

}  // namespace munn
