#include "munn/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "munn/errors.hpp"

namespace munn {

  std::string rational_format(Rational const& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
  }

  Rational rational_parse(std::string_view text) {
    std::string s(text);
    auto const  first = s.find_first_not_of(" \t");
    auto const  last  = s.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw ParseError("empty rational");
    }
    s = s.substr(first, last - first + 1);
    Rational out;
    if (out.set_str(s, 10) != 0) {
      throw ParseError("malformed rational \"" + s + "\"");
    }
    if (out.get_den() == 0) {
      throw ParseError("zero denominator in \"" + s + "\"");
    }
    out.canonicalize();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix
  ////////////////////////////////////////////////////////////////////////

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix Matrix::from_rows(std::vector<Vector> const& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw std::invalid_argument("Matrix::from_rows: ragged rows");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  Vector Matrix::row(std::size_t i) const {
    return Vector(_entries.begin() + i * _cols,
                  _entries.begin() + (i + 1) * _cols);
  }

  Vector Matrix::column(std::size_t j) const {
    Vector v(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      v[i] = (*this)(i, j);
    }
    return v;
  }

  bool Matrix::is_zero() const {
    return std::all_of(_entries.begin(), _entries.end(), [](auto const& x) {
      return sgn(x) == 0;
    });
  }

  bool Matrix::is_identity() const {
    if (_rows != _cols) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if ((*this)(i, j) != (i == j ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  Rational Matrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(_rows, _cols); ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  Matrix Matrix::transpose() const {
    Matrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols() != b.rows()) {
      throw std::invalid_argument("matrix product: shape mismatch");
    }
    Matrix   c(a.rows(), b.cols());
    Rational tmp;
    // Representation matrices are mostly monomial; skip zero entries.
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        Rational const& aik = a(i, k);
        if (sgn(aik) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          Rational const& bkj = b(k, j);
          if (sgn(bkj) == 0) {
            continue;
          }
          mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
          c(i, j) += tmp;
        }
      }
    }
    return c;
  }

  Matrix operator+(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw std::invalid_argument("matrix sum: shape mismatch");
    }
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) = a(i, j) + b(i, j);
      }
    }
    return c;
  }

  Matrix operator-(Matrix const& a, Matrix const& b) {
    return a + Rational(-1) * b;
  }

  Matrix operator*(Rational const& s, Matrix const& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) = s * a(i, j);
      }
    }
    return c;
  }

  Vector operator*(Matrix const& a, Vector const& v) {
    if (a.cols() != v.size()) {
      throw std::invalid_argument("matrix-vector product: shape mismatch");
    }
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) {
          out[i] += a(i, k) * v[k];
        }
      }
    }
    return out;
  }

  Matrix block_diagonal(Matrix const& a, Matrix const& b) {
    Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) = a(i, j);
      }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(a.rows() + i, a.cols() + j) = b(i, j);
      }
    }
    return c;
  }

  Matrix kronecker(Matrix const& a, Matrix const& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (sgn(a(i, j)) == 0) {
          continue;
        }
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return c;
  }

  Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
    std::size_t const n   = m.rows();
    Rational          det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && sgn(m(p, c)) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(p, j), m(c, j));
        }
        det = -det;
      }
      det *= m(c, c);
      for (std::size_t r = c + 1; r < n; ++r) {
        if (sgn(m(r, c)) == 0) {
          continue;
        }
        Rational const f = m(r, c) / m(c, c);
        for (std::size_t j = c; j < n; ++j) {
          m(r, j) -= f * m(c, j);
        }
      }
    }
    return det;
  }

  bool is_zero(Vector const& v) {
    return std::all_of(
        v.begin(), v.end(), [](auto const& x) { return sgn(x) == 0; });
  }

  ////////////////////////////////////////////////////////////////////////
  // EchelonBasis
  ////////////////////////////////////////////////////////////////////////

  Vector EchelonBasis::reduce(Vector v) const {
    if (v.size() != _ambient) {
      throw std::invalid_argument("EchelonBasis: vector of length "
                                  + std::to_string(v.size())
                                  + " in ambient dimension "
                                  + std::to_string(_ambient));
    }
    Rational tmp;
    for (std::size_t r = 0; r < _rows.size(); ++r) {
      Rational const f = v[_pivots[r]];
      if (sgn(f) == 0) {
        continue;
      }
      Vector const& row = _rows[r];
      for (std::size_t j = 0; j < _ambient; ++j) {
        if (sgn(row[j]) != 0) {
          mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), row[j].get_mpq_t());
          v[j] -= tmp;
        }
      }
    }
    return v;
  }

  bool EchelonBasis::add(Vector const& v) {
    Vector w = reduce(v);
    auto   it
        = std::find_if(w.begin(), w.end(), [](auto const& x) { return sgn(x) != 0; });
    if (it == w.end()) {
      return false;
    }
    std::size_t const p   = static_cast<std::size_t>(it - w.begin());
    Rational const    inv = 1 / w[p];
    for (auto& x : w) {
      x *= inv;
    }
    for (auto& row : _rows) {
      Rational const f = row[p];
      if (sgn(f) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < _ambient; ++j) {
        if (sgn(w[j]) != 0) {
          row[j] -= f * w[j];
        }
      }
    }
    auto const pos = std::lower_bound(_pivots.begin(), _pivots.end(), p)
                     - _pivots.begin();
    _pivots.insert(_pivots.begin() + pos, p);
    _rows.insert(_rows.begin() + pos, std::move(w));
    return true;
  }

  bool EchelonBasis::contains(Vector const& v) const {
    return is_zero(reduce(v));
  }

  std::vector<Vector> EchelonBasis::null_space() const {
    std::vector<bool> is_pivot(_ambient, false);
    for (auto p : _pivots) {
      is_pivot[p] = true;
    }
    std::vector<Vector> out;
    for (std::size_t f = 0; f < _ambient; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      Vector v(_ambient);
      v[f] = 1;
      for (std::size_t r = 0; r < _rows.size(); ++r) {
        v[_pivots[r]] = -_rows[r][f];
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subspace
  ////////////////////////////////////////////////////////////////////////

  Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      Vector e(ambient);
      e[i] = 1;
      s._basis.add(e);
    }
    return s;
  }

  Subspace Subspace::span(std::size_t ambient, std::vector<Vector> const& vs) {
    Subspace s(ambient);
    for (auto const& v : vs) {
      s._basis.add(v);
    }
    return s;
  }

  bool Subspace::contains(Vector const& v) const {
    return _basis.contains(v);
  }

  bool Subspace::contains(Subspace const& other) const {
    return std::all_of(other.basis().begin(),
                       other.basis().end(),
                       [this](auto const& v) { return contains(v); });
  }

  Vector Subspace::coordinates(Vector const& v) const {
    Vector out;
    out.reserve(dim());
    for (auto p : pivots()) {
      out.push_back(v[p]);
    }
    return out;
  }

  Subspace Subspace::intersect(Subspace const& other) const {
    // Vectors in both: solve sum a_i u_i = sum b_j w_j.
    std::size_t const n = ambient();
    std::size_t const k = dim() + other.dim();
    if (k == 0) {
      return Subspace(n);
    }
    // Columns are the basis vectors of both spaces; kernel gives relations.
    Matrix m(n, k);
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t r = 0; r < n; ++r) {
        m(r, i) = basis()[i][r];
      }
    }
    for (std::size_t j = 0; j < other.dim(); ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        m(r, dim() + j) = other.basis()[j][r];
      }
    }
    std::vector<Vector> vs;
    auto const relations = kernel(m);
    for (auto const& rel : relations.basis()) {
      Vector v(n);
      for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(rel[i]) == 0) {
          continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
          v[r] += rel[i] * basis()[i][r];
        }
      }
      vs.push_back(std::move(v));
    }
    return span(n, vs);
  }

  Subspace Subspace::sum(Subspace const& other) const {
    Subspace s = *this;
    for (auto const& v : other.basis()) {
      s._basis.add(v);
    }
    return s;
  }

  bool Subspace::operator==(Subspace const& that) const {
    return ambient() == that.ambient() && basis() == that.basis();
  }

  ////////////////////////////////////////////////////////////////////////
  // rref and friends
  ////////////////////////////////////////////////////////////////////////

  RrefResult rref(Matrix const& m) {
    EchelonBasis rows(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      rows.add(m.row(i));
    }
    RrefResult out;
    out.rank   = rows.rank();
    out.pivots = rows.pivots();
    out.echelon = Matrix(m.rows(), m.cols());
    for (std::size_t r = 0; r < rows.rank(); ++r) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out.echelon(r, j) = rows.rows()[r][j];
      }
    }
    out.kernel = Subspace::span(m.cols(), rows.null_space());
    out.image  = column_space(m);
    return out;
  }

  Subspace kernel(Matrix const& m) {
    EchelonBasis rows(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      rows.add(m.row(i));
    }
    return Subspace::span(m.cols(), rows.null_space());
  }

  Subspace column_space(Matrix const& m) {
    Subspace s(m.rows());
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cols.push_back(m.column(j));
    }
    return Subspace::span(m.rows(), cols);
  }

  std::size_t rank(Matrix const& m) {
    EchelonBasis rows(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      rows.add(m.row(i));
    }
    return rows.rank();
  }

}  // namespace munn
