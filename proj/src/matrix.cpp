#include "wrlat/matrix.hpp"

#include <sstream>

#include "wrlat/errors.hpp"

namespace wrlat {

IntVec canonical_sign(IntVec v) {
  for (const Int& c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (Int& x : v) x = -x;
    break;
  }
  return v;
}

bool is_zero(const IntVec& v) {
  for (const Int& c : v)
    if (c != 0) return false;
  return true;
}

bool output_lex_less(const IntVec& a, const IntVec& b) {
  // Descending comparison per coordinate: (1,0,0) sorts before (0,1,0).
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c > 0;
  }
  return a.size() < b.size();
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  e_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw ParseError("ragged matrix initializer");
    for (const auto& x : row) e_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rat>& d) {
  RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<IntVec>& columns) {
  const int k = static_cast<int>(columns.size());
  const int n = k ? static_cast<int>(columns[0].size()) : 0;
  RatMatrix m(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = Rat(columns[j][i]);
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  RatMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
  return out;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
  return out;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_upper_unitriangular() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != 0) return false;
  }
  return true;
}

Rat quad_value(const RatMatrix& m, const IntVec& v) {
  const int n = m.rows();
  Rat total = 0;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    Rat row = m(i, i) * v[i];
    for (int j = i + 1; j < n; ++j) {
      if (v[j] == 0) continue;
      row += 2 * m(i, j) * v[j];
    }
    total += row * v[i];
  }
  return total;
}

std::size_t SymForm::tri_index(int i, int j) const {
  // row-major upper triangle: row i starts after i*n - i(i-1)/2 entries
  return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
         (j - i);
}

const Rat& SymForm::operator()(int i, int j) const {
  return i <= j ? tri_[tri_index(i, j)] : tri_[tri_index(j, i)];
}

SymForm::SymForm(int n, std::vector<Rat> tri)
    : n_(n), tri_(std::move(tri)), lower_(n, n), det_(1) {
  if (n_ < 2) throw DimensionTooSmall("form dimension must be at least 2");
  // Rational LDL^T; a pivot <= 0 disproves positive definiteness.
  diag_.resize(n_);
  for (int j = 0; j < n_; ++j) {
    Rat d = (*this)(j, j);
    for (int k = 0; k < j; ++k) d -= lower_(j, k) * lower_(j, k) * diag_[k];
    if (d <= 0)
      throw NotPositiveDefinite("pivot " + std::to_string(j) + " is " +
                                wrlat::to_string(d));
    diag_[j] = d;
    det_ *= d;
    lower_(j, j) = 1;
    for (int i = j + 1; i < n_; ++i) {
      Rat s = (*this)(i, j);
      for (int k = 0; k < j; ++k) s -= lower_(i, k) * lower_(j, k) * diag_[k];
      lower_(i, j) = s / d;
    }
  }
}

SymForm SymForm::from_matrix(const RatMatrix& m) {
  if (!m.is_square()) throw ParseError("form matrix must be square");
  if (!m.is_symmetric()) throw NotPositiveDefinite("matrix is not symmetric");
  const int n = m.rows();
  std::vector<Rat> tri;
  tri.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) tri.push_back(m(i, j));
  return SymForm(n, std::move(tri));
}

SymForm SymForm::gram_of_basis(const RatMatrix& a) {
  if (!a.is_square()) throw ParseError("basis matrix must be square");
  return from_matrix(a.transposed() * a);
}

SymForm SymForm::identity(int n) {
  std::vector<Rat> d(n, Rat(1));
  return diagonal(d);
}

SymForm SymForm::diagonal(const std::vector<Rat>& d) {
  return from_matrix(RatMatrix::diagonal(d));
}

Rat SymForm::value(const IntVec& v) const {
  Rat total = 0;
  for (int i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    Rat row = (*this)(i, i) * v[i];
    for (int j = i + 1; j < n_; ++j) {
      if (v[j] == 0) continue;
      row += 2 * (*this)(i, j) * v[j];
    }
    total += row * v[i];
  }
  return total;
}

Rat SymForm::bilinear(const IntVec& u, const IntVec& v) const {
  Rat total = 0;
  for (int i = 0; i < n_; ++i) {
    if (u[i] == 0) continue;
    Rat row = 0;
    for (int j = 0; j < n_; ++j) {
      if (v[j] == 0) continue;
      row += (*this)(i, j) * v[j];
    }
    total += row * u[i];
  }
  return total;
}

RatMatrix SymForm::to_matrix() const {
  RatMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymForm SymForm::scaled(const Rat& c) const {
  if (c <= 0) throw NotPositiveDefinite("scale factor must be positive");
  std::vector<Rat> tri(tri_.size());
  for (std::size_t i = 0; i < tri_.size(); ++i) tri[i] = tri_[i] * c;
  return SymForm(n_, std::move(tri));
}

}  // namespace wrlat
