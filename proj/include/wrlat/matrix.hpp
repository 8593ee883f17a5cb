#pragma once

#include <initializer_list>
#include <vector>

#include "wrlat/rational.hpp"

namespace wrlat {

/// Integer lattice vector.  API boundaries keep the canonical-sign
/// representative of the +-v pair: first nonzero coordinate positive.
using IntVec = std::vector<Int>;

/// Flips the sign if needed so the first nonzero coordinate is positive.
IntVec canonical_sign(IntVec v);

bool is_zero(const IntVec& v);

/// Ordering used for all vector output: lexicographic, largest leading
/// coordinates first, so e_1 < e_2 < ... < e_n.
bool output_lex_less(const IntVec& a, const IntVec& b);

std::string to_string(const IntVec& v);

/// Dense exact rational matrix with dimensions fixed at construction.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<Rat>& d);
  /// n x k matrix whose columns are the given integer vectors.
  static RatMatrix from_columns(const std::vector<IntVec>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return e_[i * static_cast<std::size_t>(cols_) + j]; }
  const Rat& operator()(int i, int j) const { return e_[i * static_cast<std::size_t>(cols_) + j]; }

  bool operator==(const RatMatrix& other) const = default;

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& c) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_upper_unitriangular() const;

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

/// v^T m v for a symmetric square matrix m.
Rat quad_value(const RatMatrix& m, const IntVec& v);

/// Symmetric positive definite rational form (the Gram matrix of a lattice
/// basis, up to rotation).  Only the upper triangle is stored; positive
/// definiteness is certified at construction by a rational LDL^T whose
/// factors (and the determinant) are kept for reuse.
class SymForm {
 public:
  /// Throws NotPositiveDefinite (also used to reject non-symmetric input
  /// disguised as a form; symmetry of `m` is checked exactly first).
  static SymForm from_matrix(const RatMatrix& m);
  /// Gram form a^T a of a basis matrix; PD iff a is nonsingular.
  static SymForm gram_of_basis(const RatMatrix& a);
  static SymForm identity(int n);
  static SymForm diagonal(const std::vector<Rat>& d);

  int dim() const { return n_; }
  const Rat& operator()(int i, int j) const;

  /// v^T Q v, exact.
  Rat value(const IntVec& v) const;
  /// u^T Q v, exact.
  Rat bilinear(const IntVec& u, const IntVec& v) const;

  /// Unit lower-triangular L and positive diagonal D with L D L^T = Q.
  const RatMatrix& ldlt_lower() const { return lower_; }
  const std::vector<Rat>& ldlt_diag() const { return diag_; }
  /// det Q = product of the LDL^T pivots.
  const Rat& det() const { return det_; }

  RatMatrix to_matrix() const;
  SymForm scaled(const Rat& c) const;  // c > 0

  bool operator==(const SymForm& other) const {
    return n_ == other.n_ && tri_ == other.tri_;
  }

 private:
  SymForm(int n, std::vector<Rat> tri);

  std::size_t tri_index(int i, int j) const;  // requires i <= j

  int n_;
  std::vector<Rat> tri_;  // upper triangle, row-major
  RatMatrix lower_;
  std::vector<Rat> diag_;
  Rat det_;
};

}  // namespace wrlat
