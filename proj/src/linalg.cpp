#include "wrlat/linalg.hpp"

#include <algorithm>

#include "wrlat/errors.hpp"

namespace wrlat {

LdltFactors ldlt(const SymForm& q) { return {q.ldlt_lower(), q.ldlt_diag()}; }

Rat det(const RatMatrix& m) {
  if (!m.is_square()) throw ParseError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;

  // Clear denominators: det(d*M) = d^n det(M) with d = lcm of denominators.
  Int d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int den = m(i, j).get_den();
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
  std::vector<std::vector<Int>> b(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat x = m(i, j) * d;
      b[i][j] = x.get_num();  // exact: denominator is 1
    }

  // Bareiss: all divisions below are exact.
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (b[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(b[k], b[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = b[i][j] * b[k][k] - b[i][k] * b[k][j];
        mpz_divexact(b[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      b[i][k] = 0;
    }
    prev = b[k][k];
  }
  Int dn = d;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
  return make_rat(sign * b[n - 1][n - 1], dn);
}

RatMatrix invert(const RatMatrix& m) {
  if (!m.is_square()) throw ParseError("inverse of a non-square matrix");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw SingularMatrix("matrix has no inverse");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    Rat p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

// Zeroes entry rows[j][col] against rows[i][col] with an extended-gcd row
// operation; both rows are modified, rows[i][col] becomes gcd.
void xgcd_rows(std::vector<IntVec>& rows, int i, int j, int col) {
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
             rows[i][col].get_mpz_t(), rows[j][col].get_mpz_t());
  Int a = rows[i][col] / g;
  Int b = rows[j][col] / g;
  const std::size_t n = rows[i].size();
  for (std::size_t c = 0; c < n; ++c) {
    Int ri = rows[i][c], rj = rows[j][c];
    rows[i][c] = x * ri + y * rj;
    rows[j][c] = a * rj - b * ri;
  }
}

}  // namespace

HnfResult hnf(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) throw ParseError("hnf of an empty vector list");
  const int n = static_cast<int>(vectors[0].size());
  for (const IntVec& v : vectors)
    if (static_cast<int>(v.size()) != n)
      throw ParseError("hnf input vectors have mixed lengths");

  std::vector<IntVec> rows = vectors;
  const int m = static_cast<int>(rows.size());
  int r = 0;  // next pivot row
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = r + 1; i < m; ++i)
      if (rows[i][col] != 0) xgcd_rows(rows, r, i, col);
    if (rows[r][col] < 0)
      for (Int& c : rows[r]) c = -c;
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                 rows[r][col].get_mpz_t());
      if (q == 0) continue;
      for (int c = col; c < n; ++c) rows[i][c] -= q * rows[r][c];
    }
    ++r;
  }

  HnfResult out;
  out.rank = r;
  out.basis.assign(rows.begin(), rows.begin() + r);
  if (r == n) {
    Int index = 1;
    for (int i = 0; i < n; ++i) index *= out.basis[i][i];
    out.index = index;
  }
  return out;
}

std::optional<int> psd_rank(const RatMatrix& m) {
  if (!m.is_symmetric()) return std::nullopt;
  const int n = m.rows();
  RatMatrix b = m;
  std::vector<bool> done(n, false);
  int rank = 0;
  for (;;) {
    int piv = -1;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (b(i, i) < 0) return std::nullopt;
      if (piv < 0 && b(i, i) > 0) piv = i;
    }
    if (piv < 0) {
      // All remaining diagonal entries are zero; PSD forces the rows to be
      // zero as well.
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j)
          if (!done[j] && b(i, j) != 0) return std::nullopt;
      }
      return rank;
    }
    ++rank;
    Rat p = b(piv, piv);
    for (int i = 0; i < n; ++i) {
      if (done[i] || i == piv) continue;
      if (b(i, piv) == 0) continue;
      Rat f = b(i, piv) / p;
      for (int j = 0; j < n; ++j) {
        if (done[j] || j == piv) continue;
        b(i, j) -= f * b(piv, j);
      }
    }
    done[piv] = true;
  }
}

}  // namespace wrlat
