#include "tfr/numeric.hpp"

#include <gmp.h>

#include <algorithm>
#include <cassert>

namespace tfr {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(int(rows.size()), int(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (int(rows[r].size()) != m.cols()) throw std::invalid_argument("ragged row list");
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<std::vector<Int>>& cols) {
  return from_rows(cols).transposed();
}

std::vector<Int> IntMatrix::row(int r) const {
  std::vector<Int> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FieldChoice FieldChoice::prime_field(Int p) {
  if (p < 2) throw std::invalid_argument("prime field characteristic must be >= 2");
  if (mpz_probab_prime_p(p.backend().data(), 40) == 0)
    throw std::invalid_argument("prime field characteristic is composite");
  FieldChoice f;
  f.rational_ = false;
  f.p_ = std::move(p);
  return f;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.backend().data(), a.backend().data(), b.backend().data());
  return r;
}

Int vector_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

namespace {

void add_multiple_of_row(IntMatrix& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols(); ++c) m.at(dst, c) -= q * m.at(src, c);
}

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, int r) {
  for (int c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

} // namespace

HnfResult hermite_normal_form(const IntMatrix& input) {
  HnfResult res;
  res.h = input;
  res.u = IntMatrix::identity(input.rows());
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;

  int pivot_row = 0;
  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclidean reduction within the column until one nonzero entry remains
    // at or below pivot_row.
    for (;;) {
      int best = -1;
      for (int r = pivot_row; r < h.rows(); ++r) {
        if (h.at(r, col) == 0) continue;
        if (best < 0 || abs(h.at(r, col)) < abs(h.at(best, col))) best = r;
      }
      if (best < 0) break; // column is zero below pivot_row
      swap_rows(h, pivot_row, best);
      swap_rows(u, pivot_row, best);
      bool others = false;
      for (int r = pivot_row + 1; r < h.rows(); ++r) {
        if (h.at(r, col) == 0) continue;
        Int q = h.at(r, col) / h.at(pivot_row, col); // truncated division
        add_multiple_of_row(h, r, pivot_row, q);
        add_multiple_of_row(u, r, pivot_row, q);
        if (h.at(r, col) != 0) others = true;
      }
      if (!others) {
        if (h.at(pivot_row, col) < 0) {
          negate_row(h, pivot_row);
          negate_row(u, pivot_row);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (int r = 0; r < pivot_row; ++r) {
          Int q;
          mpz_fdiv_q(q.backend().data(), h.at(r, col).backend().data(),
                     h.at(pivot_row, col).backend().data());
          add_multiple_of_row(h, r, pivot_row, q);
          add_multiple_of_row(u, r, pivot_row, q);
        }
        ++pivot_row;
        break;
      }
    }
  }
  res.rank = pivot_row;
  return res;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("integer_kernel: empty matrix");
  // Row-HNF of the transpose: rows of U mapping to zero rows of H span the
  // kernel lattice of M.
  HnfResult r = hermite_normal_form(m.transposed());
  std::vector<std::vector<Int>> raw;
  for (int i = r.rank; i < r.u.rows(); ++i) raw.push_back(r.u.row(i));
  if (raw.empty()) return raw;
  // Canonical basis: HNF of the kernel generators themselves.
  HnfResult k = hermite_normal_form(IntMatrix::from_rows(raw));
  std::vector<std::vector<Int>> out;
  for (int i = 0; i < k.rank; ++i) out.push_back(k.h.row(i));
  return out;
}

namespace {

int rank_over_q(IntMatrix h) {
  int pivot_row = 0;
  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (;;) {
      int best = -1;
      for (int r = pivot_row; r < h.rows(); ++r) {
        if (h.at(r, col) == 0) continue;
        if (best < 0 || abs(h.at(r, col)) < abs(h.at(best, col))) best = r;
      }
      if (best < 0) break;
      swap_rows(h, pivot_row, best);
      bool others = false;
      for (int r = pivot_row + 1; r < h.rows(); ++r) {
        if (h.at(r, col) == 0) continue;
        Int q = h.at(r, col) / h.at(pivot_row, col);
        add_multiple_of_row(h, r, pivot_row, q);
        if (h.at(r, col) != 0) others = true;
      }
      if (!others) {
        // keep entries small: divide the pivot row by its content
        std::vector<Int> row = h.row(pivot_row);
        Int g = vector_gcd(row);
        if (g > 1)
          for (int c = 0; c < h.cols(); ++c) h.at(pivot_row, c) /= g;
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

Int mod_p(const Int& x, const Int& p) {
  Int r;
  mpz_fdiv_r(r.backend().data(), x.backend().data(), p.backend().data());
  return r;
}

Int inv_mod_p(const Int& x, const Int& p) {
  Int r;
  int ok = mpz_invert(r.backend().data(), x.backend().data(), p.backend().data());
  if (!ok) throw std::logic_error("inv_mod_p: not invertible");
  return r;
}

int rank_over_fp(const IntMatrix& m, const Int& p) {
  IntMatrix h = m;
  for (int r = 0; r < h.rows(); ++r)
    for (int c = 0; c < h.cols(); ++c) h.at(r, c) = mod_p(h.at(r, c), p);
  int pivot_row = 0;
  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    int piv = -1;
    for (int r = pivot_row; r < h.rows(); ++r)
      if (h.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    swap_rows(h, pivot_row, piv);
    Int inv = inv_mod_p(h.at(pivot_row, col), p);
    for (int r = pivot_row + 1; r < h.rows(); ++r) {
      if (h.at(r, col) == 0) continue;
      Int f = mod_p(h.at(r, col) * inv, p);
      for (int c = col; c < h.cols(); ++c)
        h.at(r, c) = mod_p(h.at(r, c) - f * h.at(pivot_row, c), p);
    }
    ++pivot_row;
  }
  return pivot_row;
}

} // namespace

int field_rank(const IntMatrix& m, const FieldChoice& k) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (k.is_rationals()) return rank_over_q(m);
  return rank_over_fp(m, k.prime());
}

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& m, const std::vector<Rat>& b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("solve_rational: dimension mismatch");
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a[r][c] = Rat(m.at(r, c));
    a[r][cols] = b[r];
  }
  std::vector<int> pivot_col_of_row;
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int piv = -1;
    for (int r = pivot_row; r < rows; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[pivot_row], a[piv]);
    Rat d = a[pivot_row][col];
    for (int c = col; c <= cols; ++c) a[pivot_row][c] /= d;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int c = col; c <= cols; ++c) a[r][c] -= f * a[pivot_row][c];
    }
    pivot_col_of_row.push_back(col);
    ++pivot_row;
  }
  for (int r = pivot_row; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (int r = 0; r < int(pivot_col_of_row.size()); ++r) x[pivot_col_of_row[r]] = a[r][cols];
  return x;
}

} // namespace tfr
