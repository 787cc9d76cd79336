#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace tfr {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_cols(const std::vector<std::vector<Int>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  std::vector<Int> row(int r) const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix& o) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

/// Coefficient field: the rationals or a prime field F_p.
class FieldChoice {
public:
  static FieldChoice rationals() { return FieldChoice(); }
  static FieldChoice prime_field(Int p);

  bool is_rationals() const { return rational_; }
  const Int& prime() const { return p_; }

  bool operator==(const FieldChoice& o) const = default;

private:
  FieldChoice() = default;
  bool rational_ = true;
  Int p_ = 0;
};

struct HnfResult {
  IntMatrix h;  // row Hermite normal form of the input
  IntMatrix u;  // unimodular transform with u * input = h
  int rank = 0; // number of nonzero rows of h
};

/// Row-style Hermite normal form with transformation matrix.
/// Pivoting is deterministic: leftmost column first, smallest absolute
/// value as the Euclidean pivot, lowest row index on ties.
HnfResult hermite_normal_form(const IntMatrix& m);

/// Basis of the integer kernel {v : Mv = 0} as a lattice in Z^cols.
/// Rows are HNF-canonicalized; empty iff the kernel is trivial.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m);

/// Rank of m over the chosen field.
int field_rank(const IntMatrix& m, const FieldChoice& k);

/// Some rational solution of M x = b, or nullopt if the system is
/// inconsistent. Free variables are set to zero.
std::optional<std::vector<Rat>> solve_rational(const IntMatrix& m, const std::vector<Rat>& b);

Int gcd(const Int& a, const Int& b);
Int vector_gcd(const std::vector<Int>& v);

} // namespace tfr
