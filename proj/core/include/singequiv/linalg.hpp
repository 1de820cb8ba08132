#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace singequiv {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground field: the rationals (characteristic 0) or a prime field F_p with
/// p < 2^31. Elements of F_p are stored as canonical integers in [0, p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  bool operator==(const Field&) const = default;

  Scalar from_integer(long v) const;
  // Accepts "3", "-2", "3/4".
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  // acc += a * b
  void fma(Scalar& acc, const Scalar& a, const Scalar& b) const;
  void reduce(Scalar& a) const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
// y += a * x
void axpy(const Field& f, Vector& y, const Scalar& a, const Vector& x);
Vector scaled(const Field& f, const Vector& x, const Scalar& a);
Vector add(const Field& f, const Vector& x, const Vector& y);
Vector sub(const Field& f, const Vector& x, const Vector& y);

/// Dense matrix with exact entries, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(Field field, const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  // this += s * other
  void add_scaled(const Matrix& other, const Scalar& s);

  // Rows [r0, r0+nr) x cols [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  static Matrix vstack(const std::vector<Matrix>& parts);
  static Matrix hstack(const std::vector<Matrix>& parts);

  bool operator==(const Matrix& rhs) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
Matrix kronecker(const Matrix& a, const Matrix& b);
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// A linear subspace of k^n, stored by its reduced row-echelon basis. Two
/// subspaces are equal iff their rref bases are equal.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient);

  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(const Matrix& rows);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace column_space(const Matrix& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector vector(std::size_t k) const { return basis_.row(k); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  // v minus its projection along the pivot columns; zero iff v lies here.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v with respect to basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  Subspace operator+(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);

}  // namespace singequiv
