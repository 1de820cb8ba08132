#include "singequiv/linalg.hpp"

#include <algorithm>
#include <charconv>

namespace singequiv {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t as_u64(const Scalar& a) { return a.get_num().get_ui(); }

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw LinalgError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

void Field::reduce(Scalar& a) const {
  if (p_ == 0) return;
  if (a.get_den() != 1) {
    mpz_class num = a.get_num();
    mpz_class den = a.get_den();
    mpz_fdiv_r_ui(num.get_mpz_t(), num.get_mpz_t(), p_);
    mpz_fdiv_r_ui(den.get_mpz_t(), den.get_mpz_t(), p_);
    if (den == 0) throw LinalgError("denominator divisible by the characteristic");
    mpz_class inv_den;
    mpz_class mod = p_;
    mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    num = (num * inv_den) % mod;
    a = Scalar(num);
    return;
  }
  if (a >= 0 && a.get_num() < p_) return;
  mpz_class num = a.get_num();
  mpz_fdiv_r_ui(num.get_mpz_t(), num.get_mpz_t(), p_);
  a = Scalar(num);
}

Scalar Field::from_integer(long v) const {
  Scalar a(v);
  reduce(a);
  return a;
}

Scalar Field::parse(std::string_view text) const {
  if (text.empty()) throw LinalgError("empty scalar");
  Scalar a;
  try {
    a = Scalar(std::string(text));
  } catch (const std::invalid_argument&) {
    throw LinalgError("malformed scalar '" + std::string(text) + "'");
  }
  if (a.get_den() == 0) throw LinalgError("zero denominator in '" + std::string(text) + "'");
  a.canonicalize();
  reduce(a);
  return a;
}

std::string Field::format(const Scalar& a) const { return a.get_str(); }

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  std::uint64_t s = as_u64(a) + as_u64(b);
  if (s >= p_) s -= p_;
  return Scalar(static_cast<unsigned long>(s));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  std::uint64_t x = as_u64(a), y = as_u64(b);
  return Scalar(static_cast<unsigned long>(x >= y ? x - y : x + p_ - y));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(static_cast<unsigned long>((as_u64(a) * as_u64(b)) % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  std::uint64_t x = as_u64(a);
  return Scalar(static_cast<unsigned long>(x == 0 ? 0 : p_ - x));
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw LinalgError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class x = a.get_num();
  mpz_class mod = p_;
  mpz_invert(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return Scalar(r);
}

void Field::fma(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (p_ == 0) {
    acc += a * b;
    return;
  }
  acc = Scalar(static_cast<unsigned long>((as_u64(acc) + as_u64(a) * as_u64(b)) % p_));
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

void axpy(const Field& f, Vector& y, const Scalar& a, const Vector& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) f.fma(y[i], a, x[i]);
}

Vector scaled(const Field& f, const Vector& x, const Scalar& a) {
  Vector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] = f.mul(a, x[i]);
  return y;
}

Vector add(const Field& f, const Vector& x, const Vector& y) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = f.add(x[i], y[i]);
  return z;
}

Vector sub(const Field& f, const Vector& x, const Vector& y) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = f.sub(x[i], y[i]);
  return z;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LinalgError("from_rows: row length mismatch");
    m.set_row(r, rows[r]);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw LinalgError("from_columns: column length mismatch");
    m.set_column(c, cols[c]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw LinalgError("matrix product: dimension mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (sgn(b) != 0) field_.fma(out(i, j), a, b);
      }
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw LinalgError("matrix-vector product: dimension mismatch");
  Vector out(rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) != 0) field_.fma(out[i], a, v[k]);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw LinalgError("matrix sum: shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw LinalgError("matrix difference: shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

void Matrix::add_scaled(const Matrix& other, const Scalar& s) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw LinalgError("add_scaled: shape mismatch");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(other.data_[i]) != 0) field_.fma(data_[i], s, other.data_[i]);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts.front().cols()) throw LinalgError("vstack: column mismatch");
    rows += p.rows();
  }
  Matrix out(parts.front().field(), rows, parts.front().cols());
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    out.set_block(r0, 0, p);
    r0 += p.rows();
  }
  return out;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return {};
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts.front().rows()) throw LinalgError("hstack: row mismatch");
    cols += p.cols();
  }
  Matrix out(parts.front().field(), parts.front().rows(), cols);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    out.set_block(0, c0, p);
    c0 += p.cols();
  }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_ == rhs.field_ && data_ == rhs.data_;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(Matrix m) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  RrefResult out;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const Scalar inv = f.inv(m(r, c));
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(r, j)) == 0) continue;
      m(r, j) = f.mul(m(r, j), inv);
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar factor = f.neg(m(i, c));
      for (std::size_t j : support) f.fma(m(i, j), factor, m(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t u = 0; u < b.rows(); ++u)
        for (std::size_t v = 0; v < b.cols(); ++v)
          if (sgn(b(u, v)) != 0) out(i * b.rows() + u, j * b.cols() + v) = f.mul(x, b(u, v));
    }
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw LinalgError("solve: dimension mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  aug.set_column(m.cols(), b);
  RrefResult rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < rr.rank; ++k) x[rr.pivots[k]] = rr.reduced(k, m.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field field, std::size_t ambient) : ambient_(ambient), basis_(field, 0, ambient) {}

Subspace Subspace::full(Field field, std::size_t ambient) { return span(Matrix::identity(field, ambient)); }

Subspace Subspace::span(const Matrix& rows) {
  RrefResult rr = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = rr.reduced.block(0, 0, rr.rank, rows.cols());
  s.pivots_ = std::move(rr.pivots);
  return s;
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return Subspace(field, ambient);
  return span(Matrix::from_rows(field, vectors, ambient));
}

Subspace Subspace::column_space(const Matrix& m) { return span(m.transpose()); }

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw LinalgError("subspace reduce: dimension mismatch");
  Vector out = v;
  const Field& f = field();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Scalar c = out[pivots_[k]];
    if (sgn(c) == 0) continue;
    const Scalar nc = f.neg(c);
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      if (sgn(basis_(k, j)) != 0) f.fma(out[j], nc, basis_(k, j));
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.vector(k))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw LinalgError("subspace sum: ambient mismatch");
  if (dim() == 0) return other;
  if (other.dim() == 0) return *this;
  return span(Matrix::vstack({basis_, other.basis_}));
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && pivots_ == other.pivots_ && basis_ == other.basis_;
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < rr.rank; ++k) v[rr.pivots[k]] = f.neg(rr.reduced(k, free));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), vecs);
}

}  // namespace singequiv
