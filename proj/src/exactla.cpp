// Copyright 2026 The dualqf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualqf/exactla.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace dualqf {

namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(Errc::LengthMismatch, std::string(what) + ": expected length " + std::to_string(want) +
                                          ", got " + std::to_string(got));
  }
}

// Cofactor expansion is used up to this size, see adjugate().
constexpr std::size_t kCofactorLimit = 6;

Matrix minor_matrix(const Matrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  Matrix out(m.field(), n - 1, n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == skip_col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

Matrix cofactor_adjugate(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix adj(m.field(), n, n);
  if (n == 1) {
    adj(0, 0) = Scalar::one(m.field());
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar c = determinant(minor_matrix(m, i, j));
      adj(j, i) = (i + j) % 2 == 0 ? c : -c;
    }
  }
  return adj;
}

}  // namespace

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

Vector parse_vector(const FieldSpec& field, std::initializer_list<const char*> entries) {
  Vector v;
  v.reserve(entries.size());
  for (const char* e : entries) v.push_back(Scalar::parse(field, e));
  return v;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.empty()) throw Error(Errc::InvalidArgument, "dot of empty vectors needs an explicit field");
  return dot(a.front().field(), a, b);
}

Scalar dot(const FieldSpec& field, std::span<const Scalar> a, std::span<const Scalar> b) {
  require_length(b.size(), a.size(), "dot");
  Scalar acc = Scalar::zero(field);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_length(b.size(), a.size(), "add");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_length(b.size(), a.size(), "subtract");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& c, std::span<const Scalar> a) {
  Vector out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(c * x);
  return out;
}

bool is_zero(std::span<const Scalar> a) {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_length(rows[r].size(), cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw Error(Errc::FieldMismatch, "matrix entry from another field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& columns) {
  return from_rows(field, rows, columns).transpose();
}

Matrix Matrix::parse(const FieldSpec& field, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> parsed;
  for (const auto& r : rows) parsed.push_back(parse_vector(field, r));
  const std::size_t cols = parsed.empty() ? 0 : parsed.front().size();
  return from_rows(field, cols, parsed);
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

std::vector<Vector> Matrix::column_list() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  if (r0 > r1 || c0 > c1 || r1 > rows_ || c1 > cols_) {
    throw Error(Errc::DimensionMismatch, "block out of range");
  }
  Matrix b(field_, r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r) {
    for (std::size_t c = c0; c < c1; ++c) b(r - r0, c - c0) = (*this)(r, c);
  }
  return b;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  if (field_ != rhs.field_) throw Error(Errc::FieldMismatch, "matrix product across fields");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

Vector Matrix::operator*(std::span<const Scalar> x) const {
  require_length(x.size(), cols_, "matrix-vector product");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!x[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const { return dualqf::is_zero(data_); }

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

RrefResult rref(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix r = m;
  Matrix t = Matrix::identity(m.field(), rows);
  std::vector<std::size_t> pivots;

  auto swap_rows = [](Matrix& a, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
  };
  // row_i <- row_i - f * row_j
  auto eliminate = [](Matrix& a, std::size_t i, std::size_t j, const Scalar& f) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(j, c).is_zero()) a(i, c) -= f * a(j, c);
    }
  };

  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && r(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    swap_rows(r, lead, piv);
    swap_rows(t, lead, piv);

    Scalar inv = invert(r(lead, col));
    for (std::size_t c = 0; c < cols; ++c) r(lead, c) *= inv;
    for (std::size_t c = 0; c < rows; ++c) t(lead, c) *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || r(i, col).is_zero()) continue;
      Scalar f = r(i, col);
      eliminate(r, i, lead, f);
      eliminate(t, i, lead, f);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(t), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const FieldSpec& field = m.field();
  if (n == 0) return Scalar::one(field);

  Matrix a = m;
  bool negate = false;
  auto pivot_into = [&](std::size_t k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return false;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    return true;
  };

  if (field.kind() == FieldKind::Rational) {
    // Bareiss: after step k every a(i, j) with i, j > k is a (k+1)-minor, and
    // the division by the previous pivot is exact.
    Scalar prev = Scalar::one(field);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (!pivot_into(k)) return Scalar::zero(field);
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
      }
      prev = a(k, k);
    }
    Scalar det = a(n - 1, n - 1);
    return negate ? -det : det;
  }

  Scalar det = Scalar::one(field);
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot_into(k)) return Scalar::zero(field);
    det *= a(k, k);
    Scalar inv = invert(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return negate ? -det : det;
}

Matrix invert_matrix(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  auto res = rref(m);
  if (res.pivots.size() < m.rows()) throw Error(Errc::Singular, "matrix is singular");
  return std::move(res.transform);
}

Matrix adjugate(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "adjugate of a non-square matrix");
  if (m.rows() <= kCofactorLimit) return cofactor_adjugate(m);
  Scalar det = determinant(m);
  if (det.is_zero()) return cofactor_adjugate(m);
  return invert_matrix(m).scaled(det);
}

Subspace::Subspace(const FieldSpec& field, std::size_t ambient_dim)
    : field_(field), ambient_dim_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  auto res = rref(Matrix::from_rows(field, ambient_dim, vectors));
  s.basis_ = res.reduced.block(0, res.pivots.size(), 0, ambient_dim);
  return s;
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  s.basis_ = Matrix::identity(field, ambient_dim);
  return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  require_length(v.size(), ambient_dim_, "subspace membership");
  // Reduce v against the RREF rows; v is inside iff nothing survives.
  Vector rest(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t lead = 0;
    while (basis_(r, lead).is_zero()) ++lead;
    if (rest[lead].is_zero()) continue;
    Scalar f = rest[lead];
    for (std::size_t c = lead; c < ambient_dim_; ++c) rest[c] -= f * basis_(r, c);
  }
  return dualqf::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  const FieldSpec& field = m.field();
  const std::size_t n = m.cols();
  auto res = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : res.pivots) is_pivot[p] = true;

  std::vector<Vector> generators;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(field, n, f);
    for (std::size_t r = 0; r < res.pivots.size(); ++r) v[res.pivots[r]] = -res.reduced(r, f);
    generators.push_back(std::move(v));
  }
  return Subspace::span(field, n, generators);
}

std::optional<Solution> solve(const Matrix& m, std::span<const Scalar> b) {
  require_length(b.size(), m.rows(), "solve right-hand side");
  const FieldSpec& field = m.field();
  const std::size_t n = m.cols();
  Matrix aug(field, m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto res = rref(aug);
  if (!res.pivots.empty() && res.pivots.back() == n) return std::nullopt;

  Vector x = zero_vector(field, n);
  for (std::size_t r = 0; r < res.pivots.size(); ++r) x[res.pivots[r]] = res.reduced(r, n);
  return Solution{std::move(x), kernel(m)};
}

Subspace annihilator(const Subspace& t) { return kernel(t.basis()); }

std::vector<Vector> extend_vectors(const std::vector<Vector>& prefix, const Subspace& outer) {
  const FieldSpec& field = outer.field();
  const std::size_t n = outer.ambient_dim();
  for (const auto& v : prefix) {
    if (!outer.contains(v)) throw Error(Errc::NotNested, "prefix vector is not contained in the outer subspace");
  }
  std::vector<Vector> out = prefix;
  if (!out.empty() && rank(Matrix::from_rows(field, n, out)) != out.size()) {
    throw Error(Errc::InvalidArgument, "prefix vectors are linearly dependent");
  }
  for (std::size_t r = 0; r < outer.dim() && out.size() < outer.dim(); ++r) {
    out.push_back(outer.basis().row_vector(r));
    if (rank(Matrix::from_rows(field, n, out)) != out.size()) out.pop_back();
  }
  return out;
}

std::vector<Vector> extend_basis(const Subspace& inner, const Subspace& outer) {
  if (inner.ambient_dim() != outer.ambient_dim() || !outer.contains(inner)) {
    throw Error(Errc::NotNested, "inner subspace is not contained in the outer subspace");
  }
  return extend_vectors(inner.basis_vectors(), outer);
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, std::span<const Scalar> v) {
  if (basis.empty()) {
    if (is_zero(v)) return Vector{};
    return std::nullopt;
  }
  const FieldSpec& field = basis.front().empty() ? v.front().field() : basis.front().front().field();
  auto sol = solve(Matrix::from_columns(field, v.size(), basis), v);
  if (!sol) return std::nullopt;
  return std::move(sol->particular);
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace dualqf
