#include "hopf/matrix.hpp"

#include <algorithm>
#include <map>

#include "hopf/errors.hpp"

namespace hopf {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw ShapeError("ragged matrix");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = Scalar(f, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw ShapeError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) out[i] += a * v[k];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(*this);
  for (auto& x : out.data_) x *= c;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, cols[j]);
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

EchelonForm row_echelon(const Matrix& m) {
  EchelonForm e{m, {}};
  Matrix& a = e.reduced;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < C; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  EchelonForm e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    vecs.push_back(std::move(v));
  }
  if (vecs.empty()) return Matrix(f, m.cols(), 0);
  EchelonForm t = row_echelon(Matrix::from_rows(f, m.cols(), vecs));
  return t.reduced.block(0, 0, t.pivots.size(), m.cols()).transpose();
}

std::vector<std::size_t> echelon_leads(const Matrix& basis) {
  std::vector<std::size_t> leads;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    std::size_t r = 0;
    while (r < basis.rows() && basis(r, c).is_zero()) ++r;
    if (r == basis.rows()) throw ShapeError("zero column in echelon basis");
    leads.push_back(r);
  }
  return leads;
}

std::optional<Vector> echelon_coordinates(const Matrix& basis, const Vector& v) {
  if (v.size() != basis.rows()) throw ShapeError("coordinate vector length mismatch");
  auto leads = echelon_leads(basis);
  Vector c;
  c.reserve(leads.size());
  for (auto r : leads) c.push_back(v[r]);
  if (basis * c != v) return std::nullopt;
  return c;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  EchelonForm e = row_echelon(aug);
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  EchelonForm e = row_echelon(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Matrix tensor_of_maps(const Matrix& f, const Matrix& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("tensor of maps over different fields");
  Matrix out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& a = f(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l)
          if (!g(k, l).is_zero()) out(i * g.rows() + k, j * g.cols() + l) = a * g(k, l);
    }
  return out;
}

std::size_t int_pow(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n;
  return r;
}

Scalar primitive_root_of_unity(unsigned n, const Field& f) {
  if (n == 0) throw NoSuchRoot("order 0 root of unity");
  if (!f.is_prime()) {
    if (n == 1) return Scalar::one(f);
    if (n == 2) return Scalar(f, -1);
    throw NoSuchRoot("Q has no primitive root of unity of order " + std::to_string(n));
  }
  const std::uint64_t p = f.characteristic();
  if ((p - 1) % n != 0)
    throw NoSuchRoot(f.name() + " has no primitive root of unity of order " + std::to_string(n));
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = p - 1;
  for (std::uint64_t d = 2; d * d <= rest; ++d)
    if (rest % d == 0) {
      prime_factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  if (rest > 1) prime_factors.push_back(rest);
  for (std::uint64_t g = 1; g < p; ++g) {
    Scalar cand(f, static_cast<long long>(g));
    bool generator = true;
    for (auto q : prime_factors)
      if (cand.pow(static_cast<long long>((p - 1) / q)).is_one()) {
        generator = false;
        break;
      }
    if (generator || p == 2) return cand.pow(static_cast<long long>((p - 1) / n));
  }
  throw NoSuchRoot("no primitive root found");
}

TensorIndex::TensorIndex(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
  for (auto f : factors_) size_ *= f;
}

std::size_t TensorIndex::flatten(const std::vector<std::size_t>& idx) const {
  if (idx.size() != factors_.size()) throw ShapeError("multi-index arity mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= factors_[i]) throw ShapeError("multi-index out of range");
    flat = flat * factors_[i] + idx[i];
  }
  return flat;
}

std::vector<std::size_t> TensorIndex::unflatten(std::size_t flat) const {
  if (flat >= size_) throw ShapeError("flat index out of range");
  std::vector<std::size_t> idx(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    idx[i] = flat % factors_[i];
    flat /= factors_[i];
  }
  return idx;
}

namespace {

// r <- r - c * p, both sorted by column.
SparseRow subtract_scaled(const SparseRow& r, const Scalar& c, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(c * p[j].second));
      ++j;
    } else {
      Scalar v = r[i].second - c * p[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::optional<Vector> solve_sparse(const Field& f, std::vector<SparseRow> rows, Vector rhs,
                                   std::size_t cols) {
  if (rows.size() != rhs.size()) throw ShapeError("sparse system shape mismatch");
  struct Pivot {
    SparseRow row;
    Scalar rhs;
  };
  std::map<std::size_t, Pivot> pivots;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    SparseRow row;
    std::map<std::size_t, Scalar> merged;
    for (auto& [c, v] : rows[k]) {
      if (c >= cols) throw ShapeError("sparse column out of range");
      auto it = merged.find(c);
      if (it == merged.end())
        merged.emplace(c, v);
      else
        it->second += v;
    }
    for (auto& [c, v] : merged)
      if (!v.is_zero()) row.emplace_back(c, v);
    Scalar b = rhs[k];
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      Scalar c = row.front().second;
      row = subtract_scaled(row, c, it->second.row);
      b -= c * it->second.rhs;
    }
    if (row.empty()) {
      if (!b.is_zero()) return std::nullopt;
      continue;
    }
    Scalar inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    b *= inv;
    std::size_t lead = row.front().first;
    pivots.emplace(lead, Pivot{std::move(row), b});
  }
  Vector x = zero_vector(f, cols);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Scalar v = it->second.rhs;
    for (std::size_t e = 1; e < it->second.row.size(); ++e) {
      const auto& [c, a] = it->second.row[e];
      if (!x[c].is_zero()) v -= a * x[c];
    }
    x[it->first] = v;
  }
  return x;
}

}  // namespace hopf
