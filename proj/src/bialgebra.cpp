#include "hopf/bialgebra.hpp"

#include <map>

#include "hopf/errors.hpp"

namespace hopf {

CoTable cotable_from_matrix(const Matrix& m, std::size_t left_dim, std::size_t right_dim) {
  if (m.rows() != left_dim * right_dim) throw ShapeError("co-table shape mismatch");
  CoTable t(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) t[c].push_back({r / right_dim, r % right_dim, m(r, c)});
  return t;
}

Matrix cotable_to_matrix(const Field& f, const CoTable& t, std::size_t left_dim, std::size_t right_dim) {
  Matrix m(f, left_dim * right_dim, t.size());
  for (std::size_t c = 0; c < t.size(); ++c)
    for (const auto& term : t[c]) m(term.left * right_dim + term.right, c) += term.coeff;
  return m;
}

CoTable canonical_cotable(const CoTable& t) {
  CoTable out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    for (const auto& term : t[i]) {
      auto key = std::make_pair(term.left, term.right);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, term.coeff);
      else
        it->second += term.coeff;
    }
    for (auto& [key, c] : acc)
      if (!c.is_zero()) out[i].push_back({key.first, key.second, c});
  }
  return out;
}

FiniteBialgebra FiniteBialgebra::empty(const Field& f, std::size_t dim) {
  FiniteBialgebra b;
  b.field = f;
  b.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) b.labels.push_back("e" + std::to_string(i));
  b.mult.assign(dim * dim * dim, Scalar::zero(f));
  b.unit = zero_vector(f, dim);
  b.comult.assign(dim, {});
  b.counit = zero_vector(f, dim);
  return b;
}

Vector FiniteBialgebra::basis_product(std::size_t i, std::size_t j) const {
  auto begin = mult.begin() + static_cast<std::ptrdiff_t>((i * dim + j) * dim);
  return Vector(begin, begin + static_cast<std::ptrdiff_t>(dim));
}

Vector FiniteBialgebra::product(const Vector& a, const Vector& b) const {
  Vector out = zero_vector(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& s = m(i, j, k);
        if (!s.is_zero()) out[k] += c * s;
      }
    }
  }
  return out;
}

Vector FiniteBialgebra::coproduct(const Vector& a) const {
  Vector out = zero_vector(field, dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : comult[i]) out[t.left * dim + t.right] += a[i] * t.coeff;
  }
  return out;
}

Scalar FiniteBialgebra::apply_counit(const Vector& a) const { return dot(counit, a); }

Matrix FiniteBialgebra::mult_matrix() const {
  Matrix out(field, dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) out(k, i * dim + j) = m(i, j, k);
  return out;
}

Matrix FiniteBialgebra::comult_matrix() const { return cotable_to_matrix(field, comult, dim, dim); }

Matrix FiniteBialgebra::left_mult(std::size_t i) const {
  Matrix out(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) out(k, j) = m(i, j, k);
  return out;
}

Matrix FiniteBialgebra::right_mult(std::size_t i) const {
  Matrix out(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) out(k, j) = m(j, i, k);
  return out;
}

void FiniteBialgebra::validate() const {
  if (labels.size() != dim) throw ShapeError("label count does not match dimension");
  if (mult.size() != dim * dim * dim) throw ShapeError("multiplication table has wrong size");
  if (unit.size() != dim || counit.size() != dim) throw ShapeError("unit/counit has wrong length");
  if (comult.size() != dim) throw ShapeError("comultiplication table has wrong size");
  for (const auto& terms : comult)
    for (const auto& t : terms)
      if (t.left >= dim || t.right >= dim) throw ShapeError("comultiplication index out of range");
  for (const auto& s : mult)
    if (!(s.field() == field)) throw FieldMismatch("multiplication entry over wrong field");
}

bool FiniteBialgebra::operator==(const FiniteBialgebra& o) const {
  return field == o.field && dim == o.dim && mult == o.mult && unit == o.unit && counit == o.counit &&
         comult_matrix() == o.comult_matrix();
}

const Matrix& FiniteHopf::antipode_inv() const {
  if (!antipode_inverse) throw NotInvertible("antipode is not bijective");
  return *antipode_inverse;
}

bool FiniteHopf::operator==(const FiniteHopf& o) const {
  return FiniteBialgebra::operator==(o) && antipode == o.antipode;
}

namespace {

// Product in A (x) B of two flattened tensors.
Vector tensor_algebra_product(const FiniteBialgebra& a, const FiniteBialgebra& b, const Vector& u,
                              const Vector& v) {
  Vector out = zero_vector(a.field, a.dim * b.dim);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p].is_zero()) continue;
    std::size_t i = p / b.dim, j = p % b.dim;
    for (std::size_t q = 0; q < v.size(); ++q) {
      if (v[q].is_zero()) continue;
      std::size_t k = q / b.dim, l = q % b.dim;
      Scalar c = u[p] * v[q];
      for (std::size_t x = 0; x < a.dim; ++x) {
        const Scalar& s = a.m(i, k, x);
        if (s.is_zero()) continue;
        Scalar cs = c * s;
        for (std::size_t y = 0; y < b.dim; ++y) {
          const Scalar& t = b.m(j, l, y);
          if (!t.is_zero()) out[x * b.dim + y] += cs * t;
        }
      }
    }
  }
  return out;
}

}  // namespace

Report check_bialgebra(const FiniteBialgebra& b) {
  b.validate();
  Report r;
  const std::size_t n = b.dim;
  const Field& f = b.field;
  std::vector<Vector> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = b.basis_product(i, j);
  auto times_basis_right = [&](const Vector& x, std::size_t l) {
    Vector out = zero_vector(f, n);
    for (std::size_t k = 0; k < n; ++k)
      if (!x[k].is_zero()) axpy(out, x[k], prod[k * n + l]);
    return out;
  };
  auto times_basis_left = [&](std::size_t i, const Vector& x) {
    Vector out = zero_vector(f, n);
    for (std::size_t k = 0; k < n; ++k)
      if (!x[k].is_zero()) axpy(out, x[k], prod[i * n + k]);
    return out;
  };

  r.note_check("associativity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        expect_equal(r, "associativity", {i, j, l}, times_basis_right(prod[i * n + j], l),
                     times_basis_left(i, prod[j * n + l]));
  r.note_check("unit");
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(f, n, i);
    expect_equal(r, "left_unit", {i}, b.product(b.unit, e), e);
    expect_equal(r, "right_unit", {i}, b.product(e, b.unit), e);
  }

  r.note_check("coassociativity");
  for (std::size_t i = 0; i < n; ++i) {
    Vector lhs = zero_vector(f, n * n * n), rhs = zero_vector(f, n * n * n);
    for (const auto& t : b.comult[i]) {
      for (const auto& u : b.comult[t.left]) lhs[(u.left * n + u.right) * n + t.right] += t.coeff * u.coeff;
      for (const auto& u : b.comult[t.right]) rhs[(t.left * n + u.left) * n + u.right] += t.coeff * u.coeff;
    }
    expect_equal(r, "coassociativity", {i}, lhs, rhs);
  }
  r.note_check("counit");
  for (std::size_t i = 0; i < n; ++i) {
    Vector lhs = zero_vector(f, n), rhs = zero_vector(f, n);
    for (const auto& t : b.comult[i]) {
      lhs[t.right] += b.counit[t.left] * t.coeff;
      rhs[t.left] += b.counit[t.right] * t.coeff;
    }
    Vector e = unit_vector(f, n, i);
    expect_equal(r, "left_counit", {i}, lhs, e);
    expect_equal(r, "right_counit", {i}, rhs, e);
  }

  r.note_check("compatibility");
  std::vector<Vector> cop(n);
  for (std::size_t i = 0; i < n; ++i) cop[i] = b.coproduct(unit_vector(f, n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      expect_equal(r, "comult_multiplicative", {i, j}, b.coproduct(prod[i * n + j]),
                   tensor_algebra_product(b, b, cop[i], cop[j]));
      expect_equal(r, "counit_multiplicative", {i, j}, b.apply_counit(prod[i * n + j]),
                   b.counit[i] * b.counit[j]);
    }
  expect_equal(r, "comult_unit", {}, b.coproduct(b.unit), kron(b.unit, b.unit));
  expect_equal(r, "counit_unit", {}, b.apply_counit(b.unit), Scalar::one(f));
  return r;
}

Report check_antipode(const FiniteBialgebra& b, const Matrix& s) {
  Report r;
  r.note_check("antipode");
  const std::size_t n = b.dim;
  if (s.rows() != n || s.cols() != n) throw ShapeError("antipode shape mismatch");
  std::vector<Vector> scol(n);
  for (std::size_t a = 0; a < n; ++a) scol[a] = s.column(a);
  for (std::size_t i = 0; i < n; ++i) {
    Vector lhs = zero_vector(b.field, n), rhs = zero_vector(b.field, n);
    for (const auto& t : b.comult[i]) {
      axpy(lhs, t.coeff, b.product(scol[t.left], unit_vector(b.field, n, t.right)));
      axpy(rhs, t.coeff, b.product(unit_vector(b.field, n, t.left), scol[t.right]));
    }
    Vector expected = scale(b.counit[i], b.unit);
    expect_equal(r, "antipode_left", {i}, lhs, expected);
    expect_equal(r, "antipode_right", {i}, rhs, expected);
  }
  return r;
}

Matrix compute_antipode(const FiniteBialgebra& b) {
  b.validate();
  const std::size_t n = b.dim;
  const Field& f = b.field;
  // Unknown S(r, a) (coefficient of e_r in S(e_a)) has index a*n + r.
  std::vector<SparseRow> rows;
  Vector rhs;
  for (int side = 0; side < 2; ++side)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::map<std::size_t, Scalar>> eq(n);
      for (const auto& t : b.comult[i])
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t k = 0; k < n; ++k) {
            const Scalar& s = side == 0 ? b.m(r, t.right, k) : b.m(t.left, r, k);
            if (s.is_zero()) continue;
            std::size_t var = (side == 0 ? t.left : t.right) * n + r;
            auto [it, fresh] = eq[k].try_emplace(var, Scalar::zero(f));
            it->second += t.coeff * s;
          }
      for (std::size_t k = 0; k < n; ++k) {
        SparseRow row;
        for (auto& [var, c] : eq[k])
          if (!c.is_zero()) row.emplace_back(var, c);
        rows.push_back(std::move(row));
        rhs.push_back(b.counit[i] * b.unit[k]);
      }
    }
  auto x = solve_sparse(f, std::move(rows), std::move(rhs), n * n);
  if (!x) throw NoAntipode("no antipode: the convolution-inverse system is inconsistent");
  Matrix s(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < n; ++r) s(r, a) = (*x)[a * n + r];
  if (!check_antipode(b, s).ok()) throw NoAntipode("no antipode: solution fails verification");
  return s;
}

FiniteHopf make_hopf(const FiniteBialgebra& b) {
  FiniteHopf h;
  static_cast<FiniteBialgebra&>(h) = b;
  h.antipode = compute_antipode(b);
  h.antipode_inverse = inverse(h.antipode);
  return h;
}

FiniteBialgebra opposite_bialgebra(const FiniteBialgebra& b) {
  FiniteBialgebra o = b;
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k) o.m(i, j, k) = b.m(j, i, k);
  return o;
}

FiniteBialgebra coopposite_bialgebra(const FiniteBialgebra& b) {
  FiniteBialgebra o = b;
  for (auto& terms : o.comult)
    for (auto& t : terms) std::swap(t.left, t.right);
  return o;
}

FiniteBialgebra dual_bialgebra(const FiniteBialgebra& b) {
  const std::size_t n = b.dim;
  FiniteBialgebra d = FiniteBialgebra::empty(b.field, n);
  for (std::size_t i = 0; i < n; ++i) d.labels[i] = b.labels[i] + "*";
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : b.comult[k]) d.m(t.left, t.right, k) += t.coeff;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!b.m(i, j, k).is_zero()) d.comult[k].push_back({i, j, b.m(i, j, k)});
  d.unit = b.counit;
  d.counit = b.unit;
  return d;
}

FiniteBialgebra tensor_product_bialgebra(const FiniteBialgebra& a, const FiniteBialgebra& b) {
  if (!(a.field == b.field)) throw FieldMismatch("tensor product over different fields");
  const std::size_t n = a.dim * b.dim;
  FiniteBialgebra t = FiniteBialgebra::empty(a.field, n);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) t.labels[i * b.dim + j] = a.labels[i] + "(x)" + b.labels[j];
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t x = 0; x < a.dim; ++x) {
        const Scalar& s = a.m(i, k, x);
        if (s.is_zero()) continue;
        for (std::size_t j = 0; j < b.dim; ++j)
          for (std::size_t l = 0; l < b.dim; ++l)
            for (std::size_t y = 0; y < b.dim; ++y)
              if (!b.m(j, l, y).is_zero()) t.m(i * b.dim + j, k * b.dim + l, x * b.dim + y) = s * b.m(j, l, y);
      }
  t.unit = kron(a.unit, b.unit);
  t.counit = kron(a.counit, b.counit);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (const auto& u : a.comult[i])
        for (const auto& v : b.comult[j])
          t.comult[i * b.dim + j].push_back({u.left * b.dim + v.left, u.right * b.dim + v.right, u.coeff * v.coeff});
  return t;
}

FiniteHopf opposite_hopf(const FiniteHopf& h) {
  FiniteHopf o;
  static_cast<FiniteBialgebra&>(o) = opposite_bialgebra(h);
  o.antipode = h.antipode_inv();
  o.antipode_inverse = h.antipode;
  return o;
}

FiniteHopf coopposite_hopf(const FiniteHopf& h) {
  FiniteHopf o;
  static_cast<FiniteBialgebra&>(o) = coopposite_bialgebra(h);
  o.antipode = h.antipode_inv();
  o.antipode_inverse = h.antipode;
  return o;
}

FiniteHopf dual_hopf(const FiniteHopf& h) {
  FiniteHopf d;
  static_cast<FiniteBialgebra&>(d) = dual_bialgebra(h);
  d.antipode = h.antipode.transpose();
  if (h.antipode_inverse) d.antipode_inverse = h.antipode_inverse->transpose();
  return d;
}

FiniteHopf tensor_product_hopf(const FiniteHopf& a, const FiniteHopf& b) {
  FiniteHopf t;
  static_cast<FiniteBialgebra&>(t) = tensor_product_bialgebra(a, b);
  t.antipode = tensor_of_maps(a.antipode, b.antipode);
  if (a.antipode_inverse && b.antipode_inverse)
    t.antipode_inverse = tensor_of_maps(*a.antipode_inverse, *b.antipode_inverse);
  return t;
}

Matrix convolution(const Matrix& f, const Matrix& g, const FiniteBialgebra& c, const FiniteBialgebra& a) {
  if (f.cols() != c.dim || g.cols() != c.dim || f.rows() != a.dim || g.rows() != a.dim)
    throw ShapeError("convolution shape mismatch");
  Matrix out(a.field, a.dim, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) {
    Vector v = zero_vector(a.field, a.dim);
    for (const auto& t : c.comult[i]) axpy(v, t.coeff, a.product(f.column(t.left), g.column(t.right)));
    out.set_column(i, v);
  }
  return out;
}

Matrix unit_counit(const FiniteBialgebra& c, const FiniteBialgebra& a) {
  Matrix out(a.field, a.dim, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) out.set_column(i, scale(c.counit[i], a.unit));
  return out;
}

Report check_algebra_map(const Matrix& f, const FiniteBialgebra& src, const FiniteBialgebra& tgt) {
  if (f.rows() != tgt.dim || f.cols() != src.dim) throw ShapeError("map shape mismatch");
  Report r;
  r.note_check("multiplicative");
  std::vector<Vector> img(src.dim);
  for (std::size_t i = 0; i < src.dim; ++i) img[i] = f.column(i);
  for (std::size_t i = 0; i < src.dim; ++i)
    for (std::size_t j = 0; j < src.dim; ++j)
      expect_equal(r, "map_multiplicative", {i, j}, f * src.basis_product(i, j), tgt.product(img[i], img[j]));
  expect_equal(r, "map_unit", {}, f * src.unit, tgt.unit);
  return r;
}

Report check_coalgebra_map(const Matrix& f, const FiniteBialgebra& src, const FiniteBialgebra& tgt) {
  if (f.rows() != tgt.dim || f.cols() != src.dim) throw ShapeError("map shape mismatch");
  Report r;
  r.note_check("comultiplicative");
  for (std::size_t i = 0; i < src.dim; ++i) {
    Vector lhs = zero_vector(src.field, tgt.dim * tgt.dim);
    for (const auto& t : src.comult[i]) axpy(lhs, t.coeff, kron(f.column(t.left), f.column(t.right)));
    Vector img = f.column(i);
    expect_equal(r, "map_comultiplicative", {i}, lhs, tgt.coproduct(img));
    expect_equal(r, "map_counit", {i}, tgt.apply_counit(img), src.counit[i]);
  }
  return r;
}

Report check_bialgebra_map(const Matrix& f, const FiniteBialgebra& src, const FiniteBialgebra& tgt) {
  Report r = check_algebra_map(f, src, tgt);
  r.merge(check_coalgebra_map(f, src, tgt));
  return r;
}

AbelianGroup::AbelianGroup(std::vector<std::size_t> orders) : orders_(std::move(orders)), index_(orders_) {
  for (auto o : orders_)
    if (o == 0) throw SchemaError("cyclic factor of order 0");
}

std::size_t AbelianGroup::index(const std::vector<std::size_t>& exps) const {
  if (exps.size() != orders_.size()) throw SchemaError("group element has wrong number of exponents");
  std::vector<std::size_t> red(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) red[i] = exps[i] % orders_[i];
  return index_.flatten(red);
}

std::size_t AbelianGroup::multiply(std::size_t a, std::size_t b) const {
  auto x = exponents(a), y = exponents(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return index(x);
}

std::size_t AbelianGroup::inverse(std::size_t a) const {
  auto x = exponents(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (orders_[i] - x[i]) % orders_[i];
  return index(x);
}

std::size_t AbelianGroup::generator(std::size_t which) const {
  std::vector<std::size_t> x(orders_.size(), 0);
  x.at(which) = 1;
  return index(x);
}

std::string AbelianGroup::label(std::size_t idx, const std::string& letter) const {
  auto x = exponents(idx);
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += letter;
    if (x.size() > 1) out += std::to_string(i + 1);
    if (x[i] > 1) out += "^" + std::to_string(x[i]);
  }
  return out.empty() ? "1" : out;
}

FiniteHopf group_algebra(const AbelianGroup& g, const Field& f, const std::string& letter) {
  const std::size_t n = g.size();
  FiniteHopf h;
  static_cast<FiniteBialgebra&>(h) = FiniteBialgebra::empty(f, n);
  h.antipode = Matrix(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.labels[a] = g.label(a, letter);
    for (std::size_t b = 0; b < n; ++b) h.m(a, b, g.multiply(a, b)) = Scalar::one(f);
    h.comult[a].push_back({a, a, Scalar::one(f)});
    h.counit[a] = Scalar::one(f);
    h.antipode(g.inverse(a), a) = Scalar::one(f);
  }
  h.unit[g.index(std::vector<std::size_t>(g.rank(), 0))] = Scalar::one(f);
  h.antipode_inverse = h.antipode;
  return h;
}

}  // namespace hopf
