#include "hopf/yd.hpp"

#include "hopf/errors.hpp"

namespace hopf {

HopfPtr share(FiniteHopf h) { return std::make_shared<const FiniteHopf>(std::move(h)); }

bool same_hopf(const HopfPtr& a, const HopfPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Matrix YDModule::act_by(const Vector& h) const {
  Matrix out(field(), dim, dim);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) out = out + action[i].scaled(h[i]);
  return out;
}

Vector YDModule::coact(const Vector& m) const {
  Vector out = zero_vector(field(), base_dim() * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (m[i].is_zero()) continue;
    for (const auto& t : coaction[i]) out[t.left * dim + t.right] += m[i] * t.coeff;
  }
  return out;
}

Matrix YDModule::coaction_matrix() const { return cotable_to_matrix(field(), coaction, base_dim(), dim); }

void YDModule::validate() const {
  if (!base) throw ShapeError("module without base Hopf algebra");
  if (action.size() != base_dim()) throw ShapeError("action table has wrong size");
  for (const auto& a : action)
    if (a.rows() != dim || a.cols() != dim) throw ShapeError("action matrix has wrong shape");
  if (coaction.size() != dim) throw ShapeError("coaction table has wrong size");
  for (const auto& terms : coaction)
    for (const auto& t : terms)
      if (t.left >= base_dim() || t.right >= dim) throw ShapeError("coaction index out of range");
  if (labels.size() != dim) throw ShapeError("label count does not match dimension");
}

YDModule trivial_yd_module(const HopfPtr& h) {
  YDModule k;
  k.base = h;
  k.dim = 1;
  k.labels = {"1"};
  for (std::size_t i = 0; i < h->dim; ++i) {
    Matrix a(h->field, 1, 1);
    a(0, 0) = h->counit[i];
    k.action.push_back(a);
  }
  k.coaction.resize(1);
  for (std::size_t i = 0; i < h->dim; ++i)
    if (!h->unit[i].is_zero()) k.coaction[0].push_back({i, 0, h->unit[i]});
  return k;
}

YDModule tensor_product(const YDModule& m, const YDModule& n) {
  if (!same_hopf(m.base, n.base)) throw ShapeError("tensor product of modules over different Hopf algebras");
  const FiniteHopf& h = *m.base;
  YDModule t;
  t.base = m.base;
  t.dim = m.dim * n.dim;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < n.dim; ++j) t.labels.push_back(m.labels[i] + "(x)" + n.labels[j]);
  for (std::size_t x = 0; x < h.dim; ++x) {
    Matrix a(h.field, t.dim, t.dim);
    for (const auto& term : h.comult[x])
      a = a + tensor_of_maps(m.action[term.left], n.action[term.right]).scaled(term.coeff);
    t.action.push_back(std::move(a));
  }
  t.coaction.resize(t.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < n.dim; ++j)
      for (const auto& u : m.coaction[i])
        for (const auto& v : n.coaction[j]) {
          Vector p = h.basis_product(u.left, v.left);
          for (std::size_t x = 0; x < h.dim; ++x)
            if (!p[x].is_zero())
              t.coaction[i * n.dim + j].push_back({x, u.right * n.dim + v.right, u.coeff * v.coeff * p[x]});
        }
  t.coaction = canonical_cotable(t.coaction);
  return t;
}

YDModule tensor_power(const YDModule& m, std::size_t d) {
  YDModule out = trivial_yd_module(m.base);
  for (std::size_t i = 0; i < d; ++i) out = i == 0 ? m : tensor_product(out, m);
  return out;
}

Matrix braiding(const YDModule& m, const YDModule& n) {
  if (!same_hopf(m.base, n.base)) throw ShapeError("braiding of modules over different Hopf algebras");
  Matrix out(m.field(), n.dim * m.dim, m.dim * n.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (const auto& t : m.coaction[i])
      for (std::size_t j = 0; j < n.dim; ++j)
        for (std::size_t k = 0; k < n.dim; ++k) {
          const Scalar& a = n.action[t.left](k, j);
          if (!a.is_zero()) out(k * m.dim + t.right, i * n.dim + j) += t.coeff * a;
        }
  return out;
}

Matrix op_transport(const YDModule& m, const YDModule& n) {
  if (!same_hopf(m.base, n.base)) throw ShapeError("transport of modules over different Hopf algebras");
  const Matrix& sinv = m.base->antipode_inv();
  std::vector<Matrix> act_sinv;
  for (std::size_t h = 0; h < m.base_dim(); ++h) act_sinv.push_back(m.act_by(sinv.column(h)));
  Matrix out(m.field(), m.dim * n.dim, m.dim * n.dim);
  for (std::size_t j = 0; j < n.dim; ++j)
    for (const auto& t : n.coaction[j])
      for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t k = 0; k < m.dim; ++k) {
          const Scalar& a = act_sinv[t.left](k, i);
          if (!a.is_zero()) out(k * n.dim + t.right, i * n.dim + j) += t.coeff * a;
        }
  return out;
}

Report check_yd(const YDModule& m) {
  m.validate();
  Report r;
  const FiniteHopf& h = *m.base;
  const Field& f = m.field();
  const std::size_t n = m.dim, d = h.dim;

  r.note_check("module");
  if (m.act_by(h.unit) != Matrix::identity(f, n)) r.fail("module_unit", {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix lhs = m.act_by(h.basis_product(i, j)), rhs = m.action[i] * m.action[j];
      for (std::size_t c = 0; c < n; ++c) expect_equal(r, "module_associativity", {i, j, c}, lhs.column(c), rhs.column(c));
    }

  r.note_check("comodule");
  for (std::size_t i = 0; i < n; ++i) {
    Vector lhs = zero_vector(f, d * d * n), rhs = zero_vector(f, d * d * n), cu = zero_vector(f, n);
    for (const auto& t : m.coaction[i]) {
      for (const auto& u : h.comult[t.left]) lhs[(u.left * d + u.right) * n + t.right] += t.coeff * u.coeff;
      for (const auto& u : m.coaction[t.right]) rhs[(t.left * d + u.left) * n + u.right] += t.coeff * u.coeff;
      cu[t.right] += h.counit[t.left] * t.coeff;
    }
    expect_equal(r, "comodule_coassociativity", {i}, lhs, rhs);
    expect_equal(r, "comodule_counit", {i}, cu, unit_vector(f, n, i));
  }

  // Second-order coproduct of each basis element of H.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>> d2(d);
  for (std::size_t x = 0; x < d; ++x)
    for (const auto& t : h.comult[x])
      for (const auto& u : h.comult[t.left]) d2[x].emplace_back(u.left, u.right, t.right, t.coeff * u.coeff);

  Report r3, r4;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t i = 0; i < n; ++i) {
      Vector e = unit_vector(f, n, i);
      Vector lhs = zero_vector(f, d * n), rhs = zero_vector(f, d * n);
      for (const auto& t : h.comult[x]) {
        for (const auto& u : m.coaction[i]) {
          Vector hm = h.basis_product(t.left, u.left);
          Vector acted = m.action[t.right].column(u.right);
          axpy(lhs, t.coeff * u.coeff, kron(hm, acted));
        }
        Vector moved = m.coact(m.action[t.left].column(i));
        for (std::size_t p = 0; p < moved.size(); ++p) {
          if (moved[p].is_zero()) continue;
          Vector hb = h.basis_product(p / n, t.right);
          axpy(rhs, t.coeff * moved[p], kron(hb, unit_vector(f, n, p % n)));
        }
      }
      expect_equal(r3, "yd_compatibility", {x, i}, lhs, rhs);

      Vector lhs4 = m.coact(m.action[x].column(i)), rhs4 = zero_vector(f, d * n);
      for (const auto& [a, b, c, coef] : d2[x])
        for (const auto& u : m.coaction[i]) {
          Vector hm = h.product(h.basis_product(a, u.left), h.antipode.column(c));
          axpy(rhs4, coef * u.coeff, kron(hm, m.action[b].column(u.right)));
        }
      expect_equal(r4, "yd_coaction_of_action", {x, i}, lhs4, rhs4);
    }
  r.note_check("yd_compatibility");
  r.merge(r3);
  r.merge(r4);
  if (r3.ok() != r4.ok()) r.fail("yd_forms_disagree", {});
  return r;
}

Report check_yd_morphism(const Matrix& f, const YDModule& src, const YDModule& tgt,
                         const std::optional<Matrix>& base_map) {
  if (f.rows() != tgt.dim || f.cols() != src.dim) throw ShapeError("morphism shape mismatch");
  Matrix phi;
  if (base_map) {
    phi = *base_map;
    if (phi.rows() != tgt.base_dim() || phi.cols() != src.base_dim()) throw ShapeError("base map shape mismatch");
  } else {
    if (!same_hopf(src.base, tgt.base)) throw ShapeError("morphism between modules over different Hopf algebras");
    phi = Matrix::identity(src.field(), src.base_dim());
  }
  Report r;
  r.note_check("linear");
  for (std::size_t h = 0; h < src.base_dim(); ++h) {
    Matrix lhs = f * src.action[h], rhs = tgt.act_by(phi.column(h)) * f;
    for (std::size_t i = 0; i < src.dim; ++i) expect_equal(r, "linear", {h, i}, lhs.column(i), rhs.column(i));
  }
  r.note_check("colinear");
  Matrix pf = tensor_of_maps(phi, f);
  Matrix lhs = pf * src.coaction_matrix(), rhs = tgt.coaction_matrix() * f;
  for (std::size_t i = 0; i < src.dim; ++i) expect_equal(r, "colinear", {i}, lhs.column(i), rhs.column(i));
  return r;
}

Report check_yd_morphism(const YDMorphism& f) {
  return check_yd_morphism(f.map, f.source, f.target, f.base_map);
}

FiniteBialgebra YDBialgebra::underlying() const {
  const std::size_t n = dim();
  FiniteBialgebra b = FiniteBialgebra::empty(field(), n);
  b.labels = module.labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) b.m(i, j, k) = mult(k, i * n + j);
  b.unit = unit;
  b.counit = counit;
  b.comult = cotable_from_matrix(comult, n, n);
  return b;
}

YDBialgebra make_yd_bialgebra(const YDAlgebra& a, const YDCoalgebra& c) {
  if (a.module.dim != c.module.dim) throw ShapeError("algebra and coalgebra of different dimension");
  return {a.module, a.mult, a.unit, c.comult, c.counit};
}

YDBialgebra unit_yd_bialgebra(const HopfPtr& h) {
  const Field& f = h->field;
  YDBialgebra k;
  k.module = trivial_yd_module(h);
  k.mult = Matrix::identity(f, 1);
  k.unit = {Scalar::one(f)};
  k.comult = Matrix::identity(f, 1);
  k.counit = {Scalar::one(f)};
  return k;
}

bool same_structure(const YDBialgebra& a, const YDBialgebra& b) {
  return same_hopf(a.module.base, b.module.base) && a.dim() == b.dim() && a.mult == b.mult && a.unit == b.unit &&
         a.comult == b.comult && a.counit == b.counit && a.module.action == b.module.action &&
         a.module.coaction_matrix() == b.module.coaction_matrix();
}

Vector braided_product(const YDAlgebra& a, const YDAlgebra& b, const Vector& u, const Vector& v) {
  const std::size_t na = a.module.dim, nb = b.module.dim;
  const Field& f = a.module.field();
  Vector out = zero_vector(f, na * nb);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p].is_zero()) continue;
    std::size_t x = p / nb, y = p % nb;
    for (std::size_t q = 0; q < v.size(); ++q) {
      if (v[q].is_zero()) continue;
      std::size_t x2 = q / nb, y2 = q % nb;
      Scalar c = u[p] * v[q];
      for (const auto& t : b.module.coaction[y]) {
        Vector moved = a.module.action[t.left].column(x2);
        Vector left = a.product(unit_vector(f, na, x), moved);
        Vector right = b.mult.column(t.right * nb + y2);
        axpy(out, c * t.coeff, kron(left, right));
      }
    }
  }
  return out;
}

YDAlgebra braided_tensor_algebra(const YDAlgebra& a, const YDAlgebra& b) {
  YDAlgebra t;
  t.module = tensor_product(a.module, b.module);
  const std::size_t n = t.module.dim;
  const Field& f = t.module.field();
  t.mult = Matrix(f, n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      t.mult.set_column(p * n + q, braided_product(a, b, unit_vector(f, n, p), unit_vector(f, n, q)));
  t.unit = kron(a.unit, b.unit);
  return t;
}

YDCoalgebra braided_tensor_coalgebra(const YDCoalgebra& c, const YDCoalgebra& d) {
  YDCoalgebra t;
  t.module = tensor_product(c.module, d.module);
  const std::size_t nc = c.module.dim, nd = d.module.dim, n = nc * nd;
  const Field& f = t.module.field();
  t.comult = Matrix(f, n * n, n);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nd; ++j) {
      Vector dc = c.comult.column(i), dd = d.comult.column(j);
      Vector out = zero_vector(f, n * n);
      for (std::size_t p = 0; p < dc.size(); ++p) {
        if (dc[p].is_zero()) continue;
        std::size_t c1 = p / nc, c2 = p % nc;
        for (std::size_t q = 0; q < dd.size(); ++q) {
          if (dd[q].is_zero()) continue;
          std::size_t d1 = q / nd, d2 = q % nd;
          for (const auto& tm : c.module.coaction[c2]) {
            Vector moved = d.module.action[tm.left].column(d1);
            for (std::size_t x = 0; x < nd; ++x)
              if (!moved[x].is_zero())
                out[(c1 * nd + x) * n + tm.right * nd + d2] += dc[p] * dd[q] * tm.coeff * moved[x];
          }
        }
      }
      t.comult.set_column(i * nd + j, out);
    }
  t.counit = kron(c.counit, d.counit);
  return t;
}

namespace {

Matrix column_matrix(const Vector& v) { return Matrix::from_columns(v.at(0).field(), v.size(), {v}); }

}  // namespace

Report check_yd_algebra(const YDAlgebra& a) {
  a.module.validate();
  Report r;
  const std::size_t n = a.module.dim;
  const Field& f = a.module.field();
  if (a.mult.rows() != n || a.mult.cols() != n * n || a.unit.size() != n) throw ShapeError("algebra tables have wrong shape");
  r.note_check("associativity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ei = unit_vector(f, n, i), ej = unit_vector(f, n, j), ek = unit_vector(f, n, k);
        expect_equal(r, "associativity", {i, j, k}, a.product(a.product(ei, ej), ek), a.product(ei, a.product(ej, ek)));
      }
  r.note_check("unit");
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(f, n, i);
    expect_equal(r, "left_unit", {i}, a.product(a.unit, e), e);
    expect_equal(r, "right_unit", {i}, a.product(e, a.unit), e);
  }
  r.merge(check_yd_morphism(a.mult, tensor_product(a.module, a.module), a.module), "mult");
  r.merge(check_yd_morphism(column_matrix(a.unit), trivial_yd_module(a.module.base), a.module), "unit");
  return r;
}

Report check_yd_coalgebra(const YDCoalgebra& c) {
  c.module.validate();
  Report r;
  const std::size_t n = c.module.dim;
  const Field& f = c.module.field();
  if (c.comult.rows() != n * n || c.comult.cols() != n || c.counit.size() != n)
    throw ShapeError("coalgebra tables have wrong shape");
  Matrix id = Matrix::identity(f, n);
  Matrix eps = Matrix::from_rows(f, n, {c.counit});
  r.note_check("coassociativity");
  r.note_check("counit");
  for (std::size_t i = 0; i < n; ++i) {
    Vector d = c.comult.column(i);
    Vector lhs = zero_vector(f, n * n * n), rhs = zero_vector(f, n * n * n);
    Vector l = zero_vector(f, n), rr = zero_vector(f, n);
    for (std::size_t p = 0; p < d.size(); ++p) {
      if (d[p].is_zero()) continue;
      std::size_t a = p / n, b = p % n;
      for (std::size_t q = 0; q < n * n; ++q) {
        const Scalar& x = c.comult(q, a);
        if (!x.is_zero()) lhs[q * n + b] += d[p] * x;
        const Scalar& y = c.comult(q, b);
        if (!y.is_zero()) rhs[a * n * n + q] += d[p] * y;
      }
      l[b] += c.counit[a] * d[p];
      rr[a] += c.counit[b] * d[p];
    }
    expect_equal(r, "coassociativity", {i}, lhs, rhs);
    expect_equal(r, "left_counit", {i}, l, id.column(i));
    expect_equal(r, "right_counit", {i}, rr, id.column(i));
  }
  r.merge(check_yd_morphism(c.comult, c.module, tensor_product(c.module, c.module)), "comult");
  r.merge(check_yd_morphism(eps, c.module, trivial_yd_module(c.module.base)), "counit");
  return r;
}

Report check_yd_bialgebra(const YDBialgebra& b) {
  Report r = check_yd_algebra(b.algebra());
  r.merge(check_yd_coalgebra(b.coalgebra()));
  const std::size_t n = b.dim();
  const Field& f = b.field();
  YDAlgebra alg = b.algebra();
  r.note_check("braided_compatibility");
  std::vector<Vector> cop(n);
  for (std::size_t i = 0; i < n; ++i) cop[i] = b.comult.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod = b.mult.column(i * n + j);
      expect_equal(r, "comult_multiplicative", {i, j}, b.coproduct(prod), braided_product(alg, alg, cop[i], cop[j]));
      expect_equal(r, "counit_multiplicative", {i, j}, b.apply_counit(prod), b.counit[i] * b.counit[j]);
    }
  expect_equal(r, "comult_unit", {}, b.coproduct(b.unit), kron(b.unit, b.unit));
  expect_equal(r, "counit_unit", {}, b.apply_counit(b.unit), Scalar::one(f));
  return r;
}

Report check_yd_bialgebra_map(const Matrix& f, const YDBialgebra& src, const YDBialgebra& tgt,
                              const std::optional<Matrix>& base_map) {
  Report r = check_bialgebra_map(f, src.underlying(), tgt.underlying());
  r.merge(check_yd_morphism(f, src.module, tgt.module, base_map));
  return r;
}

YDModule underline_op_module(const YDModule& m) {
  YDModule o = m;
  o.base = share(opposite_hopf(*m.base));
  const Matrix& sinv = m.base->antipode_inv();
  for (std::size_t h = 0; h < m.base_dim(); ++h) o.action[h] = m.act_by(sinv.column(h));
  return o;
}

YDAlgebra underline_op_algebra(const YDAlgebra& a) {
  YDAlgebra o;
  o.module = underline_op_module(a.module);
  const std::size_t n = a.module.dim;
  o.mult = Matrix(a.module.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) o.mult.set_column(i * n + j, a.mult.column(j * n + i));
  o.unit = a.unit;
  return o;
}

YDCoalgebra underline_op_coalgebra(const YDCoalgebra& c) {
  YDCoalgebra o;
  o.module = underline_op_module(c.module);
  o.comult = op_transport(c.module, c.module) * c.comult;
  o.counit = c.counit;
  return o;
}

YDBialgebra underline_op_bialgebra(const YDBialgebra& r) {
  YDBialgebra o = make_yd_bialgebra(underline_op_algebra(r.algebra()), underline_op_coalgebra(r.coalgebra()));
  return o;
}

YDModule underline_dual_module(const YDModule& m) {
  YDModule d;
  d.base = share(dual_hopf(*m.base));
  d.dim = m.dim;
  for (const auto& l : m.labels) d.labels.push_back(l + "*");
  const Field& f = m.field();
  d.action.assign(m.base_dim(), Matrix(f, m.dim, m.dim));
  for (std::size_t j = 0; j < m.dim; ++j)
    for (const auto& t : m.coaction[j]) d.action[t.left](j, t.right) += t.coeff;
  d.coaction.resize(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t a = 0; a < m.base_dim(); ++a)
      for (std::size_t j = 0; j < m.dim; ++j)
        if (!m.action[a](i, j).is_zero()) d.coaction[i].push_back({a, j, m.action[a](i, j)});
  return d;
}

YDCoalgebra underline_dual_algebra(const YDAlgebra& a) {
  return {underline_dual_module(a.module), a.mult.transpose(), a.unit};
}

YDAlgebra underline_dual_coalgebra(const YDCoalgebra& c) {
  return {underline_dual_module(c.module), c.comult.transpose(), c.counit};
}

YDBialgebra underline_dual_bialgebra(const YDBialgebra& r) {
  YDBialgebra d;
  d.module = underline_dual_module(r.module);
  d.mult = r.comult.transpose();
  d.unit = r.counit;
  d.comult = r.mult.transpose();
  d.counit = r.unit;
  return d;
}

Scalar character_value(const Field& f, const AbelianGroup& g, const Vector& generator_values,
                       std::size_t element) {
  if (generator_values.size() != g.rank()) throw SchemaError("character needs one value per cyclic factor");
  auto e = g.exponents(element);
  Scalar v = Scalar::one(f);
  for (std::size_t i = 0; i < e.size(); ++i) v *= generator_values[i].pow(static_cast<long long>(e[i]));
  return v;
}

YDModule diagonal_yd_module(const HopfPtr& h, const AbelianGroup& g, const std::vector<std::size_t>& grades,
                            const std::vector<Vector>& characters, const std::string& letter) {
  if (grades.size() != characters.size()) throw SchemaError("grades and characters differ in number");
  if (h->dim != g.size()) throw ShapeError("group does not match Hopf algebra");
  YDModule m;
  m.base = h;
  m.dim = grades.size();
  const Field& f = h->field;
  for (std::size_t i = 0; i < m.dim; ++i) m.labels.push_back(letter + std::to_string(i + 1));
  for (std::size_t x = 0; x < g.size(); ++x) {
    Matrix a(f, m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) a(i, i) = character_value(f, g, characters[i], x);
    m.action.push_back(std::move(a));
  }
  m.coaction.resize(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    if (grades[i] >= g.size()) throw SchemaError("grade out of range");
    m.coaction[i].push_back({grades[i], i, Scalar::one(f)});
  }
  return m;
}

}  // namespace hopf
