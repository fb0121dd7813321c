#include "hopf/twist.hpp"

#include <algorithm>
#include <set>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

void require(const Report& r, const std::string& what) {
  if (!r.ok()) throw VerificationFailure(what + "\n" + r.summary());
}

void expect_scalar(Report& r, const std::string& axiom, std::vector<std::size_t> idx, const Scalar& lhs,
                   const Scalar& rhs) {
  if (lhs != rhs) r.fail(axiom, std::move(idx), lhs - rhs);
}

// Record that two independent formulations reached the same verdict.
void expect_agreement(Report& r, const std::string& name, bool a, bool b) {
  r.note_check(name);
  if (a != b) r.fail(name, {});
}

struct Triple {
  std::size_t a, b, c;
  Scalar coeff;
};

// (Delta (x) id) Delta on a basis element.
std::vector<Triple> double_coproduct(const FiniteBialgebra& c, std::size_t x) {
  std::vector<Triple> out;
  for (const auto& t : c.comult[x])
    for (const auto& u : c.comult[t.left]) out.push_back({u.left, u.right, t.right, t.coeff * u.coeff});
  return out;
}

Matrix form_from(const Field& f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

// Basis index of the j-th generator in the degree one part.
std::size_t nichols_generator_index(const NicholsTruncation& n, std::size_t j) { return n.offsets[1] + j; }

}  // namespace

Report check_axioms_A(const Form& tau, const FiniteBialgebra& u, const FiniteBialgebra& a) {
  const Matrix& t = tau.matrix;
  if (t.rows() != u.dim || t.cols() != a.dim) throw ShapeError("form shape does not match the bialgebras");
  const Field& f = u.field;
  Report r;

  r.note_check("A.1");
  for (std::size_t x = 0; x < u.dim; ++x)
    for (std::size_t p = 0; p < a.dim; ++p)
      for (std::size_t q = 0; q < a.dim; ++q) {
        Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
        for (std::size_t k = 0; k < a.dim; ++k)
          if (!a.m(p, q, k).is_zero()) lhs += a.m(p, q, k) * t(x, k);
        for (const auto& c : u.comult[x]) rhs += c.coeff * t(c.right, p) * t(c.left, q);
        expect_scalar(r, "A.1", {x, p, q}, lhs, rhs);
      }

  r.note_check("A.2");
  for (std::size_t p = 0; p < a.dim; ++p) {
    Scalar lhs = Scalar::zero(f);
    for (std::size_t x = 0; x < u.dim; ++x) lhs += u.unit[x] * t(x, p);
    expect_scalar(r, "A.2", {p}, lhs, a.counit[p]);
  }

  r.note_check("A.3");
  for (std::size_t x = 0; x < u.dim; ++x)
    for (std::size_t y = 0; y < u.dim; ++y)
      for (std::size_t p = 0; p < a.dim; ++p) {
        Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
        for (std::size_t k = 0; k < u.dim; ++k)
          if (!u.m(x, y, k).is_zero()) lhs += u.m(x, y, k) * t(k, p);
        for (const auto& c : a.comult[p]) rhs += c.coeff * t(x, c.left) * t(y, c.right);
        expect_scalar(r, "A.3", {x, y, p}, lhs, rhs);
      }

  r.note_check("A.4");
  for (std::size_t x = 0; x < u.dim; ++x) {
    Scalar lhs = Scalar::zero(f);
    for (std::size_t p = 0; p < a.dim; ++p) lhs += t(x, p) * a.unit[p];
    expect_scalar(r, "A.4", {x}, lhs, u.counit[x]);
  }

  const bool axioms = r.ok();
  Report left = check_bialgebra_map(t.transpose(), u, dual_bialgebra(opposite_bialgebra(a)));
  Report right = check_bialgebra_map(t, a, opposite_bialgebra(dual_bialgebra(u)));
  r.merge(left, "tau_left");
  r.merge(right, "tau_right");
  expect_agreement(r, "equivalence", axioms, left.ok());
  expect_agreement(r, "equivalence", axioms, right.ok());
  return r;
}

Report check_axioms_B(const Form& beta, const YDBialgebra& tb, const YDBialgebra& rb) {
  const Matrix& b = beta.matrix;
  const std::size_t nt = tb.dim(), nr = rb.dim();
  if (b.rows() != nt || b.cols() != nr) throw ShapeError("form shape does not match the bialgebras");
  const Field& f = tb.field();
  Report r;

  // beta(tt', r) = beta(t, S^-1(r2_-1).r1) beta(t', r2_0)
  r.note_check("B.1");
  Matrix dop = op_transport(rb.module, rb.module) * rb.comult;
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y)
      for (std::size_t p = 0; p < nr; ++p) {
        Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
        for (std::size_t k = 0; k < nt; ++k) lhs += tb.mult(k, x * nt + y) * b(k, p);
        for (std::size_t i = 0; i < nr; ++i)
          for (std::size_t j = 0; j < nr; ++j)
            if (!dop(i * nr + j, p).is_zero()) rhs += dop(i * nr + j, p) * b(x, i) * b(y, j);
        expect_scalar(r, "B.1", {x, y, p}, lhs, rhs);
      }

  r.note_check("B.2");
  for (std::size_t p = 0; p < nr; ++p) {
    Scalar lhs = Scalar::zero(f);
    for (std::size_t x = 0; x < nt; ++x) lhs += tb.unit[x] * b(x, p);
    expect_scalar(r, "B.2", {p}, lhs, rb.counit[p]);
  }

  // beta(t, rr') = beta(t(2), r) beta(t(1), r')
  r.note_check("B.3");
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t p = 0; p < nr; ++p)
      for (std::size_t q = 0; q < nr; ++q) {
        Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
        for (std::size_t k = 0; k < nr; ++k) lhs += rb.mult(k, p * nr + q) * b(x, k);
        for (std::size_t i = 0; i < nt; ++i)
          for (std::size_t j = 0; j < nt; ++j)
            if (!tb.comult(i * nt + j, x).is_zero()) rhs += tb.comult(i * nt + j, x) * b(j, p) * b(i, q);
        expect_scalar(r, "B.3", {x, p, q}, lhs, rhs);
      }

  r.note_check("B.4");
  for (std::size_t x = 0; x < nt; ++x) {
    Scalar lhs = Scalar::zero(f);
    for (std::size_t p = 0; p < nr; ++p) lhs += b(x, p) * rb.unit[p];
    expect_scalar(r, "B.4", {x}, lhs, tb.counit[x]);
  }

  const bool axioms = r.ok();
  YDBialgebra rod = underline_dual_bialgebra(underline_op_bialgebra(rb));
  YDBialgebra tdo = underline_op_bialgebra(underline_dual_bialgebra(tb));
  Report left = check_bialgebra_map(b.transpose(), tb.underlying(), rod.underlying());
  Report right = check_bialgebra_map(b, rb.underlying(), tdo.underlying());
  r.merge(left, "beta_left");
  r.merge(right, "beta_right");
  expect_agreement(r, "equivalence", axioms, left.ok());
  expect_agreement(r, "equivalence", axioms, right.ok());
  return r;
}

Report check_axioms_C(const Form& tau, const Form& beta, const YDModule& w, const YDModule& v) {
  const Matrix& t = tau.matrix;
  const Matrix& b = beta.matrix;
  const FiniteHopf& k = *w.base;
  const FiniteHopf& h = *v.base;
  if (t.rows() != k.dim || t.cols() != h.dim) throw ShapeError("tau shape does not match the Hopf algebras");
  if (b.rows() != w.dim || b.cols() != v.dim) throw ShapeError("beta shape does not match the modules");
  const Field& f = k.field;
  Report r;

  // beta(k.w, v) = tau(k, v_-1) beta(w, v_0)
  r.note_check("C.1");
  for (std::size_t x = 0; x < k.dim; ++x) {
    Matrix lhs = w.action[x].transpose() * b;
    for (std::size_t i = 0; i < w.dim; ++i)
      for (std::size_t j = 0; j < v.dim; ++j) {
        Scalar rhs = Scalar::zero(f);
        for (const auto& c : v.coaction[j]) rhs += c.coeff * t(x, c.left) * b(i, c.right);
        expect_scalar(r, "C.1", {x, i, j}, lhs(i, j), rhs);
      }
  }

  // tau(w_-1, h) beta(w_0, v) = beta(w, S^-1(h).v)
  r.note_check("C.2");
  const Matrix& sinv = h.antipode_inv();
  for (std::size_t y = 0; y < h.dim; ++y) {
    Matrix rhs = b * v.act_by(sinv.column(y));
    for (std::size_t i = 0; i < w.dim; ++i)
      for (std::size_t j = 0; j < v.dim; ++j) {
        Scalar lhs = Scalar::zero(f);
        for (const auto& c : w.coaction[i]) lhs += c.coeff * t(c.left, y) * b(c.right, j);
        expect_scalar(r, "C.2", {y, i, j}, lhs, rhs(i, j));
      }
  }

  const bool axioms = r.ok();
  Report left = check_yd_morphism(b.transpose(), w, underline_dual_module(underline_op_module(v)), t.transpose());
  Report right = check_yd_morphism(b, underline_op_module(v), underline_dual_module(w), t);
  r.merge(left, "beta_left");
  r.merge(right, "beta_right");
  expect_agreement(r, "equivalence", axioms, left.ok());
  expect_agreement(r, "equivalence", axioms, right.ok());
  return r;
}

Matrix convolve_forms(const Matrix& f, const Matrix& g, const FiniteBialgebra& u, const FiniteBialgebra& a) {
  Matrix out(u.field, u.dim, a.dim);
  for (std::size_t x = 0; x < u.dim; ++x)
    for (std::size_t p = 0; p < a.dim; ++p) {
      Scalar s = Scalar::zero(u.field);
      for (const auto& c : u.comult[x])
        for (const auto& d : a.comult[p]) s += c.coeff * d.coeff * f(c.left, d.left) * g(c.right, d.right);
      out(x, p) = s;
    }
  return out;
}

Form convolution_inverse_form(const Form& tau, const FiniteHopf& u, const FiniteHopf& a, InverseVia via) {
  const Matrix& t = tau.matrix;
  Form inv;
  if (via == InverseVia::left_antipode) {
    if (u.antipode.rows() != u.dim) throw NoAntipode("left bialgebra has no antipode");
    inv.matrix = u.antipode.transpose() * t;
  } else {
    if (a.antipode.rows() != a.dim) throw NoAntipode("right bialgebra has no antipode");
    inv.matrix = t * a.antipode_inv();
  }
  Matrix eps(u.field, u.dim, a.dim);
  for (std::size_t x = 0; x < u.dim; ++x)
    for (std::size_t p = 0; p < a.dim; ++p) eps(x, p) = u.counit[x] * a.counit[p];
  if (convolve_forms(t, inv.matrix, u, a) != eps || convolve_forms(inv.matrix, t, u, a) != eps)
    throw VerificationFailure("form is not a convolution inverse");
  inv.verified.insert("inverse");
  return inv;
}

Report check_cocycle(const Matrix& sigma, const Matrix& sigma_inv, const FiniteBialgebra& c) {
  const std::size_t d = c.dim;
  const Field& f = c.field;
  // w(x, y) = sigma(x1, y1) x2 y2
  Matrix w(f, d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Vector acc = zero_vector(f, d);
      for (const auto& s : c.comult[x])
        for (const auto& t : c.comult[y]) {
          Scalar k = s.coeff * t.coeff * sigma(s.left, t.left);
          if (!k.is_zero()) axpy(acc, k, c.basis_product(s.right, t.right));
        }
      w.set_column(x * d + y, acc);
    }
  Matrix lhs = w.transpose() * sigma;  // (x, y), z -> sigma(w(x, y), z)
  Matrix rhs = sigma * w;              // x, (y, z) -> sigma(x, w(y, z))
  Report r;
  r.note_check("cocycle");
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        expect_scalar(r, "cocycle", {x, y, z}, lhs(x * d + y, z), rhs(x, y * d + z));

  r.note_check("sigma_inverse");
  Matrix eps(f, d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) eps(x, y) = c.counit[x] * c.counit[y];
  Matrix left = convolve_forms(sigma, sigma_inv, c, c), right = convolve_forms(sigma_inv, sigma, c, c);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      expect_scalar(r, "sigma_inverse", {x, y}, left(x, y), eps(x, y));
      expect_scalar(r, "sigma_inverse", {x, y}, right(x, y), eps(x, y));
    }
  return r;
}

Cocycle sigma_from_tau(const Form& tau, const FiniteHopf& u, const FiniteHopf& a) {
  Form inv = convolution_inverse_form(tau, u, a);
  Cocycle out;
  out.carrier = tensor_product_bialgebra(u, a);
  const std::size_t d = out.carrier.dim, na = a.dim;
  const Field& f = u.field;
  out.sigma.matrix = form_from(f, d, d);
  out.sigma_inv.matrix = form_from(f, d, d);
  for (std::size_t x = 0; x < u.dim; ++x) {
    if (u.counit[x].is_zero()) continue;
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t y = 0; y < u.dim; ++y)
        for (std::size_t q = 0; q < na; ++q) {
          if (a.counit[q].is_zero()) continue;
          Scalar e = u.counit[x] * a.counit[q];
          out.sigma.matrix(x * na + p, y * na + q) = e * tau.matrix(y, p);
          out.sigma_inv.matrix(x * na + p, y * na + q) = e * inv.matrix(y, p);
        }
  }
  out.report = check_cocycle(out.sigma.matrix, out.sigma_inv.matrix, out.carrier);
  if (out.report.ok()) out.sigma.verified.insert("cocycle");
  return out;
}

FiniteBialgebra cocycle_twist(const FiniteBialgebra& c, const Matrix& sigma, const Matrix& sigma_inv) {
  const std::size_t d = c.dim;
  FiniteBialgebra out = c;
  std::vector<std::vector<Triple>> dd(d);
  for (std::size_t x = 0; x < d; ++x) dd[x] = double_coproduct(c, x);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Vector acc = zero_vector(c.field, d);
      for (const auto& s : dd[x])
        for (const auto& t : dd[y]) {
          Scalar k = s.coeff * t.coeff * sigma(s.a, t.a) * sigma_inv(s.c, t.c);
          if (!k.is_zero()) axpy(acc, k, c.basis_product(s.b, t.b));
        }
      for (std::size_t z = 0; z < d; ++z) out.m(x, y, z) = acc[z];
    }
  return out;
}

Twist twist_bialgebra(const FiniteHopf& u, const FiniteHopf& a, const Form& tau) {
  require(check_axioms_A(tau, u, a), "form fails the bialgebra pairing axioms:");
  Twist out;
  out.cocycle = sigma_from_tau(tau, u, a);
  require(out.cocycle.report, "sigma is not a two-cocycle:");
  const Matrix& t = tau.matrix;
  const std::size_t nu = u.dim, na = a.dim;
  const Field& f = u.field;
  Form inv = convolution_inverse_form(tau, u, a);

  // (u (x) a)(u' (x) a') = u tau(u'1, a1) u'2 (x) a2 tau^-1(u'3, a3) a'
  FiniteBialgebra b = out.cocycle.carrier;
  std::vector<std::vector<Triple>> du(nu), da(na);
  for (std::size_t x = 0; x < nu; ++x) du[x] = double_coproduct(u, x);
  for (std::size_t p = 0; p < na; ++p) da[p] = double_coproduct(a, p);
  for (std::size_t x = 0; x < nu; ++x)
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t y = 0; y < nu; ++y)
        for (std::size_t q = 0; q < na; ++q) {
          Vector acc = zero_vector(f, nu * na);
          for (const auto& s : du[y])
            for (const auto& r : da[p]) {
              Scalar k = s.coeff * r.coeff * t(s.a, r.a) * inv.matrix(s.c, r.c);
              if (!k.is_zero()) axpy(acc, k, kron(u.basis_product(x, s.b), a.basis_product(r.b, q)));
            }
          for (std::size_t z = 0; z < nu * na; ++z) b.m(x * na + p, y * na + q, z) = acc[z];
        }

  out.report = check_bialgebra(b);
  out.report.note_check("matches_cocycle_twist");
  if (!(b == cocycle_twist(out.cocycle.carrier, out.cocycle.sigma.matrix, out.cocycle.sigma_inv.matrix)))
    out.report.fail("matches_cocycle_twist", {});
  require(out.report, "twisted product fails:");
  out.H = make_hopf(b);
  out.report.merge(check_antipode(out.H, out.H.antipode));
  return out;
}

SmashForm beta_smash_tau(const Form& beta, const Form& tau, const Biproduct& tk, const Biproduct& rh) {
  const FiniteHopf& h = *rh.H;
  const std::size_t nt = tk.R.dim(), nk = tk.H->dim, nr = rh.R.dim(), nh = h.dim;
  const Matrix& b = beta.matrix;
  const Matrix& t = tau.matrix;
  if (b.rows() != nt || b.cols() != nr || t.rows() != nk || t.cols() != nh)
    throw ShapeError("forms do not match the biproducts");
  const Field& f = h.field;
  const Matrix& sinv = h.antipode_inv();

  std::vector<Matrix> moved(nh);  // beta(-, S^-1(x).-)
  for (std::size_t x = 0; x < nh; ++x) moved[x] = b * rh.R.module.act_by(sinv.column(x));

  SmashForm out;
  Matrix& m = out.form.matrix;
  m = Matrix(f, nt * nk, nr * nh);
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t k = 0; k < nk; ++k)
      for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t x = 0; x < nh; ++x) {
          Scalar s = Scalar::zero(f);
          for (const auto& c : h.comult[x]) s += c.coeff * moved[c.left](i, r) * t(k, c.right);
          m(i * nk + k, r * nh + x) = s;
        }

  Report& rep = out.report;
  rep.merge(check_axioms_A(out.form, tk.A, rh.A));

  // Left and right curried forms factor through phi^-1.
  OpBiproduct ob = op_biproduct(rh);
  rep.merge(ob.report, "op");
  rep.note_check("factorization");
  Matrix fact = tensor_of_maps(b, t) * ob.phi_inv;
  for (std::size_t p = 0; p < m.rows(); ++p)
    for (std::size_t q = 0; q < m.cols(); ++q) expect_scalar(rep, "factorization", {p, q}, m(p, q), fact(p, q));

  // beta_l # tau_l into the biproduct of the dual of the opposite, then
  // theta and (phi^-1)^*.
  rep.note_check("composite");
  DualBiproduct db = dual_biproduct(ob.B);
  rep.merge(db.report, "dual");
  try {
    BiproductMorphism bl = biproduct_morphism(b.transpose(), t.transpose(), tk, db.B);
    rep.merge(bl.report, "beta_l#tau_l");
    Matrix comp = ob.phi_inv.transpose() * db.theta * bl.map;
    if (comp != m.transpose()) rep.fail("composite", {});
  } catch (const VerificationFailure&) {
    rep.fail("composite", {});
  }

  rep.note_check("rank_product");
  if (rank(m) != rank(b) * rank(t)) rep.fail("rank_product", {rank(m), rank(b), rank(t)});
  if (rep.ok()) out.form.verified.insert("A");
  return out;
}

void GroupTwistDatum::validate() const {
  AbelianGroup lam(lambda_orders), gam(gamma_orders);
  auto fail = [](const std::string& what) { throw SchemaError(what); };
  if (eta.size() != n() || s.size() != n() || lambda.size() != n()) fail("W data lengths differ");
  if (chi.size() != m()) fail("V data lengths differ");
  if (phi.size() != lam.rank()) fail("phi needs one row per generator of Lambda");
  auto check_field = [&](const Scalar& x) {
    if (!(x.field() == field)) fail("scalar from a different field");
  };
  auto check_root = [&](const Scalar& x, std::size_t order, const std::string& what) {
    check_field(x);
    if (!x.pow(static_cast<long long>(order)).is_one()) fail(what + " is not a root of unity of the generator order");
  };
  auto check_character = [&](const Vector& c, const std::vector<std::size_t>& orders, const std::string& what) {
    if (c.size() != orders.size()) fail(what + " needs one value per cyclic factor");
    bool trivial = true;
    for (std::size_t a = 0; a < c.size(); ++a) {
      check_root(c[a], orders[a], what);
      trivial = trivial && c[a].is_one();
    }
    if (trivial) fail(what + " is trivial");
  };
  for (std::size_t i = 0; i < n(); ++i) {
    if (z[i] >= lam.size()) fail("z_" + std::to_string(i) + " out of range");
    check_character(eta[i], lambda_orders, "eta_" + std::to_string(i));
    if (s[i] >= m()) fail("s(" + std::to_string(i) + ") out of range");
    check_field(lambda[i]);
  }
  for (std::size_t j = 0; j < m(); ++j) {
    if (g[j] >= gam.size()) fail("g_" + std::to_string(j) + " out of range");
    check_character(chi[j], gamma_orders, "chi_" + std::to_string(j));
  }
  for (std::size_t a = 0; a < phi.size(); ++a) {
    if (phi[a].size() != gamma_orders.size()) fail("phi row " + std::to_string(a) + " has the wrong length");
    for (std::size_t b = 0; b < phi[a].size(); ++b) {
      check_root(phi[a][b], gamma_orders[b], "phi value");
      check_root(phi[a][b], lambda_orders[a], "phi value");
    }
  }
}

Scalar pairing_value(const GroupTwistDatum& d, std::size_t z, std::size_t g) {
  AbelianGroup lam(d.lambda_orders), gam(d.gamma_orders);
  auto ez = lam.exponents(z), eg = gam.exponents(g);
  Scalar v = Scalar::one(d.field);
  for (std::size_t a = 0; a < ez.size(); ++a)
    for (std::size_t b = 0; b < eg.size(); ++b)
      v *= d.phi[a][b].pow(static_cast<long long>(ez[a] * eg[b]));
  return v;
}

std::vector<std::size_t> datum_condition_violations(const GroupTwistDatum& d) {
  AbelianGroup lam(d.lambda_orders), gam(d.gamma_orders);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.n(); ++i) {
    if (d.lambda[i].is_zero()) continue;
    const std::size_t j = d.s[i];
    bool ok = true;
    for (std::size_t b = 0; b < gam.rank(); ++b)
      ok = ok && (pairing_value(d, d.z[i], gam.generator(b)) * d.chi[j][b]).is_one();
    for (std::size_t a = 0; a < lam.rank(); ++a)
      ok = ok && d.eta[i][a] == pairing_value(d, lam.generator(a), d.g[j]);
    if (!ok) out.push_back(i);
  }
  return out;
}

GroupTwist build_group_datum(const GroupTwistDatum& d, std::size_t cap, const NicholsOptions& opts) {
  d.validate();
  const Field& f = d.field;
  GroupTwist t;
  t.datum = d;
  t.lambda = AbelianGroup(d.lambda_orders);
  t.gamma = AbelianGroup(d.gamma_orders);
  t.K = share(group_algebra(t.lambda, f, "z"));
  t.H = share(group_algebra(t.gamma, f, "g"));
  t.W = diagonal_yd_module(t.K, t.lambda, d.z, d.eta, "u");
  t.V = diagonal_yd_module(t.H, t.gamma, d.g, d.chi, "a");

  t.tau.matrix = Matrix(f, t.K->dim, t.H->dim);
  for (std::size_t x = 0; x < t.K->dim; ++x)
    for (std::size_t y = 0; y < t.H->dim; ++y) t.tau.matrix(x, y) = pairing_value(d, x, y);
  t.beta.matrix = Matrix(f, d.n(), d.m());
  for (std::size_t i = 0; i < d.n(); ++i) t.beta.matrix(i, d.s[i]) = d.lambda[i];

  Report a = check_axioms_A(t.tau, *t.K, *t.H);
  require(a, "tau fails the pairing axioms:");
  t.tau.verified.insert("A");
  t.report.merge(a, "tau");

  Report c = check_axioms_C(t.tau, t.beta, t.W, t.V);
  const auto bad = datum_condition_violations(d);
  if (!c.ok() && !bad.empty())
    throw DatumConditionViolation(bad.front(), "character condition fails for u_" + std::to_string(bad.front() + 1) +
                                                   "\n" + c.summary());
  if (!c.ok() || !bad.empty())
    throw VerificationFailure("compatibility checks disagree with the character condition\n" + c.summary());
  t.beta.verified.insert("C");
  t.report.merge(c, "beta");

  t.nichols_W = nichols_truncate(t.W, cap, opts);
  t.nichols_V = nichols_truncate(t.V, cap, opts);
  if (!t.nichols_W.complete || !t.nichols_V.complete)
    throw IncompleteNichols("Nichols algebra does not vanish in degrees up to the cap " + std::to_string(cap));
  t.nichols_beta = lift_pairing(t.beta.matrix, t.nichols_W, t.nichols_V);
  t.report.merge(check_axioms_B(t.nichols_beta, t.nichols_W.algebra, t.nichols_V.algebra), "nichols_beta");
  t.report.merge(check_axioms_C(t.tau, t.nichols_beta, t.nichols_W.algebra.module, t.nichols_V.algebra.module),
                 "nichols_beta");

  t.U = build_biproduct(t.nichols_W.algebra);
  t.A = build_biproduct(t.nichols_V.algebra);
  t.smash = beta_smash_tau(t.nichols_beta, t.tau, t.U, t.A);
  t.report.merge(t.smash.report, "smash");
  require(t.report, "twist datum checks failed:");
  return t;
}

GeneratorImages phi_generators(const GroupTwist& t) {
  const GroupTwistDatum& d = t.datum;
  const FiniteHopf& a = t.A.A;
  const NicholsTruncation& nv = t.nichols_V;
  const Field& f = d.field;
  const std::size_t nr = nv.total_dim(), ng = t.gamma.size(), nk = t.lambda.size();
  GeneratorImages out;
  Report& rep = out.report;

  for (std::size_t i = 0; i < d.n(); ++i) {
    Vector gamma = zero_vector(f, a.dim), delta = zero_vector(f, a.dim);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t x = 0; x < ng; ++x) {
        const Scalar chi = pairing_value(d, d.z[i], x);
        gamma[r * ng + x] = nv.algebra.counit[r] * chi;
        // delta(r#g) = delta(r#1) gamma(1#g), and delta vanishes in degrees != 1.
        if (nv.degree_of[r] == 1) delta[r * ng + x] = t.nichols_beta.matrix(nichols_generator_index(t.nichols_W, i), r) * chi;
      }

    rep.note_check("gamma_multiplicative");
    rep.note_check("delta_derivation");
    for (std::size_t x = 0; x < a.dim; ++x)
      for (std::size_t y = 0; y < a.dim; ++y) {
        Vector xy = a.basis_product(x, y);
        expect_scalar(rep, "gamma_multiplicative", {i, x, y}, dot(gamma, xy), gamma[x] * gamma[y]);
        expect_scalar(rep, "delta_derivation", {i, x, y}, dot(delta, xy),
                      a.counit[x] * delta[y] + delta[x] * gamma[y]);
      }
    expect_scalar(rep, "gamma_multiplicative", {i}, dot(gamma, a.unit), Scalar::one(f));

    rep.note_check("generator_values");
    for (std::size_t x = 0; x < ng; ++x) {
      expect_scalar(rep, "generator_values", {i, x}, gamma[x], pairing_value(d, d.z[i], x));
      expect_scalar(rep, "generator_values", {i, x}, delta[x], Scalar::zero(f));
    }
    for (std::size_t j = 0; j < d.m(); ++j) {
      const std::size_t r = nichols_generator_index(nv, j);
      expect_scalar(rep, "generator_values", {i, j}, gamma[r * ng], Scalar::zero(f));
      expect_scalar(rep, "generator_values", {i, j}, delta[r * ng], t.beta.matrix(i, j));
    }

    // Rows of the smash form at 1#z_i and u_i#1.
    rep.note_check("phi_gamma");
    rep.note_check("phi_delta");
    const Matrix& m = t.smash.form.matrix;
    const std::size_t row_z = d.z[i], row_u = nichols_generator_index(t.nichols_W, i) * nk;
    for (std::size_t p = 0; p < a.dim; ++p) {
      expect_scalar(rep, "phi_gamma", {i, p}, m(row_z, p), gamma[p]);
      expect_scalar(rep, "phi_delta", {i, p}, m(row_u, p), delta[p]);
    }
    out.gamma.push_back(std::move(gamma));
    out.delta.push_back(std::move(delta));
  }
  return out;
}

Reduction reduce_datum(const GroupTwist& t) {
  const GroupTwistDatum& d = t.datum;
  const Field& f = d.field;
  Reduction out;
  Report& rep = out.report;

  std::set<std::size_t> image;
  for (std::size_t i = 0; i < d.n(); ++i) {
    if (d.lambda[i].is_zero()) continue;
    out.support.push_back(i);
    if (!image.insert(d.s[i]).second)
      throw NotInjectiveOnSupport("s is not injective on the support of lambda at u_" + std::to_string(i + 1));
  }
  const std::vector<std::size_t> js(image.begin(), image.end());

  const Matrix& b = t.beta.matrix;
  out.v_perp = kernel_basis(b.transpose());
  out.w_perp = kernel_basis(b);
  std::vector<Vector> ev, ew;
  for (std::size_t i = 0; i < d.n(); ++i)
    if (d.lambda[i].is_zero()) ev.push_back(unit_vector(f, d.n(), i));
  for (std::size_t j = 0; j < d.m(); ++j)
    if (!image.count(j)) ew.push_back(unit_vector(f, d.m(), j));
  out.expected_v_perp = Matrix::from_columns(f, d.n(), ev);
  out.expected_w_perp = Matrix::from_columns(f, d.m(), ew);
  rep.note_check("v_perp");
  if (out.v_perp != out.expected_v_perp) rep.fail("v_perp", {});
  rep.note_check("w_perp");
  if (out.w_perp != out.expected_w_perp) rep.fail("w_perp", {});

  GroupTwistDatum r = d;
  r.z.clear();
  r.eta.clear();
  r.s.clear();
  r.lambda.clear();
  r.g.clear();
  r.chi.clear();
  for (std::size_t j : js) {
    r.g.push_back(d.g[j]);
    r.chi.push_back(d.chi[j]);
  }
  for (std::size_t i : out.support) {
    r.z.push_back(d.z[i]);
    r.eta.push_back(d.eta[i]);
    r.s.push_back(static_cast<std::size_t>(std::lower_bound(js.begin(), js.end(), d.s[i]) - js.begin()));
    r.lambda.push_back(d.lambda[i]);
  }

  out.pi_W = Matrix(f, out.support.size(), d.n());
  for (std::size_t k = 0; k < out.support.size(); ++k) out.pi_W(k, out.support[k]) = Scalar::one(f);
  out.pi_V = Matrix(f, js.size(), d.m());
  for (std::size_t l = 0; l < js.size(); ++l) out.pi_V(l, js[l]) = Scalar::one(f);

  out.reduced = build_group_datum(r, t.nichols_W.cap);
  const GroupTwist& q = out.reduced;
  rep.merge(check_yd_morphism(out.pi_W, t.W, q.W), "pi_W");
  rep.merge(check_yd_morphism(out.pi_V, t.V, q.V), "pi_V");
  rep.note_check("beta_descends");
  if (out.pi_W.transpose() * q.beta.matrix * out.pi_V != b) rep.fail("beta_descends", {});
  rep.note_check("reduced_nondegenerate");
  if (rank(q.beta.matrix) != out.support.size() || js.size() != out.support.size())
    rep.fail("reduced_nondegenerate", {});

  LiftedMap lw = lift_map(out.pi_W, t.nichols_W, q.nichols_W);
  LiftedMap lv = lift_map(out.pi_V, t.nichols_V, q.nichols_V);
  rep.merge(lw.report, "lift_W");
  rep.merge(lv.report, "lift_V");
  rep.note_check("hilbert");
  for (std::size_t deg = 0; deg < lw.blocks.size(); ++deg)
    if (rank(lw.blocks[deg]) != lw.blocks[deg].rows()) rep.fail("hilbert", {0, deg});
  for (std::size_t deg = 0; deg < lv.blocks.size(); ++deg)
    if (rank(lv.blocks[deg]) != lv.blocks[deg].rows()) rep.fail("hilbert", {1, deg});

  BiproductMorphism fu = biproduct_morphism(lw.total, Matrix::identity(f, t.K->dim), t.U, q.U);
  BiproductMorphism fa = biproduct_morphism(lv.total, Matrix::identity(f, t.H->dim), t.A, q.A);
  rep.merge(fu.report, "F_U");
  rep.merge(fa.report, "F_A");
  rep.note_check("smash_descends");
  if (fu.map.transpose() * q.smash.form.matrix * fa.map != t.smash.form.matrix) rep.fail("smash_descends", {});

  out.source = twist_bialgebra(t.U.A, t.A.A, t.smash.form);
  out.target = twist_bialgebra(q.U.A, q.A.A, q.smash.form);
  out.F = tensor_of_maps(fu.map, fa.map);
  rep.merge(check_bialgebra_map(out.F, out.source.H, out.target.H), "F");
  rep.note_check("F_surjective");
  if (rank(out.F) != out.target.H.dim) rep.fail("F_surjective", {});
  return out;
}

}  // namespace hopf
