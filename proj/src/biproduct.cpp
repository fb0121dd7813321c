#include "hopf/biproduct.hpp"

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Left multiplication by the basis element i of R, as an n x n matrix.
Matrix left_mult_block(const YDBialgebra& r, std::size_t i) {
  return r.mult.block(0, i * r.dim(), r.dim(), r.dim());
}

// h .j x = j(h1) x j(S h2) in A.
Vector adjoint_action(const FiniteHopf& a, const FiniteHopf& h, const Matrix& j, std::size_t hb, const Vector& x) {
  Vector out = zero_vector(a.field, a.dim);
  for (const auto& t : h.comult[hb])
    axpy(out, t.coeff, a.product(a.product(j.column(t.left), x), j * h.antipode.column(t.right)));
  return out;
}

// r#h -> r j(h) for an embedding of R into A.
Matrix canonical_map(const FiniteHopf& a, const Matrix& inclusion, const Matrix& j) {
  const std::size_t nr = inclusion.cols(), nh = j.cols();
  Matrix out(a.field, a.dim, nr * nh);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t h = 0; h < nh; ++h) out.set_column(r * nh + h, a.product(inclusion.column(r), j.column(h)));
  return out;
}

// Inclusion r -> r#1 of R into R#H.
Matrix r_inclusion(const Biproduct& b) {
  const std::size_t nr = b.R.dim();
  Matrix out(b.A.field, b.A.dim, nr);
  for (std::size_t r = 0; r < nr; ++r) out.set_column(r, kron(unit_vector(b.A.field, nr, r), b.H->unit));
  return out;
}

void require(const Report& r, const std::string& what) {
  if (!r.ok()) throw VerificationFailure(what + "\n" + r.summary());
}

// Coordinates with respect to a reduced column echelon basis, read off at
// the leading rows of the tensor factors and verified by reconstruction.
class EchelonCoords {
 public:
  EchelonCoords(const Matrix& basis) : basis_(basis), leads_(echelon_leads(basis)) {}

  Vector of(const Vector& v) const {
    Vector c(leads_.size(), Scalar::zero(basis_.field()));
    for (std::size_t i = 0; i < leads_.size(); ++i) c[i] = v[leads_[i]];
    if (basis_ * c != v) throw VerificationFailure("vector outside the coinvariant subspace");
    return c;
  }

  // v in X (x) A with the right factor in the span; X of dimension nx.
  Vector of_right(const Vector& v, std::size_t nx) const {
    const std::size_t na = basis_.rows(), nr = leads_.size();
    Vector c(nx * nr, Scalar::zero(basis_.field()));
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t i = 0; i < nr; ++i) c[x * nr + i] = v[x * na + leads_[i]];
    if (tensor_of_maps(Matrix::identity(basis_.field(), nx), basis_) * c != v)
      throw VerificationFailure("tensor outside the coinvariant subspace");
    return c;
  }

  // v in A (x) A with both factors in the span.
  Vector of_both(const Vector& v) const {
    const std::size_t na = basis_.rows(), nr = leads_.size();
    Vector c(nr * nr, Scalar::zero(basis_.field()));
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t k = 0; k < nr; ++k) c[i * nr + k] = v[leads_[i] * na + leads_[k]];
    if (tensor_of_maps(basis_, basis_) * c != v) throw VerificationFailure("tensor outside the coinvariant subspace");
    return c;
  }

  const std::vector<std::size_t>& leads() const { return leads_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> leads_;
};

// (F (x) G) Delta(x) for linear maps F, G out of A.
Vector apply_on_coproduct(const FiniteHopf& a, const Matrix& f, const Matrix& g, const Vector& x) {
  Vector out = zero_vector(a.field, f.rows() * g.rows());
  for (std::size_t p = 0; p < a.dim; ++p) {
    if (x[p].is_zero()) continue;
    for (const auto& t : a.comult[p]) axpy(out, x[p] * t.coeff, kron(f.column(t.left), g.column(t.right)));
  }
  return out;
}

}  // namespace

Biproduct build_biproduct(const YDBialgebra& r) { return build_biproduct(r, r.module.base); }

Biproduct build_biproduct(const YDBialgebra& r, const HopfPtr& hp) {
  if (!same_hopf(r.module.base, hp)) throw ShapeError("bialgebra lives over a different Hopf algebra");
  require(check_yd_bialgebra(r), "not a bialgebra in the Yetter-Drinfel'd category:");
  hp->antipode_inv();

  const FiniteHopf& h = *hp;
  const Field& f = h.field;
  const std::size_t nr = r.dim(), nh = h.dim, n = nr * nh;

  FiniteBialgebra a = FiniteBialgebra::empty(f, n);
  a.labels.clear();
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t x = 0; x < nh; ++x) a.labels.push_back(r.module.labels[i] + "#" + h.labels[x]);

  // (r#h)(r'#h') = r (h1.r') # h2 h'
  for (std::size_t r1 = 0; r1 < nr; ++r1) {
    Matrix left = left_mult_block(r, r1);
    for (std::size_t h1 = 0; h1 < nh; ++h1)
      for (std::size_t r2 = 0; r2 < nr; ++r2)
        for (std::size_t h2 = 0; h2 < nh; ++h2) {
          Vector acc = zero_vector(f, n);
          for (const auto& t : h.comult[h1])
            axpy(acc, t.coeff, kron(left * r.module.action[t.left].column(r2), h.basis_product(t.right, h2)));
          for (std::size_t k = 0; k < n; ++k) a.m(r1 * nh + h1, r2 * nh + h2, k) = acc[k];
        }
  }
  a.unit = kron(r.unit, h.unit);
  a.counit = kron(r.counit, h.counit);

  // Delta(r#h) = (r(1) # r(2)_{-1} h1) (x) (r(2)_0 # h2)
  a.comult.assign(n, {});
  for (std::size_t i = 0; i < nr; ++i) {
    Vector dr = r.comult.column(i);
    for (std::size_t p = 0; p < nr * nr; ++p) {
      if (dr[p].is_zero()) continue;
      const std::size_t ra = p / nr, rb = p % nr;
      for (const auto& co : r.module.coaction[rb])
        for (std::size_t x = 0; x < nh; ++x)
          for (const auto& t : h.comult[x]) {
            Vector prod = h.basis_product(co.left, t.left);
            for (std::size_t k = 0; k < nh; ++k)
              if (!prod[k].is_zero())
                a.comult[i * nh + x].push_back(
                    {ra * nh + k, co.right * nh + t.right, dr[p] * co.coeff * t.coeff * prod[k]});
          }
    }
  }
  a.comult = canonical_cotable(a.comult);
  a.validate();

  Biproduct b;
  b.R = r;
  b.H = hp;
  b.A = make_hopf(a);
  b.j = Matrix(f, n, nh);
  for (std::size_t x = 0; x < nh; ++x) b.j.set_column(x, kron(r.unit, unit_vector(f, nh, x)));
  b.pi = Matrix(f, nh, n);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t x = 0; x < nh; ++x) b.pi(x, i * nh + x) = r.counit[i];
  b.Pi = convolution(Matrix::identity(f, n), b.j * h.antipode * b.pi, b.A, b.A);
  b.report = check_biproduct(b);
  require(b.report, "biproduct invariants failed:");
  return b;
}

Report check_biproduct(const Biproduct& b) {
  const FiniteHopf& a = b.A;
  const FiniteHopf& h = *b.H;
  const Field& f = a.field;
  const std::size_t nr = b.R.dim(), nh = h.dim;
  Report rep;
  rep.merge(check_bialgebra(a), "A");
  rep.merge(check_antipode(a, a.antipode), "A");
  rep.note_check("antipode_bijective");
  if (!a.antipode_inverse) rep.fail("antipode_bijective", {});
  rep.merge(check_bialgebra_map(b.j, h, a), "j");
  rep.merge(check_bialgebra_map(b.pi, a, h), "pi");

  rep.note_check("pi_j_identity");
  Matrix pj = b.pi * b.j;
  for (std::size_t x = 0; x < nh; ++x)
    expect_equal(rep, "pi_j_identity", {x}, pj.column(x), unit_vector(f, nh, x));

  rep.note_check("projection_idempotent");
  Matrix pp = b.Pi * b.Pi;
  for (std::size_t i = 0; i < a.dim; ++i) expect_equal(rep, "projection_idempotent", {i}, pp.column(i), b.Pi.column(i));

  rep.note_check("pi_projection_counit");
  Matrix lhs = b.pi * b.Pi, rhs = unit_counit(a, h);
  for (std::size_t i = 0; i < a.dim; ++i) expect_equal(rep, "pi_projection_counit", {i}, lhs.column(i), rhs.column(i));

  // Pi(r#h) = eps(h) r#1, so the image is R#1.
  rep.note_check("projection_values");
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t x = 0; x < nh; ++x)
      expect_equal(rep, "projection_values", {r, x}, b.Pi.column(b.index(r, x)),
                   scale(h.counit[x], kron(unit_vector(f, nr, r), h.unit)));

  rep.note_check("projection_equivariant");
  for (std::size_t x = 0; x < nh; ++x)
    for (std::size_t i = 0; i < a.dim; ++i) {
      Vector e = unit_vector(f, a.dim, i);
      expect_equal(rep, "projection_equivariant", {x, i}, b.Pi * a.product(b.j.column(x), e),
                   adjoint_action(a, h, b.j, x, b.Pi * e));
    }
  return rep;
}

Coinvariants recover_R(const FiniteHopf& a, const HopfPtr& hp, const Matrix& j, const Matrix& pi) {
  const FiniteHopf& h = *hp;
  const Field& f = a.field;
  const std::size_t na = a.dim, nh = h.dim;
  if (j.rows() != na || j.cols() != nh || pi.rows() != nh || pi.cols() != na) throw ShapeError("split maps shape mismatch");
  {
    Report pre = check_bialgebra_map(j, h, a);
    pre.merge(check_bialgebra_map(pi, a, h));
    if (pi * j != Matrix::identity(f, nh)) pre.fail("pi_j_identity", {});
    require(pre, "split maps are not valid:");
  }

  // a -> a1 (x) pi(a2) - a (x) 1
  Matrix idA = Matrix::identity(f, na);
  Matrix cond(f, na * nh, na);
  for (std::size_t i = 0; i < na; ++i) {
    Vector e = unit_vector(f, na, i);
    cond.set_column(i, sub(apply_on_coproduct(a, idA, pi, e), kron(e, h.unit)));
  }
  Coinvariants out;
  out.inclusion = kernel_basis(cond);
  const Matrix& basis = out.inclusion;
  const std::size_t nr = basis.cols();
  EchelonCoords coords(basis);
  Matrix Pi = convolution(idA, j * h.antipode * pi, a, a);

  YDBialgebra& r = out.R;
  r.module.base = hp;
  r.module.dim = nr;
  for (std::size_t lead : coords.leads()) r.module.labels.push_back(a.labels[lead]);
  r.mult = Matrix(f, nr, nr * nr);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t k = 0; k < nr; ++k)
      r.mult.set_column(i * nr + k, coords.of(a.product(basis.column(i), basis.column(k))));
  r.unit = coords.of(a.unit);
  r.counit.clear();
  for (std::size_t i = 0; i < nr; ++i) r.counit.push_back(a.apply_counit(basis.column(i)));
  r.comult = Matrix(f, nr * nr, nr);
  for (std::size_t i = 0; i < nr; ++i) r.comult.set_column(i, coords.of_both(apply_on_coproduct(a, Pi, idA, basis.column(i))));

  // h.r = j(h1) r j(S h2), delta(r) = pi(r1) (x) r2
  for (std::size_t x = 0; x < nh; ++x) {
    Matrix act(f, nr, nr);
    for (std::size_t i = 0; i < nr; ++i) act.set_column(i, coords.of(adjoint_action(a, h, j, x, basis.column(i))));
    r.module.action.push_back(act);
  }
  r.module.coaction.assign(nr, {});
  for (std::size_t i = 0; i < nr; ++i) {
    Vector c = coords.of_right(apply_on_coproduct(a, pi, idA, basis.column(i)), nh);
    for (std::size_t x = 0; x < nh; ++x)
      for (std::size_t k = 0; k < nr; ++k)
        if (!c[x * nr + k].is_zero()) r.module.coaction[i].push_back({x, k, c[x * nr + k]});
  }
  r.module.validate();

  out.report = check_yd_bialgebra(r);
  require(out.report, "coinvariants do not form a bialgebra in the category:");
  out.canonical = canonical_map(a, basis, j);
  Biproduct rebuilt = build_biproduct(r, hp);
  out.report.merge(check_bialgebra_map(out.canonical, rebuilt.A, a), "canonical");
  out.report.note_check("canonical_bijective");
  if (!inverse(out.canonical)) out.report.fail("canonical_bijective", {});
  return out;
}

OpBiproduct op_biproduct(const Biproduct& b) {
  const FiniteHopf& a = b.A;
  const FiniteHopf& h = *b.H;
  const Field& f = a.field;
  const std::size_t nr = b.R.dim(), nh = h.dim, n = a.dim;

  OpBiproduct out;
  YDBialgebra rop = underline_op_bialgebra(b.R);
  out.B = build_biproduct(rop, rop.module.base);
  FiniteHopf aop = opposite_hopf(a);

  Matrix incl = r_inclusion(b);
  out.phi = Matrix(f, n, n);
  out.phi_inv = Matrix(f, n, n);
  const Matrix& sinv = h.antipode_inv();
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t x = 0; x < nh; ++x) {
      out.phi.set_column(b.index(r, x), a.product(b.j.column(x), incl.column(r)));
      Vector v = zero_vector(f, n);
      for (const auto& t : h.comult[x])
        axpy(v, t.coeff, kron(b.R.module.act_by(sinv.column(t.left)).column(r), unit_vector(f, nh, t.right)));
      out.phi_inv.set_column(b.index(r, x), v);
    }

  Report& rep = out.report;
  rep.merge(check_bialgebra_map(out.phi, out.B.A, aop), "phi");
  rep.note_check("phi_inverse");
  Matrix id = Matrix::identity(f, n);
  if (out.phi * out.phi_inv != id || out.phi_inv * out.phi != id) rep.fail("phi_inverse", {});

  // f(r#h) = r j(h) in A and g(r#h) = r j(h) in A^op
  rep.note_check("triangle");
  Matrix fmap = canonical_map(a, incl, b.j);
  Matrix gmap = canonical_map(aop, incl, b.j);
  Matrix fphi = fmap * out.phi;
  for (std::size_t i = 0; i < n; ++i) expect_equal(rep, "triangle", {i}, fphi.column(i), gmap.column(i));

  // The coinvariants of A^op over H^op carry the opposite structure on R.
  rep.note_check("recovered_opposite");
  Coinvariants rec = recover_R(aop, rop.module.base, b.j, b.pi);
  if (rec.inclusion != incl || !same_structure(rec.R, rop)) rep.fail("recovered_opposite", {});
  return out;
}

DualBiproduct dual_biproduct(const Biproduct& b) {
  const FiniteHopf& a = b.A;
  const FiniteHopf& h = *b.H;
  const Field& f = a.field;
  const std::size_t nr = b.R.dim(), nh = h.dim, n = a.dim;

  DualBiproduct out;
  YDBialgebra rdual = underline_dual_bialgebra(b.R);
  const HopfPtr hdual = rdual.module.base;
  out.B = build_biproduct(rdual, hdual);
  FiniteHopf adual = dual_hopf(a);
  out.theta = Matrix::identity(f, n);

  Report& rep = out.report;
  rep.merge(check_bialgebra_map(out.theta, out.B.A, adual), "theta");

  // i(r*)(r j(h)) = r*(r) eps(h), i.e. i(r*) = (r* (x) eps) o f^-1
  Matrix incl = r_inclusion(b);
  Matrix fmap = canonical_map(a, incl, b.j);
  auto finv = inverse(fmap);
  if (!finv) throw VerificationFailure("canonical map of the biproduct is not invertible");
  Matrix finv_t = finv->transpose();
  out.embedding = Matrix(f, n, nr);
  for (std::size_t r = 0; r < nr; ++r) out.embedding.set_column(r, finv_t * kron(unit_vector(f, nr, r), h.counit));

  // (f^-1)* o theta = g o (i # id), with g(x#p) = x pi*(p) in A*
  rep.note_check("square");
  Matrix pit = b.pi.transpose();
  Matrix left = finv_t * out.theta;
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t x = 0; x < nh; ++x)
      expect_equal(rep, "square", {r, x}, left.column(b.index(r, x)),
                   adual.product(out.embedding.column(r), pit.column(x)));

  // The coinvariants of A* for the split pair (pi*, j*) are the image of i,
  // and i carries the dual structure on R onto them.
  Coinvariants rec = recover_R(adual, hdual, pit, b.j.transpose());
  rep.note_check("identification");
  Matrix t(f, rec.R.dim(), nr);
  if (rec.R.dim() != nr) {
    rep.fail("identification", {});
    return out;
  }
  for (std::size_t r = 0; r < nr; ++r) {
    auto c = echelon_coordinates(rec.inclusion, out.embedding.column(r));
    if (!c) {
      rep.fail("identification", {r});
      return out;
    }
    t.set_column(r, *c);
  }
  rep.merge(check_yd_bialgebra_map(t, rdual, rec.R), "identification");
  if (!inverse(t)) rep.fail("identification", {});
  return out;
}

BiproductMorphism biproduct_morphism(const Matrix& psi, const Matrix& phi, const Biproduct& src,
                                     const Biproduct& tgt) {
  Report pre = check_bialgebra_map(phi, *src.H, *tgt.H);
  pre.merge(check_yd_bialgebra_map(psi, src.R, tgt.R, phi));
  require(pre, "not a morphism of biproduct data:");
  BiproductMorphism out;
  out.map = tensor_of_maps(psi, phi);
  out.report = check_bialgebra_map(out.map, src.A, tgt.A);
  out.report.note_check("j_compatible");
  if (out.map * src.j != tgt.j * phi) out.report.fail("j_compatible", {});
  out.report.note_check("pi_compatible");
  if (tgt.pi * out.map != phi * src.pi) out.report.fail("pi_compatible", {});
  return out;
}

}  // namespace hopf
