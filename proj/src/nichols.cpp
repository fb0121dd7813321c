#include "hopf/nichols.hpp"

#include <algorithm>
#include <numeric>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

std::size_t checked_power(std::size_t n, std::size_t d, std::size_t bound) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    r *= n;
    if (r > bound)
      throw DimensionBlowup("tensor power of degree " + std::to_string(d) + " exceeds the dimension bound " +
                            std::to_string(bound));
  }
  return r;
}

// Next symmetrizer from the previous one: S_d = (S_{d-1} (x) id) sum_i c_{d-1}...c_{d-i}.
Matrix symmetrizer_step(const Matrix& prev, const YDModule& v, std::size_t d) {
  const Field& f = v.field();
  const std::size_t n = v.dim, dimd = int_pow(n, d);
  Matrix term = Matrix::identity(f, dimd);
  Matrix sum = term;
  for (std::size_t i = 1; i < d; ++i) {
    term = term * braid_generator(v, d, d - i);
    sum = sum + term;
  }
  return tensor_of_maps(prev, Matrix::identity(f, n)) * sum;
}

Matrix reverse_words(const Field& f, std::size_t n, std::size_t d) {
  const std::size_t dimd = int_pow(n, d);
  Matrix p(f, dimd, dimd);
  TensorIndex idx(std::vector<std::size_t>(d, n));
  for (std::size_t w = 0; w < dimd; ++w) {
    auto digits = idx.unflatten(w);
    std::reverse(digits.begin(), digits.end());
    p(idx.flatten(digits), w) = Scalar::one(f);
  }
  return p;
}

std::string word_label(const YDModule& v, std::size_t d, std::size_t word) {
  if (d == 0) return "1";
  TensorIndex idx(std::vector<std::size_t>(d, v.dim));
  std::string s;
  for (auto i : idx.unflatten(word)) s += v.labels[i];
  return s;
}

NicholsTruncation truncate_impl(const YDModule& v, std::size_t cap, const NicholsOptions& opts, bool relations) {
  v.validate();
  const Field& f = v.field();
  const std::size_t n = v.dim;
  NicholsTruncation t;
  t.generators = v;
  t.cap = cap;

  std::size_t top = 0;
  Matrix sym = Matrix::identity(f, 1);
  for (std::size_t d = 0; d <= cap; ++d) {
    NicholsDegree deg;
    if (d >= 1 && t.degrees[d - 1].dim == 0) {
      t.complete = true;
      t.degrees.push_back(std::move(deg));
      continue;
    }
    const std::size_t dimd = checked_power(n, d, opts.dimension_bound);
    t.powers.push_back(d == 0 ? trivial_yd_module(v.base) : d == 1 ? v : tensor_product(t.powers[d - 1], v));
    if (relations) sym = d == 0 ? Matrix::identity(f, 1) : d == 1 ? Matrix::identity(f, n) : symmetrizer_step(sym, v, d);
    Matrix s = relations && d >= 2 ? sym : Matrix::identity(f, dimd);
    EchelonForm e = row_echelon(s);
    deg.computed = true;
    deg.tensor_dim = dimd;
    deg.dim = e.pivots.size();
    deg.quotient = e.reduced.block(0, 0, deg.dim, dimd);
    deg.words = e.pivots;
    deg.kernel = kernel_basis(s);
    if (deg.dim == 0 && d >= 1) t.complete = true;
    if (deg.dim > 0) top = d;
    t.degrees.push_back(std::move(deg));
  }

  // Braided shuffle coproduct components on tensor words.
  t.tensor_coproduct[{0, 0}] = Matrix::identity(f, 1);
  for (std::size_t d = 1; d <= top; ++d)
    for (std::size_t a = 0; a <= d; ++a) {
      std::size_t b = d - a;
      Matrix m(f, int_pow(n, d), int_pow(n, d));
      Matrix id = Matrix::identity(f, n);
      if (a >= 1) {
        Matrix move = tensor_of_maps(Matrix::identity(f, int_pow(n, a - 1)), braiding(t.powers[b], v));
        m = m + move * tensor_of_maps(t.tensor_coproduct.at({a - 1, b}), id);
      }
      if (b >= 1) m = m + tensor_of_maps(t.tensor_coproduct.at({a, b - 1}), id);
      t.tensor_coproduct[{a, b}] = std::move(m);
    }

  // Relations must form a Hopf ideal stable under the action and coaction.
  for (std::size_t a = 0; a <= top; ++a)
    for (std::size_t b = 0; a + b <= cap && b <= top; ++b) {
      const NicholsDegree& ab = t.degrees[a + b];
      if (!ab.computed || ab.dim == 0) continue;
      const NicholsDegree& da = t.degrees[a];
      const NicholsDegree& db = t.degrees[b];
      if (!(ab.quotient * tensor_of_maps(da.kernel, Matrix::identity(f, db.tensor_dim))).is_zero() ||
          !(ab.quotient * tensor_of_maps(Matrix::identity(f, da.tensor_dim), db.kernel)).is_zero())
        throw Inconsistent("relations are not a two-sided ideal in degree " + std::to_string(a + b));
    }
  for (std::size_t d = 0; d <= top; ++d) {
    const NicholsDegree& deg = t.degrees[d];
    for (std::size_t a = 0; a <= d; ++a) {
      Matrix q = tensor_of_maps(t.degrees[a].quotient, t.degrees[d - a].quotient);
      if (!(q * t.tensor_coproduct.at({a, d - a}) * deg.kernel).is_zero())
        throw Inconsistent("relations are not a coideal in degree " + std::to_string(d));
    }
    for (std::size_t h = 0; h < v.base_dim(); ++h)
      if (!(deg.quotient * t.powers[d].action[h] * deg.kernel).is_zero())
        throw Inconsistent("relations are not stable under the action in degree " + std::to_string(d));
    Matrix co = tensor_of_maps(Matrix::identity(f, v.base_dim()), deg.quotient) * t.powers[d].coaction_matrix();
    if (!(co * deg.kernel).is_zero())
      throw Inconsistent("relations are not stable under the coaction in degree " + std::to_string(d));
  }

  // Assemble the direct sum of degrees 0..cap.
  std::size_t total = 0;
  for (std::size_t d = 0; d <= cap; ++d) {
    t.offsets.push_back(total);
    for (std::size_t i = 0; i < t.degrees[d].dim; ++i) t.degree_of.push_back(d);
    total += t.degrees[d].dim;
  }
  YDBialgebra& r = t.algebra;
  r.module.base = v.base;
  r.module.dim = total;
  for (std::size_t d = 0; d <= cap; ++d)
    for (auto w : t.degrees[d].words) r.module.labels.push_back(word_label(v, d, w));
  for (std::size_t h = 0; h < v.base_dim(); ++h) {
    Matrix a(f, total, total);
    for (std::size_t d = 0; d <= top; ++d) {
      const NicholsDegree& deg = t.degrees[d];
      Matrix blk = deg.quotient * t.powers[d].action[h].select_columns(deg.words);
      for (std::size_t i = 0; i < deg.dim; ++i)
        for (std::size_t j = 0; j < deg.dim; ++j) a(t.offsets[d] + i, t.offsets[d] + j) = blk(i, j);
    }
    r.module.action.push_back(std::move(a));
  }
  r.module.coaction.resize(total);
  for (std::size_t d = 0; d <= top; ++d) {
    const NicholsDegree& deg = t.degrees[d];
    for (std::size_t k = 0; k < deg.dim; ++k) {
      for (const auto& term : t.powers[d].coaction[deg.words[k]]) {
        Vector cls = deg.quotient.column(term.right);
        for (std::size_t i = 0; i < deg.dim; ++i)
          if (!cls[i].is_zero()) r.module.coaction[t.offsets[d] + k].push_back({term.left, t.offsets[d] + i, term.coeff * cls[i]});
      }
    }
  }
  r.module.coaction = canonical_cotable(r.module.coaction);

  r.mult = Matrix(f, total, total * total);
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) {
      std::size_t a = t.degree_of[x], b = t.degree_of[y];
      if (a + b > cap || t.degrees[a + b].dim == 0) continue;
      std::size_t wx = t.degrees[a].words[x - t.offsets[a]], wy = t.degrees[b].words[y - t.offsets[b]];
      Vector cls = t.degrees[a + b].quotient.column(wx * int_pow(n, b) + wy);
      for (std::size_t i = 0; i < cls.size(); ++i) r.mult(t.offsets[a + b] + i, x * total + y) = cls[i];
    }
  r.unit = unit_vector(f, total, 0);
  r.counit = unit_vector(f, total, 0);
  r.comult = Matrix(f, total * total, total);
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t d = t.degree_of[x];
    std::size_t w = t.degrees[d].words[x - t.offsets[d]];
    for (std::size_t a = 0; a <= d; ++a) {
      std::size_t b = d - a;
      const NicholsDegree& da = t.degrees[a];
      const NicholsDegree& db = t.degrees[b];
      if (da.dim == 0 || db.dim == 0) continue;
      Vector col = t.tensor_coproduct.at({a, b}).column(w);
      for (std::size_t p = 0; p < col.size(); ++p) {
        if (col[p].is_zero()) continue;
        Vector ca = da.quotient.column(p / db.tensor_dim), cb = db.quotient.column(p % db.tensor_dim);
        for (std::size_t i = 0; i < da.dim; ++i) {
          if (ca[i].is_zero()) continue;
          for (std::size_t j = 0; j < db.dim; ++j)
            if (!cb[j].is_zero()) r.comult((t.offsets[a] + i) * total + t.offsets[b] + j, x) += col[p] * ca[i] * cb[j];
        }
      }
    }
  }
  return t;
}

}  // namespace

std::vector<std::size_t> NicholsTruncation::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.dim);
  return out;
}

Vector NicholsTruncation::class_of(std::size_t degree, std::size_t word) const {
  Vector out = zero_vector(generators.field(), total_dim());
  const NicholsDegree& deg = degrees.at(degree);
  if (deg.dim == 0) return out;
  Vector cls = deg.quotient.column(word);
  for (std::size_t i = 0; i < deg.dim; ++i) out[offsets[degree] + i] = cls[i];
  return out;
}

Matrix braid_generator(const YDModule& v, std::size_t d, std::size_t j) {
  if (j < 1 || j + 1 > d) throw ShapeError("braid generator index out of range");
  const Field& f = v.field();
  return tensor_of_maps(tensor_of_maps(Matrix::identity(f, int_pow(v.dim, j - 1)), braiding(v, v)),
                        Matrix::identity(f, int_pow(v.dim, d - j - 1)));
}

Matrix quantum_symmetrizer(const YDModule& v, std::size_t d) {
  Matrix s = Matrix::identity(v.field(), 1);
  for (std::size_t k = 1; k <= d; ++k) s = k == 1 ? Matrix::identity(v.field(), v.dim) : symmetrizer_step(s, v, k);
  return s;
}

Matrix quantum_symmetrizer_brute_force(const YDModule& v, std::size_t d) {
  const Field& f = v.field();
  const std::size_t dimd = int_pow(v.dim, d);
  std::vector<Matrix> gens;
  for (std::size_t j = 1; j < d; ++j) gens.push_back(braid_generator(v, d, j));
  Matrix sum(f, dimd, dimd);
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Bubble sort records a reduced word for the permutation.
    std::vector<std::size_t> a = perm, word;
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (std::size_t j = 0; j + 1 < a.size(); ++j)
        if (a[j] > a[j + 1]) {
          std::swap(a[j], a[j + 1]);
          word.push_back(j);
          swapped = true;
        }
    }
    Matrix term = Matrix::identity(f, dimd);
    for (auto j : word) term = term * gens[j];
    sum = sum + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

NicholsTruncation nichols_truncate(const YDModule& v, std::size_t cap, const NicholsOptions& opts) {
  return truncate_impl(v, cap, opts, true);
}

NicholsTruncation free_truncate(const YDModule& v, std::size_t cap, const NicholsOptions& opts) {
  return truncate_impl(v, cap, opts, false);
}

Report check_truncation(const NicholsTruncation& n) {
  const YDBialgebra& b = n.algebra;
  Report r = check_yd_algebra(b.algebra());
  r.merge(check_yd_coalgebra(b.coalgebra()));
  const std::size_t total = b.dim();
  const Field& f = b.field();
  YDAlgebra alg = b.algebra();
  r.note_check("braided_compatibility");
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) {
      if (n.degree_of[i] + n.degree_of[j] > n.cap) continue;
      Vector prod = b.mult.column(i * total + j);
      expect_equal(r, "comult_multiplicative", {i, j}, b.coproduct(prod),
                   braided_product(alg, alg, b.comult.column(i), b.comult.column(j)));
      expect_equal(r, "counit_multiplicative", {i, j}, b.apply_counit(prod), b.counit[i] * b.counit[j]);
    }
  expect_equal(r, "comult_unit", {}, b.coproduct(b.unit), kron(b.unit, b.unit));
  expect_equal(r, "counit_unit", {}, b.apply_counit(b.unit), Scalar::one(f));
  return r;
}

std::vector<Vector> primitives(const NicholsTruncation& n, std::size_t d) {
  if (d == 0 || d > n.cap) return {};
  const NicholsDegree& deg = n.degrees[d];
  if (deg.dim == 0) return {};
  const std::size_t total = n.total_dim();
  const Field& f = n.generators.field();
  Matrix m(f, total * total, deg.dim);
  for (std::size_t k = 0; k < deg.dim; ++k) {
    std::size_t x = n.offsets[d] + k;
    Vector col = n.algebra.comult.column(x);
    col[x * total] -= Scalar::one(f);
    col[x] -= Scalar::one(f);
    m.set_column(k, col);
  }
  Matrix kb = kernel_basis(m);
  std::vector<Vector> out;
  for (std::size_t c = 0; c < kb.cols(); ++c) out.push_back(kb.column(c));
  return out;
}

LiftedMap lift_map(const Matrix& f, const NicholsTruncation& src, const NicholsTruncation& tgt,
                   const std::optional<Matrix>& base_map) {
  if (src.cap != tgt.cap) throw ShapeError("truncations have different caps");
  if (f.rows() != tgt.generators.dim || f.cols() != src.generators.dim) throw ShapeError("generator map shape mismatch");
  const Field& fld = src.generators.field();
  LiftedMap out;
  out.total = Matrix(fld, tgt.total_dim(), src.total_dim());
  // Both sides are generated in degree one, so once a degree vanishes on
  // either side every higher block is empty.
  Matrix power = Matrix::identity(fld, 1);
  bool live = true;
  for (std::size_t d = 0; d <= src.cap; ++d) {
    const NicholsDegree& s = src.degrees[d];
    const NicholsDegree& t = tgt.degrees[d];
    Matrix blk(fld, t.dim, s.dim);
    // The relations are checked up to the first degree where the source
    // vanishes; above it every word already lies in the ideal.
    live = live && s.computed && t.dim > 0;
    if (live) {
      if (d > 0) power = tensor_of_maps(power, f);
      Matrix m = t.quotient * power;
      if (!(m * s.kernel).is_zero())
        throw DoesNotDescend("map does not preserve the relations in degree " + std::to_string(d));
      blk = m.select_columns(s.words);
      live = s.dim > 0;
      for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) out.total(tgt.offsets[d] + i, src.offsets[d] + j) = blk(i, j);
    }
    out.blocks.push_back(std::move(blk));
  }
  out.report = check_yd_bialgebra_map(out.total, src.algebra, tgt.algebra, base_map);
  const std::size_t r = rank(f);
  for (std::size_t d = 0; d < out.blocks.size(); ++d) {
    const Matrix& b = out.blocks[d];
    if (r == f.rows() && rank(b) != b.rows()) out.report.fail("lift_onto", {d});
    if (r == f.cols() && rank(b) != b.cols()) out.report.fail("lift_one_one", {d});
  }
  return out;
}

Form lift_pairing(const Matrix& beta, const NicholsTruncation& w, const NicholsTruncation& v) {
  if (w.cap != v.cap) throw ShapeError("truncations have different caps");
  const std::size_t nw = w.generators.dim, nv = v.generators.dim;
  if (beta.rows() != nw || beta.cols() != nv) throw ShapeError("pairing shape mismatch");
  const Field& f = beta.field();
  Form out{Matrix(f, w.total_dim(), v.total_dim()), {}};
  out.matrix(0, 0) = Scalar::one(f);
  Matrix p = Matrix::identity(f, 1), q = Matrix::identity(f, 1);
  for (std::size_t d = 1; d <= w.cap; ++d) {
    const NicholsDegree& dw = w.degrees[d];
    const NicholsDegree& dv = v.degrees[d];
    if (dw.dim == 0 || dv.dim == 0) break;
    // Product rule on the left argument.
    Matrix transport = op_transport(v.generators, v.powers[d - 1]);
    Matrix pd = tensor_of_maps(beta, p) * transport * v.tensor_coproduct.at({1, d - 1});
    // Product rule on the right argument.
    const Matrix& dlt = w.tensor_coproduct.at({d - 1, 1});
    const std::size_t tw = dw.tensor_dim, tv = dv.tensor_dim, tv1 = tv / nv;
    Matrix qd(f, tw, tv);
    for (std::size_t t = 0; t < tw; ++t)
      for (std::size_t row = 0; row < tw; ++row) {
        const Scalar& c = dlt(row, t);
        if (c.is_zero()) continue;
        std::size_t t1 = row / nw, t2 = row % nw;
        for (std::size_t a = 0; a < nv; ++a) {
          if (beta(t2, a).is_zero()) continue;
          Scalar cb = c * beta(t2, a);
          for (std::size_t y = 0; y < tv1; ++y)
            if (!q(t1, y).is_zero()) qd(t, a * tv1 + y) += cb * q(t1, y);
        }
      }
    if (!(pd * dv.kernel).is_zero() || !(dw.kernel.transpose() * pd).is_zero())
      throw Inconsistent("pairing does not vanish on the relations in degree " + std::to_string(d));
    Matrix blk = pd.select_rows(dw.words).select_columns(dv.words);
    if (blk != qd.select_rows(dw.words).select_columns(dv.words))
      throw Inconsistent("left and right product rules disagree in degree " + std::to_string(d));
    for (std::size_t i = 0; i < dw.dim; ++i)
      for (std::size_t j = 0; j < dv.dim; ++j) out.matrix(w.offsets[d] + i, v.offsets[d] + j) = blk(i, j);
    p = std::move(pd);
    q = std::move(qd);
  }
  out.verified.insert("descends");
  out.verified.insert("product_rules_agree");
  return out;
}

OpNichols underline_op_nichols(const NicholsTruncation& n) {
  OpNichols out;
  out.op_truncation = nichols_truncate(underline_op_module(n.generators), n.cap);
  out.underline_op = underline_op_bialgebra(n.algebra);
  const Field& f = n.generators.field();
  const NicholsTruncation& o = out.op_truncation;
  if (o.dims() != n.dims()) out.report.fail("hilbert_series_symmetric", {});
  out.iso = Matrix(f, n.total_dim(), o.total_dim());
  for (std::size_t d = 0; d <= n.cap; ++d) {
    const NicholsDegree& s = o.degrees[d];
    const NicholsDegree& t = n.degrees[d];
    if (s.dim == 0 || t.dim == 0) continue;
    Matrix m = t.quotient * reverse_words(f, n.generators.dim, d);
    if (!(m * s.kernel).is_zero()) throw DoesNotDescend("word reversal does not descend in degree " + std::to_string(d));
    Matrix blk = m.select_columns(s.words);
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < s.dim; ++j) out.iso(n.offsets[d] + i, o.offsets[d] + j) = blk(i, j);
  }
  out.report.merge(check_yd_bialgebra_map(out.iso, o.algebra, out.underline_op));
  if (!inverse(out.iso)) out.report.fail("iso_bijective", {});
  return out;
}

}  // namespace hopf
