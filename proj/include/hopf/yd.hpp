#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/bialgebra.hpp"

namespace hopf {

using HopfPtr = std::shared_ptr<const FiniteHopf>;

HopfPtr share(FiniteHopf h);
// Pointer identity or equal structure constants.
bool same_hopf(const HopfPtr& a, const HopfPtr& b);

// Left module and left comodule over a finite Hopf algebra.
struct YDModule {
  HopfPtr base;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> action;  // action[h] acts on column vectors, one per basis element of H
  CoTable coaction;            // coaction[m]: terms (h, m', c) of m_{-1} (x) m_0

  const Field& field() const { return base->field; }
  std::size_t base_dim() const { return base->dim; }
  Matrix act_by(const Vector& h) const;
  Vector act(std::size_t h, const Vector& m) const { return action[h] * m; }
  Vector coact(const Vector& m) const;  // in H (x) M
  Matrix coaction_matrix() const;       // (dim H * dim) x dim
  void validate() const;
};

YDModule trivial_yd_module(const HopfPtr& h);
YDModule tensor_product(const YDModule& m, const YDModule& n);
YDModule tensor_power(const YDModule& m, std::size_t d);

// m (x) n -> m_{-1}.n (x) m_0, as a (dim N * dim M) x (dim M * dim N) matrix.
Matrix braiding(const YDModule& m, const YDModule& n);
// m (x) n -> S^{-1}(n_{-1}).m (x) n_0, on M (x) N.
Matrix op_transport(const YDModule& m, const YDModule& n);

// Module, comodule and both compatibility forms; the two forms must agree.
Report check_yd(const YDModule& m);

// f is linear over base_map: H -> H' and colinear; identity base map when
// none is given (then the bases must coincide).
Report check_yd_morphism(const Matrix& f, const YDModule& src, const YDModule& tgt,
                         const std::optional<Matrix>& base_map = std::nullopt);

struct YDMorphism {
  YDModule source;
  YDModule target;
  Matrix map;
  std::optional<Matrix> base_map;
};
Report check_yd_morphism(const YDMorphism& f);

struct YDAlgebra {
  YDModule module;
  Matrix mult;  // dim x dim^2
  Vector unit;
  Vector product(const Vector& a, const Vector& b) const { return mult * kron(a, b); }
};

struct YDCoalgebra {
  YDModule module;
  Matrix comult;  // dim^2 x dim
  Vector counit;
  Vector coproduct(const Vector& a) const { return comult * a; }
};

struct YDBialgebra {
  YDModule module;
  Matrix mult;
  Vector unit;
  Matrix comult;
  Vector counit;

  std::size_t dim() const { return module.dim; }
  const Field& field() const { return module.field(); }
  YDAlgebra algebra() const { return {module, mult, unit}; }
  YDCoalgebra coalgebra() const { return {module, comult, counit}; }
  Vector product(const Vector& a, const Vector& b) const { return mult * kron(a, b); }
  Vector coproduct(const Vector& a) const { return comult * a; }
  Scalar apply_counit(const Vector& a) const { return dot(counit, a); }
  // Plain (unbraided) structure constants, for maps that forget the category.
  FiniteBialgebra underlying() const;
};

YDBialgebra make_yd_bialgebra(const YDAlgebra& a, const YDCoalgebra& c);
// The ground field as a bialgebra in the category.
YDBialgebra unit_yd_bialgebra(const HopfPtr& h);
// Equal structure constants, actions and coactions; the Hopf algebras are
// compared structurally.
bool same_structure(const YDBialgebra& a, const YDBialgebra& b);

// Product in A (x) B: (a (x) b)(a' (x) b') = a (b_{-1}.a') (x) b_0 b'.
Vector braided_product(const YDAlgebra& a, const YDAlgebra& b, const Vector& u, const Vector& v);
YDAlgebra braided_tensor_algebra(const YDAlgebra& a, const YDAlgebra& b);
YDCoalgebra braided_tensor_coalgebra(const YDCoalgebra& c, const YDCoalgebra& d);

Report check_yd_algebra(const YDAlgebra& a);
Report check_yd_coalgebra(const YDCoalgebra& c);
Report check_yd_bialgebra(const YDBialgebra& r);

// Algebra and coalgebra map between underlying structures, plus linearity
// and colinearity over base_map.
Report check_yd_bialgebra_map(const Matrix& f, const YDBialgebra& src, const YDBialgebra& tgt,
                              const std::optional<Matrix>& base_map = std::nullopt);

// Same module over the opposite Hopf algebra: h .op m = S^{-1}(h).m.
YDModule underline_op_module(const YDModule& m);
YDAlgebra underline_op_algebra(const YDAlgebra& a);        // m(a (x) b) = ba
YDCoalgebra underline_op_coalgebra(const YDCoalgebra& c);  // S^{-1}(c2_{-1}).c1 (x) c2_0
YDBialgebra underline_op_bialgebra(const YDBialgebra& r);

// Dual space over the dual Hopf algebra, dual bases throughout.
YDModule underline_dual_module(const YDModule& m);
YDCoalgebra underline_dual_algebra(const YDAlgebra& a);
YDAlgebra underline_dual_coalgebra(const YDCoalgebra& c);
YDBialgebra underline_dual_bialgebra(const YDBialgebra& r);

// Character of an abelian group from its values on the cyclic generators.
Scalar character_value(const Field& f, const AbelianGroup& g, const Vector& generator_values,
                       std::size_t element);

// Diagonal module over k[G]: basis v_i graded by grades[i], g.v_i = chi_i(g) v_i.
YDModule diagonal_yd_module(const HopfPtr& h, const AbelianGroup& g, const std::vector<std::size_t>& grades,
                            const std::vector<Vector>& characters, const std::string& letter = "v");

}  // namespace hopf
