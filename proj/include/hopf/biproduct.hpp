#pragma once

#include <optional>

#include "hopf/yd.hpp"

namespace hopf {

// R#H with its structure maps. Basis r_i#h_j at index i * dim H + j.
struct Biproduct {
  YDBialgebra R;
  HopfPtr H;
  FiniteHopf A;
  Matrix j;   // H -> A, h -> 1#h
  Matrix pi;  // A -> H, r#h -> eps(r) h
  Matrix Pi;  // projection of A onto R#1
  Report report;

  std::size_t index(std::size_t r, std::size_t h) const { return r * H->dim + h; }
};

// Throws VerificationFailure if R is not a bialgebra in the category or any
// invariant of the result fails.
Biproduct build_biproduct(const YDBialgebra& r);
Biproduct build_biproduct(const YDBialgebra& r, const HopfPtr& h);

// Checks the structure maps and the projection of an assembled biproduct.
Report check_biproduct(const Biproduct& b);

// The bialgebra in the category attached to a split pair j: H -> A,
// pi: A -> H with pi j = id, realized on the right coinvariants of A.
struct Coinvariants {
  YDBialgebra R;
  Matrix inclusion;  // R -> A, reduced column echelon form
  Matrix canonical;  // R#H -> A, r#h -> r j(h)
  Report report;
};
Coinvariants recover_R(const FiniteHopf& a, const HopfPtr& h, const Matrix& j, const Matrix& pi);

// (R#H)^op as the biproduct of the opposite structure on R over H^op.
struct OpBiproduct {
  Biproduct B;     // built from underline_op_bialgebra(R) over opposite(H)
  Matrix phi;      // B.A -> (R#H)^op, r#h -> (1#h)(r#1)
  Matrix phi_inv;  // r#h -> S^-1(h1).r # h2
  Report report;
};
OpBiproduct op_biproduct(const Biproduct& b);

// (R#H)* as the biproduct of the dual structure on R* over H*.
struct DualBiproduct {
  Biproduct B;       // built from underline_dual_bialgebra(R) over dual(H)
  Matrix theta;      // B.A -> dual(A), identity in product dual bases
  Matrix embedding;  // R* -> A*, r* -> functional r j(h) -> r*(r) eps(h)
  Report report;
};
DualBiproduct dual_biproduct(const Biproduct& b);

// psi # phi for psi: R -> R' an algebra and coalgebra map, linear and colinear
// over the bialgebra map phi: H -> H'. Throws VerificationFailure when the
// hypotheses fail.
struct BiproductMorphism {
  Matrix map;
  Report report;
};
BiproductMorphism biproduct_morphism(const Matrix& psi, const Matrix& phi, const Biproduct& src,
                                     const Biproduct& tgt);

}  // namespace hopf
