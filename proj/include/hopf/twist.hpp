#pragma once

#include <cstddef>
#include <vector>

#include "hopf/biproduct.hpp"
#include "hopf/form.hpp"
#include "hopf/nichols.hpp"

namespace hopf {

// Forms tau: U (x) A -> k between bialgebras: tau(u, aa') = tau(u2, a) tau(u1, a'),
// tau(1, a) = eps(a), tau(uu', a) = tau(u, a1) tau(u', a2), tau(u, 1) = eps(u).
// Also checks that tau_l: U -> dual(opposite(A)) and tau_r: A -> opposite(dual(U))
// are bialgebra maps, and that both verdicts agree.
Report check_axioms_A(const Form& tau, const FiniteBialgebra& u, const FiniteBialgebra& a);

// The braided analogue for beta: T (x) R -> k between bialgebras in the
// category, cross-checked against beta_l: T -> dual of the opposite of R and
// beta_r: R -> opposite of the dual of T.
Report check_axioms_B(const Form& beta, const YDBialgebra& t, const YDBialgebra& r);

// Compatibility of tau: K (x) H -> k with beta: W (x) V -> k, W over K and V
// over H:
//   beta(k.w, v) = tau(k, v_-1) beta(w, v_0)
//   tau(w_-1, h) beta(w_0, v) = beta(w, S^-1(h).v)
// cross-checked via beta_l: W -> dual(V^op) over tau_l and
// beta_r: V^op -> dual(W) over tau_r.
Report check_axioms_C(const Form& tau, const Form& beta, const YDModule& w, const YDModule& v);

enum class InverseVia { left_antipode, right_antipode };

// tau^-1(u, a) = tau(S(u), a), or tau(u, S^-1(a)) using the antipode of A^op.
// Throws NoAntipode or NotInvertible when the chosen antipode is missing, and
// VerificationFailure if the result is not a convolution inverse.
Form convolution_inverse_form(const Form& tau, const FiniteHopf& u, const FiniteHopf& a,
                              InverseVia via = InverseVia::left_antipode);

// (f * g)(u, a) = f(u1, a1) g(u2, a2)
Matrix convolve_forms(const Matrix& f, const Matrix& g, const FiniteBialgebra& u, const FiniteBialgebra& a);

// sigma(u (x) a, u' (x) a') = eps(u) tau(u', a) eps(a') on the tensor product
// bialgebra, with inverse built from tau^-1 the same way.
struct Cocycle {
  FiniteBialgebra carrier;  // U (x) A
  Form sigma;
  Form sigma_inv;
  Report report;            // cocycle identity and invertibility
};
Cocycle sigma_from_tau(const Form& tau, const FiniteHopf& u, const FiniteHopf& a);
// Two-cocycle identity over all basis triples, and sigma * sigma_inv = eps.
Report check_cocycle(const Matrix& sigma, const Matrix& sigma_inv, const FiniteBialgebra& c);

struct Twist {
  Cocycle cocycle;
  FiniteHopf H;  // (U (x) A)^sigma
  Report report;
};
// Throws VerificationFailure when tau fails the axioms, sigma is not a
// cocycle, or the twist is not a bialgebra.
Twist twist_bialgebra(const FiniteHopf& u, const FiniteHopf& a, const Form& tau);
// x.y = sigma(x1, y1) x2 y2 sigma^-1(x3, y3) on any bialgebra.
FiniteBialgebra cocycle_twist(const FiniteBialgebra& c, const Matrix& sigma, const Matrix& sigma_inv);

// (beta#tau)(t#k, r#h) = beta(t, S^-1(h1).r) tau(k, h2) on (T#K) (x) (R#H).
struct SmashForm {
  Form form;
  Report report;  // A-axioms, factorization through phi^-1, rank product
};
SmashForm beta_smash_tau(const Form& beta, const Form& tau, const Biproduct& tk, const Biproduct& rh);

// Abelian group datum: W has basis u_i of degree z_i with character eta_i over
// Lambda, V has basis a_j of degree g_j with character chi_j over Gamma.
// Characters and phi are given by their values on the cyclic generators.
struct GroupTwistDatum {
  Field field = Field::rationals();
  std::vector<std::size_t> lambda_orders;
  std::vector<std::size_t> gamma_orders;
  std::vector<std::size_t> z;     // element indices in Lambda
  std::vector<Vector> eta;
  std::vector<std::size_t> g;     // element indices in Gamma
  std::vector<Vector> chi;
  std::vector<Vector> phi;        // phi[a][b] = phi(a-th generator of Lambda)(b-th generator of Gamma)
  std::vector<std::size_t> s;     // 0-based
  Vector lambda;

  std::size_t n() const { return z.size(); }
  std::size_t m() const { return g.size(); }
  // Shapes, index ranges, roots of unity and nontrivial characters; throws SchemaError.
  void validate() const;
};

// phi(z)(g) for group element indices.
Scalar pairing_value(const GroupTwistDatum& d, std::size_t z, std::size_t g);
// Indices i with lambda_i != 0 violating phi(z_i) = chi_s(i)^-1 or
// eta_i(z) = phi(z)(g_s(i)).
std::vector<std::size_t> datum_condition_violations(const GroupTwistDatum& d);

struct GroupTwist {
  GroupTwistDatum datum;
  AbelianGroup lambda{std::vector<std::size_t>{}};
  AbelianGroup gamma{std::vector<std::size_t>{}};
  HopfPtr K, H;
  YDModule W, V;
  Form tau, beta;
  NicholsTruncation nichols_W, nichols_V;
  Form nichols_beta;
  Biproduct U, A;  // B(W)#K and B(V)#H
  SmashForm smash;
  Report report;
};
// Throws DatumConditionViolation (first offending i) when the C-axioms fail,
// IncompleteNichols when a truncation is incomplete at the cap, and
// VerificationFailure on any other failed check.
GroupTwist build_group_datum(const GroupTwistDatum& d, std::size_t cap, const NicholsOptions& opts = {});

struct GeneratorImages {
  std::vector<Vector> gamma;  // functionals on A, one per i
  std::vector<Vector> delta;
  Report report;
};
// gamma_i: the algebra map with gamma_i(a_j#1) = 0, gamma_i(1#g) = phi(z_i)(g);
// delta_i: the (eps, gamma_i)-derivation with delta_i(a_j#1) = beta(u_i, a_j),
// delta_i(1#g) = 0. Verified against the rows of the smash form at 1#z_i and u_i#1.
GeneratorImages phi_generators(const GroupTwist& t);

struct Reduction {
  std::vector<std::size_t> support;  // I' = {i : lambda_i != 0}
  Matrix v_perp, w_perp;             // computed kernels of beta_l and beta_r
  Matrix expected_v_perp, expected_w_perp;
  Matrix pi_W, pi_V;
  GroupTwist reduced;
  Twist source, target;
  Matrix F;  // source.H -> target.H
  Report report;
};
// Throws NotInjectiveOnSupport when s restricted to I' is not injective.
Reduction reduce_datum(const GroupTwist& t);

}  // namespace hopf
