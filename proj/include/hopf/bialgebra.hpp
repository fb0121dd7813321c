#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopf/matrix.hpp"
#include "hopf/report.hpp"

namespace hopf {

// c * (e_left (x) e_right)
struct CoTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};
// For each basis element, the sparse list of terms of its image in X (x) Y.
using CoTable = std::vector<std::vector<CoTerm>>;

CoTable cotable_from_matrix(const Matrix& m, std::size_t left_dim, std::size_t right_dim);
Matrix cotable_to_matrix(const Field& f, const CoTable& t, std::size_t left_dim, std::size_t right_dim);
// Duplicate terms merged, zero terms dropped, sorted by (left, right).
CoTable canonical_cotable(const CoTable& t);

// Structure constants of a finite-dimensional bialgebra on a fixed basis.
struct FiniteBialgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Scalar> mult;  // coefficient of e_k in e_i e_j at (i*dim + j)*dim + k
  Vector unit;
  CoTable comult;
  Vector counit;

  static FiniteBialgebra empty(const Field& f, std::size_t dim);

  Scalar& m(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
  const Scalar& m(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }

  Vector basis_product(std::size_t i, std::size_t j) const;
  Vector product(const Vector& a, const Vector& b) const;
  // Image in A (x) A, flattened.
  Vector coproduct(const Vector& a) const;
  Scalar apply_counit(const Vector& a) const;
  Matrix mult_matrix() const;    // dim x dim^2
  Matrix comult_matrix() const;  // dim^2 x dim
  Matrix left_mult(std::size_t i) const;   // x -> e_i x
  Matrix right_mult(std::size_t i) const;  // x -> x e_i

  // Throws ShapeError on inconsistent table sizes.
  void validate() const;
  bool operator==(const FiniteBialgebra& o) const;
};

struct FiniteHopf : FiniteBialgebra {
  Matrix antipode;
  std::optional<Matrix> antipode_inverse;

  const Matrix& antipode_inv() const;  // throws NotInvertible
  bool operator==(const FiniteHopf& o) const;
};

Report check_bialgebra(const FiniteBialgebra& b);
Report check_antipode(const FiniteBialgebra& b, const Matrix& s);

// Solves S * id = id * S = unit o counit as a linear system in the entries
// of S. Throws NoAntipode when the system is inconsistent.
Matrix compute_antipode(const FiniteBialgebra& b);
// Attaches the antipode and its inverse when bijective.
FiniteHopf make_hopf(const FiniteBialgebra& b);

FiniteBialgebra opposite_bialgebra(const FiniteBialgebra& b);
FiniteBialgebra coopposite_bialgebra(const FiniteBialgebra& b);
// Dual basis; product is the transpose of the coproduct and vice versa.
FiniteBialgebra dual_bialgebra(const FiniteBialgebra& b);
FiniteBialgebra tensor_product_bialgebra(const FiniteBialgebra& a, const FiniteBialgebra& b);

FiniteHopf opposite_hopf(const FiniteHopf& h);
FiniteHopf coopposite_hopf(const FiniteHopf& h);
FiniteHopf dual_hopf(const FiniteHopf& h);
FiniteHopf tensor_product_hopf(const FiniteHopf& a, const FiniteHopf& b);

// (f * g)(c) = f(c1) g(c2) for linear maps C -> A.
Matrix convolution(const Matrix& f, const Matrix& g, const FiniteBialgebra& c, const FiniteBialgebra& a);
// x -> counit(x) 1_A
Matrix unit_counit(const FiniteBialgebra& c, const FiniteBialgebra& a);

Report check_algebra_map(const Matrix& f, const FiniteBialgebra& src, const FiniteBialgebra& tgt);
Report check_coalgebra_map(const Matrix& f, const FiniteBialgebra& src, const FiniteBialgebra& tgt);
Report check_bialgebra_map(const Matrix& f, const FiniteBialgebra& src, const FiniteBialgebra& tgt);

// Finite abelian group Z/n1 x ... x Z/nr; elements are exponent tuples,
// indexed row-major.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::size_t> orders);
  const std::vector<std::size_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return index_.size(); }
  std::size_t index(const std::vector<std::size_t>& exps) const;  // exponents reduced mod orders
  std::vector<std::size_t> exponents(std::size_t idx) const { return index_.unflatten(idx); }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t generator(std::size_t which) const;
  std::string label(std::size_t idx, const std::string& letter) const;

 private:
  std::vector<std::size_t> orders_;
  TensorIndex index_;
};

// Group algebra with grouplike basis; labels use the given letter.
FiniteHopf group_algebra(const AbelianGroup& g, const Field& f, const std::string& letter = "g");

}  // namespace hopf
