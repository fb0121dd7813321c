#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopf {

using BigRational = boost::multiprecision::cpp_rational;

// Either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  enum class Kind : std::uint8_t { Rationals, Prime };

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  // Accepts "Q" or "F_p".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  // Zero for the rationals.
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

// Exact field element. Rationals are kept reduced with positive denominator
// (the backend does this); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& f, long long value);
  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar fraction(const Field& f, long long num, long long den);
  // "a" or "a/b" over Q, decimal residue (possibly negative) over F_p.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text: "a" when the denominator is 1, else "a/b"; residues in
  // decimal.
  std::string to_string() const;

  // Residue for F_p scalars.
  std::uint64_t residue() const { return r_; }
  const BigRational& rational() const { return q_; }

 private:
  void require_same(const Scalar& o) const;

  Field field_;
  BigRational q_;
  std::uint64_t r_ = 0;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);
// Kronecker product, left factor most significant.
Vector kron(const Vector& a, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);
std::vector<std::string> to_strings(const Vector& v);

}  // namespace hopf
