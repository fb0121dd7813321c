#include "hopf/field.hpp"

#include <charconv>
#include <limits>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

std::uint64_t mod_of(long long v, std::uint64_t p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw Error("field characteristic must be below 2^31");
  if (!is_prime_number(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "F_") {
    std::uint64_t p = 0;
    auto body = text.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
  }
  throw SchemaError("unknown field '" + std::string(text) + "'");
}

std::string Field::name() const {
  return kind_ == Kind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long long value) : field_(f) {
  if (f.is_prime())
    r_ = mod_of(value, f.characteristic());
  else
    q_ = value;
}

Scalar Scalar::fraction(const Field& f, long long num, long long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  return Scalar(f, num) / Scalar(f, den);
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw SchemaError("empty scalar");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw SchemaError("bad scalar '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw SchemaError("bad scalar '" + std::string(text) + "'");
    return boost::multiprecision::cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  boost::multiprecision::cpp_int num = parse_int(text.substr(0, slash));
  boost::multiprecision::cpp_int den = 1;
  if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  Scalar s;
  s.field_ = f;
  if (f.is_prime()) {
    boost::multiprecision::cpp_int p = f.characteristic();
    auto reduce = [&](boost::multiprecision::cpp_int v) {
      v %= p;
      if (v < 0) v += p;
      return Scalar(f, static_cast<long long>(v));
    };
    return reduce(num) / reduce(den);
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  s.q_ = BigRational(num, den);
  return s;
}

bool Scalar::is_zero() const { return field_.is_prime() ? r_ == 0 : q_.is_zero(); }

bool Scalar::is_one() const { return field_.is_prime() ? r_ == 1 : q_ == 1; }

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s(*this);
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s(*this);
  s -= o;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s(*this);
  s *= o;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_prime())
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (field_.is_prime()) {
    r_ += o.r_;
    if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (field_.is_prime()) {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + field_.characteristic() - o.r_;
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (field_.is_prime())
    r_ = r_ * o.r_ % field_.characteristic();
  else
    q_ *= o.q_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar s(*this);
  if (field_.is_prime())
    s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Scalar r = one(field_);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_prime() ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(r_);
  if (boost::multiprecision::denominator(q_) == 1) return boost::multiprecision::numerator(q_).str();
  return boost::multiprecision::numerator(q_).str() + "/" + boost::multiprecision::denominator(q_).str();
}

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r(v);
  for (auto& x : r)
    if (!x.is_zero()) x *= c;
  return r;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

Vector kron(const Vector& a, const Vector& b) {
  if (a.empty() || b.empty()) return {};
  Vector r = zero_vector(a[0].field(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  if (a.empty()) return Scalar();
  Scalar s = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::vector<std::string> to_strings(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace hopf
