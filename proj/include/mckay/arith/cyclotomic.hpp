#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mckay {

using Rational = mpq_class;
using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

// Q(zeta_N) presented as Q[t] / Phi_N(t). Instances are created once per
// conductor and never destroyed, so references stay valid for the process.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  // Monic Phi_N, coefficients from t^0 to t^degree.
  const std::vector<long>& phi() const { return phi_; }
  // t^(degree + k) mod Phi_N for k = 0 .. degree - 2.
  const std::vector<std::vector<long>>& high_powers() const { return high_powers_; }

 private:
  explicit CyclotomicField(int conductor);
  int conductor_;
  int degree_;
  std::vector<long> phi_;
  std::vector<std::vector<long>> high_powers_;
};

// Integer coefficients of Phi_N, computed by (t^N - 1) / prod_{d | N, d < N} Phi_d.
// Results are memoized; the memo is safe for concurrent readers. When the
// environment variable MCKAY_CYCLO_CACHE names a directory, polynomials are
// also read from / written to "<dir>/phi_<N>.txt".
const std::vector<long>& cyclotomic_polynomial(int n);

int euler_phi(int n);
int lcm_conductor(int a, int b);

// Element of Q(zeta_N) in canonical form: a coefficient vector of length
// deg(Phi_N) in the power basis 1, z, z^2, ...
class CycloNum {
 public:
  CycloNum() : CycloNum(&CyclotomicField::get(1), {Rational(0)}) {}
  CycloNum(int value) : CycloNum(Rational(value), 1) {}   // NOLINT(google-explicit-constructor)
  CycloNum(long value) : CycloNum(Rational(value), 1) {}  // NOLINT(google-explicit-constructor)
  CycloNum(const Rational& value, int conductor = 1);     // NOLINT(google-explicit-constructor)

  static CycloNum zero(int conductor);
  static CycloNum one(int conductor) { return CycloNum(Rational(1), conductor); }
  static CycloNum root_of_unity(long k, int conductor);
  // Build from raw power-basis coefficients (any length; reduced mod Phi_N).
  static CycloNum from_coeffs(std::vector<Rational> coeffs, int conductor);

  int conductor() const { return field_->conductor(); }
  const CyclotomicField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Value as a rational; requires is_rational().
  Rational rational() const;

  CycloNum lift(int conductor) const;
  // Re-express in Q(zeta_N) if the value lives there.
  std::optional<CycloNum> lower(int conductor) const;
  // Smallest conductor dividing the current one whose field holds the value.
  CycloNum minimal() const;

  CycloNum conj() const;
  // Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CycloNum galois(long k) const;
  CycloNum inv() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o) { return *this *= o.inv(); }
  CycloNum& operator*=(const Rational& r);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  // Total order: conductor-independent, lexicographic on coefficient vectors
  // after lifting to a common field.
  friend std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b);

  std::size_t hash() const;

  // "c0 + c1*z + c2*z^2 ..." ; rational coefficients written p/q.
  std::string to_string() const;
  static CycloNum parse(std::string_view text, int conductor);

  // Standard embedding zeta_N = exp(2 pi i / N); display and sanity checks only.
  std::complex<double> approx() const;

 private:
  CycloNum(const CyclotomicField* f, std::vector<Rational> c) : field_(f), c_(std::move(c)) {}
  void reduce_in_place(std::vector<Rational>& prod) const;

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

CycloNum root_of_unity(long k, int conductor);

std::string rational_to_string(const Rational& r);

}  // namespace mckay

template <>
struct std::hash<mckay::CycloNum> {
  std::size_t operator()(const mckay::CycloNum& a) const noexcept { return a.hash(); }
};
