#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/arith/cyclotomic.hpp"

namespace mckay {

inline constexpr int kMaxVars = 5;

enum class MonomialOrder {
  kDegRevLex,       // graded reverse lexicographic, first variable largest
  kBlockDegRevLex,  // first `block` variables >> the rest, degrevlex inside each block
};

struct Ring {
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::kDegRevLex;
  int block = 0;

  int nvars() const { return static_cast<int>(vars.size()); }
  int index_of(std::string_view name) const;
  // e.g. "degrevlex(x>y)" or "block(x>y|a>b>c)"
  std::string descriptor() const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::kDegRevLex, int block = 0);
// Shared instances: A = C[x, y], B = C[a, b, c], and the elimination ring
// C[x, y, a, b, c] with {x, y} >> {a, b, c}.
const RingPtr& ring_a();
const RingPtr& ring_b();
const RingPtr& ring_elimination();
// C[x, y] for dimension 2, C[a, b, c] for dimension 3.
const RingPtr& ring_for_dim(int dim);

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  static Monomial var(int i, int power = 1);
  int degree() const;
  bool divides(const Monomial& o) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // requires b | a
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  std::size_t hash() const;
};

// <0, 0, >0 as a is smaller, equal, larger than b in the ring order.
int compare(const Ring& r, const Monomial& a, const Monomial& b);
std::string monomial_to_string(const Ring& r, const Monomial& m);
// All monomials of the given total degree, in decreasing ring order.
std::vector<Monomial> monomials_of_degree(const Ring& r, int degree);

struct Term {
  Monomial m;
  CycloNum c;
};

// Sparse polynomial; terms strictly decreasing in the ring order, no zero
// coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly constant(RingPtr ring, const CycloNum& c);
  static Poly variable(RingPtr ring, int i);
  static Poly term(RingPtr ring, const Monomial& m, const CycloNum& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  int size() const { return static_cast<int>(t_.size()); }
  bool is_zero() const { return t_.empty(); }
  const Term& lead() const { return t_.front(); }
  const Monomial& lm() const { return t_.front().m; }
  const CycloNum& lc() const { return t_.front().c; }
  int degree() const;
  bool is_homogeneous() const;
  CycloNum coeff(const Monomial& m) const;
  CycloNum constant_term() const { return coeff(Monomial{}); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const CycloNum& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const CycloNum& s) { return a *= s; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b);

  // Remove and return the leading term.
  Term pop_lead();
  // Append a term smaller than every term present.
  void push_smaller(Term t) { t_.push_back(std::move(t)); }
  // this - c * m * g, in place
  void sub_mul(const CycloNum& c, const Monomial& m, const Poly& g);
  Poly mul_term(const Monomial& m, const CycloNum& c) const;
  Poly monic() const;
  Poly lift(int conductor) const;
  // Same terms in another ring with the same variable count layout; slot map
  // sends variable i of this ring to variable map[i] of the target.
  Poly remap(RingPtr target, const std::vector<int>& map) const;

  // Terms "c*x^i*y^j" joined by " + " / " - ". Rational coefficients are
  // written plainly, others in parentheses in the cyclotomic text form over
  // Q(zeta_conductor) (0: each coefficient's own conductor).
  std::string to_string(int conductor = 0) const;
  static Poly parse(std::string_view text, RingPtr ring, int conductor);

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> t_;
};

}  // namespace mckay
