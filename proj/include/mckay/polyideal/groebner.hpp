#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/polyideal/poly.hpp"

namespace mckay {

// Ideal held as its reduced Groebner basis: monic, auto-reduced, sorted by
// increasing leading monomial. Equal ideals have identical bases.
struct IdealGB {
  RingPtr ring;
  std::vector<Poly> basis;

  bool is_unit() const { return basis.size() == 1 && basis[0].lm() == Monomial{}; }
  bool is_zero() const { return basis.empty(); }
  friend bool operator==(const IdealGB& a, const IdealGB& b);
  // "[g1, g2, ...]" over Q(zeta_conductor)
  std::string to_string(int conductor = 0) const;
};

struct GroebnerStats {
  long pairs_considered = 0;
  long pairs_reduced = 0;
  long zero_reductions = 0;
};

// Buchberger with the Gebauer-Moeller pair criteria and normal selection.
IdealGB groebner(const std::vector<Poly>& generators, const RingPtr& ring, GroebnerStats* stats = nullptr);

// Full (tail) reduction of f by the given polynomials.
Poly normal_form(const Poly& f, const std::vector<Poly>& divisors);
inline Poly normal_form(const Poly& f, const IdealGB& gb) { return normal_form(f, gb.basis); }

bool contains(const IdealGB& gb, const Poly& f);
bool contains(const IdealGB& big, const IdealGB& small);
IdealGB ideal_sum(const IdealGB& a, const IdealGB& b);
// a * b, from products of generators
IdealGB ideal_product(const IdealGB& a, const IdealGB& b);
// ideal generated by the variables
IdealGB maximal_ideal(const RingPtr& ring);

class InfiniteQuotient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Standard monomials, increasing in the ring order. Throws InfiniteQuotient
// when some variable has no pure power among the leading monomials.
std::vector<Monomial> quotient_basis(const IdealGB& gb);

}  // namespace mckay
