#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/groups/group.hpp"
#include "mckay/polyideal/groebner.hpp"

namespace mckay {

// f(m X): variable i goes to sum_j m(i, j) x_j.
Poly substitute_linear(const Mat& m, const Poly& f);
// g . f = f(g^-1 X).
Poly act(const MatrixGroup& g, int element, const Poly& f);
// (1 / |G|) sum_g g . f
Poly reynolds(const MatrixGroup& g, const Poly& f);

// Matrix of f -> f(m X) on the degree-d monomials (decreasing order); column k
// holds the image of the k-th monomial.
Mat degree_action(const Mat& m, const RingPtr& ring, int degree);
Vec coordinates(const Poly& f, const std::vector<Monomial>& basis);
Poly from_coordinates(const RingPtr& ring, const Vec& v, const std::vector<Monomial>& basis);

// Short list of elements generating the group, chosen greedily in index order.
std::vector<int> generating_set(const MatrixGroup& g);

struct StabilityWitness {
  int element = -1;
  Poly generator;
};
// First (group generator, basis element) pair whose image leaves the ideal.
std::optional<StabilityWitness> stability_failure(const MatrixGroup& g, const IdealGB& gb);

}  // namespace mckay
