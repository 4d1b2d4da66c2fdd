#pragma once

#include <memory>
#include <vector>

#include "mckay/polyideal/groebner.hpp"
#include "mckay/reptheory/chartable.hpp"

namespace mckay {

// One irreducible summand V^(i)(rho) of the coinvariant algebra: homogeneous
// polynomials in normal form, with the group action on that basis.
struct IsotypicCopy {
  int rho = 0;
  int degree = 0;
  std::vector<Poly> basis;
  MatrixModule module;  // column k of action[g] = coordinates of g . basis[k]
};

struct CoinvariantAlgebra {
  GroupPtr group;
  std::shared_ptr<const CharTable> table;
  std::vector<Poly> invariants;      // generators of n_G
  IdealGB gb;                        // of n_G
  std::vector<Monomial> std_monomials;  // increasing
  std::vector<int> degree_dims;         // dim of each graded piece
  std::vector<IsotypicCopy> copies;     // by degree, then extraction order
  std::vector<std::vector<int>> copies_of;  // per character: indices into copies

  int dimension() const { return static_cast<int>(std_monomials.size()); }
  const IsotypicCopy& copy(int rho, int i) const {
    return copies[static_cast<std::size_t>(copies_of[static_cast<std::size_t>(rho)][static_cast<std::size_t>(i)])];
  }
};

class MultiplicityMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// S / n_G with its isotypic copies. Each isotypic block is split by taking
// the lambda-eigenvectors of one rho(h) with lambda a simple eigenvalue,
// and letting the group move each one around. Throws MultiplicityMismatch
// unless every nontrivial rho appears 2 dim(rho) times.
CoinvariantAlgebra coinvariant_algebra(const GroupPtr& g, std::shared_ptr<const CharTable> table, int degree_bound);

// Action matrices of every group element on a finite set of standard
// monomials of a homogeneous stable ideal, degree by degree.
std::vector<Mat> graded_action(const MatrixGroup& g, const IdealGB& gb, const std::vector<Monomial>& mons);

}  // namespace mckay
