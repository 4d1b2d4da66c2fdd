#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/polyideal/action.hpp"
#include "mckay/reptheory/chartable.hpp"

namespace mckay {

class NotInvariant : public std::runtime_error {
 public:
  NotInvariant(const std::string& what, StabilityWitness w) : std::runtime_error(what), witness(std::move(w)) {}
  StabilityWitness witness;
};

// Trace of each class representative on the standard monomials of S/I.
// Throws NotInvariant (with a witness) unless I is G-stable, and
// InfiniteQuotient for infinite quotients.
ClassFunction quotient_character(const MatrixGroup& g, const IdealGB& gb);

struct ClusterReport {
  bool cluster = false;
  bool stable = true;
  bool finite = true;
  int dimension = -1;  // dim S/I, -1 when infinite
  int order = 0;
  bool regular = false;
  std::string reason;
};

// Cluster iff G-stable, dim S/I = |G| and the quotient character is regular.
ClusterReport is_cluster(const MatrixGroup& g, const IdealGB& gb);

// sigma^-1(I) for sigma : C[a, b, c] -> C[x, y], (a, b, c) -> (x^2, y^2, xy),
// by eliminating x, y from I + <a - x^2, b - y^2, c - xy>.
IdealGB preimage_sigma(const IdealGB& i);

}  // namespace mckay
