#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/groups/group.hpp"

namespace mckay {

// Function on conjugacy classes, indexed like MatrixGroup::classes().
using ClassFunction = std::vector<CycloNum>;

struct CharTable {
  GroupPtr group;
  std::vector<int> class_reps;
  std::vector<int> class_sizes;
  std::vector<ClassFunction> chars;  // trivial first, then by dimension, then values
  std::vector<int> dims;
  int trivial_index = 0;
  int conductor = 1;        // field holding every value
  std::uint32_t prime = 0;  // modulus used for the eigenspace splitting

  int size() const { return static_cast<int>(chars.size()); }
};

// Dixon's method: common eigenvectors of the class-multiplication matrices
// over F_p with p = 1 mod exponent, lifted to Q(zeta_exponent) through the
// eigenvalue multiplicities of each rho(g).
CharTable character_table(const GroupPtr& g);

ClassFunction natural_character(const MatrixGroup& g);
ClassFunction regular_character(const MatrixGroup& g);
// Class function of an arbitrary representation given by one matrix per element.
ClassFunction character_of(const MatrixGroup& g, const std::vector<Mat>& action);

// (1/|G|) sum_g a(g) conj(b(g)).
CycloNum inner_product(const CharTable& t, const ClassFunction& a, const ClassFunction& b);
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);

class NotACharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Multiplicities <chi, chi_i>; throws NotACharacter unless they are all
// non-negative integers adding up to chi(e).
std::vector<int> decompose(const ClassFunction& chi, const CharTable& t);

struct Purity {
  std::vector<bool> pure;           // per character of the binary group
  std::vector<int> quotient_index;  // row in the quotient table, or -1 for binary
};

// rho pure iff chi(-I) = chi(e). The pure characters, read through the quotient
// map, must reproduce the quotient table row for row (up to order); throws
// std::logic_error otherwise.
Purity classify_pure_binary(const CharTable& binary, const CharTable& quotient, const QuotientMap& q);

// Labels "chi0" for the trivial character, then "chiK" for pure (or all, when
// purity is not given) and "chi~K" for binary characters, numbered in table order.
std::vector<std::string> character_labels(const CharTable& t, const Purity* purity);

// A representation given by one matrix per group element.
struct MatrixModule {
  std::vector<Mat> action;
  int dim() const { return action.empty() ? 0 : action[0].rows(); }
};

inline constexpr unsigned kIntertwinerSeed = 20160901u;

// Equivariant map T : U -> W, i.e. T U(g) = W(g) T, obtained by averaging a
// seeded random matrix. Normalized so the first nonzero entry (row-major) is 1.
// Empty when four attempts give no invertible average.
std::optional<Mat> equivariant_isomorphism(const MatrixModule& u, const MatrixModule& w, const MatrixGroup& g,
                                           unsigned seed = kIntertwinerSeed);

}  // namespace mckay
