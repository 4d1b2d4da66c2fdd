#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mckay/arith/linalg.hpp"

namespace mckay {

enum class GroupKind { kCyclic, kDihedral, kTetrahedral, kOctahedral, kIcosahedral };

std::string kind_name(GroupKind kind);
GroupKind parse_kind(const std::string& text);

struct GroupSpec {
  GroupKind kind = GroupKind::kCyclic;
  int n = 1;  // index for cyclic / dihedral, ignored otherwise

  // Orders of the binary group and of its polyhedral quotient.
  int binary_order() const;
  int quotient_order() const { return binary_order() / 2; }
  // Smallest conductor holding every generator entry.
  int default_conductor() const;
  std::string label(bool binary) const;
};

struct GroupElement {
  Mat matrix;
  int index = 0;
};

class MatrixGroup {
 public:
  // Closure of the generators under multiplication, in BFS order starting at
  // the identity. Throws if more than max_order elements turn up.
  static MatrixGroup generate(const std::vector<Mat>& generators, std::size_t max_order, std::string name);
  // Group from an explicit duplicate-free element list whose first entry is
  // the identity. With with_table = false only membership queries and matrix
  // products are available.
  static MatrixGroup from_elements(std::vector<Mat> elements, std::string name, bool with_table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int dim() const { return elements_.empty() ? 0 : elements_[0].matrix.rows(); }
  int conductor() const { return conductor_; }

  const GroupElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const Mat& matrix(int i) const { return elements_[static_cast<std::size_t>(i)].matrix; }
  const std::vector<GroupElement>& elements() const { return elements_; }

  bool has_table() const { return !table_.empty(); }
  int mul(int a, int b) const;
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity() const { return 0; }
  // Index of a matrix in the group, or -1.
  int find(const Mat& m) const;
  // Index of -I, or -1.
  int negative_identity() const;

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int element) const { return class_of_[static_cast<std::size_t>(element)]; }
  int element_order(int element) const;
  int exponent() const;

  // The same group with matrices re-expressed over Q(zeta_conductor).
  MatrixGroup lift(int conductor) const;

 private:
  friend std::pair<std::shared_ptr<const MatrixGroup>, struct QuotientMap> build_polyhedral_quotient(
      const std::shared_ptr<const MatrixGroup>& gt);
  void index_elements();
  void compute_classes();
  static std::size_t matrix_hash(const Mat& m);

  std::string name_;
  int conductor_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<int> table_;  // order x order, row-major
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::unordered_multimap<std::size_t, int> lookup_;
};

using GroupPtr = std::shared_ptr<const MatrixGroup>;

struct QuotientMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> element_map;  // source index -> target index
  std::vector<int> kernel;       // source indices of I and -I
};

// Quaternion a + b i + c j + d k with coefficients in a real cyclotomic subfield.
struct Quaternion {
  CycloNum a, b, c, d;
  // [[a + ib, c + id], [-c + id, a - ib]] with i = zeta_4 lifted to the conductor.
  Mat to_su2(int conductor) const;
  static Quaternion from_su2(const Mat& m);
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  Quaternion conj() const { return {a, -b, -c, -d}; }
};

MatrixGroup build_binary_polyhedral(const GroupSpec& spec, int conductor = 0);
std::pair<GroupPtr, QuotientMap> build_polyhedral_quotient(const GroupPtr& gt);
// 3x3 matrix of g on (a, b, c) = (x^2, y^2, xy).
Mat quotient_matrix(const Mat& g);
// Image of G~ x G~ in SO(4) under x -> p x q^-1 on the basis (1, i, j, k).
MatrixGroup build_bipolyhedral(const MatrixGroup& gt);
// 4x4 matrix of x -> p x q^-1.
Mat bipolyhedral_matrix(const Quaternion& p, const Quaternion& q);

// lcm of the matrix conductor and the group exponent: a field holding every
// character value and every matrix entry.
int working_conductor(const MatrixGroup& g);

}  // namespace mckay
