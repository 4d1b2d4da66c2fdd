#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/clusters/clusters.hpp"

namespace mckay {

// Everything computed for one side (2D binary group or its 3D quotient).
struct SideData {
  GroupPtr group;
  std::shared_ptr<const CharTable> table;
  std::vector<std::string> labels;
  std::vector<bool> pure;  // all true on the quotient side
  std::shared_ptr<const CoinvariantAlgebra> coinv;
  CurveSearch curves;
};

struct TheoremSetup {
  GroupSpec spec;
  SideData binary, quotient;
  QuotientMap map;
  Purity purity;
  McKayQuiver quiver2d, quiver3d;
  std::vector<ProjParam> samples;
};

// Groups, tables, quivers, coinvariant algebras and curve families on both
// sides. Quotient characters borrow the labels of the pure characters they
// come from. Degree bounds (binary, quotient) of 0 pick the defaults.
TheoremSetup prepare_theorem(const GroupSpec& spec, const std::vector<ProjParam>& samples, int conductor = 0,
                             std::pair<int, int> degree_bounds = {0, 0});
// The same, without the curve search.
TheoremSetup prepare_groups(const GroupSpec& spec, int conductor = 0);
SideData& compute_side(SideData& side, const GroupSpec& spec, bool binary, const std::vector<ProjParam>& samples,
                       int degree_bound = 0);

class ContractionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// J = sigma^-1(I). Throws ContractionFailure if J is not a G-cluster or if
// I lies in m_A but J does not lie in m_B. With check_input a non-cluster I
// is rejected with std::invalid_argument.
IdealGB contract_cluster(const MatrixGroup& binary, const MatrixGroup& quotient, const IdealGB& i,
                         bool check_input = true);

enum class ImageKind { kContracted, kMapped };

struct CurveImage {
  ImageKind kind = ImageKind::kMapped;
  std::vector<IdealGB> images;  // per sample
};

class MixedImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contracts every sample. Needs at least four samples including both
// endpoints (std::invalid_argument); throws MixedImage when the images are
// neither all equal nor pairwise distinct.
CurveImage image_of_curve(const CurveFamily& fam, const MatrixGroup& binary, const MatrixGroup& quotient);

struct CurveVerdict {
  int rho = 0;
  std::string label;
  bool pure = false;
  std::string verdict;  // "mapped", "contracted" or "failed"
  std::vector<std::string> params;
  std::vector<IdealGB> images;
  std::vector<std::vector<int>> image_v;  // V(image) per sample, 3D character indices
  int target = -1;                        // quotient character of a pure rho
  std::vector<int> expected_v;            // binary rho: the pure neighbours, as quotient characters
  std::vector<std::string> notes;
  bool pass = false;
};

struct ContractionReport {
  std::string group, quotient;
  std::vector<CurveVerdict> curves;
  int contracted = 0, mapped = 0;
  std::vector<std::string> notes;
  bool pass = false;
};

// Pure rho: images pairwise distinct, generically with V = {rho} on the
// quotient side, and distinct pure rho reach distinct families. Binary rho:
// a single image whose V is exactly the pure neighbours of rho in the reduced
// 2D quiver; distinct binary rho give distinct points.
ContractionReport verify_contraction_theorem(const TheoremSetup& setup);

}  // namespace mckay
