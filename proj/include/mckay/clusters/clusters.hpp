#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/polyideal/cluster_test.hpp"
#include "mckay/polyideal/coinvariant.hpp"
#include "mckay/reptheory/quiver.hpp"

namespace mckay {

// Point (p : q) of the projective line.
struct ProjParam {
  CycloNum p, q;
  std::string to_string() const;
  static ProjParam parse(const std::string& text, int conductor);
  bool is_endpoint() const { return p.is_zero() || q.is_zero(); }
};

// (1:0), (0:1), (1:1), (1:2), (2:3)
std::vector<ProjParam> default_samples();

// Multiplicities of V(I) = I / (m_S I + n_G) over the character table,
// from chi(S / (m_S I + n_G)) - chi(S / I). Throws std::invalid_argument
// with a witness unless n_G is contained in I and I in m_S.
std::vector<int> generator_module(const IdealGB& i, const CoinvariantAlgebra& coinv);

// W S + n_G with W = {p v - q phi(v)}, v running over copy i of rho and phi
// the intertwiner to copy j. No cluster test.
IdealGB ideal_from_choice(const CoinvariantAlgebra& coinv, int rho, int i, int j, const ProjParam& param);

// The cluster at (p:q): W S + n_G when that is a cluster, otherwise the flat
// limit of the family at that point (computed by saturating in an auxiliary
// parameter). Empty when neither is a cluster. Throws std::invalid_argument
// for i == j, (0:0) or non-isomorphic copies.
std::optional<IdealGB> cluster_from_choice(const CoinvariantAlgebra& coinv, int rho, int i, int j,
                                           const ProjParam& param);

struct CurvePoint {
  int rho = 0;
  std::pair<int, int> copy_pair;
  ProjParam param;
  IdealGB ideal;
  std::vector<int> v_module;  // character indices, increasing
};

struct CurveFamily {
  int rho = 0;
  std::pair<int, int> copy_pair;
  std::vector<CurvePoint> samples;
  std::vector<int> endpoints;  // samples whose v_module has two characters
};

struct CurveSearch {
  std::vector<CurveFamily> families;  // one per nontrivial character that found one
  std::vector<std::string> anomalies;
};

// For every nontrivial rho, the copy pairs whose generic samples are clusters
// with V(I) = rho; one family each, evaluated on all samples.
CurveSearch exceptional_curves(const CoinvariantAlgebra& coinv, const std::vector<ProjParam>& samples);

// Vertices: the family characters; an edge when two families share a sampled
// ideal or a sample's V(I) holds both characters.
LabelledGraph intersection_graph(const std::vector<CurveFamily>& families, const CharTable& t,
                                 const std::vector<std::string>& labels, const std::vector<bool>& pure);

// I_j(p:q) = <p x^j - q y^(2n-j), xy, x^(j+1), y^(2n-j+1)>, 1 <= j <= 2n-1.
IdealGB cyclic_cluster_2d(int n, int j, const ProjParam& param);
// J_k(s:t) = <s a^k - t b^(n-k), c, a^(k+1), b^(n-k+1), ab>, 1 <= k <= n-1.
IdealGB cyclic_cluster_3d(int n, int k, const ProjParam& param);

// <f - f(P)> over the invariant generators: the orbit ideal of P, a cluster
// when the orbit is free.
IdealGB orbit_ideal(const std::vector<Poly>& invariants, const std::vector<CycloNum>& point);

}  // namespace mckay
