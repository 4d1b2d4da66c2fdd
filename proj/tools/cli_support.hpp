#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "mckay/contraction/contraction.hpp"

namespace mckay::cli {

using nlohmann::json;

struct RunConfig {
  GroupKind kind = GroupKind::kCyclic;
  int n = 1;
  bool binary = false;
  int dim = 0;           // 0: 2 for the binary group, 3 for the quotient
  int conductor = 0;     // 0: group default
  int degree_bound_2d = 0;  // invariant search bounds, 0: per-group default
  int degree_bound_3d = 0;
  std::vector<std::string> samples = {"1:0", "0:1", "1:1", "1:2", "2:3"};
  std::string emit = "json";  // json, dot or text
  int verbose = 0;
  std::uint64_t seed = 20160901;

  GroupSpec spec() const { return {kind, n}; }
  std::vector<ProjParam> sample_params(int conductor_hint) const;
};

json to_json(const RunConfig& c);
RunConfig run_config_from_json(const json& j);

// Numbers and polynomials are written over one declared conductor.
std::string num_text(const CycloNum& c, int conductor);
json mat_json(const Mat& m, int conductor);
json ideal_json(const IdealGB& i, int conductor);

json group_json(const MatrixGroup& g, bool with_table);
json chartable_json(const CharTable& t, const std::vector<std::string>& labels, const std::vector<bool>& pure);
json quiver_json(const McKayQuiver& q, bool reduced);
json graph_json(const LabelledGraph& g);
// Binary vertices filled black, pure vertices open.
std::string graph_dot(const LabelledGraph& g, const std::string& name);
json coinv_json(const CoinvariantAlgebra& c, const std::vector<std::string>& labels, std::uint64_t seed);
json curves_json(const SideData& side, int dim);
json report_json(const ContractionReport& r, int conductor);

// A cluster drawn at random from a curve family (random parameter) or from a
// free orbit (random integer point).
struct RandomCluster {
  std::string origin;
  IdealGB ideal;
};

std::optional<RandomCluster> random_cluster(const SideData& side, std::mt19937_64& rng);

}  // namespace mckay::cli
