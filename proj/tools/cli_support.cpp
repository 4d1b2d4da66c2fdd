#include "cli_support.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mckay::cli {

std::vector<ProjParam> RunConfig::sample_params(int conductor_hint) const {
  std::vector<ProjParam> out;
  for (const auto& s : samples) out.push_back(ProjParam::parse(s, conductor_hint));
  return out;
}

json to_json(const RunConfig& c) {
  return {{"kind", kind_name(c.kind)},   {"n", c.n},
          {"binary", c.binary},          {"dim", c.dim},
          {"conductor", c.conductor},    {"degree_bounds", {c.degree_bound_2d, c.degree_bound_3d}},
          {"samples", c.samples},        {"emit", c.emit},
          {"verbose", c.verbose},        {"seed", c.seed}};
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  c.kind = parse_kind(j.at("kind").get<std::string>());
  c.n = j.value("n", c.n);
  c.binary = j.value("binary", c.binary);
  c.dim = j.value("dim", c.dim);
  c.conductor = j.value("conductor", c.conductor);
  if (j.contains("degree_bounds")) {
    c.degree_bound_2d = j["degree_bounds"].at(0).get<int>();
    c.degree_bound_3d = j["degree_bounds"].at(1).get<int>();
  }
  c.samples = j.value("samples", c.samples);
  c.emit = j.value("emit", c.emit);
  c.verbose = j.value("verbose", c.verbose);
  c.seed = j.value("seed", c.seed);
  if (c.emit != "json" && c.emit != "dot" && c.emit != "text") throw std::invalid_argument("unknown emit format " + c.emit);
  if (c.dim != 0 && c.dim != 2 && c.dim != 3) throw std::invalid_argument("dim must be 2 or 3");
  return c;
}

std::string num_text(const CycloNum& c, int conductor) {
  if (conductor % c.conductor() != 0)
    throw std::logic_error("value over conductor " + std::to_string(c.conductor()) + " written at " +
                           std::to_string(conductor));
  return c.lift(conductor).to_string();
}

json mat_json(const Mat& m, int conductor) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(num_text(m(i, j), conductor));
    rows.push_back(r);
  }
  return rows;
}

json ideal_json(const IdealGB& i, int conductor) {
  json gens = json::array();
  for (const auto& f : i.basis) gens.push_back(f.to_string(conductor));
  return {{"ring", i.ring->descriptor()}, {"generators", gens}};
}

json group_json(const MatrixGroup& g, bool with_table) {
  json j = {{"name", g.name()}, {"order", g.order()}, {"dim", g.dim()}, {"conductor", g.conductor()}};
  j["classes"] = g.classes();
  j["exponent"] = g.exponent();
  if (!with_table) return j;
  json el = json::array();
  for (const auto& e : g.elements()) el.push_back(mat_json(e.matrix, g.conductor()));
  j["elements"] = el;
  json tab = json::array();
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> row(static_cast<std::size_t>(g.order()));
    for (int b = 0; b < g.order(); ++b) row[static_cast<std::size_t>(b)] = g.mul(a, b);
    tab.push_back(row);
  }
  j["multiplication_table"] = tab;
  return j;
}

json chartable_json(const CharTable& t, const std::vector<std::string>& labels, const std::vector<bool>& pure) {
  json chars = json::array();
  for (int r = 0; r < t.size(); ++r) {
    json vals = json::array();
    for (const auto& v : t.chars[static_cast<std::size_t>(r)]) vals.push_back(num_text(v, t.conductor));
    chars.push_back({{"label", labels[static_cast<std::size_t>(r)]},
                     {"dim", t.dims[static_cast<std::size_t>(r)]},
                     {"pure", static_cast<bool>(pure[static_cast<std::size_t>(r)])},
                     {"values", vals}});
  }
  return {{"group", t.group->name()},       {"conductor", t.conductor}, {"class_reps", t.class_reps},
          {"class_sizes", t.class_sizes}, {"characters", chars}};
}

namespace {

json vertices_json(const std::vector<QuiverVertex>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"label", v.label}, {"dim", v.dim}, {"pure", v.pure}});
  return out;
}

json edges_json(const std::vector<std::pair<int, int>>& es) {
  json out = json::array();
  for (auto [a, b] : es) out.push_back({a, b});
  return out;
}

std::vector<std::string> label_list(const std::vector<int>& idx, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(labels[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

json quiver_json(const McKayQuiver& q, bool reduced) {
  if (reduced) return graph_json(reduced_graph(q));
  return {{"vertices", vertices_json(q.vertices)}, {"adjacency", q.adjacency}};
}

json graph_json(const LabelledGraph& g) {
  return {{"vertices", vertices_json(g.vertices)}, {"edges", edges_json(g.edges)}};
}

std::string graph_dot(const LabelledGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    os << "  v" << i << " [label=\"" << v.label << "\\n" << v.dim << "\"";
    if (v.pure)
      os << ", style=solid, fillcolor=white";
    else
      os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

json coinv_json(const CoinvariantAlgebra& c, const std::vector<std::string>& labels, std::uint64_t seed) {
  const int k = c.table->conductor;
  json inv = json::array();
  for (const auto& f : c.invariants) inv.push_back(f.to_string(k));
  json mons = json::array();
  for (const auto& m : c.std_monomials) mons.push_back(monomial_to_string(*c.gb.ring, m));
  json copies = json::array();
  for (int r = 0; r < c.table->size(); ++r) {
    const auto& list = c.copies_of[static_cast<std::size_t>(r)];
    if (list.empty()) continue;
    json cs = json::array();
    for (int idx : list) {
      const auto& cp = c.copies[static_cast<std::size_t>(idx)];
      json basis = json::array();
      for (const auto& f : cp.basis) basis.push_back(f.to_string(k));
      cs.push_back({{"degree", cp.degree}, {"basis", basis}});
    }
    json entry = {{"rho", labels[static_cast<std::size_t>(r)]}, {"multiplicity", list.size()}, {"copies", cs}};
    if (list.size() >= 2) {
      const auto phi = equivariant_isomorphism(c.copy(r, 0).module, c.copy(r, 1).module, *c.group,
                                               static_cast<unsigned>(seed));
      if (phi) entry["intertwiner_0_1"] = mat_json(*phi, k);
    }
    copies.push_back(entry);
  }
  return {{"group", c.group->name()},
          {"conductor", k},
          {"dimension", c.dimension()},
          {"degree_dims", c.degree_dims},
          {"invariants", inv},
          {"gb", ideal_json(c.gb, k)},
          {"standard_monomials", mons},
          {"isotypic", copies}};
}

json curves_json(const SideData& side, int dim) {
  const int k = side.table->conductor;
  json fams = json::array();
  for (const auto& f : side.curves.families) {
    json smp = json::array();
    for (const auto& s : f.samples)
      smp.push_back({{"param", s.param.to_string()},
                     {"generators", ideal_json(s.ideal, k)["generators"]},
                     {"v_module", label_list(s.v_module, side.labels)}});
    fams.push_back({{"rho", side.labels[static_cast<std::size_t>(f.rho)]},
                    {"pure", static_cast<bool>(side.pure[static_cast<std::size_t>(f.rho)])},
                    {"copy_pair", {f.copy_pair.first, f.copy_pair.second}},
                    {"samples", smp},
                    {"endpoints", f.endpoints}});
  }
  return {{"group", side.group->name()},
          {"dim", dim},
          {"conductor", k},
          {"ring", side.coinv->gb.ring->descriptor()},
          {"families", fams},
          {"anomalies", side.curves.anomalies}};
}

json report_json(const ContractionReport& r, int conductor) {
  json curves = json::array();
  for (const auto& c : r.curves) {
    json images = json::array();
    for (const auto& im : c.images) images.push_back(ideal_json(im, conductor)["generators"]);
    json w = {{"params", c.params}, {"images", images}, {"image_v", c.image_v}, {"notes", c.notes}};
    if (c.target >= 0) w["target"] = c.target;
    if (!c.expected_v.empty()) w["expected_v"] = c.expected_v;
    curves.push_back({{"rho", c.label},
                      {"purity", c.pure ? "pure" : "binary"},
                      {"verdict", c.verdict},
                      {"pass", c.pass},
                      {"witnesses", w}});
  }
  return {{"group", r.group},         {"quotient", r.quotient}, {"conductor", conductor},
          {"contracted", r.contracted}, {"mapped", r.mapped},   {"curves", curves},
          {"notes", r.notes},         {"pass", r.pass}};
}

std::optional<RandomCluster> random_cluster(const SideData& side, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(-6, 6);
  if (coin(rng) == 0 && !side.curves.families.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, side.curves.families.size() - 1);
    const auto& fam = side.curves.families[pick(rng)];
    ProjParam p{CycloNum(small(rng)), CycloNum(small(rng))};
    if (p.p.is_zero() && p.q.is_zero()) return std::nullopt;
    auto id = cluster_from_choice(*side.coinv, fam.rho, fam.copy_pair.first, fam.copy_pair.second, p);
    if (!id) return std::nullopt;
    return RandomCluster{"curve " + side.labels[static_cast<std::size_t>(fam.rho)] + " at " + p.to_string(), *id};
  }
  std::vector<CycloNum> pt;
  std::string desc;
  for (int v = 0; v < side.group->dim(); ++v) {
    const int x = small(rng);
    pt.emplace_back(x);
    desc += (v ? "," : "") + std::to_string(x);
  }
  IdealGB id = orbit_ideal(side.coinv->invariants, pt);
  if (!is_cluster(*side.group, id).cluster) return std::nullopt;  // stabilized point
  return RandomCluster{"orbit of (" + desc + ")", std::move(id)};
}

}  // namespace mckay::cli
