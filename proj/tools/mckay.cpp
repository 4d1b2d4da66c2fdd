// mckay: command-line front end.
//   mckay quiver --kind cyclic -n 4 --binary --reduced --emit dot
//   mckay verify --kind tetrahedral --samples 1:0 0:1 1:1 1:2 2:3
// Exit status: 0 success, 1 failed verification, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_support.hpp"

using namespace mckay;
using namespace mckay::cli;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  RunConfig cfg;
  std::string kind = "cyclic";
  std::string out;
  std::string config_file;
  bool dump_config = false;
  bool slow = false;
  bool reduced = false;
  bool summary = false;
  bool bipolyhedral = false;
  std::vector<std::string> gens;
  std::string orbit;
  int random = 0;
};

class Timer {
 public:
  Timer(int verbose, std::string what) : on_(verbose > 0), what_(std::move(what)), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!on_) return;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    std::cerr << "[mckay] " << what_ << ": " << s << " s\n";
  }

 private:
  bool on_;
  std::string what_;
  std::chrono::steady_clock::time_point t0_;
};

bool slow_enabled(const Options& o) {
  if (o.slow) return true;
  const char* env = std::getenv("MCKAY_SLOW_TESTS");
  return env && std::string(env) != "0" && std::string(env) != "";
}

void require_fast(const Options& o) {
  const auto k = o.cfg.kind;
  if ((k == GroupKind::kOctahedral || k == GroupKind::kIcosahedral) && !slow_enabled(o))
    throw UsageError("octahedral/icosahedral pipelines run only with --slow (or MCKAY_SLOW_TESTS=1)");
}

void write(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool side_is_binary(const Options& o) {
  const int dim = o.cfg.dim;
  if (dim == 3 && o.cfg.binary) throw UsageError("--binary acts on dimension 2");
  if (dim == 2) return true;
  if (dim == 3) return false;
  return o.cfg.binary;
}

TheoremSetup groups(const Options& o) {
  Timer t(o.cfg.verbose, "groups and tables");
  return prepare_groups(o.cfg.spec(), o.cfg.conductor);
}

SideData& side_with(const Options& o, TheoremSetup& st, bool binary, bool curves) {
  SideData& side = binary ? st.binary : st.quotient;
  Timer t(o.cfg.verbose, curves ? "coinvariants and curves" : "coinvariants");
  std::vector<ProjParam> samples;
  if (curves) samples = o.cfg.sample_params(side.table->conductor);
  compute_side(side, o.cfg.spec(), binary, samples, binary ? o.cfg.degree_bound_2d : o.cfg.degree_bound_3d);
  return side;
}

std::string text_graph(const LabelledGraph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << g.vertices[i].label << " dim " << g.vertices[i].dim << (g.vertices[i].pure ? " pure" : " binary") << "\n";
  for (auto [a, b] : g.edges)
    os << g.vertices[static_cast<std::size_t>(a)].label << " -- " << g.vertices[static_cast<std::size_t>(b)].label
       << "\n";
  return os.str();
}

int run_group(const Options& o) {
  const auto spec = o.cfg.spec();
  GroupPtr g = std::make_shared<const MatrixGroup>(build_binary_polyhedral(spec, o.cfg.conductor));
  if (o.bipolyhedral) {
    if (spec.kind == GroupKind::kIcosahedral && !slow_enabled(o)) require_fast(o);
    g = std::make_shared<const MatrixGroup>(build_bipolyhedral(*g));
  } else if (!o.cfg.binary) {
    g = build_polyhedral_quotient(g).first;
  }
  const bool table = !o.summary && !o.bipolyhedral;
  if (o.cfg.emit == "text") {
    write(o, g->name() + ": order " + std::to_string(g->order()) + ", " + std::to_string(g->classes().size()) +
                 " classes, dimension " + std::to_string(g->dim()) + "\n");
  } else {
    write(o, dump(group_json(*g, table)));
  }
  return 0;
}

int run_chartable(const Options& o) {
  TheoremSetup st = groups(o);
  const SideData& s = o.cfg.binary ? st.binary : st.quotient;
  if (o.cfg.emit == "text") {
    std::ostringstream os;
    for (int r = 0; r < s.table->size(); ++r) {
      os << s.labels[static_cast<std::size_t>(r)];
      for (const auto& v : s.table->chars[static_cast<std::size_t>(r)]) os << "  [" << num_text(v, s.table->conductor) << "]";
      os << "\n";
    }
    write(o, os.str());
  } else {
    write(o, dump(chartable_json(*s.table, s.labels, s.pure)));
  }
  return 0;
}

int run_quiver(const Options& o) {
  TheoremSetup st = groups(o);
  const McKayQuiver& q = o.cfg.binary ? st.quiver2d : st.quiver3d;
  const std::string name = o.cfg.spec().label(o.cfg.binary);
  if (o.cfg.emit == "dot") {
    if (!o.reduced) throw UsageError("DOT output needs --reduced");
    write(o, graph_dot(reduced_graph(q), name));
  } else if (o.cfg.emit == "text") {
    write(o, text_graph(reduced_graph(q)));
  } else {
    write(o, dump(quiver_json(q, o.reduced)));
  }
  return 0;
}

int run_coinv(const Options& o) {
  require_fast(o);
  TheoremSetup st = groups(o);
  const bool binary = side_is_binary(o);
  const SideData& s = side_with(o, st, binary, false);
  if (o.cfg.emit == "text") {
    std::ostringstream os;
    os << s.group->name() << ": dim S/n = " << s.coinv->dimension() << "\n";
    for (const auto& f : s.coinv->invariants) os << "  " << f.to_string(s.table->conductor) << "\n";
    write(o, os.str());
  } else {
    write(o, dump(coinv_json(*s.coinv, s.labels, o.cfg.seed)));
  }
  return 0;
}

int run_curves(const Options& o) {
  require_fast(o);
  TheoremSetup st = groups(o);
  const bool binary = side_is_binary(o);
  const SideData& s = side_with(o, st, binary, true);
  if (o.cfg.emit == "text") {
    std::ostringstream os;
    for (const auto& f : s.curves.families) {
      os << "E(" << s.labels[static_cast<std::size_t>(f.rho)] << ") copies " << f.copy_pair.first << ","
         << f.copy_pair.second << "\n";
      for (const auto& p : f.samples) os << "  " << p.param.to_string() << "  " << p.ideal.to_string(s.table->conductor) << "\n";
    }
    for (const auto& a : s.curves.anomalies) os << "anomaly: " << a << "\n";
    write(o, os.str());
  } else {
    write(o, dump(curves_json(s, binary ? 2 : 3)));
  }
  return s.curves.anomalies.empty() ? 0 : 1;
}

int run_graph(const Options& o) {
  require_fast(o);
  TheoremSetup st = groups(o);
  const bool binary = side_is_binary(o);
  const SideData& s = side_with(o, st, binary, true);
  const LabelledGraph g = intersection_graph(s.curves.families, *s.table, s.labels, s.pure);
  const bool iso = graph_isomorphism(g, reduced_graph(binary ? st.quiver2d : st.quiver3d)).has_value();
  if (o.cfg.emit == "dot") {
    write(o, graph_dot(g, s.group->name() + " exceptional curves"));
  } else if (o.cfg.emit == "text") {
    write(o, text_graph(g) + (iso ? "matches the reduced McKay quiver\n" : "does NOT match the reduced McKay quiver\n"));
  } else {
    json j = graph_json(g);
    j["group"] = s.group->name();
    j["matches_quiver"] = iso;
    write(o, dump(j));
  }
  return iso ? 0 : 1;
}

IdealGB parse_ideal(const std::vector<std::string>& gens, int conductor) {
  std::vector<Poly> v;
  for (const auto& g : gens) v.push_back(Poly::parse(g, ring_a(), conductor));
  return groebner(v, ring_a());
}

int run_contract(const Options& o) {
  require_fast(o);
  TheoremSetup st = groups(o);
  const int k = st.quotient.table->conductor;
  const int kin = st.binary.table->conductor;
  std::vector<std::pair<std::string, IdealGB>> inputs;
  const int modes = (o.gens.empty() ? 0 : 1) + (o.orbit.empty() ? 0 : 1) + (o.random > 0 ? 1 : 0);
  if (modes != 1) throw UsageError("contract needs exactly one of --gen, --orbit, --random");
  if (!o.gens.empty()) inputs.emplace_back("given", parse_ideal(o.gens, kin));
  if (!o.orbit.empty()) {
    side_with(o, st, true, false);
    std::vector<CycloNum> pt;
    std::stringstream ss(o.orbit);
    std::string item;
    while (std::getline(ss, item, ',')) pt.push_back(CycloNum::parse(item, kin));
    if (pt.size() != 2) throw UsageError("--orbit takes two coordinates x,y");
    inputs.emplace_back("orbit of (" + o.orbit + ")", orbit_ideal(st.binary.coinv->invariants, pt));
  }
  if (o.random > 0) {
    side_with(o, st, true, true);
    std::mt19937_64 rng(o.cfg.seed);
    int tries = 0;
    while (static_cast<int>(inputs.size()) < o.random && tries++ < 20 * o.random)
      if (auto rc = random_cluster(st.binary, rng)) inputs.emplace_back(rc->origin, rc->ideal);
  }
  std::shared_ptr<const CoinvariantAlgebra> qc;
  if (st.quotient.group->order() > 1) qc = side_with(o, st, false, false).coinv;
  json out = json::array();
  bool ok = true;
  for (const auto& [origin, ideal] : inputs) {
    json e = {{"origin", origin}, {"input", ideal_json(ideal, kin)}};
    const auto rep = is_cluster(*st.binary.group, ideal);
    if (!rep.cluster) {
      e["error"] = "input is not a cluster: " + rep.reason;
      ok = false;
    } else {
      try {
        const IdealGB j = contract_cluster(*st.binary.group, *st.quotient.group, ideal, false);
        e["image"] = ideal_json(j, k);
        // V(J) only makes sense for J supported at the origin, i.e. containing n_G
        if (qc && contains(j, qc->gb)) {
          e["v_module"] = json::array();
          const auto mult = generator_module(j, *qc);
          for (std::size_t r = 0; r < mult.size(); ++r)
            for (int c = 0; c < mult[r]; ++c) e["v_module"].push_back(st.quotient.labels[r]);
        }
      } catch (const ContractionFailure& err) {
        e["error"] = err.what();
        ok = false;
      }
    }
    out.push_back(e);
  }
  if (o.cfg.emit == "text") {
    std::ostringstream os;
    for (const auto& e : out)
      os << e["origin"].get<std::string>() << ": "
         << (e.contains("image") ? e["image"]["generators"].dump() : e["error"].get<std::string>()) << "\n";
    write(o, os.str());
  } else {
    write(o, dump({{"group", st.binary.group->name()}, {"quotient", st.quotient.group->name()}, {"results", out}}));
  }
  return ok ? 0 : 1;
}

int run_verify(const Options& o) {
  require_fast(o);
  TheoremSetup st = groups(o);
  side_with(o, st, true, true);
  side_with(o, st, false, true);
  st.samples = o.cfg.sample_params(st.binary.table->conductor);
  ContractionReport r;
  {
    Timer t(o.cfg.verbose, "verification");
    r = verify_contraction_theorem(st);
  }
  if (o.cfg.emit == "text") {
    std::ostringstream os;
    os << r.group << " -> " << r.quotient << ": " << r.contracted << " contracted, " << r.mapped << " mapped, "
       << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.curves)
      os << "  E(" << c.label << ") " << (c.pure ? "pure" : "binary") << " " << c.verdict << (c.pass ? "" : "  FAIL") << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    write(o, os.str());
  } else {
    write(o, dump(report_json(r, st.quotient.table->conductor)));
  }
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary polyhedral groups, McKay quivers, G-clusters and their contraction"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, int (*)(const Options&)> runners = {
      {"group", run_group},   {"chartable", run_chartable}, {"quiver", run_quiver}, {"coinv", run_coinv},
      {"curves", run_curves}, {"contract", run_contract},   {"verify", run_verify}, {"graph", run_graph}};
  const std::map<std::string, std::string> help = {
      {"group", "element list, classes and multiplication table"},
      {"chartable", "character table"},
      {"quiver", "McKay quiver"},
      {"coinv", "coinvariant algebra and its isotypic copies"},
      {"curves", "exceptional curve families"},
      {"contract", "contract cluster ideals from C[x,y] to C[a,b,c]"},
      {"verify", "check the contraction of exceptional curves"},
      {"graph", "intersection graph of the exceptional curves"}};

  for (const auto& [name, fn] : runners) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--kind,--group", o.kind, "cyclic, dihedral, tetrahedral, octahedral, icosahedral");
    sub->add_option("-n", o.cfg.n, "index of the cyclic or dihedral family")->check(CLI::PositiveNumber);
    sub->add_flag("--binary", o.cfg.binary, "the binary group in SU(2) rather than its quotient in SO(3)");
    sub->add_option("--dim", o.cfg.dim, "2 (binary group on C[x,y]) or 3 (quotient on C[a,b,c])")
        ->check(CLI::IsMember({2, 3}));
    sub->add_option("--conductor", o.cfg.conductor, "override the field Q(zeta_N) for the matrices");
    sub->add_option("--degree-bound-2d", o.cfg.degree_bound_2d, "invariant search bound on C[x,y]");
    sub->add_option("--degree-bound-3d", o.cfg.degree_bound_3d, "invariant search bound on C[a,b,c]");
    sub->add_option("--samples", o.cfg.samples, "curve parameters p:q, both endpoints included");
    sub->add_option("--emit", o.cfg.emit, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--seed", o.cfg.seed, "seed for intertwiners and random draws");
    sub->add_option("--out,-o", o.out, "write here instead of stdout");
    sub->add_option("--config", o.config_file, "read a RunConfig JSON file (command-line flags are ignored)");
    sub->add_flag("--dump-config", o.dump_config, "print the effective RunConfig and exit");
    sub->add_flag("--slow", o.slow, "allow octahedral and icosahedral pipelines");
    sub->add_flag("-v,--verbose", o.cfg.verbose, "timings on stderr");
    if (name == "quiver") sub->add_flag("--reduced", o.reduced, "drop the trivial vertex, loops and multiplicities");
    if (name == "group") {
      sub->add_flag("--summary", o.summary, "order and classes only");
      sub->add_flag("--bipolyhedral", o.bipolyhedral, "the image of G x G in SO(4)");
    }
    if (name == "contract") {
      sub->add_option("--gen", o.gens, "generator of the input ideal in x, y (repeatable)");
      sub->add_option("--orbit", o.orbit, "free orbit through the point x,y");
      sub->add_option("--random", o.random, "contract this many random clusters");
    }
    sub->callback([] {});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (o.config_file.empty()) {
      o.cfg.kind = parse_kind(o.kind);
    } else {
      std::ifstream f(o.config_file);
      if (!f) throw UsageError("cannot read " + o.config_file);
      o.cfg = run_config_from_json(json::parse(f));
    }
    if (o.cfg.dim != 0 && o.cfg.dim != 2 && o.cfg.dim != 3) throw UsageError("--dim must be 2 or 3");
    if (o.dump_config) {
      write(o, dump(to_json(o.cfg)));
      return 0;
    }
    return runners.at(name)(o);
  } catch (const UsageError& e) {
    std::cerr << "mckay " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mckay " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "mckay " << name << ": bad config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mckay " << name << ": " << e.what() << "\n";
    return 1;
  }
}
