#include "mckay/clusters/clusters.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mckay/polyideal/action.hpp"

namespace mckay {

std::string ProjParam::to_string() const {
  auto one = [](const CycloNum& c) {
    const std::string s = c.to_string();
    return c.is_rational() ? s : "(" + s + ")";
  };
  return one(p) + ":" + one(q);
}

ProjParam ProjParam::parse(const std::string& text, int conductor) {
  // split at the ':' outside parentheses
  int depth = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '(') ++depth;
    if (text[k] == ')') --depth;
    if (text[k] == ':' && depth == 0) {
      auto strip = [](std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
        return s;
      };
      ProjParam r{CycloNum::parse(strip(text.substr(0, k)), conductor),
                  CycloNum::parse(strip(text.substr(k + 1)), conductor)};
      if (r.p.is_zero() && r.q.is_zero()) throw std::invalid_argument("parameter (0:0)");
      return r;
    }
  }
  throw std::invalid_argument("parameter must look like p:q, got '" + text + "'");
}

std::vector<ProjParam> default_samples() {
  return {{CycloNum(1), CycloNum(0)}, {CycloNum(0), CycloNum(1)}, {CycloNum(1), CycloNum(1)},
          {CycloNum(1), CycloNum(2)}, {CycloNum(2), CycloNum(3)}};
}

namespace {

std::vector<Poly> gens_of(const CoinvariantAlgebra& coinv) { return coinv.gb.basis; }

IdealGB times_maximal(const IdealGB& i) {
  std::vector<Poly> gens;
  for (const auto& f : i.basis)
    for (int v = 0; v < i.ring->nvars(); ++v) gens.push_back(f * Poly::variable(i.ring, v));
  return groebner(gens, i.ring);
}

struct Choice {
  std::vector<Poly> v, w;  // basis of copy i and its image in copy j
};

Choice make_choice(const CoinvariantAlgebra& coinv, int rho, int i, int j) {
  if (i == j) throw std::invalid_argument("copy pair needs two distinct copies");
  const auto& list = coinv.copies_of.at(static_cast<std::size_t>(rho));
  if (i < 0 || j < 0 || i >= static_cast<int>(list.size()) || j >= static_cast<int>(list.size()))
    throw std::invalid_argument("copy index out of range");
  const auto& ci = coinv.copy(rho, i);
  const auto& cj = coinv.copy(rho, j);
  const auto phi = equivariant_isomorphism(ci.module, cj.module, *coinv.group);
  if (!phi) throw std::invalid_argument("copies are not isomorphic");
  Choice c;
  c.v = ci.basis;
  for (std::size_t k = 0; k < ci.basis.size(); ++k) {
    Poly img(coinv.gb.ring);
    for (std::size_t l = 0; l < cj.basis.size(); ++l)
      if (!(*phi)(static_cast<int>(l), static_cast<int>(k)).is_zero())
        img += cj.basis[l] * (*phi)(static_cast<int>(l), static_cast<int>(k));
    c.w.push_back(img);
  }
  return c;
}

const RingPtr& family_ring(const RingPtr& base) {
  static const RingPtr two = make_ring({"u", "x", "y", "t"}, MonomialOrder::kBlockDegRevLex, 1);
  static const RingPtr three = make_ring({"u", "a", "b", "c", "t"}, MonomialOrder::kBlockDegRevLex, 1);
  return base->nvars() == 2 ? two : three;
}

// Fibre at t = 0 of the closure of the family W(p0 + r t : q0 + s t) S + n_G.
IdealGB flat_limit(const CoinvariantAlgebra& coinv, const Choice& ch, const ProjParam& at) {
  const RingPtr& base = coinv.gb.ring;
  const RingPtr& fr = family_ring(base);
  const int nv = base->nvars();
  std::vector<int> shift(static_cast<std::size_t>(nv));
  for (int k = 0; k < nv; ++k) shift[static_cast<std::size_t>(k)] = k + 1;
  const Poly t = Poly::variable(fr, nv + 1);
  const Poly one = Poly::constant(fr, CycloNum(1));
  // move along a direction not proportional to (p0, q0)
  const Poly p = one * at.p + (at.p.is_zero() ? t : Poly(fr));
  const Poly q = one * at.q + (at.p.is_zero() ? Poly(fr) : t);
  std::vector<Poly> gens;
  for (std::size_t k = 0; k < ch.v.size(); ++k) gens.push_back(p * ch.v[k].remap(fr, shift) - q * ch.w[k].remap(fr, shift));
  for (const auto& f : gens_of(coinv)) gens.push_back(f.remap(fr, shift));
  gens.push_back(one - t * Poly::variable(fr, 0));
  const IdealGB sat = groebner(gens, fr);
  std::vector<Poly> fibre;
  for (const auto& f : sat.basis) {
    if (f.lm().e[0] != 0) continue;
    Poly g(base);
    for (const auto& term : f.terms()) {
      if (term.m.e[static_cast<std::size_t>(nv + 1)] != 0) continue;
      Monomial m;
      for (int k = 0; k < nv; ++k) m.e[static_cast<std::size_t>(k)] = term.m.e[static_cast<std::size_t>(k + 1)];
      g += Poly::term(base, m, term.c);
    }
    if (!g.is_zero()) fibre.push_back(g);
  }
  return groebner(fibre, base);
}

IdealGB direct_ideal(const CoinvariantAlgebra& coinv, const Choice& ch, const ProjParam& param) {
  std::vector<Poly> gens = gens_of(coinv);
  for (std::size_t k = 0; k < ch.v.size(); ++k) gens.push_back(ch.v[k] * param.p - ch.w[k] * param.q);
  return groebner(gens, coinv.gb.ring);
}

void check_param(const ProjParam& p) {
  if (p.p.is_zero() && p.q.is_zero()) throw std::invalid_argument("parameter (0:0)");
}

}  // namespace

std::vector<int> generator_module(const IdealGB& i, const CoinvariantAlgebra& coinv) {
  for (const auto& f : coinv.gb.basis)
    if (!contains(i, f)) throw std::invalid_argument("ideal does not contain the invariant " + f.to_string());
  const IdealGB m = maximal_ideal(i.ring);
  for (const auto& f : i.basis)
    if (!contains(m, f)) throw std::invalid_argument("ideal not contained in the maximal ideal: " + f.to_string());
  const IdealGB k = ideal_sum(times_maximal(i), coinv.gb);
  const MatrixGroup& g = *coinv.group;
  ClassFunction chi = quotient_character(g, k);
  const ClassFunction chi_i = quotient_character(g, i);
  for (std::size_t c = 0; c < chi.size(); ++c) chi[c] -= chi_i[c];
  return decompose(chi, *coinv.table);
}

IdealGB ideal_from_choice(const CoinvariantAlgebra& coinv, int rho, int i, int j, const ProjParam& param) {
  check_param(param);
  return direct_ideal(coinv, make_choice(coinv, rho, i, j), param);
}

std::optional<IdealGB> cluster_from_choice(const CoinvariantAlgebra& coinv, int rho, int i, int j,
                                           const ProjParam& param) {
  check_param(param);
  const Choice ch = make_choice(coinv, rho, i, j);
  IdealGB direct = direct_ideal(coinv, ch, param);
  if (is_cluster(*coinv.group, direct).cluster) return direct;
  IdealGB lim = flat_limit(coinv, ch, param);
  if (is_cluster(*coinv.group, lim).cluster) return lim;
  return std::nullopt;
}

namespace {

constexpr int kMaxFailures = 3;

std::vector<int> support(const std::vector<int>& mult) {
  std::vector<int> s;
  for (std::size_t r = 0; r < mult.size(); ++r)
    for (int k = 0; k < mult[r]; ++k) s.push_back(static_cast<int>(r));
  return s;
}

}  // namespace

CurveSearch exceptional_curves(const CoinvariantAlgebra& coinv, const std::vector<ProjParam>& samples) {
  CurveSearch out;
  std::vector<ProjParam> generic;
  bool has0 = false, has1 = false;
  for (const auto& s : samples) {
    check_param(s);
    if (!s.is_endpoint()) generic.push_back(s);
    if (s.q.is_zero()) has0 = true;
    if (s.p.is_zero()) has1 = true;
  }
  if (!has0 || !has1 || generic.size() < 2)
    throw std::invalid_argument("samples need (1:0), (0:1) and at least two generic parameters");
  const CharTable& t = *coinv.table;
  const MatrixGroup& g = *coinv.group;
  // generic samples first, then fallbacks for when one of them is special
  std::vector<ProjParam> candidates = generic;
  for (auto [p, q] : {std::pair{1, 3}, {3, 1}, {2, 5}, {1, -2}, {3, -5}, {5, 7}})
    candidates.push_back({CycloNum(p), CycloNum(q)});
  for (int rho = 0; rho < t.size(); ++rho) {
    if (rho == t.trivial_index) continue;
    const int ncopies = static_cast<int>(coinv.copies_of[static_cast<std::size_t>(rho)].size());
    std::vector<std::pair<int, int>> valid;
    std::vector<std::vector<IdealGB>> valid_ideals;
    for (int i = 0; i < ncopies; ++i)
      for (int j = i + 1; j < ncopies; ++j) {
        const Choice ch = make_choice(coinv, rho, i, j);
        std::vector<IdealGB> ideals;
        int failures = 0;
        for (const auto& s : candidates) {
          if (ideals.size() == generic.size() || failures > kMaxFailures) break;
          IdealGB id = direct_ideal(coinv, ch, s);
          const bool ok = is_cluster(g, id).cluster && support(generator_module(id, coinv)) == std::vector<int>{rho} &&
                          std::find(ideals.begin(), ideals.end(), id) == ideals.end();
          if (ok)
            ideals.push_back(std::move(id));
          else
            ++failures;
        }
        if (ideals.size() < 2) continue;
        valid.emplace_back(i, j);
        valid_ideals.push_back(std::move(ideals));
      }
    if (valid.empty()) {
      out.anomalies.push_back("no copy pair gives a family for character " + std::to_string(rho));
      continue;
    }
    for (std::size_t k = 1; k < valid.size(); ++k) {
      // a second pair is only an anomaly when it traces a different family
      bool same = true;
      for (const auto& id : valid_ideals[k])
        if (std::find(valid_ideals[0].begin(), valid_ideals[0].end(), id) == valid_ideals[0].end()) same = false;
      if (!same)
        out.anomalies.push_back("character " + std::to_string(rho) + ": copy pairs (" +
                                std::to_string(valid[0].first) + "," + std::to_string(valid[0].second) + ") and (" +
                                std::to_string(valid[k].first) + "," + std::to_string(valid[k].second) +
                                ") both give families");
    }
    CurveFamily fam;
    fam.rho = rho;
    fam.copy_pair = valid[0];
    for (const auto& s : samples) {
      auto id = cluster_from_choice(coinv, rho, valid[0].first, valid[0].second, s);
      if (!id) {
        out.anomalies.push_back("character " + std::to_string(rho) + ": no cluster at " + s.to_string());
        continue;
      }
      CurvePoint pt;
      pt.rho = rho;
      pt.copy_pair = valid[0];
      pt.param = s;
      pt.ideal = std::move(*id);
      pt.v_module = support(generator_module(pt.ideal, coinv));
      if (pt.v_module.size() > 1) fam.endpoints.push_back(static_cast<int>(fam.samples.size()));
      if (std::find(pt.v_module.begin(), pt.v_module.end(), rho) == pt.v_module.end())
        out.anomalies.push_back("character " + std::to_string(rho) + ": V(I) misses it at " + s.to_string());
      fam.samples.push_back(std::move(pt));
    }
    out.families.push_back(std::move(fam));
  }
  return out;
}

LabelledGraph intersection_graph(const std::vector<CurveFamily>& families, const CharTable& t,
                                 const std::vector<std::string>& labels, const std::vector<bool>& pure) {
  LabelledGraph gr;
  std::map<int, int> vertex;
  for (const auto& f : families) {
    vertex[f.rho] = static_cast<int>(gr.vertices.size());
    gr.vertices.push_back({labels[static_cast<std::size_t>(f.rho)], t.dims[static_cast<std::size_t>(f.rho)],
                           pure.empty() ? true : static_cast<bool>(pure[static_cast<std::size_t>(f.rho)])});
  }
  std::set<std::pair<int, int>> edges;
  auto add = [&](int r1, int r2) {
    if (r1 == r2 || !vertex.count(r1) || !vertex.count(r2)) return;
    int a = vertex[r1], b = vertex[r2];
    if (a > b) std::swap(a, b);
    edges.insert({a, b});
  };
  for (std::size_t a = 0; a < families.size(); ++a) {
    for (const auto& s : families[a].samples)
      for (int r : s.v_module) add(families[a].rho, r);
    for (std::size_t b = a + 1; b < families.size(); ++b)
      for (const auto& s : families[a].samples)
        for (const auto& s2 : families[b].samples)
          if (s.ideal == s2.ideal) add(families[a].rho, families[b].rho);
  }
  gr.edges.assign(edges.begin(), edges.end());
  return gr;
}

IdealGB cyclic_cluster_2d(int n, int j, const ProjParam& param) {
  if (n < 1 || j < 1 || j > 2 * n - 1) throw std::invalid_argument("need 1 <= j <= 2n - 1");
  check_param(param);
  const RingPtr& r = ring_a();
  auto mono = [&](int i, int k) {
    Monomial m;
    m.e[0] = static_cast<std::uint16_t>(i);
    m.e[1] = static_cast<std::uint16_t>(k);
    return Poly::term(r, m, CycloNum(1));
  };
  return groebner({mono(j, 0) * param.p - mono(0, 2 * n - j) * param.q, mono(1, 1), mono(j + 1, 0),
                   mono(0, 2 * n - j + 1)},
                  r);
}

IdealGB cyclic_cluster_3d(int n, int k, const ProjParam& param) {
  if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("need 1 <= k <= n - 1");
  check_param(param);
  const RingPtr& r = ring_b();
  auto mono = [&](int a, int b, int c) {
    Monomial m;
    m.e = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c), 0, 0};
    return Poly::term(r, m, CycloNum(1));
  };
  return groebner({mono(k, 0, 0) * param.p - mono(0, n - k, 0) * param.q, mono(0, 0, 1), mono(k + 1, 0, 0),
                   mono(0, n - k + 1, 0), mono(1, 1, 0)},
                  r);
}

IdealGB orbit_ideal(const std::vector<Poly>& invariants, const std::vector<CycloNum>& point) {
  if (invariants.empty()) throw std::invalid_argument("no invariants");
  const RingPtr& r = invariants.front().ring();
  std::vector<Poly> gens;
  for (const auto& f : invariants) {
    CycloNum v;
    for (const auto& t : f.terms()) {
      CycloNum m = t.c;
      for (int k = 0; k < r->nvars(); ++k)
        for (int e = 0; e < t.m.e[static_cast<std::size_t>(k)]; ++e) m *= point[static_cast<std::size_t>(k)];
      v += m;
    }
    gens.push_back(f - Poly::constant(r, v));
  }
  return groebner(gens, r);
}

}  // namespace mckay
