#include <algorithm>
#include <map>

#include "doctest.h"
#include "mckay/contraction/contraction.hpp"
#include "mckay/polyideal/invariants.hpp"
#include "support/reference_graphs.hpp"
#include "support/oracles.hpp"

using namespace mckay;

namespace {

struct Side {
  GroupPtr g;
  std::shared_ptr<const CharTable> t;
  std::shared_ptr<const CoinvariantAlgebra> c;
};

Side make_side(GroupSpec spec, bool binary) {
  Side s;
  s.g = std::make_shared<const MatrixGroup>(build_binary_polyhedral(spec));
  if (!binary) s.g = build_polyhedral_quotient(s.g).first;
  s.t = std::make_shared<const CharTable>(character_table(s.g));
  s.c = std::make_shared<const CoinvariantAlgebra>(coinvariant_algebra(s.g, s.t, default_degree_bound(spec, binary)));
  return s;
}

ProjParam pp(int p, int q) { return {CycloNum(p), CycloNum(q)}; }

std::vector<int> support(const std::vector<int>& mult) {
  std::vector<int> s;
  for (std::size_t r = 0; r < mult.size(); ++r)
    for (int k = 0; k < mult[r]; ++k) s.push_back(static_cast<int>(r));
  return s;
}

}  // namespace

TEST_CASE("coinvariant algebra dimensions and multiplicities") {
  const std::vector<GroupSpec> specs = {{GroupKind::kCyclic, 1}, {GroupKind::kCyclic, 2}, {GroupKind::kCyclic, 3},
                                        {GroupKind::kCyclic, 4}, {GroupKind::kDihedral, 2}, {GroupKind::kDihedral, 3},
                                        {GroupKind::kTetrahedral, 1}};
  for (const auto& spec : specs)
    for (bool binary : {true, false}) {
      if (!binary && spec.kind == GroupKind::kCyclic && spec.n == 1) continue;
      const Side s = make_side(spec, binary);
      INFO(spec.label(binary));
      CHECK(s.c->dimension() == 2 * s.g->order() - 1);
      CHECK(s.c->invariants.size() == static_cast<std::size_t>(s.g->dim() + 1));
      for (int r = 0; r < s.t->size(); ++r) {
        const auto& list = s.c->copies_of[static_cast<std::size_t>(r)];
        if (r == s.t->trivial_index) {
          CHECK(list.empty());
          continue;
        }
        CHECK(list.size() == static_cast<std::size_t>(2 * s.t->dims[static_cast<std::size_t>(r)]));
        for (int idx : list) {
          const auto& cp = s.c->copies[static_cast<std::size_t>(idx)];
          // the copy affords rho: its character is chi_rho
          const ClassFunction chi = character_of(*s.g, cp.module.action);
          CHECK(chi == s.t->chars[static_cast<std::size_t>(r)]);
          for (const auto& f : cp.basis) {
            CHECK(f.is_homogeneous());
            CHECK(f.degree() == cp.degree);
            CHECK(normal_form(f, s.c->gb) == f);
          }
        }
      }
      // graded pieces add up, constants once
      int total = 0;
      for (int d : s.c->degree_dims) total += d;
      CHECK(total == s.c->dimension());
      CHECK(s.c->degree_dims[0] == 1);
    }
}

TEST_CASE("coinvariants of C~2 and equivariant maps between copies") {
  const Side s = make_side({GroupKind::kCyclic, 2}, true);
  std::vector<std::string> mons;
  for (const auto& m : s.c->std_monomials) mons.push_back(monomial_to_string(*ring_a(), m));
  CHECK(mons == std::vector<std::string>{"1", "y", "x", "y^2", "x^2", "y^3", "x^3"});

  const Side c4 = make_side({GroupKind::kCyclic, 4}, true);
  for (int r = 1; r < c4.t->size(); ++r) {
    const auto& a = c4.c->copy(r, 0);
    const auto& b = c4.c->copy(r, 1);
    const auto phi = equivariant_isomorphism(a.module, b.module, *c4.g);
    REQUIRE(phi);
    CHECK(phi->rows() == 1);
    CHECK((*phi)(0, 0) == CycloNum(1));
    // copies of different characters are not isomorphic
    const int other = r == 1 ? 2 : 1;
    CHECK_FALSE(equivariant_isomorphism(a.module, c4.c->copy(other, 0).module, *c4.g));
  }
  // T~: the intertwiner between two copies of a 3-dimensional character commutes with the action
  const Side t = make_side({GroupKind::kTetrahedral, 1}, true);
  for (int r = 0; r < t.t->size(); ++r) {
    if (t.t->dims[static_cast<std::size_t>(r)] != 3) continue;
    const auto& a = t.c->copy(r, 0);
    const auto& b = t.c->copy(r, 3);
    const auto phi = equivariant_isomorphism(a.module, b.module, *t.g);
    REQUIRE(phi);
    for (int x = 0; x < t.g->order(); ++x)
      CHECK(*phi * a.module.action[static_cast<std::size_t>(x)] == b.module.action[static_cast<std::size_t>(x)] * *phi);
  }
}

TEST_CASE("generator modules") {
  const Side s = make_side({GroupKind::kCyclic, 4}, true);
  // V(m_A) is spanned by x and y
  const auto vm = support(generator_module(maximal_ideal(ring_a()), *s.c));
  CHECK(vm.size() == 2);
  const auto chi_x = quotient_character(*s.g, groebner({Poly::variable(ring_a(), 1), Poly::parse("x^2", ring_a(), 1)}, ring_a()));
  for (int j = 1; j <= 7; ++j) {
    const auto generic = support(generator_module(cyclic_cluster_2d(4, j, pp(2, 3)), *s.c));
    REQUIRE(generic.size() == 1);
    // rho_j is the character of x^j
    const auto& chi = s.t->chars[static_cast<std::size_t>(generic[0])];
    const CycloNum xi_j = s.g->matrix(1)(0, 0).inv();
    CycloNum want(1);
    for (int k = 0; k < j; ++k) want *= xi_j;
    CHECK(chi[static_cast<std::size_t>(s.g->class_of(1))] == want);
    // endpoint: two characters, adjacent in the quiver
    const auto ends = support(generator_module(cyclic_cluster_2d(4, j, pp(1, 0)), *s.c));
    const auto ends2 = support(generator_module(cyclic_cluster_2d(4, j, pp(0, 1)), *s.c));
    const auto q = mckay_quiver(*s.t, nullptr);
    for (const auto& e : {ends, ends2}) {
      if (e.size() == 2) {
        CHECK(q.adjacent(e[0], e[1]));
      } else {
        // next to the trivial vertex: the only neighbour left is rho_j
        CHECK(e == generic);
      }
    }
  }
  (void)chi_x;
  // dimension of V(I) by counting: dim S/(mI + n) - dim S/I
  const IdealGB i = cyclic_cluster_2d(4, 3, pp(1, 1));
  std::vector<Poly> gens = s.c->gb.basis;
  for (const auto& f : i.basis)
    for (int v = 0; v < 2; ++v) gens.push_back(f * Poly::variable(ring_a(), v));
  const auto k = groebner(gens, ring_a());
  CHECK(quotient_basis(k).size() - quotient_basis(i).size() == support(generator_module(i, *s.c)).size());
  CHECK_THROWS_AS(generator_module(groebner({Poly::variable(ring_a(), 0)}, ring_a()), *s.c), std::invalid_argument);
}

TEST_CASE("cluster_from_choice reproduces the cyclic ideals") {
  const Side s = make_side({GroupKind::kCyclic, 4}, true);
  // chi of x^2 has copies x^2 (degree 2) and y^6
  int rho = -1;
  for (int r = 0; r < s.t->size(); ++r)
    if (!s.c->copies_of[static_cast<std::size_t>(r)].empty() && s.c->copy(r, 0).basis[0].to_string() == "x^2") rho = r;
  REQUIRE(rho >= 0);
  CHECK(s.c->copy(rho, 1).basis[0].to_string() == "y^6");
  for (auto p : {pp(1, 1), pp(2, 3), pp(1, 0), pp(0, 1), pp(-1, 5)}) {
    const auto id = cluster_from_choice(*s.c, rho, 0, 1, p);
    REQUIRE(id);
    CHECK(*id == cyclic_cluster_2d(4, 2, p));
  }
  CHECK_THROWS_AS(cluster_from_choice(*s.c, rho, 0, 0, pp(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(cluster_from_choice(*s.c, rho, 0, 1, pp(0, 0)), std::invalid_argument);
  // the raw ideal at an endpoint is too small; the family limit is the cluster
  const auto raw = ideal_from_choice(*s.c, rho, 0, 1, pp(1, 0));
  CHECK_FALSE(is_cluster(*s.g, raw).cluster);
  CHECK(quotient_basis(raw).size() == 9);
  // scaling the parameter changes nothing
  CHECK(*cluster_from_choice(*s.c, rho, 0, 1, pp(2, 3)) == *cluster_from_choice(*s.c, rho, 0, 1, pp(4, 6)));
}

TEST_CASE("cyclic golden families") {
  for (int n = 2; n <= 4; ++n) {
    for (bool binary : {true, false}) {
      const Side s = make_side({GroupKind::kCyclic, n}, binary);
      const auto search = exceptional_curves(*s.c, default_samples());
      CHECK(search.anomalies.empty());
      const int expect = binary ? 2 * n - 1 : n - 1;
      CHECK(search.families.size() == static_cast<std::size_t>(expect));
      std::vector<int> used;
      for (const auto& fam : search.families) {
        // find the index whose closed form matches every sample, in one of the two orientations
        int found = -1;
        for (int j = 1; j <= expect && found < 0; ++j)
          for (bool swap : {false, true}) {
            bool all = true;
            for (const auto& smp : fam.samples) {
              const ProjParam p = swap ? ProjParam{smp.param.q, smp.param.p} : smp.param;
              const IdealGB want = binary ? cyclic_cluster_2d(n, j, p) : cyclic_cluster_3d(n, j, p);
              if (!(smp.ideal == want)) all = false;
            }
            if (all) found = j;
          }
        CHECK_MESSAGE(found > 0, "n=" << n << " no closed form for family of character " << fam.rho);
        used.push_back(found);
        for (const auto& smp : fam.samples) {
          CHECK(is_cluster(*s.g, smp.ideal).cluster);
          if (!smp.param.is_endpoint()) CHECK(smp.v_module == std::vector<int>{fam.rho});
        }
      }
      std::sort(used.begin(), used.end());
      for (int j = 1; j <= expect; ++j) CHECK(std::count(used.begin(), used.end(), j) == 1);
    }
  }
  CHECK(cyclic_cluster_2d(2, 1, pp(1, 1)).to_string() == "[x*y, x^2, y^3 - x]");
  CHECK(cyclic_cluster_3d(4, 2, pp(1, 0)).to_string() == "[c, a*b, a^2, b^3]");
  CHECK_THROWS_AS(cyclic_cluster_2d(2, 4, pp(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_cluster_3d(2, 0, pp(1, 1)), std::invalid_argument);
}

TEST_CASE("intersection graphs are the reduced McKay quivers") {
  const std::vector<GroupSpec> specs = {{GroupKind::kCyclic, 2}, {GroupKind::kCyclic, 3}, {GroupKind::kCyclic, 4},
                                        {GroupKind::kDihedral, 2}, {GroupKind::kDihedral, 3},
                                        {GroupKind::kTetrahedral, 1}};
  for (const auto& spec : specs) {
    const TheoremSetup st = prepare_theorem(spec, default_samples());
    INFO(spec.label(true));
    CHECK(st.binary.curves.anomalies.empty());
    CHECK(st.quotient.curves.anomalies.empty());
    CHECK(st.binary.curves.families.size() == static_cast<std::size_t>(st.binary.table->size() - 1));
    CHECK(st.quotient.curves.families.size() == static_cast<std::size_t>(st.quotient.table->size() - 1));
    const auto g2 = intersection_graph(st.binary.curves.families, *st.binary.table, st.binary.labels, st.binary.pure);
    CHECK(graph_isomorphism(g2, reduced_graph(st.quiver2d)));
    CHECK(graph_isomorphism(g2, refgraph::binary_graph(spec)));
    for (auto [a, b] : g2.edges) CHECK(g2.vertices[static_cast<std::size_t>(a)].pure != g2.vertices[static_cast<std::size_t>(b)].pure);
    const auto g3 = intersection_graph(st.quotient.curves.families, *st.quotient.table, st.quotient.labels, st.quotient.pure);
    CHECK(graph_isomorphism(g3, reduced_graph(st.quiver3d)));
    CHECK(graph_isomorphism(g3, refgraph::quotient_graph(spec)));
    // no V(I) holds a character twice; generic samples have exactly their own
    for (const auto* side : {&st.binary, &st.quotient})
      for (const auto& fam : side->curves.families)
        for (const auto& smp : fam.samples) {
          auto v = smp.v_module;
          CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
          CHECK(std::find(v.begin(), v.end(), fam.rho) != v.end());
        }
  }
}

TEST_CASE("free orbits") {
  const Side s = make_side({GroupKind::kCyclic, 2}, true);
  const std::vector<CycloNum> p{CycloNum(1), CycloNum(1)};
  const IdealGB orb = orbit_ideal(s.c->invariants, p);
  CHECK(orb == oracle::vanishing_ideal(ring_a(), oracle::orbit(*s.g, p)));
  CHECK(is_cluster(*s.g, orb).cluster);
  const Side t = make_side({GroupKind::kTetrahedral, 1}, true);
  const std::vector<CycloNum> p2{CycloNum(2), CycloNum(-1)};
  const IdealGB orb2 = orbit_ideal(t.c->invariants, p2);
  CHECK(orb2 == oracle::vanishing_ideal(ring_a(), oracle::orbit(*t.g, p2)));
  CHECK(is_cluster(*t.g, orb2).cluster);
  // C_2 on (a, b, c) fixes the c axis: a non-free orbit
  const Side q = make_side({GroupKind::kCyclic, 2}, false);
  const std::vector<CycloNum> axis{CycloNum(0), CycloNum(0), CycloNum(1)};
  CHECK(oracle::orbit(*q.g, axis).size() == 1);
  CHECK_FALSE(is_cluster(*q.g, oracle::vanishing_ideal(ring_b(), oracle::orbit(*q.g, axis))).cluster);
  const std::vector<CycloNum> gen{CycloNum(1), CycloNum(2), CycloNum(3)};
  CHECK(is_cluster(*q.g, orbit_ideal(q.c->invariants, gen)).cluster);
}

TEST_CASE("sample parameters") {
  const auto p = ProjParam::parse("(1 + z):2", 4);
  CHECK(p.p == CycloNum(1) + CycloNum::root_of_unity(1, 4));
  CHECK(p.q == CycloNum(2));
  CHECK(ProjParam::parse(p.to_string(), 4).p == p.p);
  CHECK_THROWS_AS(ProjParam::parse("0:0", 1), std::invalid_argument);
  CHECK_THROWS_AS(ProjParam::parse("1,2", 1), std::invalid_argument);
  const Side s = make_side({GroupKind::kCyclic, 2}, true);
  CHECK_THROWS_AS(exceptional_curves(*s.c, {pp(1, 0), pp(1, 1)}), std::invalid_argument);
}
