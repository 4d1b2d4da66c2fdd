#include <algorithm>

#include "doctest.h"
#include "mckay/contraction/contraction.hpp"
#include "support/oracles.hpp"

using namespace mckay;

namespace {

ProjParam pp(int p, int q) { return {CycloNum(p), CycloNum(q)}; }

IdealGB gb_b(std::initializer_list<const char*> gens) {
  std::vector<Poly> v;
  for (const char* s : gens) v.push_back(Poly::parse(s, ring_b(), 1));
  return groebner(v, ring_b());
}

}  // namespace

TEST_CASE("contraction of the cyclic families") {
  for (int n = 2; n <= 4; ++n) {
    const TheoremSetup st = prepare_groups({GroupKind::kCyclic, n});
    const auto& b = *st.binary.group;
    const auto& q = *st.quotient.group;
    for (int j = 1; j < 2 * n; ++j)
      for (auto p : {pp(1, 0), pp(0, 1), pp(1, 1), pp(2, 3), pp(-3, 7)}) {
        const IdealGB image = contract_cluster(b, q, cyclic_cluster_2d(n, j, p));
        if (j % 2 == 0) {
          CHECK(image == cyclic_cluster_3d(n, j / 2, p));
        } else {
          // the whole curve goes to the point where J_k and J_{k+1} meet
          const int k = j / 2;
          const IdealGB pt = k == 0 ? cyclic_cluster_3d(n, 1, pp(1, 0)) : cyclic_cluster_3d(n, k, pp(0, 1));
          CHECK(image == pt);
          if (k + 1 <= n - 1 && k >= 1) CHECK(pt == cyclic_cluster_3d(n, k + 1, pp(1, 0)));
        }
      }
  }
  const TheoremSetup c2 = prepare_groups({GroupKind::kCyclic, 2});
  CHECK(contract_cluster(*c2.binary.group, *c2.quotient.group, cyclic_cluster_2d(2, 1, pp(5, 1))) ==
        gb_b({"a", "b^2", "c"}));
  // scaling (p : q) does not move the image
  CHECK(contract_cluster(*c2.binary.group, *c2.quotient.group, cyclic_cluster_2d(2, 2, pp(2, 3))) ==
        contract_cluster(*c2.binary.group, *c2.quotient.group, cyclic_cluster_2d(2, 2, pp(-4, -6))));
}

TEST_CASE("contraction of a free orbit is the orbit of its image") {
  const TheoremSetup st = prepare_groups({GroupKind::kCyclic, 2});
  const auto& b = *st.binary.group;
  const auto& q = *st.quotient.group;
  for (auto [x, y] : {std::pair{1, 1}, std::pair{2, -1}, std::pair{3, 5}}) {
    const std::vector<CycloNum> p{CycloNum(x), CycloNum(y)};
    const IdealGB i = oracle::vanishing_ideal(ring_a(), oracle::orbit(b, p));
    const std::vector<CycloNum> sp{CycloNum(x * x), CycloNum(y * y), CycloNum(x * y)};
    const IdealGB want = oracle::vanishing_ideal(ring_b(), oracle::orbit(q, sp));
    CHECK(contract_cluster(b, q, i) == want);
    CHECK(is_cluster(q, want).cluster);
  }
  // a non-cluster input is refused
  CHECK_THROWS_AS(contract_cluster(b, q, maximal_ideal(ring_a())), std::invalid_argument);
}

TEST_CASE("contraction theorem on small groups") {
  struct Want {
    GroupSpec spec;
    int contracted, mapped;
  };
  const std::vector<Want> cases = {{{GroupKind::kCyclic, 2}, 2, 1},      {{GroupKind::kCyclic, 3}, 3, 2},
                                   {{GroupKind::kCyclic, 4}, 4, 3},      {{GroupKind::kDihedral, 2}, 1, 3},
                                   {{GroupKind::kDihedral, 3}, 3, 2},    {{GroupKind::kTetrahedral, 1}, 3, 3}};
  for (const auto& w : cases) {
    const TheoremSetup st = prepare_theorem(w.spec, default_samples());
    const ContractionReport r = verify_contraction_theorem(st);
    INFO(r.group);
    for (const auto& n : r.notes) MESSAGE(n);
    CHECK(r.pass);
    CHECK(r.contracted == w.contracted);
    CHECK(r.mapped == w.mapped);
    for (const auto& c : r.curves) {
      CHECK(c.pass);
      CHECK(c.verdict == (c.pure ? "mapped" : "contracted"));
      CHECK(c.images.size() == c.params.size());
      if (!c.pure) {
        for (const auto& im : c.images) CHECK(im == c.images.front());
        CHECK(c.image_v.front() == c.expected_v);
      }
    }
    if (w.spec.kind == GroupKind::kDihedral && w.spec.n == 2) {
      // the single binary curve of D~2 goes to the point where all three curves meet
      for (const auto& c : r.curves)
        if (!c.pure) CHECK(c.image_v.front().size() == 3);
    }
  }
}

TEST_CASE("curve images need enough samples") {
  const TheoremSetup st = prepare_theorem({GroupKind::kCyclic, 2}, default_samples());
  CurveFamily fam = st.binary.curves.families.front();
  fam.samples.resize(1);
  CHECK_THROWS_AS(image_of_curve(fam, *st.binary.group, *st.quotient.group), std::invalid_argument);
  const CurveImage full = image_of_curve(st.binary.curves.families.front(), *st.binary.group, *st.quotient.group);
  CHECK(full.images.size() == st.binary.curves.families.front().samples.size());
}
