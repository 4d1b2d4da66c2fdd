#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "mckay/polyideal/cluster_test.hpp"
#include "mckay/polyideal/invariants.hpp"

using namespace mckay;

namespace {

Poly pa(const std::string& s, int cond = 1) { return Poly::parse(s, ring_a(), cond); }
Poly pb(const std::string& s, int cond = 1) { return Poly::parse(s, ring_b(), cond); }

IdealGB gb_a(const std::vector<std::string>& gens, int cond = 1) {
  std::vector<Poly> p;
  for (const auto& s : gens) p.push_back(pa(s, cond));
  return groebner(p, ring_a());
}

IdealGB gb_b(const std::vector<std::string>& gens) {
  std::vector<Poly> p;
  for (const auto& s : gens) p.push_back(pb(s));
  return groebner(p, ring_b());
}

GroupPtr binary(GroupKind k, int n = 1) { return std::make_shared<const MatrixGroup>(build_binary_polyhedral({k, n})); }

Poly spoly(const Poly& f, const Poly& g) {
  const Monomial l = Monomial::lcm(f.lm(), g.lm());
  return f.mul_term(l / f.lm(), CycloNum(1) / f.lc()) - g.mul_term(l / g.lm(), CycloNum(1) / g.lc());
}

// I_j(p:q) from its literal generators.
IdealGB golden_i(int n, int j, int p, int q) {
  const auto r = ring_a();
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  auto pw = [&](Poly b, int k) {
    Poly o = Poly::constant(r, CycloNum(1));
    for (int i = 0; i < k; ++i) o = o * b;
    return o;
  };
  return groebner({pw(x, j) * CycloNum(p) - pw(y, 2 * n - j) * CycloNum(q), x * y, pw(x, j + 1), pw(y, 2 * n - j + 1)},
                  r);
}

// Kernel of B -> A/I on monomials of degree <= bound, by linear algebra.
IdealGB kernel_oracle(const IdealGB& i, int bound) {
  const auto std_mons = quotient_basis(i);
  const auto ra = ring_a();
  std::vector<Monomial> bmons;
  for (int d = 0; d <= bound; ++d)
    for (const auto& m : monomials_of_degree(*ring_b(), d)) bmons.push_back(m);
  Mat m(static_cast<int>(std_mons.size()), static_cast<int>(bmons.size()));
  for (std::size_t k = 0; k < bmons.size(); ++k) {
    const auto& e = bmons[k].e;
    Monomial xy;
    xy.e[0] = static_cast<std::uint16_t>(2 * e[0] + e[2]);
    xy.e[1] = static_cast<std::uint16_t>(2 * e[1] + e[2]);
    const Poly nf = normal_form(Poly::term(ra, xy, CycloNum(1)), i);
    for (std::size_t r = 0; r < std_mons.size(); ++r)
      m(static_cast<int>(r), static_cast<int>(k)) = nf.coeff(std_mons[r]);
  }
  std::vector<Poly> gens;
  for (const auto& v : nullspace(m)) gens.push_back(from_coordinates(ring_b(), v, bmons));
  return groebner(gens, ring_b());
}

}  // namespace

TEST_CASE("degrevlex and block orders") {
  const Ring& a = *ring_a();
  auto mono = [](int i, int j) {
    Monomial m;
    m.e[0] = static_cast<std::uint16_t>(i);
    m.e[1] = static_cast<std::uint16_t>(j);
    return m;
  };
  CHECK(compare(a, mono(1, 0), mono(0, 1)) > 0);
  CHECK(compare(a, mono(2, 0), mono(1, 1)) > 0);
  CHECK(compare(a, mono(1, 1), mono(0, 2)) > 0);
  CHECK(compare(a, mono(0, 3), mono(2, 0)) > 0);
  // degrevlex in three variables: a*c < b^2
  const Ring& b = *ring_b();
  Monomial ac, bb;
  ac.e = {1, 0, 1};
  bb.e = {0, 2, 0};
  CHECK(compare(b, ac, bb) < 0);
  // block order: any x beats every pure (a, b, c) monomial
  const Ring& e = *ring_elimination();
  Monomial x, big;
  x.e = {1, 0, 0, 0, 0};
  big.e = {0, 0, 5, 5, 5};
  CHECK(compare(e, x, big) > 0);
  const auto mons = monomials_of_degree(b, 2);
  CHECK(mons.size() == 6);
  for (std::size_t k = 1; k < mons.size(); ++k) CHECK(compare(b, mons[k - 1], mons[k]) > 0);
}

TEST_CASE("polynomial arithmetic and text") {
  const Poly f = pa("x^2 - 3/2*x*y + 1");
  const Poly g = pa("x + y");
  CHECK((f * g).to_string() == "x^3 - 1/2*x^2*y - 3/2*x*y^2 + x + y");
  CHECK((f - f).is_zero());
  CHECK((f + g - g) == f);
  const Poly z = pa("(z)*x - y", 8);
  CHECK(Poly::parse(z.to_string(8), ring_a(), 8) == z);
  CHECK((z * z).coeff(Monomial::var(0, 2)) == CycloNum::root_of_unity(2, 8));
  CHECK(pa("0").is_zero());
  CHECK(pa("2*x*x*y").to_string() == "2*x^2*y");
  CHECK(pb("a*b - c^2").degree() == 2);

  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto rnd = [&] {
      Poly p(ring_a());
      for (int k = 0; k < 4; ++k)
        p += Poly::term(ring_a(), Monomial::var(0, static_cast<int>(rng() % 4)) * Monomial::var(1, static_cast<int>(rng() % 4)),
                        CycloNum(static_cast<int>(rng() % 7) - 3));
      return p;
    };
    const Poly p = rnd(), q = rnd(), r = rnd();
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(Poly::parse(p.to_string(), ring_a(), 1) == p);
  }
}

TEST_CASE("groebner basics") {
  CHECK(gb_a({"x^2", "x*y"}).to_string() == "[x*y, x^2]");
  CHECK(gb_a({"x + 1", "x"}).is_unit());
  CHECK(gb_a({"1"}).to_string() == "[1]");
  // x^2 - y, x*y - 1 : a classical example with a finite quotient of length 3
  const IdealGB g = gb_a({"x^2 - y", "x*y - 1"});
  CHECK(quotient_basis(g).size() == 3);
  CHECK(contains(g, pa("y^3 - 1")));
  CHECK_FALSE(contains(g, pa("y - 1")));
  // I_1(1:1) for n = 2
  const IdealGB i = gb_a({"x - y^3", "x*y", "x^2", "y^4"});
  CHECK(i.to_string() == "[x*y, x^2, y^3 - x]");
  CHECK(quotient_basis(i).size() == 4);
  CHECK(quotient_basis(maximal_ideal(ring_a())).size() == 1);
  CHECK_THROWS_AS(quotient_basis(gb_a({"x"})), InfiniteQuotient);
}

TEST_CASE("reduced bases are unique and closed under S-pairs") {
  std::mt19937 rng(11);
  for (int t = 0; t < 25; ++t) {
    std::vector<Poly> gens;
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int g = 0; g < k; ++g) {
      Poly p(ring_b());
      for (int s = 0; s < 3; ++s) {
        Monomial m;
        for (int v = 0; v < 3; ++v) m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(rng() % 3);
        p += Poly::term(ring_b(), m, CycloNum(static_cast<int>(rng() % 9) - 4));
      }
      if (!p.is_zero()) gens.push_back(p);
    }
    const IdealGB first = groebner(gens, ring_b());
    for (const auto& f : gens) CHECK(contains(first, f));
    for (std::size_t a = 0; a < first.basis.size(); ++a) {
      CHECK(first.basis[a].lc().is_one());
      for (std::size_t b = a + 1; b < first.basis.size(); ++b)
        CHECK(normal_form(spoly(first.basis[a], first.basis[b]), first).is_zero());
    }
    // auto-reduced: no term of one element is divisible by another leading monomial
    for (std::size_t a = 0; a < first.basis.size(); ++a)
      for (std::size_t b = 0; b < first.basis.size(); ++b)
        if (a != b)
          for (const auto& term : first.basis[a].terms()) CHECK_FALSE(first.basis[b].lm().divides(term.m));
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& f : gens) f *= CycloNum(static_cast<int>(rng() % 5) + 1);
    gens.push_back(gens.front() * gens.back());
    CHECK(groebner(gens, ring_b()) == first);
  }
}

TEST_CASE("cyclotomic coefficients in groebner bases") {
  const int c = 8;
  const IdealGB g = gb_a({"(z)*x - y^2", "x*y", "x^3"}, c);
  for (const auto& f : g.basis) CHECK(f.lc().is_one());
  CHECK(contains(g, pa("x - (-z^3)*y^2", c)));
}

TEST_CASE("group action on polynomials") {
  const auto g = binary(GroupKind::kCyclic, 4);
  const Poly x = Poly::variable(ring_a(), 0);
  // generator diag(xi, xi^-1) sends x to xi^-1 x
  const Poly img = act(*g, 1, x);
  CHECK(img == Poly::term(ring_a(), Monomial::var(0), g->matrix(1)(0, 0).inv()));
  CHECK(act(*g, 0, pa("x^3 + x*y")) == pa("x^3 + x*y"));
  const auto t = binary(GroupKind::kTetrahedral);
  const int cond = t->conductor();
  const Poly f = pa("x^2 + (z)*y", cond), h = pa("x*y - y^3", cond);
  for (int e = 0; e < t->order(); e += 5) {
    CHECK(act(*t, e, f * h) == act(*t, e, f) * act(*t, e, h));
    // left action: (gh) . f = g . (h . f)
    const int e2 = (e * 7 + 3) % t->order();
    CHECK(act(*t, t->mul(e, e2), f) == act(*t, e, act(*t, e2, f)));
  }
}

TEST_CASE("invariant generators") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = binary(GroupKind::kCyclic, n);
    std::string warn;
    const auto inv = invariant_generators(*g, default_degree_bound({GroupKind::kCyclic, n}, true), 3, &warn);
    std::vector<std::string> s;
    for (const auto& f : inv) s.push_back(f.to_string());
    if (n == 1) {
      CHECK(s == std::vector<std::string>{"x^2", "x*y", "y^2"});
    } else {
      CHECK(s == std::vector<std::string>{"x*y", "x^" + std::to_string(2 * n), "y^" + std::to_string(2 * n)});
    }
    CHECK(warn.empty());
    const auto q = build_polyhedral_quotient(g).first;
    const auto inv3 = invariant_generators(*q, default_degree_bound({GroupKind::kCyclic, n}, false), 4, &warn);
    std::vector<std::string> s3;
    for (const auto& f : inv3) s3.push_back(f.to_string());
    if (n == 1) CHECK(s3 == std::vector<std::string>{"a", "b", "c"});
    if (n == 2) CHECK(s3 == std::vector<std::string>{"c", "a^2", "a*b", "b^2"});
    if (n >= 3)
      CHECK(s3 == std::vector<std::string>{"c", "a*b", "a^" + std::to_string(n), "b^" + std::to_string(n)});
  }
  const auto triv = std::make_shared<const MatrixGroup>(MatrixGroup::from_elements({Mat::identity(2)}, "1", true));
  CHECK(triv->order() == 1);
  const auto inv = invariant_generators(*triv, 1);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0].to_string() == "x");
  CHECK(inv[1].to_string() == "y");
}

TEST_CASE("invariants agree with Reynolds averaging") {
  for (auto spec : {GroupSpec{GroupKind::kDihedral, 2}, GroupSpec{GroupKind::kDihedral, 3},
                    GroupSpec{GroupKind::kTetrahedral, 1}}) {
    const auto g = binary(spec.kind, spec.n);
    const int bound = default_degree_bound(spec, true);
    const auto inv = invariant_generators(*g, bound, 3);
    CHECK(inv.size() == 3);
    for (const auto& f : inv) CHECK(reynolds(*g, f) == f);
    // dimension of the invariants of each degree: Reynolds images of monomials
    for (int d = 1; d <= bound; ++d) {
      const auto mons = monomials_of_degree(*ring_a(), d);
      std::vector<Vec> rows;
      for (const auto& m : mons) rows.push_back(coordinates(reynolds(*g, Poly::term(ring_a(), m, CycloNum(1))), mons));
      const int dim_reynolds = static_cast<int>(row_basis(rows, static_cast<int>(mons.size())).size());
      // Molien-free count from the generators: monomials in the generators of weighted degree d
      std::vector<int> deg;
      for (const auto& f : inv) deg.push_back(f.degree());
      std::vector<Vec> prods;
      std::vector<Poly> level{Poly::constant(ring_a(), CycloNum(1))};
      std::function<void(std::size_t, int, Poly)> rec = [&](std::size_t i, int left, Poly acc) {
        if (left == 0) {
          prods.push_back(coordinates(acc, mons));
          return;
        }
        if (i == inv.size()) return;
        for (int k = 0; k * deg[i] <= left; ++k) {
          rec(i + 1, left - k * deg[i], acc);
          acc = acc * inv[i];
        }
      };
      rec(0, d, Poly::constant(ring_a(), CycloNum(1)));
      const int dim_alg = prods.empty() ? 0 : static_cast<int>(row_basis(prods, static_cast<int>(mons.size())).size());
      CHECK(dim_alg == dim_reynolds);
    }
  }
}

TEST_CASE("quotient characters and cluster test") {
  const auto g = binary(GroupKind::kCyclic, 4);
  const auto m = maximal_ideal(ring_a());
  const auto chi = quotient_character(*g, m);
  for (const auto& v : chi) CHECK(v == CycloNum(1));
  for (int j = 1; j <= 7; ++j)
    for (auto [p, q] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 3}}) {
      const auto r = is_cluster(*g, golden_i(4, j, p, q));
      CHECK_MESSAGE(r.cluster, "j=" << j << " " << r.reason);
    }
  // n_G + m^2: dimension 3, not 8
  const auto small = gb_a({"x*y", "x^8", "y^8", "x^2", "y^2"});
  const auto r = is_cluster(*g, small);
  CHECK_FALSE(r.cluster);
  CHECK(r.dimension == 3);
  // a non-stable ideal
  CHECK_FALSE(is_cluster(*g, gb_a({"x - y", "y^8"})).stable);
  CHECK_THROWS_AS(quotient_character(*g, gb_a({"x - y", "y^8"})), NotInvariant);
  // free orbit of C~2 through (1, 1): points (i^k, i^-k)
  const auto c2 = binary(GroupKind::kCyclic, 2);
  const auto orbit = gb_a({"x*y - 1", "x^4 - 1", "y - x^3"});
  CHECK(quotient_basis(orbit).size() == 4);
  CHECK(is_cluster(*c2, orbit).cluster);
  // non-free orbit of the diagonal action: origin only, length 1
  CHECK_FALSE(is_cluster(*c2, m).cluster);
  // class function check on T~ for the maximal ideal squared plus invariants
  const auto t = binary(GroupKind::kTetrahedral);
  const auto mt = gb_a({"x^2", "x*y", "y^2"});
  const auto ct = quotient_character(*t, mt);
  const auto nat = natural_character(*t);
  for (std::size_t c = 0; c < ct.size(); ++c) CHECK(ct[c] == CycloNum(1) + nat[c]);
}

TEST_CASE("preimage under sigma") {
  CHECK(preimage_sigma(maximal_ideal(ring_a())) == maximal_ideal(ring_b()));
  for (auto [p, q] : {std::pair{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 3}}) {
    // even j: I_2(p:q) -> J_1(p:q) = <p a - q b, c, a^2, b^2>
    const auto j2 = preimage_sigma(golden_i(2, 2, p, q));
    const auto expect = groebner({pb("a") * CycloNum(p) - pb("b") * CycloNum(q), pb("c"), pb("a^2"), pb("b^2"), pb("a*b")},
                                 ring_b());
    CHECK(j2 == expect);
    // odd j: I_1(p:q) -> <a, b^2, c>
    CHECK(preimage_sigma(golden_i(2, 1, p, q)) == gb_b({"a", "b^2", "c"}));
    CHECK(preimage_sigma(golden_i(2, 3, p, q)) == gb_b({"a^2", "b", "c"}));
  }
  // elimination against the linear-algebra kernel of B -> A/I
  for (int n = 2; n <= 4; ++n)
    for (int j = 1; j < 2 * n; ++j)
      for (auto [p, q] : {std::pair{1, 0}, {0, 1}, {2, 3}}) {
        const auto i = golden_i(n, j, p, q);
        CHECK(preimage_sigma(i) == kernel_oracle(i, 2 * n + 1));
      }
  const auto orbit = gb_a({"x*y - 1", "x^4 - 1", "y - x^3"});
  CHECK(preimage_sigma(orbit) == kernel_oracle(orbit, 6));
  // monotone: I_1(1:1) is contained in m_A
  CHECK(contains(preimage_sigma(maximal_ideal(ring_a())), preimage_sigma(golden_i(2, 1, 1, 1))));
}
