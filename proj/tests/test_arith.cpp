#include <random>

#include "doctest.h"
#include "mckay/arith/cyclotomic.hpp"
#include "mckay/arith/linalg.hpp"

using namespace mckay;

namespace {

CycloNum random_element(std::mt19937& rng, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
  return CycloNum::from_coeffs(c, n);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p = cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(p[7] == -2);
  CHECK(euler_phi(20) == 8);
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(2, 4) == CycloNum(-1));
  CHECK(root_of_unity(5, 5).is_one());
  CHECK(root_of_unity(0, 7).is_one());
  const CycloNum u = root_of_unity(1, 5) + root_of_unity(4, 5);
  CHECK(u * u + u - CycloNum(1) == CycloNum(0));
  CHECK(u.approx().real() > 0);
  CHECK(root_of_unity(1, 3) + root_of_unity(2, 3) == CycloNum(-1));
  CHECK(root_of_unity(1, 8).inv() == root_of_unity(7, 8));
  CHECK(root_of_unity(-1, 8) == root_of_unity(7, 8));
}

TEST_CASE("sum of all N-th roots vanishes") {
  for (int n = 2; n <= 30; ++n) {
    CycloNum s = CycloNum::zero(n);
    for (int k = 0; k < n; ++k) s += root_of_unity(k, n);
    CHECK(s.is_zero());
    CycloNum z = root_of_unity(1, n), p = CycloNum::one(n);
    for (int k = 0; k < n; ++k) p *= z;
    CHECK(p.is_one());
  }
}

TEST_CASE("conjugation") {
  CHECK(root_of_unity(1, 4).conj() == -root_of_unity(1, 4));
  CHECK(CycloNum(Rational(3, 7)).conj() == CycloNum(Rational(3, 7)));
  const CycloNum a = CycloNum(1) + root_of_unity(1, 8);
  CHECK(a * a.conj() == CycloNum(2) + root_of_unity(1, 8) + root_of_unity(7, 8));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(17);
  for (int n : {3, 4, 5, 8, 12, 15, 20, 24}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycloNum a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      if (!b.is_zero()) CHECK((a * b) * b.inv() == a);
      CHECK(a.lift(3 * n).lower(n).value() == a);
      CHECK(a.coeffs().size() == static_cast<std::size_t>(euler_phi(n)));
    }
  }
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(CycloNum::zero(5).inv(), DivisionByZero);
}

TEST_CASE("mixed conductors lift to the lcm") {
  const CycloNum s = root_of_unity(1, 4) + root_of_unity(1, 3);
  CHECK(s.conductor() == 12);
  CHECK(root_of_unity(1, 4) == root_of_unity(3, 12));
  CHECK(root_of_unity(3, 12).minimal().conductor() == 4);
  const CycloNum sqrt2 = root_of_unity(1, 8) + root_of_unity(7, 8);
  CHECK(sqrt2 * sqrt2 == CycloNum(2));
  CHECK(!sqrt2.lower(4).has_value());
}

TEST_CASE("text round trip") {
  std::mt19937 rng(5);
  for (int n : {1, 4, 7, 20}) {
    for (int t = 0; t < 10; ++t) {
      const CycloNum a = random_element(rng, n);
      CHECK(CycloNum::parse(a.to_string(), n) == a);
    }
  }
  CHECK(CycloNum(0).to_string() == "0");
  CHECK(CycloNum::parse("1/2 - z + 3*z^2", 7).to_string() == "1/2 - z + 3*z^2");
}

TEST_CASE("linear algebra") {
  Mat m = Mat::from_rows({{CycloNum(1), CycloNum(2)}, {CycloNum(3), CycloNum(4)}});
  CHECK(determinant(m) == CycloNum(-2));
  CHECK(inverse(m).value() * m == Mat::identity(2));
  Mat s = Mat::from_rows({{CycloNum(1), CycloNum(2)}, {CycloNum(2), CycloNum(4)}});
  CHECK(rank(s) == 1);
  CHECK(nullspace(s).size() == 1);
  CHECK(!inverse(s).has_value());
}
