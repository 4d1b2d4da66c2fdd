#include "mckay/polyideal/action.hpp"

namespace mckay {

namespace {

std::vector<Poly> linear_images(const Mat& m, const RingPtr& ring) {
  const int n = ring->nvars();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix size does not match the variable count");
  std::vector<Poly> img;
  for (int i = 0; i < n; ++i) {
    Poly l(ring);
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) l += Poly::term(ring, Monomial::var(j), m(i, j));
    img.push_back(std::move(l));
  }
  return img;
}

class PowerCache {
 public:
  explicit PowerCache(std::vector<Poly> base) : base_(std::move(base)), pow_(base_.size()) {}
  const Poly& get(int i, int k) {
    auto& v = pow_[static_cast<std::size_t>(i)];
    if (v.empty()) v.push_back(Poly::constant(base_[0].ring(), CycloNum(1)));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * base_[static_cast<std::size_t>(i)]);
    return v[static_cast<std::size_t>(k)];
  }
  Poly monomial(const Monomial& m, int nvars) {
    Poly p = get(0, m.e[0]);
    for (int i = 1; i < nvars; ++i)
      if (m.e[static_cast<std::size_t>(i)]) p = p * get(i, m.e[static_cast<std::size_t>(i)]);
    return p;
  }

 private:
  std::vector<Poly> base_;
  std::vector<std::vector<Poly>> pow_;
};

}  // namespace

Poly substitute_linear(const Mat& m, const Poly& f) {
  const RingPtr& ring = f.ring();
  PowerCache cache(linear_images(m, ring));
  Poly out(ring);
  for (const auto& t : f.terms()) out += cache.monomial(t.m, ring->nvars()) * t.c;
  return out;
}

Poly act(const MatrixGroup& g, int element, const Poly& f) {
  return substitute_linear(g.matrix(g.inverse(element)), f);
}

Poly reynolds(const MatrixGroup& g, const Poly& f) {
  Poly s(f.ring());
  for (int e = 0; e < g.order(); ++e) s += act(g, e, f);
  return s * CycloNum(Rational(1, g.order()));
}

Vec coordinates(const Poly& f, const std::vector<Monomial>& basis) {
  Vec v(basis.size());
  std::size_t k = 0;
  for (const auto& t : f.terms()) {
    while (k < basis.size() && !(basis[k] == t.m)) ++k;
    if (k == basis.size()) {
      // basis not in decreasing order: fall back to a search
      bool found = false;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (basis[l] == t.m) {
          v[l] = t.c;
          found = true;
        }
      if (!found) throw std::invalid_argument("polynomial has a term outside the basis");
      k = 0;
      continue;
    }
    v[k] = t.c;
  }
  return v;
}

Poly from_coordinates(const RingPtr& ring, const Vec& v, const std::vector<Monomial>& basis) {
  Poly p(ring);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!v[k].is_zero()) p += Poly::term(ring, basis[k], v[k]);
  return p;
}

Mat degree_action(const Mat& m, const RingPtr& ring, int degree) {
  const auto mons = monomials_of_degree(*ring, degree);
  PowerCache cache(linear_images(m, ring));
  Mat a(static_cast<int>(mons.size()), static_cast<int>(mons.size()));
  for (std::size_t k = 0; k < mons.size(); ++k) {
    const Vec c = coordinates(cache.monomial(mons[k], ring->nvars()), mons);
    for (std::size_t r = 0; r < mons.size(); ++r) a(static_cast<int>(r), static_cast<int>(k)) = c[r];
  }
  return a;
}

std::vector<int> generating_set(const MatrixGroup& g) {
  std::vector<int> gens;
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  in[0] = true;
  std::vector<int> members{0};
  for (int cand = 1; cand < g.order(); ++cand) {
    if (in[static_cast<std::size_t>(cand)]) continue;
    gens.push_back(cand);
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int s : gens) {
        const int p = g.mul(members[k], s);
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = true;
          members.push_back(p);
        }
      }
    }
    if (static_cast<int>(members.size()) == g.order()) break;
  }
  return gens;
}

std::optional<StabilityWitness> stability_failure(const MatrixGroup& g, const IdealGB& gb) {
  for (int s : generating_set(g))
    for (const auto& f : gb.basis)
      if (!contains(gb, act(g, s, f))) return StabilityWitness{s, f};
  return std::nullopt;
}

}  // namespace mckay
