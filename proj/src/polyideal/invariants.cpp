#include "mckay/polyideal/invariants.hpp"

#include <algorithm>

#include "mckay/polyideal/action.hpp"

namespace mckay {

int default_degree_bound(const GroupSpec& spec, bool binary) {
  const int n = spec.n;
  switch (spec.kind) {
    case GroupKind::kCyclic: return binary ? 2 * n : std::max(n, 2);
    case GroupKind::kDihedral: return binary ? 2 * n + 2 : n + 1;
    case GroupKind::kTetrahedral: return binary ? 12 : 6;
    case GroupKind::kOctahedral: return binary ? 18 : 9;
    case GroupKind::kIcosahedral: return binary ? 30 : 15;
  }
  return binary ? spec.binary_order() : spec.quotient_order();
}

namespace {

// Invariant subspace of the degree-d piece, as reduced echelon rows.
std::vector<Vec> fixed_space(const MatrixGroup& g, const std::vector<int>& gens, const RingPtr& ring, int d) {
  const int n = static_cast<int>(monomials_of_degree(*ring, d).size());
  if (gens.empty()) {
    std::vector<Vec> rows;
    for (int k = 0; k < n; ++k) {
      Vec v(static_cast<std::size_t>(n));
      v[static_cast<std::size_t>(k)] = CycloNum(1);
      rows.push_back(v);
    }
    return rows;
  }
  Mat stacked(n * static_cast<int>(gens.size()), n);
  int off = 0;
  for (int s : gens) {
    Mat a = degree_action(g.matrix(g.inverse(s)), ring, d) - Mat::identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked(off + r, c) = a(r, c);
    off += n;
  }
  return row_basis(nullspace(stacked), n);
}

}  // namespace

std::vector<Poly> invariant_generators(const MatrixGroup& g, int degree_bound, int expected, std::string* warning) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const RingPtr& ring = ring_for_dim(g.dim());
  const auto gens = generating_set(g);
  std::vector<Poly> out;
  // sub[d]: polynomials spanning the degree-d part of the subalgebra generated so far
  std::vector<std::vector<Poly>> sub(static_cast<std::size_t>(degree_bound + 1));
  sub[0].push_back(Poly::constant(ring, CycloNum(1)));
  for (int d = 1; d <= degree_bound; ++d) {
    const auto mons = monomials_of_degree(*ring, d);
    auto& here = sub[static_cast<std::size_t>(d)];
    for (const auto& f : out)
      for (const auto& h : sub[static_cast<std::size_t>(d - f.degree())]) here.push_back(f * h);
    std::vector<Vec> span;
    for (const auto& p : here) span.push_back(coordinates(p, mons));
    span = row_basis(span, static_cast<int>(mons.size()));
    here.clear();
    for (const auto& v : span) here.push_back(from_coordinates(ring, v, mons));
    int r = static_cast<int>(span.size());
    for (const auto& v : fixed_space(g, gens, ring, d)) {
      span.push_back(v);
      const int r2 = static_cast<int>(row_basis(span, static_cast<int>(mons.size())).size());
      if (r2 == r) {
        span.pop_back();
        continue;
      }
      r = r2;
      Poly f = from_coordinates(ring, v, mons).monic();
      out.push_back(f);
      here.push_back(f);
    }
  }
  if (expected >= 0 && static_cast<int>(out.size()) != expected && warning)
    *warning = "found " + std::to_string(out.size()) + " invariant generators up to degree " +
               std::to_string(degree_bound) + ", expected " + std::to_string(expected);
  return out;
}

}  // namespace mckay
