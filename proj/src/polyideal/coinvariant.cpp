#include "mckay/polyideal/coinvariant.hpp"

#include <map>
#include <optional>

#include "mckay/polyideal/action.hpp"
#include "mckay/polyideal/invariants.hpp"

namespace mckay {

std::vector<Mat> graded_action(const MatrixGroup& g, const IdealGB& gb, const std::vector<Monomial>& mons) {
  const auto gens = generating_set(g);
  const int n = static_cast<int>(mons.size());
  std::vector<Mat> on_gens;
  for (int s : gens) {
    Mat a(n, n);
    for (int k = 0; k < n; ++k) {
      const Vec c = coordinates(normal_form(act(g, s, Poly::term(gb.ring, mons[static_cast<std::size_t>(k)], CycloNum(1))), gb), mons);
      for (int r = 0; r < n; ++r) a(r, k) = c[static_cast<std::size_t>(r)];
    }
    on_gens.push_back(std::move(a));
  }
  // every element as a word: A(x s) = A(x) A(s)
  std::vector<Mat> all(static_cast<std::size_t>(g.order()));
  std::vector<bool> done(static_cast<std::size_t>(g.order()), false);
  all[0] = Mat::identity(n);
  done[0] = true;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const int y = g.mul(queue[k], gens[s]);
      if (done[static_cast<std::size_t>(y)]) continue;
      done[static_cast<std::size_t>(y)] = true;
      all[static_cast<std::size_t>(y)] = all[static_cast<std::size_t>(queue[k])] * on_gens[s];
      queue.push_back(y);
    }
  return all;
}

namespace {

// Multiplicity of zeta_o^k as an eigenvalue of rho(h), o = order(h).
int eigen_multiplicity(const MatrixGroup& g, const ClassFunction& chi, int h, int k) {
  const int o = g.element_order(h);
  CycloNum s;
  int p = g.identity();
  for (int t = 0; t < o; ++t) {
    s += chi[static_cast<std::size_t>(g.class_of(p))] * CycloNum::root_of_unity(-static_cast<long>(k) * t, o);
    p = g.mul(p, h);
  }
  s = s * CycloNum(Rational(1, o));
  if (!s.is_rational()) throw std::logic_error("eigenvalue multiplicity is not rational");
  return static_cast<int>(s.rational().get_num().get_si());
}

struct Splitter {
  int element = -1;
  CycloNum lambda;
};

// Value re-expressed over Q(zeta_conductor) when it lives there.
CycloNum settle(const CycloNum& c, int conductor) {
  if (c.conductor() == conductor) return c;
  if (auto l = c.lower(conductor)) return *l;
  return c;
}

// Prefers an eigenvalue inside the field of the matrices, so that the
// eigenspace computation stays in that field.
Splitter find_splitter(const MatrixGroup& g, const ClassFunction& chi) {
  std::optional<Splitter> fallback;
  for (const auto& cls : g.classes()) {
    const int h = cls.front();
    const int o = g.element_order(h);
    for (int k = 0; k < o; ++k)
      if (eigen_multiplicity(g, chi, h, k) == 1) {
        const CycloNum lambda = CycloNum::root_of_unity(k, o);
        if (lambda.lower(g.conductor())) return {h, settle(lambda, g.conductor())};
        if (!fallback) fallback = Splitter{h, lambda};
      }
  }
  if (fallback) return *fallback;
  throw std::logic_error("no group element has a simple eigenvalue on this representation");
}

// Coordinates of v in a reduced echelon basis (entries at the pivots).
Vec echelon_coords(const Echelon& e, const Vec& v) {
  Vec c(e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) c[k] = v[static_cast<std::size_t>(e.pivots[k])];
  return c;
}

// Action of G on one graded piece, known through the generators. Elements
// are reached by left multiplication, y = s x, so A(y) v = A(s) (A(x) v)
// costs one matrix-vector product per element.
class PieceAction {
 public:
  PieceAction(const MatrixGroup& g, const IdealGB& gb, const std::vector<Monomial>& mons)
      : g_(g), gens_(generating_set(g)), n_(static_cast<int>(mons.size())) {
    for (int s : gens_) {
      Mat a(n_, n_);
      for (int k = 0; k < n_; ++k) {
        const Vec c = coordinates(
            normal_form(act(g, s, Poly::term(gb.ring, mons[static_cast<std::size_t>(k)], CycloNum(1))), gb), mons);
        for (int r = 0; r < n_; ++r) a(r, k) = c[static_cast<std::size_t>(r)];
      }
      on_gens_.push_back(std::move(a));
    }
    const auto order = static_cast<std::size_t>(g.order());
    via_.assign(order, -1);
    from_.assign(order, -1);
    bfs_.push_back(g.identity());
    std::vector<bool> seen(order, false);
    seen[static_cast<std::size_t>(g.identity())] = true;
    for (std::size_t k = 0; k < bfs_.size(); ++k)
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        const int y = g.mul(gens_[s], bfs_[k]);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        via_[static_cast<std::size_t>(y)] = static_cast<int>(s);
        from_[static_cast<std::size_t>(y)] = bfs_[k];
        bfs_.push_back(y);
      }
    rank_.assign(order, 0);
    for (std::size_t k = 0; k < bfs_.size(); ++k) rank_[static_cast<std::size_t>(bfs_[k])] = static_cast<int>(k);
  }

  const std::vector<Mat>& on_gens() const { return on_gens_; }
  // Element of the class reached first, i.e. with the shortest word.
  int shallowest(const std::vector<int>& cls) const {
    int best = cls.front();
    for (int x : cls)
      if (rank_[static_cast<std::size_t>(x)] < rank_[static_cast<std::size_t>(best)]) best = x;
    return best;
  }

  const Mat& matrix(int x) {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    Mat m = x == g_.identity() ? Mat::identity(n_)
                               : on_gens_[static_cast<std::size_t>(via_[static_cast<std::size_t>(x)])] *
                                     matrix(from_[static_cast<std::size_t>(x)]);
    return cache_.emplace(x, std::move(m)).first->second;
  }

  // A(x) u for every element x, indexed by element.
  std::vector<Vec> orbit(const Vec& u) const {
    std::vector<Vec> w(static_cast<std::size_t>(g_.order()));
    w[static_cast<std::size_t>(g_.identity())] = u;
    for (std::size_t k = 1; k < bfs_.size(); ++k) {
      const int y = bfs_[k];
      w[static_cast<std::size_t>(y)] =
          on_gens_[static_cast<std::size_t>(via_[static_cast<std::size_t>(y)])] * w[static_cast<std::size_t>(from_[static_cast<std::size_t>(y)])];
    }
    return w;
  }

  // Small matrices of every element from their values on the generators.
  std::vector<Mat> extend(const std::vector<Mat>& at_gens, int dim) const {
    std::vector<Mat> all(static_cast<std::size_t>(g_.order()));
    all[static_cast<std::size_t>(g_.identity())] = Mat::identity(dim);
    for (std::size_t k = 1; k < bfs_.size(); ++k) {
      const int y = bfs_[k];
      all[static_cast<std::size_t>(y)] = at_gens[static_cast<std::size_t>(via_[static_cast<std::size_t>(y)])] *
                                         all[static_cast<std::size_t>(from_[static_cast<std::size_t>(y)])];
    }
    return all;
  }

 private:
  const MatrixGroup& g_;
  std::vector<int> gens_;
  int n_;
  std::vector<Mat> on_gens_;
  std::vector<int> bfs_, via_, from_, rank_;
  std::map<int, Mat> cache_;
};

// Spanning set of the submodule generated by u: close under the generators,
// keeping only vectors independent of those found so far.
std::vector<Vec> submodule_span(const std::vector<Mat>& on_gens, const Vec& u) {
  std::vector<Vec> found, rows;  // rows: reduced copies with pivots
  std::vector<std::size_t> pivots;
  auto add = [&](const Vec& v) {
    Vec r = v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const CycloNum c = r[pivots[i]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < r.size(); ++k)
        if (!rows[i][k].is_zero()) r[k] -= c * rows[i][k];
    }
    std::size_t p = 0;
    while (p < r.size() && r[p].is_zero()) ++p;
    if (p == r.size()) return false;
    const CycloNum inv = r[p].inv();
    for (auto& x : r) x = x * inv;
    rows.push_back(std::move(r));
    pivots.push_back(p);
    found.push_back(v);
    return true;
  };
  add(u);
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& a : on_gens) add(a * found[k]);
  return found;
}

}  // namespace

CoinvariantAlgebra coinvariant_algebra(const GroupPtr& gp, std::shared_ptr<const CharTable> table, int degree_bound) {
  const MatrixGroup& g = *gp;
  const CharTable& t = *table;
  CoinvariantAlgebra out;
  out.group = gp;
  out.table = table;
  out.invariants = invariant_generators(g, degree_bound);
  const RingPtr& ring = ring_for_dim(g.dim());
  out.gb = groebner(out.invariants, ring);
  out.std_monomials = quotient_basis(out.gb);
  int top = 0;
  for (const auto& m : out.std_monomials) top = std::max(top, m.degree());
  out.degree_dims.assign(static_cast<std::size_t>(top + 1), 0);
  for (const auto& m : out.std_monomials) ++out.degree_dims[static_cast<std::size_t>(m.degree())];
  out.copies_of.assign(static_cast<std::size_t>(t.size()), {});

  for (int d = 1; d <= top; ++d) {
    std::vector<Monomial> mons;
    for (const auto& m : monomials_of_degree(*ring, d))
      for (const auto& s : out.std_monomials)
        if (s == m) mons.push_back(m);
    PieceAction action(g, out.gb, mons);
    const int n = static_cast<int>(mons.size());
    ClassFunction chi;
    for (const auto& cls : g.classes()) chi.push_back(action.matrix(action.shallowest(cls)).trace());
    const auto mult = decompose(chi, t);
    for (int r = 0; r < t.size(); ++r) {
      const int m = mult[static_cast<std::size_t>(r)];
      if (m == 0) continue;
      if (r == t.trivial_index) throw MultiplicityMismatch("invariant survives in positive degree " + std::to_string(d));
      const auto& cr = t.chars[static_cast<std::size_t>(r)];
      ClassFunction cr_bar;  // conjugate values over the field of the matrices
      for (const auto& v : cr) cr_bar.push_back(settle(v.conj(), g.conductor()));
      const int dr = t.dims[static_cast<std::size_t>(r)];
      const CycloNum scale(Rational(dr, g.order()));
      // P v = (dim rho / |G|) sum_x conj(chi(x)) A(x) v
      auto project = [&](const Vec& v) {
        const auto w = action.orbit(v);
        Vec pv(static_cast<std::size_t>(n));
        for (int x = 0; x < g.order(); ++x) {
          const CycloNum& c = cr_bar[static_cast<std::size_t>(g.class_of(x))];
          for (int k = 0; k < n; ++k)
            if (!w[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)].is_zero())
              pv[static_cast<std::size_t>(k)] += c * w[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
        }
        for (auto& e : pv) e = e * scale;
        return pv;
      };
      const Splitter sp = find_splitter(g, cr);
      Mat shifted = action.matrix(sp.element);
      for (int k = 0; k < n; ++k) shifted(k, k) -= sp.lambda;
      std::vector<Vec> eig;
      for (const auto& v : nullspace(shifted)) eig.push_back(project(v));
      eig = row_basis(eig, n);
      if (static_cast<int>(eig.size()) != m)
        throw std::logic_error("eigenspace of the splitting element has the wrong dimension");
      for (const auto& u : eig) {
        const auto span = submodule_span(action.on_gens(), u);
        if (static_cast<int>(span.size()) != dr) throw std::logic_error("orbit span is not irreducible");
        Echelon e = rref(Mat::from_rows(span, n));
        IsotypicCopy c;
        c.rho = r;
        c.degree = d;
        std::vector<Vec> basis;
        for (int k = 0; k < dr; ++k) basis.push_back(e.reduced.row(k));
        for (const auto& b : basis) c.basis.push_back(from_coordinates(ring, b, mons));
        std::vector<Mat> at_gens;
        for (const auto& a : action.on_gens()) {
          Mat small(dr, dr);
          for (int k = 0; k < dr; ++k) {
            const Vec im = echelon_coords(e, a * basis[static_cast<std::size_t>(k)]);
            for (int l = 0; l < dr; ++l) small(l, k) = im[static_cast<std::size_t>(l)];
          }
          at_gens.push_back(std::move(small));
        }
        c.module.action = action.extend(at_gens, dr);
        out.copies_of[static_cast<std::size_t>(r)].push_back(static_cast<int>(out.copies.size()));
        out.copies.push_back(std::move(c));
      }
    }
  }
  for (int r = 0; r < t.size(); ++r) {
    if (r == t.trivial_index) continue;
    const int have = static_cast<int>(out.copies_of[static_cast<std::size_t>(r)].size());
    if (have != 2 * t.dims[static_cast<std::size_t>(r)])
      throw MultiplicityMismatch("character " + std::to_string(r) + " occurs " + std::to_string(have) +
                                 " times in the coinvariant algebra, expected " +
                                 std::to_string(2 * t.dims[static_cast<std::size_t>(r)]) +
                                 " (degree bound too low?)");
  }
  return out;
}

}  // namespace mckay
