#include "mckay/polyideal/groebner.hpp"

#include <algorithm>
#include <set>

namespace mckay {

bool operator==(const IdealGB& a, const IdealGB& b) {
  if (a.basis.size() != b.basis.size()) return false;
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    if (!(a.basis[i] == b.basis[i])) return false;
  return true;
}

std::string IdealGB::to_string(int conductor) const {
  std::string s = "[";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ", ";
    s += basis[i].to_string(conductor);
  }
  return s + "]";
}

Poly normal_form(const Poly& f, const std::vector<Poly>& divisors) {
  Poly p = f;
  Poly rem(f.ring());
  while (!p.is_zero()) {
    const Monomial& m = p.lm();
    const Poly* hit = nullptr;
    for (const auto& g : divisors)
      if (!g.is_zero() && g.lm().divides(m)) {
        hit = &g;
        break;
      }
    if (hit) {
      CycloNum c = hit->lc().is_one() ? p.lc() : p.lc() / hit->lc();
      p.sub_mul(c, m / hit->lm(), *hit);
    } else {
      rem.push_smaller(p.pop_lead());
    }
  }
  return rem;
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
};

Poly spoly(const Poly& f, const Poly& g) {
  const Monomial l = Monomial::lcm(f.lm(), g.lm());
  Poly s = f.mul_term(l / f.lm(), CycloNum(1));
  s.sub_mul(CycloNum(1), l / g.lm(), g);
  return s;
}

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  void add(Poly h, GroebnerStats* st) {
    const int hi = static_cast<int>(polys_.size());
    const Monomial hm = h.lm();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<int> c;
    for (int g = 0; g < hi; ++g)
      if (active_[static_cast<std::size_t>(g)]) c.push_back(g);
    auto lcm_with = [&](int g) { return Monomial::lcm(hm, polys_[static_cast<std::size_t>(g)].lm()); };

    // Gebauer-Moeller: drop (h, g) when some other (h, g2) has an lcm dividing it.
    std::vector<int> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int g1 = c[k];
      const Monomial l1 = lcm_with(g1);
      bool keep = hm.coprime(polys_[static_cast<std::size_t>(g1)].lm());
      if (!keep) {
        keep = true;
        for (std::size_t k2 = k + 1; k2 < c.size() && keep; ++k2)
          if (lcm_with(c[k2]).divides(l1)) keep = false;
        for (int g2 : d)
          if (keep && lcm_with(g2).divides(l1)) keep = false;
      }
      if (keep) d.push_back(g1);
    }
    std::vector<Pair> fresh;
    for (int g : d)
      if (!hm.coprime(polys_[static_cast<std::size_t>(g)].lm())) fresh.push_back({g, hi, lcm_with(g)});
      else if (st)
        ++st->pairs_considered;

    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      const Monomial li = lcm_with(p.i), lj = lcm_with(p.j);
      if (hm.divides(p.lcm) && !(li == p.lcm) && !(lj == p.lcm)) {
        if (st) ++st->pairs_considered;
        continue;
      }
      kept.push_back(p);
    }
    for (auto& p : fresh) kept.push_back(p);
    pairs_ = std::move(kept);

    for (int g = 0; g < hi; ++g)
      if (active_[static_cast<std::size_t>(g)] && hm.divides(polys_[static_cast<std::size_t>(g)].lm()))
        active_[static_cast<std::size_t>(g)] = false;
  }

  std::vector<Poly> basis() const {
    std::vector<Poly> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  void run(GroebnerStats* st) {
    while (!pairs_.empty()) {
      // normal selection: smallest lcm, ties broken by ascending indices
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        const int c = compare(*ring_, it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
      }
      const Pair p = *best;
      pairs_.erase(best);
      if (st) {
        ++st->pairs_considered;
        ++st->pairs_reduced;
      }
      Poly h = normal_form(spoly(polys_[static_cast<std::size_t>(p.i)], polys_[static_cast<std::size_t>(p.j)]),
                           basis());
      if (h.is_zero()) {
        if (st) ++st->zero_reductions;
        continue;
      }
      add(h.monic(), st);
    }
  }

 private:
  RingPtr ring_;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

void sort_basis(const Ring& r, std::vector<Poly>& b) {
  std::sort(b.begin(), b.end(), [&](const Poly& f, const Poly& g) { return compare(r, f.lm(), g.lm()) < 0; });
}

}  // namespace

IdealGB groebner(const std::vector<Poly>& generators, const RingPtr& ring, GroebnerStats* stats) {
  std::vector<Poly> gens;
  for (const auto& f : generators)
    if (!f.is_zero()) {
      if (f.ring()->vars != ring->vars) throw std::invalid_argument("generator from another ring");
      gens.push_back(f.ring() == ring ? f.monic() : f.remap(ring, [&] {
        std::vector<int> id(static_cast<std::size_t>(ring->nvars()));
        for (int i = 0; i < ring->nvars(); ++i) id[static_cast<std::size_t>(i)] = i;
        return id;
      }()).monic());
    }
  IdealGB out{ring, {}};
  if (gens.empty()) return out;
  sort_basis(*ring, gens);

  Buchberger bb(ring);
  for (const auto& f : gens) {
    Poly h = normal_form(f, bb.basis());
    if (!h.is_zero()) bb.add(h.monic(), stats);
  }
  bb.run(stats);

  // minimal basis, then inter-reduce
  std::vector<Poly> g = bb.basis();
  sort_basis(*ring, g);
  std::vector<Poly> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < g.size() && !redundant; ++l)
      if (l != k && g[l].lm().divides(g[k].lm()) && (!(g[l].lm() == g[k].lm()) || l < k)) redundant = true;
    if (!redundant) minimal.push_back(g[k]);
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Poly> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    Term lead = minimal[k].lead();
    Poly tail = minimal[k];
    tail.pop_lead();
    Poly r = normal_form(tail, others);
    Poly red(ring);
    red.push_smaller(lead);
    red += r;
    minimal[k] = red.monic();
  }
  sort_basis(*ring, minimal);
  out.basis = std::move(minimal);
  return out;
}

bool contains(const IdealGB& gb, const Poly& f) { return normal_form(f, gb).is_zero(); }

bool contains(const IdealGB& big, const IdealGB& small) {
  for (const auto& f : small.basis)
    if (!contains(big, f)) return false;
  return true;
}

IdealGB ideal_sum(const IdealGB& a, const IdealGB& b) {
  std::vector<Poly> gens = a.basis;
  gens.insert(gens.end(), b.basis.begin(), b.basis.end());
  return groebner(gens, a.ring);
}

IdealGB ideal_product(const IdealGB& a, const IdealGB& b) {
  std::vector<Poly> gens;
  for (const auto& f : a.basis)
    for (const auto& g : b.basis) gens.push_back(f * g);
  return groebner(gens, a.ring);
}

IdealGB maximal_ideal(const RingPtr& ring) {
  std::vector<Poly> gens;
  for (int i = 0; i < ring->nvars(); ++i) gens.push_back(Poly::variable(ring, i));
  return groebner(gens, ring);
}

std::vector<Monomial> quotient_basis(const IdealGB& gb) {
  if (gb.is_unit()) return {};
  const Ring& r = *gb.ring;
  for (int i = 0; i < r.nvars(); ++i) {
    bool pure = false;
    for (const auto& g : gb.basis) {
      const Monomial& m = g.lm();
      if (m.e[static_cast<std::size_t>(i)] > 0 && m.degree() == m.e[static_cast<std::size_t>(i)]) pure = true;
    }
    if (!pure) throw InfiniteQuotient("quotient is infinite-dimensional: no pure power of " + r.vars[static_cast<std::size_t>(i)]);
  }
  auto standard = [&](const Monomial& m) {
    for (const auto& g : gb.basis)
      if (g.lm().divides(m)) return false;
    return true;
  };
  std::vector<Monomial> out{Monomial{}};
  std::set<std::array<std::uint16_t, kMaxVars>> seen{Monomial{}.e};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < r.nvars(); ++i) {
      Monomial m = out[k] * Monomial::var(i);
      if (seen.insert(m.e).second && standard(m)) out.push_back(m);
    }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return compare(r, a, b) < 0; });
  return out;
}

}  // namespace mckay
