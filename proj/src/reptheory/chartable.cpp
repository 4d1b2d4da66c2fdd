#include "mckay/reptheory/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mckay/kernels/modp.hpp"

namespace mckay {

namespace {

using Row = std::vector<std::uint32_t>;
namespace kn = kernels;

// Basis of {x in F_p^cols : A x = 0} for A given by rows.
std::vector<Row> nullspace_mod(std::vector<Row> a, std::size_t cols, std::uint32_t p) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    kn::scale_mod(a[r], kn::inv_mod(a[r][c], p), p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      kn::axpy_mod(a[i], a[r], p - a[i][c], p);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[static_cast<std::size_t>(pivots[i])] = (p - a[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint32_t primitive_root(std::uint32_t p) {
  const std::uint32_t m = p - 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t t = m;
  for (std::uint32_t d = 2; d * d <= t; ++d)
    if (t % d == 0) {
      factors.push_back(d);
      while (t % d == 0) t /= d;
    }
  if (t > 1) factors.push_back(t);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors) ok = ok && kn::pow_mod(g, m / f, p) != 1;
    if (ok) return g;
  }
  return 1;
}

struct ClassData {
  std::vector<int> reps, sizes, inverse_class;
  // power[l][t] = class of rep_l ^ t, t = 0 .. exponent - 1
  std::vector<std::vector<int>> power;
  int identity_class = 0;
};

ClassData class_data(const MatrixGroup& g, int exponent) {
  ClassData d;
  const int r = static_cast<int>(g.classes().size());
  for (int l = 0; l < r; ++l) {
    const auto& cls = g.classes()[static_cast<std::size_t>(l)];
    d.reps.push_back(cls.front());
    d.sizes.push_back(static_cast<int>(cls.size()));
    d.inverse_class.push_back(g.class_of(g.inverse(cls.front())));
    std::vector<int> pw;
    int x = g.identity();
    for (int t = 0; t < exponent; ++t) {
      pw.push_back(g.class_of(x));
      x = g.mul(x, cls.front());
    }
    d.power.push_back(std::move(pw));
  }
  d.identity_class = g.class_of(g.identity());
  return d;
}

// a[j][k][l] = #{x in C_j : x^-1 z_l in C_k}, z_l the representative of C_l.
std::vector<std::vector<std::vector<std::uint32_t>>> class_coefficients(const MatrixGroup& g, const ClassData& d) {
  const std::size_t r = d.reps.size();
  std::vector<std::vector<std::vector<std::uint32_t>>> a(r, std::vector<std::vector<std::uint32_t>>(r, Row(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (int x : g.classes()[j])
      for (std::size_t l = 0; l < r; ++l) {
        const int k = g.class_of(g.mul(g.inverse(x), d.reps[l]));
        ++a[j][static_cast<std::size_t>(k)][l];
      }
  return a;
}

// Central characters mod p: common eigenvectors of the matrices M_j = (a[j][k][l])_{k,l}.
std::optional<std::vector<Row>> split_eigenspaces(const std::vector<std::vector<std::vector<std::uint32_t>>>& a,
                                                  std::uint32_t p) {
  const std::size_t r = a.size();
  std::vector<std::vector<Row>> spaces;
  {
    std::vector<Row> full;
    for (std::size_t i = 0; i < r; ++i) {
      Row v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 0; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    std::vector<std::vector<Row>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      const std::size_t k = space.size();
      std::vector<Row> images;
      for (const auto& b : space) {
        Row img(r, 0);
        for (std::size_t row = 0; row < r; ++row) img[row] = kn::dot_mod(a[j][row], b, p);
        images.push_back(std::move(img));
      }
      std::size_t found = 0;
      for (std::uint32_t lambda = 0; lambda < p && found < k; ++lambda) {
        // Rows of the r x k matrix with columns M b_i - lambda b_i.
        std::vector<Row> m(r, Row(k, 0));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t row = 0; row < r; ++row)
            m[row][i] = (images[i][row] + p - kn::mul_mod(lambda, space[i][row], p)) % p;
        auto coeffs = nullspace_mod(std::move(m), k, p);
        if (coeffs.empty()) continue;
        std::vector<Row> sub;
        for (const auto& c : coeffs) {
          Row v(r, 0);
          for (std::size_t i = 0; i < k; ++i) kn::axpy_mod(v, space[i], c[i], p);
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != k) return std::nullopt;  // not diagonalizable over F_p
    }
    spaces = std::move(next);
  }
  std::vector<Row> out;
  for (auto& s : spaces) {
    if (s.size() != 1) return std::nullopt;
    out.push_back(std::move(s[0]));
  }
  return out;
}

std::strong_ordering compare_rows(const ClassFunction& a, const ClassFunction& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace

CharTable character_table(const GroupPtr& gp) {
  const MatrixGroup& g = *gp;
  if (!g.has_table()) throw std::invalid_argument("character table needs a multiplication table");
  const int order = g.order();
  const int e = g.exponent();
  const ClassData d = class_data(g, e);
  const std::size_t r = d.reps.size();
  const auto a = class_coefficients(g, d);

  // Degrees are at most sqrt|G|; p > 2 floor(sqrt|G|) makes the square root
  // below unambiguous. p = 1 mod e gives all e-th roots of unity in F_p.
  const auto bound = static_cast<std::uint32_t>(2 * static_cast<int>(std::sqrt(static_cast<double>(order))));
  std::uint32_t p = static_cast<std::uint32_t>(e) + 1;
  std::optional<std::vector<Row>> vecs;
  for (int attempt = 0; attempt < 200; ++attempt, p += static_cast<std::uint32_t>(e)) {
    while (!kn::is_prime(p) || p <= bound) p += static_cast<std::uint32_t>(e);
    if (p >= kn::kMaxModulus) break;
    vecs = split_eigenspaces(a, p);
    if (vecs) break;
  }
  if (!vecs) throw std::logic_error("no splitting prime found for " + g.name());

  CharTable t;
  t.group = gp;
  t.class_reps = d.reps;
  t.class_sizes = d.sizes;
  t.prime = p;
  t.conductor = working_conductor(g);
  const std::uint32_t z = kn::pow_mod(primitive_root(p), (p - 1) / static_cast<std::uint32_t>(e), p);
  const std::uint32_t inv_e = kn::inv_mod(static_cast<std::uint32_t>(e), p);
  const std::uint32_t order_mod = static_cast<std::uint32_t>(order) % p;

  for (auto& w : *vecs) {
    kn::scale_mod(w, kn::inv_mod(w[static_cast<std::size_t>(d.identity_class)], p), p);
    std::uint32_t s = 0;
    for (std::size_t l = 0; l < r; ++l) {
      const std::uint32_t term = kn::mul_mod(w[l], w[static_cast<std::size_t>(d.inverse_class[l])], p);
      s = (s + kn::mul_mod(term, kn::inv_mod(static_cast<std::uint32_t>(d.sizes[l]) % p, p), p)) % p;
    }
    const std::uint32_t deg2 = kn::mul_mod(order_mod, kn::inv_mod(s, p), p);
    std::uint32_t deg = 0;
    for (std::uint32_t c = 1; c <= p / 2; ++c)
      if (kn::mul_mod(c, c, p) == deg2) {
        deg = c;
        break;
      }
    if (deg == 0) throw std::logic_error("degree is not a square mod p");
    Row chi(r);
    for (std::size_t l = 0; l < r; ++l)
      chi[l] = kn::mul_mod(kn::mul_mod(w[l], deg, p), kn::inv_mod(static_cast<std::uint32_t>(d.sizes[l]) % p, p), p);
    // Eigenvalue multiplicities of rho(g): m_k = (1/e) sum_t chi(g^t) z^(-kt).
    ClassFunction values;
    for (std::size_t l = 0; l < r; ++l) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(e), Rational(0));
      std::uint32_t total = 0;
      for (int k = 0; k < e; ++k) {
        std::uint32_t m = 0;
        const std::uint32_t zk = kn::inv_mod(kn::pow_mod(z, static_cast<std::uint64_t>(k), p), p);
        std::uint32_t zkt = 1;
        for (int tt = 0; tt < e; ++tt) {
          m = (m + kn::mul_mod(chi[static_cast<std::size_t>(d.power[l][static_cast<std::size_t>(tt)])], zkt, p)) % p;
          zkt = kn::mul_mod(zkt, zk, p);
        }
        m = kn::mul_mod(m, inv_e, p);
        if (m > deg) throw std::logic_error("eigenvalue multiplicity out of range while lifting characters");
        coeffs[static_cast<std::size_t>(k)] = m;
        total += m;
      }
      if (total != deg) throw std::logic_error("eigenvalue multiplicities do not add up to the degree");
      values.push_back(CycloNum::from_coeffs(std::move(coeffs), e).lift(t.conductor));
    }
    t.chars.push_back(std::move(values));
    t.dims.push_back(static_cast<int>(deg));
  }

  std::vector<std::size_t> idx(t.chars.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(t.chars[i].begin(), t.chars[i].end(), [](const CycloNum& v) { return v.is_one(); });
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    if (t.dims[x] != t.dims[y]) return t.dims[x] < t.dims[y];
    return compare_rows(t.chars[x], t.chars[y]) < 0;
  });
  CharTable sorted = t;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    sorted.chars[i] = t.chars[idx[i]];
    sorted.dims[i] = t.dims[idx[i]];
  }
  sorted.trivial_index = 0;

  int sum = 0;
  for (int dim : sorted.dims) sum += dim * dim;
  if (sum != order) throw std::logic_error("sum of squared degrees differs from the group order");
  for (int i = 0; i < sorted.size(); ++i)
    for (int j = i; j < sorted.size(); ++j) {
      const CycloNum ip = inner_product(sorted, sorted.chars[static_cast<std::size_t>(i)],
                                        sorted.chars[static_cast<std::size_t>(j)]);
      if (!(i == j ? ip.is_one() : ip.is_zero()))
        throw std::logic_error("character table of " + g.name() + " fails row orthogonality");
    }
  return sorted;
}

ClassFunction natural_character(const MatrixGroup& g) {
  ClassFunction chi;
  for (const auto& cls : g.classes()) chi.push_back(g.matrix(cls.front()).trace());
  return chi;
}

ClassFunction regular_character(const MatrixGroup& g) {
  ClassFunction chi(g.classes().size(), CycloNum(0));
  chi[static_cast<std::size_t>(g.class_of(g.identity()))] = CycloNum(g.order());
  return chi;
}

ClassFunction character_of(const MatrixGroup& g, const std::vector<Mat>& action) {
  ClassFunction chi;
  for (const auto& cls : g.classes()) chi.push_back(action[static_cast<std::size_t>(cls.front())].trace());
  return chi;
}

CycloNum inner_product(const CharTable& t, const ClassFunction& a, const ClassFunction& b) {
  CycloNum s;
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l].is_zero() || b[l].is_zero()) continue;
    s += CycloNum(t.class_sizes[l]) * a[l] * b[l].conj();
  }
  return s * CycloNum(Rational(1, t.group->order()));
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
  return c;
}

std::vector<int> decompose(const ClassFunction& chi, const CharTable& t) {
  std::vector<int> m;
  int total = 0;
  for (int i = 0; i < t.size(); ++i) {
    const CycloNum ip = inner_product(t, chi, t.chars[static_cast<std::size_t>(i)]);
    if (!ip.is_rational() || ip.rational().get_den() != 1 || ip.rational() < 0)
      throw NotACharacter("class function has multiplicity " + ip.to_string() + " on character " +
                          std::to_string(i));
    const int v = static_cast<int>(ip.rational().get_num().get_si());
    m.push_back(v);
    total += v * t.dims[static_cast<std::size_t>(i)];
  }
  const CycloNum at_e = chi[static_cast<std::size_t>(t.group->class_of(t.group->identity()))];
  if (!(at_e == CycloNum(total))) throw NotACharacter("multiplicities do not account for the degree");
  return m;
}

Purity classify_pure_binary(const CharTable& binary, const CharTable& quotient, const QuotientMap& q) {
  const MatrixGroup& gt = *binary.group;
  const MatrixGroup& g = *quotient.group;
  const int neg = gt.negative_identity();
  if (neg < 0) throw std::invalid_argument("group has no -I");
  const std::size_t neg_class = static_cast<std::size_t>(gt.class_of(neg));
  const std::size_t id_class = static_cast<std::size_t>(gt.class_of(gt.identity()));
  Purity out;
  std::vector<bool> used(static_cast<std::size_t>(quotient.size()), false);
  for (const auto& chi : binary.chars) {
    const bool pure = chi[neg_class] == chi[id_class];
    out.pure.push_back(pure);
    if (!pure) {
      out.quotient_index.push_back(-1);
      continue;
    }
    // chi read on G: value at a class of G taken from any preimage.
    ClassFunction pushed(g.classes().size());
    for (std::size_t l = 0; l < g.classes().size(); ++l) {
      const int target = g.classes()[l].front();
      int pre = -1;
      for (int a = 0; a < gt.order() && pre < 0; ++a)
        if (q.element_map[static_cast<std::size_t>(a)] == target) pre = a;
      pushed[l] = chi[static_cast<std::size_t>(gt.class_of(pre))];
    }
    int match = -1;
    for (int i = 0; i < quotient.size() && match < 0; ++i)
      if (!used[static_cast<std::size_t>(i)] && quotient.chars[static_cast<std::size_t>(i)] == pushed) match = i;
    if (match < 0) throw std::logic_error("pure character of " + gt.name() + " is not a character of " + g.name());
    used[static_cast<std::size_t>(match)] = true;
    out.quotient_index.push_back(match);
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw std::logic_error("pure characters of " + gt.name() + " miss part of Irr(" + g.name() + ")");
  return out;
}

std::vector<std::string> character_labels(const CharTable& t, const Purity* purity) {
  std::vector<std::string> labels;
  int pure_count = 0, binary_count = 0;
  for (int i = 0; i < t.size(); ++i) {
    if (i == t.trivial_index) {
      labels.push_back("chi0");
      continue;
    }
    if (purity && !purity->pure[static_cast<std::size_t>(i)])
      labels.push_back("chi~" + std::to_string(++binary_count));
    else
      labels.push_back("chi" + std::to_string(++pure_count));
  }
  return labels;
}

std::optional<Mat> equivariant_isomorphism(const MatrixModule& u, const MatrixModule& w, const MatrixGroup& g,
                                           unsigned seed) {
  if (u.dim() != w.dim() || u.dim() == 0) return std::nullopt;
  const int n = u.dim();
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Mat t0(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t0(i, j) = CycloNum(static_cast<int>(rng() % 7) - 3);
    Mat avg(n, n);
    for (int x = 0; x < g.order(); ++x)
      avg = avg + w.action[static_cast<std::size_t>(x)] * t0 * u.action[static_cast<std::size_t>(g.inverse(x))];
    if (rank(avg) != n) continue;
    CycloNum lead;
    for (int i = 0; i < n && lead.is_zero(); ++i)
      for (int j = 0; j < n && lead.is_zero(); ++j) lead = avg(i, j);
    avg *= lead.inv();
    return avg;
  }
  return std::nullopt;
}

}  // namespace mckay
