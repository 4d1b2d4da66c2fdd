#include "mckay/polyideal/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mckay {

int Ring::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

std::string Ring::descriptor() const {
  auto chain = [&](int lo, int hi) {
    std::string s;
    for (int i = lo; i < hi; ++i) {
      if (i > lo) s += ">";
      s += vars[static_cast<std::size_t>(i)];
    }
    return s;
  };
  if (order == MonomialOrder::kDegRevLex) return "degrevlex(" + chain(0, nvars()) + ")";
  return "block(" + chain(0, block) + "|" + chain(block, nvars()) + ")";
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order, int block) {
  if (vars.empty() || vars.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("rings have between 1 and 5 variables");
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->order = order;
  r->block = block;
  return r;
}

const RingPtr& ring_a() {
  static const RingPtr r = make_ring({"x", "y"});
  return r;
}

const RingPtr& ring_b() {
  static const RingPtr r = make_ring({"a", "b", "c"});
  return r;
}

const RingPtr& ring_elimination() {
  static const RingPtr r = make_ring({"x", "y", "a", "b", "c"}, MonomialOrder::kBlockDegRevLex, 2);
  return r;
}

const RingPtr& ring_for_dim(int dim) {
  if (dim == 2) return ring_a();
  if (dim == 3) return ring_b();
  throw std::invalid_argument("no polynomial ring for dimension " + std::to_string(dim));
}

Monomial Monomial::var(int i, int power) {
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i)
    m.e[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)]);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i)
    m.e[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(i)]);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i)
    m.e[static_cast<std::size_t>(i)] = std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[static_cast<std::size_t>(i)] && o.e[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0;
  for (auto v : e) h = h * 131 + v;
  return h;
}

namespace {

int degrevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[static_cast<std::size_t>(i)];
    db += b.e[static_cast<std::size_t>(i)];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    const int x = a.e[static_cast<std::size_t>(i)], y = b.e[static_cast<std::size_t>(i)];
    if (x != y) return x < y ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Ring& r, const Monomial& a, const Monomial& b) {
  if (r.order == MonomialOrder::kDegRevLex) return degrevlex(a, b, 0, r.nvars());
  if (int c = degrevlex(a, b, 0, r.block); c != 0) return c;
  return degrevlex(a, b, r.block, r.nvars());
}

std::string monomial_to_string(const Ring& r, const Monomial& m) {
  std::string s;
  for (int i = 0; i < r.nvars(); ++i) {
    const int k = m.e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    if (!s.empty()) s += "*";
    s += r.vars[static_cast<std::size_t>(i)];
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> monomials_of_degree(const Ring& r, int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  const int n = r.nvars();
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      cur.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - k);
    }
    cur.e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return compare(r, a, b) > 0; });
  return out;
}

Poly Poly::constant(RingPtr ring, const CycloNum& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.t_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, int i) {
  Poly p(std::move(ring));
  p.t_.push_back({Monomial::var(i), CycloNum(1)});
  return p;
}

Poly Poly::term(RingPtr ring, const Monomial& m, const CycloNum& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.t_.push_back({m, c});
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : t_)
    if (t.m.degree() != t_.front().m.degree()) return false;
  return true;
}

CycloNum Poly::coeff(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.m == m) return t.c;
  return CycloNum(0);
}

void Poly::normalize() {
  const Ring& r = *ring_;
  std::sort(t_.begin(), t_.end(), [&](const Term& a, const Term& b) { return compare(r, a.m, b.m) > 0; });
  std::vector<Term> out;
  for (auto& t : t_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c.is_zero(); }), out.end());
  t_ = std::move(out);
}

namespace {

// Merge b * sign into a, both sorted decreasing.
std::vector<Term> merge(const Ring& r, const std::vector<Term>& a, const std::vector<Term>& b, bool negate) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = compare(r, a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, negate ? -b[j].c : b[j].c});
      ++j;
    } else {
      CycloNum s = negate ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!s.is_zero()) out.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_ring(const Poly& a, const Poly& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring() && a.ring()->vars != b.ring()->vars)
    throw std::invalid_argument("polynomials from different rings");
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_ring(*this, o);
  if (!ring_) ring_ = o.ring_;
  if (o.t_.empty()) return *this;
  t_ = merge(*ring_, t_, o.t_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(*this, o);
  if (!ring_) ring_ = o.ring_;
  if (o.t_.empty()) return *this;
  t_ = merge(*ring_, t_, o.t_, true);
  return *this;
}

Poly& Poly::operator*=(const CycloNum& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.t_) t.c = -t.c;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_ring(a, b);
  Poly p(a.ring_ ? a.ring_ : b.ring_);
  if (a.is_zero() || b.is_zero()) return p;
  p.t_.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) p.t_.push_back({x.m * y.m, x.c * y.c});
  p.normalize();
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
  return true;
}

Term Poly::pop_lead() {
  Term t = std::move(t_.front());
  t_.erase(t_.begin());
  return t;
}

Poly Poly::mul_term(const Monomial& m, const CycloNum& c) const {
  Poly p(ring_);
  if (c.is_zero()) return p;
  p.t_.reserve(t_.size());
  for (const auto& t : t_) p.t_.push_back({t.m * m, t.c * c});
  return p;
}

void Poly::sub_mul(const CycloNum& c, const Monomial& m, const Poly& g) {
  if (!ring_) ring_ = g.ring_;
  std::vector<Term> prod;
  prod.reserve(g.t_.size());
  for (const auto& t : g.t_) prod.push_back({t.m * m, t.c * c});
  t_ = merge(*ring_, t_, prod, true);
}

Poly Poly::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  Poly p = *this;
  p *= lc().inv();
  return p;
}

Poly Poly::lift(int conductor) const {
  Poly p = *this;
  for (auto& t : p.t_) t.c = t.c.lift(conductor);
  return p;
}

Poly Poly::remap(RingPtr target, const std::vector<int>& map) const {
  Poly p(std::move(target));
  for (const auto& t : t_) {
    Monomial m;
    for (int i = 0; i < ring_->nvars(); ++i) {
      const auto k = t.m.e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (map[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("variable dropped by remap");
      m.e[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = k;
    }
    p.t_.push_back({m, t.c});
  }
  p.normalize();
  return p;
}

std::string Poly::to_string(int conductor) const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : t_) {
    const bool unit_mono = t.m == Monomial{};
    const std::string mono = unit_mono ? "" : monomial_to_string(*ring_, t.m);
    CycloNum c = t.c;
    if (conductor > 0 && !c.is_rational()) c = c.lift(conductor);
    std::string sign = "+";
    std::string body;
    if (c.is_rational()) {
      Rational q = c.rational();
      if (q < 0) {
        sign = "-";
        q = -q;
      }
      if (unit_mono)
        body = rational_to_string(q);
      else if (q == 1)
        body = mono;
      else
        body = rational_to_string(q) + "*" + mono;
    } else {
      body = "(" + c.to_string() + ")";
      if (!unit_mono) body += "*" + mono;
    }
    if (first)
      s = (sign == "-" ? "-" : "") + body;
    else
      s += " " + sign + " " + body;
    first = false;
  }
  return s;
}

Poly Poly::parse(std::string_view text, RingPtr ring, int conductor) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) fail("empty");
  Poly p(ring);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    CycloNum coef(sign);
    Monomial m;
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (any) {
        if (s[pos] != '*') fail("expected '*'");
        ++pos;
      }
      if (pos >= s.size()) fail("dangling '*'");
      if (s[pos] == '(') {
        const std::size_t close = s.find(')', pos);
        if (close == std::string::npos) fail("unbalanced parenthesis");
        coef *= CycloNum::parse(s.substr(pos + 1, close - pos - 1), conductor);
        pos = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        const std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        Rational q;
        try {
          q = Rational(s.substr(start, pos - start));
        } catch (const std::invalid_argument&) {
          fail("bad rational");
        }
        q.canonicalize();
        coef *= q;
      } else {
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < ring->nvars(); ++i) {
          const auto& v = ring->vars[static_cast<std::size_t>(i)];
          if (s.compare(pos, v.size(), v) == 0 && v.size() > best_len) {
            best = i;
            best_len = v.size();
          }
        }
        if (best < 0) fail("unknown variable at '" + s.substr(pos) + "'");
        pos += best_len;
        int k = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          const std::size_t start = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (start == pos) fail("missing exponent");
          k = std::stoi(s.substr(start, pos - start));
        }
        m.e[static_cast<std::size_t>(best)] = static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(best)] + k);
      }
      any = true;
    }
    if (!any) fail("empty term");
    p += term(ring, m, coef);
  }
  return p;
}

}  // namespace mckay
