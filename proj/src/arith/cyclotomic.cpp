#include "mckay/arith/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace mckay {

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return q;
}

std::vector<long> compute_phi(int n);

struct PhiCache {
  std::shared_mutex mu;
  std::map<int, std::unique_ptr<std::vector<long>>> polys;
  std::map<int, std::unique_ptr<CyclotomicField>> fields;
};

PhiCache& cache() {
  static PhiCache c;
  return c;
}

std::optional<std::filesystem::path> disk_cache_dir() {
  const char* dir = std::getenv("MCKAY_CYCLO_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

std::optional<std::vector<long>> load_phi(int n) {
  auto dir = disk_cache_dir();
  if (!dir) return std::nullopt;
  std::ifstream in(*dir / ("phi_" + std::to_string(n) + ".txt"));
  if (!in) return std::nullopt;
  std::vector<long> c;
  long v;
  while (in >> v) c.push_back(v);
  if (static_cast<int>(c.size()) != euler_phi(n) + 1 || c.back() != 1) return std::nullopt;
  return c;
}

void store_phi(int n, const std::vector<long>& c) {
  auto dir = disk_cache_dir();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  std::ofstream out(*dir / ("phi_" + std::to_string(n) + ".txt"));
  for (long v : c) out << v << ' ';
  out << '\n';
}

std::vector<long> compute_phi(int n) {
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(num, cyclotomic_polynomial(d));
  }
  return num;
}

// Solve A x = b over Q; A is rows x cols. Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                    std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial index must be >= 1");
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.polys.find(n);
    if (it != c.polys.end()) return *it->second;
  }
  std::vector<long> phi;
  if (n == 1) {
    phi = {-1, 1};
  } else if (auto loaded = load_phi(n)) {
    phi = std::move(*loaded);
  } else {
    phi = compute_phi(n);
    store_phi(n, phi);
  }
  std::unique_lock lock(c.mu);
  auto [it, inserted] = c.polys.try_emplace(n, nullptr);
  if (inserted) it->second = std::make_unique<std::vector<long>>(std::move(phi));
  return *it->second;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), phi_(cyclotomic_polynomial(conductor)) {
  degree_ = static_cast<int>(phi_.size()) - 1;
  // t^d = -sum phi_i t^i, then successive shifts.
  std::vector<long> cur(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) cur[static_cast<std::size_t>(i)] = -phi_[static_cast<std::size_t>(i)];
  for (int k = 0; k + 1 < degree_; ++k) {
    high_powers_.push_back(cur);
    std::vector<long> next(static_cast<std::size_t>(degree_), 0);
    const long top = cur.back();
    for (int i = degree_ - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i < degree_; ++i) next[static_cast<std::size_t>(i)] -= top * phi_[static_cast<std::size_t>(i)];
    cur = std::move(next);
  }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.fields.find(conductor);
    if (it != c.fields.end()) return *it->second;
  }
  auto field = std::unique_ptr<CyclotomicField>(new CyclotomicField(conductor));
  std::unique_lock lock(c.mu);
  auto [it, inserted] = c.fields.try_emplace(conductor, nullptr);
  if (inserted) it->second = std::move(field);
  return *it->second;
}

CycloNum CycloNum::zero(int conductor) {
  const CyclotomicField* f = &CyclotomicField::get(conductor);
  return CycloNum(f, std::vector<Rational>(static_cast<std::size_t>(f->degree()), Rational(0)));
}

CycloNum::CycloNum(const Rational& value, int conductor) : CycloNum(zero(conductor)) {
  c_[0] = value;
  c_[0].canonicalize();
}

void CycloNum::reduce_in_place(std::vector<Rational>& prod) const {
  const auto& phi = field_->phi();
  const std::size_t d = phi.size() - 1;
  Rational t;
  for (std::size_t k = prod.size(); k-- > d;) {
    if (sgn(prod[k]) == 0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      if (phi[i] == 0) continue;
      t = prod[k] * phi[i];
      prod[k - d + i] -= t;
    }
    prod[k] = 0;
  }
  prod.resize(d);
}

CycloNum CycloNum::from_coeffs(std::vector<Rational> coeffs, int conductor) {
  CycloNum r = zero(conductor);
  if (coeffs.size() < r.c_.size()) coeffs.resize(r.c_.size(), Rational(0));
  for (auto& q : coeffs) q.canonicalize();
  r.reduce_in_place(coeffs);
  r.c_ = std::move(coeffs);
  return r;
}

CycloNum CycloNum::root_of_unity(long k, int conductor) {
  const long n = conductor;
  long e = ((k % n) + n) % n;
  std::vector<Rational> v(static_cast<std::size_t>(std::max<long>(e + 1, 1)), Rational(0));
  v[static_cast<std::size_t>(e)] = 1;
  return from_coeffs(std::move(v), conductor);
}

CycloNum root_of_unity(long k, int conductor) { return CycloNum::root_of_unity(k, conductor); }

bool CycloNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool CycloNum::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool CycloNum::is_one() const { return c_[0] == 1 && is_rational(); }

Rational CycloNum::rational() const {
  if (!is_rational()) throw std::logic_error("CycloNum is not rational: " + to_string());
  return c_[0];
}

CycloNum CycloNum::lift(int conductor) const {
  const int n = this->conductor();
  if (conductor == n) return *this;
  if (conductor % n != 0)
    throw std::invalid_argument("cannot lift conductor " + std::to_string(n) + " to " + std::to_string(conductor));
  if (is_rational()) return CycloNum(c_[0], conductor);
  const std::size_t step = static_cast<std::size_t>(conductor / n);
  std::vector<Rational> v(step * c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  return from_coeffs(std::move(v), conductor);
}

std::optional<CycloNum> CycloNum::lower(int conductor) const {
  if (conductor == this->conductor()) return *this;
  if (is_rational()) return CycloNum(c_[0], conductor);
  const int big = std::lcm(conductor, this->conductor());
  const CycloNum target = lift(big);
  const int dn = euler_phi(conductor);
  const std::size_t db = target.c_.size();
  std::vector<std::vector<Rational>> a(db, std::vector<Rational>(static_cast<std::size_t>(dn)));
  const int step = big / conductor;
  for (int j = 0; j < dn; ++j) {
    const CycloNum col = root_of_unity(static_cast<long>(j) * step, big);
    for (std::size_t i = 0; i < db; ++i) a[i][static_cast<std::size_t>(j)] = col.c_[i];
  }
  auto x = solve_rational(std::move(a), target.c_);
  if (!x) return std::nullopt;
  CycloNum r = zero(conductor);
  r.c_ = std::move(*x);
  return r;
}

CycloNum CycloNum::minimal() const {
  const int n = conductor();
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (auto r = lower(d)) return *r;
  }
  return *this;
}

CycloNum CycloNum::galois(long k) const {
  const long n = conductor();
  if (std::gcd(k, n) != 1) throw std::invalid_argument("galois exponent must be a unit mod the conductor");
  if (is_rational()) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const long e = ((static_cast<long>(i) * k) % n + n) % n;
    v[static_cast<std::size_t>(e)] += c_[i];
  }
  return from_coeffs(std::move(v), static_cast<int>(n));
}

CycloNum CycloNum::conj() const { return galois(conductor() - 1 == 0 ? 1 : conductor() - 1); }

CycloNum CycloNum::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycloNum(Rational(1) / c_[0], conductor());
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  CycloNum col = *this;
  const CycloNum z = root_of_unity(1, conductor());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
    col *= z;
  }
  std::vector<Rational> e(d, Rational(0));
  e[0] = 1;
  auto x = solve_rational(std::move(m), std::move(e));
  CycloNum r = zero(conductor());
  r.c_ = std::move(*x);
  return r;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

namespace {
bool degree_one(const CycloNum& a) { return a.field().degree() == 1; }
}  // namespace

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (field_ == o.field_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  if (degree_one(o)) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (degree_one(*this)) {
    Rational r = c_[0];
    *this = o;
    c_[0] += r;
    return *this;
  }
  const int big = std::lcm(conductor(), o.conductor());
  *this = lift(big);
  return *this += o.lift(big);
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  if (field_ == o.field_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  return *this += -o;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
  for (auto& v : c_) v *= r;
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  *this = *this * o;
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.field_ != b.field_) {
    if (degree_one(b)) {
      CycloNum r = a;
      r *= b.c_[0];
      return r;
    }
    if (degree_one(a)) {
      CycloNum r = b;
      r *= a.c_[0];
      return r;
    }
    const int big = std::lcm(a.conductor(), b.conductor());
    return a.lift(big) * b.lift(big);
  }
  if (b.is_rational()) {
    CycloNum r = a;
    r *= b.c_[0];
    return r;
  }
  if (a.is_rational()) {
    CycloNum r = b;
    r *= a.c_[0];
    return r;
  }
  const std::size_t d = a.c_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  Rational t;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      t = a.c_[i] * b.c_[j];
      prod[i + j] += t;
    }
  }
  CycloNum r(a.field_, {});
  r.reduce_in_place(prod);
  r.c_ = std::move(prod);
  return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  const int big = std::lcm(a.conductor(), b.conductor());
  return a.lift(big).c_ == b.lift(big).c_;
}

std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b) {
  if (a.field_ != b.field_) {
    const int big = std::lcm(a.conductor(), b.conductor());
    return a.lift(big) <=> b.lift(big);
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const int c = cmp(a.c_[i], b.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t CycloNum::hash() const {
  // Consistent with == only among values sharing a conductor.
  std::size_t h = static_cast<std::size_t>(conductor());
  for (const auto& v : c_) {
    h = mix(h, mpz_get_ui(v.get_num_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(v.get_num_mpz_t())) << 1));
    h = mix(h, mpz_get_ui(v.get_den_mpz_t()));
  }
  return h;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string CycloNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& v = c_[k];
    if (sgn(v) == 0) continue;
    const bool neg = sgn(v) < 0;
    const Rational mag = neg ? Rational(-v) : v;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z';
    if (k > 1) out << '^' << k;
  }
  if (first) return "0";
  return out.str();
}

CycloNum CycloNum::parse(std::string_view text, int conductor) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");
  std::vector<Rational> acc;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cyclotomic literal '" + std::string(text) + "': " + why);
  };
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    Rational coef(1);
    bool have_coef = false;
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos > start) {
      try {
        coef = Rational(s.substr(start, pos - start));
      } catch (const std::invalid_argument&) {
        fail("bad rational");
      }
      coef.canonicalize();
      have_coef = true;
    }
    long power = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_coef) fail("dangling '*'");
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t ps = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (ps == pos) fail("missing exponent");
        power = std::stol(s.substr(ps, pos - ps));
      }
    } else if (!have_coef) {
      fail("expected a term");
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail("unexpected character");
    if (acc.size() <= static_cast<std::size_t>(power)) acc.resize(static_cast<std::size_t>(power) + 1, Rational(0));
    acc[static_cast<std::size_t>(power)] += sign * coef;
  }
  return from_coeffs(std::move(acc), conductor);
}

std::complex<double> CycloNum::approx() const {
  std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / conductor());
  std::complex<double> acc = 0, p = 1;
  for (const auto& v : c_) {
    acc += v.get_d() * p;
    p *= z;
  }
  return acc;
}

}  // namespace mckay
