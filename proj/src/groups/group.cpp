#include "mckay/groups/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mckay {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

int matrix_conductor(const Mat& m) {
  int n = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) n = std::lcm(n, m(i, j).conductor());
  return n;
}

Mat lift_uniform(const Mat& m, int conductor) { return m.lift(conductor); }

}  // namespace

std::string kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::kCyclic: return "cyclic";
    case GroupKind::kDihedral: return "dihedral";
    case GroupKind::kTetrahedral: return "tetrahedral";
    case GroupKind::kOctahedral: return "octahedral";
    case GroupKind::kIcosahedral: return "icosahedral";
  }
  return "?";
}

GroupKind parse_kind(const std::string& text) {
  for (GroupKind k : {GroupKind::kCyclic, GroupKind::kDihedral, GroupKind::kTetrahedral, GroupKind::kOctahedral,
                      GroupKind::kIcosahedral})
    if (text == kind_name(k)) return k;
  throw std::invalid_argument("unknown group kind '" + text + "'");
}

int GroupSpec::binary_order() const {
  switch (kind) {
    case GroupKind::kCyclic: return 2 * n;
    case GroupKind::kDihedral: return 4 * n;
    case GroupKind::kTetrahedral: return 24;
    case GroupKind::kOctahedral: return 48;
    case GroupKind::kIcosahedral: return 120;
  }
  return 0;
}

int GroupSpec::default_conductor() const {
  switch (kind) {
    case GroupKind::kCyclic:
    case GroupKind::kDihedral: return 4 * n;
    case GroupKind::kTetrahedral: return 4;
    case GroupKind::kOctahedral: return 8;
    case GroupKind::kIcosahedral: return 20;
  }
  return 1;
}

std::string GroupSpec::label(bool binary) const {
  const std::string t = binary ? "~" : "";
  switch (kind) {
    case GroupKind::kCyclic: return "C" + t + std::to_string(n);
    case GroupKind::kDihedral: return "D" + t + std::to_string(n);
    case GroupKind::kTetrahedral: return "T" + t;
    case GroupKind::kOctahedral: return "O" + t;
    case GroupKind::kIcosahedral: return "I" + t;
  }
  return "?";
}

std::size_t MatrixGroup::matrix_hash(const Mat& m) {
  std::size_t h = static_cast<std::size_t>(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) h = mix(h, m(i, j).hash());
  return h;
}

void MatrixGroup::index_elements() {
  lookup_.clear();
  lookup_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    elements_[i].index = static_cast<int>(i);
    lookup_.emplace(matrix_hash(elements_[i].matrix), static_cast<int>(i));
  }
}

int MatrixGroup::find(const Mat& m) const {
  const Mat probe = m.lift(conductor_);
  auto [lo, hi] = lookup_.equal_range(matrix_hash(probe));
  for (auto it = lo; it != hi; ++it)
    if (elements_[static_cast<std::size_t>(it->second)].matrix == probe) return it->second;
  return -1;
}

int MatrixGroup::mul(int a, int b) const {
  if (has_table()) return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  const int r = find(matrix(a) * matrix(b));
  if (r < 0) throw std::logic_error("product left the group " + name_);
  return r;
}

int MatrixGroup::negative_identity() const {
  Mat m = Mat::identity(dim());
  m *= CycloNum(-1);
  return find(m);
}

int MatrixGroup::element_order(int element) const {
  int k = 1;
  for (int x = element; x != identity(); x = mul(x, element)) ++k;
  return k;
}

int MatrixGroup::exponent() const {
  int e = 1;
  for (int i = 0; i < order(); ++i) e = std::lcm(e, element_order(i));
  return e;
}

void MatrixGroup::compute_classes() {
  const int n = order();
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (inverse_[static_cast<std::size_t>(a)] >= 0) continue;
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity()) {
        inverse_[static_cast<std::size_t>(a)] = b;
        inverse_[static_cast<std::size_t>(b)] = a;
        break;
      }
  }
  classes_.clear();
  class_of_.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(classes_.size());
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) {
      const int y = mul(mul(g, x), inverse(g));
      if (class_of_[static_cast<std::size_t>(y)] < 0) {
        class_of_[static_cast<std::size_t>(y)] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

MatrixGroup MatrixGroup::generate(const std::vector<Mat>& generators, std::size_t max_order, std::string name) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  int cond = 1;
  for (const auto& g : generators) cond = std::lcm(cond, matrix_conductor(g));
  std::vector<Mat> gens;
  for (const auto& g : generators) gens.push_back(lift_uniform(g, cond));

  MatrixGroup grp;
  grp.name_ = std::move(name);
  grp.conductor_ = cond;
  const int d = gens[0].rows();
  grp.elements_.push_back({Mat::identity(d).lift(cond), 0});
  grp.lookup_.emplace(matrix_hash(grp.elements_[0].matrix), 0);
  std::vector<int> parent{-1}, via{-1};
  std::vector<std::vector<int>> right(gens.size());
  for (std::size_t i = 0; i < grp.elements_.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Mat prod = (grp.elements_[i].matrix * gens[s]).lift(cond);
      int j = grp.find(prod);
      if (j < 0) {
        if (grp.elements_.size() >= max_order)
          throw std::runtime_error("closure of " + grp.name_ + " exceeds " + std::to_string(max_order) +
                                   " elements; generators are not of finite order as expected");
        j = static_cast<int>(grp.elements_.size());
        grp.lookup_.emplace(matrix_hash(prod), j);
        grp.elements_.push_back({std::move(prod), j});
        parent.push_back(static_cast<int>(i));
        via.push_back(static_cast<int>(s));
      }
      right[s].push_back(j);
    }
  }
  // Every element b is parent(b) * gen(b), so row a of the table follows from
  // the right-multiplication maps alone.
  const std::size_t n = grp.elements_.size();
  grp.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    grp.table_[a * n] = static_cast<int>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const int prev = grp.table_[a * n + static_cast<std::size_t>(parent[b])];
      grp.table_[a * n + b] = right[static_cast<std::size_t>(via[b])][static_cast<std::size_t>(prev)];
    }
  }
  grp.compute_classes();
  return grp;
}

MatrixGroup MatrixGroup::from_elements(std::vector<Mat> elements, std::string name, bool with_table) {
  if (elements.empty()) throw std::invalid_argument("empty element list");
  int cond = 1;
  for (const auto& m : elements) cond = std::lcm(cond, matrix_conductor(m));
  MatrixGroup grp;
  grp.name_ = std::move(name);
  grp.conductor_ = cond;
  for (auto& m : elements) grp.elements_.push_back({m.lift(cond), 0});
  grp.index_elements();
  if (grp.elements_[0].matrix != Mat::identity(grp.dim()).lift(cond))
    throw std::invalid_argument("first element must be the identity");
  if (with_table) {
    const std::size_t n = grp.elements_.size();
    std::vector<int> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const int r = grp.find(grp.elements_[a].matrix * grp.elements_[b].matrix);
        if (r < 0) throw std::invalid_argument("element list of " + grp.name_ + " is not closed");
        table[a * n + b] = r;
      }
    grp.table_ = std::move(table);
    grp.compute_classes();
  }
  return grp;
}

MatrixGroup MatrixGroup::lift(int conductor) const {
  if (conductor == conductor_) return *this;
  MatrixGroup g = *this;
  g.conductor_ = conductor;
  for (auto& e : g.elements_) e.matrix = e.matrix.lift(conductor);
  g.index_elements();
  return g;
}

Mat Quaternion::to_su2(int conductor) const {
  const CycloNum i = root_of_unity(1, 4);
  Mat m(2, 2);
  m(0, 0) = a + i * b;
  m(0, 1) = c + i * d;
  m(1, 0) = -c + i * d;
  m(1, 1) = a - i * b;
  return m.lift(conductor);
}

Quaternion Quaternion::from_su2(const Mat& m) {
  const CycloNum i = root_of_unity(1, 4);
  const CycloNum half(Rational(1, 2));
  const CycloNum u = m(0, 0), v = m(0, 1);
  return {half * (u + u.conj()), half * (u - u.conj()) * (-i), half * (v + v.conj()), half * (v - v.conj()) * (-i)};
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d, p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b, p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

namespace {

std::vector<Quaternion> generator_quaternions(const GroupSpec& spec) {
  const CycloNum zero(0), one(1), half(Rational(1, 2));
  const Quaternion qi{zero, one, zero, zero}, qj{zero, zero, one, zero};
  const Quaternion omega{half, half, half, half};
  switch (spec.kind) {
    case GroupKind::kCyclic:
    case GroupKind::kDihedral: {
      // xi = zeta_{2n} = cos + i sin, with cos = (xi + xi^-1)/2 and i sin = (xi - xi^-1)/2.
      const CycloNum xi = root_of_unity(1, 2 * spec.n), xinv = root_of_unity(-1, 2 * spec.n);
      const CycloNum i = root_of_unity(1, 4);
      const Quaternion rot{half * (xi + xinv), -half * i * (xi - xinv), zero, zero};
      if (spec.kind == GroupKind::kCyclic) return {rot};
      return {rot, qj};
    }
    case GroupKind::kTetrahedral: return {qi, qj, omega};
    case GroupKind::kOctahedral: {
      const CycloNum s = (root_of_unity(1, 8) + root_of_unity(7, 8)).inv();  // 1/sqrt2
      return {qi, qj, omega, Quaternion{s, s, zero, zero}};
    }
    case GroupKind::kIcosahedral: {
      const CycloNum phinv = root_of_unity(4, 20) + root_of_unity(16, 20);  // (sqrt5 - 1)/2
      const CycloNum phi = phinv + one;
      return {omega, Quaternion{half * phi, half * phinv, half, zero}};
    }
  }
  return {};
}

}  // namespace

MatrixGroup build_binary_polyhedral(const GroupSpec& spec, int conductor) {
  if ((spec.kind == GroupKind::kCyclic || spec.kind == GroupKind::kDihedral) && spec.n < 1)
    throw std::invalid_argument("group index must be >= 1");
  const int base = spec.default_conductor();
  if (conductor == 0) conductor = base;
  if (conductor % base != 0)
    throw std::invalid_argument("conductor " + std::to_string(conductor) + " does not contain the entries of " +
                                spec.label(true) + " (need a multiple of " + std::to_string(base) + ")");
  std::vector<Mat> gens;
  for (const auto& q : generator_quaternions(spec)) gens.push_back(q.to_su2(conductor));
  const std::size_t expected = static_cast<std::size_t>(spec.binary_order());
  MatrixGroup g = MatrixGroup::generate(gens, expected, spec.label(true));
  if (static_cast<std::size_t>(g.order()) != expected)
    throw std::runtime_error("closure of " + spec.label(true) + " has order " + std::to_string(g.order()) +
                             ", expected " + std::to_string(expected));
  return g;
}

Mat quotient_matrix(const Mat& g) {
  // Row r: coefficients of m_r(gX) in (x^2, y^2, xy) for m = (x^2, y^2, xy).
  const CycloNum &p = g(0, 0), &q = g(0, 1), &r = g(1, 0), &s = g(1, 1);
  Mat n(3, 3);
  n(0, 0) = p * p;
  n(0, 1) = q * q;
  n(0, 2) = CycloNum(2) * p * q;
  n(1, 0) = r * r;
  n(1, 1) = s * s;
  n(1, 2) = CycloNum(2) * r * s;
  n(2, 0) = p * r;
  n(2, 1) = q * s;
  n(2, 2) = p * s + q * r;
  return n;
}

std::pair<GroupPtr, QuotientMap> build_polyhedral_quotient(const GroupPtr& gt) {
  if (gt->dim() != 2) throw std::invalid_argument("quotient needs a 2x2 matrix group");
  const int neg = gt->negative_identity();
  if (neg < 0) throw std::invalid_argument(gt->name() + " does not contain -I; not a binary group");
  QuotientMap q;
  q.source = gt;
  std::vector<Mat> images;
  std::vector<int> rep;
  std::unordered_multimap<std::size_t, int> seen;
  auto h = [](const Mat& m) {
    std::size_t v = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v = mix(v, m(i, j).hash());
    return v;
  };
  for (int i = 0; i < gt->order(); ++i) {
    Mat m = quotient_matrix(gt->matrix(i)).lift(gt->conductor());
    const std::size_t key = h(m);
    int found = -1;
    auto [lo, hi] = seen.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (images[static_cast<std::size_t>(it->second)] == m) found = it->second;
    if (found < 0) {
      found = static_cast<int>(images.size());
      seen.emplace(key, found);
      images.push_back(std::move(m));
      rep.push_back(i);
    }
    q.element_map.push_back(found);
  }
  std::string name = gt->name();
  if (auto pos = name.find('~'); pos != std::string::npos) name.erase(pos, 1);
  MatrixGroup target = MatrixGroup::from_elements(std::move(images), name, false);
  // Table through the homomorphism: pi(a) pi(b) = pi(ab).
  const std::size_t n = static_cast<std::size_t>(target.order());
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = q.element_map[static_cast<std::size_t>(gt->mul(rep[a], rep[b]))];
  target.table_ = std::move(table);
  target.compute_classes();
  for (int i = 0; i < gt->order(); ++i)
    if (q.element_map[static_cast<std::size_t>(i)] == target.identity()) q.kernel.push_back(i);
  q.target = std::make_shared<const MatrixGroup>(std::move(target));
  return {q.target, q};
}

Mat bipolyhedral_matrix(const Quaternion& p, const Quaternion& q) {
  const CycloNum zero(0), one(1);
  const Quaternion basis[4] = {{one, zero, zero, zero}, {zero, one, zero, zero}, {zero, zero, one, zero},
                               {zero, zero, zero, one}};
  const Quaternion qbar = q.conj();
  Mat m(4, 4);
  for (int col = 0; col < 4; ++col) {
    const Quaternion v = p * basis[col] * qbar;
    m(0, col) = v.a;
    m(1, col) = v.b;
    m(2, col) = v.c;
    m(3, col) = v.d;
  }
  return m;
}

MatrixGroup build_bipolyhedral(const MatrixGroup& gt) {
  if (gt.dim() != 2) throw std::invalid_argument("bipolyhedral construction needs a 2x2 group");
  std::vector<Quaternion> qs;
  for (int i = 0; i < gt.order(); ++i) qs.push_back(Quaternion::from_su2(gt.matrix(i)));
  // Left and right multiplication matrices; x -> p x q^-1 is L_p R_{q^-1}.
  std::vector<Mat> left, right;
  const CycloNum zero(0), one(1);
  const Quaternion unit{one, zero, zero, zero};
  for (const auto& q : qs) {
    left.push_back(bipolyhedral_matrix(q, unit).lift(gt.conductor()));
    right.push_back(bipolyhedral_matrix(unit, q).lift(gt.conductor()));
  }
  std::vector<Mat> elems;
  std::unordered_multimap<std::size_t, int> seen;
  for (int a = 0; a < gt.order(); ++a)
    for (int b = 0; b < gt.order(); ++b) {
      Mat m = (left[static_cast<std::size_t>(a)] * right[static_cast<std::size_t>(b)]).lift(gt.conductor());
      std::size_t key = 4;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) key = mix(key, m(i, j).hash());
      bool dup = false;
      auto [lo, hi] = seen.equal_range(key);
      for (auto it = lo; it != hi && !dup; ++it) dup = elems[static_cast<std::size_t>(it->second)] == m;
      if (dup) continue;
      seen.emplace(key, static_cast<int>(elems.size()));
      elems.push_back(std::move(m));
    }
  std::string name = "sigma(" + gt.name() + "x" + gt.name() + ")";
  return MatrixGroup::from_elements(std::move(elems), name, false);
}

int working_conductor(const MatrixGroup& g) { return std::lcm(g.conductor(), g.exponent()); }

}  // namespace mckay
