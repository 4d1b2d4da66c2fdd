#include "mckay/contraction/contraction.hpp"

#include <algorithm>
#include <set>

#include "mckay/polyideal/invariants.hpp"

namespace mckay {

namespace {

std::vector<int> support(const std::vector<int>& mult) {
  std::vector<int> s;
  for (std::size_t r = 0; r < mult.size(); ++r)
    for (int k = 0; k < mult[r]; ++k) s.push_back(static_cast<int>(r));
  return s;
}

}  // namespace

SideData& compute_side(SideData& side, const GroupSpec& spec, bool binary, const std::vector<ProjParam>& samples,
                       int degree_bound) {
  if (degree_bound <= 0) degree_bound = default_degree_bound(spec, binary);
  if (!side.coinv)
    side.coinv = std::make_shared<const CoinvariantAlgebra>(coinvariant_algebra(side.group, side.table, degree_bound));
  if (!samples.empty()) side.curves = exceptional_curves(*side.coinv, samples);
  return side;
}

TheoremSetup prepare_groups(const GroupSpec& spec, int conductor) {
  TheoremSetup s;
  s.spec = spec;
  s.binary.group = std::make_shared<const MatrixGroup>(build_binary_polyhedral(spec, conductor));
  auto [q, map] = build_polyhedral_quotient(s.binary.group);
  s.quotient.group = q;
  s.map = map;
  s.binary.table = std::make_shared<const CharTable>(character_table(s.binary.group));
  s.quotient.table = std::make_shared<const CharTable>(character_table(s.quotient.group));
  s.purity = classify_pure_binary(*s.binary.table, *s.quotient.table, s.map);
  s.binary.labels = character_labels(*s.binary.table, &s.purity);
  s.binary.pure = s.purity.pure;
  s.quotient.labels.assign(static_cast<std::size_t>(s.quotient.table->size()), "");
  s.quotient.pure.assign(static_cast<std::size_t>(s.quotient.table->size()), true);
  for (int r = 0; r < s.binary.table->size(); ++r) {
    const int qi = s.purity.quotient_index[static_cast<std::size_t>(r)];
    if (qi >= 0) s.quotient.labels[static_cast<std::size_t>(qi)] = s.binary.labels[static_cast<std::size_t>(r)];
  }
  s.quiver2d = mckay_quiver(*s.binary.table, &s.purity);
  s.quiver3d = mckay_quiver(*s.quotient.table, nullptr);
  return s;
}

TheoremSetup prepare_theorem(const GroupSpec& spec, const std::vector<ProjParam>& samples, int conductor,
                             std::pair<int, int> degree_bounds) {
  TheoremSetup s = prepare_groups(spec, conductor);
  s.samples = samples;
  compute_side(s.binary, spec, true, samples, degree_bounds.first);
  compute_side(s.quotient, spec, false, samples, degree_bounds.second);
  return s;
}

IdealGB contract_cluster(const MatrixGroup& binary, const MatrixGroup& quotient, const IdealGB& i, bool check_input) {
  if (check_input) {
    const auto r = is_cluster(binary, i);
    if (!r.cluster) throw std::invalid_argument("input is not a cluster: " + r.reason);
  }
  IdealGB j = preimage_sigma(i);
  const auto r = is_cluster(quotient, j);
  if (!r.cluster) throw ContractionFailure("contracted ideal " + j.to_string() + " is not a cluster: " + r.reason);
  if (contains(maximal_ideal(i.ring), i) && !contains(maximal_ideal(j.ring), j))
    throw ContractionFailure("support left the origin: " + j.to_string());
  return j;
}

CurveImage image_of_curve(const CurveFamily& fam, const MatrixGroup& binary, const MatrixGroup& quotient) {
  bool has0 = false, has1 = false;
  for (const auto& s : fam.samples) {
    if (s.param.q.is_zero()) has0 = true;
    if (s.param.p.is_zero()) has1 = true;
  }
  if (fam.samples.size() < 4 || !has0 || !has1)
    throw std::invalid_argument("need at least four samples including (1:0) and (0:1)");
  CurveImage out;
  for (const auto& s : fam.samples) out.images.push_back(contract_cluster(binary, quotient, s.ideal, false));
  int equal_pairs = 0, pairs = 0;
  std::string collisions;
  for (std::size_t a = 0; a < out.images.size(); ++a)
    for (std::size_t b = a + 1; b < out.images.size(); ++b) {
      ++pairs;
      if (out.images[a] == out.images[b]) {
        ++equal_pairs;
        collisions += " " + fam.samples[a].param.to_string() + "=" + fam.samples[b].param.to_string();
      }
    }
  if (equal_pairs == pairs)
    out.kind = ImageKind::kContracted;
  else if (equal_pairs == 0)
    out.kind = ImageKind::kMapped;
  else
    throw MixedImage("images neither constant nor injective; collisions:" + collisions);
  return out;
}

ContractionReport verify_contraction_theorem(const TheoremSetup& s) {
  ContractionReport rep;
  rep.group = s.spec.label(true);
  rep.quotient = s.spec.label(false);
  const MatrixGroup& gb = *s.binary.group;
  const MatrixGroup& gq = *s.quotient.group;
  const CharTable& tb = *s.binary.table;
  std::vector<bool> seen(static_cast<std::size_t>(tb.size()), false);
  std::set<int> targets;
  std::vector<std::pair<int, IdealGB>> points;
  for (const auto& a : s.binary.curves.anomalies) rep.notes.push_back("2D: " + a);
  for (const auto& a : s.quotient.curves.anomalies) rep.notes.push_back("3D: " + a);
  for (const auto& fam : s.binary.curves.families) {
    seen[static_cast<std::size_t>(fam.rho)] = true;
    CurveVerdict v;
    v.rho = fam.rho;
    v.label = s.binary.labels[static_cast<std::size_t>(fam.rho)];
    v.pure = s.purity.pure[static_cast<std::size_t>(fam.rho)];
    for (const auto& p : fam.samples) v.params.push_back(p.param.to_string());
    try {
      const CurveImage img = image_of_curve(fam, gb, gq);
      v.images = img.images;
      for (const auto& j : img.images) v.image_v.push_back(support(generator_module(j, *s.quotient.coinv)));
      if (v.pure) {
        v.target = s.purity.quotient_index[static_cast<std::size_t>(fam.rho)];
        v.verdict = img.kind == ImageKind::kMapped ? "mapped" : "contracted";
        v.pass = img.kind == ImageKind::kMapped;
        if (!v.pass) v.notes.push_back("pure curve contracted");
        for (std::size_t k = 0; k < fam.samples.size(); ++k) {
          const auto& iv = v.image_v[k];
          const bool on_target = std::find(iv.begin(), iv.end(), v.target) != iv.end();
          if (!on_target) {
            v.pass = false;
            v.notes.push_back("image at " + v.params[k] + " is off the target curve");
          }
          if (fam.samples[k].v_module.size() == 1 && iv != std::vector<int>{v.target}) {
            v.pass = false;
            v.notes.push_back("generic image at " + v.params[k] + " has extra generators");
          }
        }
        if (!targets.insert(v.target).second) {
          v.pass = false;
          v.notes.push_back("two pure curves reach the same family");
        }
      } else {
        v.verdict = img.kind == ImageKind::kContracted ? "contracted" : "mapped";
        v.pass = img.kind == ImageKind::kContracted;
        if (!v.pass) v.notes.push_back("binary curve not contracted");
        for (int nb : s.quiver2d.neighbours(fam.rho)) {
          const int qi = s.purity.quotient_index[static_cast<std::size_t>(nb)];
          if (qi >= 0) v.expected_v.push_back(qi);
        }
        std::sort(v.expected_v.begin(), v.expected_v.end());
        if (v.pass && v.image_v.front() != v.expected_v) {
          v.pass = false;
          v.notes.push_back("V of the image point differs from the pure neighbours");
        }
        if (v.pass) {
          for (const auto& [other, pt] : points)
            if (pt == img.images.front()) {
              v.pass = false;
              v.notes.push_back("same image point as " + s.binary.labels[static_cast<std::size_t>(other)]);
            }
          points.emplace_back(fam.rho, img.images.front());
        }
      }
    } catch (const std::exception& e) {
      v.verdict = "failed";
      v.notes.push_back(e.what());
    }
    (v.pure ? rep.mapped : rep.contracted) += v.verdict == (v.pure ? "mapped" : "contracted") ? 1 : 0;
    rep.curves.push_back(std::move(v));
  }
  rep.pass = rep.notes.empty();
  for (int r = 0; r < tb.size(); ++r)
    if (r != tb.trivial_index && !seen[static_cast<std::size_t>(r)]) {
      rep.notes.push_back("no curve for " + s.binary.labels[static_cast<std::size_t>(r)]);
      rep.pass = false;
    }
  for (const auto& c : rep.curves)
    if (!c.pass) rep.pass = false;
  return rep;
}

}  // namespace mckay
