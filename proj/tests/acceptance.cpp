// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include <fmt/format.h>

#include "trilink/census.hpp"
#include "trilink/geometry.hpp"
#include "trilink/invariants.hpp"
#include "trilink/symmetry.hpp"

#ifndef TRILINK_CLI_PATH
#error "TRILINK_CLI_PATH must name the trilink executable"
#endif

using namespace trilink;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome census_cardinality() {
  const auto n = all_assignments().size();
  const Census c = run_census();
  return {n == 64 && c.records.size() == 64 && c.summary.total_depictions == 64,
          fmt::format("{} depictions", c.records.size())};
}

Outcome pattern_counts() {
  const Census c = run_census();
  const std::map<EmbeddingType, int> want{{EmbeddingType::TorusLink33, 2},
                                          {EmbeddingType::Chain3, 3},
                                          {EmbeddingType::HopfWithSplit, 3},
                                          {EmbeddingType::Trivial3, 1},
                                          {EmbeddingType::Borromean, 1}};
  std::map<EmbeddingType, int> got;
  for (const auto& o : orbit_partition()) ++got[classify(to_diagram(o.representative()))];
  std::string detail = fmt::format("{} orbits:", orbit_partition().size());
  for (auto t : kEmbeddingTypes) detail += fmt::format(" {}={}", to_string(t), got[t]);
  return {orbit_partition().size() == 10 && got == want &&
              c.summary.per_type_orbit_counts == want,
          detail};
}

Outcome burnside() {
  int sum = 0;
  for (auto g : group_elements()) {
    const SiteAction act = site_action(g);
    for (auto asg : all_assignments()) sum += apply_action(act, asg) == asg;
  }
  const int direct = static_cast<int>(orbit_partition().size());
  return {sum % 12 == 0 && sum / 12 == direct && burnside_count().orbit_count == direct,
          fmt::format("{}/12 = {}, partition {}", sum, sum / 12.0, direct)};
}

Outcome case_mapping() {
  const LaurentPoly unlink3 = LaurentPoly::loop_value().pow(2);
  int ok = 0;
  for (auto asg : all_assignments()) {
    const auto d = to_diagram(asg);
    const int linked = pairwise_linking(d).linked_pairs();
    EmbeddingType want = EmbeddingType::Trivial3;
    if (linked == 3) want = EmbeddingType::TorusLink33;
    else if (linked == 2) want = EmbeddingType::Chain3;
    else if (linked == 1) want = EmbeddingType::HopfWithSplit;
    else if (!equal_up_to_mirror(normalized_invariant(d), unlink3))
      want = EmbeddingType::Borromean;
    ok += classify(d) == want;
  }
  return {ok == 64, fmt::format("{}/64 depictions match", ok)};
}

Outcome hopf_linking() {
  const int hopf = pairwise_linking(builtin_diagram("hopf")).between(0, 1);
  const int unlink = pairwise_linking(builtin_diagram("unlink2")).between(0, 1);
  return {hopf == 1 && unlink == 0, fmt::format("hopf {}, unlink2 {}", hopf, unlink)};
}

Outcome brunnian() {
  const LaurentPoly unlink2 = normalized_invariant(builtin_diagram("unlink2"));
  int borromean_cuts = 0, borromean_ok = 0, torus_cuts = 0, torus_ok = 0;
  for (const auto& o : orbit_partition()) {
    const auto type = classify(to_diagram(o.representative()));
    for (auto m : o.members) {
      const auto d = to_diagram(m);
      for (CircleId c : kCircles) {
        const auto rest = remove_component(d, c);
        const int lk = pairwise_linking(rest).between(0, 1);
        if (type == EmbeddingType::Borromean) {
          ++borromean_cuts;
          borromean_ok += lk == 0 && equal_up_to_mirror(normalized_invariant(rest), unlink2);
        } else if (type == EmbeddingType::TorusLink33) {
          ++torus_cuts;
          torus_ok += lk == 1;
        }
      }
    }
  }
  return {borromean_cuts > 0 && torus_cuts > 0 && borromean_ok == borromean_cuts &&
              torus_ok == torus_cuts,
          fmt::format("Borromean cuts {}/{}, torus cuts {}/{}", borromean_ok,
                      borromean_cuts, torus_ok, torus_cuts)};
}

Outcome twist() {
  const LaurentPoly t = normalized_invariant(builtin_diagram("twist-unknot"));
  const LaurentPoly u = normalized_invariant(builtin_diagram("unknot"));
  return {t == u, fmt::format("twist {} vs unknot {}", t.to_string(), u.to_string())};
}

Outcome mirror_relation() {
  int ok = 0;
  for (auto asg : all_assignments())
    ok += kauffman_bracket(to_diagram(asg.flipped())) ==
          kauffman_bracket(to_diagram(asg)).reflected();
  return {ok == 64, fmt::format("{}/64 diagrams", ok)};
}

Outcome equivariance() {
  int ok = 0, total = 0;
  for (auto g : group_elements()) {
    const SiteAction act = site_action(g);
    for (auto asg : all_assignments()) {
      ++total;
      ok += classify(to_diagram(asg)) == classify(to_diagram(apply_action(act, asg)));
    }
  }
  return {ok == total && total == 64 * 12, fmt::format("{}/{} checks", ok, total)};
}

double radial_spread(const PolyCurve3& c, bool ratio) {
  Point3 m{};
  for (const auto& p : c.points()) m = m + p;
  m = (1.0 / static_cast<double>(c.size())) * m;
  double lo = 1e300, hi = 0;
  for (const auto& p : c.points()) {
    lo = std::min(lo, norm(p - m));
    hi = std::max(hi, norm(p - m));
  }
  return ratio ? hi / lo : hi - lo;
}

Outcome geometry_round_trip() {
  const auto torus = realize("torus-villarceau", {{"R", 2.0}, {"r", 1.0}}, 256);
  const auto td = diagram_from_curves(torus);
  bool ok = classify(td) == EmbeddingType::TorusLink33;
  double roundness = 0;
  for (const auto& c : torus.curves) roundness = std::max(roundness, radial_spread(c, false));
  ok = ok && roundness < 1e-9;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      ok = ok && std::abs(linking_number_3d(torus.curves[i], torus.curves[j])) == 1;

  const double a = 1.5, b = 0.8;
  const auto ell = realize("borromean-ellipses", {{"a", a}, {"b", b}}, 256);
  bool ok2 = classify(diagram_from_curves(ell)) == EmbeddingType::Borromean;
  double ratio = 1e300;
  for (const auto& c : ell.curves) ratio = std::min(ratio, radial_spread(c, true));
  ok2 = ok2 && ratio >= a / b - 1e-9;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      ok2 = ok2 && linking_number_3d(ell.curves[i], ell.curves[j]) == 0;
  return {ok && ok2, fmt::format("villarceau {} roundness {:.1e}; ellipses {} ratio {:.4f}",
                                 to_string(classify(td)), roundness,
                                 to_string(classify(diagram_from_curves(ell))), ratio)};
}

Outcome gauss_cross_check() {
  double worst = 0;
  int pairs = 0;
  for (auto kind : {"torus-villarceau", "borromean-ellipses"}) {
    const auto r = realize(kind, {}, 512);
    for (std::size_t i = 0; i < r.curves.size(); ++i)
      for (std::size_t j = i + 1; j < r.curves.size(); ++j) {
        ++pairs;
        worst = std::max(worst, std::abs(gauss_linking_integral(r.curves[i], r.curves[j]) -
                                         linking_number_3d(r.curves[i], r.curves[j])));
      }
  }
  return {pairs == 6 && worst < 1e-3,
          fmt::format("{} pairs, max deviation {:.2e}", pairs, worst)};
}

Outcome determinism() {
  const std::string cmd = std::string("\"") + TRILINK_CLI_PATH + "\" census --format json";
  int s1 = 0, s2 = 0;
  const std::string first = capture(cmd, s1);
  const std::string second = capture(cmd, s2);
  return {s1 == 0 && s2 == 0 && !first.empty() && first == second,
          fmt::format("{} bytes, exit {} and {}", first.size(), s1, s2)};
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Outcome()>>, 12> criteria{{
      {"census-cardinality", census_cardinality},
      {"pattern-counts", pattern_counts},
      {"burnside-consistency", burnside},
      {"case-mapping", case_mapping},
      {"hopf-linking", hopf_linking},
      {"brunnian-property", brunnian},
      {"twist-invariance", twist},
      {"mirror-relation", mirror_relation},
      {"classification-equivariance", equivariance},
      {"geometry-round-trip", geometry_round_trip},
      {"gauss-cross-check", gauss_cross_check},
      {"determinism", determinism},
  }};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    failures += !o.passed;
    fmt::print("{} {:2} {}: {}\n", o.passed ? "PASS" : "FAIL", k + 1, criteria[k].first,
               o.detail);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
