#include "trilink/census.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "trilink/errors.hpp"
#include "trilink/geometry.hpp"
#include "trilink/symmetry.hpp"

namespace trilink {

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::string_view kCsvHeader =
    "bitword,orbit_id,orbit_size,type,lk_ab,lk_bc,lk_ca,bracket";

std::vector<SymmetryElement> planar_elements() {
  std::vector<SymmetryElement> out;
  for (const auto& g : group_elements())
    if (!g.mirror) out.push_back(g);
  return out;
}

}  // namespace

Census run_census() {
  Census census;
  const auto orbits = orbit_partition();
  std::array<int, CrossingAssignment::kCount> orbit_of_word{};
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (auto m : orbits[k].members) orbit_of_word[m.word()] = static_cast<int>(k);

  for (auto asg : all_assignments()) {
    const LinkDiagram d = to_diagram(asg);
    CensusRecord rec;
    rec.assignment = asg;
    rec.orbit_id = orbit_of_word[asg.word()];
    rec.orbit_size = static_cast<int>(orbits[rec.orbit_id].members.size());
    rec.embedding_type = classify(d);
    rec.linking = pairwise_linking(d).triangle();
    rec.bracket = kauffman_bracket(d);
    census.records.push_back(std::move(rec));
  }

  CensusSummary& s = census.summary;
  s.total_depictions = static_cast<int>(census.records.size());
  s.orbit_count = static_cast<int>(orbits.size());
  for (auto t : kEmbeddingTypes) {
    s.per_type_orbit_counts[t] = 0;
    s.per_type_depiction_counts[t] = 0;
  }
  for (const auto& r : census.records) ++s.per_type_depiction_counts[r.embedding_type];

  const auto planar = planar_elements();
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto rep = orbits[k].representative();
    const auto type = census.records[rep.word()].embedding_type;
    ++s.per_type_orbit_counts[type];
    const auto planar_orbit = orbit_of(rep, planar);
    const bool chiral_closed =
        std::ranges::binary_search(planar_orbit, rep.flipped());
    s.orbits.push_back({static_cast<int>(k), rep,
                        static_cast<int>(orbits[k].members.size()), type,
                        chiral_closed});
  }
  return census;
}

std::string census_to_json(const Census& c) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "trilink-census";
  ordered_json records = ordered_json::array();
  for (const auto& r : c.records)
    records.push_back({{"bitword", r.assignment.text()},
                       {"orbit_id", r.orbit_id},
                       {"orbit_size", r.orbit_size},
                       {"type", to_string(r.embedding_type)},
                       {"linking", r.linking},
                       {"bracket", r.bracket.to_string()}});
  doc["records"] = records;

  const auto& s = c.summary;
  ordered_json summary;
  summary["total_depictions"] = s.total_depictions;
  summary["orbit_count"] = s.orbit_count;
  ordered_json orbit_counts, depiction_counts;
  for (auto t : kEmbeddingTypes) {
    orbit_counts[std::string(to_string(t))] = s.per_type_orbit_counts.at(t);
    depiction_counts[std::string(to_string(t))] = s.per_type_depiction_counts.at(t);
  }
  summary["per_type_orbit_counts"] = orbit_counts;
  summary["per_type_depiction_counts"] = depiction_counts;
  ordered_json orbits = ordered_json::array();
  for (const auto& o : s.orbits)
    orbits.push_back({{"orbit_id", o.orbit_id},
                      {"representative", o.representative.text()},
                      {"size", o.size},
                      {"type", to_string(o.embedding_type)},
                      {"mirror_in_planar_orbit", o.mirror_in_planar_orbit}});
  summary["orbits"] = orbits;
  doc["summary"] = summary;
  return doc.dump(2) + "\n";
}

Census census_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(fmt::format("census JSON: {}", e.what()));
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion)
      throw InputError("unsupported census schema_version");
    Census c;
    for (const auto& r : doc.at("records")) {
      CensusRecord rec;
      rec.assignment = assignment_from_text(r.at("bitword").get<std::string>());
      rec.orbit_id = r.at("orbit_id").get<int>();
      rec.orbit_size = r.at("orbit_size").get<int>();
      rec.embedding_type = embedding_type_from_string(r.at("type").get<std::string>());
      rec.linking = r.at("linking").get<std::array<int, 3>>();
      rec.bracket = LaurentPoly::parse(r.at("bracket").get<std::string>());
      c.records.push_back(std::move(rec));
    }
    const auto& s = doc.at("summary");
    c.summary.total_depictions = s.at("total_depictions").get<int>();
    c.summary.orbit_count = s.at("orbit_count").get<int>();
    for (const auto& [k, v] : s.at("per_type_orbit_counts").items())
      c.summary.per_type_orbit_counts[embedding_type_from_string(k)] = v.get<int>();
    for (const auto& [k, v] : s.at("per_type_depiction_counts").items())
      c.summary.per_type_depiction_counts[embedding_type_from_string(k)] = v.get<int>();
    for (const auto& o : s.at("orbits"))
      c.summary.orbits.push_back(
          {o.at("orbit_id").get<int>(),
           assignment_from_text(o.at("representative").get<std::string>()),
           o.at("size").get<int>(),
           embedding_type_from_string(o.at("type").get<std::string>()),
           o.at("mirror_in_planar_orbit").get<bool>()});
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(fmt::format("census JSON: {}", e.what()));
  }
}

std::string census_to_csv(const Census& c) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : c.records)
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.assignment.text(),
                       r.orbit_id, r.orbit_size, to_string(r.embedding_type),
                       r.linking[0], r.linking[1], r.linking[2],
                       r.bracket.to_string());
  return out;
}

std::vector<CensusRecord> census_records_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw InputError("census CSV header mismatch");
  std::vector<CensusRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.size() != 8)
      throw InputError(fmt::format("census CSV line {}: expected 8 fields", line_no));
    try {
      CensusRecord r;
      r.assignment = assignment_from_text(fields[0]);
      r.orbit_id = std::stoi(fields[1]);
      r.orbit_size = std::stoi(fields[2]);
      r.embedding_type = embedding_type_from_string(fields[3]);
      r.linking = {std::stoi(fields[4]), std::stoi(fields[5]), std::stoi(fields[6])};
      r.bracket = LaurentPoly::parse(fields[7]);
      out.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw InputError(fmt::format("census CSV line {}: {}", line_no, e.what()));
    }
  }
  return out;
}

std::string census_to_table(const Census& c) {
  std::string out = fmt::format("{:>5}  {:<14} {:>4} {:>10}  {:<8}  {}\n", "orbit",
                                "type", "size", "rep", "lk", "members");
  for (const auto& o : c.summary.orbits) {
    std::string members;
    for (const auto& r : c.records)
      if (r.orbit_id == o.orbit_id)
        members += (members.empty() ? "" : " ") + r.assignment.text();
    const auto& lk = c.records[o.representative.word()].linking;
    out += fmt::format("{:>5}  {:<14} {:>4} {:>10}  {},{},{}     {}\n", o.orbit_id,
                       to_string(o.embedding_type), o.size,
                       o.representative.text(), lk[0], lk[1], lk[2], members);
  }
  out += "\n";
  for (auto t : kEmbeddingTypes)
    out += fmt::format("{:<14} {} pattern(s), {} depiction(s)\n", to_string(t),
                       c.summary.per_type_orbit_counts.at(t),
                       c.summary.per_type_depiction_counts.at(t));
  int types = 0;
  for (const auto& [t, n] : c.summary.per_type_orbit_counts) types += n > 0;
  out += fmt::format("{} patterns in {} embedding types; {} depictions\n",
                     c.summary.orbit_count, types, c.summary.total_depictions);
  return out;
}

bool ClaimReport::all_passed() const {
  return std::ranges::all_of(checks, &ClaimCheck::passed);
}

namespace {

std::string profile_text(const std::array<int, 3>& lk) {
  return fmt::format("{},{},{}", lk[0], lk[1], lk[2]);
}

}  // namespace

ClaimReport verify_claims() {
  ClaimReport rep;
  auto add = [&](std::string id, std::string desc, bool ok, std::string detail) {
    rep.checks.push_back({std::move(id), std::move(desc), ok, std::move(detail)});
  };
  auto guarded = [&](std::string id, std::string desc, auto&& fn) {
    try {
      auto [ok, detail] = fn();
      add(id, desc, ok, detail);
    } catch (const std::exception& e) {
      add(id, desc, false, fmt::format("error: {}", e.what()));
    }
  };

  const Census census = run_census();
  const auto& s = census.summary;
  const LaurentPoly delta = LaurentPoly::loop_value();

  guarded("census-cardinality", "the fixed projection has 2^6 depictions", [&] {
    return std::pair{s.total_depictions == 64,
                     fmt::format("{} depictions", s.total_depictions)};
  });

  guarded("pattern-counts",
          "10 orbits: TorusLink33=2 Chain3=3 HopfWithSplit=3 Trivial3=1 Borromean=1",
          [&] {
            const std::map<EmbeddingType, int> want{
                {EmbeddingType::TorusLink33, 2}, {EmbeddingType::Chain3, 3},
                {EmbeddingType::HopfWithSplit, 3}, {EmbeddingType::Trivial3, 1},
                {EmbeddingType::Borromean, 1}};
            std::string got;
            for (auto t : kEmbeddingTypes)
              got += fmt::format("{}{}={}", got.empty() ? "" : " ", to_string(t),
                                 s.per_type_orbit_counts.at(t));
            return std::pair{s.orbit_count == 10 && s.per_type_orbit_counts == want,
                             fmt::format("{} orbits; {}", s.orbit_count, got)};
          });

  guarded("burnside-vs-partition", "group-averaged fixed points equal the orbit count",
          [&] {
            const int b = burnside_count().orbit_count;
            const int p = static_cast<int>(orbit_partition().size());
            return std::pair{b == p && p == 10, fmt::format("{} = {}", b, p)};
          });

  guarded("case-mapping",
          "linked pairs 3/2/1 give torus/chain/split-Hopf; 0 splits by the bracket",
          [&] {
            int bad = 0;
            for (const auto& r : census.records) {
              const int n = r.linked_pairs();
              const bool ok =
                  (n == 3 && r.embedding_type == EmbeddingType::TorusLink33) ||
                  (n == 2 && r.embedding_type == EmbeddingType::Chain3) ||
                  (n == 1 && r.embedding_type == EmbeddingType::HopfWithSplit) ||
                  (n == 0 && (r.embedding_type == EmbeddingType::Trivial3 ||
                              r.embedding_type == EmbeddingType::Borromean));
              bad += !ok;
            }
            return std::pair{bad == 0, fmt::format("{}/64 consistent", 64 - bad)};
          });

  guarded("hopf-linking", "Hopf link has |lk| = 1, the 2-component unlink 0", [&] {
    const int hopf = pairwise_linking(builtin_diagram("hopf")).between(0, 1);
    const int unlink = pairwise_linking(builtin_diagram("unlink2")).between(0, 1);
    return std::pair{hopf == 1 && unlink == 0,
                     fmt::format("hopf {}, unlink2 {}", hopf, unlink)};
  });

  guarded("brunnian-cut-property",
          "cutting any circle of the Borromean pattern leaves a 2-unlink", [&] {
            int cuts = 0, ok_cuts = 0;
            bool brunnian = true;
            for (const auto& r : census.records) {
              if (r.embedding_type != EmbeddingType::Borromean) continue;
              const LinkDiagram d = to_diagram(r.assignment);
              brunnian = brunnian && is_brunnian(d);
              for (CircleId c : kCircles) {
                const LinkDiagram rest = remove_component(d, c);
                ++cuts;
                ok_cuts += pairwise_linking(rest).between(0, 1) == 0 &&
                           equal_up_to_mirror(normalized_invariant(rest), delta);
              }
            }
            return std::pair{cuts > 0 && ok_cuts == cuts && brunnian,
                             fmt::format("{}/{} cuts", ok_cuts, cuts)};
          });

  guarded("torus-pair-persistence",
          "cutting any circle of a torus pattern leaves a Hopf-linked pair", [&] {
            int cuts = 0, ok_cuts = 0;
            for (const auto& r : census.records) {
              if (r.embedding_type != EmbeddingType::TorusLink33) continue;
              const LinkDiagram d = to_diagram(r.assignment);
              for (CircleId c : kCircles) {
                ++cuts;
                ok_cuts += pairwise_linking(remove_component(d, c)).between(0, 1) == 1;
              }
            }
            return std::pair{cuts > 0 && ok_cuts == cuts,
                             fmt::format("{}/{} cuts", ok_cuts, cuts)};
          });

  guarded("twist-invariance", "the one-crossing twist normalizes to the unknot", [&] {
    const auto twist = normalized_invariant(builtin_diagram("twist-unknot"));
    const auto round = normalized_invariant(builtin_diagram("unknot"));
    return std::pair{twist == round && round == LaurentPoly(1),
                     fmt::format("{} vs {}", twist.to_string(), round.to_string())};
  });

  guarded("mirror-relation", "bracket of the flipped diagram is bracket(A^-1)", [&] {
    int ok = 0;
    for (const auto& r : census.records)
      ok += kauffman_bracket(to_diagram(r.assignment.flipped())) == r.bracket.reflected();
    return std::pair{ok == 64, fmt::format("{}/64", ok)};
  });

  guarded("classification-equivariance", "classify is constant under all 12 actions",
          [&] {
            int ok = 0, total = 0;
            for (const auto& g : group_elements()) {
              const SiteAction act = site_action(g);
              for (const auto& r : census.records) {
                ++total;
                ok += classify(to_diagram(apply_action(act, r.assignment))) ==
                      r.embedding_type;
              }
            }
            return std::pair{ok == total, fmt::format("{}/{}", ok, total)};
          });

  guarded("geometry-round-trip",
          "round Villarceau circles give the torus link; ellipses give Borromean",
          [&] {
            const Realization3D torus = realize("torus-villarceau");
            const Realization3D ell = realize("borromean-ellipses");
            const LinkDiagram td = diagram_from_curves(torus);
            const LinkDiagram ed = diagram_from_curves(ell);
            const auto tl = pairwise_linking(td);
            const auto el = pairwise_linking(ed);
            const bool ok = classify(td) == EmbeddingType::TorusLink33 &&
                            tl.linked_pairs() == 3 &&
                            classify(ed) == EmbeddingType::Borromean &&
                            el.linked_pairs() == 0 && is_brunnian(ed);
            return std::pair{ok, fmt::format("torus {} lk {}; ellipses {} lk {}",
                                             to_string(classify(td)),
                                             profile_text(tl.triangle()),
                                             to_string(classify(ed)),
                                             profile_text(el.triangle()))};
          });

  guarded("gauss-cross-check",
          "Gauss integral at 512 segments is within 1e-3 of the crossing count", [&] {
            double worst = 0.0;
            bool ok = true;
            for (auto kind : {"torus-villarceau", "borromean-ellipses"}) {
              const Realization3D r = realize(kind, {}, 512);
              for (std::size_t i = 0; i < r.curves.size(); ++i)
                for (std::size_t j = i + 1; j < r.curves.size(); ++j) {
                  const int lk = linking_number_3d(r.curves[i], r.curves[j]);
                  const double g = gauss_linking_integral(r.curves[i], r.curves[j]);
                  worst = std::max(worst, std::abs(g - lk));
                  ok = ok && std::abs(g - lk) < 1e-3;
                }
            }
            return std::pair{ok, fmt::format("max residual {:.2e}", worst)};
          });

  guarded("determinism", "two census runs serialize identically", [&] {
    const bool same = census_to_json(run_census()) == census_to_json(census) &&
                      census_to_csv(run_census()) == census_to_csv(census);
    return std::pair{same, same ? "byte-identical" : "outputs differ"};
  });

  return rep;
}

std::string report_to_text(const ClaimReport& r) {
  std::string out;
  int passed = 0;
  for (const auto& c : r.checks) {
    out += fmt::format("{}: {} ({})\n", c.id, c.passed ? "PASS" : "FAIL", c.detail);
    passed += c.passed;
  }
  out += fmt::format("{}/{} checks passed\n", passed, r.checks.size());
  return out;
}

std::string report_to_json(const ClaimReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["all_passed"] = r.all_passed();
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  doc["checks"] = checks;
  return doc.dump(2) + "\n";
}

}  // namespace trilink
