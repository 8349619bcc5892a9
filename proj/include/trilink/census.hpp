#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trilink/diagram.hpp"
#include "trilink/invariants.hpp"
#include "trilink/laurent.hpp"

namespace trilink {

struct CensusRecord {
  CrossingAssignment assignment;
  int orbit_id = 0;
  int orbit_size = 0;
  EmbeddingType embedding_type = EmbeddingType::Trivial3;
  std::array<int, 3> linking{};  // |lk| for AB, BC, CA
  LaurentPoly bracket;

  int linked_pairs() const {
    return (linking[0] != 0) + (linking[1] != 0) + (linking[2] != 0);
  }
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct OrbitSummary {
  int orbit_id = 0;
  CrossingAssignment representative;
  int size = 0;
  EmbeddingType embedding_type = EmbeddingType::Trivial3;
  /// Whether the all-crossings-flipped representative is already reached by
  /// the planar motions alone.
  bool mirror_in_planar_orbit = false;
  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

struct CensusSummary {
  int total_depictions = 0;
  int orbit_count = 0;
  std::map<EmbeddingType, int> per_type_orbit_counts;
  std::map<EmbeddingType, int> per_type_depiction_counts;
  std::vector<OrbitSummary> orbits;
  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct Census {
  std::vector<CensusRecord> records;  // one per assignment, by word
  CensusSummary summary;
  friend bool operator==(const Census&, const Census&) = default;
};

Census run_census();

/// JSON document with a schema_version field (docs/formats.md).
std::string census_to_json(const Census& c);
Census census_from_json(std::string_view text);

/// One row per assignment; the header is fixed.
std::string census_to_csv(const Census& c);
std::vector<CensusRecord> census_records_from_csv(std::string_view text);

/// Human-readable table ending in the pattern/type/depiction total line.
std::string census_to_table(const Census& c);

struct ClaimCheck {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct ClaimReport {
  std::vector<ClaimCheck> checks;
  bool all_passed() const;
};

ClaimReport verify_claims();
std::string report_to_text(const ClaimReport& r);
std::string report_to_json(const ClaimReport& r);

}  // namespace trilink
