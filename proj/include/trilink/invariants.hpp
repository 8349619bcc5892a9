#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "trilink/diagram.hpp"
#include "trilink/laurent.hpp"

namespace trilink {

/// Absolute linking number of one unordered component pair.
struct PairLinking {
  std::size_t first = 0;
  std::size_t second = 0;
  int value = 0;
};

/// Absolute pairwise linking numbers, pairs in lexicographic (i < j) order.
struct LinkingProfile {
  std::vector<PairLinking> pairs;

  int between(std::size_t i, std::size_t j) const;
  int linked_pairs() const;
  /// For three components: {lk(0,1), lk(1,2), lk(2,0)}, i.e. AB, BC, CA.
  std::array<int, 3> triangle() const;

  friend bool operator==(const LinkingProfile& a, const LinkingProfile& b) {
    if (a.pairs.size() != b.pairs.size()) return false;
    for (std::size_t k = 0; k < a.pairs.size(); ++k)
      if (a.pairs[k].first != b.pairs[k].first ||
          a.pairs[k].second != b.pairs[k].second ||
          a.pairs[k].value != b.pairs[k].value)
        return false;
    return true;
  }
};

enum class EmbeddingType { TorusLink33, Chain3, HopfWithSplit, Trivial3, Borromean };

inline constexpr std::array<EmbeddingType, 5> kEmbeddingTypes{
    EmbeddingType::TorusLink33, EmbeddingType::Chain3,
    EmbeddingType::HopfWithSplit, EmbeddingType::Trivial3,
    EmbeddingType::Borromean};

std::string_view to_string(EmbeddingType t);
EmbeddingType embedding_type_from_string(std::string_view s);

/// Signed linking number of components i and j (half the signed sum of
/// their mutual crossings).
int signed_linking(const LinkDiagram& d, std::size_t i, std::size_t j);

/// Throws InputError for fewer than two components.
LinkingProfile pairwise_linking(const LinkDiagram& d);

inline constexpr std::size_t kMaxBracketCrossings = 16;

/// State sum over all smoothings, normalised so the unknot is 1. Throws
/// CapacityError above kMaxBracketCrossings crossings.
LaurentPoly kauffman_bracket(const LinkDiagram& d);

int writhe(const LinkDiagram& d);

/// (-A^3)^(-writhe) * bracket.
LaurentPoly normalized_invariant(const LinkDiagram& d);

/// Requires exactly three components.
EmbeddingType classify(const LinkDiagram& d);

/// Pairwise unlinked, every one-component deletion is a 2-unlink, and the
/// whole is not a 3-unlink (invariant comparisons up to A <-> A^-1).
bool is_brunnian(const LinkDiagram& d);

}  // namespace trilink
