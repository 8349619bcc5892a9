#include "trilink/invariants.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "trilink/errors.hpp"

namespace trilink {


int LinkingProfile::between(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  for (const auto& p : pairs)
    if (p.first == i && p.second == j) return p.value;
  throw InputError(fmt::format("no component pair ({}, {})", i, j));
}

int LinkingProfile::linked_pairs() const {
  int n = 0;
  for (const auto& p : pairs) n += p.value != 0;
  return n;
}

std::array<int, 3> LinkingProfile::triangle() const {
  return {between(0, 1), between(1, 2), between(2, 0)};
}

std::string_view to_string(EmbeddingType t) {
  switch (t) {
    case EmbeddingType::TorusLink33: return "TorusLink33";
    case EmbeddingType::Chain3: return "Chain3";
    case EmbeddingType::HopfWithSplit: return "HopfWithSplit";
    case EmbeddingType::Trivial3: return "Trivial3";
    case EmbeddingType::Borromean: return "Borromean";
  }
  return "?";
}

EmbeddingType embedding_type_from_string(std::string_view s) {
  for (auto t : kEmbeddingTypes)
    if (to_string(t) == s) return t;
  throw InputError(fmt::format("unknown embedding type '{}'", s));
}

int signed_linking(const LinkDiagram& d, std::size_t i, std::size_t j) {
  int sum = 0;
  for (const auto& c : d.crossings()) {
    const auto o = static_cast<std::size_t>(c.over_component);
    const auto u = static_cast<std::size_t>(c.under_component);
    if ((o == i && u == j) || (o == j && u == i)) sum += c.sign;
  }
  if (sum % 2 != 0)
    throw std::logic_error("odd inter-component crossing sum in a closed diagram");
  return sum / 2;
}

LinkingProfile pairwise_linking(const LinkDiagram& d) {
  if (d.component_count() < 2)
    throw InputError(fmt::format(
        "linking numbers need at least two components, diagram has {}",
        d.component_count()));
  LinkingProfile prof;
  for (std::size_t i = 0; i < d.component_count(); ++i)
    for (std::size_t j = i + 1; j < d.component_count(); ++j)
      prof.pairs.push_back({i, j, std::abs(signed_linking(d, i, j))});
  return prof;
}

namespace {

// Loop count of one smoothing state. Bit k of `state` set means crossing k
// takes the B-smoothing.
class LoopCounter {
 public:
  explicit LoopCounter(int arcs) : parent_(arcs) {}

  int count(const LinkDiagram& d, unsigned state) {
    std::iota(parent_.begin(), parent_.end(), 0);
    int loops = static_cast<int>(parent_.size());
    for (std::size_t k = 0; k < d.crossing_count(); ++k) {
      const auto& a = d.crossings()[k].arcs;
      if (state >> k & 1u) {
        loops -= join(a[0], a[3]);
        loops -= join(a[1], a[2]);
      } else {
        loops -= join(a[0], a[1]);
        loops -= join(a[2], a[3]);
      }
    }
    return loops + d.free_loop_count();
  }

 private:
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  int join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return 0;
    parent_[a] = b;
    return 1;
  }
  std::vector<int> parent_;
};

}  // namespace

LaurentPoly kauffman_bracket(const LinkDiagram& d) {
  const std::size_t n = d.crossing_count();
  if (n > kMaxBracketCrossings)
    throw CapacityError(fmt::format(
        "bracket limited to {} crossings, diagram has {}", kMaxBracketCrossings, n));

  // Tally states by (A-exponent, loop count) before expanding delta powers.
  const int max_loops = d.arc_count() + d.free_loop_count();
  std::vector<std::vector<long long>> tally(
      n + 1, std::vector<long long>(static_cast<std::size_t>(max_loops) + 1, 0));
  LoopCounter counter(d.arc_count());
  for (unsigned state = 0; state < (1u << n); ++state) {
    const int b_count = std::popcount(state);
    ++tally[b_count][counter.count(d, state)];
  }

  const LaurentPoly delta = LaurentPoly::loop_value();
  LaurentPoly out;
  for (std::size_t b = 0; b <= n; ++b)
    for (int loops = 1; loops <= max_loops; ++loops) {
      const long long k = tally[b][loops];
      if (k == 0) continue;
      const int exponent = static_cast<int>(n) - 2 * static_cast<int>(b);
      out += LaurentPoly::monomial(k, exponent) * delta.pow(loops - 1);
    }
  return out;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

LaurentPoly normalized_invariant(const LinkDiagram& d) {
  const int w = writhe(d);
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const LaurentPoly factor = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return factor * kauffman_bracket(d);
}

namespace {

void require_three(const LinkDiagram& d, std::string_view what) {
  if (d.component_count() != 3)
    throw InputError(fmt::format("{} needs a 3-component diagram, got {}", what,
                                 d.component_count()));
}

}  // namespace

EmbeddingType classify(const LinkDiagram& d) {
  require_three(d, "classify");
  switch (pairwise_linking(d).linked_pairs()) {
    case 3: return EmbeddingType::TorusLink33;
    case 2: return EmbeddingType::Chain3;
    case 1: return EmbeddingType::HopfWithSplit;
    default: break;
  }
  const LaurentPoly unlink3 = LaurentPoly::loop_value().pow(2);
  return equal_up_to_mirror(normalized_invariant(d), unlink3)
             ? EmbeddingType::Trivial3
             : EmbeddingType::Borromean;
}

bool is_brunnian(const LinkDiagram& d) {
  require_three(d, "is_brunnian");
  if (pairwise_linking(d).linked_pairs() != 0) return false;
  const LaurentPoly delta = LaurentPoly::loop_value();
  for (const auto& comp : d.components()) {
    const LinkDiagram rest = remove_component(d, comp.label);
    if (!equal_up_to_mirror(normalized_invariant(rest), delta)) return false;
  }
  return !equal_up_to_mirror(normalized_invariant(d), delta.pow(2));
}

}  // namespace trilink
