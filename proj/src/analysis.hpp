#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "words.hpp"

// Exhaustive checks of the combinatorial facts behind the codes.
namespace vtc::analysis {

struct SizeDistribution {
  std::size_t n = 0;
  std::vector<std::uint64_t> sizes;  // sizes[a] = |VT_a(n)|
  std::uint64_t argmax = 0;          // smallest residue among ties
  std::uint64_t argmin = 0;
  std::uint64_t total = 0;
};

SizeDistribution size_distribution(std::size_t n, const Limits& limits = {});

struct Overlap {
  BinaryWord descendant;
  BinaryWord first;
  BinaryWord second;
};

struct PartitionCertificate {
  std::size_t n = 0;
  std::optional<std::uint64_t> a;  // absent for an arbitrary code
  std::vector<BinaryWord> code;
  bool disjoint = true;
  bool covering = true;
  std::optional<Overlap> overlap;        // first collision found
  std::optional<BinaryWord> uncovered;   // smallest length n-1 word not reached

  bool perfect() const { return disjoint && covering; }
};

/// Do the single-deletion balls of VT_a(n) tile {0,1}^{n-1}?
PartitionCertificate verify_perfect(std::size_t n, std::uint64_t a, const Limits& limits = {});
/// Same test for an arbitrary code of length-n words.
PartitionCertificate verify_perfect(const std::vector<BinaryWord>& code, std::size_t n, const Limits& limits = {});

enum class SolverStatus { kExact, kTimeout };

struct MisResult {
  std::size_t n = 0;
  std::size_t e = 1;
  std::size_t size = 0;  // optimum when exact, best lower bound otherwise
  std::vector<BinaryWord> witness;
  SolverStatus status = SolverStatus::kExact;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Largest e-deletion-correcting binary code of length n, via maximum
/// independent set on the confusability graph. The best VT code seeds the
/// incumbent alongside the greedy set.
MisResult optimal_code_size(std::size_t n, std::size_t e, double budget_seconds, const Limits& limits = {});

template <Word W>
struct Collision {
  W first;
  W second;
  W shared;
};

template <Word W>
struct IndelLemmaResult {
  bool holds = true;
  std::optional<Collision<W>> witness;
};

/// Words reachable by s1 deletions followed by s2 insertions.
template <Word W>
std::set<W> indel_ball(const W& w, std::size_t s1, std::size_t s2, const Limits& limits = {}) {
  std::set<W> out;
  for (const auto& d : deletion_ball(w, s1, limits)) out.merge(insertion_ball(d, s2, limits));
  return out;
}

/// True iff no two distinct codewords share a word in their indel balls.
template <Word W>
IndelLemmaResult<W> verify_indel_lemma(const std::vector<W>& code, std::size_t s1, std::size_t s2,
                                       const Limits& limits = {}) {
  std::map<W, std::size_t> owner;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i].size() != code.front().size()) throw InvalidArgument("verify_indel_lemma: mixed lengths");
    for (auto& d : indel_ball(code[i], s1, s2, limits)) {
      auto [it, fresh] = owner.emplace(d, i);
      if (!fresh && code[it->second] != code[i]) {
        return {false, Collision<W>{code[it->second], code[i], d}};
      }
    }
  }
  return {};
}

/// Lexicographically first pair (u < v) with intersecting D_e balls, with the
/// smallest shared descendant.
template <Word W>
std::optional<Collision<W>> find_confusable_pair(std::vector<W> code, std::size_t e, const Limits& limits = {}) {
  std::sort(code.begin(), code.end());
  std::vector<std::set<W>> balls;
  for (const auto& c : code) balls.push_back(deletion_ball(c, e, limits));
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      for (const auto& d : balls[i]) {
        if (balls[j].contains(d)) return Collision<W>{code[i], code[j], d};
      }
    }
  }
  return std::nullopt;
}

// Which positions the nonzero indicator of the broken q-ary construction sums over.
enum class IndicatorRange { kFromOne, kFromTwo };

struct BuggyCounterexample {
  QaryWord first;
  QaryWord second;
  QaryWord shared;
  std::uint64_t a = 0;  // sum i*[x_i != 0] mod (n+1)
  std::uint64_t b = 0;  // sum x_i mod q
};

/// Searches every class of the code that pairs a VT checksum on the nonzero
/// indicator with a symbol-sum checksum for two members sharing a deletion
/// descendant. Classes are visited in (a, b) order; within a class the first
/// pair in lexicographic order is returned.
std::optional<BuggyCounterexample> falsify_buggy_nonbinary(std::size_t n, unsigned q, IndicatorRange range,
                                                           const Limits& limits = {});

/// Same search over every (a, b) class of the Tenengolts code.
std::optional<Collision<QaryWord>> tenengolts_counterexample(std::size_t n, unsigned q, const Limits& limits = {});

struct CapacityBounds {
  double alpha = 0.0;
  double erasure_upper = 0.0;               // 1 - alpha
  double lower = 0.0;                       // 0.11 (1 - alpha)
  std::optional<double> golden_ratio_upper;  // (1 - alpha) log2(phi), alpha >= 0.5 only
};

CapacityBounds capacity_bounds(double alpha);

/// Is VT_0(n) closed under XOR?
bool linearity_check(std::size_t n);

}  // namespace vtc::analysis
