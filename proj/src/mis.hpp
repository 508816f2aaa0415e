#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace vtc::mis {

// Fixed-capacity bitset sized at runtime.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : words_((capacity + 63) / 64, 0) {}

  void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  bool none() const;
  std::size_t count() const;
  // Lowest member; undefined on an empty set.
  std::size_t first() const;
  void intersect(const VertexSet& other);
  void subtract(const VertexSet& other);

 private:
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  explicit Graph(std::size_t vertices);

  std::size_t size() const noexcept { return adjacency_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  const VertexSet& neighbours(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }

 private:
  std::vector<VertexSet> adjacency_;
};

struct SearchResult {
  std::vector<std::size_t> best;  // sorted vertex ids
  bool exact = false;             // false when the deadline cut the search
  std::uint64_t nodes = 0;
};

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices);

/// Min-degree greedy; ties go to the smaller vertex id.
std::vector<std::size_t> greedy_independent_set(const Graph& g);

/// Exact maximum independent set as a maximum clique of the complement,
/// branch and bound with a greedy colouring bound. The incumbent starts at
/// the larger of `seed` (must be independent) and the greedy set.
SearchResult maximum_independent_set(const Graph& g, const std::vector<std::size_t>& seed,
                                     std::chrono::steady_clock::time_point deadline);

}  // namespace vtc::mis
