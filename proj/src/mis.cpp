#include "mis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "errors.hpp"

namespace vtc::mis {

bool VertexSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return words_.size() * 64;
}

void VertexSet::intersect(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

void VertexSet::subtract(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
}

Graph::Graph(std::size_t vertices) : adjacency_(vertices, VertexSet(vertices)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> greedy_independent_set(const Graph& g) {
  VertexSet alive(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) alive.set(v);
  std::vector<std::size_t> chosen;
  while (!alive.none()) {
    std::size_t pick = g.size();
    std::size_t pick_degree = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!alive.test(v)) continue;
      VertexSet live = g.neighbours(v);
      live.intersect(alive);
      const std::size_t d = live.count();
      if (pick == g.size() || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    chosen.push_back(pick);
    alive.reset(pick);
    alive.subtract(g.neighbours(pick));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::chrono::steady_clock::time_point deadline) : deadline_(deadline) {
    const std::size_t n = g.size();
    // Fewest conflicts first: these are the vertices most likely to sit in a
    // large independent set, and colouring in this order tightens the bound.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
    compatible_.assign(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && !g.adjacent(order_[i], order_[j])) compatible_[i].set(j);
      }
    }
  }

  void set_incumbent(const std::vector<std::size_t>& original_ids) {
    std::vector<std::size_t> inverse(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) inverse[order_[i]] = i;
    best_.clear();
    for (auto v : original_ids) best_.push_back(inverse[v]);
  }

  void run() {
    VertexSet all(order_.size());
    for (std::size_t v = 0; v < order_.size(); ++v) all.set(v);
    std::vector<std::size_t> current;
    expand(all, current);
  }

  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<std::size_t> best_original() const {
    std::vector<std::size_t> out;
    for (auto v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(VertexSet candidates, std::vector<std::size_t>& current) {
    if (timed_out_) return;
    if ((++nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() >= deadline_) {
      timed_out_ = true;
      return;
    }
    // Greedy colouring: each colour class is pairwise conflicting, so it can
    // contribute at most one vertex.
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> colours;
    VertexSet uncoloured = candidates;
    std::size_t colour = 0;
    while (!uncoloured.none()) {
      ++colour;
      VertexSet pool = uncoloured;
      while (!pool.none()) {
        const std::size_t v = pool.first();
        pool.reset(v);
        uncoloured.reset(v);
        pool.subtract(compatible_[v]);
        vertices.push_back(v);
        colours.push_back(colour);
      }
    }
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (timed_out_ || current.size() + colours[i] <= best_.size()) return;
      const std::size_t v = vertices[i];
      current.push_back(v);
      VertexSet next = candidates;
      next.intersect(compatible_[v]);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::size_t> order_;
  std::vector<VertexSet> compatible_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

SearchResult maximum_independent_set(const Graph& g, const std::vector<std::size_t>& seed,
                                     std::chrono::steady_clock::time_point deadline) {
  if (!is_independent(g, seed)) throw InvalidArgument("maximum_independent_set: seed is not independent");
  auto incumbent = greedy_independent_set(g);
  if (seed.size() > incumbent.size()) incumbent = seed;
  if (g.size() == 0) return {{}, true, 0};
  CliqueSearch search(g, deadline);
  search.set_incumbent(incumbent);
  search.run();
  auto best = search.best_original();
  if (!is_independent(g, best)) throw InternalError("maximum_independent_set returned a dependent set");
  return {std::move(best), !search.timed_out(), search.nodes()};
}

}  // namespace vtc::mis
