#include "analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

#include "mis.hpp"
#include "tenengolts.hpp"
#include "vt_binary.hpp"

namespace vtc::analysis {

SizeDistribution size_distribution(std::size_t n, const Limits& limits) {
  if (n < 1) throw InvalidArgument("size_distribution: n must be >= 1");
  check_length_cap(n, limits, "size_distribution");
  SizeDistribution d;
  d.n = n;
  d.sizes.assign(n + 1, 0);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    ++d.sizes[vt::weighted_sum(BinaryWord::from_integer(v, n), n + 1)];
  }
  for (std::uint64_t a = 0; a <= n; ++a) {
    d.total += d.sizes[a];
    if (d.sizes[a] > d.sizes[d.argmax]) d.argmax = a;
    if (d.sizes[a] < d.sizes[d.argmin]) d.argmin = a;
  }
  return d;
}

PartitionCertificate verify_perfect(const std::vector<BinaryWord>& code, std::size_t n, const Limits& limits) {
  if (n < 1) throw InvalidArgument("verify_perfect: n must be >= 1");
  check_length_cap(n, limits, "verify_perfect");
  PartitionCertificate cert;
  cert.n = n;
  cert.code = code;
  // Index descendants by their integer value: there are exactly 2^{n-1}.
  std::vector<std::optional<std::size_t>> owner(std::size_t{1} << (n - 1));
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i].size() != n) throw InvalidArgument("verify_perfect: codeword length mismatch");
    for (const auto& d : deletion_ball(code[i], 1, limits)) {
      auto& slot = owner[d.to_integer()];
      if (slot && code[*slot] != code[i]) {
        if (cert.disjoint) cert.overlap = Overlap{d, code[*slot], code[i]};
        cert.disjoint = false;
      } else {
        slot = i;
      }
    }
  }
  for (std::size_t v = 0; v < owner.size(); ++v) {
    if (!owner[v]) {
      cert.covering = false;
      cert.uncovered = BinaryWord::from_integer(v, n - 1);
      break;
    }
  }
  return cert;
}

PartitionCertificate verify_perfect(std::size_t n, std::uint64_t a, const Limits& limits) {
  const vt::Params params(n, a);
  auto cert = verify_perfect(vt::enumerate(params, limits), n, limits);
  cert.a = a;
  return cert;
}

MisResult optimal_code_size(std::size_t n, std::size_t e, double budget_seconds, const Limits& limits) {
  if (n < 1) throw InvalidArgument("optimal_code_size: n must be >= 1");
  if (e < 1 || e > n) throw InvalidArgument("optimal_code_size: e must be in [1, n]");
  // The graph has 2^n vertices and a dense adjacency matrix.
  check_length_cap(n, Limits{std::min<std::size_t>(limits.max_length, 12)}, "optimal_code_size");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t count = std::size_t{1} << n;

  std::vector<std::set<BinaryWord>> balls;
  balls.reserve(count);
  for (std::size_t v = 0; v < count; ++v) balls.push_back(deletion_ball(BinaryWord::from_integer(v, n), e, limits));
  std::map<BinaryWord, std::vector<std::size_t>> holders;
  for (std::size_t v = 0; v < count; ++v) {
    for (const auto& d : balls[v]) holders[d].push_back(v);
  }
  mis::Graph g(count);
  for (const auto& [d, group] : holders) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) g.add_edge(group[i], group[j]);
    }
  }

  std::vector<std::size_t> seed;
  if (e == 1) {
    const auto sizes = size_distribution(n, limits);
    for (const auto& w : vt::enumerate(vt::Params(n, sizes.argmax), limits)) seed.push_back(w.to_integer());
  }

  const auto budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(std::max(0.0, budget_seconds)));
  auto found = mis::maximum_independent_set(g, seed, start + budget);

  MisResult result;
  result.n = n;
  result.e = e;
  result.size = found.best.size();
  for (auto v : found.best) result.witness.push_back(BinaryWord::from_integer(v, n));
  result.status = found.exact ? SolverStatus::kExact : SolverStatus::kTimeout;
  result.nodes = found.nodes;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

std::vector<QaryWord> all_words(std::size_t n, unsigned q, const Limits& limits) {
  if (static_cast<double>(n) * std::log2(static_cast<double>(q)) > static_cast<double>(limits.max_length)) {
    throw ResourceLimit("q^n exceeds 2^" + std::to_string(limits.max_length) + " words");
  }
  std::vector<QaryWord> out;
  std::vector<Symbol> digits(n, 0);
  while (true) {
    out.emplace_back(digits, q);
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

}  // namespace

std::optional<BuggyCounterexample> falsify_buggy_nonbinary(std::size_t n, unsigned q, IndicatorRange range,
                                                           const Limits& limits) {
  if (n < 1) throw InvalidArgument("falsify_buggy_nonbinary: n must be >= 1");
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<QaryWord>> classes;
  for (auto& w : all_words(n, q, limits)) {
    std::uint64_t a = 0;
    for (std::size_t i = (range == IndicatorRange::kFromOne ? 1 : 2); i <= n; ++i) {
      if (w.at(i) != 0) a += i;
    }
    classes[{a % (n + 1), w.symbol_sum() % q}].push_back(std::move(w));
  }
  for (auto& [key, members] : classes) {
    if (auto hit = find_confusable_pair(members, 1, limits)) {
      return BuggyCounterexample{hit->first, hit->second, hit->shared, key.first, key.second};
    }
  }
  return std::nullopt;
}

std::optional<Collision<QaryWord>> tenengolts_counterexample(std::size_t n, unsigned q, const Limits& limits) {
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      auto code = tenengolts::enumerate(tenengolts::Params(n, q, a, b), limits);
      if (auto hit = find_confusable_pair(code, 1, limits)) return hit;
    }
  }
  return std::nullopt;
}

CapacityBounds capacity_bounds(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("capacity_bounds: alpha must be in [0, 1]");
  CapacityBounds b;
  b.alpha = alpha;
  b.erasure_upper = 1.0 - alpha;
  b.lower = 0.11 * (1.0 - alpha);
  if (alpha >= 0.5) b.golden_ratio_upper = (1.0 - alpha) * std::log2(std::numbers::phi);
  return b;
}

bool linearity_check(std::size_t n) {
  const auto code = vt::enumerate(vt::Params(n, 0), Limits{12});
  std::vector<bool> member(std::size_t{1} << n, false);
  for (const auto& w : code) member[w.to_integer()] = true;
  for (const auto& u : code) {
    for (const auto& v : code) {
      if (!member[u.to_integer() ^ v.to_integer()]) return false;
    }
  }
  return true;
}

}  // namespace vtc::analysis
