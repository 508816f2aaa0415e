#include "report.hpp"

#include <array>
#include <cmath>

namespace vtc::report {

namespace {

template <class W>
json words(const std::vector<W>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

}  // namespace

json record(std::string claim, json parameters, json values, bool pass, json witnesses) {
  return json{{"claim", std::move(claim)},
              {"parameters", std::move(parameters)},
              {"values", std::move(values)},
              {"pass", pass},
              {"witnesses", std::move(witnesses)}};
}

std::optional<std::size_t> known_optimal_size(std::size_t n) {
  static constexpr std::array<std::size_t, 8> kSizes{1, 2, 2, 4, 6, 10, 16, 30};
  if (n < 1 || n > kSizes.size()) return std::nullopt;
  return kSizes[n - 1];
}

json to_record(const analysis::SizeDistribution& d) {
  const std::uint64_t space = std::uint64_t{1} << d.n;
  const std::uint64_t pigeonhole = (space + d.n) / (d.n + 1);
  const std::uint64_t largest = d.sizes[d.argmax];
  json values{{"sizes", d.sizes},
              {"total", d.total},
              {"argmax", d.argmax},
              {"argmin", d.argmin},
              {"largest", largest},
              {"smallest", d.sizes[d.argmin]},
              {"pigeonhole_bound", pigeonhole},
              {"largest_at_a0", d.sizes[0] == largest},
              {"smallest_at_a1", d.n >= 1 && d.sizes[1] == d.sizes[d.argmin]}};
  return record("vt-size-distribution", {{"n", d.n}}, std::move(values), d.total == space && largest >= pigeonhole);
}

json to_record(const analysis::PartitionCertificate& c) {
  json params{{"n", c.n}};
  if (c.a) params["a"] = *c.a;
  json witnesses = json::array();
  if (c.overlap) {
    witnesses.push_back({{"kind", "overlap"},
                         {"descendant", c.overlap->descendant.to_string()},
                         {"first", c.overlap->first.to_string()},
                         {"second", c.overlap->second.to_string()}});
  }
  if (c.uncovered) witnesses.push_back({{"kind", "uncovered"}, {"word", c.uncovered->to_string()}});
  json values{{"codewords", words(c.code)}, {"disjoint", c.disjoint}, {"covering", c.covering}};
  return record("perfect-code", std::move(params), std::move(values), c.perfect(), std::move(witnesses));
}

json to_record(const analysis::MisResult& r) {
  const bool exact = r.status == analysis::SolverStatus::kExact;
  json values{{"size", r.size},
              {"status", exact ? "exact" : "timeout"},
              {"nodes", r.nodes},
              {"seconds", r.seconds}};
  const auto known = r.e == 1 ? known_optimal_size(r.n) : std::nullopt;
  bool pass = exact;
  if (known) {
    values["published"] = *known;
    pass = exact && r.size == *known;
  }
  return record("optimal-code-size", {{"n", r.n}, {"e", r.e}}, std::move(values), pass, words(r.witness));
}

json to_record(const analysis::CapacityBounds& b) {
  json values{{"erasure_upper", b.erasure_upper}, {"lower", b.lower}};
  bool ordered = b.lower <= b.erasure_upper;
  if (b.golden_ratio_upper) {
    values["golden_ratio_upper"] = *b.golden_ratio_upper;
    ordered = ordered && b.lower <= *b.golden_ratio_upper && *b.golden_ratio_upper <= b.erasure_upper;
  } else {
    values["golden_ratio_upper"] = nullptr;
  }
  return record("capacity-bounds", {{"alpha", b.alpha}}, std::move(values), ordered);
}

json linearity_record(std::size_t n, bool closed) {
  const bool expected = n <= 4;
  return record("vt0-linearity", {{"n", n}}, {{"closed_under_xor", closed}, {"expected", expected}},
                closed == expected);
}

json indel_record(std::size_t n, std::uint64_t a, std::size_t s1, std::size_t s2,
                  const analysis::IndelLemmaResult<BinaryWord>& r) {
  json witnesses = json::array();
  if (r.witness) {
    witnesses.push_back({{"first", r.witness->first.to_string()},
                         {"second", r.witness->second.to_string()},
                         {"shared", r.witness->shared.to_string()}});
  }
  return record("indel-lemma", {{"n", n}, {"a", a}, {"s1", s1}, {"s2", s2}}, {{"holds", r.holds}}, r.holds,
                std::move(witnesses));
}

json buggy_record(std::size_t n, unsigned q, analysis::IndicatorRange range,
                  const std::optional<analysis::BuggyCounterexample>& found) {
  json witnesses = json::array();
  if (found) {
    witnesses.push_back({{"first", found->first.to_string()},
                         {"second", found->second.to_string()},
                         {"shared", found->shared.to_string()},
                         {"a", found->a},
                         {"b", found->b}});
  }
  const char* reading = range == analysis::IndicatorRange::kFromOne ? "i=1..n" : "i=2..n";
  return record("buggy-code-counterexample", {{"n", n}, {"q", q}, {"indicator_range", reading}},
                {{"counterexample_found", found.has_value()}}, found.has_value(), std::move(witnesses));
}

json tenengolts_record(std::size_t n, unsigned q, const std::optional<analysis::Collision<QaryWord>>& found) {
  json witnesses = json::array();
  if (found) {
    witnesses.push_back({{"first", found->first.to_string()},
                         {"second", found->second.to_string()},
                         {"shared", found->shared.to_string()}});
  }
  return record("tenengolts-no-counterexample", {{"n", n}, {"q", q}},
                {{"counterexample_found", found.has_value()}}, !found.has_value(), std::move(witnesses));
}

json to_record(const channels::TrialReport& r, const Codec& codec, const channels::ChannelSpec& spec) {
  json params{{"code", std::string(to_string(codec.family()))},
              {"length", codec.length()},
              {"channel", std::string(channels::to_string(spec.kind))},
              {"trials", r.trials},
              {"seed", r.seed}};
  if (spec.kind == channels::ChannelKind::kBdc) params["alpha"] = spec.alpha;
  if (spec.kind == channels::ChannelKind::kBurst) params["s"] = spec.s;
  json witnesses = json::array();
  for (const auto& t : r.transcripts) {
    witnesses.push_back(
        {{"trial", t.trial}, {"input", t.input}, {"output", t.output}, {"decoded", t.decoded}, {"error", t.error}});
  }
  json values{{"trials", r.trials},
              {"successes", r.successes},
              {"failures", r.failures},
              {"success_rate", r.success_rate()},
              {"outcome_kinds", r.outcome_kinds}};
  return record("simulation", std::move(params), std::move(values), r.failures == 0, std::move(witnesses));
}

}  // namespace vtc::report
