#pragma once

#include <string>

#include "json.hpp"

#include "analysis.hpp"
#include "channels.hpp"

// Structured records: {claim, parameters, values, pass, witnesses}.
namespace vtc::report {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json record(std::string claim, json parameters, json values, bool pass, json witnesses = json::array());

json to_record(const analysis::SizeDistribution& d);
json to_record(const analysis::PartitionCertificate& c);
json to_record(const analysis::MisResult& r);
json to_record(const analysis::CapacityBounds& b);
json linearity_record(std::size_t n, bool closed);
json indel_record(std::size_t n, std::uint64_t a, std::size_t s1, std::size_t s2,
                  const analysis::IndelLemmaResult<BinaryWord>& r);
json buggy_record(std::size_t n, unsigned q, analysis::IndicatorRange range,
                  const std::optional<analysis::BuggyCounterexample>& found);
json tenengolts_record(std::size_t n, unsigned q, const std::optional<analysis::Collision<QaryWord>>& found);
json to_record(const channels::TrialReport& r, const Codec& codec, const channels::ChannelSpec& spec);

/// Published optimum single-deletion code sizes for n = 1..8.
std::optional<std::size_t> known_optimal_size(std::size_t n);

}  // namespace vtc::report
