#include "burst.hpp"

#include <algorithm>
#include <string>

#include "vt_binary.hpp"

namespace vtc::burst {

Params::Params(std::size_t s, std::size_t k, std::vector<std::uint64_t> residues)
    : s_(s), k_(k), residues_(std::move(residues)) {
  if (s < 1) throw InvalidArgument("burst depth s must be >= 1");
  if (k < 1) throw InvalidArgument("burst row length k must be >= 1");
  if (residues_.empty()) residues_.assign(s, 0);
  if (residues_.size() != s) {
    throw InvalidArgument("burst code needs " + std::to_string(s) + " row residues, got " +
                          std::to_string(residues_.size()));
  }
  for (auto a : residues_) {
    if (a > k) throw InvalidArgument("burst row residue " + std::to_string(a) + " outside [0, k]");
  }
}

BinaryWord interleave(const std::vector<BinaryWord>& rows) {
  if (rows.empty()) throw InvalidArgument("interleave: no rows");
  const std::size_t s = rows.size();
  const std::size_t k = rows.front().size();
  std::vector<Symbol> out(s * k);
  for (std::size_t r = 0; r < s; ++r) {
    if (rows[r].size() != k) throw InvalidArgument("interleave: ragged rows");
    for (std::size_t j = 0; j < k; ++j) out[j * s + r] = rows[r].symbols()[j];
  }
  return BinaryWord(std::move(out));
}

std::vector<BinaryWord> deinterleave(const BinaryWord& x, std::size_t s) {
  if (s < 1 || x.size() % s != 0) {
    throw InvalidArgument("deinterleave: length " + std::to_string(x.size()) + " not divisible by " +
                          std::to_string(s));
  }
  std::vector<std::vector<Symbol>> rows(s);
  for (std::size_t i = 0; i < x.size(); ++i) rows[i % s].push_back(x.symbols()[i]);
  std::vector<BinaryWord> out;
  out.reserve(s);
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

BinaryWord encode(const std::vector<BinaryWord>& rows, const Params& params) {
  if (rows.size() != params.depth()) throw InvalidArgument("burst::encode: wrong number of rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const vt::Params row_code(params.row_length(), params.residues()[r]);
    if (rows[r].size() != params.row_length() || !vt::is_codeword(rows[r], row_code)) {
      throw InvalidArgument("burst::encode: row " + std::to_string(r + 1) + " is not in its VT code");
    }
  }
  return interleave(rows);
}

std::size_t data_length(const Params& params) { return params.depth() * vt::data_length(params.row_length()); }

BinaryWord encode_systematic(const std::vector<BinaryWord>& blocks, const Params& params) {
  if (blocks.size() != params.depth()) throw InvalidArgument("burst::encode_systematic: wrong number of blocks");
  std::vector<BinaryWord> rows;
  rows.reserve(blocks.size());
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    rows.push_back(vt::systematic_encode(blocks[r], vt::Params(params.row_length(), params.residues()[r])));
  }
  return interleave(rows);
}

std::vector<BinaryWord> decode_systematic(const BinaryWord& codeword, const Params& params) {
  if (codeword.size() != params.n()) throw InvalidArgument("burst::decode_systematic: length mismatch");
  auto rows = deinterleave(codeword, params.depth());
  for (auto& r : rows) r = vt::systematic_decode(r);
  return rows;
}

bool is_codeword(const BinaryWord& x, const Params& params) {
  if (x.size() != params.n()) throw InvalidArgument("burst::is_codeword: length mismatch");
  auto rows = deinterleave(x, params.depth());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!vt::is_codeword(rows[r], vt::Params(params.row_length(), params.residues()[r]))) return false;
  }
  return true;
}

BinaryWord decode_burst(const BinaryWord& y, const Params& params) {
  if (y.size() + params.depth() != params.n()) {
    throw CorruptInput("burst::decode_burst: expected length " + std::to_string(params.n() - params.depth()) +
                       ", got " + std::to_string(y.size()));
  }
  // Removing s consecutive symbols shifts the tail by s, so every surviving
  // symbol keeps its residue class and each row loses exactly one symbol.
  auto rows = deinterleave(y, params.depth());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r] = vt::decode_deletion(rows[r], vt::Params(params.row_length(), params.residues()[r])).codeword;
  }
  return interleave(rows);
}

std::vector<BinaryWord> enumerate(const Params& params, const Limits& limits) {
  check_length_cap(params.n(), limits, "burst::enumerate");
  std::vector<std::vector<BinaryWord>> per_row;
  for (auto a : params.residues()) per_row.push_back(vt::enumerate(vt::Params(params.row_length(), a), limits));
  std::vector<BinaryWord> out;
  std::vector<std::size_t> pick(per_row.size(), 0);
  for (const auto& r : per_row) {
    if (r.empty()) return out;
  }
  while (true) {
    std::vector<BinaryWord> rows;
    for (std::size_t r = 0; r < per_row.size(); ++r) rows.push_back(per_row[r][pick[r]]);
    out.push_back(interleave(rows));
    std::size_t r = per_row.size();
    while (r > 0 && pick[r - 1] + 1 == per_row[r - 1].size()) pick[--r] = 0;
    if (r == 0) break;
    ++pick[r - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vtc::burst
