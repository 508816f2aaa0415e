#include "burst.hpp"
#include "doctest.h"
#include "rng.hpp"
#include "vt_binary.hpp"

#include <numeric>

using vtc::BinaryWord;
namespace bu = vtc::burst;

namespace {

BinaryWord W(const char* s) { return BinaryWord::parse(s); }

}  // namespace

TEST_CASE("interleave examples") {
  CHECK(bu::interleave({W("101"), W("000")}) == W("100010"));
  CHECK(bu::interleave({W("0110")}) == W("0110"));
  CHECK_THROWS_AS(bu::interleave({W("101"), W("00")}), vtc::InvalidArgument);
  CHECK(bu::deinterleave(W("100010"), 2) == std::vector<BinaryWord>{W("101"), W("000")});
  CHECK(bu::deinterleave(W("1010"), 2) == std::vector<BinaryWord>{W("11"), W("00")});
  CHECK(bu::deinterleave(W("0110"), 1) == std::vector<BinaryWord>{W("0110")});
  CHECK_THROWS_AS(bu::deinterleave(W("10101"), 2), vtc::InvalidArgument);
}

TEST_CASE("interleave round trip over every row tuple") {
  for (std::size_t s = 1; s <= 4; ++s) {
    for (std::size_t k = 1; s * k <= 12 && k <= 6; ++k) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << (s * k)); ++v) {
        auto x = BinaryWord::from_integer(v, s * k);
        auto rows = bu::deinterleave(x, s);
        REQUIRE(bu::interleave(rows) == x);
        for (std::size_t r = 0; r < s; ++r) {
          for (std::size_t j = 1; j <= k; ++j) REQUIRE(x.at((j - 1) * s + r + 1) == rows[r].at(j));
        }
      }
    }
  }
}

TEST_CASE("encode and decode examples") {
  const bu::Params p(2, 3, {0, 0});
  CHECK(bu::encode({W("101"), W("000")}, p) == W("100010"));
  CHECK_THROWS_AS(bu::encode({W("110"), W("000")}, p), vtc::InvalidArgument);
  CHECK(bu::decode_burst(W("1010"), p) == W("100010"));
  CHECK(bu::decode_burst(W("0000"), p) == W("000000"));
  CHECK_THROWS_AS(bu::decode_burst(W("10100"), p), vtc::CorruptInput);
  CHECK_THROWS_AS(bu::Params(2, 3, {0}), vtc::InvalidArgument);
  CHECK_THROWS_AS(bu::Params(2, 3, {0, 4}), vtc::InvalidArgument);
  CHECK(bu::encode_systematic({W("0000"), W("0000")}, bu::Params(2, 7)) == BinaryWord(14, 0));
}

TEST_CASE("exhaustive exact burst round trip") {
  for (std::size_t s = 1; s <= 3; ++s) {
    for (std::size_t k = 1; k <= 6; ++k) {
      for (std::uint64_t a = 0; a <= k; a += std::max<std::size_t>(1, k / 2)) {
        std::vector<std::uint64_t> residues(s);
        for (std::size_t r = 0; r < s; ++r) residues[r] = (a + r) % (k + 1);
        const bu::Params p(s, k, residues);
        const auto code = bu::enumerate(p);
        for (const auto& x : code) {
          REQUIRE(bu::is_codeword(x, p));
          for (std::size_t j = 1; j + s - 1 <= s * k; ++j) {
            auto y = x;
            for (std::size_t t = 0; t < s; ++t) y = y.with_deleted(j);
            REQUIRE(bu::decode_burst(y, p) == x);
          }
        }
        if (code.size() <= 400) {
          for (std::size_t i = 0; i < code.size(); ++i) {
            const auto bi = vtc::burst_deletion_ball(code[i], s);
            for (std::size_t m = i + 1; m < code.size(); ++m) {
              for (const auto& d : vtc::burst_deletion_ball(code[m], s)) REQUIRE_FALSE(bi.contains(d));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("surviving symbols keep their row after a burst") {
  for (std::size_t s = 1; s <= 4; ++s) {
    for (std::size_t k = 1; k <= 6; ++k) {
      const std::size_t n = s * k;
      for (std::size_t j = 1; j + s - 1 <= n; ++j) {
        // Track original positions through the deletion.
        std::vector<std::size_t> kept;
        for (std::size_t i = 1; i <= n; ++i) {
          if (i < j || i >= j + s) kept.push_back(i);
        }
        std::vector<std::size_t> lost_per_row(s, 0);
        for (std::size_t i = j; i < j + s; ++i) ++lost_per_row[(i - 1) % s];
        for (auto c : lost_per_row) REQUIRE(c == 1);
        for (std::size_t idx = 0; idx < kept.size(); ++idx) REQUIRE(idx % s == (kept[idx] - 1) % s);
      }
    }
  }
}

TEST_CASE("row deletion slots are equal or one apart") {
  for (std::size_t s = 2; s <= 4; ++s) {
    const std::size_t k = 5;
    for (std::size_t j = 1; j + s - 1 <= s * k; ++j) {
      std::size_t lo = k, hi = 0;
      for (std::size_t i = j; i < j + s; ++i) {
        const std::size_t slot = (i - 1) / s;
        lo = std::min(lo, slot);
        hi = std::max(hi, slot);
      }
      CHECK(hi - lo <= 1);
    }
  }
}

TEST_CASE("bursts of two are not single deletions") {
  const std::vector<BinaryWord> code{W("0101"), W("1010")};
  CHECK(vtc::burst_deletion_ball(code[0], 2) == std::set<BinaryWord>{W("01")});
  CHECK(vtc::burst_deletion_ball(code[1], 2) == std::set<BinaryWord>{W("10")});
  CHECK(vtc::confusable(code[0], code[1], 1));
}

TEST_CASE("random rows encode into valid codewords") {
  vtc::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t s = 1 + rng.uniform(4);
    const std::size_t k = 3 + rng.uniform(10);
    std::vector<std::uint64_t> residues(s);
    for (auto& a : residues) a = rng.uniform(k + 1);
    const bu::Params p(s, k, residues);
    std::vector<BinaryWord> blocks;
    for (std::size_t r = 0; r < s; ++r) {
      std::vector<vtc::Symbol> bits(vtc::vt::data_length(k));
      for (auto& b : bits) b = static_cast<vtc::Symbol>(rng.uniform(2));
      blocks.emplace_back(std::move(bits));
    }
    const auto x = bu::encode_systematic(blocks, p);
    REQUIRE(bu::is_codeword(x, p));
    REQUIRE(bu::decode_systematic(x, p) == blocks);
    const auto rows = bu::deinterleave(x, s);
    for (std::size_t r = 0; r < s; ++r) REQUIRE(vtc::vt::is_codeword(rows[r], vtc::vt::Params(k, residues[r])));
    const std::size_t j = 1 + rng.uniform(s * k - s + 1);
    auto y = x;
    for (std::size_t t = 0; t < s; ++t) y = y.with_deleted(j);
    REQUIRE(bu::decode_burst(y, p) == x);
  }
}
