#include "doctest.h"
#include "oracles.hpp"
#include "vt_binary.hpp"
#include "vt_indel.hpp"

using vtc::BinaryWord;
namespace sh = vtc::shifted;

namespace {

BinaryWord W(const char* s) { return BinaryWord::parse(s); }

}  // namespace

TEST_CASE("membership examples") {
  const sh::Params p(4, 0);
  CHECK(p.modulus() == 9);
  CHECK(sh::is_codeword(W("0000"), p));
  CHECK(sh::is_codeword(W("0111"), p));
  CHECK_FALSE(sh::is_codeword(W("1111"), p));
  CHECK_THROWS_AS(sh::is_codeword(W("011"), p), vtc::InvalidArgument);
  CHECK_THROWS_AS(sh::Params(4, 9), vtc::InvalidArgument);
}

TEST_CASE("classification by length") {
  const sh::Params p(4, 0);
  CHECK(sh::classify(W("011"), p) == sh::Received::kDeletion);
  CHECK(sh::classify(W("0111"), p) == sh::Received::kSubstitutionOrClean);
  CHECK(sh::classify(W("01110"), p) == sh::Received::kInsertion);
  CHECK_THROWS_AS(sh::classify(W("01"), p), vtc::CorruptInput);
  CHECK_THROWS_AS(sh::classify(W("011100"), p), vtc::CorruptInput);
}

TEST_CASE("decode examples") {
  const sh::Params p(4, 0);
  auto down = sh::decode(W("0011"), p);
  CHECK(down.codeword == W("0111"));
  CHECK(down.kind == vtc::ErrorKind::kSubstitution);
  CHECK(down.positions == vtc::PositionInterval{2, 2});
  CHECK(down.value == 1);

  auto up = sh::decode(W("1111"), p);
  CHECK(up.codeword == W("0111"));
  CHECK(up.positions == vtc::PositionInterval{1, 1});
  CHECK(up.value == 0);

  auto del = sh::decode(W("111"), p);
  CHECK(del.codeword == W("0111"));
  CHECK(del.kind == vtc::ErrorKind::kDeletion);
  CHECK(del.value == 0);

  auto clean = sh::decode(W("0111"), p);
  CHECK(clean.codeword == W("0111"));
  CHECK(clean.kind == vtc::ErrorKind::kNone);
}

TEST_CASE("the upward flip sits at 2n+1-S") {
  // The alternative 2n-S misplaces every 0->1 flip.
  for (std::size_t n = 1; n <= 10; ++n) {
    const std::uint64_t m = 2 * n + 1;
    for (std::uint64_t a = 0; a < m; ++a) {
      for (const auto& x : sh::enumerate(sh::Params(n, a))) {
        for (std::size_t p = 1; p <= n; ++p) {
          if (x.at(p) != 0) continue;
          const auto y = x.with_flipped(p);
          const std::uint64_t s = (a + m - oracle::vt_sum(y.to_string(), m)) % m;
          REQUIRE(s == m - p);
          REQUIRE(s >= n + 1);
        }
      }
    }
  }
}

TEST_CASE("exhaustive single-edit round trip") {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::uint64_t a = 0; a <= 2 * n; ++a) {
      const sh::Params p(n, a);
      for (const auto& x : sh::enumerate(p)) {
        REQUIRE(sh::decode(x, p).kind == vtc::ErrorKind::kNone);
        for (std::size_t i = 1; i <= n; ++i) {
          REQUIRE(sh::decode(x.with_deleted(i), p).codeword == x);
          auto sub = sh::decode(x.with_flipped(i), p);
          REQUIRE(sub.codeword == x);
          REQUIRE(sub.positions == vtc::PositionInterval{i, i});
        }
        for (const auto& y : vtc::insertion_ball(x, 1)) REQUIRE(sh::decode(y, p).codeword == x);
      }
    }
  }
}

TEST_CASE("substitution syndromes partition the residues") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const std::uint64_t m = 2 * n + 1;
    std::vector<int> hits(m, 0);
    ++hits[0];
    for (std::size_t p = 1; p <= n; ++p) {
      ++hits[p];          // 1 -> 0 at p
      ++hits[m - p];      // 0 -> 1 at p
    }
    for (auto h : hits) CHECK(h == 1);
  }
}

TEST_CASE("shifted code is never larger than the plain VT code") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::size_t shifted_best = 0, plain_best = 0;
    for (std::uint64_t a = 0; a <= 2 * n; ++a) shifted_best = std::max(shifted_best, sh::enumerate(sh::Params(n, a)).size());
    for (std::uint64_t a = 0; a <= n; ++a) plain_best = std::max(plain_best, vtc::vt::enumerate(vtc::vt::Params(n, a)).size());
    CHECK(shifted_best <= plain_best);
  }
}
