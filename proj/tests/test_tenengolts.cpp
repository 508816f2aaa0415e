#include "doctest.h"
#include "oracles.hpp"
#include "tenengolts.hpp"

using vtc::BinaryWord;
using vtc::QaryWord;
namespace tg = vtc::tenengolts;

namespace {

QaryWord Q(const char* s, unsigned q) { return QaryWord::parse(s, q); }

std::vector<QaryWord> brute_code(const tg::Params& p) {
  std::vector<QaryWord> out;
  for (const auto& s : oracle::all_strings(p.n(), p.q())) {
    if (oracle::tenengolts_member(s, p.n(), p.q(), p.a(), p.b())) out.push_back(QaryWord::parse(s, p.q()));
  }
  return out;
}

}  // namespace

TEST_CASE("alpha sequence examples") {
  CHECK(tg::alpha_sequence(Q("0212", 3)) == BinaryWord::parse("101"));
  CHECK(tg::alpha_sequence(Q("0000", 3)) == BinaryWord::parse("111"));
  CHECK(tg::alpha_sequence(Q("210", 3)) == BinaryWord::parse("00"));
  CHECK_THROWS_AS(tg::alpha_sequence(Q("2", 3)), vtc::InvalidArgument);
}

TEST_CASE("membership examples") {
  CHECK(tg::is_codeword(Q("0212", 3), tg::Params(4, 3, 0, 2)));
  CHECK(tg::is_codeword(Q("0000", 3), tg::Params(4, 3, 2, 0)));
  CHECK_FALSE(tg::is_codeword(Q("0221", 3), tg::Params(4, 3, 0, 2)));
  CHECK_THROWS_AS(tg::is_codeword(Q("0212", 4), tg::Params(4, 3, 0, 2)), vtc::InvalidArgument);
  CHECK_THROWS_AS(tg::Params(4, 3, 4, 0), vtc::InvalidArgument);
  CHECK_THROWS_AS(tg::Params(4, 3, 0, 3), vtc::InvalidArgument);
  CHECK_THROWS_AS(tg::Params(1, 3, 0, 0), vtc::InvalidArgument);
}

TEST_CASE("decoder examples") {
  auto o = tg::decode_deletion(Q("022", 3), tg::Params(4, 3, 0, 2));
  CHECK(o.codeword == Q("0212", 3));
  CHECK(o.value == 1);
  CHECK(o.positions == vtc::PositionInterval{3, 3});
  auto z = tg::decode_deletion(Q("000", 3), tg::Params(4, 3, 2, 0));
  CHECK(z.codeword == Q("0000", 3));
  CHECK(z.value == 0);
  CHECK(z.positions == vtc::PositionInterval{1, 4});

  auto ins = tg::decode_insertion(Q("00212", 3), tg::Params(4, 3, 0, 2));
  CHECK(ins.codeword == Q("0212", 3));
  CHECK(ins.value == 0);
  CHECK(ins.positions == vtc::PositionInterval{1, 2});
  CHECK(tg::decode_insertion(Q("00000", 3), tg::Params(4, 3, 2, 0)).codeword == Q("0000", 3));
}

TEST_CASE("enumeration of the smallest binary code") {
  // 00, 01 and 11 have alpha checksum 1; 10 has odd weight.
  const tg::Params p(2, 2, 0, 0);
  CHECK(brute_code(p).empty());
  CHECK(tg::enumerate(p).empty());
  CHECK(tg::Indexer(p).size() == 0);
  CHECK(tg::enumerate(tg::Params(2, 2, 1, 0)) == std::vector<QaryWord>{Q("00", 2), Q("11", 2)});
}

TEST_CASE("enumeration matches brute force and partitions the space") {
  for (unsigned q : {2U, 3U, 4U}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      std::uint64_t total = 0, best = 0;
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
          const tg::Params p(n, q, a, b);
          auto code = tg::enumerate(p);
          REQUIRE(code == brute_code(p));
          total += code.size();
          best = std::max<std::uint64_t>(best, code.size());
        }
      }
      std::uint64_t space = 1;
      for (std::size_t i = 0; i < n; ++i) space *= q;
      CHECK(total == space);
      CHECK(best * n * q >= space);
    }
  }
  CHECK_THROWS_AS(tg::enumerate(tg::Params(13, 4, 0, 0)), vtc::ResourceLimit);
}

TEST_CASE("syndrome decoder agrees with the scan decoder and recovers every deletion") {
  for (unsigned q : {2U, 3U, 4U, 5U}) {
    for (std::size_t n = 2; n <= (q == 5 ? 6U : 7U); ++n) {
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
          const tg::Params p(n, q, a, b);
          for (const auto& x : tg::enumerate(p)) {
            for (std::size_t i = 1; i <= n; ++i) {
              const auto y = x.with_deleted(i);
              const auto fast = tg::decode_deletion(y, p);
              const auto slow = tg::decode_deletion_reference(y, p);
              REQUIRE(fast.codeword == x);
              REQUIRE(slow.codeword == x);
              REQUIRE(fast.positions == slow.positions);
              REQUIRE(fast.value == x.at(i));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("syndrome decoder matches the scan decoder on every short word") {
  // Includes words with no parent in the code.
  for (unsigned q : {3U, 4U}) {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
          const tg::Params p(n, q, a, b);
          for (const auto& s : oracle::all_strings(n - 1, q)) {
            const auto y = QaryWord::parse(s, q);
            std::optional<QaryWord> fast, slow;
            try {
              fast = tg::decode_deletion(y, p).codeword;
            } catch (const vtc::CorruptInput&) {
            }
            try {
              slow = tg::decode_deletion_reference(y, p).codeword;
            } catch (const vtc::CorruptInput&) {
            }
            REQUIRE(fast == slow);
          }
        }
      }
    }
  }
}

TEST_CASE("insertion round trip") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < 3; ++b) {
        const tg::Params p(n, 3, a, b);
        for (const auto& x : tg::enumerate(p)) {
          for (const auto& y : vtc::insertion_ball(x, 1)) REQUIRE(tg::decode_insertion(y, p).codeword == x);
        }
      }
    }
  }
}

TEST_CASE("distinct codewords are not confusable") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < 3; ++b) {
        auto code = tg::enumerate(tg::Params(n, 3, a, b));
        for (std::size_t i = 0; i < code.size(); ++i) {
          for (std::size_t j = i + 1; j < code.size(); ++j) REQUIRE_FALSE(vtc::confusable(code[i], code[j], 1));
        }
      }
    }
  }
}

TEST_CASE("one symbol deletion is one alpha deletion") {
  for (unsigned q : {2U, 3U, 4U}) {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (const auto& s : oracle::all_strings(n, q)) {
        const auto x = QaryWord::parse(s, q);
        const auto ax = tg::alpha_sequence(x);
        for (std::size_t i = 1; i <= n; ++i) {
          REQUIRE(vtc::deletion_ball(ax, 1).contains(tg::alpha_sequence(x.with_deleted(i))));
        }
      }
    }
  }
}

TEST_CASE("index encoding is a bijection") {
  for (unsigned q : {2U, 3U, 5U}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
          const tg::Params p(n, q, a, b);
          const auto code = tg::enumerate(p);
          tg::Indexer idx(p);
          REQUIRE(idx.size() == code.size());
          for (std::uint64_t k = 0; k < code.size(); ++k) {
            REQUIRE(tg::encode_by_index(k, p) == code[k]);
            REQUIRE(tg::decode_to_index(code[k], p) == k);
          }
          CHECK_THROWS_AS(tg::encode_by_index(code.size(), p), vtc::InvalidArgument);
        }
      }
    }
  }
}

TEST_CASE("large alphabets use the comma format") {
  const tg::Params p(4, 16, 0, 5);
  const auto x = tg::encode_by_index(7, p);
  CHECK(tg::is_codeword(x, p));
  CHECK(QaryWord::parse(x.to_string(), 16) == x);
  CHECK(tg::decode_deletion(x.with_deleted(2), p).codeword == x);
}
