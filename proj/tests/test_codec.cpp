#include "codec.hpp"
#include "doctest.h"

using vtc::CodecConfig;
using vtc::CodeFamily;
using vtc::QaryWord;

namespace {

CodecConfig config(CodeFamily f) {
  CodecConfig c;
  c.family = f;
  return c;
}

// Encodes every data word (or a sample when there are many) and decodes
// every single edit the family promises to correct.
void round_trip(const vtc::Codec& codec, bool deletions, bool insertions, bool flips) {
  vtc::Rng rng(11);
  for (int t = 0; t < 64; ++t) {
    std::vector<vtc::Symbol> d(codec.data_length());
    for (auto& s : d) s = static_cast<vtc::Symbol>(rng.uniform(codec.data_alphabet()));
    const auto x = codec.encode(QaryWord(d, codec.data_alphabet()));
    REQUIRE(x.size() == codec.length());
    REQUIRE(codec.is_codeword(x));
    REQUIRE(codec.decode(x).codeword == x);
    for (std::size_t i = 1; i <= x.size(); ++i) {
      if (deletions) REQUIRE(codec.decode(x.with_deleted(i)).codeword == x);
      if (flips) {
        std::vector<vtc::Symbol> v(x.symbols().begin(), x.symbols().end());
        v[i - 1] ^= 1;
        REQUIRE(codec.decode(QaryWord(v, 2)).codeword == x);
      }
    }
    if (insertions) {
      for (const auto& y : vtc::insertion_ball(x, 1, vtc::Limits{64})) REQUIRE(codec.decode(y).codeword == x);
    }
  }
}

}  // namespace

TEST_CASE("family names") {
  for (auto f : {CodeFamily::kVt, CodeFamily::kShiftedVt, CodeFamily::kTenengolts, CodeFamily::kBurst,
                 CodeFamily::kRepetition}) {
    CHECK(vtc::parse_family(vtc::to_string(f)) == f);
  }
  CHECK_THROWS_AS(vtc::parse_family("hamming"), vtc::InvalidArgument);
}

TEST_CASE("vt codec") {
  auto c = config(CodeFamily::kVt);
  c.n = 7;
  auto codec = vtc::make_codec(c);
  CHECK(codec->data_length() == 4);
  CHECK(codec->encode(QaryWord::parse("1011", 2)).to_string() == "0010011");
  auto z = codec->decode(QaryWord::parse("0000011", 2));
  CHECK(z.kind == vtc::ErrorKind::kZFlip);
  CHECK(z.codeword.to_string() == "0010011");
  CHECK_THROWS_AS(codec->decode(QaryWord::parse("00100", 2)), vtc::CorruptInput);
  CHECK_THROWS_AS(codec->encode(QaryWord::parse("101", 2)), vtc::InvalidArgument);
  CHECK(codec->enumerate({}).size() == 16);
  c.n = 31;
  round_trip(*vtc::make_codec(c), true, true, false);
}

TEST_CASE("shifted codec") {
  auto c = config(CodeFamily::kShiftedVt);
  c.n = 10;
  c.a = 4;
  auto codec = vtc::make_codec(c);
  const auto size = codec->enumerate({}).size();
  CHECK((std::size_t{1} << codec->data_length()) <= size);
  CHECK((std::size_t{2} << codec->data_length()) > size);
  round_trip(*codec, true, true, true);
}

TEST_CASE("tenengolts codec") {
  auto c = config(CodeFamily::kTenengolts);
  c.n = 6;
  c.q = 4;
  c.a = 2;
  c.b = 3;
  auto codec = vtc::make_codec(c);
  CHECK(codec->alphabet() == 4);
  round_trip(*codec, true, true, false);
  CHECK_THROWS_AS(codec->decode(QaryWord::parse("000000", 4)), vtc::CorruptInput);
}

TEST_CASE("burst codec") {
  auto c = config(CodeFamily::kBurst);
  c.s = 2;
  c.k = 7;
  c.residues = {1, 5};
  auto codec = vtc::make_codec(c);
  CHECK(codec->length() == 14);
  CHECK(codec->data_length() == 8);
  const auto x = codec->encode(QaryWord::parse("10110011", 2));
  for (std::size_t j = 1; j <= 13; ++j) {
    auto y = x.with_deleted(j).with_deleted(j);
    auto o = codec->decode(y);
    CHECK(o.codeword == x);
    CHECK(o.kind == vtc::ErrorKind::kBurst);
  }
  CHECK_THROWS_AS(codec->decode(x.with_deleted(1)), vtc::CorruptInput);
}

TEST_CASE("repetition codec") {
  auto c = config(CodeFamily::kRepetition);
  auto any = vtc::make_codec(c);
  CHECK(any->length() == 0);
  CHECK(any->encode(QaryWord::parse("101", 2)).to_string() == "110011");
  CHECK(any->decode(QaryWord::parse("11001", 2)).codeword.to_string() == "110011");
  CHECK_THROWS_AS(any->enumerate({}), vtc::InvalidArgument);
  c.n = 4;
  c.q = 3;
  c.r = 3;
  auto fixed = vtc::make_codec(c);
  CHECK(fixed->enumerate({}).size() == 81);
  CHECK(fixed->is_codeword(QaryWord::parse("000222111000", 3)));
  CHECK_FALSE(fixed->is_codeword(QaryWord::parse("000221111000", 3)));
  round_trip(*fixed, true, false, false);
}
