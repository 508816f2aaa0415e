#include "vt_indel.hpp"

#include <string>

#include "vt_binary.hpp"

namespace vtc::shifted {

Params::Params(std::size_t n, std::uint64_t a) : n_(n), a_(a) {
  if (n < 1) throw InvalidArgument("shifted VT block length must be >= 1");
  if (a > 2 * n) throw InvalidArgument("shifted VT residue a=" + std::to_string(a) + " outside [0, 2n]");
}

bool is_codeword(const BinaryWord& x, const Params& params) {
  if (x.size() != params.n()) throw InvalidArgument("shifted::is_codeword: length mismatch");
  return vt::weighted_sum(x, params.modulus()) == params.a();
}

Received classify(const BinaryWord& y, const Params& params) {
  const std::size_t n = params.n();
  if (y.size() + 1 == n) return Received::kDeletion;
  if (y.size() == n + 1) return Received::kInsertion;
  if (y.size() == n) return Received::kSubstitutionOrClean;
  throw CorruptInput("shifted::classify: length " + std::to_string(y.size()) + " is not within one edit of " +
                     std::to_string(n));
}

namespace {

// S = 0 clean; S in [1, n] a 1->0 flip at p = S; S in [n+1, 2n] a 0->1 flip
// at p = 2n+1 - S (since S = -p mod 2n+1).
DecodeOutcome decode_substitution(const BinaryWord& y, const Params& params) {
  const std::size_t n = params.n();
  const auto s = vt::syndrome(y, params.a(), params.modulus()).residue;
  if (s == 0) return {y, ErrorKind::kNone, std::nullopt, std::nullopt};
  const bool one_to_zero = s <= n;
  const auto p = static_cast<std::size_t>(one_to_zero ? s : params.modulus() - s);
  const Symbol expected = one_to_zero ? 0 : 1;
  if (y.at(p) != expected) throw CorruptInput("shifted::decode: syndrome inconsistent with one substitution");
  return {y.with_flipped(p), ErrorKind::kSubstitution, static_cast<Symbol>(1 - expected), PositionInterval{p, p}};
}

}  // namespace

DecodeOutcome decode(const BinaryWord& y, const Params& params) {
  switch (classify(y, params)) {
    case Received::kDeletion:
      return vt::detail::decode_deletion(y, params.n(), params.a(), params.modulus());
    case Received::kInsertion:
      return vt::detail::decode_insertion(y, params.n(), params.a(), params.modulus());
    case Received::kSubstitutionOrClean:
      break;
  }
  return decode_substitution(y, params);
}

std::vector<BinaryWord> enumerate(const Params& params, const Limits& limits) {
  const std::size_t n = params.n();
  check_length_cap(n, limits, "shifted::enumerate");
  std::vector<BinaryWord> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    auto w = BinaryWord::from_integer(v, n);
    if (vt::weighted_sum(w, params.modulus()) == params.a()) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace vtc::shifted
