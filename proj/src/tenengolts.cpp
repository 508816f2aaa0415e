#include "tenengolts.hpp"

#include <cmath>
#include <string>

#include "vt_binary.hpp"

namespace vtc::tenengolts {

Params::Params(std::size_t n, unsigned q, std::uint64_t a, std::uint64_t b) : n_(n), q_(q), a_(a), b_(b) {
  if (n < 2) throw InvalidArgument("Tenengolts block length must be >= 2");
  if (q < 2 || q > 256) throw InvalidArgument("Tenengolts alphabet size must be in [2, 256]");
  if (a >= n) throw InvalidArgument("Tenengolts residue a=" + std::to_string(a) + " outside [0, n-1]");
  if (b >= q) throw InvalidArgument("Tenengolts residue b=" + std::to_string(b) + " outside [0, q-1]");
}

namespace {

// Alpha of any length, including words shorter than 2.
BinaryWord alpha_of(std::span<const Symbol> s) {
  std::vector<Symbol> alpha;
  for (std::size_t i = 1; i < s.size(); ++i) alpha.push_back(s[i] >= s[i - 1] ? 1 : 0);
  return BinaryWord(std::move(alpha));
}

void require_shape(const QaryWord& w, std::size_t expected, const Params& params, const char* what) {
  if (w.alphabet() != params.q()) {
    throw InvalidArgument(std::string(what) + ": word alphabet " + std::to_string(w.alphabet()) +
                          " does not match q=" + std::to_string(params.q()));
  }
  if (w.size() != expected) {
    throw InvalidArgument(std::string(what) + ": expected length " + std::to_string(expected) + ", got " +
                          std::to_string(w.size()));
  }
}

Symbol deleted_value(const QaryWord& y, const Params& params) {
  const std::uint64_t q = params.q();
  return static_cast<Symbol>((params.b() + q - y.symbol_sum() % q) % q);
}

}  // namespace

BinaryWord alpha_sequence(const QaryWord& x) {
  if (x.size() < 2) throw InvalidArgument("alpha_sequence: word shorter than 2");
  return alpha_of(x.symbols());
}

std::uint64_t alpha_checksum(const QaryWord& x) { return vt::weighted_sum(alpha_of(x.symbols()), x.size()); }

bool is_codeword(const QaryWord& x, const Params& params) {
  require_shape(x, params.n(), params, "tenengolts::is_codeword");
  return alpha_checksum(x) == params.a() && x.symbol_sum() % params.q() == params.b();
}

QaryDecodeOutcome decode_deletion(const QaryWord& y, const Params& params) {
  require_shape(y, params.n() - 1, params, "tenengolts::decode_deletion");
  const std::size_t n = params.n();
  const Symbol v = deleted_value(y, params);
  const auto ys = y.symbols();

  // alpha(x) lost exactly one entry, so it is the VT_a(n-1) codeword
  // reachable from alpha(y).
  const BinaryWord alpha_y = alpha_of(ys);
  const BinaryWord alpha_x = vt::detail::decode_deletion(alpha_y, n - 1, params.a(), n).codeword;
  const auto ay = alpha_y.symbols();  // ay[k] compares y_{k+2} with y_{k+1}
  const auto ax = alpha_x.symbols();  // ax[k] compares x_{k+2} with x_{k+1}

  // Inserting v at slot p keeps alpha(y) entries left of p at their index and
  // shifts the ones right of p by one; only entries p-1 and p (0-based) are new.
  std::size_t prefix = 0;
  while (prefix < ay.size() && ay[prefix] == ax[prefix]) ++prefix;
  std::size_t suffix_from = ax.size();
  while (suffix_from >= 2 && ax[suffix_from - 1] == ay[suffix_from - 2]) --suffix_from;

  std::size_t first = 0, last = 0;
  for (std::size_t p = 1; p <= n; ++p) {
    if (p >= 2 && prefix < p - 2) break;
    if (p < suffix_from) continue;
    if (p >= 2 && ax[p - 2] != (v >= ys[p - 2] ? 1 : 0)) continue;
    if (p <= n - 1 && ax[p - 1] != (ys[p - 1] >= v ? 1 : 0)) continue;
    if (first == 0) first = p;
    last = p;
  }
  if (first == 0) throw CorruptInput("tenengolts::decode_deletion: no codeword within one deletion");

  QaryWord x = y.with_inserted(first, v);
  const auto run = run_containing(x, first);
  if (!is_codeword(x, params) || last > run.hi) {
    throw InternalError("tenengolts::decode_deletion: placement disagrees with the code definition");
  }
  return {x, ErrorKind::kDeletion, v, run};
}

QaryDecodeOutcome decode_deletion_reference(const QaryWord& y, const Params& params) {
  require_shape(y, params.n() - 1, params, "tenengolts::decode_deletion_reference");
  const Symbol v = deleted_value(y, params);
  std::optional<QaryWord> found;
  std::size_t first = 0;
  for (std::size_t p = 1; p <= params.n(); ++p) {
    QaryWord x = y.with_inserted(p, v);
    if (!is_codeword(x, params)) continue;
    if (!found) {
      found = std::move(x);
      first = p;
    } else if (*found != x) {
      throw InternalError("tenengolts: two codewords share a deletion descendant");
    }
  }
  if (!found) throw CorruptInput("tenengolts::decode_deletion_reference: no codeword within one deletion");
  auto run = run_containing(*found, first);
  return {std::move(*found), ErrorKind::kDeletion, v, run};
}

QaryDecodeOutcome decode_insertion(const QaryWord& y, const Params& params) {
  require_shape(y, params.n() + 1, params, "tenengolts::decode_insertion");
  const std::uint64_t q = params.q();
  const auto removed = static_cast<Symbol>((y.symbol_sum() % q + q - params.b()) % q);
  std::optional<QaryWord> found;
  std::size_t where = 0;
  for (std::size_t p = 1; p <= y.size(); ++p) {
    if (y.symbols()[p - 1] != removed) continue;
    QaryWord x = y.with_deleted(p);
    if (!is_codeword(x, params)) continue;
    if (!found) {
      found = std::move(x);
      where = p;
    } else if (*found != x) {
      throw InternalError("tenengolts: two codewords share an insertion descendant");
    }
  }
  if (!found) throw CorruptInput("tenengolts::decode_insertion: no codeword within one insertion");
  return {std::move(*found), ErrorKind::kInsertion, removed, run_containing(y, where)};
}

std::vector<QaryWord> enumerate(const Params& params, const Limits& limits) {
  const std::size_t n = params.n();
  const unsigned q = params.q();
  const double bits = static_cast<double>(n) * std::log2(static_cast<double>(q));
  if (bits > static_cast<double>(limits.max_length)) {
    throw ResourceLimit("tenengolts::enumerate: q^n exceeds 2^" + std::to_string(limits.max_length) + " words");
  }
  std::vector<QaryWord> out;
  std::vector<Symbol> digits(n, 0);
  while (true) {
    QaryWord w(digits, q);
    if (is_codeword(w, params)) out.push_back(std::move(w));
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

Indexer::Indexer(const Params& params) : params_(params) {
  const std::size_t n = params.n();
  const std::size_t q = params.q();
  if (static_cast<double>(n) * std::log2(static_cast<double>(q)) >= 63.0) {
    throw ResourceLimit("tenengolts::Indexer: q^n does not fit in 63 bits");
  }
  if (n * q * n * q > (std::size_t{1} << 26)) throw ResourceLimit("tenengolts::Indexer: table too large");
  completions_.assign((n + 1) * q * n * q, 0);
  auto at = [&](std::size_t filled, std::size_t last, std::size_t as, std::size_t ss) -> std::uint64_t& {
    return completions_[((filled * q + last) * n + as) * q + ss];
  };
  for (std::size_t last = 0; last < q; ++last) at(n, last, params.a(), params.b()) = 1;
  for (std::size_t filled = n - 1; filled >= 1; --filled) {
    for (std::size_t last = 0; last < q; ++last) {
      for (std::size_t as = 0; as < n; ++as) {
        for (std::size_t ss = 0; ss < q; ++ss) {
          std::uint64_t total = 0;
          for (std::size_t c = 0; c < q; ++c) {
            // Position filled+1 carries alpha weight filled.
            const std::size_t next_as = (as + (c >= last ? filled : 0)) % n;
            total += at(filled + 1, c, next_as, (ss + c) % q);
          }
          at(filled, last, as, ss) = total;
        }
      }
    }
  }
  for (std::size_t c = 0; c < q; ++c) size_ += at(1, c, 0, c % q);
}

std::uint64_t Indexer::completions(std::size_t filled, Symbol last, std::uint64_t alpha_sum,
                                   std::uint64_t symbol_sum) const {
  const std::size_t n = params_.n();
  const std::size_t q = params_.q();
  return completions_[((filled * q + last) * n + alpha_sum) * q + symbol_sum];
}

QaryWord Indexer::encode(std::uint64_t index) const {
  if (index >= size_) {
    throw InvalidArgument("encode_by_index: index " + std::to_string(index) + " >= code size " +
                          std::to_string(size_));
  }
  const std::size_t n = params_.n();
  const unsigned q = params_.q();
  std::vector<Symbol> out;
  std::uint64_t as = 0, ss = 0;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    for (unsigned c = 0; c < q; ++c) {
      const std::uint64_t next_as = pos == 1 ? 0 : (as + (c >= out.back() ? pos - 1 : 0)) % n;
      const std::uint64_t next_ss = (ss + c) % q;
      const std::uint64_t count = completions(pos, static_cast<Symbol>(c), next_as, next_ss);
      if (index < count) {
        out.push_back(static_cast<Symbol>(c));
        as = next_as;
        ss = next_ss;
        break;
      }
      index -= count;
    }
  }
  return QaryWord(std::move(out), q);
}

std::uint64_t Indexer::index_of(const QaryWord& codeword) const {
  if (!is_codeword(codeword, params_)) throw InvalidArgument("decode_to_index: word is not a codeword");
  const std::size_t n = params_.n();
  const auto s = codeword.symbols();
  std::uint64_t index = 0, as = 0, ss = 0;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    for (unsigned c = 0; c <= s[pos - 1]; ++c) {
      const std::uint64_t next_as = pos == 1 ? 0 : (as + (c >= s[pos - 2] ? pos - 1 : 0)) % n;
      const std::uint64_t next_ss = (ss + c) % params_.q();
      if (c < s[pos - 1]) {
        index += completions(pos, static_cast<Symbol>(c), next_as, next_ss);
      } else {
        as = next_as;
        ss = next_ss;
      }
    }
  }
  return index;
}

QaryWord encode_by_index(std::uint64_t index, const Params& params) { return Indexer(params).encode(index); }

std::uint64_t decode_to_index(const QaryWord& codeword, const Params& params) {
  return Indexer(params).index_of(codeword);
}

}  // namespace vtc::tenengolts
