#include "vtcodes/vtcodes.h"

#include <cstring>
#include <new>
#include <memory>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "burst.hpp"
#include "channels.hpp"
#include "codec.hpp"
#include "report.hpp"
#include "vt_binary.hpp"

struct vtc_codec {
  std::unique_ptr<vtc::Codec> impl;
};

struct vtc_word_list {
  std::vector<std::string> words;
};

struct vtc_report {
  std::string json;
  bool passed = false;
};

namespace {

thread_local std::string g_last_error;

template <class F>
vtc_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return VTC_OK;
  } catch (const vtc::InvalidArgument& e) {
    g_last_error = e.what();
    return VTC_INVALID_ARGUMENT;
  } catch (const vtc::CorruptInput& e) {
    g_last_error = e.what();
    return VTC_CORRUPT_INPUT;
  } catch (const vtc::ResourceLimit& e) {
    g_last_error = e.what();
    return VTC_RESOURCE_LIMIT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return VTC_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VTC_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown exception";
    return VTC_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw vtc::InvalidArgument(what);
}

vtc_status write_text(const std::string& text, char* buf, std::size_t cap, std::size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (buf == nullptr || cap < text.size() + 1) {
    g_last_error = "output buffer too small";
    return VTC_BUFFER_TOO_SMALL;
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return VTC_OK;
}

vtc::QaryWord parse_word(const char* text, unsigned q) {
  require(text != nullptr, "word text is NULL");
  return vtc::QaryWord::parse(text, q);
}

vtc_error_kind to_c(vtc::ErrorKind kind) {
  switch (kind) {
    case vtc::ErrorKind::kNone: return VTC_KIND_NONE;
    case vtc::ErrorKind::kDeletion: return VTC_KIND_DELETION;
    case vtc::ErrorKind::kInsertion: return VTC_KIND_INSERTION;
    case vtc::ErrorKind::kZFlip: return VTC_KIND_Z_FLIP;
    case vtc::ErrorKind::kSubstitution: return VTC_KIND_SUBSTITUTION;
    case vtc::ErrorKind::kBurst: return VTC_KIND_BURST;
  }
  return VTC_KIND_NONE;
}

vtc::CodeFamily to_family(vtc_family f) {
  switch (f) {
    case VTC_FAMILY_VT: return vtc::CodeFamily::kVt;
    case VTC_FAMILY_SHIFTED_VT: return vtc::CodeFamily::kShiftedVt;
    case VTC_FAMILY_TENENGOLTS: return vtc::CodeFamily::kTenengolts;
    case VTC_FAMILY_BURST: return vtc::CodeFamily::kBurst;
    case VTC_FAMILY_REPETITION: return vtc::CodeFamily::kRepetition;
  }
  throw vtc::InvalidArgument("unknown code family");
}

vtc::channels::ChannelKind to_channel(vtc_channel_kind k) {
  using vtc::channels::ChannelKind;
  switch (k) {
    case VTC_CHANNEL_IDENTITY: return ChannelKind::kIdentity;
    case VTC_CHANNEL_BDC: return ChannelKind::kBdc;
    case VTC_CHANNEL_SINGLE_DELETION: return ChannelKind::kSingleDeletion;
    case VTC_CHANNEL_SINGLE_INSERTION: return ChannelKind::kSingleInsertion;
    case VTC_CHANNEL_SINGLE_SUBSTITUTION: return ChannelKind::kSingleSubstitution;
    case VTC_CHANNEL_BURST: return ChannelKind::kBurst;
  }
  throw vtc::InvalidArgument("unknown channel kind");
}

std::vector<vtc::BinaryWord> explicit_code(const vtc_analysis_request& r) {
  std::vector<vtc::BinaryWord> code;
  for (std::size_t i = 0; i < r.word_count; ++i) {
    require(r.words[i] != nullptr, "code word is NULL");
    code.push_back(vtc::BinaryWord::parse(r.words[i]));
  }
  return code;
}

vtc_report* finish(vtc::report::json results, bool timed_out = false) {
  auto rep = std::make_unique<vtc_report>();
  rep->passed = true;
  for (const auto& r : results) rep->passed = rep->passed && r.at("pass").get<bool>();
  vtc::report::json doc{{"results", std::move(results)}, {"status", timed_out ? "timeout" : "ok"}};
  rep->json = doc.dump();
  return rep.release();
}

vtc_report* run_analysis(const vtc_analysis_request& r) {
  namespace an = vtc::analysis;
  namespace rp = vtc::report;
  rp::json results = rp::json::array();
  switch (r.task) {
    case VTC_ANALYZE_SIZES:
      results.push_back(rp::to_record(an::size_distribution(r.n)));
      break;
    case VTC_ANALYZE_PERFECT:
      if (r.words != nullptr && r.word_count > 0) {
        auto code = explicit_code(r);
        results.push_back(rp::to_record(an::verify_perfect(code, code.front().size())));
      } else {
        results.push_back(rp::to_record(an::verify_perfect(r.n, r.a)));
      }
      break;
    case VTC_ANALYZE_OPTIMAL: {
      auto found = an::optimal_code_size(r.n, r.e, r.budget_seconds);
      results.push_back(rp::to_record(found));
      return finish(std::move(results), found.status == an::SolverStatus::kTimeout);
    }
    case VTC_ANALYZE_INDEL_LEMMA:
      if (r.words != nullptr && r.word_count > 0) {
        auto code = explicit_code(r);
        results.push_back(rp::indel_record(code.front().size(), 0, r.s1, r.s2, an::verify_indel_lemma(code, r.s1, r.s2)));
        results.back()["parameters"].erase("a");
        results.back()["parameters"]["code"] = r.word_count;
      } else {
        auto code = vtc::vt::enumerate(vtc::vt::Params(r.n, r.a));
        results.push_back(rp::indel_record(r.n, r.a, r.s1, r.s2, an::verify_indel_lemma(code, r.s1, r.s2)));
      }
      break;
    case VTC_ANALYZE_BUGGY:
      for (auto range : {an::IndicatorRange::kFromOne, an::IndicatorRange::kFromTwo}) {
        results.push_back(rp::buggy_record(r.n, r.q, range, an::falsify_buggy_nonbinary(r.n, r.q, range)));
      }
      if (r.n >= 2) results.push_back(rp::tenengolts_record(r.n, r.q, an::tenengolts_counterexample(r.n, r.q)));
      break;
    case VTC_ANALYZE_BOUNDS:
      results.push_back(rp::to_record(an::capacity_bounds(r.alpha)));
      break;
    case VTC_ANALYZE_LINEARITY:
      results.push_back(rp::linearity_record(r.n, an::linearity_check(r.n)));
      break;
    default:
      throw vtc::InvalidArgument("unknown analysis task");
  }
  return finish(std::move(results));
}

}  // namespace

extern "C" {

const char* vtc_version(void) { return "1.0.0"; }

const char* vtc_status_string(vtc_status status) {
  switch (status) {
    case VTC_OK: return "ok";
    case VTC_INVALID_ARGUMENT: return "invalid argument";
    case VTC_CORRUPT_INPUT: return "corrupt input";
    case VTC_RESOURCE_LIMIT: return "resource limit";
    case VTC_INTERNAL_ERROR: return "internal error";
    case VTC_BUFFER_TOO_SMALL: return "buffer too small";
  }
  return "unknown status";
}

const char* vtc_last_error(void) { return g_last_error.c_str(); }

void vtc_codec_params_init(vtc_codec_params* params) {
  if (params == nullptr) return;
  *params = vtc_codec_params{};
  params->family = VTC_FAMILY_VT;
  params->q = 2;
  params->s = 1;
  params->r = 2;
}

vtc_status vtc_codec_create(const vtc_codec_params* params, vtc_codec** out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    vtc::CodecConfig cfg;
    cfg.family = to_family(params->family);
    cfg.n = params->n;
    cfg.a = params->a;
    cfg.b = params->b;
    cfg.q = params->q;
    cfg.s = params->s;
    cfg.k = params->k;
    cfg.r = params->r;
    if (params->residues != nullptr) cfg.residues.assign(params->residues, params->residues + params->residue_count);
    *out = new vtc_codec{vtc::make_codec(cfg)};
  });
}

void vtc_codec_destroy(vtc_codec* codec) { delete codec; }

size_t vtc_codec_length(const vtc_codec* codec) { return codec ? codec->impl->length() : 0; }
size_t vtc_codec_data_length(const vtc_codec* codec) { return codec ? codec->impl->data_length() : 0; }
uint32_t vtc_codec_alphabet(const vtc_codec* codec) { return codec ? codec->impl->alphabet() : 0; }
uint32_t vtc_codec_data_alphabet(const vtc_codec* codec) { return codec ? codec->impl->data_alphabet() : 0; }

vtc_status vtc_codec_encode(const vtc_codec* codec, const char* data, char* buf, size_t cap, size_t* needed) {
  std::string text;
  auto st = guarded([&] {
    require(codec != nullptr, "NULL codec");
    text = codec->impl->encode(parse_word(data, codec->impl->data_alphabet())).to_string();
  });
  return st == VTC_OK ? write_text(text, buf, cap, needed) : st;
}

vtc_status vtc_codec_encode_rows(const vtc_codec* codec, const char* const* rows, size_t row_count, char* buf,
                                 size_t cap, size_t* needed) {
  std::string text;
  auto st = guarded([&] {
    require(codec != nullptr && rows != nullptr, "NULL argument");
    require(codec->impl->family() == vtc::CodeFamily::kBurst, "encode_rows needs a burst code");
    const auto& cfg = codec->impl->config();
    std::vector<vtc::BinaryWord> parsed;
    for (std::size_t i = 0; i < row_count; ++i) {
      require(rows[i] != nullptr, "row is NULL");
      parsed.push_back(vtc::BinaryWord::parse(rows[i]));
    }
    text = vtc::burst::encode(parsed, vtc::burst::Params(cfg.s, cfg.k, cfg.residues)).to_string();
  });
  return st == VTC_OK ? write_text(text, buf, cap, needed) : st;
}

vtc_status vtc_codec_decode(const vtc_codec* codec, const char* received, char* buf, size_t cap, size_t* needed,
                            vtc_outcome* outcome) {
  std::string text;
  auto st = guarded([&] {
    require(codec != nullptr, "NULL codec");
    auto o = codec->impl->decode(parse_word(received, codec->impl->alphabet()));
    text = o.codeword.to_string();
    if (outcome != nullptr) {
      outcome->kind = to_c(o.kind);
      outcome->value = o.value ? static_cast<int32_t>(*o.value) : -1;
      outcome->lo = o.positions ? static_cast<uint32_t>(o.positions->lo) : 0;
      outcome->hi = o.positions ? static_cast<uint32_t>(o.positions->hi) : 0;
    }
  });
  return st == VTC_OK ? write_text(text, buf, cap, needed) : st;
}

vtc_status vtc_codec_is_codeword(const vtc_codec* codec, const char* word, int* result) {
  return guarded([&] {
    require(codec != nullptr && result != nullptr, "NULL argument");
    const auto w = parse_word(word, codec->impl->alphabet());
    const std::size_t n = codec->impl->length();
    // Length mismatches are answered, not rejected.
    *result = (n == 0 || w.size() == n) && codec->impl->is_codeword(w) ? 1 : 0;
  });
}

vtc_status vtc_codec_enumerate(const vtc_codec* codec, vtc_word_list** out) {
  return guarded([&] {
    require(codec != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    auto list = std::make_unique<vtc_word_list>();
    for (const auto& w : codec->impl->enumerate(vtc::Limits{})) list->words.push_back(w.to_string());
    *out = list.release();
  });
}

size_t vtc_word_list_size(const vtc_word_list* list) { return list ? list->words.size() : 0; }

const char* vtc_word_list_get(const vtc_word_list* list, size_t index) {
  if (list == nullptr || index >= list->words.size()) return nullptr;
  return list->words[index].c_str();
}

void vtc_word_list_destroy(vtc_word_list* list) { delete list; }

void vtc_analysis_request_init(vtc_analysis_request* request) {
  if (request == nullptr) return;
  *request = vtc_analysis_request{};
  request->task = VTC_ANALYZE_SIZES;
  request->e = 1;
  request->q = 3;
  request->s2 = 1;
  request->alpha = 0.5;
  request->budget_seconds = 60.0;
}

vtc_status vtc_analyze(const vtc_analysis_request* request, vtc_report** out) {
  return guarded([&] {
    require(request != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    *out = run_analysis(*request);
  });
}

vtc_status vtc_simulate(const vtc_codec* codec, const vtc_channel_spec* channel, uint64_t trials, uint64_t seed,
                        vtc_report** out) {
  return guarded([&] {
    require(codec != nullptr && channel != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    vtc::channels::ChannelSpec spec{to_channel(channel->kind), channel->alpha, channel->s, seed};
    auto rep = vtc::channels::run_experiment(*codec->impl, spec, trials, seed);
    vtc::report::json results = vtc::report::json::array();
    results.push_back(vtc::report::to_record(rep, *codec->impl, spec));
    *out = finish(std::move(results));
  });
}

const char* vtc_report_json(const vtc_report* report) { return report ? report->json.c_str() : ""; }

int vtc_report_passed(const vtc_report* report) { return report && report->passed ? 1 : 0; }

void vtc_report_destroy(vtc_report* report) { delete report; }

}  // extern "C"
