// vtcodes: command-line front end over the C interface.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vtcodes/vtcodes.h"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

enum Exit : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitDecode = 3,
  kExitResource = 4,
  kExitClaimFailed = 5,
};

int exit_for(vtc_status s) {
  switch (s) {
    case VTC_OK: return kExitOk;
    case VTC_INVALID_ARGUMENT: return kExitUsage;
    case VTC_CORRUPT_INPUT: return kExitDecode;
    case VTC_RESOURCE_LIMIT: return kExitResource;
    default: return kExitInternal;
  }
}

// Keeps the first failure that is not a usage error, else the usage error.
void merge_exit(int& current, int next) {
  if (next == kExitOk) return;
  if (current == kExitOk || current == kExitUsage) current = next;
}

struct Failure {
  vtc_status status;
  std::string message;
};

struct CodecDeleter {
  void operator()(vtc_codec* c) const { vtc_codec_destroy(c); }
};
struct ReportDeleter {
  void operator()(vtc_report* r) const { vtc_report_destroy(r); }
};
struct ListDeleter {
  void operator()(vtc_word_list* l) const { vtc_word_list_destroy(l); }
};
using CodecPtr = std::unique_ptr<vtc_codec, CodecDeleter>;
using ReportPtr = std::unique_ptr<vtc_report, ReportDeleter>;
using ListPtr = std::unique_ptr<vtc_word_list, ListDeleter>;

Failure last_failure(vtc_status s) { return {s, vtc_last_error()}; }

struct Options {
  std::string format = "plain";
  std::uint64_t seed = kDefaultSeed;
  double budget_seconds = 60;
  bool verbose = false;

  std::string code = "vt";
  std::uint32_t n = 0;
  std::string a = "0";
  std::uint64_t b = 0;
  std::uint32_t q = 2;
  std::uint32_t s = 1;
  std::uint32_t k = 0;
  std::uint32_t r = 2;

  std::vector<std::string> words;
  std::string file;
  std::string rows;

  std::string task;
  std::uint32_t e = 1;
  std::uint32_t s1 = 0;
  std::uint32_t s2 = 1;
  double alpha = 0.5;
  std::string code_words;

  std::string channel = "identity";
  std::uint64_t trials = 1000;
  std::string transcripts;

  bool structured() const { return format == "structured"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

vtc_family parse_family(const std::string& name) {
  if (name == "vt") return VTC_FAMILY_VT;
  if (name == "shifted-vt") return VTC_FAMILY_SHIFTED_VT;
  if (name == "tenengolts") return VTC_FAMILY_TENENGOLTS;
  if (name == "burst") return VTC_FAMILY_BURST;
  if (name == "repetition") return VTC_FAMILY_REPETITION;
  throw UsageError("unknown code family '" + name + "'");
}

vtc_channel_kind parse_channel(const std::string& name) {
  if (name == "identity") return VTC_CHANNEL_IDENTITY;
  if (name == "bdc") return VTC_CHANNEL_BDC;
  if (name == "single-deletion") return VTC_CHANNEL_SINGLE_DELETION;
  if (name == "single-insertion") return VTC_CHANNEL_SINGLE_INSERTION;
  if (name == "single-substitution") return VTC_CHANNEL_SINGLE_SUBSTITUTION;
  if (name == "burst") return VTC_CHANNEL_BURST;
  throw UsageError("unknown channel '" + name + "'");
}

const char* kind_name(vtc_error_kind k) {
  switch (k) {
    case VTC_KIND_NONE: return "none";
    case VTC_KIND_DELETION: return "deletion";
    case VTC_KIND_INSERTION: return "insertion";
    case VTC_KIND_Z_FLIP: return "z-flip";
    case VTC_KIND_SUBSTITUTION: return "substitution";
    case VTC_KIND_BURST: return "burst";
  }
  return "unknown";
}

// Which family flags each code accepts.
struct FlagUse {
  bool n, a, b, q, s, k, r;
};

FlagUse allowed_flags(vtc_family f) {
  switch (f) {
    case VTC_FAMILY_VT:
    case VTC_FAMILY_SHIFTED_VT: return {true, true, false, false, false, false, false};
    case VTC_FAMILY_TENENGOLTS: return {true, true, true, true, false, false, false};
    case VTC_FAMILY_BURST: return {false, true, false, false, true, true, false};
    case VTC_FAMILY_REPETITION: return {true, false, false, true, false, false, true};
  }
  return {};
}

struct CodecSetup {
  CodecPtr codec;
  json params;
};

CodecSetup make_codec(const Options& o, const CLI::App& cmd) {
  const vtc_family family = parse_family(o.code);
  const FlagUse use = allowed_flags(family);
  auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
  const std::pair<const char*, bool> checks[] = {{"--n", use.n}, {"--a", use.a}, {"--b", use.b}, {"--q", use.q},
                                                 {"--s", use.s}, {"--k", use.k}, {"--r", use.r}};
  for (const auto& [flag, ok] : checks) {
    if (given(flag) && !ok) throw UsageError(std::string(flag) + " does not apply to --code " + o.code);
  }
  if ((family == VTC_FAMILY_VT || family == VTC_FAMILY_SHIFTED_VT || family == VTC_FAMILY_TENENGOLTS) &&
      !given("--n")) {
    throw UsageError("--code " + o.code + " requires --n");
  }
  if (family == VTC_FAMILY_TENENGOLTS && !given("--q")) throw UsageError("--code tenengolts requires --q");
  if (family == VTC_FAMILY_BURST && !given("--k")) throw UsageError("--code burst requires --k");

  vtc_codec_params p;
  vtc_codec_params_init(&p);
  p.family = family;
  p.n = o.n;
  p.b = o.b;
  p.q = o.q;
  p.s = o.s;
  p.k = o.k;
  p.r = o.r;
  json params{{"code", o.code}};
  std::vector<std::uint64_t> residues;
  if (family == VTC_FAMILY_BURST) {
    if (given("--a")) {
      for (const auto& part : split(o.a, ',')) residues.push_back(parse_u64(part, "--a"));
    }
    p.residues = residues.empty() ? nullptr : residues.data();
    p.residue_count = residues.size();
    params["s"] = o.s;
    params["k"] = o.k;
    params["a"] = residues.empty() ? std::vector<std::uint64_t>(o.s, 0) : residues;
  } else {
    p.a = parse_u64(o.a, "--a");
    if (use.n) params["n"] = o.n;
    if (use.a) params["a"] = p.a;
    if (use.b) params["b"] = o.b;
    if (use.q) params["q"] = o.q;
    if (use.r) params["r"] = o.r;
  }
  vtc_codec* raw = nullptr;
  const vtc_status st = vtc_codec_create(&p, &raw);
  if (st != VTC_OK) throw UsageError(vtc_last_error());
  return {CodecPtr(raw), std::move(params)};
}

std::vector<std::string> read_inputs(const Options& o, const char* flag) {
  std::vector<std::string> words = o.words;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot open " + o.file);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      words.push_back(line);
    }
  }
  if (words.empty()) throw UsageError(std::string("no input words; pass ") + flag + " or --file");
  return words;
}

// Calls a C function that fills a text buffer, growing it when asked.
template <class Fn>
std::optional<std::string> call_text(Fn&& fn, Failure& failure) {
  std::vector<char> buf(64);
  for (;;) {
    std::size_t needed = 0;
    const vtc_status st = fn(buf.data(), buf.size(), &needed);
    if (st == VTC_OK) return std::string(buf.data());
    if (st == VTC_BUFFER_TOO_SMALL) {
      buf.resize(needed);
      continue;
    }
    failure = last_failure(st);
    return std::nullopt;
  }
}

struct Output {
  const Options& options;
  std::string command;
  json params;
  json results = json::array();
  std::string status = "ok";
  int exit = kExitOk;

  void error(std::size_t line, const Failure& f) {
    merge_exit(exit, exit_for(f.status));
    if (!options.structured()) std::cerr << "line " << line << ": " << f.message << '\n';
  }

  void emit() const {
    if (!options.structured()) return;
    json doc{{"version", vtc_version()},
             {"command", command},
             {"params", params},
             {"results", results},
             {"status", status}};
    std::cout << doc.dump(2) << '\n';
  }
};

int cmd_encode(const Options& o, const CLI::App& cmd) {
  auto setup = make_codec(o, cmd);
  Output out{o, "encode", setup.params};
  std::vector<std::vector<std::string>> row_sets;
  std::vector<std::string> inputs;
  if (!o.rows.empty()) {
    if (o.code != "burst") throw UsageError("--rows applies to --code burst only");
    row_sets.push_back(split(o.rows, ','));
    inputs.push_back(o.rows);
  } else {
    inputs = read_inputs(o, "--data");
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Failure failure{VTC_OK, {}};
    std::optional<std::string> word;
    if (!row_sets.empty()) {
      std::vector<const char*> ptrs;
      for (const auto& r : row_sets[i]) ptrs.push_back(r.c_str());
      word = call_text(
          [&](char* buf, std::size_t cap, std::size_t* needed) {
            return vtc_codec_encode_rows(setup.codec.get(), ptrs.data(), ptrs.size(), buf, cap, needed);
          },
          failure);
    } else {
      word = call_text(
          [&](char* buf, std::size_t cap, std::size_t* needed) {
            return vtc_codec_encode(setup.codec.get(), inputs[i].c_str(), buf, cap, needed);
          },
          failure);
    }
    if (word) {
      if (!o.structured()) std::cout << *word << '\n';
      out.results.push_back({{"input", inputs[i]}, {"codeword", *word}});
    } else {
      out.error(i + 1, failure);
      out.results.push_back({{"input", inputs[i]}, {"error", failure.message}});
    }
  }
  if (out.exit != kExitOk) out.status = "error";
  out.emit();
  return out.exit;
}

int cmd_decode(const Options& o, const CLI::App& cmd) {
  auto setup = make_codec(o, cmd);
  Output out{o, "decode", setup.params};
  const auto inputs = read_inputs(o, "--received");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Failure failure{VTC_OK, {}};
    vtc_outcome outcome{};
    auto word = call_text(
        [&](char* buf, std::size_t cap, std::size_t* needed) {
          return vtc_codec_decode(setup.codec.get(), inputs[i].c_str(), buf, cap, needed, &outcome);
        },
        failure);
    if (!word) {
      out.error(i + 1, failure);
      out.results.push_back({{"received", inputs[i]}, {"error", failure.message}});
      continue;
    }
    if (!o.structured()) {
      std::cout << *word;
      if (o.verbose) {
        std::cout << '\t' << kind_name(outcome.kind);
        if (outcome.value >= 0) std::cout << "\tvalue=" << outcome.value;
        if (outcome.lo > 0) std::cout << "\tpositions=" << outcome.lo << '-' << outcome.hi;
      }
      std::cout << '\n';
    }
    json r{{"received", inputs[i]}, {"codeword", *word}, {"kind", kind_name(outcome.kind)}};
    r["value"] = outcome.value >= 0 ? json(outcome.value) : json(nullptr);
    r["positions"] = outcome.lo > 0 ? json{{"lo", outcome.lo}, {"hi", outcome.hi}} : json(nullptr);
    out.results.push_back(std::move(r));
  }
  if (out.exit != kExitOk) out.status = "error";
  out.emit();
  return out.exit;
}

int cmd_enumerate(const Options& o, const CLI::App& cmd) {
  auto setup = make_codec(o, cmd);
  Output out{o, "enumerate", setup.params};
  vtc_word_list* raw = nullptr;
  const vtc_status st = vtc_codec_enumerate(setup.codec.get(), &raw);
  if (st != VTC_OK) {
    const Failure f = last_failure(st);
    std::cerr << f.message << '\n';
    out.status = "error";
    out.results.push_back({{"error", f.message}});
    out.emit();
    return exit_for(st);
  }
  ListPtr list(raw);
  json words = json::array();
  for (std::size_t i = 0; i < vtc_word_list_size(list.get()); ++i) {
    const char* w = vtc_word_list_get(list.get(), i);
    if (!o.structured()) std::cout << w << '\n';
    words.push_back(w);
  }
  out.results.push_back({{"size", words.size()}, {"codewords", std::move(words)}});
  out.emit();
  return kExitOk;
}

std::string plain_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& item : v) s += (s.empty() ? "" : ",") + plain_value(item);
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, item] : v.items()) s += (s.empty() ? "" : ",") + k + ":" + plain_value(item);
    return s;
  }
  return v.dump();
}

void print_record(const json& rec, bool verbose) {
  std::cout << rec.at("claim").get<std::string>();
  for (const auto& [k, v] : rec.at("parameters").items()) std::cout << ' ' << k << '=' << plain_value(v);
  std::cout << '\n';
  for (const auto& [k, v] : rec.at("values").items()) std::cout << "  " << k << ": " << plain_value(v) << '\n';
  const auto& witnesses = rec.at("witnesses");
  const std::size_t shown = verbose ? witnesses.size() : std::min<std::size_t>(witnesses.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "  witness: " << plain_value(witnesses[i]) << '\n';
  if (shown < witnesses.size()) std::cout << "  (" << witnesses.size() - shown << " more witnesses)\n";
  std::cout << "  result: " << (rec.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
}

void render_report(const Options& o, Output& out, vtc_report* raw) {
  ReportPtr report(raw);
  const json doc = json::parse(vtc_report_json(report.get()));
  out.results = doc.at("results");
  out.status = doc.at("status").get<std::string>();
  if (!o.structured()) {
    for (const auto& rec : out.results) print_record(rec, o.verbose);
    if (out.status != "ok") std::cout << "status: " << out.status << '\n';
  }
  out.emit();
}

vtc_analysis_task parse_task(const std::string& name) {
  if (name == "sizes") return VTC_ANALYZE_SIZES;
  if (name == "perfect") return VTC_ANALYZE_PERFECT;
  if (name == "optimal") return VTC_ANALYZE_OPTIMAL;
  if (name == "indel-lemma") return VTC_ANALYZE_INDEL_LEMMA;
  if (name == "buggy") return VTC_ANALYZE_BUGGY;
  if (name == "bounds") return VTC_ANALYZE_BOUNDS;
  if (name == "linearity") return VTC_ANALYZE_LINEARITY;
  throw UsageError("unknown analysis '" + name + "'");
}

int cmd_analyze(const Options& o, const CLI::App& cmd) {
  vtc_analysis_request req;
  vtc_analysis_request_init(&req);
  req.task = parse_task(o.task);
  req.n = o.n;
  req.a = parse_u64(o.a, "--a");
  req.e = o.e;
  if (cmd.count("--q") > 0) req.q = o.q;
  req.s1 = o.s1;
  req.s2 = o.s2;
  req.alpha = o.alpha;
  req.budget_seconds = o.budget_seconds;
  std::vector<std::string> words;
  std::vector<const char*> ptrs;
  if (!o.code_words.empty()) {
    words = split(o.code_words, ',');
    for (const auto& w : words) ptrs.push_back(w.c_str());
    req.words = ptrs.data();
    req.word_count = ptrs.size();
  }
  json params{{"task", o.task}};
  switch (req.task) {
    case VTC_ANALYZE_SIZES:
    case VTC_ANALYZE_LINEARITY: params["n"] = req.n; break;
    case VTC_ANALYZE_PERFECT:
    case VTC_ANALYZE_INDEL_LEMMA:
      if (words.empty()) {
        params["n"] = req.n;
        params["a"] = req.a;
      } else {
        params["code"] = words;
      }
      if (req.task == VTC_ANALYZE_INDEL_LEMMA) {
        params["s1"] = req.s1;
        params["s2"] = req.s2;
      }
      break;
    case VTC_ANALYZE_OPTIMAL:
      params["n"] = req.n;
      params["e"] = req.e;
      params["budget_seconds"] = req.budget_seconds;
      break;
    case VTC_ANALYZE_BUGGY:
      params["n"] = req.n;
      params["q"] = req.q;
      break;
    case VTC_ANALYZE_BOUNDS: params["alpha"] = req.alpha; break;
  }
  Output out{o, "analyze", std::move(params)};
  vtc_report* raw = nullptr;
  const vtc_status st = vtc_analyze(&req, &raw);
  if (st != VTC_OK) {
    if (st == VTC_INVALID_ARGUMENT) throw UsageError(vtc_last_error());
    std::cerr << vtc_last_error() << '\n';
    out.status = "error";
    out.results.push_back({{"error", vtc_last_error()}});
    out.emit();
    return exit_for(st);
  }
  const bool passed = vtc_report_passed(raw) != 0;
  render_report(o, out, raw);
  if (out.status == "timeout") return kExitResource;
  return passed ? kExitOk : kExitClaimFailed;
}

int cmd_simulate(const Options& o, const CLI::App& cmd) {
  auto setup = make_codec(o, cmd);
  vtc_channel_spec spec{parse_channel(o.channel), o.alpha, 1};
  if (spec.kind == VTC_CHANNEL_BURST) spec.s = o.s;
  json params = setup.params;
  params["channel"] = o.channel;
  params["trials"] = o.trials;
  params["seed"] = o.seed;
  if (spec.kind == VTC_CHANNEL_BDC) params["alpha"] = o.alpha;
  Output out{o, "simulate", std::move(params)};
  vtc_report* raw = nullptr;
  const vtc_status st = vtc_simulate(setup.codec.get(), &spec, o.trials, o.seed, &raw);
  if (st != VTC_OK) {
    if (st == VTC_INVALID_ARGUMENT) throw UsageError(vtc_last_error());
    std::cerr << vtc_last_error() << '\n';
    return exit_for(st);
  }
  ReportPtr report(raw);
  const json doc = json::parse(vtc_report_json(report.get()));
  out.results = doc.at("results");
  out.status = doc.at("status").get<std::string>();
  const json& rec = out.results.at(0);
  if (!o.transcripts.empty()) {
    std::ofstream file(o.transcripts);
    if (!file) throw UsageError("cannot write " + o.transcripts);
    file << rec.at("witnesses").dump(2) << '\n';
  }
  if (!o.structured()) {
    const json& v = rec.at("values");
    std::cout << "trials: " << v.at("trials") << '\n'
              << "successes: " << v.at("successes") << '\n'
              << "failures: " << v.at("failures") << '\n'
              << "success_rate: " << v.at("success_rate").dump() << '\n'
              << "seed: " << o.seed << '\n';
    for (const auto& [kind, count] : v.at("outcome_kinds").items()) {
      std::cout << "outcome " << kind << ": " << count << '\n';
    }
    if (o.verbose) {
      for (const auto& t : rec.at("witnesses")) std::cout << "failure: " << plain_value(t) << '\n';
    }
  }
  out.emit();
  return kExitOk;
}

void add_family_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--code", o.code, "Code family: vt, shifted-vt, tenengolts, burst, repetition")
      ->check(CLI::IsMember({"vt", "shifted-vt", "tenengolts", "burst", "repetition"}));
  cmd->add_option("--n", o.n, "Block length (message length for repetition)");
  cmd->add_option("--a", o.a, "Residue; comma-separated row residues for burst");
  cmd->add_option("--b", o.b, "Symbol-sum residue (tenengolts)");
  cmd->add_option("--q", o.q, "Alphabet size");
  cmd->add_option("--s", o.s, "Interleaving depth (burst code) or burst length (burst channel)");
  cmd->add_option("--k", o.k, "Row length (burst)");
  cmd->add_option("--r", o.r, "Copies per symbol (repetition)");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Insertion, deletion and substitution correcting codes"};
  app.set_version_flag("--version", std::string(vtc_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "structured"}));
  app.add_option("--seed", o.seed, "Random seed (default 1)");
  app.add_option("--budget-seconds", o.budget_seconds, "Time budget for the optimal code search");
  app.add_flag("-v,--verbose", o.verbose, "Show outcome details and every witness");

  auto* encode = app.add_subcommand("encode", "Encode data words");
  add_family_flags(encode, o);
  encode->add_option("--data", o.words, "Data word (repeatable)");
  encode->add_option("--file", o.file, "File with one data word per line");
  encode->add_option("--rows", o.rows, "Comma-separated VT rows to interleave (burst)");

  auto* decode = app.add_subcommand("decode", "Correct received words");
  add_family_flags(decode, o);
  decode->add_option("--received", o.words, "Received word (repeatable)");
  decode->add_option("--file", o.file, "File with one received word per line");

  auto* enumerate = app.add_subcommand("enumerate", "List every codeword");
  add_family_flags(enumerate, o);

  auto* analyze = app.add_subcommand("analyze", "Exhaustive checks");
  analyze->add_option("task", o.task, "sizes, perfect, optimal, indel-lemma, buggy, bounds, linearity")
      ->required()
      ->check(CLI::IsMember({"sizes", "perfect", "optimal", "indel-lemma", "buggy", "bounds", "linearity"}));
  analyze->add_option("--n", o.n, "Block length");
  analyze->add_option("--a", o.a, "Residue");
  analyze->add_option("--e", o.e, "Deletions (optimal)");
  analyze->add_option("--q", o.q, "Alphabet size (buggy, default 3)");
  analyze->add_option("--s1", o.s1, "Deletions (indel-lemma)");
  analyze->add_option("--s2", o.s2, "Insertions (indel-lemma)");
  analyze->add_option("--alpha", o.alpha, "Deletion probability (bounds)");
  analyze->add_option("--words", o.code_words, "Comma-separated code to test instead of VT_a(n)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo trials over a channel");
  add_family_flags(simulate, o);
  simulate->add_option("--channel", o.channel, "identity, bdc, single-deletion, single-insertion, "
                                               "single-substitution, burst")
      ->check(CLI::IsMember(
          {"identity", "bdc", "single-deletion", "single-insertion", "single-substitution", "burst"}));
  simulate->add_option("--alpha", o.alpha, "Deletion probability (bdc)");
  simulate->add_option("--trials", o.trials, "Number of trials");
  simulate->add_option("--transcripts", o.transcripts, "Write failure transcripts to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode) return cmd_encode(o, *encode);
    if (*decode) return cmd_decode(o, *decode);
    if (*enumerate) return cmd_enumerate(o, *enumerate);
    if (*analyze) return cmd_analyze(o, *analyze);
    if (*simulate) return cmd_simulate(o, *simulate);
  } catch (const UsageError& e) {
    std::cerr << "vtcodes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "vtcodes: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
