/*
 * vtcodes: single insertion/deletion/substitution correcting codes.
 *
 * C interface. All handles are opaque and owned by the caller once returned;
 * release them with the matching *_destroy function. Every fallible call
 * returns a vtc_status and, on failure, leaves a message retrievable with
 * vtc_last_error() on the calling thread.
 *
 * Words cross this boundary as NUL-terminated text: '0'/'1' for binary words,
 * digit strings for alphabets up to 10, comma-separated decimals above that.
 */
#ifndef VTCODES_VTCODES_H_
#define VTCODES_VTCODES_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(VTCODES_BUILDING)
#define VTC_API __declspec(dllexport)
#else
#define VTC_API __declspec(dllimport)
#endif
#else
#define VTC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vtc_status {
  VTC_OK = 0,
  VTC_INVALID_ARGUMENT = 1,
  VTC_CORRUPT_INPUT = 2,   /* received word is outside the correction radius */
  VTC_RESOURCE_LIMIT = 3,  /* enumeration cap exceeded */
  VTC_INTERNAL_ERROR = 4,
  VTC_BUFFER_TOO_SMALL = 5
} vtc_status;

typedef enum vtc_family {
  VTC_FAMILY_VT = 0,
  VTC_FAMILY_SHIFTED_VT = 1,
  VTC_FAMILY_TENENGOLTS = 2,
  VTC_FAMILY_BURST = 3,
  VTC_FAMILY_REPETITION = 4
} vtc_family;

typedef enum vtc_error_kind {
  VTC_KIND_NONE = 0,
  VTC_KIND_DELETION = 1,
  VTC_KIND_INSERTION = 2,
  VTC_KIND_Z_FLIP = 3,
  VTC_KIND_SUBSTITUTION = 4,
  VTC_KIND_BURST = 5
} vtc_error_kind;

typedef enum vtc_channel_kind {
  VTC_CHANNEL_IDENTITY = 0,
  VTC_CHANNEL_BDC = 1,
  VTC_CHANNEL_SINGLE_DELETION = 2,
  VTC_CHANNEL_SINGLE_INSERTION = 3,
  VTC_CHANNEL_SINGLE_SUBSTITUTION = 4,
  VTC_CHANNEL_BURST = 5
} vtc_channel_kind;

typedef enum vtc_analysis_task {
  VTC_ANALYZE_SIZES = 0,
  VTC_ANALYZE_PERFECT = 1,
  VTC_ANALYZE_OPTIMAL = 2,
  VTC_ANALYZE_INDEL_LEMMA = 3,
  VTC_ANALYZE_BUGGY = 4,
  VTC_ANALYZE_BOUNDS = 5,
  VTC_ANALYZE_LINEARITY = 6
} vtc_analysis_task;

/* Fields used per family:
 *   VT, SHIFTED_VT: n, a          TENENGOLTS: n, q, a, b
 *   BURST: s, k, residues (NULL means all zero)
 *   REPETITION: r, q, n (message length, 0 = any) */
typedef struct vtc_codec_params {
  vtc_family family;
  uint32_t n;
  uint64_t a;
  uint64_t b;
  uint32_t q;
  uint32_t s;
  uint32_t k;
  uint32_t r;
  const uint64_t* residues;
  size_t residue_count;
} vtc_codec_params;

typedef struct vtc_outcome {
  vtc_error_kind kind;
  int32_t value; /* restored or removed symbol, -1 when not applicable */
  uint32_t lo;   /* 1-based position interval, 0 when not applicable */
  uint32_t hi;
} vtc_outcome;

typedef struct vtc_analysis_request {
  vtc_analysis_task task;
  uint32_t n;
  uint64_t a;
  uint32_t e;     /* deletions, OPTIMAL */
  uint32_t q;     /* alphabet, BUGGY */
  uint32_t s1;    /* deletions, INDEL_LEMMA */
  uint32_t s2;    /* insertions, INDEL_LEMMA */
  double alpha;   /* BOUNDS */
  double budget_seconds;
  /* Optional explicit code for PERFECT and INDEL_LEMMA; VT_a(n) when NULL. */
  const char* const* words;
  size_t word_count;
} vtc_analysis_request;

typedef struct vtc_channel_spec {
  vtc_channel_kind kind;
  double alpha; /* BDC */
  uint32_t s;   /* BURST */
} vtc_channel_spec;

typedef struct vtc_codec vtc_codec;
typedef struct vtc_word_list vtc_word_list;
typedef struct vtc_report vtc_report;

VTC_API const char* vtc_version(void);
VTC_API const char* vtc_status_string(vtc_status status);
VTC_API const char* vtc_last_error(void);

VTC_API void vtc_codec_params_init(vtc_codec_params* params);
VTC_API vtc_status vtc_codec_create(const vtc_codec_params* params, vtc_codec** out);
VTC_API void vtc_codec_destroy(vtc_codec* codec);
VTC_API size_t vtc_codec_length(const vtc_codec* codec);
VTC_API size_t vtc_codec_data_length(const vtc_codec* codec);
VTC_API uint32_t vtc_codec_alphabet(const vtc_codec* codec);
VTC_API uint32_t vtc_codec_data_alphabet(const vtc_codec* codec);

/* Text results are written to buf (capacity cap, NUL included). *needed, when
 * non-NULL, receives the required capacity; VTC_BUFFER_TOO_SMALL is returned
 * if cap is less than that. */
VTC_API vtc_status vtc_codec_encode(const vtc_codec* codec, const char* data, char* buf, size_t cap, size_t* needed);
/* Burst codes only: interleave s rows that are already VT codewords. */
VTC_API vtc_status vtc_codec_encode_rows(const vtc_codec* codec, const char* const* rows, size_t row_count,
                                         char* buf, size_t cap, size_t* needed);
VTC_API vtc_status vtc_codec_decode(const vtc_codec* codec, const char* received, char* buf, size_t cap,
                                    size_t* needed, vtc_outcome* outcome);
VTC_API vtc_status vtc_codec_is_codeword(const vtc_codec* codec, const char* word, int* result);
VTC_API vtc_status vtc_codec_enumerate(const vtc_codec* codec, vtc_word_list** out);

VTC_API size_t vtc_word_list_size(const vtc_word_list* list);
VTC_API const char* vtc_word_list_get(const vtc_word_list* list, size_t index);
VTC_API void vtc_word_list_destroy(vtc_word_list* list);

VTC_API void vtc_analysis_request_init(vtc_analysis_request* request);
VTC_API vtc_status vtc_analyze(const vtc_analysis_request* request, vtc_report** out);
VTC_API vtc_status vtc_simulate(const vtc_codec* codec, const vtc_channel_spec* channel, uint64_t trials,
                                uint64_t seed, vtc_report** out);

/* JSON text {"results": [...], "status": "ok" | "timeout"}; valid until the
 * report is destroyed. */
VTC_API const char* vtc_report_json(const vtc_report* report);
/* 1 when every record in the report passed. */
VTC_API int vtc_report_passed(const vtc_report* report);
VTC_API void vtc_report_destroy(vtc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* VTCODES_VTCODES_H_ */
