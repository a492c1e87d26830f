// Copyright 2026 The hec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the hybrid entropy coder.
 *
 * All objects are opaque handles created by a *_create / *_load / *_ingest /
 * hec_encode call and released with the matching *_destroy function
 * (destroying NULL is a no-op). Every fallible call returns a hec_status; on
 * failure a description is available from hec_last_error() on the same
 * thread until the next failing call. Handles are not synchronised: share a
 * handle across threads only for read-only calls.
 */
#ifndef HEC_H
#define HEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HEC_API __declspec(dllexport)
#else
#define HEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2..5 double as the CLI exit codes. */
typedef enum hec_status {
  HEC_OK = 0,
  HEC_ERR_ARGUMENT = 1, /* NULL handle, unknown enum value, buffer too small */
  HEC_ERR_CONFIG = 2,
  HEC_ERR_IO = 3,
  HEC_ERR_TABLE = 4,
  HEC_ERR_EQUIVALENCE = 5,
  HEC_ERR_INTERNAL = 7
} hec_status;

typedef enum hec_core { HEC_CORE_REFERENCE = 0, HEC_CORE_STREAMING = 1 } hec_core;
typedef enum hec_order { HEC_ORDER_BIP = 0, HEC_ORDER_BIL = 1, HEC_ORDER_BSQ = 2 } hec_order;
typedef enum hec_endian { HEC_ENDIAN_LITTLE = 0, HEC_ENDIAN_BIG = 1 } hec_endian;

typedef struct hec_params hec_params;
typedef struct hec_tableset hec_tableset;
typedef struct hec_image hec_image;
typedef struct hec_result hec_result;

typedef struct hec_stats {
  uint64_t samples;
  uint64_t total_bits;
  uint64_t words;
  uint64_t high_samples;
  uint64_t low_samples;
  uint64_t high_codewords;
  uint64_t low_matches;
  uint64_t escapes;
  uint64_t rescale_bits;
  uint64_t uncompressed;
  uint64_t flush_words;
  uint64_t accumulators;
} hec_stats;

typedef struct hec_rate {
  uint64_t init_cycles;
  uint64_t sample_count;
  uint64_t tail_cycles;
  uint64_t escape_cycles;
  uint64_t cycles;
  double samples_per_cycle;
} hec_rate;

HEC_API const char *hec_version(void);
HEC_API const char *hec_last_error(void);

/* Coder parameters. Keys: nx ny nz d umax gamma0 gamma_star. A new set starts
 * with umax=18, gamma0=1, gamma_star=6 and zero dimensions. */
HEC_API hec_status hec_params_create(hec_params **out);
HEC_API void hec_params_destroy(hec_params *params);
HEC_API hec_status hec_params_set(hec_params *params, const char *key, uint64_t value);
HEC_API hec_status hec_params_get(const hec_params *params, const char *key, uint64_t *value);
/* key=value file, '#' comments. */
HEC_API hec_status hec_params_load(hec_params *params, const char *path);
/* HEC_ERR_CONFIG lists every violated range in hec_last_error(). */
HEC_API hec_status hec_params_validate(const hec_params *params);

/* Code-table sets. */
HEC_API hec_status hec_tableset_load(const char *path, hec_tableset **out);
HEC_API hec_status hec_tableset_parse(const char *text, size_t length, hec_tableset **out);
HEC_API void hec_tableset_destroy(hec_tableset *tables);
HEC_API size_t hec_tableset_count(const hec_tableset *tables);
HEC_API uint32_t hec_tableset_checksum(const hec_tableset *tables);
HEC_API size_t hec_tableset_warning_count(const hec_tableset *tables);
/* Pointer valid for the lifetime of the table set; NULL when out of range. */
HEC_API const char *hec_tableset_warning(const hec_tableset *tables, size_t index);

/*
 * Text output calls write a NUL-terminated string into buf. *needed (if not
 * NULL) receives the size including the terminator; when cap is smaller the
 * call returns HEC_ERR_ARGUMENT and writes nothing, so buf=NULL, cap=0 queries
 * the size.
 */
HEC_API hec_status hec_tableset_dump_rom(const hec_tableset *tables, size_t index, char *buf,
                                         size_t cap, size_t *needed);

/* Images, held in BIP order. */
HEC_API hec_status hec_image_ingest(const char *path, hec_order order, hec_endian endian,
                                    uint32_t bytes_per_sample, const hec_params *params,
                                    hec_image **out);
HEC_API hec_status hec_image_from_samples(const uint32_t *samples, size_t count, hec_order order,
                                          const hec_params *params, hec_image **out);
HEC_API void hec_image_destroy(hec_image *image);
HEC_API hec_status hec_image_samples(const hec_image *image, const uint32_t **samples,
                                     size_t *count);

/* Encoding. Parameters are validated first. */
HEC_API hec_status hec_encode(const hec_params *params, const hec_tableset *tables,
                              const hec_image *image, hec_core core, hec_result **out);
HEC_API void hec_result_destroy(hec_result *result);
HEC_API hec_status hec_result_words(const hec_result *result, const uint64_t **words,
                                    size_t *count);
HEC_API hec_status hec_result_stats(const hec_result *result, hec_stats *out);
/* 1 when both bitstreams are identical (same bit length and words), else 0. */
HEC_API int hec_result_equal(const hec_result *a, const hec_result *b);
/* Writes the big-endian word stream to path and the sidecar to path + ".meta". */
HEC_API hec_status hec_result_write(const hec_result *result, const char *path);
/* key=value statistics and throughput block. */
HEC_API hec_status hec_result_report(const hec_result *result, uint64_t init_cycles, char *buf,
                                     size_t cap, size_t *needed);

/* Throughput model. */
HEC_API hec_status hec_predict_rate(const hec_params *params, uint64_t escapes,
                                    uint64_t init_cycles, hec_rate *out);
/* Streaming-core results only. */
HEC_API hec_status hec_audit_rate(const hec_result *result, uint64_t init_cycles, hec_rate *out);
HEC_API hec_status hec_loop_throughput(uint32_t m, uint32_t n, uint32_t k, uint64_t *samples,
                                       uint64_t *cycles);

#ifdef __cplusplus
}
#endif

#endif
