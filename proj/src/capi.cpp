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

#include "hec/hec.h"

#include <chrono>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "hec/codetables.hpp"
#include "hec/config.hpp"
#include "hec/encoder.hpp"
#include "hec/errors.hpp"
#include "hec/ingest.hpp"
#include "hec/perfmodel.hpp"
#include "hec/report.hpp"

struct hec_params {
  hec::CoderParams value;
};

struct hec_tableset {
  hec::CodeTableSet value;
};

struct hec_image {
  hec::SampleStream value;
};

struct hec_result {
  hec::EncodeResult value;
  hec::Core core;
  std::size_t table_count;
  std::uint32_t table_checksum;
  double encode_seconds;
};

namespace {

thread_local std::string last_error;

hec_status fail(hec_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

hec_status status_of(hec::ErrorKind kind) {
  switch (kind) {
  case hec::ErrorKind::config:
    return HEC_ERR_CONFIG;
  case hec::ErrorKind::io:
    return HEC_ERR_IO;
  case hec::ErrorKind::table:
    return HEC_ERR_TABLE;
  case hec::ErrorKind::equivalence:
    return HEC_ERR_EQUIVALENCE;
  case hec::ErrorKind::internal:
    return HEC_ERR_INTERNAL;
  }
  return HEC_ERR_INTERNAL;
}

template <typename F>
hec_status guarded(F &&body) noexcept {
  try {
    return body();
  } catch (const hec::Error &e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(HEC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(HEC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HEC_ERR_INTERNAL, "unknown exception");
  }
}

hec_status null_argument(const char *name) {
  return fail(HEC_ERR_ARGUMENT, std::string(name) + " is NULL");
}

hec_status copy_text(const std::string &text, char *buf, std::size_t cap, std::size_t *needed) {
  const std::size_t size = text.size() + 1;
  if (needed != nullptr) {
    *needed = size;
  }
  if (cap < size || buf == nullptr) {
    return fail(HEC_ERR_ARGUMENT, "buffer holds " + std::to_string(cap) + " bytes, " +
                                      std::to_string(size) + " needed");
  }
  std::memcpy(buf, text.c_str(), size);
  return HEC_OK;
}

bool to_order(hec_order order, hec::SampleOrder &out) {
  switch (order) {
  case HEC_ORDER_BIP:
    out = hec::SampleOrder::bip;
    return true;
  case HEC_ORDER_BIL:
    out = hec::SampleOrder::bil;
    return true;
  case HEC_ORDER_BSQ:
    out = hec::SampleOrder::bsq;
    return true;
  }
  return false;
}

void fill_rate(const hec::RateEstimate &r, hec_rate *out) {
  out->init_cycles = r.init_cycles;
  out->sample_count = r.sample_count;
  out->tail_cycles = r.tail_cycles;
  out->escape_cycles = r.escape_cycles;
  out->cycles = r.cycles();
  out->samples_per_cycle = r.samples_per_cycle();
}

hec::Report report_of(const hec_result &r, std::uint64_t init_cycles) {
  hec::Report rep;
  rep.params = r.value.params;
  rep.core = r.core;
  rep.table_count = r.table_count;
  rep.table_checksum = r.table_checksum;
  rep.samples = r.value.samples();
  rep.total_bits = r.value.total_bits;
  rep.words = r.value.words.size();
  rep.counters = r.value.trace.counters();
  rep.predicted = hec::predict_rate(r.value.params, r.value.escape_count(), init_cycles);
  if (r.value.transcript) {
    rep.audited = hec::audit_rate(r.value, init_cycles);
  }
  rep.encode_seconds = r.encode_seconds;
  return rep;
}

} // namespace

extern "C" {

const char *hec_version(void) { return "1.0.0"; }

const char *hec_last_error(void) { return last_error.c_str(); }

hec_status hec_params_create(hec_params **out) {
  if (out == nullptr) {
    return null_argument("out");
  }
  return guarded([&] {
    auto *params = new hec_params{};
    params->value.umax = 18;
    params->value.gamma0 = 1;
    params->value.gamma_star = 6;
    *out = params;
    return HEC_OK;
  });
}

void hec_params_destroy(hec_params *params) { delete params; }

hec_status hec_params_set(hec_params *params, const char *key, uint64_t value) {
  if (params == nullptr || key == nullptr) {
    return null_argument(params == nullptr ? "params" : "key");
  }
  return guarded([&] {
    hec::set_param(params->value, key, value);
    return HEC_OK;
  });
}

hec_status hec_params_get(const hec_params *params, const char *key, uint64_t *value) {
  if (params == nullptr || key == nullptr || value == nullptr) {
    return null_argument(params == nullptr ? "params" : key == nullptr ? "key" : "value");
  }
  const auto &p = params->value;
  const std::string k = key;
  if (k == "nx") {
    *value = p.nx;
  } else if (k == "ny") {
    *value = p.ny;
  } else if (k == "nz") {
    *value = p.nz;
  } else if (k == "d") {
    *value = p.d;
  } else if (k == "umax") {
    *value = p.umax;
  } else if (k == "gamma0") {
    *value = p.gamma0;
  } else if (k == "gamma_star" || k == "gamma-star") {
    *value = p.gamma_star;
  } else {
    return fail(HEC_ERR_CONFIG, "unknown parameter '" + k + "'");
  }
  return HEC_OK;
}

hec_status hec_params_load(hec_params *params, const char *path) {
  if (params == nullptr || path == nullptr) {
    return null_argument(params == nullptr ? "params" : "path");
  }
  return guarded([&] {
    hec::load_params_file(path, params->value);
    return HEC_OK;
  });
}

hec_status hec_params_validate(const hec_params *params) {
  if (params == nullptr) {
    return null_argument("params");
  }
  return guarded([&] {
    const auto v = hec::validate(params->value);
    return v.ok() ? HEC_OK : fail(HEC_ERR_CONFIG, v.describe());
  });
}

hec_status hec_tableset_load(const char *path, hec_tableset **out) {
  if (path == nullptr || out == nullptr) {
    return null_argument(path == nullptr ? "path" : "out");
  }
  return guarded([&] {
    *out = new hec_tableset{hec::load_tableset(path)};
    return HEC_OK;
  });
}

hec_status hec_tableset_parse(const char *text, size_t length, hec_tableset **out) {
  if (text == nullptr || out == nullptr) {
    return null_argument(text == nullptr ? "text" : "out");
  }
  return guarded([&] {
    std::istringstream in(std::string(text, length));
    *out = new hec_tableset{hec::parse_tableset(in, "<text>")};
    return HEC_OK;
  });
}

void hec_tableset_destroy(hec_tableset *tables) { delete tables; }

size_t hec_tableset_count(const hec_tableset *tables) {
  return tables == nullptr ? 0 : tables->value.size();
}

uint32_t hec_tableset_checksum(const hec_tableset *tables) {
  return tables == nullptr ? 0 : tables->value.checksum();
}

size_t hec_tableset_warning_count(const hec_tableset *tables) {
  return tables == nullptr ? 0 : tables->value.warnings().size();
}

const char *hec_tableset_warning(const hec_tableset *tables, size_t index) {
  if (tables == nullptr || index >= tables->value.warnings().size()) {
    return nullptr;
  }
  return tables->value.warnings()[index].c_str();
}

hec_status hec_tableset_dump_rom(const hec_tableset *tables, size_t index, char *buf, size_t cap,
                                 size_t *needed) {
  if (tables == nullptr) {
    return null_argument("tables");
  }
  if (index >= tables->value.size()) {
    return fail(HEC_ERR_ARGUMENT, "table " + std::to_string(index) + " is not loaded");
  }
  return guarded([&] { return copy_text(hec::dump_rom(tables->value[index].rom), buf, cap, needed); });
}

hec_status hec_image_ingest(const char *path, hec_order order, hec_endian endian,
                            uint32_t bytes_per_sample, const hec_params *params, hec_image **out) {
  if (path == nullptr || params == nullptr || out == nullptr) {
    return null_argument(path == nullptr ? "path" : params == nullptr ? "params" : "out");
  }
  hec::SampleOrder o{};
  if (!to_order(order, o)) {
    return fail(HEC_ERR_ARGUMENT, "unknown sample order");
  }
  if (endian != HEC_ENDIAN_LITTLE && endian != HEC_ENDIAN_BIG) {
    return fail(HEC_ERR_ARGUMENT, "unknown endianness");
  }
  return guarded([&] {
    const auto &p = params->value;
    hec::IngestSpec spec{path,
                         o,
                         endian == HEC_ENDIAN_BIG ? hec::Endian::big : hec::Endian::little,
                         bytes_per_sample,
                         p.nx,
                         p.ny,
                         p.nz,
                         p.d};
    *out = new hec_image{hec::ingest(spec)};
    return HEC_OK;
  });
}

hec_status hec_image_from_samples(const uint32_t *samples, size_t count, hec_order order,
                                  const hec_params *params, hec_image **out) {
  if ((samples == nullptr && count != 0) || params == nullptr || out == nullptr) {
    return null_argument(params == nullptr ? "params" : out == nullptr ? "out" : "samples");
  }
  hec::SampleOrder o{};
  if (!to_order(order, o)) {
    return fail(HEC_ERR_ARGUMENT, "unknown sample order");
  }
  return guarded([&] {
    const auto &p = params->value;
    std::span<const std::uint32_t> raw(samples, count);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (p.d < 32 && (raw[i] >> p.d) != 0) {
        throw hec::ConfigError("sample " + std::to_string(i) + " = " + std::to_string(raw[i]) +
                               " exceeds d=" + std::to_string(p.d) + " bits");
      }
    }
    *out = new hec_image{{p.nx, p.ny, p.nz, hec::reorder_to_bip(raw, o, p.nx, p.ny, p.nz)}};
    return HEC_OK;
  });
}

void hec_image_destroy(hec_image *image) { delete image; }

hec_status hec_image_samples(const hec_image *image, const uint32_t **samples, size_t *count) {
  if (image == nullptr || samples == nullptr || count == nullptr) {
    return null_argument(image == nullptr ? "image" : samples == nullptr ? "samples" : "count");
  }
  *samples = image->value.samples.data();
  *count = image->value.samples.size();
  return HEC_OK;
}

hec_status hec_encode(const hec_params *params, const hec_tableset *tables, const hec_image *image,
                      hec_core core, hec_result **out) {
  if (params == nullptr || tables == nullptr || image == nullptr || out == nullptr) {
    return null_argument(params == nullptr   ? "params"
                         : tables == nullptr ? "tables"
                         : image == nullptr  ? "image"
                                             : "out");
  }
  if (core != HEC_CORE_REFERENCE && core != HEC_CORE_STREAMING) {
    return fail(HEC_ERR_ARGUMENT, "unknown core");
  }
  return guarded([&] {
    const auto &p = hec::require_valid(params->value);
    const auto &img = image->value;
    if (img.nx != p.nx || img.ny != p.ny || img.nz != p.nz) {
      throw hec::ConfigError("image dimensions do not match parameters");
    }
    const auto c = core == HEC_CORE_REFERENCE ? hec::Core::reference : hec::Core::streaming;
    hec::EncodeOptions options;
    options.keep_trace_entries = false;
    const auto start = std::chrono::steady_clock::now();
    auto result = hec::encode(c, img.samples, p, tables->value, options);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    *out = new hec_result{std::move(result), c, tables->value.size(), tables->value.checksum(),
                          elapsed.count()};
    return HEC_OK;
  });
}

void hec_result_destroy(hec_result *result) { delete result; }

hec_status hec_result_words(const hec_result *result, const uint64_t **words, size_t *count) {
  if (result == nullptr || words == nullptr || count == nullptr) {
    return null_argument(result == nullptr ? "result" : words == nullptr ? "words" : "count");
  }
  *words = result->value.words.data();
  *count = result->value.words.size();
  return HEC_OK;
}

hec_status hec_result_stats(const hec_result *result, hec_stats *out) {
  if (result == nullptr || out == nullptr) {
    return null_argument(result == nullptr ? "result" : "out");
  }
  const auto &c = result->value.trace.counters();
  out->samples = result->value.samples();
  out->total_bits = result->value.total_bits;
  out->words = result->value.words.size();
  out->high_samples = c.high_samples;
  out->low_samples = c.low_samples;
  out->high_codewords = c.high;
  out->low_matches = c.low_match;
  out->escapes = c.escape;
  out->rescale_bits = c.rescale_bits;
  out->uncompressed = c.uncompressed;
  out->flush_words = c.flush;
  out->accumulators = c.accumulators;
  return HEC_OK;
}

int hec_result_equal(const hec_result *a, const hec_result *b) {
  if (a == nullptr || b == nullptr) {
    return 0;
  }
  return a->value.total_bits == b->value.total_bits && a->value.words == b->value.words ? 1 : 0;
}

hec_status hec_result_write(const hec_result *result, const char *path) {
  if (result == nullptr || path == nullptr) {
    return null_argument(result == nullptr ? "result" : "path");
  }
  return guarded([&] {
    hec::write_bitstream(path, result->value.words);
    hec::write_text(hec::sidecar_path(path),
                    hec::format_sidecar(report_of(*result, hec::default_init_cycles)));
    return HEC_OK;
  });
}

hec_status hec_result_report(const hec_result *result, uint64_t init_cycles, char *buf, size_t cap,
                             size_t *needed) {
  if (result == nullptr) {
    return null_argument("result");
  }
  return guarded(
      [&] { return copy_text(hec::format_stats(report_of(*result, init_cycles)), buf, cap, needed); });
}

hec_status hec_predict_rate(const hec_params *params, uint64_t escapes, uint64_t init_cycles,
                            hec_rate *out) {
  if (params == nullptr || out == nullptr) {
    return null_argument(params == nullptr ? "params" : "out");
  }
  return guarded([&] {
    fill_rate(hec::predict_rate(params->value, escapes, init_cycles), out);
    return HEC_OK;
  });
}

hec_status hec_audit_rate(const hec_result *result, uint64_t init_cycles, hec_rate *out) {
  if (result == nullptr || out == nullptr) {
    return null_argument(result == nullptr ? "result" : "out");
  }
  return guarded([&] {
    fill_rate(hec::audit_rate(result->value, init_cycles), out);
    return HEC_OK;
  });
}

hec_status hec_loop_throughput(uint32_t m, uint32_t n, uint32_t k, uint64_t *samples,
                               uint64_t *cycles) {
  if (samples == nullptr || cycles == nullptr) {
    return null_argument(samples == nullptr ? "samples" : "cycles");
  }
  return guarded([&] {
    const auto t = hec::loop_throughput({m, n, k, 1.0});
    *samples = t.samples;
    *cycles = t.cycles;
    return HEC_OK;
  });
}

} // extern "C"
