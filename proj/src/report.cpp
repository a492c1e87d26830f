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

#include "hec/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hec/errors.hpp"

namespace hec {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

} // namespace

Report make_report(const EncodeResult &result, const CodeTableSet &tables, Core core,
                   std::uint64_t init_cycles, double encode_seconds) {
  Report r;
  r.params = result.params;
  r.core = core;
  r.table_count = tables.size();
  r.table_checksum = tables.checksum();
  r.samples = result.samples();
  r.total_bits = result.total_bits;
  r.words = result.words.size();
  r.counters = result.trace.counters();
  r.predicted = predict_rate(result.params, result.escape_count(), init_cycles);
  if (result.transcript) {
    r.audited = audit_rate(result, init_cycles);
  }
  r.encode_seconds = encode_seconds;
  return r;
}

std::string format_sidecar(const Report &r) {
  std::ostringstream out;
  char crc[16];
  std::snprintf(crc, sizeof crc, "%08x", r.table_checksum);
  out << format_params(r.params) << "tables=" << r.table_count << "\n"
      << "table_checksum=" << crc << "\n"
      << "samples=" << r.samples << "\n"
      << "total_bits=" << r.total_bits << "\n"
      << "words=" << r.words << "\n"
      << "bytes=" << r.output_bytes() << "\n"
      << "bits_per_sample=" << fixed(r.bits_per_sample(), 6) << "\n"
      << "high_samples=" << r.counters.high_samples << "\n"
      << "low_samples=" << r.counters.low_samples << "\n"
      << "high_codewords=" << r.counters.high << "\n"
      << "low_matches=" << r.counters.low_match << "\n"
      << "escapes=" << r.counters.escape << "\n"
      << "rescale_bits=" << r.counters.rescale_bits << "\n"
      << "uncompressed=" << r.counters.uncompressed << "\n"
      << "flush_words=" << r.counters.flush << "\n"
      << "accumulators=" << r.counters.accumulators << "\n";
  return out.str();
}

std::string format_stats(const Report &r) {
  std::ostringstream out;
  out << format_sidecar(r) << "core=" << to_string(r.core) << "\n"
      << "init_cycles=" << r.predicted.init_cycles << "\n"
      << "predicted_cycles=" << r.predicted.cycles() << "\n"
      << "predicted_samples_per_cycle=" << fixed(r.predicted.samples_per_cycle(), 9) << "\n";
  if (r.audited) {
    out << "audited_cycles=" << r.audited->cycles() << "\n"
        << "audited_samples_per_cycle=" << fixed(r.audited->samples_per_cycle(), 9) << "\n";
  }
  const double msps =
      r.encode_seconds > 0.0 ? static_cast<double>(r.samples) / r.encode_seconds / 1e6 : 0.0;
  out << "host_msamples_per_second=" << fixed(msps, 3) << "\n";
  return out.str();
}

void write_bitstream(const std::filesystem::path &path, std::span<const std::uint64_t> words) {
  std::vector<char> bytes(words.size() * 8);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (int b = 0; b < 8; ++b) {
      bytes[i * 8 + static_cast<std::size_t>(b)] = static_cast<char>((words[i] >> (56 - 8 * b)) & 0xFFU);
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw IoError("cannot write " + path.string());
  }
}

std::vector<std::uint64_t> read_bitstream(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() % 8 != 0) {
    throw IoError(path.string() + " is not a whole number of 64-bit words");
  }
  std::vector<std::uint64_t> words(bytes.size() / 8, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    words[i / 8] = (words[i / 8] << 8) | bytes[i];
  }
  return words;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out || !(out << text)) {
    throw IoError("cannot write " + path.string());
  }
}

std::filesystem::path sidecar_path(const std::filesystem::path &output) {
  auto p = output;
  p += ".meta";
  return p;
}

Report encode_file(const std::filesystem::path &input, const CoderParams &params,
                   const CodeTableSet &tables, const std::filesystem::path &output,
                   const FileEncodeOptions &options) {
  require_valid(params);
  const auto stream = ingest({input, options.order, options.endian, options.bytes_per_sample,
                              params.nx, params.ny, params.nz, params.d});
  EncodeOptions eo;
  eo.keep_trace_entries = false;
  const auto start = std::chrono::steady_clock::now();
  const auto result = encode(options.core, stream.samples, params, tables, eo);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  auto report = make_report(result, tables, options.core, options.init_cycles, elapsed.count());
  write_bitstream(output, result.words);
  write_text(sidecar_path(output), format_sidecar(report));
  return report;
}

} // namespace hec
