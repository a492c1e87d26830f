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

// Command-line front end. Uses only the C API.
//
// Exit codes: 0 ok, 1 usage, 2 config, 3 I/O, 4 table, 5 equivalence, 7 internal.

#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hec/hec.h"

namespace {

struct ParamsDeleter {
  void operator()(hec_params *p) const { hec_params_destroy(p); }
};
struct TablesDeleter {
  void operator()(hec_tableset *p) const { hec_tableset_destroy(p); }
};
struct ImageDeleter {
  void operator()(hec_image *p) const { hec_image_destroy(p); }
};
struct ResultDeleter {
  void operator()(hec_result *p) const { hec_result_destroy(p); }
};
using ParamsPtr = std::unique_ptr<hec_params, ParamsDeleter>;
using TablesPtr = std::unique_ptr<hec_tableset, TablesDeleter>;
using ImagePtr = std::unique_ptr<hec_image, ImageDeleter>;
using ResultPtr = std::unique_ptr<hec_result, ResultDeleter>;

// Thrown to unwind with a status already reported by the library.
struct Failure {
  hec_status status;
};

void check(hec_status status, const char *what) {
  if (status != HEC_OK) {
    std::fprintf(stderr, "hec: %s: %s\n", what, hec_last_error());
    throw Failure{status};
  }
}

std::string report_text(const hec_result *result, std::uint64_t init_cycles) {
  std::size_t needed = 0;
  hec_result_report(result, init_cycles, nullptr, 0, &needed);
  std::string text(needed, '\0');
  check(hec_result_report(result, init_cycles, text.data(), text.size(), nullptr), "report");
  text.resize(needed - 1);
  return text;
}

struct EncodeArgs {
  std::string input;
  std::string output;
  std::string order{"bip"};
  std::string endian{"little"};
  std::uint32_t bytes_per_sample{0};
  std::string config;
  std::string tables;
  std::string core{"streaming"};
  std::string stats;
  std::uint64_t init_cycles{10};
  std::map<std::string, std::optional<std::uint64_t>> params{
      {"nx", {}}, {"ny", {}}, {"nz", {}}, {"d", {}}, {"umax", {}}, {"gamma0", {}}, {"gamma_star", {}}};
};

int run_encode(const EncodeArgs &args) {
  hec_params *raw_params = nullptr;
  check(hec_params_create(&raw_params), "params");
  ParamsPtr params(raw_params);
  if (!args.config.empty()) {
    check(hec_params_load(params.get(), args.config.c_str()), "config");
  }
  for (const auto &[key, value] : args.params) {
    if (value) {
      check(hec_params_set(params.get(), key.c_str(), *value), "config");
    }
  }
  check(hec_params_validate(params.get()), "config");

  if (args.tables.empty()) {
    std::fprintf(stderr, "hec: tables: no code-table set given (--tables)\n");
    return HEC_ERR_TABLE;
  }
  hec_tableset *raw_tables = nullptr;
  check(hec_tableset_load(args.tables.c_str(), &raw_tables), "tables");
  TablesPtr tables(raw_tables);
  for (std::size_t i = 0; i < hec_tableset_warning_count(tables.get()); ++i) {
    std::fprintf(stderr, "hec: warning: %s\n", hec_tableset_warning(tables.get(), i));
  }

  const hec_order order = args.order == "bsq"   ? HEC_ORDER_BSQ
                          : args.order == "bil" ? HEC_ORDER_BIL
                                                : HEC_ORDER_BIP;
  const hec_endian endian = args.endian == "big" ? HEC_ENDIAN_BIG : HEC_ENDIAN_LITTLE;
  hec_image *raw_image = nullptr;
  check(hec_image_ingest(args.input.c_str(), order, endian, args.bytes_per_sample, params.get(),
                         &raw_image),
        "input");
  ImagePtr image(raw_image);

  std::vector<ResultPtr> results;
  if (args.core == "reference" || args.core == "both") {
    hec_result *r = nullptr;
    check(hec_encode(params.get(), tables.get(), image.get(), HEC_CORE_REFERENCE, &r), "encode");
    results.emplace_back(r);
  }
  if (args.core == "streaming" || args.core == "both") {
    hec_result *r = nullptr;
    check(hec_encode(params.get(), tables.get(), image.get(), HEC_CORE_STREAMING, &r), "encode");
    results.emplace_back(r);
  }
  // The streaming result carries the stage transcript used for the audited rate.
  const hec_result *primary = results.back().get();

  check(hec_result_write(primary, args.output.c_str()), "output");
  const std::string report = report_text(primary, args.init_cycles);
  std::fputs(report.c_str(), stdout);
  if (!args.stats.empty()) {
    std::ofstream out(args.stats, std::ios::trunc);
    if (!out || !(out << report)) {
      std::fprintf(stderr, "hec: stats: cannot write %s\n", args.stats.c_str());
      return HEC_ERR_IO;
    }
  }

  if (args.core == "both") {
    const bool same = hec_result_equal(results[0].get(), results[1].get()) != 0;
    std::printf("equivalence=%s\n", same ? "PASS" : "FAIL");
    if (!same) {
      std::fprintf(stderr, "hec: reference and streaming bitstreams differ\n");
      return HEC_ERR_EQUIVALENCE;
    }
  }
  return 0;
}

int run_dump_rom(const std::string &path, std::optional<std::size_t> only) {
  hec_tableset *raw = nullptr;
  check(hec_tableset_load(path.c_str(), &raw), "tables");
  TablesPtr tables(raw);
  const std::size_t n = hec_tableset_count(tables.get());
  std::printf("# checksum %08x\n", hec_tableset_checksum(tables.get()));
  for (std::size_t i = 0; i < n; ++i) {
    if (only && *only != i) {
      continue;
    }
    std::size_t needed = 0;
    hec_tableset_dump_rom(tables.get(), i, nullptr, 0, &needed);
    std::string text(needed, '\0');
    check(hec_tableset_dump_rom(tables.get(), i, text.data(), text.size(), nullptr), "dump");
    text.resize(needed - 1);
    std::printf("table %zu\n%s", i, text.c_str());
  }
  if (only && *only >= n) {
    std::fprintf(stderr, "hec: table %zu is not loaded (%zu tables)\n", *only, n);
    return HEC_ERR_TABLE;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hybrid entropy coder for hyperspectral images"};
  app.set_version_flag("--version", hec_version());
  app.require_subcommand(0, 1);

  EncodeArgs args;
  app.add_option("-i,--input", args.input, "Raw image file");
  app.add_option("-o,--output", args.output, "Bitstream file (sidecar written to <output>.meta)");
  app.add_option("--order", args.order, "Sample order of the input")
      ->check(CLI::IsMember({"bip", "bil", "bsq"}));
  app.add_option("--endian", args.endian, "Byte order of the input")
      ->check(CLI::IsMember({"little", "big"}));
  app.add_option("--bytes-per-sample", args.bytes_per_sample,
                 "Sample width in bytes (default: narrowest of 1, 2, 4 holding d bits)")
      ->check(CLI::IsMember({1, 2, 4}));
  app.add_option("--config", args.config, "key=value parameter file; flags override it");
  for (const auto &[flag, key] : std::vector<std::pair<std::string, std::string>>{
           {"--nx", "nx"},
           {"--ny", "ny"},
           {"--nz", "nz"},
           {"--d", "d"},
           {"--umax", "umax"},
           {"--gamma0", "gamma0"},
           {"--gamma-star", "gamma_star"}}) {
    app.add_option_function<std::uint64_t>(
        flag, [&args, key = key](std::uint64_t v) { args.params[key] = v; }, "Coder parameter " + key);
  }
  app.add_option("--tables", args.tables, "Code-table set file");
  app.add_option("--core", args.core, "Encoder core")
      ->check(CLI::IsMember({"reference", "streaming", "both"}));
  app.add_option("--stats", args.stats, "Write the statistics and throughput report here");
  app.add_option("--init-cycles", args.init_cycles, "Pipeline fill cycles assumed by the rate model");

  auto *dump = app.add_subcommand("dump-rom", "Print the compiled ROM of each code table");
  std::string dump_path;
  std::optional<std::size_t> dump_index;
  dump->add_option("tables", dump_path, "Code-table set file")->required();
  dump->add_option("--table", dump_index, "Only this table index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (dump->parsed()) {
      return run_dump_rom(dump_path, dump_index);
    }
    if (args.input.empty() || args.output.empty()) {
      std::fprintf(stderr, "hec: --input and --output are required\n");
      return 1;
    }
    return run_encode(args);
  } catch (const Failure &f) {
    return static_cast<int>(f.status);
  }
}
