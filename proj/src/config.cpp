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

#include "hec/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "hec/errors.hpp"

namespace hec {

namespace {

void check_range(std::vector<ParamViolation> &out, const char *name, std::uint64_t value,
                 std::uint64_t lo, std::uint64_t hi) {
  if (value < lo || value > hi) {
    std::ostringstream msg;
    msg << name << "=" << value << " outside [" << lo << ", " << hi << "]";
    out.push_back({name, msg.str()});
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

} // namespace

std::string ValidationResult::describe() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i != 0) {
      out << "; ";
    }
    out << violations[i].message;
  }
  return out.str();
}

ValidationResult validate(const CoderParams &params) {
  ValidationResult result{params, {}};
  auto &v = result.violations;
  check_range(v, "nx", params.nx, 2, limits::nx_max);
  check_range(v, "ny", params.ny, 2, limits::ny_max);
  check_range(v, "nz", params.nz, 3, limits::nz_max);
  check_range(v, "d", params.d, limits::d_min, limits::d_max);
  check_range(v, "umax", params.umax, limits::umax_min, limits::umax_max);
  // gamma0 has no cap of its own; gamma_star >= gamma0 + 1 bounds it.
  if (params.gamma0 < limits::gamma0_min) {
    v.push_back({"gamma0", "gamma0=" + std::to_string(params.gamma0) + " below minimum 1"});
  }
  const std::uint64_t gs_min =
      std::max<std::uint64_t>(limits::gamma_star_floor, std::uint64_t{params.gamma0} + 1);
  if (params.gamma_star < gs_min || params.gamma_star > limits::gamma_star_max) {
    std::ostringstream msg;
    msg << "gamma_star=" << params.gamma_star << " outside [max(4, gamma0+1)=" << gs_min << ", "
        << limits::gamma_star_max << "]";
    v.push_back({"gamma_star", msg.str()});
  }
  return result;
}

CoderParams require_valid(const CoderParams &params) {
  auto result = validate(params);
  if (!result.ok()) {
    throw ConfigError("invalid coder parameters: " + result.describe());
  }
  return params;
}

void set_param(CoderParams &params, const std::string &key, std::uint64_t value) {
  if (value > std::numeric_limits<std::uint32_t>::max()) {
    throw ConfigError("value for '" + key + "' does not fit in 32 bits");
  }
  const auto v = static_cast<std::uint32_t>(value);
  if (key == "nx") {
    params.nx = v;
  } else if (key == "ny") {
    params.ny = v;
  } else if (key == "nz") {
    params.nz = v;
  } else if (key == "d") {
    params.d = v;
  } else if (key == "umax") {
    params.umax = v;
  } else if (key == "gamma0") {
    params.gamma0 = v;
  } else if (key == "gamma_star" || key == "gamma-star") {
    params.gamma_star = v;
  } else {
    throw ConfigError("unknown parameter '" + key + "'");
  }
}

void load_params(std::istream &in, CoderParams &params, const std::string &source) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto body = trim(line);
    if (body.empty()) {
      continue;
    }
    const auto eq = body.find('=');
    const auto where = source + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) {
      throw ConfigError(where + "expected key=value");
    }
    const auto key = trim(std::string_view(body).substr(0, eq));
    const auto text = trim(std::string_view(body).substr(eq + 1));
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
      throw ConfigError(where + "'" + text + "' is not an unsigned integer");
    }
    try {
      set_param(params, key, value);
    } catch (const ConfigError &e) {
      throw ConfigError(where + e.what());
    }
  }
}

void load_params_file(const std::filesystem::path &path, CoderParams &params) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file " + path.string());
  }
  load_params(in, params, path.string());
}

std::string format_params(const CoderParams &params) {
  std::ostringstream out;
  out << "nx=" << params.nx << "\n"
      << "ny=" << params.ny << "\n"
      << "nz=" << params.nz << "\n"
      << "d=" << params.d << "\n"
      << "umax=" << params.umax << "\n"
      << "gamma0=" << params.gamma0 << "\n"
      << "gamma_star=" << params.gamma_star << "\n";
  return out.str();
}

} // namespace hec
