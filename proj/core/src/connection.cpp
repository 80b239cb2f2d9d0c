// Copyright 2026 The rggdist Authors
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

#include "rgg/connection.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "rgg/errors.hpp"

namespace rgg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, std::string_view context) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ArgumentError("cannot parse number '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

std::map<std::string, double, std::less<>> parse_params(std::string_view body, std::string_view spec) {
  std::map<std::string, double, std::less<>> params;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ArgumentError("expected key=value in model spec '" + std::string(spec) + "'");
    }
    params[std::string(trim(item.substr(0, eq)))] = parse_number(item.substr(eq + 1), spec);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  return params;
}

double require_param(const std::map<std::string, double, std::less<>>& params, std::string_view key,
                     std::string_view spec) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw ArgumentError("model spec '" + std::string(spec) + "' is missing " + std::string(key));
  }
  return it->second;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

ConnectionModel ConnectionModel::hard_disk(double r0) {
  if (!std::isfinite(r0) || r0 < 0.0) throw ArgumentError("hard disk range r0 must be >= 0");
  return ConnectionModel(HardDisk{r0});
}

ConnectionModel ConnectionModel::exponential_soft(double r0, double beta) {
  if (!std::isfinite(r0) || r0 <= 0.0) throw ArgumentError("exponential range r0 must be > 0");
  if (!std::isfinite(beta) || beta <= 0.0) throw ArgumentError("exponential beta must be > 0");
  return ConnectionModel(ExponentialSoft{r0, beta});
}

ConnectionModel ConnectionModel::tabulated(std::vector<Knot> knots) {
  if (knots.empty()) throw ArgumentError("tabulated model needs at least one knot");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const auto& k = knots[i];
    if (!std::isfinite(k.r) || k.r < 0.0) throw ArgumentError("tabulated knot r must be >= 0");
    if (!(k.p >= 0.0 && k.p <= 1.0)) throw ArgumentError("tabulated knot p must lie in [0, 1]");
    if (i > 0 && !(k.r > knots[i - 1].r)) throw ArgumentError("tabulated knots must be strictly increasing in r");
  }
  return ConnectionModel(Tabulated{std::move(knots)});
}

std::vector<Knot> read_knots_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open connection table '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ArgumentError("connection table '" + path + "' is empty");
  std::string header(trim(line));
  header.erase(std::remove_if(header.begin(), header.end(), ::isspace), header.end());
  if (header != "r,p") throw ArgumentError("connection table '" + path + "' must start with header r,p");
  std::vector<Knot> knots;
  while (std::getline(in, line)) {
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos) throw ArgumentError("malformed row in '" + path + "'");
    knots.push_back({parse_number(row.substr(0, comma), path), parse_number(row.substr(comma + 1), path)});
  }
  return knots;
}

ConnectionModel ConnectionModel::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto kind = trim(spec.substr(0, colon));
  const auto body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "hard") {
    return hard_disk(require_param(parse_params(body, spec), "r0", spec));
  }
  if (kind == "exp") {
    const auto params = parse_params(body, spec);
    return exponential_soft(require_param(params, "r0", spec), require_param(params, "beta", spec));
  }
  if (kind == "table") {
    const auto path = trim(body);
    if (path.size() < 2 || path.front() != '@') {
      throw ArgumentError("table model expects table:@path.csv, got '" + std::string(spec) + "'");
    }
    return tabulated(read_knots_csv(std::string(path.substr(1))));
  }
  throw ArgumentError("unknown connection model '" + std::string(spec) + "'");
}

ConnectionModel ConnectionModel::with_range(double r0) const {
  return std::visit(Overloaded{
                        [&](const HardDisk&) { return hard_disk(r0); },
                        [&](const ExponentialSoft& m) { return exponential_soft(r0, m.beta); },
                        [&](const Tabulated&) -> ConnectionModel {
                          throw ArgumentError("tabulated models have no range parameter to sweep");
                        },
                    },
                    kind_);
}

std::vector<double> ConnectionModel::kinks() const {
  return std::visit(Overloaded{
                        [](const HardDisk& m) { return std::vector<double>{m.r0}; },
                        [](const ExponentialSoft&) { return std::vector<double>{}; },
                        [](const Tabulated& m) {
                          std::vector<double> out;
                          for (const auto& k : m.knots) out.push_back(k.r);
                          return out;
                        },
                    },
                    kind_);
}

std::string ConnectionModel::describe() const {
  return std::visit(Overloaded{
                        [](const HardDisk& m) { return "hard:r0=" + format_number(m.r0); },
                        [](const ExponentialSoft& m) {
                          return "exp:r0=" + format_number(m.r0) + ",beta=" + format_number(m.beta);
                        },
                        [](const Tabulated& m) {
                          return "table:" + std::to_string(m.knots.size()) + "-knots";
                        },
                    },
                    kind_);
}

double connect_prob(const ConnectionModel& model, double r) {
  if (!(r >= 0.0)) throw DomainError("connect_prob: distance must be >= 0");
  return std::visit(Overloaded{
                        [r](const HardDisk& m) { return r < m.r0 ? 1.0 : 0.0; },
                        [r](const ExponentialSoft& m) { return std::exp(-std::pow(r / m.r0, m.beta)); },
                        [r](const Tabulated& m) {
                          const auto& k = m.knots;
                          if (r <= k.front().r) return k.front().p;
                          if (r >= k.back().r) return k.back().p;
                          const auto it = std::upper_bound(k.begin(), k.end(), r,
                                                           [](double x, const Knot& y) { return x < y.r; });
                          const Knot& hi = *it;
                          const Knot& lo = *(it - 1);
                          const double t = (r - lo.r) / (hi.r - lo.r);
                          return std::clamp(lo.p + t * (hi.p - lo.p), 0.0, 1.0);
                        },
                    },
                    model.kind());
}

bool sample_edge(const ConnectionModel& model, double r, RandomStream& rng) {
  const double p = connect_prob(model, r);
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return rng.uniform() < p;
}

}  // namespace rgg
