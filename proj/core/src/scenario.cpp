// Copyright 2026 The tqed Authors
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

#include "tqed/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tqed/error.hpp"
#include "tqed/numeric_format.hpp"

namespace tqed {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

// Keys are "section.key"; top-level keys have an empty section.
using EntryMap = std::map<std::string, Entry>;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"", {"name", "engine"}},
      {"model",
       {"k", "gamma1", "gamma2", "gamma1_im", "gamma2_im", "delta", "omega", "omega1", "omega2",
        "beta1_1", "beta1_2", "beta2_1", "beta2_2", "beta1", "stark_ratio"}},
      {"prep", {"theta1", "theta2"}},
      {"field", {"kind", "eta", "m", "alpha", "alpha_im", "n_max"}},
      {"time", {"start", "stop", "steps"}},
      {"output",
       {"observables", "q_grid_time", "q_grid_extent", "q_grid_points", "theta_min", "theta_max",
        "theta_steps", "concurrence_method"}},
  };
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::optional<double> parse_plain(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

void check_key(const std::string& section, const std::string& key, int line) {
  const auto& keys = known_keys().at(section);
  if (!keys.contains(key)) {
    throw ParseError(line, "unknown key '" + key + "'" +
                               (section.empty() ? std::string(" at top level") : " in [" + section + "]"));
  }
}

class Reader {
 public:
  explicit Reader(const EntryMap& entries) : entries_(entries) {}

  bool has(const std::string& key) const { return entries_.contains(key); }

  const Entry* find(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void require(const std::string& key) {
    if (!has(key)) missing_.push_back(key);
  }

  void throw_if_missing() const {
    if (missing_.empty()) return;
    std::string msg = "missing required keys:";
    for (const auto& k : missing_) msg += " " + k;
    throw ParseError(0, msg);
  }

  double number(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    const auto v = parse_number(e->value);
    if (!v || !std::isfinite(*v)) throw ParseError(e->line, "'" + key + "' is not a finite number: " + e->value);
    return *v;
  }

  int integer(const std::string& key, int fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    const auto s = trim(e->value);
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
      throw ParseError(e->line, "'" + key + "' is not an integer: " + e->value);
    return v;
  }

  [[noreturn]] void range_error(const std::string& key, const std::string& what) const {
    const Entry* e = find(key);
    throw ParseError(e ? e->line : 0, "'" + key + "' out of range: " + what);
  }

 private:
  const EntryMap& entries_;
  std::vector<std::string> missing_;
};

Scenario build(const EntryMap& entries) {
  Reader r(entries);
  for (const char* key : {"model.k", "model.gamma1", "model.gamma2", "prep.theta1", "prep.theta2",
                          "field.kind", "time.start", "time.stop", "time.steps", "output.observables"})
    r.require(key);

  if (const Entry* kind = r.find("field.kind")) {
    const auto v = trim(kind->value);
    if (v == "binomial") {
      r.require("field.eta");
      r.require("field.m");
    } else if (v == "number") {
      r.require("field.m");
    } else if (v == "coherent") {
      r.require("field.alpha");
    } else {
      throw ParseError(kind->line, "unknown field kind '" + std::string(v) + "' (binomial, number, coherent)");
    }
  }
  r.throw_if_missing();

  Scenario s;
  if (const Entry* e = r.find(".name")) s.name = std::string(trim(e->value));
  if (const Entry* e = r.find(".engine")) {
    try {
      s.engine = parse_engine(trim(e->value));
    } catch (const ValidationError& ex) {
      throw ParseError(e->line, ex.what());
    }
  }

  ModelParams& p = s.params;
  p.k = r.integer("model.k", 1);
  if (p.k < 1 || p.k > 16) r.range_error("model.k", "must lie in 1..16");
  p.gamma1 = {r.number("model.gamma1", 1.0), r.number("model.gamma1_im", 0.0)};
  p.gamma2 = {r.number("model.gamma2", 0.0), r.number("model.gamma2_im", 0.0)};
  p.delta = r.number("model.delta", 0.0);
  p.omega = r.number("model.omega", 1.0);
  p.omega1 = r.number("model.omega1", 1.0);
  p.omega2 = r.number("model.omega2", 1.0);

  const bool explicit_betas = r.has("model.beta1_1") || r.has("model.beta1_2") || r.has("model.beta2_1") ||
                              r.has("model.beta2_2");
  const bool ratio_form = r.has("model.beta1") || r.has("model.stark_ratio");
  if (explicit_betas && ratio_form) {
    const Entry* e = r.find("model.beta1");
    if (!e) e = r.find("model.stark_ratio");
    throw ParseError(e->line, "use either beta1/stark_ratio or the four beta coefficients, not both");
  }
  if (ratio_form) {
    const double b1 = r.number("model.beta1", 1.0);
    const double ratio = r.number("model.stark_ratio", 0.0);
    if (ratio < 0.0) r.range_error("model.stark_ratio", "must be non-negative");
    p.beta1_1 = p.beta1_2 = b1;
    p.beta2_1 = p.beta2_2 = b1 * ratio * ratio;
  } else {
    p.beta1_1 = r.number("model.beta1_1", 0.0);
    p.beta1_2 = r.number("model.beta1_2", 0.0);
    p.beta2_1 = r.number("model.beta2_1", 0.0);
    p.beta2_2 = r.number("model.beta2_2", 0.0);
  }

  s.prep.theta1 = r.number("prep.theta1", 0.0);
  s.prep.theta2 = r.number("prep.theta2", 0.0);

  const auto kind = trim(r.find("field.kind")->value);
  FieldSpec& f = s.field;
  if (kind == "binomial") {
    f.kind = FieldSpecKind::kBinomial;
    f.eta = r.number("field.eta", 0.0);
    if (f.eta < 0.0 || f.eta > 1.0) r.range_error("field.eta", "must lie in [0, 1]");
    f.m = r.integer("field.m", 0);
  } else if (kind == "number") {
    f.kind = FieldSpecKind::kNumber;
    f.m = r.integer("field.m", 0);
  } else {
    f.kind = FieldSpecKind::kCoherent;
    f.alpha = {r.number("field.alpha", 0.0), r.number("field.alpha_im", 0.0)};
    f.n_max = r.integer("field.n_max", 0);
    if (f.n_max < 0) r.range_error("field.n_max", "must be non-negative");
  }
  if (f.kind != FieldSpecKind::kCoherent) {
    if (f.m < 0) r.range_error("field.m", "must be non-negative");
    for (const char* key : {"field.alpha", "field.alpha_im", "field.n_max"})
      if (const Entry* e = r.find(key)) throw ParseError(e->line, std::string(key) + " applies to coherent fields only");
  }
  if (f.kind != FieldSpecKind::kBinomial)
    if (const Entry* e = r.find("field.eta")) throw ParseError(e->line, "field.eta applies to binomial fields only");
  if (f.kind == FieldSpecKind::kCoherent)
    if (const Entry* e = r.find("field.m")) throw ParseError(e->line, "field.m does not apply to coherent fields");

  s.time.start = r.number("time.start", 0.0);
  s.time.stop = r.number("time.stop", 1.0);
  s.time.steps = r.integer("time.steps", 2);
  if (s.time.start < 0.0) r.range_error("time.start", "must be >= 0");
  if (!(s.time.stop > s.time.start)) r.range_error("time.stop", "must exceed time.start");
  if (s.time.steps < 2) r.range_error("time.steps", "must be >= 2");

  const Entry* obs = r.find("output.observables");
  OutputRequests& out = s.outputs;
  const auto names = split_list(obs->value);
  if (names.empty()) throw ParseError(obs->line, "output.observables lists no observable");
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) throw ParseError(obs->line, "observable '" + name + "' listed twice");
    if (name == "inversion") {
      out.inversion = true;
    } else if (name == "inversion_per_qubit") {
      out.inversion_per_qubit = true;
    } else if (name == "q_grid") {
      QGridRequest q;
      q.time = r.number("output.q_grid_time", s.time.stop);
      q.extent = r.number("output.q_grid_extent", q.extent);
      q.points = r.integer("output.q_grid_points", q.points);
      if (q.time < 0.0) r.range_error("output.q_grid_time", "must be >= 0");
      if (!(q.extent > 0.0)) r.range_error("output.q_grid_extent", "must be positive");
      if (q.points < 2) r.range_error("output.q_grid_points", "must be >= 2");
      out.q_grid = q;
    } else if (name == "concurrence_surface") {
      ConcurrenceRequest c;
      c.theta_min = r.number("output.theta_min", c.theta_min);
      c.theta_max = r.number("output.theta_max", c.theta_max);
      c.theta_steps = r.integer("output.theta_steps", c.theta_steps);
      if (!(c.theta_max > c.theta_min)) r.range_error("output.theta_max", "must exceed theta_min");
      if (c.theta_steps < 2) r.range_error("output.theta_steps", "must be >= 2");
      if (const Entry* e = r.find("output.concurrence_method")) {
        c.methods.clear();
        for (const auto& m : split_list(e->value)) {
          ConcurrenceMethod method;
          if (m == "mixed") {
            method = ConcurrenceMethod::kMixed;
          } else if (m == "analytic") {
            method = ConcurrenceMethod::kAnalytic;
          } else {
            throw ParseError(e->line, "unknown concurrence method '" + m + "' (mixed, analytic)");
          }
          if (std::find(c.methods.begin(), c.methods.end(), method) != c.methods.end())
            throw ParseError(e->line, "concurrence method '" + m + "' listed twice");
          c.methods.push_back(method);
        }
        if (c.methods.empty()) throw ParseError(e->line, "output.concurrence_method lists no method");
      }
      out.concurrence = c;
    } else {
      throw ParseError(obs->line, "unsupported observable '" + name +
                                      "' (inversion, inversion_per_qubit, q_grid, concurrence_surface)");
    }
  }
  if (!out.q_grid)
    for (const char* key : {"output.q_grid_time", "output.q_grid_extent", "output.q_grid_points"})
      if (const Entry* e = r.find(key)) throw ParseError(e->line, std::string(key) + " set but q_grid not requested");
  if (!out.concurrence)
    for (const char* key : {"output.theta_min", "output.theta_max", "output.theta_steps", "output.concurrence_method"})
      if (const Entry* e = r.find(key))
        throw ParseError(e->line, std::string(key) + " set but concurrence_surface not requested");

  s.validate();
  return s;
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

std::string_view to_string(Engine e) { return e == Engine::kExact ? "exact" : "dispersive"; }

Engine parse_engine(std::string_view s) {
  if (s == "exact") return Engine::kExact;
  if (s == "dispersive") return Engine::kDispersive;
  throw ValidationError("unknown engine '" + std::string(s) + "' (exact, dispersive)");
}

std::string_view to_string(ConcurrenceMethod m) { return m == ConcurrenceMethod::kMixed ? "mixed" : "analytic"; }

FieldState FieldSpec::build() const {
  switch (kind) {
    case FieldSpecKind::kBinomial:
      return binomial_amplitudes(eta, m);
    case FieldSpecKind::kNumber:
      return number_state(m);
    case FieldSpecKind::kCoherent:
      return coherent_amplitudes(alpha, n_max > 0 ? n_max : coherent_min_n_max(alpha));
  }
  throw ValidationError("unknown field kind");
}

std::vector<double> TimeGrid::points() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double h = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = start + h * i;
  out.back() = stop;
  return out;
}

std::vector<double> ConcurrenceRequest::thetas() const {
  return TimeGrid{theta_min, theta_max, theta_steps}.points();
}

void Scenario::validate() const {
  params.validate();
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
      throw ValidationError("name may only contain letters, digits, '_', '-' and '.'");
  if (time.steps < 2) throw ValidationError("time.steps must be >= 2");
  if (!(time.start >= 0.0) || !(time.stop > time.start) || !std::isfinite(time.stop))
    throw ValidationError("time grid requires stop > start >= 0");
  if (!std::isfinite(prep.theta1) || !std::isfinite(prep.theta2)) throw ValidationError("angles must be finite");
  if (field.kind == FieldSpecKind::kBinomial && !(field.eta >= 0.0 && field.eta <= 1.0))
    throw ValidationError("binomial eta must lie in [0, 1]");
  if (field.kind != FieldSpecKind::kCoherent && field.m < 0) throw ValidationError("field m must be non-negative");
  if (field.kind == FieldSpecKind::kCoherent && field.n_max < 0)
    throw ValidationError("field n_max must be non-negative");
  if (!outputs.inversion && !outputs.inversion_per_qubit && !outputs.q_grid && !outputs.concurrence)
    throw ValidationError("no observable requested");
  if (engine == Engine::kDispersive && (params.gamma1.imag() != 0.0 || params.gamma2.imag() != 0.0))
    throw ValidationError("the dispersive engine requires real couplings");
  if (params.gamma1 == Complex{} && params.gamma2 == Complex{})
    throw ValidationError("at least one coupling must be nonzero");
  if (params.gamma1 == Complex{}) throw ValidationError("gamma1 sets the time unit and must be nonzero");
  if (outputs.q_grid) {
    const auto& q = *outputs.q_grid;
    if (!(q.time >= 0.0) || !(q.extent > 0.0) || q.points < 2) throw ValidationError("invalid q_grid request");
  }
  if (outputs.concurrence) {
    const auto& c = *outputs.concurrence;
    if (!(c.theta_max > c.theta_min) || c.theta_steps < 2) throw ValidationError("invalid theta axis");
    if (c.methods.empty()) throw ValidationError("no concurrence method");
    const bool analytic = std::find(c.methods.begin(), c.methods.end(), ConcurrenceMethod::kAnalytic) != c.methods.end();
    if (analytic && prep.theta1 != 0.0)
      throw ValidationError("the analytic concurrence assumes qubit 1 starts excited (theta1 = 0)");
    if (analytic && (params.gamma1.imag() != 0.0 || params.gamma2.imag() != 0.0))
      throw ValidationError("the analytic concurrence requires real couplings");
  }
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return parse_plain(s);

  // [coef][*]pi[/denom]
  auto coef_text = trim(s.substr(0, pi_pos));
  auto rest = trim(s.substr(pi_pos + 2));
  double coef = 1.0;
  if (!coef_text.empty() && coef_text.back() == '*') coef_text = trim(coef_text.substr(0, coef_text.size() - 1));
  if (coef_text == "-") {
    coef = -1.0;
  } else if (!coef_text.empty() && coef_text != "+") {
    const auto c = parse_plain(coef_text);
    if (!c) return std::nullopt;
    coef = *c;
  }
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    const auto d = parse_plain(rest.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    denom = *d;
  }
  return coef * std::numbers::pi / denom;
}

Scenario parse_scenario(std::string_view text) {
  EntryMap entries;
  std::string section;
  int line_no = 0;
  while (!text.empty() || line_no == 0) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (text.empty()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty() || !known_keys().contains(section))
        throw ParseError(line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
    check_key(section, key, line_no);
    const auto [it, inserted] = entries.emplace(section + "." + key, Entry{value, line_no});
    if (!inserted) throw ParseError(line_no, "duplicate key '" + key + "'");
  }
  return build(entries);
}

Scenario parse_scenario_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "scenario JSON must be an object");

  auto to_text = [](const std::string& key, const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return format_double(v.get<double>());
    if (v.is_array()) {
      std::string out;
      for (const auto& item : v) {
        if (!item.is_string()) throw ParseError(0, "'" + key + "' must be a list of strings");
        if (!out.empty()) out += ", ";
        out += item.get<std::string>();
      }
      return out;
    }
    throw ParseError(0, "unsupported value type for '" + key + "'");
  };

  EntryMap entries;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      if (!known_keys().contains(key) || key.empty()) throw ParseError(0, "unknown section '" + key + "'");
      for (const auto& [inner, v] : value.items()) {
        check_key(key, inner, 0);
        entries[key + "." + inner] = Entry{to_text(inner, v), 0};
      }
    } else {
      check_key("", key, 0);
      entries["." + key] = Entry{to_text(key, value), 0};
    }
  }
  return build(entries);
}

std::string emit_scenario(const Scenario& s) {
  std::ostringstream o;
  if (!s.name.empty()) o << "name = " << s.name << '\n';
  o << "engine = " << to_string(s.engine) << "\n\n";

  const ModelParams& p = s.params;
  o << "[model]\n";
  o << "k = " << p.k << '\n';
  o << "gamma1 = " << fmt(p.gamma1.real()) << '\n';
  if (p.gamma1.imag() != 0.0) o << "gamma1_im = " << fmt(p.gamma1.imag()) << '\n';
  o << "gamma2 = " << fmt(p.gamma2.real()) << '\n';
  if (p.gamma2.imag() != 0.0) o << "gamma2_im = " << fmt(p.gamma2.imag()) << '\n';
  o << "delta = " << fmt(p.delta) << '\n';
  o << "omega = " << fmt(p.omega) << '\n';
  o << "omega1 = " << fmt(p.omega1) << '\n';
  o << "omega2 = " << fmt(p.omega2) << '\n';
  o << "beta1_1 = " << fmt(p.beta1_1) << '\n';
  o << "beta1_2 = " << fmt(p.beta1_2) << '\n';
  o << "beta2_1 = " << fmt(p.beta2_1) << '\n';
  o << "beta2_2 = " << fmt(p.beta2_2) << "\n\n";

  o << "[prep]\n";
  o << "theta1 = " << fmt(s.prep.theta1) << '\n';
  o << "theta2 = " << fmt(s.prep.theta2) << "\n\n";

  o << "[field]\n";
  switch (s.field.kind) {
    case FieldSpecKind::kBinomial:
      o << "kind = binomial\neta = " << fmt(s.field.eta) << "\nm = " << s.field.m << '\n';
      break;
    case FieldSpecKind::kNumber:
      o << "kind = number\nm = " << s.field.m << '\n';
      break;
    case FieldSpecKind::kCoherent:
      o << "kind = coherent\nalpha = " << fmt(s.field.alpha.real()) << '\n';
      if (s.field.alpha.imag() != 0.0) o << "alpha_im = " << fmt(s.field.alpha.imag()) << '\n';
      if (s.field.n_max > 0) o << "n_max = " << s.field.n_max << '\n';
      break;
  }
  o << '\n';

  o << "[time]\n";
  o << "start = " << fmt(s.time.start) << '\n';
  o << "stop = " << fmt(s.time.stop) << '\n';
  o << "steps = " << s.time.steps << "\n\n";

  const OutputRequests& out = s.outputs;
  std::vector<std::string> names;
  if (out.inversion) names.emplace_back("inversion");
  if (out.inversion_per_qubit) names.emplace_back("inversion_per_qubit");
  if (out.q_grid) names.emplace_back("q_grid");
  if (out.concurrence) names.emplace_back("concurrence_surface");
  o << "[output]\nobservables = ";
  for (std::size_t i = 0; i < names.size(); ++i) o << (i ? ", " : "") << names[i];
  o << '\n';
  if (out.q_grid) {
    o << "q_grid_time = " << fmt(out.q_grid->time) << '\n';
    o << "q_grid_extent = " << fmt(out.q_grid->extent) << '\n';
    o << "q_grid_points = " << out.q_grid->points << '\n';
  }
  if (out.concurrence) {
    const auto& c = *out.concurrence;
    o << "theta_min = " << fmt(c.theta_min) << '\n';
    o << "theta_max = " << fmt(c.theta_max) << '\n';
    o << "theta_steps = " << c.theta_steps << '\n';
    o << "concurrence_method = ";
    for (std::size_t i = 0; i < c.methods.size(); ++i) o << (i ? ", " : "") << to_string(c.methods[i]);
    o << '\n';
  }
  return o.str();
}

}  // namespace tqed
