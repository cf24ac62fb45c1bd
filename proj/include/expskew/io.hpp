#pragma once

// Text formats: inline distribution specs, numeric grids, CSV / JSON
// emitters for reports, curves, order verdicts and experiment tables, and the
// JSON experiment configuration.
//
// Inline distribution grammar:  family:key=value,key=value
//   normal:mean=0,variance=1
//   gamma:shape=2,scale=1
//   lognormal:meanlog=0,varlog=1
//   student_t:df=5
//   exponential:rate=1
//   uniform:lower=0,upper=1
//   bernoulli:p=0.3
// Omitted keys take the defaults shown. CSV reals use 12 significant digits;
// JSON reals are written in shortest round-trip form.

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "expskew/distributions.hpp"
#include "expskew/errors.hpp"
#include "expskew/inference.hpp"
#include "expskew/numerics.hpp"
#include "expskew/order.hpp"
#include "expskew/simulate.hpp"
#include "expskew/skewness.hpp"

#include "json.hpp"

namespace expskew::io {

using json = nlohmann::ordered_json;

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline double parse_real(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw domain_error(std::string(what) + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

// "lo:hi:step" (inclusive of hi up to rounding) or a comma-separated list.
inline std::vector<double> parse_grid(std::string_view text) {
  if (text.find(',') != std::string_view::npos || text.find(':') == std::string_view::npos) {
    std::vector<double> out;
    while (true) {
      const auto comma = text.find(',');
      out.push_back(parse_real(text.substr(0, comma), "grid"));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return out;
  }
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw domain_error("grid must be lo:hi:step, got '" + std::string(text) + "'");
  }
  const double lo = parse_real(text.substr(0, c1), "grid lower end");
  const double hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1), "grid upper end");
  const double step = parse_real(text.substr(c2 + 1), "grid step");
  if (!(step > 0.0) || !(hi >= lo)) {
    throw domain_error("grid needs lo <= hi and step > 0, got '" + std::string(text) + "'");
  }
  return numerics::arange_inclusive(lo, hi, step);
}

// ---------------------------------------------------------------------------
// Distribution specs

namespace detail {

struct FamilyKeys {
  Family family;
  std::vector<std::pair<std::string, double>> keys;  // name, default
};

inline const std::vector<FamilyKeys>& family_table() {
  static const std::vector<FamilyKeys> table{
      {Family::normal, {{"mean", 0.0}, {"variance", 1.0}}},
      {Family::gamma, {{"shape", 1.0}, {"scale", 1.0}}},
      {Family::lognormal, {{"meanlog", 0.0}, {"varlog", 1.0}}},
      {Family::student_t, {{"df", 5.0}}},
      {Family::exponential, {{"rate", 1.0}}},
      {Family::uniform, {{"lower", 0.0}, {"upper", 1.0}}},
      {Family::bernoulli, {{"p", 0.5}}},
  };
  return table;
}

inline const FamilyKeys& lookup_family(std::string_view name) {
  for (const auto& f : family_table()) {
    if (name == family_name(f.family)) return f;
  }
  throw domain_error("unknown distribution family '" + std::string(name) + "'");
}

inline DistributionSpec build(Family f, const std::map<std::string, double>& v) {
  switch (f) {
    case Family::normal: return DistributionSpec::normal(v.at("mean"), v.at("variance"));
    case Family::gamma: return DistributionSpec::gamma(v.at("shape"), v.at("scale"));
    case Family::lognormal: return DistributionSpec::lognormal(v.at("meanlog"), v.at("varlog"));
    case Family::student_t: return DistributionSpec::student_t(v.at("df"));
    case Family::exponential: return DistributionSpec::exponential(v.at("rate"));
    case Family::uniform: return DistributionSpec::uniform(v.at("lower"), v.at("upper"));
    case Family::bernoulli: return DistributionSpec::bernoulli(v.at("p"));
  }
  throw domain_error("unknown distribution family");
}

inline std::map<std::string, double> with_defaults(const FamilyKeys& fk) {
  std::map<std::string, double> values;
  for (const auto& [k, def] : fk.keys) values[k] = def;
  return values;
}

inline void set_key(const FamilyKeys& fk, std::map<std::string, double>& values,
                    const std::string& key, double v) {
  if (!values.count(key)) {
    std::string allowed;
    for (const auto& [k, def] : fk.keys) allowed += (allowed.empty() ? "" : ", ") + k;
    throw domain_error("family '" + std::string(family_name(fk.family)) + "' has no parameter '" +
                       key + "' (expected " + allowed + ")");
  }
  values[key] = v;
}

}  // namespace detail

inline DistributionSpec parse_distribution(std::string_view text) {
  const auto colon = text.find(':');
  const auto& fk = detail::lookup_family(text.substr(0, colon));
  auto values = detail::with_defaults(fk);
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw domain_error("expected key=value in distribution spec, got '" + std::string(item) +
                           "'");
      }
      const std::string key(item.substr(0, eq));
      detail::set_key(fk, values, key, parse_real(item.substr(eq + 1), key));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  return detail::build(fk.family, values);
}

inline Family parse_family(std::string_view name) { return detail::lookup_family(name).family; }

// ---------------------------------------------------------------------------
// Skewness report

inline void write_csv(std::ostream& os, const SkewnessReport& r) {
  os << "measure,parameter,value\n";
  os << "gamma_m,," << (r.gamma_m ? format_real(*r.gamma_m) : std::string("NA")) << '\n';
  auto curve = [&os](const char* name, const SkewnessReport::Curve& c) {
    for (const auto& [p, v] : c) os << name << ',' << format_real(p) << ',' << format_real(v) << '\n';
  };
  curve("b2", r.b2);
  curve("s2_raw", r.s2_raw);
  curve("s2", r.s2);
  os << "s3,," << format_real(r.s3) << '\n';
  os << "tau3,," << format_real(r.tau3) << '\n';
  curve("s_function", r.s_function);
  curve("s_function_scaled", r.s_function_scaled);
}

inline json to_json(const SkewnessReport& r) {
  auto curve = [](const SkewnessReport::Curve& c) {
    json a = json::array();
    for (const auto& [p, v] : c) a.push_back({{"parameter", p}, {"value", v}});
    return a;
  };
  json j;
  j["source"] = r.source;
  j["gamma_m"] = r.gamma_m ? json(*r.gamma_m) : json(nullptr);
  if (!r.gamma_m) j["gamma_m_note"] = r.gamma_m_note;
  j["b2"] = curve(r.b2);
  j["s2_raw"] = curve(r.s2_raw);
  j["s2"] = curve(r.s2);
  j["s3"] = r.s3;
  j["tau3"] = r.tau3;
  j["s_function"] = curve(r.s_function);
  j["s_function_scaled"] = curve(r.s_function_scaled);
  return j;
}

// ---------------------------------------------------------------------------
// Inference curves

inline void write_csv(std::ostream& os, const std::vector<CurvePoint>& c) {
  os << "param,estimate,lower,upper,band_halfwidth,inside\n";
  for (const auto& p : c) {
    os << format_real(p.param) << ',' << format_real(p.estimate) << ',' << format_real(p.lower)
       << ',' << format_real(p.upper) << ',' << format_real(p.band_halfwidth) << ','
       << (p.inside ? "true" : "false") << '\n';
  }
}

inline json to_json(const std::vector<CurvePoint>& c) {
  json a = json::array();
  for (const auto& p : c) {
    a.push_back({{"param", p.param},
                 {"estimate", p.estimate},
                 {"lower", p.lower},
                 {"upper", p.upper},
                 {"band_halfwidth", p.band_halfwidth},
                 {"inside", p.inside}});
  }
  return a;
}

// ---------------------------------------------------------------------------
// Order verdicts

struct NamedVerdict {
  std::string order;
  OrderVerdict verdict;
};

inline void write_csv(std::ostream& os, const std::vector<NamedVerdict>& v) {
  os << "order,relation,rendering\n";
  for (const auto& [name, verdict] : v) {
    os << name << ',' << relation_name(verdict.relation) << ",\"" << render(verdict) << "\"\n";
  }
}

inline json to_json(const std::vector<NamedVerdict>& v) {
  json a = json::array();
  for (const auto& [name, verdict] : v) {
    a.push_back({{"order", name},
                 {"relation", relation_name(verdict.relation)},
                 {"witness", verdict.witness},
                 {"grid_size", verdict.grid.size()}});
  }
  return a;
}

// ---------------------------------------------------------------------------
// Theory curves

inline void write_csv(std::ostream& os, const std::vector<TheoryPoint>& t) {
  os << "param,alpha,b2,s2_raw,s2\n";
  for (const auto& p : t) {
    os << format_real(p.param) << ',' << format_real(p.alpha) << ',' << format_real(p.b2) << ','
       << format_real(p.s2_raw) << ',' << format_real(p.s2) << '\n';
  }
}

inline json to_json(const std::vector<TheoryPoint>& t) {
  json a = json::array();
  for (const auto& p : t) {
    a.push_back(
        {{"param", p.param}, {"alpha", p.alpha}, {"b2", p.b2}, {"s2_raw", p.s2_raw}, {"s2", p.s2}});
  }
  return a;
}

// ---------------------------------------------------------------------------
// Experiments
//
// Config document:
//   {
//     "family": "gamma",
//     "params": {"shape": 0.1, "scale": 1},
//     "measures": [{"id": "gamma_m"}, {"id": "s2", "alpha": 0.25}],
//     "ns": [20, 100, 1000],
//     "reps": 2000,
//     "seed": 42
//   }
// "params", "ns", "reps" and "seed" are optional.

inline Measure parse_measure(std::string_view id) {
  for (Measure m : {Measure::gamma_m, Measure::b2, Measure::s2, Measure::s3}) {
    if (id == measure_name(m)) return m;
  }
  throw domain_error("unknown measure '" + std::string(id) + "' (expected gamma_m, b2, s2, s3)");
}

inline ExperimentConfig parse_config(const json& j) {
  try {
    ExperimentConfig c;
    const auto& fk = detail::lookup_family(j.at("family").get<std::string>());
    auto values = detail::with_defaults(fk);
    if (j.contains("params")) {
      for (const auto& [k, v] : j.at("params").items()) detail::set_key(fk, values, k, v.get<double>());
    }
    c.distribution = detail::build(fk.family, values);
    for (const auto& m : j.at("measures")) {
      MeasureSpec spec;
      spec.id = parse_measure(m.at("id").get<std::string>());
      if (m.contains("alpha")) {
        spec.alpha = m.at("alpha").get<double>();
      } else if (measure_uses_alpha(spec.id)) {
        throw domain_error(std::string("measure '") + measure_name(spec.id) + "' needs an alpha");
      }
      c.measures.push_back(spec);
    }
    if (j.contains("ns")) c.sample_sizes = j.at("ns").get<std::vector<std::size_t>>();
    if (j.contains("reps")) c.replications = j.at("reps").get<std::size_t>();
    if (j.contains("seed")) c.master_seed = j.at("seed").get<std::uint64_t>();
    validate(c);
    return c;
  } catch (const json::exception& e) {
    throw domain_error(std::string("invalid experiment config: ") + e.what());
  }
}

inline ExperimentConfig read_config(std::istream& is) {
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw domain_error(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

inline void write_csv(std::ostream& os, const ExperimentTable& t) {
  os << "measure,alpha,n,sbias,svar,smse,var_share,failures\n";
  for (const auto& r : t.rows) {
    os << measure_name(r.measure.id) << ','
       << (measure_uses_alpha(r.measure.id) ? format_real(r.measure.alpha) : std::string()) << ','
       << r.n << ',' << format_real(r.sbias) << ',' << format_real(r.svar) << ','
       << format_real(r.smse) << ',' << format_real(r.var_share) << ',' << r.failures << '\n';
  }
}

inline json to_json(const ExperimentTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row;
    row["measure"] = measure_name(r.measure.id);
    row["alpha"] = measure_uses_alpha(r.measure.id) ? json(r.measure.alpha) : json(nullptr);
    row["n"] = r.n;
    row["true_value"] = r.true_value;
    row["standardized"] = r.standardized;
    row["sbias"] = r.sbias;
    row["svar"] = r.svar;
    row["smse"] = r.smse;
    row["var_share"] = r.var_share;
    row["failures"] = r.failures;
    rows.push_back(row);
  }
  json skipped = json::array();
  for (const auto& s : t.skipped) {
    skipped.push_back({{"measure", measure_name(s.measure.id)}, {"reason", s.reason}});
  }
  json j;
  j["distribution"] = t.distribution;
  j["replications"] = t.replications;
  j["seed"] = t.master_seed;
  j["valid"] = t.valid;
  j["rows"] = rows;
  j["skipped"] = skipped;
  return j;
}

}  // namespace expskew::io
