#include "hypercount/json_io.hpp"

#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "hypercount/error.hpp"

namespace hypercount {

namespace {

using Json = nlohmann::ordered_json;

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string mode_name(CheckMode m) { return m == CheckMode::exact ? "exact" : "sampled"; }

Json to_json(const Verdict& v) {
  Json out;
  out["property"] = v.property;
  out["mode"] = mode_name(v.mode);
  out["holds"] = v.holds;
  out["i"] = v.i;
  out["p"] = v.p;
  out["checked"] = v.checked;
  out["bad_fraction"] = v.bad_fraction;
  if (v.mode == CheckMode::sampled) {
    out["seed"] = v.seed;
    out["samples"] = v.samples;
  }
  Json levels = Json::array();
  for (const auto& s : v.levels) {
    Json l;
    l["r"] = s.r;
    l["families"] = s.families;
    l["checked"] = s.checked;
    l["bad"] = s.bad;
    l["bad_fraction"] = s.bad_fraction;
    l["threshold"] = s.threshold;
    l["min_count"] = s.min_count;
    l["max_count"] = s.max_count;
    l["mean_count"] = s.mean_count;
    l["max_relative_deviation"] = s.max_relative_deviation;
    l["ci_low"] = opt(s.ci_low);
    l["ci_high"] = opt(s.ci_high);
    l["holds"] = s.holds;
    levels.push_back(std::move(l));
  }
  out["levels"] = std::move(levels);
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    Json entry;
    entry["sets"] = w.family.sets();
    entry["count"] = w.count;
    witnesses.push_back(std::move(entry));
  }
  out["witnesses"] = std::move(witnesses);
  out["notes"] = v.notes;
  return out;
}

Json to_json(const CountReport& r) {
  Json out;
  out["total"] = r.total;
  out["induced"] = opt(r.induced);
  out["non_induced"] = opt(r.non_induced);
  out["expected"] = r.expected;
  out["relative_error"] = opt(r.relative_error);
  out["nodes"] = r.nodes;
  return out;
}

CountReport count_from_json(const Json& j) {
  CountReport r;
  r.total = j.at("total").get<std::uint64_t>();
  if (!j.at("induced").is_null()) r.induced = j.at("induced").get<std::uint64_t>();
  if (!j.at("non_induced").is_null()) r.non_induced = j.at("non_induced").get<std::uint64_t>();
  r.expected = j.at("expected").get<double>();
  if (!j.at("relative_error").is_null()) r.relative_error = j.at("relative_error").get<double>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  return r;
}

Json to_json(const RunRecord& r) {
  Json out;
  out["experiment"] = r.experiment;
  out["pattern"] = r.pattern;
  out["seed"] = r.seed;
  out["n"] = r.n;
  out["p_target"] = r.p_target;
  out["p"] = r.p;
  out["edges"] = r.edges;
  out["count"] = r.count ? to_json(*r.count) : Json(nullptr);
  out["count_note"] = r.count_note;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json e;
    e["label"] = v.label;
    e["holds"] = v.holds;
    e["mode"] = v.mode;
    e["checked"] = v.checked;
    e["bad_fraction"] = v.bad_fraction;
    verdicts.push_back(std::move(e));
  }
  out["verdicts"] = std::move(verdicts);
  Json assertions = Json::array();
  for (const auto& a : r.assertions) {
    Json e;
    e["name"] = a.name;
    e["outcome"] = to_string(a.outcome);
    e["detail"] = a.detail;
    assertions.push_back(std::move(e));
  }
  out["assertions"] = std::move(assertions);
  return out;
}

RunRecord record_from_json(const Json& j) {
  RunRecord r;
  r.experiment = j.at("experiment").get<std::string>();
  r.pattern = j.at("pattern").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.n = j.at("n").get<std::size_t>();
  r.p_target = j.at("p_target").get<double>();
  r.p = j.at("p").get<double>();
  r.edges = j.at("edges").get<std::uint64_t>();
  if (!j.at("count").is_null()) r.count = count_from_json(j.at("count"));
  r.count_note = j.at("count_note").get<std::string>();
  for (const auto& v : j.at("verdicts")) {
    r.verdicts.push_back({v.at("label").get<std::string>(), v.at("holds").get<bool>(), v.at("mode").get<std::string>(),
                          v.at("checked").get<std::uint64_t>(), v.at("bad_fraction").get<double>()});
  }
  for (const auto& a : j.at("assertions")) {
    r.assertions.push_back({a.at("name").get<std::string>(), parse_outcome(a.at("outcome").get<std::string>()),
                            a.at("detail").get<std::string>()});
  }
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string verdict_json(const Verdict& v) { return dump(to_json(v)); }

std::string pseudo_verdict_json(const PseudoVerdict& v) {
  Json out;
  out["property"] = "pseudorandom";
  out["holds"] = v.holds;
  out["density"] = {{"edges", v.density.edges},
                    {"total", v.density.total},
                    {"num", v.density.num},
                    {"den", v.density.den},
                    {"value", v.density.value}};
  out["bdd"] = to_json(v.bdd);
  out["tuple"] = to_json(v.tuple);
  return dump(out);
}

std::string profile_json(const StructureProfile& prof) {
  Json out;
  out["d_H"] = prof.degeneracy;
  out["max_degree"] = prof.max_degree;
  out["D_H"] = prof.cap;
  out["linear"] = prof.linear;
  out["connector_free"] = prof.connector_free;
  out["connectors"] = prof.connectors ? Json(*prof.connectors) : Json(nullptr);
  return dump(out);
}

std::string count_report_json(const CountReport& report) { return dump(to_json(report)); }

std::string records_json(const std::vector<RunRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return dump(out);
}

std::vector<RunRecord> records_from_json(std::string_view text) {
  std::vector<RunRecord> out;
  try {
    const Json j = Json::parse(text);
    if (!j.is_array()) throw Error(ErrorKind::parse, "records must be a JSON array");
    for (const auto& e : j) out.push_back(record_from_json(e));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad records JSON: ") + e.what());
  }
  return out;
}

std::string records_csv(const std::vector<RunRecord>& records) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& r : records)
    for (const auto& a : r.assertions)
      if (seen.insert(a.name).second) names.push_back(a.name);

  std::string out = "experiment,seed,n,p,total,expected,relative_error";
  for (const auto& name : names) out += "," + csv_field(name);
  out += "\n";
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{}", csv_field(r.experiment), r.seed, r.n, r.p);
    if (r.count) {
      out += fmt::format(",{},{},", r.count->total, r.count->expected);
      if (r.count->relative_error) out += fmt::format("{}", *r.count->relative_error);
    } else {
      out += ",,,";
    }
    for (const auto& name : names) {
      out += ",";
      for (const auto& a : r.assertions)
        if (a.name == name) out += to_string(a.outcome);
    }
    out += "\n";
  }
  return out;
}

}  // namespace hypercount
