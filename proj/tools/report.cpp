#include "report.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "zetabounds/errors.hpp"

namespace zetabounds::report {
namespace {

const std::vector<std::string> kCsvColumns = {"kind",   "row",    "quantity",          "printed", "computed",
                                              "deviation", "status", "failed_constraints", "witness"};

json flags_json(const std::vector<ConstraintFlag>& flags) {
  json j = json::object();
  for (const auto& f : flags) j[f.name] = f.ok;
  return j;
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"sigma", w->sigma}, {"t", w->t}, {"lhs", w->lhs}, {"rhs", w->rhs}};
}

std::string status_of(Outcome o) {
  switch (o) {
    case Outcome::Certified: return "pass";
    case Outcome::Failed: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "fail";
}

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_null()) return "";
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

json certificate_json(const BoundCertificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["valid"] = c.valid();
  j["value"] = c.valid() ? json(c.value->mid()) : json(nullptr);
  j["value_radius"] = c.valid() ? json(c.value->rad()) : json(nullptr);
  j["upper"] = c.valid() ? json(c.upper()) : json(nullptr);
  j["t_low"] = c.t_low;
  j["t_high"] = c.t_high;
  j["params"] = c.params;
  j["constraints"] = flags_json(c.constraints);
  j["details"] = c.details;
  return j;
}

json table_record(const TableRow& r) {
  json j;
  j["kind"] = "table";
  j["table"] = r.table;
  j["row"] = r.row;
  j["quantity"] = r.quantity;
  j["printed"] = r.printed;
  j["computed"] = r.computed ? json(*r.computed) : json(nullptr);
  j["deviation"] = r.computed ? json(r.deviation) : json(nullptr);
  j["status"] = r.ok() ? "pass" : "fail";
  j["checks"] = flags_json(r.checks);
  j["constraints"] = flags_json(r.constraints);
  j["extra"] = r.extra;
  j["params"] = r.params;
  j["witness"] = nullptr;
  return j;
}

json optimize_record(const OptimizationResult& r, const std::string& row) {
  json j;
  j["kind"] = "optimize";
  j["objective"] = to_string(r.objective);
  j["row"] = row;
  j["status"] = r.feasible ? "pass" : "fail";
  j["computed"] = r.feasible ? json(r.best_value) : json(nullptr);
  j["best_params"] = r.best_params;
  j["evaluations"] = r.evaluations;
  j["infeasibility"] = r.infeasibility;
  j["certificate"] = certificate_json(r.certificate);
  j["constraints"] = flags_json(r.certificate.constraints);
  j["witness"] = nullptr;
  return j;
}

json trace_record(const std::map<std::string, double>& params, double value, long index) {
  return {{"kind", "trace"},   {"row", std::to_string(index)}, {"status", "info"},
          {"params", params}, {"computed", value}};
}

std::vector<json> region_records(const RegionCheck& rc) {
  std::vector<json> out;
  for (const auto& p : rc.parts) {
    json j;
    j["kind"] = "region_check";
    j["row"] = rc.name + "/" + p.name;
    j["status"] = status_of(p.outcome);
    j["outcome"] = to_string(p.outcome);
    j["cells"] = p.cells;
    j["depth"] = p.depth;
    j["max_estimate"] = p.max_estimate;
    j["max_upper"] = p.max_upper;
    j["peak"] = witness_json(p.peak);
    j["witness"] = witness_json(p.witness);
    json region = json::array();
    for (const auto& r : p.region) region.push_back({r.sigma_lo, r.sigma_hi, r.t_lo, r.t_hi});
    j["region"] = region;
    out.push_back(j);
  }
  json s;
  s["kind"] = "region_summary";
  s["row"] = rc.name;
  s["status"] = status_of(rc.outcome());
  s["description"] = rc.description;
  s["lhs"] = rc.lhs;
  s["rhs"] = rc.rhs;
  s["margin"] = rc.margin;
  s["grid"] = rc.grid;
  s["max_depth"] = rc.max_depth;
  s["notes"] = rc.notes;
  s["summary"] = rc.summary;
  s["witness"] = nullptr;
  for (const auto& p : rc.parts) {
    if (p.witness) {
      s["witness"] = witness_json(p.witness);
      break;
    }
  }
  out.push_back(s);
  return out;
}

json trig_record(const TrigPoly& p, const TrigReport& r, const std::string& row) {
  json j;
  j["kind"] = "trig_criteria";
  j["row"] = row;
  j["status"] = "info";
  j["coefficients"] = p.a;
  j["nonneg"] = r.nonneg;
  j["min_value"] = r.min_value;
  j["min_lower"] = r.min_lower;
  j["argmin"] = r.argmin;
  j["abs_sum"] = r.abs_sum;
  j["zerofree_style"] = r.zerofree_style;
  j["reciprocal_style"] = r.reciprocal_style;
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  j["witness"] = witness_json(r.witness);
  return j;
}

json trig_search_record(int N, double step, long examined, const std::vector<TrigPoly>& found) {
  json j;
  j["kind"] = "trig_search";
  j["row"] = "N=" + std::to_string(N);
  j["status"] = found.empty() ? "pass" : "fail";
  j["step"] = step;
  j["examined"] = examined;
  json f = json::array();
  for (const auto& p : found) f.push_back(p.a);
  j["found"] = f;
  j["witness"] = found.empty() ? json(nullptr) : json(found.front().a);
  return j;
}

json spot_record(const SpotReport& r, double t_max) {
  json j;
  j["kind"] = "spot_check";
  j["row"] = r.cert_name;
  j["status"] = r.violations ? "fail" : (r.unresolved ? "inconclusive" : "pass");
  j["certificate_kind"] = to_string(r.kind);
  j["bound"] = r.bound;
  j["samples"] = r.samples;
  j["t_max"] = t_max;
  j["violations"] = r.violations;
  j["unresolved"] = r.unresolved;
  j["max_ratio"] = r.max_ratio;
  j["worst"] = witness_json(r.worst);
  j["witness"] = witness_json(r.witness);
  return j;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw DomainError("format must be json or csv");
}

Writer::Writer(std::ostream& out, Format format) : out_(out), format_(format) {}

void Writer::write(const json& record) {
  if (format_ == Format::Json) {
    out_ << record.dump() << '\n';
    return;
  }
  if (!header_done_) {
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) out_ << (i ? "," : "") << kCsvColumns[i];
    out_ << '\n';
    header_done_ = true;
  }
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
    const std::string& col = kCsvColumns[i];
    json v = nullptr;
    if (col == "failed_constraints") {
      std::string failed;
      if (record.contains("constraints")) {
        for (const auto& [k, ok] : record["constraints"].items()) {
          if (!ok.get<bool>()) failed += (failed.empty() ? "" : ";") + k;
        }
      }
      v = failed;
    } else if (record.contains(col)) {
      v = record[col];
    }
    out_ << (i ? "," : "") << csv_cell(v);
  }
  out_ << '\n';
}

std::vector<json> read_records(std::istream& in) {
  std::vector<json> out;
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '{') {
      out.push_back(json::parse(line));
      continue;
    }
    const auto cells = split_csv(line);
    if (header.empty()) {
      header = cells;
      continue;
    }
    json j;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) j[header[i]] = cells[i];
    out.push_back(j);
  }
  return out;
}

std::string summarize(const std::vector<json>& records) {
  std::map<std::string, std::map<std::string, long>> counts;
  std::string first_fail;
  for (const auto& r : records) {
    const std::string kind = r.value("kind", "?");
    const std::string status = r.value("status", "?");
    ++counts[kind][status];
    if (status == "fail" && first_fail.empty()) first_fail = kind + " " + r.value("row", "?");
  }
  std::ostringstream os;
  long fail = 0, inconclusive = 0;
  for (const auto& [kind, c] : counts) {
    long total = 0;
    for (const auto& [s, n] : c) total += n;
    auto get = [&](const char* s) {
      auto it = c.find(s);
      return it == c.end() ? 0L : it->second;
    };
    os << kind << ": records=" << total << " pass=" << get("pass") << " fail=" << get("fail")
       << " inconclusive=" << get("inconclusive") << " info=" << get("info") << '\n';
    fail += get("fail");
    inconclusive += get("inconclusive");
  }
  os << "overall: " << (fail ? "fail" : inconclusive ? "inconclusive" : "pass");
  if (!first_fail.empty()) os << " (first failure: " << first_fail << ")";
  os << '\n';
  return os.str();
}

}  // namespace zetabounds::report
