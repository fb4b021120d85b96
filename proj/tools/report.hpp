#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "zetabounds/optimizer.hpp"
#include "zetabounds/verifier.hpp"

namespace zetabounds::report {

using nlohmann::json;

// Every record has "kind", "row" and "status" (pass, fail, inconclusive or
// info); the other fields depend on the kind.
json certificate_json(const BoundCertificate& c);
json table_record(const TableRow& r);
json optimize_record(const OptimizationResult& r, const std::string& row);
json trace_record(const std::map<std::string, double>& params, double value, long index);
std::vector<json> region_records(const RegionCheck& rc);
json trig_record(const TrigPoly& p, const TrigReport& r, const std::string& row);
json trig_search_record(int N, double step, long examined, const std::vector<TrigPoly>& found);
json spot_record(const SpotReport& r, double t_max);

enum class Format { Json, Csv };
Format parse_format(const std::string& s);

// Streams records as JSON lines or CSV (fixed columns, header first).
class Writer {
 public:
  Writer(std::ostream& out, Format format);
  void write(const json& record);

 private:
  std::ostream& out_;
  Format format_;
  bool header_done_ = false;
};

// Reads what Writer wrote, in either format.
std::vector<json> read_records(std::istream& in);

// One line per kind plus an overall line; identical for a run and for its
// report read back.
std::string summarize(const std::vector<json>& records);

}  // namespace zetabounds::report
