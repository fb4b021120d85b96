#include "zetabounds/published_tables.hpp"

#include "zetabounds/errors.hpp"

namespace zetabounds::tables {

const std::vector<GrowthRow>& growth_rows() {
  static const std::vector<GrowthRow> rows = {
      {"3", 1.5, "8/e", 10, 1.91, 0.309},
      {"ee", 3.2, "8/e", 2.5, 1.91, 0.309},
      {"500", 8.1, "2.36", 1.6, 2.13, 0.386},
      {"H", 41.5, "0.94", 1.6, 3.84, 0.941},
  };
  return rows;
}

const std::vector<ZRow>& z_rows() {
  static const std::vector<ZRow> rows = {
      {"3", 4.32, 7.479},     {"ee", 5.88, 2.439},     {"2ee", 6.77, 2.065},
      {"500", 11.14, 1.750},  {"1000", 11.97, 1.741},  {"H", 11.96, 1.732},
  };
  return rows;
}

const std::vector<R1Row>& r1_rows() {
  static const std::vector<R1Row> rows = {
      {21.24, "ee", 586798, 0.02747, 5, 0.984, 0.040833, 0.999823479, 9.59, 12},
      {21.3, "ee", 61411, 0.02736, 5, 0.669, 0.040469, 0.998308198, 13.53, 12},
      {21.4, "ee", 24793, 0.02899, 5, 0.571, 0.045826, 0.996044781, 13.02, 12},
      {21.5, "ee", 15547, 0.02615, 5, 0.794, 0.036503, 0.993003844, 12.71, 12},
      {21.6, "ee", 11348, 0.02902, 5, 0.75, 0.045935, 0.991398549, 9.02, 12},
      {21.7, "ee", 8918, 0.02822, 5, 0.603, 0.043309, 0.988788889, 9.77, 12},
      {21.8, "ee", 7367, 0.02661, 5, 0.792, 0.037998, 0.985604987, 13.36, 12},
      {21.9, "ee", 6272, 0.02742, 5, 0.602, 0.040676, 0.983657702, 7.52, 12},
      {22, "ee", 5471, 0.02706, 5, 0.623, 0.039479, 0.981034372, 6.45, 12},
      {22.5, "ee", 3357, 0.02772, 5, 0.767, 0.041652, 0.970117219, 6.97, 12},
      {23, "ee", 2439, 0.02704, 5, 0.598, 0.039411, 0.958174313, 9.93, 12},
      {24, "18", 1599, 0.02731, 5, 0.837, 0.040295, 0.93786755, 9.83, 12},
      {25, "24", 1205, 0.0273, 4, 0.908, 0.040274, 0.918777327, 13.41, 12},
      {26, "33", 976, 0.02723, 5, 0.735, 0.040044, 0.90090744, 13.38, 12},
      {27, "45", 826, 0.02698, 5, 0.583, 0.039199, 0.883429874, 8.34, 12},
      {29, "85", 643, 0.02645, 5, 0.562, 0.037456, 0.850817294, 7.11, 12},
      {31, "163", 534, 0.02659, 5, 0.849, 0.037945, 0.825515109, 8.04, 12},
      {35, "300", 412, 0.0262, 4, 0.583, 0.036661, 0.778825508, 10.65, 10.5},
      {40, "490", 332, 0.02609, 5, 0.956, 0.036301, 0.73504714, 10.04, 9},
      {50, "500", 256, 0.0257, 4, 0.607, 0.035005, 0.669962863, 14.27, 9},
      {60, "500", 219, 0.02543, 5, 0.838, 0.034113, 0.625294336, 11.66, 9},
      {70, "500", 197, 0.02519, 5, 0.81, 0.033352, 0.592150687, 14.77, 9},
  };
  return rows;
}

const std::vector<K1Row>& k1_rows() {
  static const std::vector<K1Row> rows = {
      {"ee", 238.4, 16.7, 0.2188, 4, 0.00946, 7.89, 0.1745},
      {"500", 113.3, 8.3, 0.1938, 4, 0.0201, 11.26, 0.4098},
      {"H", 110.6, 21.233, 0.0240, 4, 0.0295, 8.87, 0.8815},
  };
  return rows;
}

const std::vector<R2Row>& r2_rows() {
  static const std::vector<R2Row> rows = {
      {21.24, "ee", 44910, 6.52, 14978}, {22, "ee", 23227, 6.52, 3438},
      {23, "ee", 21453, 6.52, 2494},     {24, "18", 13349, 7.14, 2018},
      {25, "24", 9526, 6.94, 1731},      {26, "33", 7332, 8.13, 1532},
      {27, "45", 5922, 8.39, 1382},
  };
  return rows;
}

const std::vector<K2Row>& k2_rows() {
  static const std::vector<K2Row> rows = {
      {"ee", 202.3, 0.0032, 6.64},
      {"500", 107.7, 0.0067, 9.80},
      {"H", 103.5, 0.0068, 9.77},
  };
  return rows;
}

Ball parse_omega1(std::string_view text, const PrecisionContext& ctx) {
  if (text == "8/e") return 8.0 / ctx.e();
  return Ball::from_decimal(text, ctx.bits());
}

GrowthParams growth_row(std::string_view row_t0, const PrecisionContext& ctx) {
  for (const auto& r : growth_rows()) {
    if (r.t0 == row_t0) {
      return GrowthParams::rounded(Height::parse(r.t0), r.kappa, parse_omega1(r.omega1, ctx), r.A,
                                   r.B, r.omega2, ctx);
    }
  }
  throw DomainError("no growth row for t0 = " + std::string(row_t0));
}

GrowthParams growth_row_for(const Height& t0, const PrecisionContext& ctx) {
  if (t0 == Height::H()) return growth_row("H", ctx);
  const double t = t0.approx();
  if (t >= static_cast<double>(PrecisionContext::kHeightH)) return growth_row("H", ctx);
  if (t >= 500) return growth_row("500", ctx);
  if (t0 == Height::ee() || t > Height::ee().approx()) return growth_row("ee", ctx);
  throw DomainError("no growth row covers t0 = " + t0.label());
}

WSchedule r1_schedule(double W, const Height& t0) {
  WSchedule s;
  s.t0_valid = t0.approx();
  for (const auto& r : r1_rows()) {
    if (r.W >= W && Height::parse(r.t0).approx() <= s.t0_valid) {
      s.entries.push_back({r.W, r.R1, Height::parse(r.t0)});
    }
  }
  return s;
}

double k1_for(const Height& t0) {
  if (t0 == Height::H()) return 110.6;
  return t0.approx() >= 500 ? 113.3 : 238.4;
}

}  // namespace zetabounds::tables
