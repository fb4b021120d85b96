#pragma once

#include <string_view>
#include <vector>

#include "zetabounds/bound_formulas.hpp"

namespace zetabounds::tables {

// Growth-bound rows: t0, kappa, omega1 (as text, "8/e" allowed), A_kappa, B, omega2.
struct GrowthRow {
  std::string_view t0;
  double kappa;
  std::string_view omega1;
  double A;
  double B;
  double omega2;
};

struct ZRow {
  std::string_view t0;
  double sigma1;
  double Z;
};

// R1 rows. The parameters are those of the t >= H regime; the row's t0 and
// c_RH drive the t0 <= t <= H regime.
struct R1Row {
  double W;
  std::string_view t0;
  double R1;
  double alpha1;
  int alpha1_decimals;
  double epsilon;
  double d;
  double beta;
  double sigma1;
  double c_RH_inv;
};

struct K1Row {
  std::string_view t0;
  double K1;
  double c_inv;
  double alpha1;
  int alpha1_decimals;
  double d;
  double sigma1;
  double epsilon;
};

struct R2Row {
  double W;
  std::string_view t0;
  double R2;
  double sigma1;
  double R2_500;
};

struct K2Row {
  std::string_view t0;
  double K2;
  double d1;
  double sigma1;
};

const std::vector<GrowthRow>& growth_rows();
const std::vector<ZRow>& z_rows();
const std::vector<R1Row>& r1_rows();
const std::vector<K1Row>& k1_rows();
const std::vector<R2Row>& r2_rows();
const std::vector<K2Row>& k2_rows();

// Shift parameters used for every R2 row: (d1, sigma1) at t0 = 500, d1 below it.
inline constexpr double kR2LowD1 = 0.0031;
inline constexpr double kR2HighD1 = 0.0067;
inline constexpr double kR2HighSigma1 = 12.35;

/// "8/e" or a decimal.
Ball parse_omega1(std::string_view text, const PrecisionContext& ctx);

/// The rounded growth row for row_t0 ("3", "ee", "500", "H").
GrowthParams growth_row(std::string_view row_t0, const PrecisionContext& ctx);
/// The rounded row with the largest t0 not exceeding t0, among ee, 500, H.
GrowthParams growth_row_for(const Height& t0, const PrecisionContext& ctx);

/// R1 rows with W_j >= W that are valid from t0 on.
WSchedule r1_schedule(double W, const Height& t0);
/// K1 value valid from t0 on.
double k1_for(const Height& t0);

}  // namespace zetabounds::tables
