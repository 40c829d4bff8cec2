#include "fluxonium/params.hpp"

#include <cmath>
#include <string>

#include "fluxonium/constants.hpp"

namespace fluxonium {

namespace {

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string(field) + " must be positive and finite, got " +
                          std::to_string(v));
  }
}

}  // namespace

double reduce_angle(double theta) {
  const double two_pi = 2.0 * constants::pi;
  double r = std::fmod(theta, two_pi);
  if (r < 0.0) r += two_pi;
  // fmod can return exactly two_pi after the correction when theta is a
  // tiny negative number.
  if (r >= two_pi) r = 0.0;
  return r;
}

CircuitParams CircuitParams::make(double e_c, double e_l, double e_j, double theta) {
  require_positive(e_c, "e_c");
  require_positive(e_l, "e_l");
  if (e_j < 0.0 || !std::isfinite(e_j)) {
    throw ValidationError("e_j must be non-negative and finite, got " + std::to_string(e_j));
  }
  if (!std::isfinite(theta)) {
    throw ValidationError("theta must be finite");
  }
  return CircuitParams{e_c, e_l, e_j, reduce_angle(theta)};
}

CircuitParams from_physical(double capacitance_farad, double inductance_henry,
                            double critical_current_ampere) {
  require_positive(capacitance_farad, "capacitance");
  require_positive(inductance_henry, "inductance");
  require_positive(critical_current_ampere, "critical_current");

  using namespace constants;
  const double two_e = 2.0 * elementary_charge;
  const double phi0_over_2pi = flux_quantum / (2.0 * pi);
  const double ghz = 1.0e9 * planck_h;  // J per GHz of frequency

  const double e_c = (two_e * two_e) / (2.0 * capacitance_farad) / ghz;
  const double e_l = (phi0_over_2pi * phi0_over_2pi) / (2.0 * inductance_henry) / ghz;
  const double e_j = critical_current_ampere * flux_quantum / (2.0 * pi) / ghz;
  return CircuitParams::make(e_c, e_l, e_j, 0.0);
}

DerivedRatios ratios(const CircuitParams& p) {
  const double r_imp = std::sqrt(p.e_c / p.e_l);
  return DerivedRatios{r_imp, p.e_j / p.e_c, r_imp / (2.0 * constants::pi)};
}

double capacitance_from_ec(double e_c_ghz) {
  require_positive(e_c_ghz, "e_c");
  using namespace constants;
  const double two_e = 2.0 * elementary_charge;
  return (two_e * two_e) / (2.0 * e_c_ghz * 1.0e9 * planck_h);
}

double inductance_from_el(double e_l_ghz) {
  require_positive(e_l_ghz, "e_l");
  using namespace constants;
  const double phi0_over_2pi = flux_quantum / (2.0 * pi);
  return (phi0_over_2pi * phi0_over_2pi) / (2.0 * e_l_ghz * 1.0e9 * planck_h);
}

double critical_current_from_ej(double e_j_ghz) {
  require_positive(e_j_ghz, "e_j");
  using namespace constants;
  return e_j_ghz * 1.0e9 * planck_h * 2.0 * pi / flux_quantum;
}

}  // namespace fluxonium
