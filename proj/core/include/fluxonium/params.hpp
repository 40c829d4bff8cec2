#ifndef FLUXONIUM_PARAMS_HPP
#define FLUXONIUM_PARAMS_HPP

#include "fluxonium/errors.hpp"

namespace fluxonium {

/// Circuit energies of the fluxonium Hamiltonian
///     H = E_C n^2 + E_L phi^2 - E_J cos(phi - theta).
///
/// All energies are stored as frequencies E/h in GHz; theta is the
/// dimensionless external flux 2*pi*Theta/Phi0 in radians, reduced to
/// [0, 2*pi). Construct through make() or from_physical() so the
/// invariants (e_c > 0, e_l > 0, e_j >= 0) always hold.
struct CircuitParams {
  double e_c = 0.0;    // GHz
  double e_l = 0.0;    // GHz
  double e_j = 0.0;    // GHz
  double theta = 0.0;  // rad, in [0, 2*pi)

  static CircuitParams make(double e_c, double e_l, double e_j, double theta = 0.0);

  /// Same energies, different flux (reduced on the way in).
  CircuitParams with_theta(double new_theta) const {
    return make(e_c, e_l, e_j, new_theta);
  }
};

/// The dimensionless ratios the whole parameter-space study is phrased in.
/// z_over_rq == r_imp / (2*pi) holds exactly by construction.
struct DerivedRatios {
  double r_imp;      // sqrt(E_C / E_L)
  double r_j;        // E_J / E_C
  double z_over_rq;  // Z0 / R_Q = r_imp / (2*pi)
};

/// Energies from the physical circuit elements:
///   E_C = (2e)^2 / 2C,  E_L = (Phi0/2pi)^2 / 2L,  E_J = Ic Phi0 / 2pi,
/// each reported as a frequency (value / h) in GHz. theta defaults to 0.
CircuitParams from_physical(double capacitance_farad, double inductance_henry,
                            double critical_current_ampere);

DerivedRatios ratios(const CircuitParams& p);

/// Inverse maps of from_physical, used by the convert command.
double capacitance_from_ec(double e_c_ghz);        // farad
double inductance_from_el(double e_l_ghz);         // henry
double critical_current_from_ej(double e_j_ghz);   // ampere

/// Reduce an angle to [0, 2*pi).
double reduce_angle(double theta);

}  // namespace fluxonium

#endif
