#ifndef FLUXONIUM_CONSTANTS_HPP
#define FLUXONIUM_CONSTANTS_HPP

namespace fluxonium::constants {

inline constexpr double pi = 3.14159265358979323846;

// CODATA-2018 (SI exact since the 2019 redefinition). All outputs of the
// library are reproducible bit-for-bit against this table.
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck_h = 6.62607015e-34;            // J s
inline constexpr double boltzmann_k = 1.380649e-23;           // J / K

inline constexpr double hbar = planck_h / (2.0 * pi);                     // J s
inline constexpr double flux_quantum = planck_h / (2.0 * elementary_charge);  // Wb

}  // namespace fluxonium::constants

#endif
