#ifndef ALFORGE_UNITS_HPP
#define ALFORGE_UNITS_HPP

#include <cmath>

namespace alforge::units {

// Internal unit system: Angstrom, femtosecond, electronvolt, amu, Kelvin.
inline constexpr double k_boltzmann = 8.617333262e-5; // eV / K

// Acceleration in A/fs^2 produced by 1 eV/A acting on 1 amu.
inline constexpr double force_to_accel = 9.6485e-3; // (A/fs^2) / (eV/(A*amu))

// 1 amu * (A/fs)^2 expressed in eV.
inline constexpr double amu_velocity_sq_to_ev = 1.0 / force_to_accel;

// Kinetic energy (eV) of one atom: 0.5 * m[amu] * |v|^2[(A/fs)^2].
inline double kinetic_energy_ev(double mass_amu, double v_squared) {
    return 0.5 * mass_amu * v_squared * amu_velocity_sq_to_ev;
}

// Instantaneous temperature from total kinetic energy, 3N degrees of freedom.
inline double temperature_from_kinetic(double kinetic_ev, std::size_t n_atoms) {
    if (n_atoms == 0) return 0.0;
    return 2.0 * kinetic_ev / (3.0 * static_cast<double>(n_atoms) * k_boltzmann);
}

// Per-component Maxwell-Boltzmann velocity sigma at temperature T (A/fs).
inline double maxwell_sigma(double mass_amu, double temperature_k) {
    return std::sqrt(force_to_accel * k_boltzmann * temperature_k / mass_amu);
}

} // namespace alforge::units

#endif
