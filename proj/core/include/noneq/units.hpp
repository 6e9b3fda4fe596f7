#pragma once

namespace noneq::units {

// reduced Planck constant in eV*fs
inline constexpr double hbar_ev_fs = 0.6582119569;

// room temperature k_B T used throughout the driven examples
inline constexpr double kT_room_ev = 0.0259;

double fs_to_inverse_ev(double t_fs);
double inverse_ev_to_fs(double t);

// chirp in fs^2 to eV^-2
double fs2_to_inverse_ev2(double phi2_fs2);

}  // namespace noneq::units
