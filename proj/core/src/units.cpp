#include "noneq/units.hpp"

namespace noneq::units {

double fs_to_inverse_ev(double t_fs) { return t_fs / hbar_ev_fs; }

double inverse_ev_to_fs(double t) { return t * hbar_ev_fs; }

double fs2_to_inverse_ev2(double phi2_fs2) {
  return phi2_fs2 / (hbar_ev_fs * hbar_ev_fs);
}

}  // namespace noneq::units
