#include "eehtac/energy.hpp"

#include <cmath>

namespace eehtac {

double thorp_absorption_db_per_km(double f_khz) {
    const double f2 = f_khz * f_khz;
    return 0.11 * f2 / (1.0 + f2) + 44.0 * f2 / (4100.0 + f2) +
           2.75e-4 * f2 + 0.003;
}

EnergyModel EnergyModel::make(double e_elec, double e_amp, double kappa,
                              double e_fuse, double e_idle,
                              double carrier_khz) {
    EnergyModel m;
    m.e_elec = e_elec;
    m.e_amp = e_amp;
    m.kappa = kappa;
    m.e_fuse = e_fuse;
    m.e_idle = e_idle;
    m.carrier_khz = carrier_khz;
    m.absorption_per_km = std::pow(10.0, thorp_absorption_db_per_km(carrier_khz) / 10.0);
    return m;
}

double tx_energy(double bits, double distance_m, const EnergyModel& model) {
    const double spreading = std::pow(distance_m, model.kappa);
    const double absorption = std::pow(model.absorption_per_km, distance_m / 1000.0);
    return bits * model.e_elec + bits * model.e_amp * spreading * absorption;
}

double rx_energy(double bits, const EnergyModel& model) {
    return bits * model.e_elec;
}

double propagation_delay(double distance_m) { return distance_m / 1500.0; }

}  // namespace eehtac
