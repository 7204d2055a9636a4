#pragma once

namespace eehtac {

// First-order acoustic radio model with Thorp absorption.
struct EnergyModel {
    double e_elec = 50e-9;     // J/bit, tx and rx electronics
    double e_amp = 0.4e-9;     // J/bit/m^kappa, transmit amplification
    double kappa = 1.5;        // spreading exponent
    double e_fuse = 5e-9;      // J/bit, data fusing at a CH
    double e_idle = 0.1e-6;    // J per round
    double carrier_khz = 27.0;
    double absorption_per_km = 0.0;  // linear ratio per km, from Thorp

    static EnergyModel make(double e_elec, double e_amp, double kappa,
                            double e_fuse, double e_idle, double carrier_khz);
};

// Thorp absorption coefficient in dB/km at frequency f (kHz):
//   0.11 f^2/(1+f^2) + 44 f^2/(4100+f^2) + 2.75e-4 f^2 + 0.003
double thorp_absorption_db_per_km(double f_khz);

// Transmit cost: bits*e_elec + bits*e_amp*d^kappa*a(f)^(d/1000).
double tx_energy(double bits, double distance_m, const EnergyModel& model);

// Receive cost: bits * e_elec.
double rx_energy(double bits, const EnergyModel& model);

// Sound travels at a constant 1500 m/s.
double propagation_delay(double distance_m);

}  // namespace eehtac
