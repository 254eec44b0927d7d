#pragma once

// Circular-orbit primitives: J2 nodal regression, plane alignment
// periods, and coplanar Hohmann transfer costing.

namespace spares {

inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kDaysPerYear = 365.25;
inline constexpr double kPi = 3.14159265358979323846;

struct EarthConstants {
    double mu = 398600.4418;     ///< km^3/s^2
    double r_earth = 6378.137;   ///< km
    double j2 = 1.08262668e-3;

    void validate() const;
};

struct ConstellationGeometry {
    double h_c = 1200.0;          ///< constellation altitude, km
    double h_p = 735.0;           ///< parking altitude, km
    double inclination = 0.0;     ///< rad
    int n_orbit_c = 1;
    int n_orbit_p = 1;
    int n_sat_nominal = 1;

    void validate() const;
    double a_c(const EarthConstants& k) const { return k.r_earth + h_c; }
    double a_p(const EarthConstants& k) const { return k.r_earth + h_p; }
};

struct TransferCosting {
    double delta_v = 0.0;  ///< km/s
    double m_dry = 0.0;    ///< kg
    double m_fuel = 0.0;   ///< kg
    double m_batch = 0.0;  ///< kg, dry + fuel
};

struct AlignmentPeriods {
    double tau_c = 0.0;  ///< days between contacts seen by one constellation plane
    double tau_p = 0.0;  ///< days between contacts seen by one parking orbit
};

struct QuantizedPeriods {
    int k_c = 0;
    int k_p = 0;
};

/// Secular RAAN rate in rad/day for a circular orbit of radius `a` (km).
double raan_drift_rate(double a, double inclination, const EarthConstants& constants = {});

AlignmentPeriods alignment_periods(const ConstellationGeometry& geometry,
                                   const EarthConstants& constants = {});

/// Rounds a period to the Markov grid (half away from zero); throws
/// TimeStepTooCoarse if it would round to zero steps.
int quantize_period(double tau, double tau_mc);
QuantizedPeriods quantize_periods(double tau_c, double tau_p, double tau_mc);

/// Two-burn Hohmann raise from radius a_p to a_c, km/s.
double hohmann_delta_v(double a_p, double a_c, const EarthConstants& constants = {});

/// Rocket-equation propellant for a dry mass and delta-v.
double fuel_mass(double m_dry, double delta_v, double v_ex);

TransferCosting transfer_costing(double a_p, double a_c, double m_dry, double v_ex,
                                 const EarthConstants& constants = {});

}  // namespace spares
