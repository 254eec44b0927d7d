#include "spares/orbital.hpp"

#include "spares/errors.hpp"

#include <cmath>
#include <string>

namespace spares {

void EarthConstants::validate() const {
    if (!(mu > 0.0) || !(r_earth > 0.0) || !(j2 > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "Earth constants must be strictly positive");
    }
}

void ConstellationGeometry::validate() const {
    if (!(h_p > 0.0)) throw Error(ErrorCode::InvalidGeometry, "parking altitude must be positive");
    if (!(h_c > h_p)) {
        throw Error(ErrorCode::InvalidGeometry, "constellation altitude must exceed parking altitude");
    }
    if (!(inclination >= 0.0 && inclination <= kPi)) {
        throw Error(ErrorCode::InvalidGeometry, "inclination must lie in [0, pi]");
    }
    if (n_orbit_c < 1 || n_orbit_p < 1 || n_sat_nominal < 1) {
        throw Error(ErrorCode::InvalidGeometry, "plane and satellite counts must be at least 1");
    }
}

double raan_drift_rate(double a, double inclination, const EarthConstants& k) {
    if (!(a > k.r_earth)) {
        throw Error(ErrorCode::InvalidGeometry,
                    "orbit radius " + std::to_string(a) + " km is not above the Earth radius");
    }
    const double ratio = k.r_earth / a;
    const double mean_motion = std::sqrt(k.mu / (a * a * a));  // rad/s
    return -1.5 * k.j2 * ratio * ratio * mean_motion * std::cos(inclination) * kSecondsPerDay;
}

AlignmentPeriods alignment_periods(const ConstellationGeometry& g, const EarthConstants& k) {
    const double rel = std::abs(raan_drift_rate(g.a_c(k), g.inclination, k) -
                                raan_drift_rate(g.a_p(k), g.inclination, k));
    if (!(rel > 0.0)) {
        throw Error(ErrorCode::DegenerateAlignment,
                    "zero relative RAAN drift; parking and constellation planes never re-align");
    }
    const double lap = 2.0 * kPi / rel;
    return {lap / g.n_orbit_p, lap / g.n_orbit_c};
}

int quantize_period(double tau, double tau_mc) {
    if (!(tau_mc > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau_mc must be positive");
    const double k = std::round(tau / tau_mc);  // half away from zero
    if (k < 1.0) {
        throw Error(ErrorCode::TimeStepTooCoarse,
                    "period " + std::to_string(tau) + " d rounds to zero steps of " +
                        std::to_string(tau_mc) + " d");
    }
    return static_cast<int>(k);
}

QuantizedPeriods quantize_periods(double tau_c, double tau_p, double tau_mc) {
    return {quantize_period(tau_c, tau_mc), quantize_period(tau_p, tau_mc)};
}

double hohmann_delta_v(double a_p, double a_c, const EarthConstants& k) {
    if (!(a_p > k.r_earth)) throw Error(ErrorCode::InvalidGeometry, "parking radius below Earth radius");
    if (a_c < a_p) throw Error(ErrorCode::InvalidTransfer, "only raising transfers are modeled");
    const double sum = a_p + a_c;
    return std::sqrt(k.mu / a_p) * (std::sqrt(2.0 * a_c / sum) - 1.0) +
           std::sqrt(k.mu / a_c) * (1.0 - std::sqrt(2.0 * a_p / sum));
}

double fuel_mass(double m_dry, double delta_v, double v_ex) {
    if (!(v_ex > 0.0)) throw Error(ErrorCode::InvalidPropulsion, "exhaust velocity must be positive");
    if (m_dry < 0.0 || delta_v < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "dry mass and delta-v must be non-negative");
    }
    return m_dry * std::expm1(delta_v / v_ex);
}

TransferCosting transfer_costing(double a_p, double a_c, double m_dry, double v_ex,
                                 const EarthConstants& k) {
    TransferCosting t;
    t.delta_v = hohmann_delta_v(a_p, a_c, k);
    t.m_dry = m_dry;
    t.m_fuel = fuel_mass(m_dry, t.delta_v, v_ex);
    t.m_batch = t.m_dry + t.m_fuel;
    return t;
}

}  // namespace spares
