#pragma once

#include "spares/markov.hpp"

namespace spares {

/// Capped Poisson failures: at most n_nominal satellites are operational,
/// spares never fail.
struct FailureModel {
    double lambda_step = 0.0;  ///< failures per operational satellite per time step
    int n_nominal = 1;

    static FailureModel from_yearly(double lambda_per_year, double tau_mc_days, int n_nominal);
    void validate() const;
};

/// Shifted-exponential launch lead time on the Markov grid.
struct LeadTimeModel {
    double mu_lv = 1.0;    ///< days, mean of the exponential part
    double tau_lv = 0.0;   ///< days, fixed processing delay (a multiple of tau_mc)
    double tau_mc = 1.0;   ///< days
    double alpha = 0.0;    ///< exp(-tau_mc / mu_lv)
    int k_lv = 0;          ///< tau_lv / tau_mc

    /// Rounds tau_lv to the nearest multiple of tau_mc.
    static LeadTimeModel make(double mu_lv, double tau_lv, double tau_mc);
    void validate() const;
};

/// Integers splitting the lead time against the parking review period.
struct LeadTimeGrid {
    int m_lv = 0;     ///< review periods that elapse entirely inside the fixed delay
    int k_left = 0;   ///< step in period m_lv at which the fixed delay ends
    int k_right = 0;  ///< remaining steps of that period
    int k_p = 1;
};

/// P(F = k | X = n).
double failure_pmf(int k, int n, const FailureModel& model);

/// One-step failure matrix over states {0..n_max}; residual mass of each
/// column goes to state 0.
TransitionMatrix failure_matrix(int n_max, const FailureModel& model);

/// rho_{k+1}: probability the lead time falls in [k, k+1) steps, i.e. the
/// delivery lands on step k + 1.
double lead_time_pmf(int k, const LeadTimeModel& model);

/// rho^c_l: probability nothing has been delivered by step l.
double lead_time_survival(int l, const LeadTimeModel& model);

LeadTimeGrid lead_time_grid(const LeadTimeModel& model, int k_p);

}  // namespace spares
