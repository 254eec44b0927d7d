#include "spares/stochastic.hpp"

#include "spares/errors.hpp"
#include "spares/orbital.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spares {

FailureModel FailureModel::from_yearly(double lambda_per_year, double tau_mc_days, int n_nominal) {
    FailureModel m{lambda_per_year * tau_mc_days / kDaysPerYear, n_nominal};
    m.validate();
    return m;
}

void FailureModel::validate() const {
    if (!(lambda_step > 0.0) || !std::isfinite(lambda_step)) {
        throw Error(ErrorCode::InvalidArgument,
                    "failure rate must be strictly positive (zero makes the chain non-ergodic)");
    }
    if (n_nominal < 1) throw Error(ErrorCode::InvalidArgument, "nominal satellite count must be >= 1");
}

LeadTimeModel LeadTimeModel::make(double mu_lv, double tau_lv, double tau_mc) {
    if (!(tau_mc > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau_mc must be positive");
    if (!(mu_lv > 0.0)) throw Error(ErrorCode::InvalidArgument, "mu_lv must be positive");
    if (tau_lv < 0.0) throw Error(ErrorCode::InvalidArgument, "tau_lv must be non-negative");
    LeadTimeModel m;
    m.mu_lv = mu_lv;
    m.tau_mc = tau_mc;
    m.k_lv = static_cast<int>(std::round(tau_lv / tau_mc));
    m.tau_lv = m.k_lv * tau_mc;
    m.alpha = std::exp(-tau_mc / mu_lv);
    m.validate();
    return m;
}

void LeadTimeModel::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "alpha must lie strictly inside (0, 1)");
    }
    if (k_lv < 0) throw Error(ErrorCode::InvalidArgument, "k_lv must be non-negative");
}

double failure_pmf(int k, int n, const FailureModel& model) {
    if (k < 0 || n < 0) throw Error(ErrorCode::InvalidArgument, "failure pmf needs k, n >= 0");
    if (k > model.n_nominal) return 0.0;
    const double rate = static_cast<double>(n <= model.n_nominal ? n : model.n_nominal) * model.lambda_step;
    if (rate == 0.0) return k == 0 ? 1.0 : 0.0;
    // log-space keeps large k stable
    return std::exp(k * std::log(rate) - rate - std::lgamma(k + 1.0));
}

TransitionMatrix failure_matrix(int n_max, const FailureModel& model) {
    if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "failure matrix needs n_max >= 1");
    model.validate();
    Matrix p = Matrix::Zero(n_max + 1, n_max + 1);
    for (int from = 0; from <= n_max; ++from) {
        double kept = 0.0;
        for (int k = 0; k < from && k <= model.n_nominal; ++k) {
            const double nu = failure_pmf(k, from, model);
            p(from - k, from) = nu;
            kept += nu;
        }
        p(0, from) += std::max(0.0, 1.0 - kept);
    }
    return TransitionMatrix(std::move(p));
}

double lead_time_pmf(int k, const LeadTimeModel& model) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "lead time index must be >= 0");
    if (k < model.k_lv) return 0.0;
    return std::pow(model.alpha, k - model.k_lv) * (1.0 - model.alpha);
}

double lead_time_survival(int l, const LeadTimeModel& model) {
    if (l < 0) throw Error(ErrorCode::InvalidArgument, "lead time index must be >= 0");
    if (l <= model.k_lv) return 1.0;
    return std::pow(model.alpha, l - model.k_lv);
}

LeadTimeGrid lead_time_grid(const LeadTimeModel& model, int k_p) {
    if (k_p < 1) throw Error(ErrorCode::InvalidArgument, "review period must be at least one step");
    LeadTimeGrid g;
    g.k_p = k_p;
    g.m_lv = model.k_lv / k_p;
    g.k_left = model.k_lv - g.m_lv * k_p;
    g.k_right = (g.m_lv + 1) * k_p - model.k_lv;
    return g;
}

}  // namespace spares
