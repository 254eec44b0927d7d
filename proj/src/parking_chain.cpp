#include "spares/parking_chain.hpp"

#include "spares/errors.hpp"

#include <algorithm>
#include <cmath>

namespace spares {

void ParkingPolicy::validate() const {
    if (q < 1) throw Error(ErrorCode::InvalidArgument, "parking order size q_p must be >= 1");
    if (r < 0) throw Error(ErrorCode::InvalidArgument, "parking reorder point r_p must be >= 0");
}

TransitionMatrix demand_failure_matrix(const DemandPmf& chi, const ParkingPolicy& policy) {
    policy.validate();
    const int n = policy.max_state();
    Matrix m = Matrix::Zero(n + 1, n + 1);
    for (int x = 0; x <= n; ++x) {
        double moved = 0.0;
        for (int j = 0; j < x && j <= chi.max_demand(); ++j) {
            m(x - j, x) += chi[j];
            moved += chi[j];
        }
        // demand of x or more batches empties the orbit (partial transfer)
        m(0, x) += std::max(0.0, 1.0 - moved);
    }
    return TransitionMatrix(std::move(m));
}

TransitionMatrix replenishment_matrix_parking(const ParkingPolicy& policy) {
    policy.validate();
    const int n = policy.max_state();
    Matrix m = Matrix::Zero(n + 1, n + 1);
    for (int x = 0; x <= n; ++x) m(x <= policy.r ? x + policy.q : x, x) = 1.0;
    return TransitionMatrix(std::move(m));
}

ThresholdProjectors threshold_projectors(const ParkingPolicy& policy) {
    policy.validate();
    const int n = policy.max_state();
    Vector above = Vector::Zero(n + 1);
    for (int x = policy.r + 1; x <= n; ++x) above[x] = 1.0;
    ThresholdProjectors c;
    c.plus = above.asDiagonal();
    c.minus = Matrix::Identity(n + 1, n + 1) - c.plus;
    return c;
}

ParkingOperators make_parking_operators(const TransitionMatrix& demand, const ParkingPolicy& policy,
                                        const LeadTimeGrid& grid, double alpha) {
    if (demand.max_state() != policy.max_state()) {
        throw Error(ErrorCode::InvalidArgument, "demand matrix size does not match parking policy");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha outside (0, 1)");
    return {policy, demand, replenishment_matrix_parking(policy), threshold_projectors(policy), grid,
            alpha};
}

namespace {

// Factorization of I - C+ P. Singular exactly when some state above the
// reorder point never loses stock at a review.
Eigen::PartialPivLU<Matrix> no_reorder_resolvent(const Matrix& p, const ThresholdProjectors& c) {
    const Matrix stay = c.plus * p;
    for (Eigen::Index x = 0; x < stay.rows(); ++x) {
        if (stay(x, x) >= 1.0 - 1e-14) {
            throw Error(ErrorCode::NoDemand,
                        "parking stock above the reorder point never depletes; reorder never triggers");
        }
    }
    return Eigen::PartialPivLU<Matrix>(Matrix::Identity(p.rows(), p.cols()) - stay);
}

Eigen::PartialPivLU<Matrix> lead_time_resolvent(const Matrix& p, double alpha, int k_p) {
    return Eigen::PartialPivLU<Matrix>(Matrix::Identity(p.rows(), p.cols()) -
                                       std::pow(alpha, k_p) * p);
}

// sum_{s=1}^{n} alpha^s
double geometric_partial(double alpha, int n) {
    return n <= 0 ? 0.0 : alpha * (std::pow(alpha, n) - 1.0) / (alpha - 1.0);
}

Vector apply_power(const Matrix& p, int k, Vector v) {
    for (int i = 0; i < k; ++i) v = p * v;
    return v;
}

}  // namespace

Vector delivery_to_reorder(const Vector& pi_q, const TransitionMatrix& demand,
                           const ThresholdProjectors& c) {
    const Matrix& p = demand.matrix();
    const Vector waiting = no_reorder_resolvent(p, c).solve(pi_q);
    return c.minus * (p * waiting);
}

DeliveryResult reorder_to_delivery(const Vector& pi_r, const TransitionMatrix& demand,
                                   const TransitionMatrix& replenish, const LeadTimeGrid& g,
                                   double alpha) {
    const Matrix& p = demand.matrix();
    const Vector tail = lead_time_resolvent(p, alpha, g.k_p).solve(pi_r);  // (I - a^kp P)^-1 pi_r
    const Vector after_fixed = apply_power(p, g.m_lv, tail);                 // P^m (...)
    const Vector after_fixed_next = p * after_fixed;                         // P^{m+1} (...)

    DeliveryResult out;
    out.components.reserve(static_cast<std::size_t>(g.k_p));
    const Matrix& q = replenish.matrix();
    const Vector early = q * after_fixed_next;
    const Vector late = q * after_fixed;
    for (int i = 1; i <= g.k_p; ++i) {
        if (i <= g.k_left) {
            out.components.push_back((1.0 - alpha) * std::pow(alpha, i - 1 + g.k_right) * early);
        } else {
            out.components.push_back((1.0 - alpha) * std::pow(alpha, i - 1 - g.k_left) * late);
        }
    }
    const double a_right = std::pow(alpha, g.k_right);
    const double a_period = std::pow(alpha, g.k_p);
    const Vector mixed = (1.0 - a_right) * pi_r + (1.0 - a_period) * a_right * (p * tail);
    out.pi_q = q * apply_power(p, g.m_lv, mixed);
    return out;
}

ParkingCycle solve_parking_cycle(const ParkingOperators& ops, const std::optional<Vector>& init) {
    const Matrix& p = ops.demand.matrix();
    const auto& g = ops.grid;
    const Eigen::Index n = p.rows();
    const Matrix id = Matrix::Identity(n, n);

    const Matrix to_reorder = ops.projectors.minus * p * no_reorder_resolvent(p, ops.projectors).solve(id);
    const Matrix tail = lead_time_resolvent(p, ops.alpha, g.k_p).solve(id);
    const double a_right = std::pow(ops.alpha, g.k_right);
    const double a_period = std::pow(ops.alpha, g.k_p);
    const Matrix to_delivery = ops.replenish.matrix() * matrix_power(p, g.m_lv) *
                               ((1.0 - a_right) * id + (1.0 - a_period) * a_right * p * tail);
    const Matrix cycle = to_delivery * to_reorder;

    const StationaryResult s = stationary_distribution(cycle, init);
    ParkingCycle out;
    out.pi_q = StateDistribution::normalized(s.pi).vector();
    out.pi_r = StateDistribution::normalized(to_reorder * out.pi_q).vector();
    out.delivery = reorder_to_delivery(out.pi_r, ops.demand, ops.replenish, g, ops.alpha);
    out.iterations = s.iterations;
    out.residual = (out.pi_q - cycle * out.pi_q).cwiseAbs().maxCoeff();
    return out;
}

WeightedDistribution io_distribution(const DeliveryResult& delivery, const Vector& pi_q,
                                     const TransitionMatrix& demand, const ThresholdProjectors& c,
                                     int k_p) {
    const Matrix& p = demand.matrix();
    Vector mass = Vector::Zero(pi_q.size());
    for (int i = 1; i <= static_cast<int>(delivery.components.size()); ++i) {
        mass += static_cast<double>(k_p - i) * delivery.components[static_cast<std::size_t>(i - 1)];
    }
    mass += static_cast<double>(k_p) * (c.plus * (p * no_reorder_resolvent(p, c).solve(pi_q)));
    const double weight = mass.sum();
    return {StateDistribution::normalized(mass).vector(), weight};
}

WeightedDistribution lt_distribution(const Vector& pi_r, const TransitionMatrix& demand,
                                     const LeadTimeGrid& g, double alpha) {
    const Matrix& p = demand.matrix();
    // Segment 1: whole review periods inside the fixed delay.
    Vector mass = Vector::Zero(pi_r.size());
    Vector step = pi_r;
    for (int j = 0; j < g.m_lv; ++j) {
        mass += static_cast<double>(g.k_p) * step;
        step = p * step;
    }
    // step == P^m pi_r. Segment 2: rest of the fixed delay in period m;
    // segment 3: the exponential part within that same period.
    mass += (static_cast<double>(g.k_left + 1) + geometric_partial(alpha, g.k_right - 1)) * step;
    // Segment 4: all later periods.
    const Vector later = p * lead_time_resolvent(p, alpha, g.k_p).solve(step);
    mass += std::pow(alpha, g.k_right) * (std::pow(alpha, g.k_p) - 1.0) / (alpha - 1.0) * later;
    const double weight = mass.sum();
    return {StateDistribution::normalized(mass).vector(), weight};
}

std::pair<Vector, double> cycle_average_parking(const WeightedDistribution& io,
                                                const WeightedDistribution& lt, double tau_mc) {
    if (io.weight < 0.0 || lt.weight < 0.0 || !(io.weight + lt.weight > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "IO/LT period lengths must be non-negative with positive sum");
    }
    const double total = io.weight + lt.weight;
    Vector mix = (io.weight / total) * io.pi + (lt.weight / total) * lt.pi;
    return {StateDistribution::normalized(mix).vector(), total * tau_mc};
}

ContactConditional contact_conditional(const Vector& pi_q, const Vector& pi_r,
                                       const TransitionMatrix& demand, const ThresholdProjectors& c,
                                       const LeadTimeGrid& g, double alpha) {
    const Matrix& p = demand.matrix();
    ContactConditional out;

    const Vector io_mass = no_reorder_resolvent(p, c).solve(pi_q);

    // Contacts at reviews 1..m_lv always precede delivery.
    Vector lt_mass = Vector::Zero(pi_r.size());
    Vector step = pi_r;
    for (int j = 1; j <= g.m_lv; ++j) {
        lt_mass += step;
        step = p * step;
    }
    lt_mass += std::pow(alpha, g.k_right) * lead_time_resolvent(p, alpha, g.k_p).solve(step);

    out.io = {StateDistribution::normalized(io_mass).vector(), io_mass.sum()};
    out.lt = {StateDistribution::normalized(lt_mass).vector(), lt_mass.sum()};
    out.pi_rc = StateDistribution::normalized(io_mass + lt_mass).vector();

    const Eigen::Index n = out.pi_rc.size();
    out.tail = Vector::Zero(n);
    double acc = 0.0;
    for (Eigen::Index j = n - 1; j >= 0; --j) {
        acc += out.pi_rc[j];
        out.tail[j] = acc;
    }
    out.tail[0] = 1.0;
    return out;
}

AvailabilityVector availability_from_tail(const Vector& tail, int max_demand) {
    Vector kappa = Vector::Zero(max_demand + 1);
    const Eigen::Index shared = std::min<Eigen::Index>(tail.size(), kappa.size());
    kappa.head(shared) = tail.head(shared).cwiseMin(1.0);
    // enforce monotone tails against rounding at the 1e-16 level
    for (Eigen::Index j = 1; j < kappa.size(); ++j) kappa[j] = std::min(kappa[j], kappa[j - 1]);
    return AvailabilityVector(kappa);
}

ParkingCycleSolution solve_parking(const ParkingOperators& ops, double tau_mc,
                                   const std::optional<Vector>& init) {
    const ParkingCycle cycle = solve_parking_cycle(ops, init);
    const auto io = io_distribution(cycle.delivery, cycle.pi_q, ops.demand, ops.projectors, ops.grid.k_p);
    const auto lt = lt_distribution(cycle.pi_r, ops.demand, ops.grid, ops.alpha);
    auto [rc, tau_rc] = cycle_average_parking(io, lt, tau_mc);
    const auto contact = contact_conditional(cycle.pi_q, cycle.pi_r, ops.demand, ops.projectors,
                                             ops.grid, ops.alpha);

    ParkingCycleSolution s;
    s.pi_q = cycle.pi_q;
    s.pi_r = cycle.pi_r;
    s.pi_io = io.pi;
    s.k_io = io.weight;
    s.pi_lt = lt.pi;
    s.k_lt = lt.weight;
    s.pi_rc = std::move(rc);
    s.tau_rc = tau_rc;
    s.pi_io_E = contact.io.pi;
    s.k_io_E = contact.io.weight;
    s.pi_lt_E = contact.lt.pi;
    s.k_lt_E = contact.lt.weight;
    s.pi_rc_E = contact.pi_rc;
    s.availability_tail = contact.tail;
    s.iterations = cycle.iterations;
    s.residual = cycle.residual;
    return s;
}

}  // namespace spares
