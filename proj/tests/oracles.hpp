#pragma once

// Reference computations that do not reuse the library's closed forms:
// step-by-step propagation of probability mass through one parking cycle,
// per-step Markov chains on augmented state spaces solved by dense
// eigendecomposition, and the reduced direct-strategy expressions.

#include "spares/markov.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <tuple>
#include <vector>

namespace spares::oracle {

inline Vector random_pmf(std::mt19937_64& rng, int size, int support = -1) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    Vector v = Vector::Zero(size);
    const int top = support < 0 ? size : std::min(size, support);
    for (int i = 0; i < top; ++i) v[i] = u(rng);
    return v / v.sum();
}

/// Eigenvector for the eigenvalue closest to 1, normalized to unit mass.
inline Vector dense_stationary(const Matrix& p) {
    Eigen::EigenSolver<Matrix> es(p);
    Eigen::Index best = 0;
    double gap = 1e300;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double d = std::abs(es.eigenvalues()[i] - std::complex<double>(1.0, 0.0));
        if (d < gap) {
            gap = d;
            best = i;
        }
    }
    Vector v = es.eigenvectors().col(best).real();
    return v / v.sum();
}

/// Demand matrix built straight from the definition: x -> x - min(D, x).
inline Matrix depletion_matrix(const Vector& chi, int max_state) {
    Matrix m = Matrix::Zero(max_state + 1, max_state + 1);
    for (int x = 0; x <= max_state; ++x)
        for (int d = 0; d < chi.size(); ++d) m(std::max(0, x - d), x) += chi[d];
    return m;
}

struct ParkingSeries {
    Vector pi_q;        ///< mass entering the IO phase (post-delivery)
    Vector pi_r_next;   ///< mass at the next reorder
    Vector lt_steps;    ///< state occupancy summed over LT steps
    Vector io_steps;    ///< state occupancy summed over IO steps
    Vector lt_contact;  ///< pre-demand state summed over LT contacts
    Vector io_contact;  ///< pre-demand state summed over IO contacts
};

/// Walks one parking cycle step by step for `periods` review periods,
/// starting from reorder mass pi_r. Per step: possible delivery, then a
/// contact on multiples of k_p (demand, then reorder check), then record.
/// Delivery happens on step L = k_lv + 1 + G with G geometric(alpha).
inline ParkingSeries parking_series(const Vector& pi_r, const Vector& chi, int q, int r, int k_p,
                                    int k_lv, double alpha, int periods = 500) {
    const int n = q + r;
    const Matrix dep = depletion_matrix(chi, n);
    ParkingSeries s;
    s.pi_q = s.pi_r_next = s.lt_steps = s.io_steps = s.lt_contact = s.io_contact = Vector::Zero(n + 1);
    Vector pending = pi_r;
    Vector io = Vector::Zero(n + 1);
    s.lt_steps += pending;  // the reorder step itself
    const long steps = static_cast<long>(periods) * k_p;
    for (long t = 1; t <= steps; ++t) {
        if (t >= k_lv + 1) {
            const Vector arrived = (1.0 - alpha) * pending;
            pending -= arrived;
            Vector lifted = Vector::Zero(n + 1);
            for (int x = 0; x <= n; ++x) lifted[x <= r ? x + q : x] += arrived[x];
            s.pi_q += lifted;
            io += lifted;
        }
        if (t % k_p == 0) {
            s.lt_contact += pending;
            s.io_contact += io;
            pending = dep * pending;
            io = dep * io;
            for (int x = 0; x <= r; ++x) {
                s.pi_r_next[x] += io[x];
                io[x] = 0.0;
            }
        }
        s.lt_steps += pending;
        s.io_steps += io;
    }
    return s;
}

struct AugmentedParking {
    Vector pi_time;     ///< time-average marginal of X_p
    Vector pi_contact;  ///< X_p seen by a contact, before its demand
};

/// Per-step chain on (x, phase, order age). Phase counts steps since the
/// last contact; order age is "none" or min(steps since order, k_lv).
inline AugmentedParking augmented_parking(const Vector& chi, int q, int r, int k_p, int k_lv, double alpha) {
    const int nx = q + r + 1;
    const int no = k_lv + 2;  // index k_lv + 1 means "no order"
    const int none = k_lv + 1;
    auto idx = [&](int x, int ph, int o) { return (x * k_p + ph) * no + o; };
    const int dim = nx * k_p * no;
    Matrix p = Matrix::Zero(dim, dim);
    for (int x = 0; x <= q + r; ++x) {
        for (int ph = 0; ph < k_p; ++ph) {
            for (int o = 0; o < no; ++o) {
                // (probability, x, order) after the delivery stage
                std::vector<std::tuple<double, int, int>> branches;
                if (o == none) {
                    branches.emplace_back(1.0, x, none);
                } else {
                    const int age = o + 1;
                    if (age >= k_lv + 1) {
                        // states above r never hold an order; clamp keeps them in range
                        branches.emplace_back(1.0 - alpha, std::min(x + q, q + r), none);
                        branches.emplace_back(alpha, x, std::min(age, k_lv));
                    } else {
                        branches.emplace_back(1.0, x, std::min(age, k_lv));
                    }
                }
                const int ph2 = (ph + 1) % k_p;
                for (const auto& [w, x1, o1] : branches) {
                    if (ph2 != 0) {
                        p(idx(x1, ph2, o1), idx(x, ph, o)) += w;
                        continue;
                    }
                    for (int d = 0; d < chi.size(); ++d) {
                        const int x2 = std::max(0, x1 - d);
                        const int o2 = (x2 <= r && o1 == none) ? 0 : o1;
                        p(idx(x2, ph2, o2), idx(x, ph, o)) += w * chi[d];
                    }
                }
            }
        }
    }
    const Vector pi = dense_stationary(p);
    AugmentedParking out{Vector::Zero(nx), Vector::Zero(nx)};
    for (int x = 0; x < nx; ++x)
        for (int ph = 0; ph < k_p; ++ph)
            for (int o = 0; o < no; ++o) out.pi_time[x] += pi[idx(x, ph, o)];
    // A contact happens on the step after phase k_p - 1; apply the delivery stage.
    for (int x = 0; x < nx; ++x) {
        for (int o = 0; o < no; ++o) {
            const double w = pi[idx(x, k_p - 1, o)];
            if (o != none && o + 1 >= k_lv + 1) {
                out.pi_contact[std::min(x + q, q + r)] += (1.0 - alpha) * w;
                out.pi_contact[x] += alpha * w;
            } else {
                out.pi_contact[x] += w;
            }
        }
    }
    out.pi_contact /= out.pi_contact.sum();
    return out;
}

struct AugmentedInplane {
    Vector pi_time;  ///< time-average marginal of X_c
    Vector pi_q;     ///< right after a contact
};

/// Per-step chain on (x, phase): failures every step, replenishment matrix
/// applied on the step that completes a review period.
inline AugmentedInplane augmented_inplane(const Matrix& failure, const Matrix& replenish, int k_c) {
    const int nx = static_cast<int>(failure.rows());
    const int dim = nx * k_c;
    Matrix p = Matrix::Zero(dim, dim);
    for (int ph = 0; ph < k_c; ++ph) {
        const int ph2 = (ph + 1) % k_c;
        const Matrix step = ph2 == 0 ? Matrix(replenish * failure) : failure;
        for (int to = 0; to < nx; ++to)
            for (int from = 0; from < nx; ++from) p(to * k_c + ph2, from * k_c + ph) = step(to, from);
    }
    const Vector pi = dense_stationary(p);
    AugmentedInplane out{Vector::Zero(nx), Vector::Zero(nx)};
    for (int x = 0; x < nx; ++x) {
        for (int ph = 0; ph < k_c; ++ph) out.pi_time[x] += pi[x * k_c + ph];
        out.pi_q[x] = pi[x * k_c];
    }
    out.pi_q /= out.pi_q.sum();
    return out;
}

/// Direct-strategy (k_p = 1) reduced expressions, with m = k_lv.
struct DirectReduced {
    Vector pi_r;        ///< C- P (I - C+ P)^-1 pi_q
    Vector pi_q;        ///< (1 - a) Q P^m (I - a P)^-1 pi_r
    Vector io_mass;     ///< C+ P (I - C+ P)^-1 pi_q
    Vector lt_mass;     ///< (sum_{i<=m} P^i + a P^{m+1} (I - a P)^-1) pi_r
};

inline DirectReduced direct_reduced(const Matrix& p, const Matrix& q, const Matrix& c_plus, const Matrix& c_minus,
                                    int m, double a, const Vector& pi_q, const Vector& pi_r) {
    const Eigen::Index n = p.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix no_reorder = (id - c_plus * p).inverse();
    const Matrix lead = (id - a * p).inverse();
    Matrix pm = id;
    Matrix sum = id;
    for (int i = 1; i <= m; ++i) {
        pm = pm * p;
        sum += pm;
    }
    DirectReduced out;
    out.pi_r = c_minus * p * no_reorder * pi_q;
    out.pi_q = (1.0 - a) * q * pm * lead * pi_r;
    out.io_mass = c_plus * p * no_reorder * pi_q;
    out.lt_mass = (sum + a * pm * p * lead) * pi_r;
    return out;
}

}  // namespace spares::oracle

namespace spares::oracle {

/// Random small parking instance for closed-form checks.
struct ParkingCase {
    int q = 1, r = 0, k_p = 1, k_lv = 0;
    double alpha = 0.5;
    Vector chi;
    Vector pi_r;
};

inline ParkingCase random_parking_case(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> qd(1, 5), rd(0, 5), kpd(1, 20), klvd(0, 45);
    std::uniform_real_distribution<double> ad(0.2, 0.93);
    ParkingCase c;
    c.q = qd(rng);
    c.r = rd(rng);
    c.k_p = kpd(rng);
    c.k_lv = klvd(rng);
    c.alpha = ad(rng);
    c.chi = random_pmf(rng, 1 + std::uniform_int_distribution<int>(1, 4)(rng));
    c.pi_r = random_pmf(rng, c.q + c.r + 1, c.r + 1);
    return c;
}

}  // namespace spares::oracle
