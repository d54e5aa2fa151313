#include "lmcf/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmcf {

using Eigen::VectorXd;

VectorXd rk4_step(const OdeRhs& f, double t, const VectorXd& y, double h) {
    VectorXd k1 = f(t, y);
    VectorXd k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
    VectorXd k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
    VectorXd k4 = f(t + h, y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

OdeSolution integrate_adaptive(const OdeRhs& f, double t0, double t1,
                               const VectorXd& y0, double tol, double h0,
                               double h_floor, const OdeValid& valid) {
    OdeSolution sol;
    double t = t0;
    VectorXd y = y0;
    double h = std::min(h0, t1 - t0);
    sol.t.push_back(t);
    sol.y.push_back(y);
    while (t < t1 - 1e-14 * (1.0 + std::abs(t1))) {
        h = std::min(h, t1 - t);
        VectorXd y_full = rk4_step(f, t, y, h);
        VectorXd y_half = rk4_step(f, t, y, 0.5 * h);
        VectorXd y_two = rk4_step(f, t + 0.5 * h, y_half, 0.5 * h);
        double err = (y_two - y_full).cwiseAbs().maxCoeff() / 15.0;
        bool ok = err <= tol;
        VectorXd y_next = y_two + (y_two - y_full) / 15.0;
        bool in_domain = !valid || (valid(t + h, y_next) &&
                                    valid(t + 0.5 * h, y_half));
        if (ok && in_domain) {
            t += h;
            y = y_next;
            sol.t.push_back(t);
            sol.y.push_back(y);
        } else if (h <= h_floor * (1.0 + 1e-12)) {
            sol.domain_exit = true;
            break;
        }
        double fac = ok ? 0.9 * std::pow(tol / std::max(err, 1e-300), 0.2) : 0.5;
        if (!in_domain) fac = std::min(fac, 0.5);
        h = std::max(h * std::clamp(fac, 0.2, 5.0), h_floor);
    }
    sol.t_end = t;
    return sol;
}

OdeSolution integrate_fixed(const OdeRhs& f, double t0, double t1,
                            const VectorXd& y0, int n_steps,
                            const OdeValid& valid) {
    OdeSolution sol;
    double h = (t1 - t0) / n_steps;
    double t = t0;
    VectorXd y = y0;
    sol.t.push_back(t);
    sol.y.push_back(y);
    for (int k = 0; k < n_steps; ++k) {
        VectorXd y_next = rk4_step(f, t, y, h);
        t = t0 + (k + 1) * h;
        if (valid && !valid(t, y_next)) {
            sol.domain_exit = true;
            break;
        }
        y = y_next;
        sol.t.push_back(t);
        sol.y.push_back(y);
    }
    sol.t_end = sol.t.back();
    return sol;
}

DenseTable::DenseTable(const OdeRhs& f, double t0, double t1, const VectorXd& y0,
                       double h)
    : f_(f), t0_(t0), h_(h) {
    if (t1 <= t0) throw std::invalid_argument("DenseTable: empty interval");
    auto m = (size_t)std::ceil((t1 - t0) / h - 1e-12);
    states_.reserve(m + 1);
    states_.push_back(y0);
    VectorXd y = y0;
    for (size_t k = 0; k < m; ++k) {
        y = rk4_step(f_, t0_ + (double)k * h_, y, h_);
        states_.push_back(y);
    }
}

VectorXd DenseTable::eval(double t) const {
    double span = 1e-9 * (1.0 + std::abs(t));
    if (t < t0_ - span || t > t_max() + span)
        throw std::domain_error("DenseTable::eval: t outside table");
    double u = std::clamp((t - t0_) / h_, 0.0, (double)(states_.size() - 1));
    auto k = (size_t)std::min((double)(states_.size() - 1), std::floor(u));
    double dt = t - (t0_ + (double)k * h_);
    if (std::abs(dt) < 1e-15) return states_[k];
    return rk4_step(f_, t0_ + (double)k * h_, states_[k], dt);
}

}  // namespace lmcf
