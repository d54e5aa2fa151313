#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace lmcf {

using OdeRhs = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;
using OdeValid = std::function<bool(double, const Eigen::VectorXd&)>;

Eigen::VectorXd rk4_step(const OdeRhs& f, double t, const Eigen::VectorXd& y,
                         double h);

struct OdeSolution {
    std::vector<double> t;
    std::vector<Eigen::VectorXd> y;
    bool domain_exit = false;  // stopped early because validity failed
    double t_end = 0.0;
};

// Classical RK4 with step-doubling error control: each step is compared
// against two half steps, the difference/15 estimates the local error, and
// the locally extrapolated value is kept.  `tol` is the local error target,
// `h_floor` the smallest step attempted before giving up (domain exit).
OdeSolution integrate_adaptive(const OdeRhs& f, double t0, double t1,
                               const Eigen::VectorXd& y0, double tol = 1e-10,
                               double h0 = 1e-2, double h_floor = 1e-6,
                               const OdeValid& valid = nullptr);

// Plain fixed-step RK4 (no extrapolation); n_steps intervals on [t0, t1].
OdeSolution integrate_fixed(const OdeRhs& f, double t0, double t1,
                            const Eigen::VectorXd& y0, int n_steps,
                            const OdeValid& valid = nullptr);

// Uniform fine-step state table supporting evaluation at arbitrary interior
// times: the nearest stored node is advanced by a single short RK4 step.
class DenseTable {
public:
    DenseTable() = default;
    DenseTable(const OdeRhs& f, double t0, double t1, const Eigen::VectorXd& y0,
               double h);
    Eigen::VectorXd eval(double t) const;
    double t_min() const { return t0_; }
    double t_max() const { return t0_ + h_ * (double)(states_.size() - 1); }

private:
    OdeRhs f_;
    double t0_ = 0.0, h_ = 0.0;
    std::vector<Eigen::VectorXd> states_;
};

}  // namespace lmcf
