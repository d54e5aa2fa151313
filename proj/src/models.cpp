#include "lmcf/models.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace lmcf {

namespace {

void check_a(double a) {
    if (a >= 0.0) throw std::invalid_argument("model: a must be negative");
}

Vec v5(double x1, double y1, double x2, double y2, double z) {
    Vec v(5);
    v << x1, y1, x2, y2, z;
    return v;
}

}  // namespace

ImmersionChart model_cylinder(double a, double C1) {
    check_a(a);
    double r = 1.0 / std::sqrt(-2.0 * a);
    ImmersionChart c;
    c.n = 2;
    c.u_min = 0.0;
    c.u_max = 2.0 * M_PI;
    c.periodic_u = true;
    c.v_min = -2.0;
    c.v_max = 2.0;
    c.map = [=](double t, double s) {
        return v5(r * std::cos(t), r * std::sin(t), s, 0.0, t / (4.0 * a) + C1);
    };
    c.du = [=](double t, double) {
        return v5(-r * std::sin(t), r * std::cos(t), 0.0, 0.0, 1.0 / (4.0 * a));
    };
    c.dv = [=](double, double) { return v5(0, 0, 1.0, 0, 0); };
    c.duu = [=](double t, double) {
        return v5(-r * std::cos(t), -r * std::sin(t), 0, 0, 0);
    };
    c.duv = [=](double, double) { return Vec(Vec::Zero(5)); };
    c.dvv = [=](double, double) { return Vec(Vec::Zero(5)); };
    return c;
}

ImmersionChart model_torus(double a, double C2) {
    check_a(a);
    double r = 1.0 / std::sqrt(-2.0 * a);
    ImmersionChart c;
    c.n = 2;
    c.u_min = c.v_min = 0.0;
    c.u_max = c.v_max = 2.0 * M_PI;
    c.periodic_u = c.periodic_v = true;
    c.map = [=](double t, double s) {
        return v5(r * std::cos(t), r * std::sin(t), r * std::cos(s),
                  r * std::sin(s), (t + s) / (4.0 * a) + C2);
    };
    c.du = [=](double t, double) {
        return v5(-r * std::sin(t), r * std::cos(t), 0, 0, 1.0 / (4.0 * a));
    };
    c.dv = [=](double, double s) {
        return v5(0, 0, -r * std::sin(s), r * std::cos(s), 1.0 / (4.0 * a));
    };
    c.duu = [=](double t, double) {
        return v5(-r * std::cos(t), -r * std::sin(t), 0, 0, 0);
    };
    c.dvv = [=](double, double s) {
        return v5(0, 0, -r * std::cos(s), -r * std::sin(s), 0);
    };
    c.duv = [=](double, double) { return Vec(Vec::Zero(5)); };
    return c;
}

ImmersionChart model_upsilon(double a, double gamma, double C3) {
    check_a(a);
    double sg = std::sin(gamma);
    if (std::abs(sg) < 1e-12 || std::abs(std::cos(gamma)) < 1e-12)
        throw std::invalid_argument("model_upsilon: degenerate gamma");
    double A = sg / std::sqrt(-2.0 * a);
    double B = std::tan(gamma) / std::sqrt(-2.0 * a);
    ImmersionChart c;
    c.n = 2;
    c.u_min = 0.0;
    c.u_max = 2.0 * M_PI;  // s
    c.v_min = 0.2;
    c.v_max = 2.0;  // t, kept away from the sinh t = 0 degeneracy
    // first slot -i sin(gamma) sinh t e^{i s / sin(gamma)},
    // second slot tan(gamma) sinh t e^{-i sin s}, as printed
    auto ph1 = [=](double s) { return s / sg; };
    auto ph2 = [=](double s) { return -std::sin(s); };
    c.map = [=](double s, double t) {
        double rho = std::sinh(t);
        return v5(A * rho * std::sin(ph1(s)), -A * rho * std::cos(ph1(s)),
                  B * rho * std::cos(ph2(s)), B * rho * std::sin(ph2(s)),
                  -sg * std::tan(gamma) / 4.0 * s + C3);
    };
    c.du = [=](double s, double t) {
        double rho = std::sinh(t);
        double d1 = 1.0 / sg, d2 = -std::cos(s);
        return v5(A * rho * std::cos(ph1(s)) * d1, A * rho * std::sin(ph1(s)) * d1,
                  -B * rho * std::sin(ph2(s)) * d2, B * rho * std::cos(ph2(s)) * d2,
                  -sg * std::tan(gamma) / 4.0);
    };
    c.dv = [=](double s, double t) {
        double dr = std::cosh(t);
        return v5(A * dr * std::sin(ph1(s)), -A * dr * std::cos(ph1(s)),
                  B * dr * std::cos(ph2(s)), B * dr * std::sin(ph2(s)), 0.0);
    };
    c.duu = [=](double s, double t) {
        double rho = std::sinh(t);
        double d1 = 1.0 / sg, d2 = -std::cos(s), dd2 = std::sin(s);
        return v5(-A * rho * std::sin(ph1(s)) * d1 * d1,
                  A * rho * std::cos(ph1(s)) * d1 * d1,
                  B * rho * (-std::cos(ph2(s)) * d2 * d2 - std::sin(ph2(s)) * dd2),
                  B * rho * (-std::sin(ph2(s)) * d2 * d2 + std::cos(ph2(s)) * dd2),
                  0.0);
    };
    c.duv = [=](double s, double t) {
        double dr = std::cosh(t);
        double d1 = 1.0 / sg, d2 = -std::cos(s);
        return v5(A * dr * std::cos(ph1(s)) * d1, A * dr * std::sin(ph1(s)) * d1,
                  -B * dr * std::sin(ph2(s)) * d2, B * dr * std::cos(ph2(s)) * d2,
                  0.0);
    };
    c.dvv = [=](double s, double t) {
        double rho = std::sinh(t);
        return v5(A * rho * std::sin(ph1(s)), -A * rho * std::cos(ph1(s)),
                  B * rho * std::cos(ph2(s)), B * rho * std::sin(ph2(s)), 0.0);
    };
    return c;
}

ImmersionChart model_psi(double a, double nu, double C4) {
    check_a(a);
    if (std::abs(std::sinh(nu)) < 1e-12)
        throw std::invalid_argument("model_psi: nu must be nonzero");
    double sv = std::sinh(nu), cv = std::cosh(nu);
    double A = cv / std::sqrt(-2.0 * a);
    double B = (cv / sv) / std::sqrt(-2.0 * a);
    double m = 1.0 / sv, k = sv;
    double zslope = cv * cv / (4.0 * a * sv);
    ImmersionChart c;
    c.n = 2;
    c.u_min = 0.2;
    c.u_max = M_PI - 0.2;  // s
    c.v_min = -2.0;
    c.v_max = 2.0;  // t
    c.map = [=](double s, double t) {
        return v5(A * std::cos(s) * std::cos(m * t), A * std::cos(s) * std::sin(m * t),
                  B * std::sin(s) * std::cos(k * t), B * std::sin(s) * std::sin(k * t),
                  zslope * t + C4);
    };
    c.du = [=](double s, double t) {
        return v5(-A * std::sin(s) * std::cos(m * t), -A * std::sin(s) * std::sin(m * t),
                  B * std::cos(s) * std::cos(k * t), B * std::cos(s) * std::sin(k * t),
                  0.0);
    };
    c.dv = [=](double s, double t) {
        return v5(-A * m * std::cos(s) * std::sin(m * t),
                  A * m * std::cos(s) * std::cos(m * t),
                  -B * k * std::sin(s) * std::sin(k * t),
                  B * k * std::sin(s) * std::cos(k * t), zslope);
    };
    c.duu = [=](double s, double t) {
        return v5(-A * std::cos(s) * std::cos(m * t), -A * std::cos(s) * std::sin(m * t),
                  -B * std::sin(s) * std::cos(k * t), -B * std::sin(s) * std::sin(k * t),
                  0.0);
    };
    c.duv = [=](double s, double t) {
        return v5(A * m * std::sin(s) * std::sin(m * t),
                  -A * m * std::sin(s) * std::cos(m * t),
                  -B * k * std::cos(s) * std::sin(k * t),
                  B * k * std::cos(s) * std::cos(k * t), 0.0);
    };
    c.dvv = [=](double s, double t) {
        return v5(-A * m * m * std::cos(s) * std::cos(m * t),
                  -A * m * m * std::cos(s) * std::sin(m * t),
                  -B * k * k * std::sin(s) * std::cos(k * t),
                  -B * k * k * std::sin(s) * std::sin(k * t), 0.0);
    };
    return c;
}

CliffordPair clifford_pair() {
    CliffordPair pair;
    pair.legendrian = model_torus(-0.125);
    EuclideanChart& e = pair.spherical;
    e.ambient_dim = 6;
    e.metric_scale = 1.0;
    auto v6 = [](double a0, double a1, double a2, double a3, double a4,
                 double a5) {
        Eigen::VectorXd v(6);
        v << a0, a1, a2, a3, a4, a5;
        return v;
    };
    e.map = [=](double t, double s) {
        return v6(std::cos(t), std::sin(t), std::cos(s), std::sin(s),
                  std::cos(t + s), -std::sin(t + s));
    };
    e.du = [=](double t, double s) {
        return v6(-std::sin(t), std::cos(t), 0, 0, -std::sin(t + s),
                  -std::cos(t + s));
    };
    e.dv = [=](double t, double s) {
        return v6(0, 0, -std::sin(s), std::cos(s), -std::sin(t + s),
                  -std::cos(t + s));
    };
    e.duu = [=](double t, double s) {
        return v6(-std::cos(t), -std::sin(t), 0, 0, -std::cos(t + s),
                  std::sin(t + s));
    };
    e.dvv = [=](double t, double s) {
        return v6(0, 0, -std::cos(s), -std::sin(s), -std::cos(t + s),
                  std::sin(t + s));
    };
    e.duv = [=](double t, double s) {
        return v6(0, 0, 0, 0, -std::cos(t + s), std::sin(t + s));
    };
    return pair;
}

ALCurve::ALCurve(const ALCurveConfig& cfg) : cfg_(cfg) {
    if (cfg.x0 <= 0.0)
        throw std::invalid_argument("ALCurve: x0 must be positive");
    OdeRhs rhs = [B = cfg.B](double, const Vec& y) {
        Vec d(3);
        d << y[0] * y[1], B - y[0] * y[0], y[0];
        return d;
    };
    Vec y0(3);
    y0 << cfg.x0, cfg.y0, cfg.theta0;
    // pad so finite differences and endpoint jets stay inside the table
    double pad = 0.5;
    int nb = (int)std::ceil(pad / cfg.table_step);
    Vec yb = y0;
    for (int i = 0; i < nb; ++i)
        yb = rk4_step(rhs, cfg.t_min - i * cfg.table_step, yb, -cfg.table_step);
    table_ = DenseTable(rhs, cfg.t_min - nb * cfg.table_step, cfg.t_max + pad, yb,
                        cfg.table_step);
}

Vec ALCurve::state(double t) const { return table_.eval(t); }

double ALCurve::conserved(double t) const {
    Vec s = state(t);
    return cfg_.B * std::log(s[0]) - 0.5 * (s[0] * s[0] + s[1] * s[1]);
}

ImmersionChart ALCurve::chart() const {
    auto table = std::make_shared<DenseTable>(table_);
    double B = cfg_.B;
    ImmersionChart c;
    c.n = 1;
    c.u_min = cfg_.t_min;
    c.u_max = cfg_.t_max;
    auto v3 = [](double x, double y, double z) {
        Vec v(3);
        v << x, y, z;
        return v;
    };
    c.map = [=](double t, double) {
        Vec s = table->eval(t);
        double x = s[0], y = s[1], th = s[2];
        return v3(y * std::cos(th) + x * std::sin(th),
                  y * std::sin(th) - x * std::cos(th), -0.5 * B * th);
    };
    c.du = [=](double t, double) {
        Vec s = table->eval(t);
        double x = s[0], th = s[2];
        return v3(B * std::cos(th), B * std::sin(th), -0.5 * B * x);
    };
    c.duu = [=](double t, double) {
        Vec s = table->eval(t);
        double x = s[0], y = s[1], th = s[2];
        return v3(-B * x * std::sin(th), B * x * std::cos(th), -0.5 * B * x * y);
    };
    return c;
}

}  // namespace lmcf
