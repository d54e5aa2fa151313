#include "lmcf/ambient.hpp"

#include <cmath>
#include <stdexcept>

namespace lmcf {

AmbientSpace::AmbientSpace(int n) : n_(n) {
    if (n != 1 && n != 2)
        throw std::invalid_argument("AmbientSpace: n must be 1 or 2");
}

Vec AmbientSpace::eta_components(const Vec& p) const {
    Vec c = Vec::Zero(dim());
    for (int i = 0; i < n_; ++i) {
        c[ix(i)] = -0.25 * p[iy(i)];
        c[iy(i)] = 0.25 * p[ix(i)];
    }
    c[iz()] = 0.5;
    return c;
}

double AmbientSpace::eta(const Vec& p, const Vec& v) const {
    double s = 0.5 * v[iz()];
    for (int i = 0; i < n_; ++i)
        s -= 0.25 * (p[iy(i)] * v[ix(i)] - p[ix(i)] * v[iy(i)]);
    return s;
}

double AmbientSpace::metric(const Vec& p, const Vec& v, const Vec& w) const {
    double s = eta(p, v) * eta(p, w);
    for (int i = 0; i < n_; ++i)
        s += 0.25 * (v[ix(i)] * w[ix(i)] + v[iy(i)] * w[iy(i)]);
    return s;
}

double AmbientSpace::norm(const Vec& p, const Vec& v) const {
    return std::sqrt(std::max(0.0, metric(p, v, v)));
}

Vec AmbientSpace::phi(const Vec& p, const Vec& v) const {
    Vec out = Vec::Zero(dim());
    double z = 0.0;
    for (int i = 0; i < n_; ++i) {
        out[ix(i)] = v[iy(i)];
        out[iy(i)] = -v[ix(i)];
        z += 0.5 * (p[ix(i)] * v[ix(i)] + p[iy(i)] * v[iy(i)]);
    }
    out[iz()] = z;
    return out;
}

Vec AmbientSpace::xi() const {
    Vec v = Vec::Zero(dim());
    v[iz()] = 2.0;
    return v;
}

double AmbientSpace::d_eta(const Vec& v, const Vec& w) const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        s += 0.5 * (v[ix(i)] * w[iy(i)] - v[iy(i)] * w[ix(i)]);
    return s;
}

Mat AmbientSpace::metric_matrix(const Vec& p) const {
    Vec e = eta_components(p);
    Mat g = e * e.transpose();
    for (int i = 0; i < n_; ++i) {
        g(ix(i), ix(i)) += 0.25;
        g(iy(i), iy(i)) += 0.25;
    }
    return g;
}

Mat AmbientSpace::metric_matrix_derivative(const Vec& p, int c) const {
    // d_c eta_a is constant: only the pair couplings survive.
    Vec de = Vec::Zero(dim());
    for (int i = 0; i < n_; ++i) {
        if (c == ix(i)) de[iy(i)] = 0.25;
        if (c == iy(i)) de[ix(i)] = -0.25;
    }
    Vec e = eta_components(p);
    return de * e.transpose() + e * de.transpose();
}

Mat AmbientSpace::frame(const Vec& p) const {
    Mat F = Mat::Zero(dim(), dim());
    for (int k = 0; k < dim(); ++k) F.col(k) = frame_vector(k, p);
    return F;
}

Vec AmbientSpace::frame_vector(int k, const Vec& p) const {
    Vec v = Vec::Zero(dim());
    if (k < n_) {
        v[ix(k)] = 2.0;
        v[iz()] = p[iy(k)];
    } else if (k < 2 * n_) {
        int i = k - n_;
        v[iy(i)] = -2.0;
        v[iz()] = p[ix(i)];
    } else {
        v[iz()] = 2.0;
    }
    return v;
}

Vec AmbientSpace::christoffel(const Vec& p, const Vec& a, const Vec& b) const {
    const int d = dim();
    Mat ginv = metric_matrix(p).inverse();
    // lower-index contraction: G_l = Gamma_{ab,l}
    Vec G = Vec::Zero(d);
    std::vector<Mat> dg(d);
    for (int c = 0; c < d; ++c) dg[c] = metric_matrix_derivative(p, c);
    for (int l = 0; l < d; ++l) {
        double s = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                s += a[i] * b[j] * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        G[l] = 0.5 * s;
    }
    return ginv * G;
}

Vec AmbientSpace::covariant_derivative(const VectorField& X, const VectorField& Y,
                                       const Vec& p, double h) const {
    Vec Xp = X(p);
    Vec out = christoffel(p, Xp, Y(p));
    for (int j = 0; j < dim(); ++j) {
        if (Xp[j] == 0.0) continue;
        Vec e = Vec::Zero(dim());
        e[j] = 1.0;
        Vec dY = (-Y(p + 2 * h * e) + 8.0 * Y(p + h * e) - 8.0 * Y(p - h * e) +
                  Y(p - 2 * h * e)) /
                 (12.0 * h);
        out += Xp[j] * dY;
    }
    return out;
}

Vec AmbientSpace::bracket(const VectorField& X, const VectorField& Y,
                          const Vec& p, double h) const {
    Vec Xp = X(p), Yp = Y(p);
    Vec out = Vec::Zero(dim());
    for (int j = 0; j < dim(); ++j) {
        Vec e = Vec::Zero(dim());
        e[j] = 1.0;
        Vec dY = (-Y(p + 2 * h * e) + 8.0 * Y(p + h * e) - 8.0 * Y(p - h * e) +
                  Y(p - 2 * h * e)) /
                 (12.0 * h);
        Vec dX = (-X(p + 2 * h * e) + 8.0 * X(p + h * e) - 8.0 * X(p - h * e) +
                  X(p - 2 * h * e)) /
                 (12.0 * h);
        out += Xp[j] * dY - Yp[j] * dX;
    }
    return out;
}

Vec AmbientSpace::frame_connection(int i, int j) const {
    const int d = dim();
    const int xidx = 2 * n_;
    Vec out = Vec::Zero(d);
    if (i == xidx && j == xidx) return out;
    if (i != xidx && j != xidx) {
        if (j == i + n_) out[xidx] = 1.0;   // nabla_{E_i} E_{n+i} = xi
        if (j == i - n_) out[xidx] = -1.0;  // nabla_{E_{n+i}} E_i = -xi
        return out;
    }
    // one argument is xi; [E_k, xi] = 0 so nabla_xi E_k = nabla_{E_k} xi = -Phi E_k
    int k = (i == xidx) ? j : i;
    if (k < n_)
        out[k + n_] = -1.0;
    else
        out[k - n_] = 1.0;
    return out;
}

Vec AmbientSpace::frame_bracket(int i, int j) const {
    Vec out = Vec::Zero(dim());
    const int xidx = 2 * n_;
    if (i == xidx || j == xidx) return out;
    if (j == i + n_) out[xidx] = 2.0;
    if (j == i - n_) out[xidx] = -2.0;
    return out;
}

Vec AmbientSpace::frame_connection_coordinate(int i, int j, const Vec& p) const {
    // nabla_{E_i} E_j = E_i^a d_a(E_j) + Gamma(E_i, E_j); the frame components
    // are linear in p so the Jacobian term is exact.
    Vec Ei = frame_vector(i, p), Ej = frame_vector(j, p);
    Vec out = christoffel(p, Ei, Ej);
    // d_a E_j: only the z-component of E_j varies (equals y_j resp. x_{j-n})
    if (j < n_) out[iz()] += Ei[iy(j)];
    else if (j < 2 * n_) out[iz()] += Ei[ix(j - n_)];
    // convert to frame coefficients: coordinate vector v -> coeffs a with v = F a
    Mat F = frame(p);
    return F.fullPivLu().solve(out);
}

Vec AmbientSpace::frame_curvature(const Vec& a, const Vec& b, const Vec& c) const {
    const int d = dim();
    auto cov = [&](const Vec& u, const Vec& w) {
        Vec out = Vec::Zero(d);
        for (int i = 0; i < d; ++i) {
            if (u[i] == 0.0) continue;
            for (int j = 0; j < d; ++j) {
                if (w[j] == 0.0) continue;
                out += u[i] * w[j] * frame_connection(i, j);
            }
        }
        return out;
    };
    Vec br = Vec::Zero(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (a[i] != 0.0 && b[j] != 0.0) br += a[i] * b[j] * frame_bracket(i, j);
    return cov(a, cov(b, c)) - cov(b, cov(a, c)) - cov(br, c);
}

double AmbientSpace::phi_sectional_curvature(const Vec& p, const Vec& X) const {
    const int d = dim();
    Mat F = frame(p);
    Vec a = Vec::Zero(d);
    for (int k = 0; k < d; ++k) a[k] = metric(p, X, F.col(k));
    double nx = a.head(2 * n_).norm();
    if (nx < 1e-12 * (1.0 + a.norm()) || nx == 0.0)
        throw std::domain_error("phi_sectional_curvature: X has no transverse part");
    if (std::abs(a[2 * n_]) > 1e-8 * nx)
        throw std::domain_error("phi_sectional_curvature: X not orthogonal to xi");
    a[2 * n_] = 0.0;
    // Phi in the frame: E_i -> E_{n+i}, E_{n+i} -> -E_i
    Vec b = Vec::Zero(d);
    for (int i = 0; i < n_; ++i) {
        b[i + n_] = a[i];
        b[i] = -a[i + n_];
    }
    Vec R = frame_curvature(a, b, b);
    double num = R.dot(a);  // frame is g-orthonormal
    double den = a.squaredNorm() * b.squaredNorm() - std::pow(a.dot(b), 2);
    return num / den;
}

std::array<double, 4> AmbientSpace::sasakian_residuals(const Vec& p) const {
    const int d = dim();
    std::array<double, 4> r{0.0, 0.0, 0.0, 0.0};
    Vec xiv = xi();
    auto basis = [&](int a) {
        Vec e = Vec::Zero(d);
        e[a] = 1.0;
        return e;
    };
    // transverse dot of coordinate vectors (used by the Nijenhuis closed form)
    auto tdot = [&](const Vec& a, const Vec& b) {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            s += a[ix(i)] * b[ix(i)] + a[iy(i)] * b[iy(i)];
        return s;
    };
    for (int a = 0; a < d; ++a) {
        Vec ea = basis(a);
        Vec r1 = phi(p, phi(p, ea)) + ea - eta(p, ea) * xiv;
        r[0] = std::max(r[0], r1.cwiseAbs().maxCoeff());
        for (int b2 = 0; b2 < d; ++b2) {
            Vec eb = basis(b2);
            r[1] = std::max(r[1],
                            std::abs(0.5 * d_eta(ea, eb) - metric(p, ea, phi(p, eb))));
            r[2] = std::max(r[2], std::abs(metric(p, ea, eb) -
                                           metric(p, phi(p, ea), phi(p, eb)) -
                                           eta(p, ea) * eta(p, eb)));
            // N_Phi(ea, eb): coordinate fields commute; [Phi ea, eb] and
            // [ea, Phi eb] are vertical, killed by Phi.  Only [Phi ea, Phi eb]
            // survives, and it is vertical with the z-component below.
            double nz = 0.5 * (tdot(eb, phi(p, ea)) - tdot(ea, phi(p, eb)));
            Vec npab = Vec::Zero(d);
            npab[iz()] = nz;
            Vec r4 = npab + d_eta(ea, eb) * xiv;
            r[3] = std::max(r[3], r4.cwiseAbs().maxCoeff());
        }
    }
    return r;
}

double AmbientSpace::ricci_residual(const Vec& /*p*/) const {
    const int d = dim();
    double worst = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            double ric = 0.0;
            for (int c = 0; c < d; ++c) {
                Vec ec = Vec::Zero(d), ea = Vec::Zero(d), eb = Vec::Zero(d);
                ec[c] = 1.0;
                ea[a] = 1.0;
                eb[b] = 1.0;
                ric += frame_curvature(ec, ea, eb).dot(ec);
            }
            double target = -2.0 * (a == b ? 1.0 : 0.0);
            if (a == 2 * n_ && b == 2 * n_) target += 2.0 * n_ + 2.0;
            worst = std::max(worst, std::abs(ric - target));
        }
    }
    return worst;
}

}  // namespace lmcf
