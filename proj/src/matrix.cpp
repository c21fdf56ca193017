#include "recoh/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace recoh {

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::diag(const std::vector<double>& d) {
    CMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMat operator*(const CMat& x, const CMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: inner dimensions differ");
    CMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const cplx xik = x(i, k);
            if (xik == cplx{}) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

CMat operator+(const CMat& x, const CMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("add: shape mismatch");
    CMat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

CMat operator-(const CMat& x, const CMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("sub: shape mismatch");
    CMat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

CMat operator*(cplx s, const CMat& x) {
    CMat r = x;
    for (auto& v : r.a) v *= s;
    return r;
}

CMat adjoint(const CMat& m) {
    CMat r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

cplx trace(const CMat& m) {
    if (!m.square()) throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) t += m(i, i);
    return t;
}

bool is_finite(const CMat& m) {
    for (const auto& v : m.a)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double max_abs(const CMat& m) {
    double r = 0.0;
    for (const auto& v : m.a) r = std::max(r, std::abs(v));
    return r;
}

double hermiticity_defect(const CMat& m) {
    double d = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

namespace {

double frobenius(const CMat& m) {
    double s = 0.0;
    for (const auto& v : m.a) s += std::norm(v);
    return std::sqrt(s);
}

double off_diagonal_frobenius(const CMat& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

EighResult eigh(const CMat& h, double herm_tol) {
    if (!h.square()) throw std::invalid_argument("eigh: matrix not square");
    if (!is_finite(h)) throw std::invalid_argument("eigh: non-finite entries");
    if (hermiticity_defect(h) > herm_tol)
        throw std::invalid_argument("eigh: matrix not hermitian within tolerance");

    const std::size_t n = h.rows;
    CMat a = h;
    CMat v = CMat::identity(n);

    // Exact symmetrization; the defect passed the tolerance check above.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
        a(i, i) = a(i, i).real();
    }

    const double stop = 1e-12 * std::max(1.0, frobenius(a));
    for (int sweep = 0; sweep < 100 && n > 1; ++sweep) {
        if (off_diagonal_frobenius(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) continue;
                // Phase factor turning the (p,q) block real, then a real
                // Jacobi rotation on [[app, b], [b, aqq]].
                const cplx phase = apq / b;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * b);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Column transform J = diag(1, conj(phase)) * [[c, s], [-s, c]]:
                //   col_p <- c*col_p - s*conj(phase)*col_q
                //   col_q <- s*col_p + c*conj(phase)*col_q
                const cplx jpp = c, jpq = s;
                const cplx jqp = -s * std::conj(phase), jqq = c * std::conj(phase);
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip * jpp + aiq * jqp;
                    a(i, q) = aip * jpq + aiq * jqq;
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip * jpp + viq * jqp;
                    v(i, q) = vip * jpq + viq * jqq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = std::conj(jpp) * apj + std::conj(jqp) * aqj;
                    a(q, j) = std::conj(jpq) * apj + std::conj(jqq) * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EighResult res;
    res.values.resize(n);
    res.vectors = CMat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
    }
    return res;
}

std::vector<double> hermitian_eigenvalues(const CMat& h, double herm_tol) {
    return eigh(h, herm_tol).values;
}

double trace_norm(const CMat& m) {
    if (!is_finite(m)) throw std::invalid_argument("trace_norm: non-finite entries");
    if (m.a.empty()) return 0.0;
    const CMat g = adjoint(m) * m;
    const auto vals = hermitian_eigenvalues(g);
    // Rank-deficient inputs put exact zeros in the spectrum of m^dagger m;
    // what the eigensolver reports there is formation noise, and its square
    // root would pollute the sum. Flush everything in the noise band.
    const double floor = 1e-13 * std::max(1.0, vals.empty() ? 0.0 : vals.back());
    double sum = 0.0;
    for (double lam : vals) {
        if (lam < -1e-12)
            throw std::runtime_error("trace_norm: numerical breakdown, eigenvalue below -1e-12");
        if (lam > floor) sum += std::sqrt(lam);
    }
    return sum;
}

CMat psd_sqrt(const CMat& p) {
    const EighResult e = eigh(p);  // throws NonSquare / NotHermitian
    const std::size_t n = p.rows;
    // Same noise-band flush as trace_norm: exact zero eigenvalues of
    // rank-deficient inputs must not contribute sqrt(noise).
    const double floor = 1e-13 * std::max(1.0, e.values.empty() ? 0.0 : e.values.back());
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (e.values[k] < -1e-10)
            throw std::invalid_argument("psd_sqrt: matrix not PSD, eigenvalue below -1e-10");
        roots[k] = e.values[k] > floor ? std::sqrt(e.values[k]) : 0.0;
    }
    CMat s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += roots[k] * e.vectors(i, k) * std::conj(e.vectors(j, k));
            s(i, j) = acc;
            s(j, i) = std::conj(acc);
            if (i == j) s(i, i) = acc.real();
        }
    return s;
}

std::vector<cplx> power_sums(const CMat& m, int n) {
    if (!m.square()) throw std::invalid_argument("power_sums: matrix not square");
    if (n < 1) throw std::invalid_argument("power_sums: n must be >= 1");
    std::vector<cplx> t;
    t.reserve(static_cast<std::size_t>(n));
    CMat p = m;
    t.push_back(trace(p));
    for (int j = 2; j <= n; ++j) {
        p = p * m;
        t.push_back(trace(p));
    }
    return t;
}

namespace {

// All real roots of z^3 + a z^2 + b z + c (with multiplicity, unsorted).
std::vector<double> real_cubic_roots(double a, double b, double c) {
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double shift = -a / 3.0;

    const double scale = std::max({1.0, std::abs(p), std::abs(q)});
    if (std::abs(p) < 1e-14 * scale && std::abs(q) < 1e-14 * scale)
        return {shift, shift, shift};

    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    std::vector<double> roots;
    if (disc >= 0.0) {
        // three real roots; p < 0 is implied
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.push_back(shift + m * std::cos(theta - 2.0943951023931953 * k));
    } else {
        const double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        const double u3 = (q >= 0.0) ? (-q / 2.0 - sq) : (-q / 2.0 + sq);
        const double u = std::cbrt(u3);
        roots.push_back(shift + (u == 0.0 ? 0.0 : u - p / (3.0 * u)));
    }
    return roots;
}

double quartic_eval(double b, double c, double d, double e, double t) {
    return (((t + b) * t + c) * t + d) * t + e;  // monic
}

double quartic_deriv(double b, double c, double d, double t) {
    return ((4.0 * t + 3.0 * b) * t + 2.0 * c) * t + d;
}

}  // namespace

std::vector<double> real_quartic_roots(double c4, double c3, double c2, double c1, double c0) {
    if (std::abs(c4) < 1e-14)
        throw std::invalid_argument("real_quartic_roots: |leading coefficient| below 1e-14");
    const double b = c3 / c4, c = c2 / c4, d = c1 / c4, e = c0 / c4;

    // depress: t = u + shift
    const double shift = -b / 4.0;
    const double b2 = b * b;
    const double p = c - 3.0 * b2 / 8.0;
    const double q = d - b * c / 2.0 + b2 * b / 8.0;
    const double r = e - b * d / 4.0 + b2 * c / 16.0 - 3.0 * b2 * b2 / 256.0;

    const double scale = std::max({1.0, std::abs(p), std::abs(r)});
    std::vector<double> cand;
    bool biquadratic = std::abs(q) < 1e-13 * scale;

    if (!biquadratic) {
        // Ferrari: with z > 0 a root of the resolvent cubic, the depressed
        // quartic factors as (u^2 + w u + h - g)(u^2 - w u + h + g),
        // w = sqrt(z), h = (p + z)/2, g = q / (2w).
        const auto zs = real_cubic_roots(2.0 * p, p * p - 4.0 * r, -q * q);
        double z = *std::max_element(zs.begin(), zs.end());
        if (!(z > 0.0) || !std::isfinite(z)) {
            biquadratic = true;  // q is negligible after all
        } else {
            const double w = std::sqrt(z);
            const double h = (p + z) / 2.0;
            const double g = q / (2.0 * w);
            for (int sgn : {+1, -1}) {
                const double qb = sgn * w;
                const double qc = h - sgn * g;
                double disc = qb * qb - 4.0 * qc;
                if (disc < 0.0 && disc > -1e-8 * std::max(1.0, qb * qb + std::abs(qc))) disc = 0.0;
                if (disc >= 0.0) {
                    const double sd = std::sqrt(disc);
                    cand.push_back((-qb + sd) / 2.0);
                    cand.push_back((-qb - sd) / 2.0);
                }
            }
        }
    }
    if (biquadratic) {
        // u^4 + p u^2 + r: solve y^2 + p y + r = 0, u = +-sqrt(y)
        double disc = p * p / 4.0 - r;
        if (disc < 0.0 && disc > -1e-10 * scale * scale) disc = 0.0;
        if (disc >= 0.0) {
            const double sd = std::sqrt(disc);
            for (double y : {-p / 2.0 + sd, -p / 2.0 - sd}) {
                if (y < 0.0 && y > -1e-10 * scale) y = 0.0;
                if (y >= 0.0) {
                    const double su = std::sqrt(y);
                    cand.push_back(su);
                    cand.push_back(-su);
                }
            }
        }
    }

    std::vector<double> roots;
    for (double u : cand) {
        double t = u + shift;
        for (int iter = 0; iter < 3; ++iter) {
            const double f = quartic_eval(b, c, d, e, t);
            const double fp = quartic_deriv(b, c, d, t);
            if (std::abs(fp) < 1e-30) break;
            const double step = f / fp;
            if (!std::isfinite(step) || std::abs(step) > 1.0 + std::abs(t)) break;
            t -= step;
        }
        const double resid = std::abs(quartic_eval(b, c, d, e, t));
        if (resid <= 1e-8 * std::max(1.0, t * t * t * t)) roots.push_back(t);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace recoh
