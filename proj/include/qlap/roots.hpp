#pragma once

// Univariate polynomial root machinery:
//  - exact rational arithmetic helpers (division, monic gcd) used to strip
//    repeated factors before any floating-point work, so clustered roots do
//    not poison the accuracy of the simple ones;
//  - an Aberth-Ehrlich simultaneous root iteration with residual checks.

#include <complex>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace qlap {

// Ascending-degree coefficient list over the rationals.
using QPoly = std::vector<mpq_class>;

inline int qpoly_degree(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

inline QPoly qpoly_trim(QPoly p) {
    p.resize(static_cast<std::size_t>(qpoly_degree(p) + 1));
    return p;
}

inline QPoly qpoly_derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(mpq_class(static_cast<long>(i)) * p[i]);
    return qpoly_trim(d);
}

// Quotient and remainder of a by b (b nonzero), exact over the rationals.
inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
    int db = qpoly_degree(b);
    if (db < 0) throw std::invalid_argument("qpoly_divmod: division by zero polynomial");
    a = qpoly_trim(a);
    int da = qpoly_degree(a);
    if (da < db) return {QPoly{}, a};
    QPoly q(static_cast<std::size_t>(da - db + 1), mpq_class(0));
    for (int i = da; i >= db; --i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        mpq_class c = a[static_cast<std::size_t>(i)] / b[static_cast<std::size_t>(db)];
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    return {qpoly_trim(q), qpoly_trim(a)};
}

// Monic gcd by the Euclidean algorithm.
inline QPoly qpoly_gcd(QPoly a, QPoly b) {
    a = qpoly_trim(a);
    b = qpoly_trim(b);
    while (qpoly_degree(b) >= 0) {
        QPoly r = qpoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    int d = qpoly_degree(a);
    if (d < 0) return a;
    mpq_class lc = a[static_cast<std::size_t>(d)];
    for (auto& c : a) c /= lc;
    return a;
}

// p with all repeated factors collapsed to multiplicity one: p / gcd(p, p').
inline QPoly square_free_part(const QPoly& p) {
    QPoly t = qpoly_trim(p);
    if (qpoly_degree(t) <= 1) return t;
    QPoly g = qpoly_gcd(t, qpoly_derivative(t));
    if (qpoly_degree(g) == 0) return t;
    auto [q, r] = qpoly_divmod(t, g);
    if (qpoly_degree(r) >= 0)
        throw std::logic_error("square_free_part: gcd failed to divide");
    return q;
}

inline std::vector<double> qpoly_to_doubles(const QPoly& p) {
    std::vector<double> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.get_d());
    return out;
}

// All complex roots of a polynomial given by ascending double coefficients,
// via simultaneous Aberth-Ehrlich iteration.  Starting points sit on a
// slightly rotated circle at the Cauchy root bound.  Each returned root z is
// verified to satisfy |p(z)| <= 1e-9 * sum_i |a_i| |z|^i.
inline std::vector<std::complex<double>> aberth_roots(std::vector<double> coeffs) {
    using C = std::complex<double>;
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1)
        throw std::invalid_argument("aberth_roots: degree must be at least 1");
    int deg = static_cast<int>(coeffs.size()) - 1;

    auto eval = [&](C z, C& p, C& dp) {
        p = coeffs[static_cast<std::size_t>(deg)];
        dp = 0.0;
        for (int i = deg - 1; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + coeffs[static_cast<std::size_t>(i)];
        }
    };

    double bound = 0.0;
    for (int i = 0; i < deg; ++i)
        bound = std::max(bound, std::fabs(coeffs[static_cast<std::size_t>(i)] /
                                          coeffs[static_cast<std::size_t>(deg)]));
    double radius = 1.0 + bound;

    std::vector<C> z(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) {
        double angle = 2.0 * M_PI * k / deg + 0.4;
        z[static_cast<std::size_t>(k)] = radius * C(std::cos(angle), std::sin(angle));
    }

    // Coefficient-magnitude scale of the evaluation at |z|: |p(z)| below
    // machine precision times this value is indistinguishable from zero under
    // rounding-level coefficient perturbations.
    auto poly_scale = [&](double az) {
        double scale = 0.0, pw = 1.0;
        for (int i = 0; i <= deg; ++i) {
            scale += std::fabs(coeffs[static_cast<std::size_t>(i)]) * pw;
            pw *= az;
        }
        return scale;
    };

    const int max_sweeps = 200;
    std::vector<char> settled(static_cast<std::size_t>(deg), 0);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_settled = true;
        for (int k = 0; k < deg; ++k) {
            if (settled[static_cast<std::size_t>(k)]) continue;
            C p, dp;
            eval(z[static_cast<std::size_t>(k)], p, dp);
            // Backward-error stop: once the residual reaches the rounding
            // floor of the coefficients, further corrections only cycle by a
            // few ulps (near-critical points make the step plateau above any
            // fixed relative threshold).
            if (std::abs(p) <= 1e-15 * poly_scale(std::abs(z[static_cast<std::size_t>(k)]))) {
                settled[static_cast<std::size_t>(k)] = 1;
                continue;
            }
            C w = (dp != C(0.0)) ? p / dp : C(1e-12, 1e-12);
            C rep(0.0);
            for (int j = 0; j < deg; ++j)
                if (j != k) rep += 1.0 / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            C denom = 1.0 - w * rep;
            C step = (std::abs(denom) > 1e-300) ? w / denom : w;
            z[static_cast<std::size_t>(k)] -= step;
            if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z[static_cast<std::size_t>(k)])))
                settled[static_cast<std::size_t>(k)] = 1;
            else
                all_settled = false;
        }
        if (all_settled) break;
        if (sweep == max_sweeps - 1)
            throw std::runtime_error("aberth_roots: did not converge");
    }

    for (const C& root : z) {
        C p, dp;
        eval(root, p, dp);
        if (std::abs(p) > 1e-9 * std::max(1.0, poly_scale(std::abs(root))))
            throw std::runtime_error("aberth_roots: residual check failed");
    }
    std::sort(z.begin(), z.end(), [](C a, C b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return z;
}

// Roots of the square-free part of an exact rational polynomial, ascending by
// real part.  Each distinct root of p appears exactly once.
inline std::vector<std::complex<double>> distinct_roots(const QPoly& p) {
    QPoly sf = square_free_part(p);
    if (qpoly_degree(sf) < 1) return {};
    return aberth_roots(qpoly_to_doubles(sf));
}

}  // namespace qlap
