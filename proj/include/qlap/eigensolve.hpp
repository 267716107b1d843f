#pragma once

// Dense symmetric/Hermitian eigensolvers written from first principles:
//  - Householder tridiagonalization followed by implicit-shift QL with
//    Wilkinson shifts and eigenvector accumulation (primary path);
//  - cyclic Jacobi rotations (independent cross-check, templated on the
//    floating type so sweeps can run in extended precision);
//  - Hermitian solve via the real symmetric 2n embedding, eigenvalues doubled.
// Every primary solve verifies its residuals before returning.

#include <cmath>
#include <limits>
#include <numeric>

#include "qlap/matrix.hpp"

namespace qlap {

struct EigenDecomposition {
    std::vector<double> values;  // descending
    RealMatrix vectors;          // column j pairs with values[j]
};

inline double inf_norm(const RealMatrix& m) {
    double best = 0;
    for (int i = 0; i < m.n; ++i) {
        double row = 0;
        for (int j = 0; j < m.n; ++j) row += std::fabs(m.at(i, j));
        best = std::max(best, row);
    }
    return best;
}

namespace detail {

// Reduce a symmetric matrix to tridiagonal form by Householder reflections,
// accumulating the orthogonal transform in z.  d receives the diagonal and
// e[i] the subdiagonal coupling d[i] and d[i+1].
inline void householder_tridiag(RealMatrix& z, std::vector<double>& d, std::vector<double>& e) {
    int n = z.n;
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k < i; ++k) scale += std::fabs(z.at(i, k));
            if (scale == 0.0) {
                e[i] = z.at(i, l);
            } else {
                for (int k = 0; k < i; ++k) {
                    z.at(i, k) /= scale;
                    h += z.at(i, k) * z.at(i, k);
                }
                double f = z.at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z.at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j < i; ++j) {
                    z.at(j, i) = z.at(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += z.at(j, k) * z.at(i, k);
                    for (int k = j + 1; k < i; ++k) g += z.at(k, j) * z.at(i, k);
                    e[j] = g / h;
                    f += e[j] * z.at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j < i; ++j) {
                    f = z.at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        z.at(j, k) -= f * e[k] + g * z.at(i, k);
                }
            }
        } else {
            e[i] = z.at(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        if (d[i] != 0.0) {
            for (int j = 0; j < i; ++j) {
                double g = 0.0;
                for (int k = 0; k < i; ++k) g += z.at(i, k) * z.at(k, j);
                for (int k = 0; k < i; ++k) z.at(k, j) -= g * z.at(k, i);
            }
        }
        d[i] = z.at(i, i);
        z.at(i, i) = 1.0;
        for (int j = 0; j < i; ++j) z.at(j, i) = z.at(i, j) = 0.0;
    }
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
}

// Implicit-shift QL on a tridiagonal (d, e) with accumulation in z.  An
// off-diagonal entry is treated as zero once |e_i| dips below machine epsilon
// times the magnitude of its two diagonal neighbors.  At most 50 iterations
// are spent per eigenvalue.
inline void ql_implicit(std::vector<double>& d, std::vector<double>& e, RealMatrix& z) {
    const double eps = std::numeric_limits<double>::epsilon();
    int n = static_cast<int>(d.size());
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error("ql_implicit: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = z.at(k, i + 1);
                        z.at(k, i + 1) = s * z.at(k, i) + c * f;
                        z.at(k, i) = c * z.at(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace detail

// Primary symmetric solve.  Postcondition (verified): every eigenpair has
// ||M v - lambda v||_2 <= 1e-10 * ||M||_inf.
inline EigenDecomposition sym_eigen(const RealMatrix& m) {
    int n = m.n;
    EigenDecomposition out;
    out.vectors = m;
    std::vector<double> d, e;
    detail::householder_tridiag(out.vectors, d, e);
    detail::ql_implicit(d, e, out.vectors);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] > d[b]; });
    RealMatrix sorted(n);
    out.values.resize(n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = d[order[j]];
        for (int i = 0; i < n; ++i) sorted.at(i, j) = out.vectors.at(i, order[j]);
    }
    out.vectors = std::move(sorted);

    double tol = 1e-10 * std::max(1.0, inf_norm(m));
    for (int j = 0; j < n; ++j) {
        double r2 = 0;
        for (int i = 0; i < n; ++i) {
            double ri = -out.values[j] * out.vectors.at(i, j);
            for (int k = 0; k < n; ++k) ri += m.at(i, k) * out.vectors.at(k, j);
            r2 += ri * ri;
        }
        if (std::sqrt(r2) > tol)
            throw std::runtime_error("sym_eigen: residual check failed");
    }
    return out;
}

// Independent check solver: cyclic Jacobi.  Works in any floating type F.
template <typename F>
std::vector<F> jacobi_eigenvalues(Matrix<F> a, int max_sweeps = 60) {
    const F eps = std::numeric_limits<F>::epsilon();
    int n = a.n;
    F fro(0);
    for (const auto& v : a.a) fro += v * v;
    using std::sqrt;
    F off_tol = eps * eps * fro;  // squared off-norm target
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        F off(0);
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        if (off * 2 <= off_tol) {
            std::vector<F> vals(n);
            for (int i = 0; i < n; ++i) vals[i] = a.at(i, i);
            std::sort(vals.begin(), vals.end(), std::greater<F>());
            return vals;
        }
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                F apq = a.at(p, q);
                if (apq == F(0)) continue;
                F theta = (a.at(q, q) - a.at(p, p)) / (F(2) * apq);
                F t;
                using std::fabs;
                if (theta >= F(0))
                    t = F(1) / (theta + sqrt(theta * theta + F(1)));
                else
                    t = F(-1) / (-theta + sqrt(theta * theta + F(1)));
                F c = F(1) / sqrt(t * t + F(1));
                F s = t * c;
                F app = a.at(p, p), aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = a.at(q, p) = F(0);
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    F akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = a.at(p, k) = c * akp - s * akq;
                    a.at(k, q) = a.at(q, k) = s * akp + c * akq;
                }
            }
    }
    throw std::runtime_error("jacobi_eigenvalues: did not converge");
}

// Hermitian solve via the symmetric embedding [[Re, -Im], [Im, Re]]; each
// eigenvalue of the input shows up twice and the two copies must agree to
// 1e-8, otherwise the solve is rejected.
inline std::vector<double> herm_eigen(const ComplexMatrix& m) {
    int n = m.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > 0)
                throw std::invalid_argument("herm_eigen: matrix is not Hermitian");
    RealMatrix big(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = m.at(i, j).real(), im = m.at(i, j).imag();
            big.at(i, j) = re;
            big.at(n + i, n + j) = re;
            big.at(i, n + j) = -im;
            big.at(n + i, j) = im;
        }
    EigenDecomposition full = sym_eigen(big);
    std::vector<double> vals(n);
    for (int k = 0; k < n; ++k) {
        double a = full.values[2 * k], b = full.values[2 * k + 1];
        if (std::fabs(a - b) > 1e-8)
            throw std::runtime_error("herm_eigen: embedding eigenvalues failed to pair");
        vals[k] = 0.5 * (a + b);
    }
    return vals;
}

// Greedy multiplicity clustering: indices (over the descending value list)
// grouped whenever the gap to the previous value is at most
// 1e-7 * (1 + scale).
inline std::vector<int> cluster_spectrum(const std::vector<double>& descending, double scale) {
    double tol = 1e-7 * (1.0 + scale);
    std::vector<int> id(descending.size(), 0);
    for (std::size_t i = 1; i < descending.size(); ++i)
        id[i] = (descending[i - 1] - descending[i] <= tol) ? id[i - 1] : id[i - 1] + 1;
    return id;
}

// Eigenvalues plus clustering, the common result shape for the checkers.
struct Spectrum {
    std::vector<double> values;  // descending
    std::vector<int> cluster;    // cluster id per value, 0 = largest cluster group
    double cluster_tol = 0;

    double max() const { return values.front(); }
    double min() const { return values.back(); }
    // Second smallest eigenvalue.
    double second_min() const { return values[values.size() - 2]; }
    double second_max() const { return values[1]; }
    int min_multiplicity() const {
        int last = cluster.back();
        int c = 0;
        for (int v : cluster) c += (v == last);
        return c;
    }
};

inline Spectrum make_spectrum(std::vector<double> descending, double scale) {
    Spectrum s;
    s.cluster = cluster_spectrum(descending, scale);
    s.values = std::move(descending);
    s.cluster_tol = 1e-7 * (1.0 + scale);
    return s;
}

inline Spectrum spectrum_of_sym(const RealMatrix& m) {
    return make_spectrum(sym_eigen(m).values, inf_norm(m));
}

inline Spectrum spectrum_of_herm(const ComplexMatrix& m) {
    double scale = 0;
    for (int i = 0; i < m.n; ++i) {
        double row = 0;
        for (int j = 0; j < m.n; ++j) row += std::abs(m.at(i, j));
        scale = std::max(scale, row);
    }
    return make_spectrum(herm_eigen(m), scale);
}

inline std::string spectrum_to_csv(const Spectrum& s) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%d\n", s.values[i], s.cluster[i]);
        out += buf;
    }
    return out;
}

}  // namespace qlap
