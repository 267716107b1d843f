#pragma once

// Dense matrices attached to a tree: the q-deformed Laplacian, its oriented
// two-parameter (q,t) variant, and the exponential distance matrices.
// Constructors are templated on the scalar so the same formulas serve doubles,
// complex doubles, exact rationals, and exact Gaussian rationals.

#include <gmpxx.h>

#include <complex>
#include <cstdio>
#include <set>
#include <type_traits>

#include "qlap/tree.hpp"

namespace qlap {

// Exact complex rationals, used to verify complex matrix identities with no
// rounding at all.
struct GaussRat {
    mpq_class re{0}, im{0};

    GaussRat() = default;
    GaussRat(int v) : re(v) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    GaussRat conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    friend bool operator==(const GaussRat&, const GaussRat&) = default;
};

template <typename T>
struct Matrix {
    int n = 0;
    std::vector<T> a;

    Matrix() = default;
    explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, T(0)) {}

    T& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static Matrix identity(int size) {
        Matrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = T(1);
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            const T& v = a.at(i, k);
            for (int j = 0; j < a.n; ++j) c.at(i, j) = c.at(i, j) + v * b.at(k, j);
        }
    return c;
}

template <typename T>
Matrix<T> matsub(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.n);
    for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] - b.a[i];
    return c;
}

inline double max_abs(const RealMatrix& m) {
    double r = 0;
    for (double v : m.a) r = std::max(r, std::fabs(v));
    return r;
}

inline double max_abs(const ComplexMatrix& m) {
    double r = 0;
    for (const auto& v : m.a) r = std::max(r, std::abs(v));
    return r;
}

// Arc list aligned with the tree's edge list; arc k is edge k, possibly
// reversed.  The default orientation points every edge away from vertex 0.
struct Orientation {
    std::vector<std::pair<int, int>> arcs;
};

inline Orientation default_orientation(const LabelledTree& t) {
    Orientation o;
    std::vector<int> dist = bfs_distances(t, 0);
    for (auto [a, b] : t.edges)
        o.arcs.push_back(dist[a] < dist[b] ? std::pair{a, b} : std::pair{b, a});
    return o;
}

// One orientation per bit mask over the edges, for brute-force sweeps.
inline Orientation orientation_from_mask(const LabelledTree& t, std::uint32_t mask) {
    Orientation o;
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
        auto [a, b] = t.edges[k];
        o.arcs.push_back((mask >> k) & 1 ? std::pair{b, a} : std::pair{a, b});
    }
    return o;
}

// Deformed Laplacian: diagonal 1 + q^2 (deg - 1), off-diagonal -q per edge.
// q = 1 recovers the combinatorial Laplacian, q = 0 the identity.
template <typename T>
Matrix<T> q_laplacian(const LabelledTree& t, const T& q) {
    Matrix<T> m(t.n);
    for (int v = 0; v < t.n; ++v) m.at(v, v) = T(1) + q * q * T(t.degree(v) - 1);
    for (auto [a, b] : t.edges) {
        m.at(a, b) = -q;
        m.at(b, a) = -q;
    }
    return m;
}

// Oriented two-parameter variant: diagonal 1 + q t (deg - 1); each arc (i,j)
// contributes -q at (i,j) and -t at (j,i).  Hermitian exactly when t is the
// conjugate of q; q = t recovers the symmetric deformation.
template <typename T>
Matrix<T> qt_laplacian(const LabelledTree& t, const T& q, const T& tt, const Orientation& o) {
    if (o.arcs.size() != t.edges.size())
        throw std::invalid_argument("qt_laplacian: orientation does not match the tree");
    Matrix<T> m(t.n);
    for (int v = 0; v < t.n; ++v) m.at(v, v) = T(1) + q * tt * T(t.degree(v) - 1);
    for (auto [i, j] : o.arcs) {
        m.at(i, j) = -q;
        m.at(j, i) = -tt;
    }
    return m;
}

// Exponential distance matrix: entry (i,j) = q^dist(i,j); ones on the diagonal.
template <typename T>
Matrix<T> exp_distance(const LabelledTree& t, const T& q) {
    Matrix<T> m(t.n);
    for (int i = 0; i < t.n; ++i) {
        std::vector<int> dist = bfs_distances(t, i);
        for (int j = 0; j < t.n; ++j) {
            T w(1);
            for (int e = 0; e < dist[j]; ++e) w = w * q;
            m.at(i, j) = w;
        }
    }
    return m;
}

// Oriented exponential distance matrix: entry (i,j) multiplies q for every
// path step traversing an arc forward and t for every backward step.
template <typename T>
Matrix<T> exp_distance_qt(const LabelledTree& t, const T& q, const T& tt,
                          const Orientation& o) {
    if (o.arcs.size() != t.edges.size())
        throw std::invalid_argument("exp_distance_qt: orientation does not match the tree");
    std::set<std::pair<int, int>> forward(o.arcs.begin(), o.arcs.end());
    Matrix<T> m(t.n);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) {
            if (i == j) {
                m.at(i, j) = T(1);
                continue;
            }
            std::vector<int> path = path_between(t, i, j);
            T w(1);
            for (std::size_t s = 0; s + 1 < path.size(); ++s)
                w = w * (forward.count({path[s], path[s + 1]}) ? q : tt);
            m.at(i, j) = w;
        }
    return m;
}

// Principal submatrix with the listed rows/columns removed.
template <typename T>
Matrix<T> delete_principal(const Matrix<T>& m, const std::set<int>& deleted) {
    std::vector<int> keep;
    for (int v = 0; v < m.n; ++v)
        if (!deleted.count(v)) keep.push_back(v);
    Matrix<T> out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(keep[i], keep[j]);
    return out;
}

namespace detail {

template <typename T>
bool pivot_nonzero(const T& v) {
    if constexpr (std::is_same_v<T, GaussRat>)
        return !v.is_zero();
    else if constexpr (std::is_same_v<T, mpq_class>)
        return v != 0;
    else
        return std::abs(v) != 0;
}

}  // namespace detail

inline double inverse_of(double v) { return 1.0 / v; }
inline std::complex<double> inverse_of(const std::complex<double>& v) { return 1.0 / v; }
inline mpq_class inverse_of(const mpq_class& v) { return 1 / v; }
inline GaussRat inverse_of(const GaussRat& v) {
    mpq_class d = v.re * v.re + v.im * v.im;
    return {v.re / d, -v.im / d};
}

// Determinant by straightforward elimination over a field scalar type
// (double, complex<double>, mpq_class, GaussRat).
template <typename T>
T field_det(Matrix<T> m) {
    T det(1);
    for (int k = 0; k < m.n; ++k) {
        int p = -1;
        if constexpr (std::is_same_v<T, double> || std::is_same_v<T, std::complex<double>>) {
            double best = 0;
            for (int i = k; i < m.n; ++i)
                if (std::abs(m.at(i, k)) > best) {
                    best = std::abs(m.at(i, k));
                    p = i;
                }
        } else {
            for (int i = k; i < m.n; ++i)
                if (detail::pivot_nonzero(m.at(i, k))) {
                    p = i;
                    break;
                }
        }
        if (p < 0) return T(0);
        if (p != k) {
            for (int j = 0; j < m.n; ++j) std::swap(m.at(p, j), m.at(k, j));
            det = -det;
        }
        det = det * m.at(k, k);
        for (int i = k + 1; i < m.n; ++i) {
            if (!detail::pivot_nonzero(m.at(i, k))) continue;
            T f = m.at(i, k) * inverse_of(m.at(k, k));
            for (int j = k; j < m.n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        }
    }
    return det;
}

// Row-major CSV with 17 significant digits.
inline std::string matrix_to_csv(const RealMatrix& m) {
    std::string out;
    char buf[64];
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m.at(i, j));
            out += buf;
            out += (j + 1 < m.n) ? ',' : '\n';
        }
    }
    return out;
}

inline std::string matrix_to_csv(const ComplexMatrix& m) {
    std::string out;
    char buf[160];
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            const auto& v = m.at(i, j);
            if (v.imag() == 0.0)
                std::snprintf(buf, sizeof buf, "%.17g", v.real());
            else
                std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
            out += buf;
            out += (j + 1 < m.n) ? ',' : '\n';
        }
    }
    return out;
}

}  // namespace qlap
