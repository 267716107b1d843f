#pragma once

// Independent oracles used only by the test suite.  These deliberately avoid
// the library's polynomial elimination path: determinants over the integers,
// bivariate reconstruction by exact rational Lagrange interpolation, and a
// plain LU determinant in doubles.

#include <gmpxx.h>

#include <cmath>
#include <set>
#include <vector>

#include "qlap/bipoly.hpp"
#include "qlap/tree.hpp"

namespace oracle {

// Fraction-free integer determinant with row pivoting.
inline mpz_class int_det(std::vector<std::vector<mpz_class>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Integer matrix x0*I - L(q0) for the host tree with deleted vertices removed.
inline std::vector<std::vector<mpz_class>> char_matrix_at(const qlap::LabelledTree& t,
                                                          const std::set<int>& deleted,
                                                          const mpz_class& q0,
                                                          const mpz_class& x0) {
    std::vector<int> keep;
    for (int v = 0; v < t.n; ++v)
        if (!deleted.count(v)) keep.push_back(v);
    int m = static_cast<int>(keep.size());
    std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(m, 0));
    for (int i = 0; i < m; ++i)
        M[i][i] = x0 - 1 - q0 * q0 * (t.degree(keep[i]) - 1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (std::binary_search(t.adj[keep[i]].begin(), t.adj[keep[i]].end(), keep[j])) {
                M[i][j] = q0;
                M[j][i] = q0;
            }
    return M;
}

// Coefficients of the univariate Lagrange basis polynomial through integer
// nodes 0..m equal to 1 at node b.
inline std::vector<mpq_class> lagrange_basis(int m, int b) {
    std::vector<mpq_class> num{1};
    mpq_class den(1);
    for (int j = 0; j <= m; ++j) {
        if (j == b) continue;
        std::vector<mpq_class> next(num.size() + 1, 0);
        for (std::size_t i = 0; i < num.size(); ++i) {
            next[i] += num[i] * mpq_class(-j);
            next[i + 1] += num[i];
        }
        num = std::move(next);
        den *= mpq_class(b - j);
    }
    for (auto& c : num) c /= den;
    return num;
}

// Reconstruct det(x*I - L) exactly from integer evaluation points.
inline qlap::BiPoly interpolated_charpoly(const qlap::LabelledTree& t,
                                          const std::set<int>& deleted = {}) {
    int m = t.n - static_cast<int>(deleted.size());
    int dx_max = m, dq_max = 2 * m;
    std::vector<std::vector<mpq_class>> coeff(dx_max + 1,
                                              std::vector<mpq_class>(dq_max + 1, 0));
    std::vector<std::vector<mpq_class>> basis_x, basis_q;
    for (int a = 0; a <= dx_max; ++a) basis_x.push_back(lagrange_basis(dx_max, a));
    for (int b = 0; b <= dq_max; ++b) basis_q.push_back(lagrange_basis(dq_max, b));
    for (int a = 0; a <= dx_max; ++a)
        for (int b = 0; b <= dq_max; ++b) {
            mpz_class v = int_det(char_matrix_at(t, deleted, b, a));
            if (v == 0) continue;
            mpq_class vq(v);
            for (int dx = 0; dx <= dx_max; ++dx) {
                if (basis_x[a][dx] == 0) continue;
                mpq_class partial = vq * basis_x[a][dx];
                for (int dq = 0; dq <= dq_max; ++dq)
                    if (basis_q[b][dq] != 0) coeff[dx][dq] += partial * basis_q[b][dq];
            }
        }
    qlap::BiPoly out;
    for (int dx = 0; dx <= dx_max; ++dx)
        for (int dq = 0; dq <= dq_max; ++dq) {
            mpq_class c = coeff[dx][dq];
            c.canonicalize();
            if (c == 0) continue;
            if (c.get_den() != 1) throw std::logic_error("interpolation produced a non-integer");
            out.add_term(dq, dx, c.get_num());
        }
    return out;
}

// Plain LU determinant with partial pivoting, in doubles.
inline double lu_det(std::vector<std::vector<double>> a) {
    int n = static_cast<int>(a.size());
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(a[i][k]) > std::fabs(a[p][k])) p = i;
        if (a[p][k] == 0.0) return 0.0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            double f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

}  // namespace oracle
