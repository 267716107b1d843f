#pragma once

// Exact characteristic polynomials of the q-deformed Laplacian of a tree,
// computed over Z[q,x] by fraction-free (Bareiss) elimination, plus the
// auxiliary one-vertex polynomial and the two product identities built on it:
// the join identity and the cover-difference factorization.

#include <optional>
#include <set>

#include "qlap/bipoly.hpp"
#include "qlap/gts.hpp"
#include "qlap/tree.hpp"

namespace qlap {

// Entries of x*I - L over Z[q,x] for the host tree, optionally with a set of
// rows/columns removed.  Removed vertices keep contributing to the degrees of
// the remaining ones (principal submatrix of the full matrix).
inline std::vector<std::vector<BiPoly>> char_matrix(const LabelledTree& t,
                                                    const std::set<int>& deleted = {}) {
    std::vector<int> keep;
    for (int v = 0; v < t.n; ++v)
        if (!deleted.count(v)) keep.push_back(v);
    int m = static_cast<int>(keep.size());
    std::vector<std::vector<BiPoly>> M(m, std::vector<BiPoly>(m));
    for (int i = 0; i < m; ++i) {
        // x - 1 - q^2*(deg-1), degree taken in the host tree.
        BiPoly d;
        d.add_term(0, 1, 1);
        d.add_term(0, 0, -1);
        d.add_term(2, 0, -(t.degree(keep[i]) - 1));
        M[i][i] = d;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool adjacent = std::binary_search(t.adj[keep[i]].begin(), t.adj[keep[i]].end(),
                                               keep[j]);
            if (adjacent) {
                M[i][j] = BiPoly::monomial(1, 0, 1);  // -(-q)
                M[j][i] = M[i][j];
            }
        }
    return M;
}

// Fraction-free determinant.  Divisions are exact by construction; a failed
// exactness check aborts loudly rather than returning garbage.
inline BiPoly bareiss_determinant(std::vector<std::vector<BiPoly>> M) {
    int n = static_cast<int>(M.size());
    if (n == 0) return bp_const(1);
    int sign = 1;
    BiPoly prev = bp_const(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!M[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return BiPoly{};  // column of zeros: singular
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).divided_exactly_by(prev);
        prev = M[k][k];
    }
    return sign == 1 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

// det(x*I - L) with optional deleted vertices, exact in Z[q,x].
inline BiPoly charpoly(const LabelledTree& t, const std::set<int>& deleted = {}) {
    for (int v : deleted)
        if (v < 0 || v >= t.n) throw std::invalid_argument("charpoly: deleted vertex out of range");
    return bareiss_determinant(char_matrix(t, deleted));
}

// F_v = f - (x + q^2 - 1) * f|v, where f is the charpoly and f|v the deleted
// one.  Always divisible by x; x-degree n-1 with leading coefficient
// -deg(v)*q^2.
inline BiPoly aux_poly(const LabelledTree& t, int v) {
    BiPoly shift;
    shift.add_term(0, 1, 1);
    shift.add_term(2, 0, 1);
    shift.add_term(0, 0, -1);
    return charpoly(t) - shift * charpoly(t, {v});
}

// Join of two trees: all neighbors of v2 move to v1 and v2 disappears.
// Vertices of q1 keep their labels; remaining vertices of q2 follow in order.
inline LabelledTree join_trees(const LabelledTree& q1, int v1, const LabelledTree& q2, int v2) {
    if (v1 < 0 || v1 >= q1.n || v2 < 0 || v2 >= q2.n)
        throw std::invalid_argument("join_trees: join vertex out of range");
    std::vector<int> map2(q2.n);
    int next = q1.n;
    for (int w = 0; w < q2.n; ++w) map2[w] = (w == v2) ? v1 : next++;
    std::vector<std::pair<int, int>> edges = q1.edges;
    for (auto [a, b] : q2.edges) edges.emplace_back(map2[a], map2[b]);
    return make_tree(q1.n + q2.n - 1, std::move(edges));
}

// Residual of the join identity; the zero polynomial iff the identity holds:
//   f_T = f_{Q1} f_{Q2|v2} + f_{Q2} f_{Q1|v1} - (x - 1 + q^2) f_{Q1|v1} f_{Q2|v2}
inline BiPoly join_identity_residual(const LabelledTree& q1, int v1, const LabelledTree& q2,
                                     int v2) {
    LabelledTree t = join_trees(q1, v1, q2, v2);
    BiPoly f1 = charpoly(q1), f1v = charpoly(q1, {v1});
    BiPoly f2 = charpoly(q2), f2v = charpoly(q2, {v2});
    BiPoly shift;
    shift.add_term(0, 1, 1);
    shift.add_term(2, 0, 1);
    shift.add_term(0, 0, -1);
    return charpoly(t) - (f1 * f2v + f2 * f1v - shift * (f1v * f2v));
}

// Residual of the cover-difference factorization; zero iff
//   q^2 x (f_{T1} - f_{T2}) = -F_path F_branch_u F_branch_v
// with each auxiliary polynomial taken at the attachment vertex.
inline BiPoly difference_factorization_residual(const LabelledTree& t1, const ShiftSite& site) {
    if (!is_cover_shift(t1, site))
        throw std::invalid_argument("difference_factorization_residual: not a cover site");
    LabelledTree t2 = apply_shift(t1, site);
    CoverDecomposition d = decompose_cover(t1, site);
    BiPoly diff = charpoly(t1) - charpoly(t2);
    BiPoly fp = aux_poly(d.path_part, d.path_join_u);
    BiPoly fu = aux_poly(d.branch_u, d.branch_u_join);
    BiPoly fv = aux_poly(d.branch_v, d.branch_v_join);
    return BiPoly::monomial(2, 1, 1) * diff + fp * fu * fv;
}

// Closed form for the star: (x-1)^(n-2) * (x^2 - (2 + (n-2) q^2) x + 1 - q^2).
inline BiPoly star_charpoly_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("star_charpoly_closed_form: n >= 2");
    BiPoly quad;
    quad.add_term(0, 2, 1);
    quad.add_term(0, 1, -2);
    quad.add_term(2, 1, -(n - 2));
    quad.add_term(0, 0, 1);
    quad.add_term(2, 0, -1);
    BiPoly lin;
    lin.add_term(0, 1, 1);
    lin.add_term(0, 0, -1);
    return lin.pow(n - 2) * quad;
}

}  // namespace qlap
