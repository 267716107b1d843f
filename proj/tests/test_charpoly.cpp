#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qlap/charpoly.hpp"

using namespace qlap;

namespace {

BiPoly one_minus_q2() {
    BiPoly p;
    p.add_term(0, 0, 1);
    p.add_term(2, 0, -1);
    return p;
}

}  // namespace

TEST_CASE("charpoly of the two smallest trees") {
    // Single vertex: diagonal entry 1 + q^2*(0-1).
    BiPoly f1 = charpoly(make_tree(1, {}));
    BiPoly expect1;
    expect1.add_term(0, 1, 1);
    expect1.add_term(2, 0, 1);
    expect1.add_term(0, 0, -1);
    CHECK(f1 == expect1);

    BiPoly f2 = charpoly(path_tree(2));
    BiPoly expect2;
    expect2.add_term(0, 2, 1);
    expect2.add_term(0, 1, -2);
    expect2.add_term(2, 0, -1);
    expect2.add_term(0, 0, 1);
    CHECK(f2 == expect2);
    CHECK(f2.to_string() == "x^2 - 2*x - q^2 + 1");
}

TEST_CASE("deleting the center of a 3-path leaves the identity block") {
    BiPoly f = charpoly(path_tree(3), {1});
    BiPoly lin;
    lin.add_term(0, 1, 1);
    lin.add_term(0, 0, -1);
    CHECK(f == lin.pow(2));
    // Deleting down to one endpoint keeps the host degree: x - 1.
    CHECK(charpoly(path_tree(2), {0}).to_string() == "x - 1");
}

TEST_CASE("determinant identity at x = 0") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& code : enumerate_trees(n)) {
            BiPoly f = charpoly(decode(code));
            BiPoly at0 = f.at_x_zero();
            if (n % 2 == 1) at0 = -at0;
            CHECK(at0 == one_minus_q2());
        }
}

TEST_CASE("deleted-vertex charpoly at x = 0") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (int v = 0; v < n; ++v) {
                BiPoly at0 = charpoly(t, {v}).at_x_zero();
                CHECK(at0 == bp_const((n - 1) % 2 == 0 ? 1 : -1));
            }
        }
}

TEST_CASE("charpoly is monic of degree n with only even q powers") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& code : enumerate_trees(n)) {
            BiPoly f = charpoly(decode(code));
            CHECK(f.deg_x() == n);
            CHECK(f.coeff_of_x(n) == bp_const(1));
            CHECK(f.has_only_even_q_powers());
        }
}

TEST_CASE("star charpoly matches the closed form exactly") {
    for (int n = 2; n <= 12; ++n)
        CHECK(charpoly(star_tree(n)) == star_charpoly_closed_form(n));
}

TEST_CASE("charpoly agrees with the interpolation oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            CHECK(charpoly(t) == oracle::interpolated_charpoly(t));
        }
    // Deleted-vertex variants.
    LabelledTree cat = make_tree(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
    for (int v = 0; v < 6; ++v)
        CHECK(charpoly(cat, {v}) == oracle::interpolated_charpoly(cat, {v}));
    CHECK(charpoly(cat, {0, 3}) == oracle::interpolated_charpoly(cat, {0, 3}));
}

TEST_CASE("difference of one-vertex-deleted charpolys on a 3-path") {
    // Deleting an endpoint versus the center of P_3 differs by exactly -q^2 x.
    BiPoly d = charpoly(path_tree(3), {0}) - charpoly(path_tree(3), {1});
    CHECK(d == BiPoly::monomial(2, 1, -1));
}

TEST_CASE("auxiliary polynomial basics") {
    CHECK(aux_poly(path_tree(2), 0) == BiPoly::monomial(2, 1, -1));
    CHECK(aux_poly(path_tree(2), 0).to_string() == "-q^2*x");

    for (int n = 2; n <= 7; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (int v = 0; v < n; ++v) {
                BiPoly F = aux_poly(t, v);
                CHECK(F.deg_x() == n - 1);
                CHECK(F.coeff_of_x(n - 1) == BiPoly::monomial(2, 0, -t.degree(v)));
                CHECK(F.at_x_zero().is_zero());  // x divides F
            }
        }
}

TEST_CASE("auxiliary polynomial of a star at its center") {
    // F = -(n-1) q^2 x (x-1)^(n-2), worked out by hand from the closed form.
    for (int n = 3; n <= 9; ++n) {
        LabelledTree s = star_tree(n);
        BiPoly lin;
        lin.add_term(0, 1, 1);
        lin.add_term(0, 0, -1);
        BiPoly expect = BiPoly::monomial(2, 1, -(n - 1)) * lin.pow(n - 2);
        CHECK(aux_poly(s, 0) == expect);
    }
}

TEST_CASE("join identity holds exactly") {
    // Degenerate join: a single vertex glued anywhere reproduces the partner.
    LabelledTree k1 = make_tree(1, {});
    for (int n = 2; n <= 6; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (int v = 0; v < n; ++v) {
                CHECK(is_isomorphic(join_trees(k1, 0, t, v), t));
                CHECK(join_identity_residual(k1, 0, t, v).is_zero());
            }
        }

    // Exhaustive small joins.
    for (int n1 = 1; n1 <= 5; ++n1)
        for (int n2 = 1; n1 + n2 <= 6; ++n2)
            for (const auto& c1 : enumerate_trees(n1))
                for (const auto& c2 : enumerate_trees(n2)) {
                    LabelledTree q1 = decode(c1), q2 = decode(c2);
                    for (int v1 = 0; v1 < n1; ++v1)
                        for (int v2 = 0; v2 < n2; ++v2)
                            CHECK(join_identity_residual(q1, v1, q2, v2).is_zero());
                }
}

TEST_CASE("cover-difference factorization holds exactly for small orders") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (const auto& s : shift_sites(t))
                if (is_cover_shift(t, s))
                    CHECK(difference_factorization_residual(t, s).is_zero());
        }
}

TEST_CASE("cover difference has a double root at x = 0") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (const auto& s : shift_sites(t)) {
                if (!is_cover_shift(t, s)) continue;
                BiPoly diff = charpoly(t) - charpoly(apply_shift(t, s));
                CHECK(diff.coeff_of_x(0).is_zero());
                CHECK(diff.coeff_of_x(1).is_zero());
            }
        }
}

TEST_CASE("evaluation matches a floating determinant") {
    CHECK(charpoly(path_tree(2)).eval(0.5, 1.5) == 0.0);

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> qs(-2.0, 2.0), xs(-3.0, 8.0);
    for (int rep = 0; rep < 25; ++rep) {
        LabelledTree t = random_tree(7, rng);
        BiPoly f = charpoly(t);
        double q0 = qs(rng), x0 = xs(rng);
        std::vector<std::vector<double>> m(t.n, std::vector<double>(t.n, 0.0));
        for (int i = 0; i < t.n; ++i) m[i][i] = x0 - 1.0 - q0 * q0 * (t.degree(i) - 1);
        for (auto [a, b] : t.edges) m[a][b] = m[b][a] = q0;
        double det = oracle::lu_det(m);
        double got = f.eval(q0, x0);
        CHECK(std::fabs(got - det) <= 1e-8 * (1.0 + std::fabs(det)));
    }
}

TEST_CASE("exact rational evaluation") {
    BiPoly f = charpoly(path_tree(2));
    mpq_class half(1, 2), three_half(3, 2);
    CHECK(f.eval(half, three_half) == 0);
    auto coeffs = f.specialize_q(half);  // x^2 - 2x + 3/4
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == mpq_class(3, 4));
    CHECK(coeffs[1] == -2);
    CHECK(coeffs[2] == 1);
}

TEST_CASE("polynomial ring sanity") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> deg(0, 4), cf(-6, 6);
    auto random_poly = [&] {
        BiPoly p;
        for (int i = 0; i < 6; ++i) p.add_term(deg(rng), deg(rng), cf(rng));
        return p;
    };
    for (int rep = 0; rep < 40; ++rep) {
        BiPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a * b).divided_exactly_by(b) == a);
    }
    BiPoly x2;
    x2.add_term(0, 2, 1);
    BiPoly xp1;
    xp1.add_term(0, 1, 1);
    xp1.add_term(0, 0, 1);
    CHECK_THROWS_AS(x2.divided_exactly_by(xp1), std::logic_error);

    // Zero terms never stored.
    BiPoly z;
    z.add_term(1, 1, 3);
    z.add_term(1, 1, -3);
    CHECK(z.is_zero());
    CHECK(z.terms.empty());
}

TEST_CASE("polynomial serialization") {
    BiPoly f = charpoly(star_tree(4));
    CHECK(BiPoly::from_json(f.to_json()) == f);
    CHECK(bp_const(0).to_string() == "0");
    BiPoly m = BiPoly::monomial(2, 1, 1);
    CHECK(m.to_string() == "q^2*x");

    nlohmann::json j = charpoly(path_tree(2)).to_json();
    // Descending x-degree then q-degree: x^2, -2x, -q^2, +1.
    REQUIRE(j.size() == 4);
    CHECK(j[0] == nlohmann::json({0, 2, "1"}));
    CHECK(j[1] == nlohmann::json({0, 1, "-2"}));
    CHECK(j[2] == nlohmann::json({2, 0, "-1"}));
    CHECK(j[3] == nlohmann::json({0, 0, "1"}));
}

TEST_CASE("larger elimination stays exact and fast enough") {
    BiPoly f = charpoly(path_tree(12));
    CHECK(f.deg_x() == 12);
    CHECK(f.coeff_of_x(12) == bp_const(1));
    if (true) {
        BiPoly at0 = f.at_x_zero();
        CHECK(at0 == one_minus_q2());
    }
}
