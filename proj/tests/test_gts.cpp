#include <catch_amalgamated.hpp>

#include "qlap/gts.hpp"

using namespace qlap;

namespace {

// Named 6-vertex trees used to pin down the full shift poset by hand.
LabelledTree spider_221() {  // degree-3 center with legs of lengths 2,2,1
    return make_tree(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
}
LabelledTree broom_311() {  // degree-3 vertex with legs of lengths 3,1,1
    return make_tree(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}});
}
LabelledTree double_star() {  // two adjacent degree-3 vertices, two leaves each
    return make_tree(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}
LabelledTree subdivided_star() {  // degree-4 center with legs 2,1,1,1
    return make_tree(6, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}});
}

}  // namespace

TEST_CASE("shift sites on paths and stars") {
    auto p4 = shift_sites(path_tree(4));
    CHECK(p4.size() == 6);  // every pair: interiors are all degree 2

    auto s5 = shift_sites(star_tree(5));
    REQUIRE(s5.size() == 4);  // only center-leaf pairs; leaf-leaf paths pass the center
    for (const auto& s : s5) {
        CHECK(s.u == 0);
        CHECK(star_tree(5).is_leaf(s.v));
    }
}

TEST_CASE("cover recognition needs two internal endpoints") {
    LabelledTree p4 = path_tree(4);
    int covers = 0;
    for (const auto& s : shift_sites(p4)) covers += is_cover_shift(p4, s);
    CHECK(covers == 1);
    for (const auto& s : shift_sites(p4))
        if (is_cover_shift(p4, s)) {
            CHECK(s.u == 1);
            CHECK(s.v == 2);
            CHECK(is_isomorphic(apply_shift(p4, s), star_tree(4)));
        }
}

TEST_CASE("shift at a leaf endpoint is an isomorphism") {
    for (int n = 3; n <= 7; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (const auto& s : shift_sites(t))
                if (!is_cover_shift(t, s)) CHECK(is_isomorphic(apply_shift(t, s), t));
        }
}

TEST_CASE("shift direction does not matter up to isomorphism") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (const auto& s : shift_sites(t)) {
                ShiftSite rev{s.u, s.v, s.path};
                std::reverse(rev.path.begin(), rev.path.end());
                std::swap(rev.u, rev.v);
                CHECK(is_isomorphic(apply_shift(t, s), apply_shift(t, rev)));
            }
        }
}

TEST_CASE("cover shifts raise the leaf count by exactly one") {
    for (int n = 4; n <= 8; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (const auto& s : shift_sites(t))
                if (is_cover_shift(t, s))
                    CHECK(leaf_count(apply_shift(t, s)) == leaf_count(t) + 1);
        }
}

TEST_CASE("Hasse diagram for n=4 and n=5") {
    HasseDiagram h4 = build_hasse(4);
    REQUIRE(h4.nodes.size() == 2);
    REQUIRE(h4.covers.size() == 1);
    CHECK(h4.nodes[h4.covers[0].first] == canonical_code(path_tree(4)));
    CHECK(h4.nodes[h4.covers[0].second] == canonical_code(star_tree(4)));

    // n=5: path -> spider(2,1,1) -> star, nothing else.
    HasseDiagram h5 = build_hasse(5);
    LabelledTree spider211 = make_tree(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}});
    REQUIRE(h5.nodes.size() == 3);
    int p = h5.index_of(canonical_code(path_tree(5)));
    int m = h5.index_of(canonical_code(spider211));
    int s = h5.index_of(canonical_code(star_tree(5)));
    std::set<std::pair<int, int>> expected{{p, m}, {m, s}};
    CHECK(std::set<std::pair<int, int>>(h5.covers.begin(), h5.covers.end()) == expected);
}

TEST_CASE("Hasse diagram for n=6 matches the hand enumeration") {
    HasseDiagram h = build_hasse(6);
    REQUIRE(h.nodes.size() == 6);
    int path = h.index_of(canonical_code(path_tree(6)));
    int spider = h.index_of(canonical_code(spider_221()));
    int broom = h.index_of(canonical_code(broom_311()));
    int dstar = h.index_of(canonical_code(double_star()));
    int substar = h.index_of(canonical_code(subdivided_star()));
    int star = h.index_of(canonical_code(star_tree(6)));

    std::set<std::pair<int, int>> expected{{path, spider},   {path, broom},
                                           {spider, substar}, {broom, dstar},
                                           {broom, substar},  {dstar, star},
                                           {substar, star}};
    CHECK(std::set<std::pair<int, int>>(h.covers.begin(), h.covers.end()) == expected);

    // Grading by leaf count.
    for (auto [lo, hi] : h.covers)
        CHECK(leaf_count(decode(h.nodes[hi])) == leaf_count(decode(h.nodes[lo])) + 1);
}

TEST_CASE("path is the unique source and star the unique sink") {
    for (int n = 4; n <= 9; ++n) {
        HasseDiagram h = build_hasse(n);
        auto sources = hasse_sources(h);
        auto sinks = hasse_sinks(h);
        REQUIRE(sources.size() == 1);
        REQUIRE(sinks.size() == 1);
        CHECK(h.nodes[sources[0]] == canonical_code(path_tree(n)));
        CHECK(h.nodes[sinks[0]] == canonical_code(star_tree(n)));
    }
}

TEST_CASE("cover witnesses replay to the recorded upper class") {
    for (int n = 4; n <= 8; ++n) {
        HasseDiagram h = build_hasse(n);
        for (std::size_t k = 0; k < h.covers.size(); ++k) {
            LabelledTree lower = decode(h.nodes[h.covers[k].first]);
            CHECK(canonical_code(apply_shift(lower, h.witnesses[k])) ==
                  h.nodes[h.covers[k].second]);
        }
    }
}

TEST_CASE("cover decomposition sizes and parity") {
    // Explicit case: middle edge of the 6-path splits into K2 + two 3-paths.
    LabelledTree p6 = path_tree(6);
    ShiftSite mid{2, 3, {2, 3}};
    CoverDecomposition d = decompose_cover(p6, mid);
    CHECK(d.path_part.n == 2);
    CHECK(d.branch_u.n == 3);
    CHECK(d.branch_v.n == 3);
    CHECK(is_isomorphic(d.branch_u, path_tree(3)));

    for (int n = 4; n <= 8; ++n)
        for (const auto& code : enumerate_trees(n)) {
            LabelledTree t = decode(code);
            for (const auto& s : shift_sites(t)) {
                if (!is_cover_shift(t, s)) continue;
                CoverDecomposition dc = decompose_cover(t, s);
                CHECK(dc.path_part.n + dc.branch_u.n + dc.branch_v.n == n + 2);
                CHECK(dc.branch_u.n >= 2);
                CHECK(dc.branch_v.n >= 2);
                int odd = (dc.path_part.n % 2) + (dc.branch_u.n % 2) + (dc.branch_v.n % 2);
                if (n % 2 == 0)
                    CHECK((odd == 0 || odd == 2));
                else
                    CHECK((odd == 1 || odd == 3));
                // Attachment vertices carry the original endpoint degrees off the path.
                CHECK(dc.branch_u.degree(dc.branch_u_join) == t.degree(s.u) - 1);
                CHECK(dc.branch_v.degree(dc.branch_v_join) == t.degree(s.v) - 1);
            }
        }
}

TEST_CASE("poset serialization round trips") {
    HasseDiagram h = build_hasse(6);
    nlohmann::json j = hasse_to_json(h);
    HasseDiagram back = hasse_from_json(j);
    CHECK(back.n == h.n);
    CHECK(back.nodes == h.nodes);
    CHECK(back.covers == h.covers);

    std::string dot = hasse_to_dot(h);
    CHECK(dot.starts_with("digraph"));
    CHECK(std::count(dot.begin(), dot.end(), '\n') ==
          static_cast<long>(2 + h.nodes.size() + h.covers.size()));
    for (const auto& c : h.nodes)
        CHECK(dot.find("\"" + c.to_string() + "\"") != std::string::npos);
}
