#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "qlap/tree.hpp"

using namespace qlap;

TEST_CASE("canonical codes of paths and stars") {
    CHECK(canonical_code(path_tree(2)).to_string() == "0,1");
    CHECK(canonical_code(path_tree(6)).to_string() == "0,1,2,3,1,2");
    CHECK(canonical_code(star_tree(6)).to_string() == "0,1,1,1,1,1");
    CHECK(canonical_code(make_tree(1, {})).to_string() == "0");
}

TEST_CASE("tree centers") {
    CHECK(tree_centers(path_tree(6)) == std::vector<int>{2, 3});
    CHECK(tree_centers(path_tree(7)) == std::vector<int>{3});
    CHECK(tree_centers(star_tree(5)) == std::vector<int>{0});
}

TEST_CASE("TreeCode string round trip and validation") {
    TreeCode c = TreeCode::from_string("0,1,2,2,1,1");
    CHECK(c.to_string() == "0,1,2,2,1,1");
    CHECK(decode(c).n == 6);
    CHECK_THROWS_AS(TreeCode::from_string("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode::from_string("0,2"), std::invalid_argument);
    CHECK_THROWS_AS(TreeCode::from_string("0,1,3"), std::invalid_argument);
}

TEST_CASE("four-vertex trees via exhaustive Prufer sequences") {
    // All 16 labelled trees on 4 vertices collapse to exactly two classes.
    std::set<TreeCode> classes;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) classes.insert(canonical_code(prufer_decode({a, b})));
    REQUIRE(classes.size() == 2);
    CHECK(classes.count(canonical_code(path_tree(4))) == 1);
    CHECK(classes.count(canonical_code(star_tree(4))) == 1);

    auto enumerated = enumerate_trees(4);
    CHECK(std::vector<TreeCode>(classes.begin(), classes.end()) == enumerated);
}

TEST_CASE("enumeration agrees with the Prufer oracle") {
    for (int n = 2; n <= 8; ++n) {
        INFO("n = " << n);
        CHECK(enumerate_trees(n) == prufer_oracle(n));
    }
}

TEST_CASE("enumeration class counts") {
    const std::vector<std::size_t> counts{1,  1,  1,  2,   3,   6,    11,   23,
                                          47, 106, 235, 551, 1301, 3159, 7741, 19320};
    for (int n = 1; n <= 16; ++n) {
        INFO("n = " << n);
        CHECK(enumerate_trees(n).size() == counts[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(17), std::invalid_argument);
}

TEST_CASE("canonical code is invariant under relabelling") {
    std::mt19937_64 rng(20260823);
    for (int n = 7; n <= 12; ++n) {
        auto codes = enumerate_trees(n);
        // Deterministic sample to keep the sweep fast at larger n.
        std::size_t step = std::max<std::size_t>(1, codes.size() / 20);
        for (std::size_t i = 0; i < codes.size(); i += step) {
            LabelledTree t = decode(codes[i]);
            std::vector<int> perm(t.n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int rep = 0; rep < 100; ++rep) {
                std::shuffle(perm.begin(), perm.end(), rng);
                CHECK(canonical_code(relabel(t, perm)) == codes[i]);
            }
        }
    }
}

TEST_CASE("decode then encode is the identity on canonical codes") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& code : enumerate_trees(n)) CHECK(canonical_code(decode(code)) == code);
}

TEST_CASE("random trees decode consistently") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        LabelledTree t = random_tree(10, rng);
        CHECK(is_isomorphic(t, decode(canonical_code(t))));
    }
}

TEST_CASE("delete_leaf on a caterpillar") {
    // Spine 0-1-2-3 plus a leg at vertex 1; removing the tail leaf 3 leaves a star.
    LabelledTree cat = make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    LeafDeletion del = delete_leaf(cat, 3);
    CHECK(del.tree.n == 4);
    CHECK(canonical_code(del.tree) == canonical_code(star_tree(4)));
    CHECK(del.old_to_new == std::vector<int>{0, 1, 2, -1, 3});
    CHECK(del.neighbor == 2);

    CHECK_THROWS_AS(delete_leaf(cat, 1), std::invalid_argument);
    CHECK_THROWS_AS(delete_leaf(make_tree(1, {}), 0), std::invalid_argument);
}

TEST_CASE("path utilities") {
    LabelledTree p = path_tree(6);
    CHECK(path_between(p, 0, 5) == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(path_between(p, 4, 2) == std::vector<int>{4, 3, 2});
    CHECK(bfs_distances(p, 0)[5] == 5);
    CHECK(bfs_distances(star_tree(7), 3)[4] == 2);
}

TEST_CASE("make_tree validation") {
    CHECK_THROWS_AS(make_tree(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(4, {{0, 1}, {2, 3}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(2, {{0, 2}}), std::invalid_argument);
}
