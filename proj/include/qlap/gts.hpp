#pragma once

// Generalized tree shift: shift sites, the shift itself, cover recognition,
// the Hasse diagram of the induced partial order on isomorphism classes, and
// the path/branch decomposition attached to a cover.

#include <map>
#include <optional>
#include <set>

#include <nlohmann/json.hpp>

#include "qlap/tree.hpp"

namespace qlap {

// An admissible shift location: endpoints u < v whose connecting path has all
// interior vertices of degree 2.
struct ShiftSite {
    int u = -1;
    int v = -1;
    std::vector<int> path;  // from u to v, endpoints included

    friend bool operator==(const ShiftSite&, const ShiftSite&) = default;
};

inline std::vector<ShiftSite> shift_sites(const LabelledTree& t) {
    std::vector<ShiftSite> sites;
    for (int u = 0; u < t.n; ++u)
        for (int v = u + 1; v < t.n; ++v) {
            std::vector<int> path = path_between(t, u, v);
            bool ok = true;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (t.degree(path[i]) != 2) {
                    ok = false;
                    break;
                }
            if (ok) sites.push_back({u, v, std::move(path)});
        }
    return sites;
}

// Shift at a site: every neighbor of v off the path is re-attached to u.
// Keeps the vertex set; when either endpoint is a leaf the result is an
// isomorphic copy of the input, otherwise it moves strictly up the order.
inline LabelledTree apply_shift(const LabelledTree& t, const ShiftSite& s) {
    if (s.path.size() < 2 || s.path.front() != s.u || s.path.back() != s.v)
        throw std::invalid_argument("apply_shift: malformed site");
    int path_neighbor_of_v = s.path[s.path.size() - 2];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.edges.size());
    for (auto [a, b] : t.edges) {
        if (a == s.v && b != path_neighbor_of_v)
            edges.emplace_back(s.u, b);
        else if (b == s.v && a != path_neighbor_of_v)
            edges.emplace_back(a, s.u);
        else
            edges.emplace_back(a, b);
    }
    return make_tree(t.n, std::move(edges));
}

// A shift produces a cover of the order exactly when both endpoints are
// internal vertices; such a shift raises the leaf count by one.
inline bool is_cover_shift(const LabelledTree& t, const ShiftSite& s) {
    return t.degree(s.u) >= 2 && t.degree(s.v) >= 2;
}

// Hasse diagram over the isomorphism classes of trees on n vertices.
// nodes are sorted canonical codes; covers (i, j) point from the lower class
// i to the upper class j; witness[k] is a site on decode(nodes[covers[k].first])
// realizing cover k.
struct HasseDiagram {
    int n = 0;
    std::vector<TreeCode> nodes;
    std::vector<std::pair<int, int>> covers;
    std::vector<ShiftSite> witnesses;

    int index_of(const TreeCode& c) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
        if (it == nodes.end() || *it != c)
            throw std::invalid_argument("HasseDiagram: unknown code " + c.to_string());
        return static_cast<int>(it - nodes.begin());
    }
};

inline HasseDiagram build_hasse(int n) {
    if (n < 2 || n > 12)
        throw std::invalid_argument("build_hasse: supported range is 2 <= n <= 12");
    HasseDiagram h;
    h.n = n;
    h.nodes = enumerate_trees(n);
    std::map<std::pair<int, int>, ShiftSite> edge_witness;
    for (int i = 0; i < static_cast<int>(h.nodes.size()); ++i) {
        LabelledTree rep = decode(h.nodes[i]);
        for (const ShiftSite& s : shift_sites(rep)) {
            if (!is_cover_shift(rep, s)) continue;
            int j = h.index_of(canonical_code(apply_shift(rep, s)));
            if (j == i)
                throw std::logic_error("build_hasse: cover shift fixed an isomorphism class");
            edge_witness.try_emplace({i, j}, s);
        }
    }
    for (auto& [edge, site] : edge_witness) {
        h.covers.push_back(edge);
        h.witnesses.push_back(site);
    }
    return h;
}

// Path subtree and the two branch subtrees determined by a cover site, each
// relabelled contiguously with its attachment vertex recorded.
struct CoverDecomposition {
    LabelledTree path_part;  // the site path as a standalone path tree
    LabelledTree branch_u;   // component of u after removing the path edges
    LabelledTree branch_v;   // component of v after removing the path edges
    int path_join_u = -1;    // label of u inside path_part
    int path_join_v = -1;    // label of v inside path_part
    int branch_u_join = -1;  // label of u inside branch_u
    int branch_v_join = -1;  // label of v inside branch_v
};

inline CoverDecomposition decompose_cover(const LabelledTree& t, const ShiftSite& s) {
    if (!is_cover_shift(t, s))
        throw std::invalid_argument("decompose_cover: site is not a cover shift");
    CoverDecomposition out;

    int k = static_cast<int>(s.path.size());
    std::vector<std::pair<int, int>> path_edges;
    for (int i = 0; i + 1 < k; ++i) path_edges.emplace_back(i, i + 1);
    out.path_part = make_tree(k, std::move(path_edges));
    out.path_join_u = 0;
    out.path_join_v = k - 1;

    std::set<std::pair<int, int>> on_path;
    for (int i = 0; i + 1 < k; ++i) {
        int a = s.path[i], b = s.path[i + 1];
        on_path.insert(std::minmax(a, b));
    }

    auto component = [&](int root) {
        std::vector<int> verts{root};
        std::vector<char> seen(t.n, 0);
        seen[root] = 1;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (int w : t.adj[verts[i]]) {
                if (seen[w] || on_path.count(std::minmax(verts[i], w))) continue;
                seen[w] = 1;
                verts.push_back(w);
            }
        std::sort(verts.begin(), verts.end());
        std::map<int, int> to_new;
        for (std::size_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : t.edges)
            if (to_new.count(a) && to_new.count(b) && !on_path.count(std::minmax(a, b)))
                edges.emplace_back(to_new[a], to_new[b]);
        return std::pair{make_tree(static_cast<int>(verts.size()), std::move(edges)),
                         to_new[root]};
    };
    std::tie(out.branch_u, out.branch_u_join) = component(s.u);
    std::tie(out.branch_v, out.branch_v_join) = component(s.v);
    return out;
}

// ----- serialization -----

inline std::string hasse_to_dot(const HasseDiagram& h) {
    std::ostringstream os;
    os << "digraph shift_poset_" << h.n << " {\n";
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << h.nodes[i].to_string() << "\"];\n";
    for (auto [lo, hi] : h.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

inline nlohmann::json hasse_to_json(const HasseDiagram& h) {
    nlohmann::json j;
    j["n"] = h.n;
    j["nodes"] = nlohmann::json::array();
    for (const auto& c : h.nodes) j["nodes"].push_back(c.to_string());
    j["covers"] = nlohmann::json::array();
    for (auto [lo, hi] : h.covers) j["covers"].push_back({lo, hi});
    return j;
}

inline HasseDiagram hasse_from_json(const nlohmann::json& j) {
    HasseDiagram h;
    h.n = j.at("n").get<int>();
    for (const auto& s : j.at("nodes")) h.nodes.push_back(TreeCode::from_string(s.get<std::string>()));
    for (const auto& e : j.at("covers"))
        h.covers.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return h;
}

// Indices of classes with no incoming / no outgoing cover, for sanity checks.
inline std::vector<int> hasse_sources(const HasseDiagram& h) {
    std::vector<char> has_in(h.nodes.size(), 0);
    for (auto [lo, hi] : h.covers) {
        (void)lo;
        has_in[hi] = 1;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
        if (!has_in[i]) out.push_back(static_cast<int>(i));
    return out;
}

inline std::vector<int> hasse_sinks(const HasseDiagram& h) {
    std::vector<char> has_out(h.nodes.size(), 0);
    for (auto [lo, hi] : h.covers) {
        (void)hi;
        has_out[lo] = 1;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
        if (!has_out[i]) out.push_back(static_cast<int>(i));
    return out;
}

inline int leaf_count(const LabelledTree& t) {
    int c = 0;
    for (int v = 0; v < t.n; ++v) c += t.is_leaf(v);
    return c;
}

}  // namespace qlap
