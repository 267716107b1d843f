#pragma once

// Unlabelled trees: labelled adjacency structure, canonical level-sequence
// codes (rooted at the tree center), exhaustive enumeration per vertex count,
// and a brute-force Prufer-sequence generator used as an independent oracle.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlap {

// A tree on vertices 0..n-1 held as sorted adjacency lists plus an edge list.
struct LabelledTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // each (a,b) with a < b
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool is_leaf(int v) const { return degree(v) == 1; }
};

inline LabelledTree make_tree(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("make_tree: n must be >= 1");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("make_tree: a tree on n vertices has n-1 edges");
    LabelledTree t;
    t.n = n;
    t.adj.assign(n, {});
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n || a == b)
            throw std::invalid_argument("make_tree: edge endpoint out of range");
        t.adj[a].push_back(b);
        t.adj[b].push_back(a);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("make_tree: duplicate edge");
    t.edges = std::move(edges);
    for (auto& nb : t.adj) std::sort(nb.begin(), nb.end());
    // Connectivity: n-1 distinct edges + connected <=> tree.
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : t.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != n) throw std::invalid_argument("make_tree: graph is not connected");
    return t;
}

// BFS distances from src.
inline std::vector<int> bfs_distances(const LabelledTree& t, int src) {
    std::vector<int> dist(t.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

// Unique path between u and v, endpoints included.
inline std::vector<int> path_between(const LabelledTree& t, int u, int v) {
    std::vector<int> parent(t.n, -1);
    std::queue<int> q;
    parent[u] = u;
    q.push(u);
    while (!q.empty() && parent[v] < 0) {
        int a = q.front();
        q.pop();
        for (int w : t.adj[a])
            if (parent[w] < 0) {
                parent[w] = a;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int w = v; w != u; w = parent[w]) path.push_back(w);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

// Tree center(s) by repeated leaf removal: one or two adjacent vertices.
inline std::vector<int> tree_centers(const LabelledTree& t) {
    if (t.n == 1) return {0};
    if (t.n == 2) return {0, 1};
    std::vector<int> deg(t.n);
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : t.adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// Canonical code: the level sequence of the tree rooted at its center, with
// sibling subtrees ordered so the sequence is lexicographically greatest among
// orderings; for bicentral trees the smaller of the two center-rooted codes.
struct TreeCode {
    std::vector<int> levels;

    auto operator<=>(const TreeCode&) const = default;

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (i) os << ',';
            os << levels[i];
        }
        return os.str();
    }

    static TreeCode from_string(const std::string& s) {
        TreeCode c;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("TreeCode: empty token");
            c.levels.push_back(std::stoi(tok));
        }
        if (c.levels.empty() || c.levels[0] != 0)
            throw std::invalid_argument("TreeCode: sequence must start at level 0");
        for (std::size_t i = 1; i < c.levels.size(); ++i)
            if (c.levels[i] < 1 || c.levels[i] > c.levels[i - 1] + 1)
                throw std::invalid_argument("TreeCode: invalid level sequence");
        return c;
    }
};

namespace detail {

// Level sequence (depths relative to v) of the subtree at v, children ordered
// descending so isomorphic subtrees produce identical sequences.
inline std::vector<int> rooted_level_sequence(const LabelledTree& t, int v, int parent) {
    std::vector<std::vector<int>> child_seqs;
    for (int w : t.adj[v])
        if (w != parent) child_seqs.push_back(rooted_level_sequence(t, w, v));
    std::sort(child_seqs.begin(), child_seqs.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a > b; });
    std::vector<int> seq{0};
    for (const auto& cs : child_seqs)
        for (int d : cs) seq.push_back(d + 1);
    return seq;
}

}  // namespace detail

inline TreeCode canonical_code(const LabelledTree& t) {
    std::vector<int> cs = tree_centers(t);
    TreeCode best;
    for (int c : cs) {
        TreeCode cand{detail::rooted_level_sequence(t, c, -1)};
        if (best.levels.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

inline bool is_isomorphic(const LabelledTree& a, const LabelledTree& b) {
    return a.n == b.n && canonical_code(a) == canonical_code(b);
}

// Rebuild a labelled tree from a level sequence; vertex i is the i-th entry.
inline LabelledTree decode(const TreeCode& code) {
    int n = static_cast<int>(code.levels.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;  // stack[d] = latest vertex seen at depth d
    for (int i = 0; i < n; ++i) {
        int d = code.levels[i];
        stack.resize(d);
        if (d > 0) edges.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return make_tree(n, std::move(edges));
}

inline LabelledTree relabel(const LabelledTree& t, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.edges.size());
    for (auto [a, b] : t.edges) edges.emplace_back(perm[a], perm[b]);
    return make_tree(t.n, std::move(edges));
}

// All isomorphism classes of trees on n vertices, 1 <= n <= 16, as sorted
// canonical codes.  Rooted trees are generated by the constant-amortized-time
// level-sequence successor rule and reduced to free trees via canonical codes.
inline std::vector<TreeCode> enumerate_trees(int n) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("enumerate_trees: supported range is 1 <= n <= 16");
    if (n == 1) return {TreeCode{{0}}};
    std::set<TreeCode> classes;
    std::vector<int> L(n);
    for (int i = 0; i < n; ++i) L[i] = i;  // path, the lexicographically greatest sequence
    for (;;) {
        classes.insert(canonical_code(decode(TreeCode{L})));
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (L[i] >= 2) {
                p = i;
                break;
            }
        if (p < 0) break;  // reached the star
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (L[i] == L[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
    }
    return {classes.begin(), classes.end()};
}

// Decode a Prufer sequence over {0..n-1} of length n-2 into a labelled tree.
inline LabelledTree prufer_decode(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return make_tree(n, std::move(edges));
}

// Independent enumeration oracle: canonicalize all n^(n-2) Prufer sequences.
// Exponential by design; bounded to keep runtime sane.
inline std::vector<TreeCode> prufer_oracle(int n) {
    if (n < 2 || n > 9)
        throw std::invalid_argument("prufer_oracle: supported range is 2 <= n <= 9");
    std::set<TreeCode> classes;
    if (n == 2) {
        classes.insert(canonical_code(prufer_decode({})));
        return {classes.begin(), classes.end()};
    }
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        classes.insert(canonical_code(prufer_decode(seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return {classes.begin(), classes.end()};
}

// Remove leaf v; remaining vertices are renumbered to stay contiguous.
struct LeafDeletion {
    LabelledTree tree;
    std::vector<int> old_to_new;  // old label -> new label, deleted leaf -> -1
    int neighbor = -1;            // new label of the deleted leaf's neighbor
};

inline LeafDeletion delete_leaf(const LabelledTree& t, int leaf) {
    if (t.n < 2) throw std::invalid_argument("delete_leaf: tree has no removable vertex");
    if (leaf < 0 || leaf >= t.n || !t.is_leaf(leaf))
        throw std::invalid_argument("delete_leaf: vertex is not a leaf");
    LeafDeletion out;
    out.old_to_new.assign(t.n, -1);
    int next = 0;
    for (int v = 0; v < t.n; ++v)
        if (v != leaf) out.old_to_new[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : t.edges)
        if (a != leaf && b != leaf)
            edges.emplace_back(out.old_to_new[a], out.old_to_new[b]);
    out.tree = make_tree(t.n - 1, std::move(edges));
    out.neighbor = out.old_to_new[t.adj[leaf][0]];
    return out;
}

// Uniform random labelled tree via a random Prufer sequence.
inline LabelledTree random_tree(int n, std::mt19937_64& rng) {
    if (n == 1) return make_tree(1, {});
    if (n == 2) return make_tree(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& v : seq) v = pick(rng);
    return prufer_decode(seq);
}

// Convenience constructors.
inline LabelledTree path_tree(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_tree(n, std::move(edges));
}

inline LabelledTree star_tree(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return make_tree(n, std::move(edges));
}

}  // namespace qlap
