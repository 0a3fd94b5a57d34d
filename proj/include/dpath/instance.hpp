#pragma once

#include <optional>
#include <set>

#include "graph.hpp"

namespace dpath {

using PathSet = std::vector<std::vector<int>>;

// Supply graph + terminals + demand graph + target path count.
// The demand graph lives on the same vertex ids; demand edges join terminals.
struct Instance {
    Graph g;
    std::vector<int> terminals;                    // sorted
    std::vector<std::pair<int, int>> demand;       // sorted pairs (u < v)
    int k = 0;
    std::vector<long long> mu;                     // optional skew labels (empty if unused)

    std::vector<char> terminal_mask() const { return mask_of(g.n, terminals); }

    bool is_terminal(int v) const {
        return std::binary_search(terminals.begin(), terminals.end(), v);
    }

    bool demand_adjacent(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(demand.begin(), demand.end(), std::make_pair(u, v));
    }

    std::vector<std::vector<int>> demand_adj() const {
        std::vector<std::vector<int>> a(g.n);
        for (auto [u, v] : demand) {
            a[u].push_back(v);
            a[v].push_back(u);
        }
        for (auto &r : a) std::sort(r.begin(), r.end());
        return a;
    }

    void normalize() {
        std::sort(terminals.begin(), terminals.end());
        terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
        for (auto &e : demand)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(demand.begin(), demand.end());
        demand.erase(std::unique(demand.begin(), demand.end()), demand.end());
    }

    void check_valid() const {
        if (k < 0) throw std::invalid_argument("k must be non-negative");
        for (int t : terminals)
            if (t < 0 || t >= g.n) throw std::invalid_argument("terminal id out of range");
        for (auto [u, v] : demand) {
            if (u == v) throw std::invalid_argument("demand self-loop");
            if (!is_terminal(u) || !is_terminal(v))
                throw std::invalid_argument("demand endpoint is not a terminal");
        }
    }
};

inline bool is_path_of(const Graph &g, const std::vector<int> &p) {
    if (p.empty()) return false;
    std::set<int> seen(p.begin(), p.end());
    if (seen.size() != p.size()) return false;
    for (size_t i = 0; i + 1 < p.size(); i++)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

// A valid path: a supply path whose endpoints are demand-adjacent terminals.
inline bool is_valid_path(const Instance &inst, const std::vector<int> &p) {
    if (!is_path_of(inst.g, p)) throw std::invalid_argument("not a path of the supply graph");
    if (p.size() < 2) return false;  // simple demand graph: no self-loops
    int a = p.front(), b = p.back();
    return inst.is_terminal(a) && inst.is_terminal(b) && inst.demand_adjacent(a, b);
}

inline bool verify_solution(const Instance &inst, const PathSet &sol) {
    if ((int)sol.size() < inst.k) return false;
    std::vector<char> used(inst.g.n, 0);
    for (auto &p : sol) {
        if (!is_path_of(inst.g, p)) return false;
        if (p.size() < 2) return false;
        if (!inst.is_terminal(p.front()) || !inst.is_terminal(p.back())) return false;
        if (!inst.demand_adjacent(p.front(), p.back())) return false;
        for (int v : p) {
            if (used[v]) return false;
            used[v] = 1;
        }
    }
    return true;
}

// Z hits every valid path iff no component of G - Z contains a demand edge.
inline bool verify_hitting_set(const Instance &inst, const std::vector<int> &z) {
    std::vector<char> alive(inst.g.n, 1);
    for (int v : z) {
        if (v < 0 || v >= inst.g.n) return false;
        alive[v] = 0;
    }
    auto comp = inst.g.components(alive);
    for (auto [u, v] : inst.demand)
        if (alive[u] && alive[v] && comp[u] == comp[v]) return false;
    return true;
}

// Result of attaching a fresh degree-1 terminal to every original terminal.
// Original vertices keep their ids; pendant i sits at original_n + i.
struct Preprocessed {
    Instance inst;
    std::vector<int> pendant_of;   // original terminal id -> pendant id (or -1)
    std::vector<int> original_of;  // pendant id -> original terminal id (or -1)
    int original_n = 0;

    std::vector<int> map_vertex_set_back(const std::vector<int> &zs) const {
        std::set<int> out;
        for (int z : zs) out.insert(original_of[z] >= 0 ? original_of[z] : z);
        return std::vector<int>(out.begin(), out.end());
    }

    std::vector<int> map_path_back(const std::vector<int> &p) const {
        // endpoints are pendants; drop them, their hosts are already on the path
        std::vector<int> q;
        for (int v : p)
            if (original_of[v] < 0) q.push_back(v);
        return q;
    }

    PathSet map_paths_back(const PathSet &ps) const {
        PathSet out;
        for (auto &p : ps) out.push_back(map_path_back(p));
        return out;
    }

    std::vector<int> map_terminals_back(const std::vector<int> &ts) const {
        std::vector<int> out;
        for (int t : ts) out.push_back(original_of[t] >= 0 ? original_of[t] : t);
        return out;
    }
};

inline Preprocessed attach_degree_one_terminals(const Instance &inst) {
    inst.check_valid();
    Preprocessed pre;
    pre.original_n = inst.g.n;
    pre.inst.g = inst.g;
    pre.pendant_of.assign(inst.g.n, -1);
    pre.original_of.assign(inst.g.n, -1);
    bool keep_rot = !inst.g.rot.empty();
    for (int t : inst.terminals) {
        int p = pre.inst.g.add_vertex();
        pre.original_of.push_back(t);
        pre.pendant_of[t] = p;
        pre.inst.g.add_edge(t, p);
        if (keep_rot) {
            pre.inst.g.rot.resize(pre.inst.g.n);
            pre.inst.g.rot[t].push_back(p);
            pre.inst.g.rot[p] = {t};
        }
        pre.inst.terminals.push_back(p);
    }
    for (auto [u, v] : inst.demand)
        pre.inst.demand.push_back({pre.pendant_of[u], pre.pendant_of[v]});
    pre.inst.k = inst.k;
    if (!inst.mu.empty()) {
        pre.inst.mu.assign(pre.inst.g.n, 0);
        for (int t : inst.terminals) pre.inst.mu[pre.pendant_of[t]] = inst.mu[t];
    }
    pre.inst.normalize();
    return pre;
}

// True iff T is an independent set of degree-1 vertices.
inline bool terminals_independent_degree_one(const Instance &inst) {
    for (int t : inst.terminals) {
        if (inst.g.degree(t) != 1) return false;
        for (int u : inst.g.adj[t])
            if (inst.is_terminal(u)) return false;
    }
    return true;
}

}  // namespace dpath
