#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpath {

// Undirected simple graph over dense vertex ids 0..n-1.
// Optionally carries a rotation system (cyclic neighbor order per vertex)
// when the graph was built by one of the planar generators.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;     // sorted neighbor lists
    std::vector<std::vector<int>> rot;     // combinatorial embedding, may be empty

    Graph() = default;
    explicit Graph(int nv) : n(nv), adj(nv) {}

    int add_vertex() {
        adj.emplace_back();
        if (!rot.empty()) rot.emplace_back();
        return n++;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n || v >= n) return false;
        const auto &a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint");
        if (has_edge(u, v)) return;
        adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::upper_bound(adj[v].begin(), adj[v].end(), u), u);
    }

    int degree(int v) const { return (int)adj[v].size(); }

    long long edge_count() const {
        long long m = 0;
        for (auto &a : adj) m += (long long)a.size();
        return m / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; u++)
            for (int v : adj[u])
                if (u < v) es.push_back({u, v});
        return es;
    }

    // Component labels restricted to `alive` vertices; -1 for dead vertices.
    std::vector<int> components(const std::vector<char> &alive) const {
        std::vector<int> comp(n, -1);
        int c = 0;
        std::vector<int> stack;
        for (int s = 0; s < n; s++) {
            if (!alive[s] || comp[s] >= 0) continue;
            comp[s] = c;
            stack.assign(1, s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : adj[u])
                    if (alive[v] && comp[v] < 0) {
                        comp[v] = c;
                        stack.push_back(v);
                    }
            }
            c++;
        }
        return comp;
    }

    std::vector<int> components_all() const {
        return components(std::vector<char>(n, 1));
    }

    // Shortest path between u and v using only `alive` vertices, or empty.
    std::vector<int> bfs_path(int u, int v, const std::vector<char> &alive) const {
        if (!alive[u] || !alive[v]) return {};
        std::vector<int> par(n, -2);
        std::queue<int> q;
        par[u] = -1;
        q.push(u);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (x == v) break;
            for (int y : adj[x])
                if (alive[y] && par[y] == -2) {
                    par[y] = x;
                    q.push(y);
                }
        }
        if (par[v] == -2) return {};
        std::vector<int> path;
        for (int x = v; x != -1; x = par[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
    }
};

// A materialized subgraph together with the original vertex ids.
struct Sub {
    Graph g;
    std::vector<int> orig;  // local id -> parent id

    std::vector<int> to_orig(const std::vector<int> &local) const {
        std::vector<int> r;
        r.reserve(local.size());
        for (int v : local) r.push_back(orig[v]);
        return r;
    }
};

// Induced subgraph on `keep`, restricted to edges accepted by `edge_ok`.
inline Sub take_subgraph(const Graph &g, const std::vector<char> &keep,
                         const std::function<bool(int, int)> &edge_ok = nullptr) {
    Sub s;
    std::vector<int> local(g.n, -1);
    for (int v = 0; v < g.n; v++)
        if (keep[v]) {
            local[v] = (int)s.orig.size();
            s.orig.push_back(v);
        }
    s.g = Graph((int)s.orig.size());
    for (int v = 0; v < g.n; v++) {
        if (!keep[v]) continue;
        for (int w : g.adj[v]) {
            if (w <= v || !keep[w]) continue;
            if (edge_ok && !edge_ok(v, w)) continue;
            s.g.add_edge(local[v], local[w]);
        }
    }
    return s;
}

inline std::vector<char> mask_of(int n, const std::vector<int> &vs) {
    std::vector<char> m(n, 0);
    for (int v : vs) m[v] = 1;
    return m;
}

inline std::vector<int> list_of(const std::vector<char> &m) {
    std::vector<int> r;
    for (int v = 0; v < (int)m.size(); v++)
        if (m[v]) r.push_back(v);
    return r;
}

// Euler-formula check of the stored rotation system: every connected
// component must satisfy V - E + F = 2 under face tracing.
inline bool rotation_is_planar(const Graph &g) {
    if ((int)g.rot.size() != g.n) return false;
    for (int v = 0; v < g.n; v++) {
        if (g.rot[v].size() != g.adj[v].size()) return false;
        auto s = g.rot[v];
        std::sort(s.begin(), s.end());
        if (s != g.adj[v]) return false;
    }
    std::vector<std::vector<std::pair<int, int>>> at(g.n);
    for (int v = 0; v < g.n; v++) {
        for (int i = 0; i < (int)g.rot[v].size(); i++) at[v].push_back({g.rot[v][i], i});
        std::sort(at[v].begin(), at[v].end());
    }
    auto idx = [&](int v, int u) {
        auto it = std::lower_bound(at[v].begin(), at[v].end(), std::make_pair(u, -1));
        return it->second;
    };
    // trace faces of each component
    std::vector<int> comp = g.components_all();
    int ncomp = comp.empty() ? 0 : (*std::max_element(comp.begin(), comp.end())) + 1;
    std::vector<long long> vs(ncomp, 0), es(ncomp, 0), fs(ncomp, 0);
    for (int v = 0; v < g.n; v++) {
        vs[comp[v]]++;
        es[comp[v]] += g.degree(v);
    }
    std::vector<std::vector<char>> used(g.n);
    for (int v = 0; v < g.n; v++) used[v].assign(g.rot[v].size(), 0);
    for (int v = 0; v < g.n; v++) {
        if (g.degree(v) == 0) fs[comp[v]] = std::max(fs[comp[v]], 1LL);
        for (int i = 0; i < (int)g.rot[v].size(); i++) {
            if (used[v][i]) continue;
            // walk the face starting at directed edge (v -> rot[v][i])
            int cu = v, ci = i;
            while (!used[cu][ci]) {
                used[cu][ci] = 1;
                int cv = g.rot[cu][ci];
                int j = idx(cv, cu);
                ci = (j + 1) % (int)g.rot[cv].size();
                cu = cv;
            }
            fs[comp[v]]++;
        }
    }
    for (int c = 0; c < ncomp; c++) {
        long long e2 = es[c] / 2;
        long long f = vs[c] == 1 && e2 == 0 ? 1 : fs[c];
        if (vs[c] - e2 + f != 2) return false;
    }
    return true;
}

}  // namespace dpath
