#pragma once

#include "graph.hpp"

namespace dpath {

// A separation (A,B): side vertex sets covering V with no edge between
// A \ B and B \ A. Edges inside the intersection belong to side A.
struct Separation {
    std::vector<char> in_a, in_b;

    Separation() = default;
    Separation(std::vector<char> a, std::vector<char> b) : in_a(std::move(a)), in_b(std::move(b)) {}

    int order() const {
        int c = 0;
        for (size_t v = 0; v < in_a.size(); v++)
            if (in_a[v] && in_b[v]) c++;
        return c;
    }

    std::vector<int> intersection() const {
        std::vector<int> r;
        for (size_t v = 0; v < in_a.size(); v++)
            if (in_a[v] && in_b[v]) r.push_back((int)v);
        return r;
    }

    std::vector<int> side_a_vertices() const { return list_of(in_a); }
    std::vector<int> side_b_vertices() const { return list_of(in_b); }

    std::vector<int> strict_a() const {
        std::vector<int> r;
        for (size_t v = 0; v < in_a.size(); v++)
            if (in_a[v] && !in_b[v]) r.push_back((int)v);
        return r;
    }
    std::vector<int> strict_b() const {
        std::vector<int> r;
        for (size_t v = 0; v < in_a.size(); v++)
            if (in_b[v] && !in_a[v]) r.push_back((int)v);
        return r;
    }

    bool valid(const Graph &g) const {
        if ((int)in_a.size() != g.n || (int)in_b.size() != g.n) return false;
        for (int v = 0; v < g.n; v++)
            if (!in_a[v] && !in_b[v]) return false;
        for (int u = 0; u < g.n; u++)
            for (int v : g.adj[u])
                if (in_a[u] && !in_b[u] && in_b[v] && !in_a[v]) return false;
        return true;
    }
};

// Side A as a graph: all edges with both ends in A (intersection edges
// included by convention). Side B: edges with at least one end in B \ A.
inline Sub side_graph(const Graph &g, const Separation &s, bool side_a) {
    if (side_a)
        return take_subgraph(g, s.in_a);
    return take_subgraph(g, s.in_b, [&](int u, int v) {
        bool u_strict = s.in_b[u] && !s.in_a[u];
        bool v_strict = s.in_b[v] && !s.in_a[v];
        return u_strict || v_strict;
    });
}

// Separation with side_b = (component C) + boundary S, side_a = everything else.
inline Separation separation_around(const Graph &g, const std::vector<char> &component,
                                    const std::vector<int> &boundary) {
    std::vector<char> a(g.n, 1), b(g.n, 0);
    for (int v = 0; v < g.n; v++)
        if (component[v]) {
            a[v] = 0;
            b[v] = 1;
        }
    for (int v : boundary) {
        a[v] = 1;
        b[v] = 1;
    }
    return Separation(a, b);
}

// Enumerate every separation of a small graph: choose the intersection S and
// a union of components of G - S as the strict B side.
inline std::vector<Separation> enumerate_all_separations(const Graph &g) {
    if (g.n > 14) throw std::invalid_argument("enumerate_all_separations: graph too large");
    std::vector<Separation> out;
    for (int smask = 0; smask < (1 << g.n); smask++) {
        std::vector<char> alive(g.n, 1);
        std::vector<int> svs;
        for (int v = 0; v < g.n; v++)
            if (smask >> v & 1) {
                alive[v] = 0;
                svs.push_back(v);
            }
        auto comp = g.components(alive);
        int nc = 0;
        for (int v = 0; v < g.n; v++) nc = std::max(nc, comp[v] + 1);
        for (int cmask = 0; cmask < (1 << nc); cmask++) {
            std::vector<char> a(g.n, 0), b(g.n, 0);
            for (int v = 0; v < g.n; v++) {
                if (smask >> v & 1) {
                    a[v] = b[v] = 1;
                } else if (cmask >> comp[v] & 1) {
                    b[v] = 1;
                } else {
                    a[v] = 1;
                }
            }
            out.push_back(Separation(std::move(a), std::move(b)));
        }
    }
    return out;
}

}  // namespace dpath
