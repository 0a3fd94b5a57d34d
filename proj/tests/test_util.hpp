#pragma once

#include <random>

#include "dpath/instance.hpp"

// Shared helpers for the test suites: tiny instance builders and seeded
// random generators.
namespace tutil {

using namespace dpath;

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; i++) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) g.add_edge(i, j);
    return g;
}

inline Graph grid_graph(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; r++)
        for (int c = 0; c < cols; c++) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

// The running star example: center 0, leaves a1,a2,b1,b2 = 1..4,
// demand a1b1, a2b2.
inline Instance star_example() {
    Instance inst;
    inst.g = Graph(5);
    for (int v = 1; v <= 4; v++) inst.g.add_edge(0, v);
    inst.terminals = {1, 2, 3, 4};
    inst.demand = {{1, 3}, {2, 4}};
    inst.k = 2;
    inst.normalize();
    return inst;
}

inline Graph random_graph(std::mt19937 &rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> d(0, 1);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (d(rng) < p) g.add_edge(i, j);
    return g;
}

inline Graph random_connected_graph(std::mt19937 &rng, int n, double p) {
    Graph g = random_graph(rng, n, p);
    // connect components along a random spanning chain
    auto comp = g.components_all();
    std::vector<int> rep;
    std::vector<char> seen;
    for (int v = 0; v < n; v++) {
        if ((int)seen.size() <= comp[v]) seen.resize(comp[v] + 1, 0);
        if (!seen[comp[v]]) {
            seen[comp[v]] = 1;
            rep.push_back(v);
        }
    }
    for (size_t i = 1; i < rep.size(); i++) g.add_edge(rep[i - 1], rep[i]);
    return g;
}

inline Instance random_instance(std::mt19937 &rng, int n, double pe, int nterm, double pd, int k) {
    Instance inst;
    inst.g = random_graph(rng, n, pe);
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::shuffle(vs.begin(), vs.end(), rng);
    nterm = std::min(nterm, n);
    inst.terminals.assign(vs.begin(), vs.begin() + nterm);
    std::uniform_real_distribution<double> d(0, 1);
    for (int i = 0; i < nterm; i++)
        for (int j = i + 1; j < nterm; j++)
            if (d(rng) < pd) inst.demand.push_back({inst.terminals[i], inst.terminals[j]});
    inst.k = k;
    inst.normalize();
    return inst;
}

}  // namespace tutil
