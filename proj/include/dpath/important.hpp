#pragma once

#include <set>

#include "search.hpp"
#include "separation.hpp"

namespace dpath {

struct ImportantSeparator {
    std::vector<int> vertices;      // the separator S, sorted
    std::vector<char> reach;        // union K of components of G-S meeting X
};

namespace detail {

inline std::vector<char> reach_of(const Graph &g, const std::vector<int> &X,
                                  const std::vector<int> &S, const std::vector<char> &alive0) {
    std::vector<char> alive = alive0;
    for (int v : S) alive[v] = 0;
    auto comp = g.components(alive);
    std::set<int> xs;
    for (int x : X)
        if (alive[x] && comp[x] >= 0) xs.insert(comp[x]);
    std::vector<char> r(g.n, 0);
    for (int v = 0; v < g.n; v++)
        if (alive[v] && xs.count(comp[v])) r[v] = 1;
    return r;
}

inline bool separates(const Graph &g, const std::vector<int> &X, const std::vector<int> &Y,
                      const std::vector<int> &S, const std::vector<char> &alive) {
    auto r = reach_of(g, X, S, alive);
    for (int y : Y)
        if (r[y]) return false;
    return true;
}

}  // namespace detail

// Exact importance test per the definition: S is an X-Y separator, disjoint
// from X u Y, inclusion-minimal, and no separator of size <= |S| has a
// strictly larger X-side reach. The last condition is decided by computing
// the farthest minimum K-Y cut for K = reach(S).
inline bool is_important_separator(const Graph &g, const std::vector<int> &X,
                                   const std::vector<int> &Y, const std::vector<int> &S,
                                   const std::vector<char> *allowed = nullptr) {
    std::vector<char> alive = allowed ? *allowed : std::vector<char>(g.n, 1);
    std::vector<char> inXY(g.n, 0);
    for (int v : X) inXY[v] = 1;
    for (int v : Y) inXY[v] = 1;
    for (int v : S)
        if (inXY[v] || !alive[v]) return false;
    if (!detail::separates(g, X, Y, S, alive)) return false;
    auto K = detail::reach_of(g, X, S, alive);
    // minimality: S must equal the neighborhood of its reach
    std::vector<char> nb(g.n, 0);
    for (int v = 0; v < g.n; v++)
        if (K[v])
            for (int w : g.adj[v])
                if (alive[w] && !K[w]) nb[w] = 1;
    auto s2 = S;
    std::sort(s2.begin(), s2.end());
    if (list_of(nb) != s2) return false;
    // dominance: the farthest min K-Y separator must be S itself
    auto f = max_vertex_flow(g, list_of(K), Y, -1, &alive, /*endpoints_capacitated=*/false);
    if (f.value != (int)S.size()) return false;
    auto K2 = detail::reach_of(g, X, f.cut, alive);
    return K2 == K;
}

namespace detail {

inline void enumerate_imp_rec(const Graph &g, std::vector<int> X, const std::vector<int> &Y,
                              int p, std::vector<int> fixed, std::vector<char> alive,
                              std::vector<std::vector<int>> &out) {
    if (p < 0) return;
    // adjacency or overlap kills every separator
    std::vector<char> inX(g.n, 0);
    for (int x : X) inX[x] = 1;
    for (int y : Y) {
        if (inX[y]) return;
        for (int w : g.adj[y])
            if (alive[w] && inX[w]) return;
    }
    auto f = max_vertex_flow(g, X, Y, -1, &alive, /*endpoints_capacitated=*/false);
    if (f.value > p) return;
    if (f.cut.empty()) {
        out.push_back(fixed);  // X and Y already disconnected
        return;
    }
    // farthest min cut; its X-reach is dominated by every important separator
    auto K = reach_of(g, X, f.cut, alive);
    int v = f.cut[0];
    // branch 1: v joins the separator
    {
        auto fixed2 = fixed;
        fixed2.push_back(v);
        auto alive2 = alive;
        alive2[v] = 0;
        enumerate_imp_rec(g, X, Y, p - 1, fixed2, alive2, out);
    }
    // branch 2: v joins the X side together with the dominant reach
    {
        auto X2 = list_of(K);
        for (int x : X) X2.push_back(x);
        X2.push_back(v);
        std::sort(X2.begin(), X2.end());
        X2.erase(std::unique(X2.begin(), X2.end()), X2.end());
        enumerate_imp_rec(g, X2, Y, p, fixed, alive, out);
    }
}

}  // namespace detail

// All important X-Y separators of size at most p (each verified).
inline std::vector<ImportantSeparator> enumerate_important_separators(const Graph &g,
                                                                      const std::vector<int> &X,
                                                                      const std::vector<int> &Y,
                                                                      int p,
                                                                      const std::vector<char> *allowed = nullptr) {
    for (int x : X)
        for (int y : Y)
            if (x == y) return {};
    std::vector<char> alive = allowed ? *allowed : std::vector<char>(g.n, 1);
    std::vector<std::vector<int>> raw;
    detail::enumerate_imp_rec(g, X, Y, p, {}, alive, raw);
    std::set<std::vector<int>> seen;
    std::vector<ImportantSeparator> out;
    for (auto &s : raw) {
        auto s2 = s;
        std::sort(s2.begin(), s2.end());
        if (!seen.insert(s2).second) continue;
        if (!is_important_separator(g, X, Y, s2, &alive)) continue;
        ImportantSeparator is;
        is.vertices = s2;
        is.reach = detail::reach_of(g, X, s2, alive);
        out.push_back(std::move(is));
    }
    std::sort(out.begin(), out.end(), [](const ImportantSeparator &a, const ImportantSeparator &b) {
        return a.vertices < b.vertices;
    });
    double bound = std::pow(4.0, p);
    if ((double)out.size() > bound) throw internal_error("important separator count exceeds 4^p");
    return out;
}

// Brute-force oracle: test every vertex subset of size <= p (tests only).
inline std::vector<ImportantSeparator> brute_important_separators(const Graph &g,
                                                                  const std::vector<int> &X,
                                                                  const std::vector<int> &Y,
                                                                  int p) {
    if (g.n > 20) throw std::invalid_argument("brute_important_separators: graph too large");
    std::vector<char> alive(g.n, 1);
    std::vector<ImportantSeparator> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int from, int left) {
        if (is_important_separator(g, X, Y, cur)) {
            ImportantSeparator is;
            is.vertices = cur;
            is.reach = detail::reach_of(g, X, cur, alive);
            out.push_back(is);
        }
        if (left == 0) return;
        for (int v = from; v < g.n; v++) {
            cur.push_back(v);
            rec(v + 1, left - 1);
            cur.pop_back();
        }
    };
    rec(0, p);
    // subsets are generated in lexicographic order but revisit prefixes; dedupe
    std::set<std::vector<int>> seen;
    std::vector<ImportantSeparator> ded;
    for (auto &is : out)
        if (seen.insert(is.vertices).second) ded.push_back(is);
    std::sort(ded.begin(), ded.end(), [](const ImportantSeparator &a, const ImportantSeparator &b) {
        return a.vertices < b.vertices;
    });
    return ded;
}

}  // namespace dpath
