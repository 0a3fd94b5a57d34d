#pragma once

#include <cstdlib>

#include "instance.hpp"

namespace dpath {

struct budget_exhausted : std::runtime_error {
    budget_exhausted() : std::runtime_error("search node budget exhausted") {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string &m) : std::logic_error("internal error: " + m) {}
};

// Shared search-node budget. Exhaustion is an error, never a silent "no".
struct Budget {
    long long limit = 10'000'000;
    long long used = 0;
    long long oracle_calls = 0;

    void tick() {
        if (++used > limit) throw budget_exhausted();
    }
};

inline long long env_default_budget() {
    if (const char *s = std::getenv("DPATH_BUDGET")) {
        long long v = std::atoll(s);
        if (v > 0) return v;
    }
    return 10'000'000;
}

namespace detail {

// Sound upper bound on the number of additional disjoint valid paths:
// per component, half the free terminals that still have a free partner.
inline bool enough_left(const Graph &g, const std::vector<char> &free_v,
                        const std::vector<std::pair<int, int>> &pairs, int needed) {
    if (needed <= 0) return true;
    auto comp = g.components(free_v);
    std::vector<char> counted(g.n, 0);
    std::vector<int> per_comp;
    int total = 0;
    for (auto [u, v] : pairs) {
        if (!free_v[u] || !free_v[v] || comp[u] != comp[v]) continue;
        for (int x : {u, v})
            if (!counted[x]) {
                counted[x] = 1;
                int c = comp[x];
                if ((int)per_comp.size() <= c) per_comp.resize(c + 1, 0);
                per_comp[c]++;
            }
    }
    for (int c : per_comp) total += c / 2;
    return total >= needed;
}

struct PairSolver {
    const Graph &g;
    std::vector<std::pair<int, int>> pairs;
    Budget &budget;
    std::vector<char> free_v;
    PathSet out;

    PairSolver(const Graph &gr, std::vector<std::pair<int, int>> ps, Budget &b,
               const std::vector<char> &allowed)
        : g(gr), pairs(std::move(ps)), budget(b), free_v(allowed) {}

    bool feasible(size_t next) const {
        std::vector<std::pair<int, int>> rest(pairs.begin() + next, pairs.end());
        for (auto [u, v] : rest)
            if (!free_v[u] || !free_v[v]) return false;
        return enough_left(g, free_v, rest, (int)rest.size());
    }

    bool extend(size_t pi, std::vector<int> &cur) {
        budget.tick();
        int at = cur.back(), target = pairs[pi].second;
        if (at == target && cur.size() >= 2) {
            out.push_back(cur);
            if (solve(pi + 1)) return true;
            out.pop_back();
            return false;
        }
        for (int w : g.adj[at]) {
            if (!free_v[w]) continue;
            cur.push_back(w);
            free_v[w] = 0;
            bool ok = extend(pi, cur);
            free_v[w] = 1;
            cur.pop_back();
            if (ok) return true;
        }
        return false;
    }

    bool solve(size_t pi) {
        budget.tick();
        if (pi == pairs.size()) return true;
        if (!feasible(pi)) return false;
        auto [s, t] = pairs[pi];
        if (s == t || !free_v[s] || !free_v[t]) return false;
        std::vector<int> cur{s};
        free_v[s] = 0;
        bool ok = extend(pi, cur);
        free_v[s] = 1;
        return ok;
    }
};

}  // namespace detail

// Vertex-disjoint paths, path i joining pairs[i]; std::nullopt if impossible.
inline std::optional<PathSet> solve_disjoint_pairs(const Graph &g,
                                                   const std::vector<std::pair<int, int>> &pairs,
                                                   Budget &budget,
                                                   const std::vector<char> *allowed = nullptr) {
    for (auto [s, t] : pairs) {
        if (s < 0 || t < 0 || s >= g.n || t >= g.n)
            throw std::invalid_argument("pair endpoint outside graph");
        if (s == t) return std::nullopt;
    }
    {
        std::vector<char> seen(g.n, 0);
        for (auto [s, t] : pairs)
            for (int x : {s, t}) {
                if (seen[x]) return std::nullopt;
                seen[x] = 1;
            }
    }
    std::vector<char> base = allowed ? *allowed : std::vector<char>(g.n, 1);
    detail::PairSolver ps(g, pairs, budget, base);
    if (ps.solve(0)) return ps.out;
    return std::nullopt;
}

namespace detail {

struct MaxDisjointSolver {
    const Instance &inst;
    Budget &budget;
    std::vector<std::vector<int>> dadj;
    std::vector<char> free_v;
    PathSet found;
    int k;

    MaxDisjointSolver(const Instance &in, Budget &b, const std::vector<char> *allowed)
        : inst(in), budget(b), dadj(in.demand_adj()), k(in.k) {
        free_v = allowed ? *allowed : std::vector<char>(in.g.n, 1);
    }

    bool prune(int needed, int min_start) const {
        std::vector<std::pair<int, int>> rest;
        for (auto [u, v] : inst.demand)
            if (std::min(u, v) >= min_start) rest.push_back({u, v});
        return enough_left(inst.g, free_v, rest, needed);
    }

    bool route(int target, std::vector<int> &cur, int needed) {
        budget.tick();
        int at = cur.back();
        if (at == target && cur.size() >= 2) {
            int s = cur.front();
            found.push_back(cur);
            if (search(needed - 1, s + 1)) return true;
            found.pop_back();
            return false;
        }
        for (int w : inst.g.adj[at]) {
            if (!free_v[w]) continue;
            cur.push_back(w);
            free_v[w] = 0;
            bool ok = route(target, cur, needed);
            free_v[w] = 1;
            cur.pop_back();
            if (ok) return true;
        }
        return false;
    }

    // Paths enumerated so each successive path's smallest endpoint increases.
    bool search(int needed, int min_start) {
        budget.tick();
        if (needed == 0) return true;
        if (!prune(needed, min_start)) return false;
        for (int s = min_start; s < inst.g.n; s++) {
            if (!free_v[s] || !inst.is_terminal(s)) continue;
            for (int t : dadj[s]) {
                if (t <= s || !free_v[t]) continue;
                std::vector<int> cur{s};
                free_v[s] = 0;
                bool ok = route(t, cur, needed);
                free_v[s] = 1;
                if (ok) return true;
            }
        }
        return false;
    }
};

}  // namespace detail

// Exact exponential oracle: k pairwise disjoint valid paths or std::nullopt.
inline std::optional<PathSet> exact_max_disjoint(const Instance &inst, Budget &budget,
                                                 const std::vector<char> *allowed = nullptr) {
    inst.check_valid();
    if (inst.k == 0) return PathSet{};
    detail::MaxDisjointSolver s(inst, budget, allowed);
    if (s.search(inst.k, 0)) return s.found;
    return std::nullopt;
}

inline std::optional<PathSet> exact_max_disjoint(const Instance &inst) {
    Budget b;
    b.limit = env_default_budget();
    return exact_max_disjoint(inst, b);
}

// Largest k for which the exact oracle still succeeds.
inline int exact_optimum(const Instance &inst, Budget &budget) {
    Instance work = inst;
    int lo = 0;
    while (true) {
        work.k = lo + 1;
        if (!exact_max_disjoint(work, budget)) return lo;
        lo++;
        if (lo > (int)inst.terminals.size() / 2 + 1) return lo;
    }
}

// One valid path inside `allowed`, if any (smallest demand edge, shortest route).
inline std::optional<std::vector<int>> find_valid_path(const Instance &inst,
                                                       const std::vector<char> *allowed = nullptr) {
    std::vector<char> alive = allowed ? *allowed : std::vector<char>(inst.g.n, 1);
    for (auto [a, b] : inst.demand) {
        if (!alive[a] || !alive[b]) continue;
        auto p = inst.g.bfs_path(a, b, alive);
        if (!p.empty() && p.size() >= 2) return p;
    }
    return std::nullopt;
}

// ---- vertex-capacitated flow ----------------------------------------------

// Maximum number of vertex-disjoint A-B paths on the vertex-split digraph.
// Two modes:
//   endpoints_capacitated = true : every vertex (including A and B) has unit
//     capacity; value = max fully vertex-disjoint A-B path count (Menger).
//   endpoints_capacitated = false: A and B vertices are uncuttable; value =
//     minimum A-B vertex separator size among vertices outside A u B
//     (INT_MAX-ish when A touches B).
// `cut` is the minimum cut realized by split arcs, with maximal A-side reach.
struct VertexFlow {
    int value = 0;
    PathSet paths;           // decomposed paths, A-end first
    std::vector<int> cut;    // min vertex cut, farthest from A
    std::vector<char> reach; // source side of that cut (excludes the cut)
};

inline VertexFlow max_vertex_flow(const Graph &g, const std::vector<int> &A,
                                  const std::vector<int> &B, int stop_at = -1,
                                  const std::vector<char> *allowed = nullptr,
                                  bool endpoints_capacitated = true) {
    int n = g.n;
    const int INF = 4 * n + 16;
    std::vector<char> alive = allowed ? *allowed : std::vector<char>(n, 1);
    std::vector<char> inA(n, 0), inB(n, 0);
    for (int a : A) inA[a] = 1;
    for (int b : B) inB[b] = 1;
    // node 2v = v_in, 2v+1 = v_out, plus source S and sink T
    int S = 2 * n, T = 2 * n + 1, N = 2 * n + 2;
    std::vector<std::vector<std::pair<int, int>>> arcs(N);  // (to, arc id)
    std::vector<int> cap;
    auto add_arc = [&](int u, int v, int c) {
        arcs[u].push_back({v, (int)cap.size()});
        cap.push_back(c);
        arcs[v].push_back({u, (int)cap.size()});
        cap.push_back(0);
    };
    for (int v = 0; v < n; v++) {
        if (!alive[v]) continue;
        int vc = (!endpoints_capacitated && (inA[v] || inB[v])) ? INF : 1;
        add_arc(2 * v, 2 * v + 1, vc);
        for (int w : g.adj[v])
            if (alive[w]) add_arc(2 * v + 1, 2 * w, INF);
    }
    for (int a : A)
        if (alive[a]) add_arc(S, 2 * a, INF);
    for (int b : B)
        if (alive[b]) add_arc(2 * b + 1, T, INF);

    VertexFlow res;
    std::vector<int> prev_node(N), prev_arc(N);
    int limit = stop_at < 0 ? INF : stop_at;
    while (res.value < limit) {
        std::fill(prev_node.begin(), prev_node.end(), -2);
        std::queue<int> q;
        q.push(S);
        prev_node[S] = -1;
        while (!q.empty() && prev_node[T] == -2) {
            int u = q.front();
            q.pop();
            for (auto [v, id] : arcs[u])
                if (cap[id] > 0 && prev_node[v] == -2) {
                    prev_node[v] = u;
                    prev_arc[v] = id;
                    q.push(v);
                }
        }
        if (prev_node[T] == -2) break;
        for (int v = T; v != S; v = prev_node[v]) {
            cap[prev_arc[v]]--;
            cap[prev_arc[v] ^ 1]++;
        }
        res.value++;
    }
    // farthest min cut: co-reachability to T in the residual digraph
    std::vector<char> co(N, 0);
    {
        std::vector<std::vector<int>> rin(N);
        for (int u = 0; u < N; u++)
            for (auto [v, id] : arcs[u])
                if (cap[id] > 0) rin[v].push_back(u);
        std::queue<int> q;
        q.push(T);
        co[T] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : rin[u])
                if (!co[w]) {
                    co[w] = 1;
                    q.push(w);
                }
        }
    }
    res.reach.assign(n, 0);
    for (int v = 0; v < n; v++)
        if (alive[v] && !co[2 * v] && !co[2 * v + 1]) res.reach[v] = 1;
    for (int v = 0; v < n; v++)
        if (alive[v] && !co[2 * v] && co[2 * v + 1]) res.cut.push_back(v);
    // decompose the integral flow into paths
    std::vector<std::vector<std::pair<int, int>>> outflow(N);  // (to, units)
    for (int u = 0; u < N; u++)
        for (auto [v, id] : arcs[u])
            if (id % 2 == 1 && cap[id] > 0) outflow[v].push_back({u, cap[id]});
    // cap on a backward arc equals the flow pushed on its forward partner,
    // so outflow[v] lists (target, units) for each used forward arc v->target
    std::function<int(int)> take = [&](int u) -> int {
        for (auto &[v, units] : outflow[u])
            if (units > 0) {
                units--;
                return v;
            }
        return -1;
    };
    for (int i = 0; i < res.value; i++) {
        std::vector<int> p;
        int u = take(S);
        bool ok = u >= 0;
        while (ok && u != T) {
            if (u % 2 == 0 && u < 2 * n) p.push_back(u / 2);
            u = take(u);
            ok = u >= 0;
        }
        if (ok && !p.empty()) res.paths.push_back(p);
    }
    return res;
}

// Disjoint S-T2 path count when demand restricted to S x T2 is a biclique.
inline int max_flow_biclique(const Instance &inst, const std::vector<int> &S,
                             const std::vector<int> &T2) {
    for (int s : S)
        for (int t : T2) {
            if (s == t) throw std::invalid_argument("biclique sides must be disjoint");
            if (!inst.demand_adjacent(s, t))
                throw std::invalid_argument("demand restricted to S x T2 is not a biclique");
        }
    return max_vertex_flow(inst.g, S, T2).value;
}

}  // namespace dpath
