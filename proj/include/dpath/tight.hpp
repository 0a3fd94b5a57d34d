#pragma once

#include <unordered_map>
#include <variant>

#include "important.hpp"
#include "instance.hpp"

namespace dpath {

// Membership oracle for a monotone family P of connected subgraphs of G - T:
// query(region) answers "does this subgraph contain some element of P?".
// Regions are materialized subgraphs carrying original vertex ids.
struct POracle {
    std::function<bool(const Sub &)> query;
    mutable long long calls = 0;
    mutable std::unordered_map<uint64_t, bool> memo;

    bool operator()(const Sub &region) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (int v : region.orig) mix((uint64_t)v + 1);
        mix(0xabcdef);
        for (int u = 0; u < region.g.n; u++)
            for (int w : region.g.adj[u])
                if (u < w) mix(((uint64_t)region.orig[u] << 21) ^ (uint64_t)region.orig[w]);
        auto it = memo.find(h);
        if (it != memo.end()) return it->second;
        calls++;
        bool r = query(region);
        memo.emplace(h, r);
        return r;
    }
};

// P = truncated valid paths of a preprocessed instance (T independent,
// degree one). query(H) is true iff for some demand edge (t1,t2) the unique
// neighbors of t1 and t2 lie in one component of H - T.
inline POracle truncated_valid_path_oracle(const Instance &inst) {
    if (!terminals_independent_degree_one(inst))
        throw std::invalid_argument("oracle requires independent degree-1 terminals");
    auto tmask = inst.terminal_mask();
    std::vector<int> nb(inst.g.n, -1);
    for (int t : inst.terminals) nb[t] = inst.g.adj[t][0];
    std::vector<std::pair<int, int>> stubs;  // neighbor pairs per demand edge
    for (auto [a, b] : inst.demand) stubs.push_back({nb[a], nb[b]});
    POracle o;
    o.query = [tmask, stubs](const Sub &region) {
        std::vector<char> alive(region.g.n, 0);
        std::vector<int> local(tmask.size(), -1);
        for (int v = 0; v < region.g.n; v++) {
            local[region.orig[v]] = v;
            alive[v] = !tmask[region.orig[v]];
        }
        auto comp = region.g.components(alive);
        for (auto [x, y] : stubs) {
            int lx = local[x], ly = local[y];
            if (lx < 0 || ly < 0 || !alive[lx] || !alive[ly]) continue;
            if (comp[lx] == comp[ly]) return true;
        }
        return false;
    };
    return o;
}

inline Sub whole_graph(const Graph &g) {
    return take_subgraph(g, std::vector<char>(g.n, 1));
}

// Region induced by `verts` inside a working subgraph (keeps working edges).
inline Sub region_of(const Sub &host, const std::vector<char> &keep) {
    Sub r = take_subgraph(host.g, keep);
    r.orig = host.to_orig(r.orig);
    return r;
}

struct FreeResult {
    bool free = false;
    Separation certificate;  // minimum order, local to the queried Sub
};

// Test P-Free: either T is P-free in `host`, or a minimum-order separation
// (X,Y) with T in X and some element inside Y-X. Uses important separators
// toward an auxiliary apex adjacent to all of T.
inline FreeResult test_p_free(const Sub &host, const std::vector<int> &T, const POracle &oracle) {
    const Graph &g = host.g;
    int p = (int)T.size() - 1;
    FreeResult res;
    res.free = true;
    if (p < 0) return res;  // no separation has order < 0
    Graph gp = g;
    int apex = gp.add_vertex();
    for (int t : T) gp.add_edge(t, apex);
    int best = INT32_MAX;
    std::vector<char> best_comp;
    for (int y = 0; y < g.n; y++) {
        if (std::find(T.begin(), T.end(), y) != T.end()) continue;
        auto seps = enumerate_important_separators(gp, {y}, {apex}, std::min(p, best - 1));
        for (auto &s : seps) {
            if ((int)s.vertices.size() >= best) continue;
            // component region of y in G' - S (apex never reachable)
            std::vector<char> keep(g.n, 0);
            for (int v = 0; v < g.n; v++) keep[v] = s.reach[v];
            if (!oracle(region_of(host, keep))) continue;
            best = (int)s.vertices.size();
            best_comp = keep;
            std::vector<char> a(g.n, 1), b(g.n, 0);
            for (int v = 0; v < g.n; v++)
                if (keep[v]) {
                    a[v] = 0;
                    b[v] = 1;
                }
            for (int v : s.vertices) {
                a[v] = 1;
                b[v] = 1;
            }
            res.certificate = Separation(a, b);
        }
    }
    res.free = best == INT32_MAX;
    return res;
}

// Find P-tight: a minimum-order tight separation for T in `host`.
// Requires some element of P inside host - T.
inline Separation find_p_tight(const Sub &host, const std::vector<int> &T, const POracle &oracle) {
    const Graph &g = host.g;
    {
        std::vector<char> keep(g.n, 1);
        for (int t : T) keep[t] = 0;
        if (!oracle(region_of(host, keep)))
            throw std::invalid_argument("find_p_tight: no element of P in G - T");
    }
    Separation cur;
    auto fr = test_p_free(host, T, oracle);
    if (fr.free) {
        // trivial start (T, G)
        std::vector<char> a(g.n, 0), b(g.n, 1);
        for (int t : T) a[t] = 1;
        cur = Separation(a, b);
    } else {
        cur = fr.certificate;
    }
    const int order0 = cur.order();

    for (int guard = 0; guard <= g.n + 2; guard++) {
        auto inter = cur.intersection();
        // strict B side and its components
        std::vector<char> strictb(g.n, 0);
        for (int v = 0; v < g.n; v++) strictb[v] = cur.in_b[v] && !cur.in_a[v];
        auto comp = g.components(strictb);
        int nc = 0;
        for (int v = 0; v < g.n; v++) nc = std::max(nc, comp[v] + 1);
        if (nc > 1) {
            // split off one component that still holds an element
            bool advanced = false;
            for (int c = 0; c < nc && !advanced; c++) {
                std::vector<char> cm(g.n, 0);
                for (int v = 0; v < g.n; v++) cm[v] = strictb[v] && comp[v] == c;
                if (!oracle(region_of(host, cm))) continue;
                cur = separation_around(g, cm, inter);
                advanced = true;
            }
            if (!advanced) throw internal_error("tight loop lost every element");
            continue;
        }
        // single strict component: probe each boundary vertex's neighbor
        Sub bside_local = side_graph(g, cur, false);  // ids local to host
        Sub bside = bside_local;
        bside.orig = host.to_orig(bside_local.orig);
        std::vector<int> local_of(g.n, -1);
        for (int i = 0; i < bside_local.g.n; i++) local_of[bside_local.orig[i]] = i;
        bool extended = false;
        for (int x : inter) {
            int xp = -1;
            for (int w : g.adj[x])
                if (strictb[w]) {
                    xp = w;
                    break;
                }
            if (xp < 0) throw internal_error("tight boundary vertex has no strict-side neighbor");
            std::vector<int> Tloc;
            for (int v : inter) Tloc.push_back(local_of[v]);
            Tloc.push_back(local_of[xp]);
            auto sub_fr = test_p_free(bside, Tloc, oracle);
            if (sub_fr.free) continue;
            if (sub_fr.certificate.order() != (int)inter.size())
                throw internal_error("tight refinement changed separation order");
            // lift (X', Y') back: new A = old A u X', new B = Y'
            std::vector<char> a = cur.in_a, b(g.n, 0);
            for (int i = 0; i < bside_local.g.n; i++) {
                if (sub_fr.certificate.in_a[i]) a[bside_local.orig[i]] = 1;
                if (sub_fr.certificate.in_b[i]) b[bside_local.orig[i]] = 1;
            }
            cur = Separation(a, b);
            if (!cur.valid(g)) throw internal_error("tight refinement built an invalid separation");
            extended = true;
            break;
        }
        if (!extended) {
            if (cur.order() != order0) throw internal_error("tight order drifted");
            return cur;
        }
    }
    throw internal_error("tight loop failed to terminate");
}

// ---- brute-force auditors (used by tests) ----------------------------------

inline bool separation_traps_element(const Sub &host, const Separation &s, const POracle &oracle) {
    std::vector<char> strictb(host.g.n, 0);
    for (int v = 0; v < host.g.n; v++) strictb[v] = s.in_b[v] && !s.in_a[v];
    return oracle(region_of(host, strictb));
}

inline bool is_p_tight(const Sub &host, const Separation &s, const std::vector<int> &T,
                       const POracle &oracle,
                       const std::vector<Separation> &all_seps) {
    for (int t : T)
        if (!s.in_a[t]) return false;
    if (!separation_traps_element(host, s, oracle)) return false;
    int ord = s.order();
    for (auto &o : all_seps) {
        if (o.order() > ord) continue;
        bool strictly_bigger = true, contains = true;
        for (int v = 0; v < host.g.n; v++) {
            if (s.in_a[v] && !o.in_a[v]) contains = false;
        }
        if (!contains) continue;
        strictly_bigger = false;
        for (int v = 0; v < host.g.n; v++)
            if (o.in_a[v] && !s.in_a[v]) strictly_bigger = true;
        if (!strictly_bigger) continue;
        if (separation_traps_element(host, o, oracle)) return false;
    }
    return true;
}

inline bool is_p_free_brute(const Sub &host, const std::vector<int> &T, const POracle &oracle,
                            const std::vector<Separation> &all_seps) {
    for (auto &s : all_seps) {
        if (s.order() >= (int)T.size()) continue;
        bool holdsT = true;
        for (int t : T)
            if (!s.in_a[t]) holdsT = false;
        if (!holdsT) continue;
        if (separation_traps_element(host, s, oracle)) return false;
    }
    return true;
}

}  // namespace dpath
