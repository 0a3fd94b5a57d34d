#pragma once

#include <optional>

#include "instance.hpp"

namespace dpath {

enum class PatternKind { InducedMatching, SkewBiclique, Biclique, Clique };

inline const char *pattern_kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::InducedMatching: return "induced-matching";
        case PatternKind::SkewBiclique: return "skew-biclique";
        case PatternKind::Biclique: return "biclique";
        case PatternKind::Clique: return "clique";
    }
    return "?";
}

// Witness against the demand graph. For InducedMatching the vertex list is
// pair-consecutive (a1,b1,a2,b2,...); for SkewBiclique/Biclique it is the
// a-side followed by the b-side.
struct PatternWitness {
    PatternKind kind = PatternKind::Clique;
    std::vector<int> vertices;

    int size() const {
        switch (kind) {
            case PatternKind::InducedMatching: return (int)vertices.size() / 2;
            case PatternKind::SkewBiclique:
            case PatternKind::Biclique: return (int)vertices.size() / 2;
            case PatternKind::Clique: return (int)vertices.size();
        }
        return 0;
    }
};

// Adjacency predicate abstraction so witnesses can be checked against a
// demand graph or any other symmetric relation.
using AdjFn = std::function<bool(int, int)>;

inline AdjFn demand_adjacency(const Instance &inst) {
    return [&inst](int u, int v) { return inst.demand_adjacent(u, v); };
}

inline bool all_distinct(const std::vector<int> &vs) {
    std::set<int> s(vs.begin(), vs.end());
    return s.size() == vs.size();
}

inline bool verify_witness(const AdjFn &adj, const PatternWitness &w) {
    const auto &vs = w.vertices;
    if (!all_distinct(vs)) return false;
    switch (w.kind) {
        case PatternKind::InducedMatching: {
            if (vs.size() < 2 || vs.size() % 2 != 0) return false;
            int m = (int)vs.size() / 2;
            for (int i = 0; i < (int)vs.size(); i++)
                for (int j = i + 1; j < (int)vs.size(); j++) {
                    bool paired = (j == i + 1) && (i % 2 == 0);
                    if (adj(vs[i], vs[j]) != paired) return false;
                }
            return m >= 1;
        }
        case PatternKind::SkewBiclique: {
            if (vs.size() < 2 || vs.size() % 2 != 0) return false;
            int m = (int)vs.size() / 2;
            // a_i ~ b_j iff i <= j, and no edges inside either side
            for (int i = 0; i < m; i++)
                for (int j = 0; j < m; j++)
                    if (adj(vs[i], vs[m + j]) != (i <= j)) return false;
            for (int i = 0; i < m; i++)
                for (int j = i + 1; j < m; j++)
                    if (adj(vs[i], vs[j]) || adj(vs[m + i], vs[m + j])) return false;
            return true;
        }
        case PatternKind::Biclique: {
            // subgraph-level only: full adjacency across the two sides
            if (vs.size() < 2 || vs.size() % 2 != 0) return false;
            int m = (int)vs.size() / 2;
            for (int i = 0; i < m; i++)
                for (int j = 0; j < m; j++)
                    if (!adj(vs[i], vs[m + j])) return false;
            return true;
        }
        case PatternKind::Clique: {
            for (size_t i = 0; i < vs.size(); i++)
                for (size_t j = i + 1; j < vs.size(); j++)
                    if (!adj(vs[i], vs[j])) return false;
            return !vs.empty();
        }
    }
    return false;
}

inline bool verify_witness(const Instance &inst, const PatternWitness &w) {
    for (int v : w.vertices)
        if (!inst.is_terminal(v)) return false;
    return verify_witness(demand_adjacency(inst), w);
}

// Exhaustive pattern search over a small vertex universe (test oracle).
inline std::optional<PatternWitness> brute_find_pattern(const AdjFn &adj,
                                                        const std::vector<int> &universe,
                                                        PatternKind kind, int size) {
    if (universe.size() > 16) throw std::invalid_argument("brute_find_pattern: universe too large");
    if (size < 1) throw std::invalid_argument("brute_find_pattern: size must be positive");

    std::vector<int> chosen;
    PatternWitness w;
    w.kind = kind;

    std::function<bool(size_t)> rec_clique = [&](size_t from) {
        if ((int)chosen.size() == size) return true;
        for (size_t i = from; i < universe.size(); i++) {
            int v = universe[i];
            bool ok = true;
            for (int u : chosen)
                if (!adj(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            if (rec_clique(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    if (kind == PatternKind::Clique) {
        if (rec_clique(0)) {
            w.vertices = chosen;
            return w;
        }
        return std::nullopt;
    }

    if (kind == PatternKind::InducedMatching) {
        // chosen holds pairs (a1,b1,a2,b2,...); candidate pairs in index order
        std::function<bool(size_t)> rec = [&](size_t from) {
            if ((int)chosen.size() == 2 * size) return true;
            for (size_t i = from; i < universe.size(); i++)
                for (size_t j = i + 1; j < universe.size(); j++) {
                    int a = universe[i], b = universe[j];
                    if (!adj(a, b)) continue;
                    bool ok = true;
                    for (int u : chosen)
                        if (adj(u, a) || adj(u, b) || u == a || u == b) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    chosen.push_back(a);
                    chosen.push_back(b);
                    if (rec(i + 1)) return true;
                    chosen.pop_back();
                    chosen.pop_back();
                }
            return false;
        };
        if (rec(0)) {
            w.vertices = chosen;
            return w;
        }
        return std::nullopt;
    }

    if (kind == PatternKind::SkewBiclique || kind == PatternKind::Biclique) {
        bool induced = kind == PatternKind::SkewBiclique;
        std::vector<int> aside, bside;
        std::function<bool(int)> rec = [&](int step) {
            if (step == 2 * size) return true;
            // interleave: place a_i then b_i so the staircase constraints prune early
            bool place_a = step % 2 == 0;
            for (int v : universe) {
                if (std::find(aside.begin(), aside.end(), v) != aside.end()) continue;
                if (std::find(bside.begin(), bside.end(), v) != bside.end()) continue;
                bool ok = true;
                if (place_a) {
                    int i = (int)aside.size();
                    // a_i vs existing b_j (j < i): adjacent iff i <= j -> never
                    for (int j = 0; j < (int)bside.size() && ok; j++) {
                        bool want = induced ? (i <= j) : true;
                        if (!induced) want = true;  // biclique: full adjacency required later
                        if (induced && adj(v, bside[j]) != want) ok = false;
                        if (!induced && j < (int)bside.size() && !adj(v, bside[j])) ok = false;
                    }
                    if (induced)
                        for (int u : aside)
                            if (adj(u, v)) ok = false;
                    if (ok) {
                        aside.push_back(v);
                        if (rec(step + 1)) return true;
                        aside.pop_back();
                    }
                } else {
                    int j = (int)bside.size();
                    for (int i = 0; i < (int)aside.size() && ok; i++) {
                        bool want = induced ? (i <= j) : true;
                        if (adj(aside[i], v) != want && induced) ok = false;
                        if (!induced && !adj(aside[i], v)) ok = false;
                    }
                    if (induced)
                        for (int u : bside)
                            if (adj(u, v)) ok = false;
                    if (ok) {
                        bside.push_back(v);
                        if (rec(step + 1)) return true;
                        bside.pop_back();
                    }
                }
            }
            return false;
        };
        if (rec(0)) {
            w.vertices = aside;
            w.vertices.insert(w.vertices.end(), bside.begin(), bside.end());
            return w;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

inline std::optional<PatternWitness> brute_find_pattern(const Instance &inst, PatternKind kind,
                                                        int size) {
    return brute_find_pattern(demand_adjacency(inst), inst.terminals, kind, size);
}

}  // namespace dpath
