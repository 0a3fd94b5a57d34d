#pragma once

#include "pattern.hpp"

namespace dpath {

// c-coloring of the edges of an n-clique, queried lazily.
struct EdgeColoring {
    int n = 0;
    int colors = 1;
    std::function<int(int, int)> color_of;  // symmetric, values 1..colors
};

// Iterative pigeonhole: pick a pivot, keep its largest same-color
// neighborhood, repeat; any r pivots sharing a chosen color form a
// monochromatic r-clique. Guaranteed for n >= c^(rc); opportunistic below.
inline std::optional<std::vector<int>> find_monochromatic_clique(const EdgeColoring &col, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (col.n < 1) return std::nullopt;
    if (r == 1) return std::vector<int>{0};
    std::vector<int> cand(col.n);
    std::iota(cand.begin(), cand.end(), 0);
    std::vector<std::pair<int, int>> pivots;  // (vertex, chosen color)
    while (cand.size() >= 2) {
        int p = cand[0];
        std::vector<std::vector<int>> cls(col.colors + 1);
        for (size_t i = 1; i < cand.size(); i++) {
            int c = col.color_of(p, cand[i]);
            if (c < 1 || c > col.colors) throw std::invalid_argument("color out of range");
            cls[c].push_back(cand[i]);
        }
        int best = 1;
        for (int c = 2; c <= col.colors; c++)
            if (cls[c].size() > cls[best].size()) best = c;
        pivots.push_back({p, best});
        cand = cls[best];
    }
    int leftover = cand.empty() ? -1 : cand[0];
    std::vector<std::vector<int>> by_color(col.colors + 1);
    for (size_t i = 0; i < pivots.size(); i++) by_color[pivots[i].second].push_back((int)i);
    for (int c = 1; c <= col.colors; c++) {
        if ((int)by_color[c].size() >= r) {
            std::vector<int> out;
            for (int i = 0; i < r; i++) out.push_back(pivots[by_color[c][i]].first);
            return out;
        }
        // the leftover vertex survived every pivot's filter, so its edge to a
        // color-c pivot carries color c; it extends a chain of r-1 pivots
        if ((int)by_color[c].size() == r - 1 && leftover >= 0) {
            std::vector<int> out;
            for (int i : by_color[c]) out.push_back(pivots[i].first);
            out.push_back(leftover);
            return out;
        }
    }
    return std::nullopt;
}

// Lemma-9 style extraction: from a (not necessarily induced) matching of H,
// a 5-coloring of pairs of matching edges yields an induced matching of size
// 2r, a clique of size 2r, or a K_{r,r} subgraph. Guaranteed when the
// matching has >= 5^(10r) edges; attempted honestly below that.
inline std::optional<PatternWitness> matching_to_induced_or_biclique(
    const AdjFn &adj, const std::vector<std::pair<int, int>> &matching, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    {
        std::vector<int> all;
        for (auto [x, y] : matching) {
            all.push_back(x);
            all.push_back(y);
            if (!adj(x, y)) throw std::invalid_argument("matching pair not adjacent");
        }
        if (!all_distinct(all)) throw std::invalid_argument("matching edges not disjoint");
    }
    int n = (int)matching.size();
    auto color = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        auto [xi, yi] = matching[i];
        auto [xj, yj] = matching[j];
        if (adj(xi, xj)) return 2;
        if (adj(yi, yj)) return 3;
        if (adj(xi, yj)) return 4;
        if (adj(yi, xj)) return 5;
        return 1;
    };
    auto found = find_monochromatic_clique({n, 5, color}, 2 * r);
    if (!found) return std::nullopt;
    std::vector<int> idx = *found;
    std::sort(idx.begin(), idx.end());
    int c = color(idx[0], idx[1]);
    PatternWitness w;
    if (c == 1) {
        w.kind = PatternKind::InducedMatching;
        for (int i : idx) {
            w.vertices.push_back(matching[i].first);
            w.vertices.push_back(matching[i].second);
        }
    } else if (c == 2 || c == 3) {
        w.kind = PatternKind::Clique;
        for (int i : idx) w.vertices.push_back(c == 2 ? matching[i].first : matching[i].second);
    } else {
        // color 4: {x_1..x_r} vs {y_{r+1}..y_{2r}}; color 5 mirrored
        w.kind = PatternKind::Biclique;
        for (int t = 0; t < r; t++)
            w.vertices.push_back(c == 4 ? matching[idx[t]].first : matching[idx[t]].second);
        for (int t = r; t < 2 * r; t++)
            w.vertices.push_back(c == 4 ? matching[idx[t]].second : matching[idx[t]].first);
    }
    if (!verify_witness(adj, w)) throw internal_error("ramsey extraction produced an invalid witness");
    return w;
}

// Lemma-16 style extraction from a staircase: a_i ~ b_i and a_i !~ b_j for
// i < j. Returns an induced matching of size r, an induced skew biclique on
// r+r vertices, or a clique of size r. Guaranteed for n >= 4^(4r).
inline std::optional<PatternWitness> staircase_to_witness(const AdjFn &adj,
                                                          const std::vector<int> &a,
                                                          const std::vector<int> &b, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (a.size() != b.size()) throw std::invalid_argument("staircase sides differ in length");
    int n = (int)a.size();
    {
        std::vector<int> all(a);
        all.insert(all.end(), b.begin(), b.end());
        if (!all_distinct(all)) throw std::invalid_argument("staircase vertices not distinct");
    }
    for (int i = 0; i < n; i++)
        if (!adj(a[i], b[i]))
            throw std::invalid_argument("staircase pair " + std::to_string(i) + " not adjacent");
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (adj(a[i], b[j]))
                throw std::invalid_argument("staircase violated at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
    auto color = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        if (adj(a[i], a[j])) return 2;
        if (adj(b[i], b[j])) return 3;
        if (adj(b[i], a[j])) return 4;
        return 1;
    };
    auto found = find_monochromatic_clique({n, 4, color}, r);
    if (!found) return std::nullopt;
    std::vector<int> idx = *found;
    std::sort(idx.begin(), idx.end());
    PatternWitness w;
    if (r == 1) {
        w.kind = PatternKind::InducedMatching;
        w.vertices = {a[idx[0]], b[idx[0]]};
    } else {
        int c = color(idx[0], idx[1]);
        if (c == 1) {
            w.kind = PatternKind::InducedMatching;
            for (int i : idx) {
                w.vertices.push_back(a[i]);
                w.vertices.push_back(b[i]);
            }
        } else if (c == 2) {
            w.kind = PatternKind::Clique;
            for (int i : idx) w.vertices.push_back(a[i]);
        } else if (c == 3) {
            w.kind = PatternKind::Clique;
            for (int i : idx) w.vertices.push_back(b[i]);
        } else {
            // color 4: b_i ~ a_j for i < j within the selected set, both sides
            // independent; (b_{i_1}..b_{i_r}; a_{i_1}..a_{i_r}) is an induced S_r
            w.kind = PatternKind::SkewBiclique;
            for (int i : idx) w.vertices.push_back(b[i]);
            for (int i : idx) w.vertices.push_back(a[i]);
        }
    }
    if (!verify_witness(adj, w)) throw internal_error("staircase extraction produced an invalid witness");
    return w;
}

}  // namespace dpath
