#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call into canonical_key, automorphism_count or enumerate_boundary.

#include "spinmod/graphs.hpp"
#include "spinmod/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using spinmod::graphs::StableGraph;

inline std::vector<std::pair<int, int>> sorted_edges(std::vector<std::pair<int, int>> edges) {
    for (auto& e : edges) {
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

/// Apply a vertex permutation (old index -> new index).
inline StableGraph relabel(const StableGraph& g, const std::vector<int>& perm) {
    StableGraph out;
    out.genera.resize(g.genera.size());
    for (std::size_t v = 0; v < g.genera.size(); ++v) {
        out.genera[perm[v]] = g.genera[v];
    }
    for (auto [u, v] : g.edges) {
        out.edges.emplace_back(perm[u], perm[v]);
    }
    for (int v : g.legs) {
        out.legs.push_back(perm[v]);
    }
    return out;
}

/// Isomorphism test by trying every vertex bijection.
inline bool isomorphic(const StableGraph& a, const StableGraph& b) {
    if (a.genera.size() != b.genera.size() || a.edges.size() != b.edges.size() || a.legs.size() != b.legs.size()) {
        return false;
    }
    const auto target = sorted_edges(b.edges);
    std::vector<int> perm(a.genera.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const auto r = relabel(a, perm);
        if (r.genera == b.genera && r.legs == b.legs && sorted_edges(r.edges) == target) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool connected(const StableGraph& g) {
    const int n = static_cast<int>(g.genera.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (auto [u, v] : g.edges) {
        parent[find(u)] = find(v);
    }
    for (int v = 0; v < n; ++v) {
        if (find(v) != find(0)) {
            return false;
        }
    }
    return true;
}

inline bool stable_vertex_set(const StableGraph& g) {
    std::vector<int> val(g.genera.size(), 0);
    for (auto [u, v] : g.edges) {
        ++val[u];
        ++val[v];
    }
    for (int v : g.legs) {
        ++val[v];
    }
    for (std::size_t v = 0; v < g.genera.size(); ++v) {
        if (2 * g.genera[v] - 2 + val[v] <= 0) {
            return false;
        }
    }
    return true;
}

/// Every isomorphism class of connected stable graphs of type (g, n), found
/// by listing all vertex counts, genus vectors, edge multisets and leg maps.
inline std::vector<StableGraph> brute_strata(int g, int n) {
    std::vector<StableGraph> reps;
    const int max_edges = 3 * g - 3 + n;
    const int max_vertices = 2 * g - 2 + n;
    for (int nv = 1; nv <= max_vertices; ++nv) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < nv; ++u) {
            for (int v = u; v < nv; ++v) {
                pairs.emplace_back(u, v);
            }
        }
        // genus g = sum g_v + E - V + 1
        for (int ne = nv - 1; ne <= max_edges; ++ne) {
            const int genus_sum = g - ne + nv - 1;
            if (genus_sum < 0) {
                continue;
            }
            // multisets of `ne` pairs, as nondecreasing index sequences
            std::vector<int> pick(ne, 0);
            while (true) {
                std::vector<std::pair<int, int>> edges;
                for (int p : pick) {
                    edges.push_back(pairs[p]);
                }
                // genus vectors summing to genus_sum
                std::vector<int> gen(nv, 0);
                std::function<void(int, int)> genera = [&](int v, int left) {
                    if (v == nv - 1) {
                        gen[v] = left;
                        std::vector<int> legs(n, 0);
                        while (true) {
                            StableGraph cand{gen, edges, legs};
                            if (connected(cand) && stable_vertex_set(cand)) {
                                const bool seen = std::any_of(reps.begin(), reps.end(),
                                                              [&](const StableGraph& r) { return isomorphic(r, cand); });
                                if (!seen) {
                                    reps.push_back(cand);
                                }
                            }
                            int i = 0;
                            while (i < n && ++legs[i] == nv) {
                                legs[i++] = 0;
                            }
                            if (i == n) {
                                break;
                            }
                        }
                        return;
                    }
                    for (int x = 0; x <= left; ++x) {
                        gen[v] = x;
                        genera(v + 1, left - x);
                    }
                };
                genera(0, genus_sum);

                int i = ne - 1;
                while (i >= 0 && pick[i] == static_cast<int>(pairs.size()) - 1) {
                    --i;
                }
                if (i < 0) {
                    break;
                }
                ++pick[i];
                for (int j = i + 1; j < ne; ++j) {
                    pick[j] = pick[i];
                }
            }
        }
    }
    return reps;
}

/// Genus-0 strata counted by edge number through compatible families of
/// splits {S, S^c} of {1..n} (each S normalized to avoid n).
inline std::map<int, int> genus0_strata_by_edges(int n) {
    std::vector<unsigned> splits;
    const unsigned full = (1u << (n - 1)) - 1;
    for (unsigned s = 1; s <= full; ++s) {
        const int k = __builtin_popcount(s);
        if (k >= 2 && k <= n - 2) {
            splits.push_back(s);
        }
    }
    auto compatible = [](unsigned a, unsigned b) { return (a & b) == 0 || (a & b) == a || (a & b) == b; };
    std::map<int, int> counts;
    const std::size_t m = splits.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            for (std::size_t j = i + 1; j < m && ok; ++j) {
                if ((mask >> i & 1) && (mask >> j & 1)) {
                    ok = compatible(splits[i], splits[j]);
                }
            }
        }
        if (ok) {
            ++counts[__builtin_popcountll(mask)];
        }
    }
    return counts;
}

/// Automorphisms counted as pairs (vertex bijection, half-edge bijection)
/// preserving genera, legs, incidence and the edge pairing.
inline std::uint64_t brute_automorphisms(const StableGraph& g) {
    const int nv = static_cast<int>(g.genera.size());
    const int nh = 2 * static_cast<int>(g.edges.size());
    std::vector<int> owner(nh);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        owner[2 * e] = g.edges[e].first;
        owner[2 * e + 1] = g.edges[e].second;
    }
    std::uint64_t count = 0;
    std::vector<int> sigma(nv);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) {
            ok = g.genera[sigma[v]] == g.genera[v];
        }
        for (int v : g.legs) {
            ok = ok && sigma[v] == v;
        }
        if (!ok) {
            continue;
        }
        std::vector<int> tau(nh);
        std::iota(tau.begin(), tau.end(), 0);
        do {
            bool good = true;
            for (int h = 0; h < nh && good; ++h) {
                good = owner[tau[h]] == sigma[owner[h]] && (tau[h ^ 1] == (tau[h] ^ 1));
            }
            count += good ? 1 : 0;
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

/// Random relabeling: permute vertices, shuffle edge order and flip edge ends.
inline StableGraph scramble(const StableGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.genera.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto out = relabel(g, perm);
    std::shuffle(out.edges.begin(), out.edges.end(), rng);
    std::bernoulli_distribution flip(0.5);
    for (auto& e : out.edges) {
        if (flip(rng)) {
            std::swap(e.first, e.second);
        }
    }
    return out;
}

/// Determinant by cofactor expansion along the first row.
inline spinmod::Rational det(const std::vector<std::vector<spinmod::Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return spinmod::Rational(1);
    }
    spinmod::Rational total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) {
            continue;
        }
        std::vector<std::vector<spinmod::Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<spinmod::Rational> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    row.push_back(m[r][k]);
                }
            }
            minor.push_back(std::move(row));
        }
        const auto term = m[0][c] * det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

/// Rank as the size of the largest nonsingular square minor.
inline int minor_rank(const std::vector<std::vector<spinmod::Rational>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int k = std::min(rows, cols); k > 0; --k) {
        for (unsigned rm = 0; rm < (1u << rows); ++rm) {
            if (__builtin_popcount(rm) != k) {
                continue;
            }
            for (unsigned cm = 0; cm < (1u << cols); ++cm) {
                if (__builtin_popcount(cm) != k) {
                    continue;
                }
                std::vector<std::vector<spinmod::Rational>> sub;
                for (int r = 0; r < rows; ++r) {
                    if (!(rm >> r & 1)) {
                        continue;
                    }
                    std::vector<spinmod::Rational> row;
                    for (int c = 0; c < cols; ++c) {
                        if (cm >> c & 1) {
                            row.push_back(a[r][c]);
                        }
                    }
                    sub.push_back(std::move(row));
                }
                if (!det(sub).is_zero()) {
                    return k;
                }
            }
        }
    }
    return 0;
}

} // namespace oracle
