#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spinmod::graphs {

/// Dual graph of a nodal marked curve.
///
/// `legs[i]` is the vertex carrying marking `i + 1`. An edge whose two
/// endpoints coincide is a loop (a non-separating self-node of that component).
struct StableGraph {
    std::vector<int> genera;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> legs;

    [[nodiscard]] int vertex_count() const { return static_cast<int>(genera.size()); }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges.size()); }
    [[nodiscard]] int marking_count() const { return static_cast<int>(legs.size()); }

    /// Edge ends plus legs at `v`; a loop contributes 2.
    [[nodiscard]] int valence(int v) const;

    friend bool operator==(const StableGraph&, const StableGraph&) = default;
};

/// Throws StructuralError when an index is out of range or there are no vertices.
void check_structure(const StableGraph& g);

[[nodiscard]] bool is_connected(const StableGraph& g);

/// Every vertex satisfies 2 g_v - 2 + valence > 0.
[[nodiscard]] bool is_stable(const StableGraph& g);

/// Arithmetic genus. Throws StructuralError on a disconnected graph.
[[nodiscard]] int total_genus(const StableGraph& g);

/// Label-preserving isomorphism invariant: equal keys iff the graphs are isomorphic.
[[nodiscard]] std::string canonical_key(const StableGraph& g);

/// Order of the automorphism group acting on vertices and half-edges while
/// fixing every leg. Loop flips and permutations of parallel edges count.
[[nodiscard]] std::uint64_t automorphism_count(const StableGraph& g);

/// Largest genus and marking count the enumerators accept.
inline constexpr int kMaxGenus = 2;
inline constexpr int kMaxMarkings = 5;

/// All isomorphism classes of stable graphs of type (g, n), sorted by canonical key.
/// Throws WindowError outside g <= 2, n <= 5 and std::invalid_argument when 2g-2+n <= 0.
[[nodiscard]] std::vector<StableGraph> enumerate_strata(int g, int n);

/// The one-edge stable graphs of type (g, n): the loop type plus the stable
/// two-component splittings, sorted by canonical key.
[[nodiscard]] std::vector<StableGraph> enumerate_one_node(int g, int n);

/// Compact JSON record {"vertices":[...],"edges":[[u,v],...],"legs":{"1":v,...}}.
[[nodiscard]] std::string to_text(const StableGraph& g);
[[nodiscard]] StableGraph from_text(const std::string& text);

} // namespace spinmod::graphs
