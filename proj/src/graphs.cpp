#include "spinmod/graphs.hpp"

#include "spinmod/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace spinmod::graphs {

using ordered_json = nlohmann::ordered_json;

int StableGraph::valence(int v) const {
    int val = 0;
    for (const auto& [a, b] : edges) {
        val += (a == v) + (b == v);
    }
    for (int leg : legs) {
        val += (leg == v);
    }
    return val;
}

void check_structure(const StableGraph& g) {
    const int nv = g.vertex_count();
    if (nv == 0) {
        throw StructuralError("graph has no vertices");
    }
    for (int genus : g.genera) {
        if (genus < 0) {
            throw StructuralError("negative vertex genus");
        }
    }
    auto in_range = [nv](int v) { return v >= 0 && v < nv; };
    for (const auto& [a, b] : g.edges) {
        if (!in_range(a) || !in_range(b)) {
            throw StructuralError("edge endpoint out of range");
        }
    }
    for (int leg : g.legs) {
        if (!in_range(leg)) {
            throw StructuralError("leg attached to a nonexistent vertex");
        }
    }
}

bool is_connected(const StableGraph& g) {
    check_structure(g);
    const int nv = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    int components = nv;
    for (const auto& [a, b] : g.edges) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

bool is_stable(const StableGraph& g) {
    check_structure(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (2 * g.genera[v] - 2 + g.valence(v) <= 0) {
            return false;
        }
    }
    return true;
}

int total_genus(const StableGraph& g) {
    if (!is_connected(g)) {
        throw StructuralError("total genus requested for a disconnected graph");
    }
    const int sum = std::accumulate(g.genera.begin(), g.genera.end(), 0);
    return sum + g.edge_count() - g.vertex_count() + 1;
}

namespace {

// Per-vertex isomorphism invariant used to restrict the permutation search.
using VertexSignature = std::tuple<int, int, int, std::vector<int>>;

VertexSignature signature(const StableGraph& g, int v) {
    int loops = 0;
    int ends = 0;
    for (const auto& [a, b] : g.edges) {
        if (a == v && b == v) {
            ++loops;
        } else if (a == v || b == v) {
            ++ends;
        }
    }
    std::vector<int> labels;
    for (int i = 0; i < g.marking_count(); ++i) {
        if (g.legs[i] == v) {
            labels.push_back(i + 1);
        }
    }
    return {g.genera[v], loops, ends, labels};
}

// Vertices sorted by signature, split into runs of equal signature.
struct VertexClasses {
    std::vector<int> order;                         // position -> original vertex
    std::vector<std::pair<int, int>> runs;          // [begin, end) in `order`
};

VertexClasses classify(const StableGraph& g) {
    VertexClasses vc;
    std::vector<VertexSignature> sigs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        sigs.push_back(signature(g, v));
    }
    vc.order.resize(sigs.size());
    std::iota(vc.order.begin(), vc.order.end(), 0);
    std::stable_sort(vc.order.begin(), vc.order.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
    for (std::size_t i = 0; i < vc.order.size();) {
        std::size_t j = i;
        while (j < vc.order.size() && sigs[vc.order[j]] == sigs[vc.order[i]]) {
            ++j;
        }
        vc.runs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        i = j;
    }
    return vc;
}

// Calls fn(order) for every arrangement that permutes vertices only inside runs.
template <typename Fn>
void for_each_run_permutation(VertexClasses vc, Fn&& fn) {
    for (auto [b, e] : vc.runs) {
        std::sort(vc.order.begin() + b, vc.order.begin() + e);
    }
    while (true) {
        fn(vc.order);
        std::size_t r = 0;
        for (; r < vc.runs.size(); ++r) {
            auto [b, e] = vc.runs[r];
            if (std::next_permutation(vc.order.begin() + b, vc.order.begin() + e)) {
                break;
            }
        }
        if (r == vc.runs.size()) {
            return;
        }
    }
}

std::vector<int> encode(const StableGraph& g, const std::vector<int>& order) {
    const int nv = g.vertex_count();
    std::vector<int> position(static_cast<std::size_t>(nv));
    for (int p = 0; p < nv; ++p) {
        position[order[p]] = p;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        const int pa = position[a];
        const int pb = position[b];
        edges.emplace_back(std::min(pa, pb), std::max(pa, pb));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> code;
    code.reserve(2 * edges.size() + g.legs.size());
    for (const auto& [a, b] : edges) {
        code.push_back(a);
        code.push_back(b);
    }
    for (int leg : g.legs) {
        code.push_back(position[leg]);
    }
    return code;
}

std::multiset<std::pair<int, int>> edge_multiset(const StableGraph& g) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& [a, b] : g.edges) {
        out.emplace(std::min(a, b), std::max(a, b));
    }
    return out;
}

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

std::string join(const std::vector<int>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += std::to_string(xs[i]);
    }
    return out;
}

} // namespace

std::string canonical_key(const StableGraph& g) {
    check_structure(g);
    const VertexClasses vc = classify(g);
    std::vector<int> best;
    bool first = true;
    for_each_run_permutation(vc, [&](const std::vector<int>& order) {
        auto code = encode(g, order);
        if (first || code < best) {
            best = std::move(code);
            first = false;
        }
    });

    std::vector<int> genera;
    for (int v : vc.order) {
        genera.push_back(g.genera[v]);
    }
    std::vector<int> edge_part(best.begin(), best.begin() + 2 * g.edge_count());
    std::vector<int> leg_part(best.begin() + 2 * g.edge_count(), best.end());
    return "g" + join(genera, ',') + "|e" + join(edge_part, ',') + "|l" + join(leg_part, ',');
}

std::uint64_t automorphism_count(const StableGraph& g) {
    check_structure(g);
    const auto edges = edge_multiset(g);

    // Half-edge symmetries available once the vertex map is fixed.
    std::uint64_t edge_factor = 1;
    for (auto it = edges.begin(); it != edges.end(); it = edges.upper_bound(*it)) {
        const auto mult = static_cast<int>(edges.count(*it));
        edge_factor *= factorial(mult);
        if (it->first == it->second) {
            edge_factor <<= mult;
        }
    }

    std::uint64_t vertex_autos = 0;
    const VertexClasses vc = classify(g);
    for_each_run_permutation(vc, [&](const std::vector<int>& order) {
        // vc.order[p] -> order[p] is a candidate vertex map.
        std::vector<int> image(g.genera.size());
        for (std::size_t p = 0; p < order.size(); ++p) {
            image[vc.order[p]] = order[p];
        }
        for (int leg : g.legs) {
            if (image[leg] != leg) {
                return;
            }
        }
        std::multiset<std::pair<int, int>> mapped;
        for (const auto& [a, b] : edges) {
            mapped.emplace(std::min(image[a], image[b]), std::max(image[a], image[b]));
        }
        if (mapped == edges) {
            ++vertex_autos;
        }
    });
    return vertex_autos * edge_factor;
}

namespace {

void check_window(int g, int n) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
        throw std::invalid_argument("unstable type (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
    }
    if (g > kMaxGenus || n > kMaxMarkings) {
        throw WindowError("(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                          ") is out of supported window g <= 2, n <= 5");
    }
}

StableGraph smooth(int g, int n) {
    return StableGraph{{g}, {}, std::vector<int>(static_cast<std::size_t>(n), 0)};
}

// All stable graphs obtained from `g` by adding one edge at a single vertex.
std::vector<StableGraph> degenerations(const StableGraph& g) {
    std::vector<StableGraph> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.genera[v] >= 1) {
            StableGraph h = g;
            h.genera[v] -= 1;
            h.edges.emplace_back(v, v);
            out.push_back(std::move(h));
        }

        // Items at v: legs (kind 0, index) and edge ends (kind 1, edge, end).
        struct Item {
            bool is_leg;
            int index;
            int end;
        };
        std::vector<Item> items;
        for (int i = 0; i < g.marking_count(); ++i) {
            if (g.legs[i] == v) {
                items.push_back({true, i, 0});
            }
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edges[e].first == v) {
                items.push_back({false, e, 0});
            }
            if (g.edges[e].second == v) {
                items.push_back({false, e, 1});
            }
        }
        const int fresh = g.vertex_count();
        const std::uint32_t masks = 1U << items.size();
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            for (int h1 = 0; h1 <= g.genera[v]; ++h1) {
                StableGraph h = g;
                h.genera[v] = h1;
                h.genera.push_back(g.genera[v] - h1);
                for (std::size_t k = 0; k < items.size(); ++k) {
                    if ((mask >> k & 1U) == 0) {
                        continue;
                    }
                    const Item& it = items[k];
                    if (it.is_leg) {
                        h.legs[it.index] = fresh;
                    } else if (it.end == 0) {
                        h.edges[it.index].first = fresh;
                    } else {
                        h.edges[it.index].second = fresh;
                    }
                }
                h.edges.emplace_back(v, fresh);
                if (is_stable(h)) {
                    out.push_back(std::move(h));
                }
            }
        }
    }
    return out;
}

std::vector<StableGraph> sorted_by_key(std::map<std::string, StableGraph> classes) {
    std::vector<StableGraph> out;
    out.reserve(classes.size());
    for (auto& [key, graph] : classes) {
        out.push_back(std::move(graph));
    }
    return out;
}

} // namespace

std::vector<StableGraph> enumerate_strata(int g, int n) {
    check_window(g, n);
    // Contracting any edge of a stable graph leaves a stable graph, so every
    // stratum is reached from the smooth one by single-edge degenerations.
    std::map<std::string, StableGraph> all;
    std::vector<StableGraph> frontier{smooth(g, n)};
    all.emplace(canonical_key(frontier.front()), frontier.front());
    while (!frontier.empty()) {
        std::map<std::string, StableGraph> next;
        for (const auto& graph : frontier) {
            for (auto& d : degenerations(graph)) {
                auto key = canonical_key(d);
                if (all.find(key) == all.end()) {
                    next.emplace(std::move(key), std::move(d));
                }
            }
        }
        frontier.clear();
        for (auto& [key, graph] : next) {
            frontier.push_back(graph);
            all.emplace(key, std::move(graph));
        }
    }
    return sorted_by_key(std::move(all));
}

std::vector<StableGraph> enumerate_one_node(int g, int n) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
        throw std::invalid_argument("unstable type (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
    }
    std::map<std::string, StableGraph> classes;
    if (g >= 1) {
        StableGraph loop{{g - 1}, {{0, 0}}, std::vector<int>(static_cast<std::size_t>(n), 0)};
        classes.emplace(canonical_key(loop), loop);
    }
    for (int g1 = 0; g1 <= g; ++g1) {
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            StableGraph split{{g1, g - g1}, {{0, 1}}, {}};
            for (int i = 0; i < n; ++i) {
                split.legs.push_back((mask >> i & 1U) ? 0 : 1);
            }
            if (is_stable(split)) {
                classes.emplace(canonical_key(split), std::move(split));
            }
        }
    }
    return sorted_by_key(std::move(classes));
}

std::string to_text(const StableGraph& g) {
    ordered_json doc;
    doc["vertices"] = g.genera;
    auto edges = ordered_json::array();
    for (const auto& [a, b] : g.edges) {
        edges.push_back({a, b});
    }
    doc["edges"] = std::move(edges);
    auto legs = ordered_json::object();
    for (int i = 0; i < g.marking_count(); ++i) {
        legs[std::to_string(i + 1)] = g.legs[i];
    }
    doc["legs"] = std::move(legs);
    return doc.dump();
}

StableGraph from_text(const std::string& text) {
    StableGraph g;
    try {
        const auto doc = ordered_json::parse(text);
        g.genera = doc.at("vertices").get<std::vector<int>>();
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("edge must be a pair");
            }
            g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        const auto& legs = doc.at("legs");
        g.legs.assign(legs.size(), -1);
        for (const auto& [label, vertex] : legs.items()) {
            std::size_t used = 0;
            const int idx = std::stoi(label, &used);
            if (used != label.size() || idx < 1 || idx > static_cast<int>(legs.size()) || g.legs[idx - 1] != -1) {
                throw ParseError("leg labels must be exactly 1..n");
            }
            g.legs[idx - 1] = vertex.get<int>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph record: ") + e.what());
    } catch (const std::logic_error&) {
        throw ParseError("graph record: bad leg label");
    }
    check_structure(g);
    return g;
}

} // namespace spinmod::graphs
