#include "spinmod/arf.hpp"

#include "spinmod/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace spinmod::arf {

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus) {
    if (genus < 0 || genus > kMaxGenus) {
        throw WindowError("symplectic space genus must lie in [0, " + std::to_string(kMaxGenus) + "]");
    }
}

int SymplecticSpace::pair(Vec x, Vec y) const {
    const Vec low = (Vec{1} << genus_) - 1;
    const Vec xa = x & low;
    const Vec xb = (x >> genus_) & low;
    const Vec ya = y & low;
    const Vec yb = (y >> genus_) & low;
    return std::popcount((xa & yb) ^ (xb & ya)) & 1;
}

QuadraticForm::QuadraticForm(SymplecticSpace space, Vec basis_values) : space_(space), values_(basis_values) {
    if (basis_values >= space_.size()) {
        throw StructuralError("quadratic form has values outside the basis");
    }
}

std::vector<QuadraticForm> QuadraticForm::all(int genus) {
    const SymplecticSpace space(genus);
    std::vector<QuadraticForm> out;
    out.reserve(space.size());
    for (Vec v = 0; v < space.size(); ++v) {
        out.emplace_back(space, v);
    }
    return out;
}

QuadraticForm QuadraticForm::parse(const std::string& bits) {
    if (bits.empty() || bits.size() % 2 != 0) {
        throw ParseError("form bit string must have even positive length");
    }
    const SymplecticSpace space(static_cast<int>(bits.size() / 2));
    Vec values = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] != '0' && bits[j] != '1') {
            throw ParseError("form bit string may only contain 0 and 1");
        }
        values |= static_cast<Vec>(bits[j] - '0') << j;
    }
    return {space, values};
}

int QuadraticForm::evaluate(Vec v) const {
    if (v >= space_.size()) {
        throw StructuralError("vector length does not match the form");
    }
    // Polarization over the standard basis: only the pairs (a_i, b_i) meet.
    const int g = space_.genus();
    const Vec low = (Vec{1} << g) - 1;
    const int linear = std::popcount(v & values_) & 1;
    const int cross = std::popcount(v & (v >> g) & low) & 1;
    return linear ^ cross;
}

int QuadraticForm::evaluate_in_order(Vec v, const std::vector<int>& basis_order) const {
    if (v >= space_.size()) {
        throw StructuralError("vector length does not match the form");
    }
    Vec partial = 0;
    int value = 0;
    for (int j : basis_order) {
        const Vec e = space_.basis(j);
        if ((v & e) == 0) {
            continue;
        }
        value ^= static_cast<int>(values_ >> j & 1U) ^ space_.pair(partial, e);
        partial |= e;
    }
    if (partial != v) {
        throw StructuralError("basis order does not cover the vector");
    }
    return value;
}

QuadraticForm QuadraticForm::pullback(const std::vector<Vec>& images) const {
    if (static_cast<int>(images.size()) != space_.dimension()) {
        throw StructuralError("linear map must give one image per basis vector");
    }
    Vec values = 0;
    for (int j = 0; j < space_.dimension(); ++j) {
        values |= static_cast<Vec>(evaluate(images[j])) << j;
    }
    return {space_, values};
}

std::string QuadraticForm::str() const {
    std::string out;
    for (int j = 0; j < space_.dimension(); ++j) {
        out += (values_ >> j & 1U) ? '1' : '0';
    }
    return out;
}

int arf(const QuadraticForm& q) {
    const int g = q.space().genus();
    const Vec low = (Vec{1} << g) - 1;
    const Vec v = q.basis_values();
    return std::popcount(v & (v >> g) & low) & 1;
}

ParityCounts count_by_arf(int genus) {
    if (genus < 1 || genus > 4) {
        throw WindowError("count_by_arf supports 1 <= g <= 4");
    }
    ParityCounts counts;
    for (const auto& q : QuadraticForm::all(genus)) {
        (arf(q) == 0 ? counts.even : counts.odd) += 1;
    }
    return counts;
}

ParityCounts theta_counts_closed_form(int genus) {
    if (genus < 0 || genus > 30) {
        throw WindowError("theta_counts_closed_form supports 0 <= g <= 30");
    }
    if (genus == 0) {
        return {1, 0};
    }
    const std::uint64_t half = std::uint64_t{1} << (genus - 1);
    const std::uint64_t full = std::uint64_t{1} << genus;
    return {half * (full + 1), half * (full - 1)};
}

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }

    std::vector<std::uint32_t> parent;
};

DisjointSets orbits_under(int genus, const std::vector<std::vector<Vec>>& generators) {
    const SymplecticSpace space(genus);
    DisjointSets sets(space.size());
    for (const auto& q : QuadraticForm::all(genus)) {
        for (const auto& images : generators) {
            sets.unite(q.basis_values(), q.pullback(images).basis_values());
        }
    }
    return sets;
}

} // namespace

OrbitSummary transvection_orbits(int genus) {
    if (genus < 1 || genus > 3) {
        throw WindowError("transvection_orbits supports 1 <= g <= 3");
    }
    const SymplecticSpace space(genus);
    std::vector<std::vector<Vec>> generators;
    for (Vec v = 1; v < space.size(); ++v) {
        std::vector<Vec> images;
        for (int j = 0; j < space.dimension(); ++j) {
            images.push_back(space.transvect(space.basis(j), v));
        }
        generators.push_back(std::move(images));
    }
    DisjointSets sets = orbits_under(genus, generators);

    std::vector<std::uint32_t> roots;
    std::vector<std::uint64_t> sizes;
    std::vector<int> arfs;
    bool constant = true;
    for (Vec v = 0; v < space.size(); ++v) {
        const std::uint32_t r = sets.find(v);
        const auto it = std::find(roots.begin(), roots.end(), r);
        const int a = arf(QuadraticForm(space, v));
        if (it == roots.end()) {
            roots.push_back(r);
            sizes.push_back(1);
            arfs.push_back(a);
        } else {
            const auto k = static_cast<std::size_t>(it - roots.begin());
            sizes[k] += 1;
            constant = constant && arfs[k] == a;
        }
    }

    std::vector<std::size_t> idx(sizes.size());
    std::iota(idx.begin(), idx.end(), 0U);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return sizes[x] > sizes[y]; });
    OrbitSummary summary;
    summary.genus = genus;
    summary.arf_constant = constant;
    for (std::size_t k : idx) {
        summary.sizes.push_back(sizes[k]);
        summary.arf_values.push_back(arfs[k]);
    }
    return summary;
}

std::uint64_t orbit_count(int genus, const std::vector<std::vector<Vec>>& generators, int arf_value) {
    const SymplecticSpace space(genus);
    DisjointSets sets = orbits_under(genus, generators);
    std::vector<std::uint32_t> roots;
    for (Vec v = 0; v < space.size(); ++v) {
        if (arf(QuadraticForm(space, v)) != arf_value) {
            continue;
        }
        const std::uint32_t r = sets.find(v);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
            roots.push_back(r);
        }
    }
    return roots.size();
}

} // namespace spinmod::arf
