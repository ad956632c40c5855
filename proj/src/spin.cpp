#include "spinmod/spin.hpp"

#include "spinmod/arf.hpp"
#include "spinmod/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <tuple>

namespace spinmod::spin {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kMaxGenus = 2;
constexpr int kMaxMarkings = 5;

std::string set_str(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out + "}";
}

} // namespace

SpinSignature SpinSignature::make(int g, std::vector<int> twists) {
    SpinSignature sig{g, static_cast<int>(twists.size()), std::move(twists)};
    check_signature(sig);
    return sig;
}

int SpinSignature::twist_sum() const { return std::accumulate(m.begin(), m.end(), 0); }

std::string SpinSignature::str() const {
    std::string out = "(" + std::to_string(g) + "," + std::to_string(n) + ",(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += (i ? "," : "") + std::to_string(m[i]);
    }
    return out + "))";
}

void check_signature(const SpinSignature& sig) {
    if (sig.g < 0 || sig.n < 0 || 2 * sig.g - 2 + sig.n <= 0) {
        throw StructuralError("signature " + sig.str() + " violates 2g-2+n > 0");
    }
    if (static_cast<int>(sig.m.size()) != sig.n) {
        throw StructuralError("signature " + sig.str() + " has a twist vector of the wrong length");
    }
    for (int t : sig.m) {
        if (t != 0 && t != 1) {
            throw StructuralError("signature " + sig.str() + " has a twist outside {0,1}");
        }
    }
}

bool is_nonempty(const SpinSignature& sig) {
    check_signature(sig);
    return sig.twist_sum() % 2 == 0;
}

int spin_degree(const SpinSignature& sig) {
    if (!is_nonempty(sig)) {
        throw EmptinessError("spin moduli space " + sig.str() + " is empty (odd twist sum)");
    }
    return sig.g - 1 + sig.twist_sum() / 2;
}

long long fiber_degree(const SpinSignature& sig) {
    if (!is_nonempty(sig)) {
        throw EmptinessError("spin moduli space " + sig.str() + " is empty (odd twist sum)");
    }
    return 1LL << (2 * sig.g);
}

std::string to_string(Kind k) {
    switch (k) {
    case Kind::AIrr: return "A_irr";
    case Kind::BIrr: return "B_irr";
    case Kind::Delta: return "Delta";
    case Kind::A: return "A";
    case Kind::B: return "B";
    }
    return "?";
}

std::string to_string(NodeMode m) { return m == NodeMode::Ordinary ? "ordinary" : "exceptional"; }

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

int Side::twist_sum() const { return std::accumulate(twists.begin(), twists.end(), 0); }

std::string BoundaryDivisorType::name() const {
    switch (kind) {
    case Kind::AIrr:
    case Kind::BIrr: return to_string(kind);
    default: break;
    }
    std::string out = to_string(kind) + "_{" + std::to_string(g1) + "," + set_str(s1) + "}";
    if (sides.size() == 2 && sides[0].parity && sides[1].parity) {
        out += "[" + to_string(*sides[0].parity) + "|" + to_string(*sides[1].parity) + "]";
    }
    return out;
}

std::string BoundaryDivisorType::class_label() const {
    std::string head;
    switch (kind) {
    case Kind::AIrr: return "alpha_irr";
    case Kind::BIrr: return "beta_irr";
    case Kind::Delta: head = "delta"; break;
    case Kind::A: head = "alpha"; break;
    case Kind::B: head = "beta"; break;
    }
    std::string out = head + "_{" + std::to_string(g1) + "," + set_str(s1) + "}";
    if (sides.size() == 2 && sides[0].parity && sides[1].parity) {
        out += "[" + to_string(*sides[0].parity) + "|" + to_string(*sides[1].parity) + "]";
    }
    return out;
}

namespace {

bool zero_twist(const Side& s) {
    return std::all_of(s.twists.begin(), s.twists.end(), [](int t) { return t == 0; });
}

bool refinable(const Side& s) { return s.genus > 0 && zero_twist(s); }

std::string curve_phrase(int genus, int points) {
    const std::string k = std::to_string(points);
    if (genus == 0) {
        return "smooth " + k + "-pointed rational curve C";
    }
    if (genus == 1) {
        return "smooth " + k + "-pointed elliptic curve E";
    }
    return "smooth " + k + "-pointed genus " + std::to_string(genus) + " curve C";
}

std::string bundle_phrase(const Side& s) {
    if (s.genus == 0) {
        // Unique root on a rational curve: O_C of degree -1 + (sum of twists)/2.
        const int degree = -1 + s.twist_sum() / 2;
        if (degree == 0) {
            return "the line bundle O_C";
        }
        if (degree == 1) {
            return "the line bundle O_C(P)";
        }
        return "the line bundle O_C(" + std::to_string(degree) + "P)";
    }
    if (s.parity) {
        if (s.genus == 1) {
            return *s.parity == Parity::Even ? "an even root of O_E" : "the line bundle O_E";
        }
        return *s.parity == Parity::Even ? "an even theta-characteristic" : "an odd theta-characteristic";
    }
    std::string points;
    for (std::size_t i = 0; i < s.twists.size(); ++i) {
        if (s.twists[i] == 1) {
            points += (points.empty() ? "p_" : "+p_") + std::to_string(i + 1);
        }
    }
    if (points.empty()) {
        return s.genus == 1 ? "a root of O_E" : "a theta-characteristic";
    }
    return s.genus == 1 ? "a square root of O_E(" + points + ")" : "a square root of omega_C(" + points + ")";
}

void describe(Side& s) { s.description = curve_phrase(s.genus, s.point_count()) + " carrying " + bundle_phrase(s); }

Side make_side(int genus, std::vector<int> markings, const SpinSignature& sig, std::vector<int> node_twists) {
    Side s;
    s.genus = genus;
    for (int label : markings) {
        s.twists.push_back(sig.m[label - 1]);
    }
    s.twists.insert(s.twists.end(), node_twists.begin(), node_twists.end());
    s.markings = std::move(markings);
    return s;
}

// True when `a` should be the distinguished first side of an unordered split.
bool comes_first(const Side& a, const Side& b, bool even_split) {
    if (even_split && refinable(a) != refinable(b)) {
        return refinable(a);
    }
    if (a.genus != b.genus) {
        return a.genus > b.genus;
    }
    if (a.markings.size() != b.markings.size()) {
        return a.markings.size() < b.markings.size();
    }
    return a.markings <= b.markings;
}

bool identical_sides(const Side& a, const Side& b) {
    return a.genus == b.genus && a.markings == b.markings && a.twists == b.twists;
}

std::vector<Parity> realizable_parities(int genus) {
    const auto counts = arf::theta_counts_closed_form(genus);
    std::vector<Parity> out;
    if (counts.even > 0) {
        out.push_back(Parity::Even);
    }
    if (counts.odd > 0) {
        out.push_back(Parity::Odd);
    }
    return out;
}

auto order_key(const BoundaryDivisorType& t) {
    const bool irreducible = t.kind == Kind::AIrr || t.kind == Kind::BIrr;
    std::vector<int> parities;
    for (const auto& s : t.sides) {
        parities.push_back(s.parity ? static_cast<int>(*s.parity) : -1);
    }
    return std::make_tuple(irreducible ? 0 : 1, irreducible ? static_cast<int>(t.kind) : 0, t.s1.size(), t.s1, t.g1,
                           static_cast<int>(t.kind), parities);
}

} // namespace

bool satisfies_invariants(const BoundaryDivisorType& t) {
    for (const auto& s : t.sides) {
        if (!s.stable() || s.twist_sum() % 2 != 0) {
            return false;
        }
        if (s.parity && !refinable(s)) {
            return false;
        }
    }
    switch (t.kind) {
    case Kind::AIrr:
    case Kind::BIrr: return t.sides.size() == 1;
    case Kind::Delta: return t.sides.size() == 2 && t.node == NodeMode::Ordinary && t.sides[0].twists.back() == 1;
    case Kind::A:
    case Kind::B: return t.sides.size() == 2 && t.node == NodeMode::Exceptional && t.sides[0].twists.back() == 0;
    }
    return false;
}

std::vector<BoundaryDivisorType> enumerate_boundary(const SpinSignature& sig) {
    if (!is_nonempty(sig)) {
        throw EmptinessError("spin moduli space " + sig.str() + " is empty (odd twist sum)");
    }
    if (sig.g > kMaxGenus || sig.n > kMaxMarkings) {
        throw WindowError("signature " + sig.str() + " is out of supported window g <= 2, n <= 5");
    }
    std::vector<int> all(static_cast<std::size_t>(sig.n));
    std::iota(all.begin(), all.end(), 1);

    std::vector<BoundaryDivisorType> out;
    if (sig.g >= 1) {
        for (Kind kind : {Kind::AIrr, Kind::BIrr}) {
            BoundaryDivisorType t;
            t.kind = kind;
            t.node = kind == Kind::AIrr ? NodeMode::Ordinary : NodeMode::Exceptional;
            const int node_twist = kind == Kind::AIrr ? 1 : 0;
            t.sides.push_back(make_side(sig.g - 1, all, sig, {node_twist, node_twist}));
            describe(t.sides.back());
            out.push_back(std::move(t));
        }
    }

    for (int g1 = 0; g1 <= sig.g; ++g1) {
        for (unsigned mask = 0; mask < (1U << sig.n); ++mask) {
            std::vector<int> s1;
            std::vector<int> s2;
            for (int label : all) {
                ((mask >> (label - 1) & 1U) ? s1 : s2).push_back(label);
            }
            int sum1 = 0;
            for (int label : s1) {
                sum1 += sig.m[label - 1];
            }
            const bool odd = sum1 % 2 == 1;
            const int node_twist = odd ? 1 : 0;
            Side first = make_side(g1, s1, sig, {node_twist});
            Side second = make_side(sig.g - g1, s2, sig, {node_twist});
            if (!first.stable() || !second.stable() || !comes_first(first, second, !odd)) {
                continue;
            }
            if (!identical_sides(first, second) && comes_first(second, first, !odd)) {
                // Unreachable for distinct marking sets; guards the orientation rule.
                throw std::logic_error("split orientation is ambiguous");
            }

            if (odd) {
                BoundaryDivisorType t{Kind::Delta, NodeMode::Ordinary, g1, s1, {first, second}};
                describe(t.sides[0]);
                describe(t.sides[1]);
                out.push_back(std::move(t));
                continue;
            }

            std::vector<std::optional<Parity>> options1{std::nullopt};
            std::vector<std::optional<Parity>> options2{std::nullopt};
            if (refinable(first)) {
                options1.assign({});
                for (Parity p : realizable_parities(first.genus)) {
                    options1.emplace_back(p);
                }
            }
            if (refinable(second)) {
                options2.assign({});
                for (Parity p : realizable_parities(second.genus)) {
                    options2.emplace_back(p);
                }
            }
            const bool symmetric = identical_sides(first, second);
            for (const auto& p1 : options1) {
                for (const auto& p2 : options2) {
                    if (symmetric && p1 && p2 && *p2 < *p1) {
                        continue;
                    }
                    BoundaryDivisorType t;
                    t.kind = (p1 && *p1 == Parity::Odd) ? Kind::B : Kind::A;
                    t.node = NodeMode::Exceptional;
                    t.g1 = g1;
                    t.s1 = s1;
                    t.sides = {first, second};
                    t.sides[0].parity = p1;
                    t.sides[1].parity = p2;
                    describe(t.sides[0]);
                    describe(t.sides[1]);
                    out.push_back(std::move(t));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return order_key(a) < order_key(b); });
    return out;
}

PicGenerators pic_generators(const SpinSignature& sig) {
    const auto boundary = enumerate_boundary(sig);
    PicGenerators pic;
    pic.caveat = sig.g < 5;
    pic.labels.emplace_back("lambda");
    for (int i = 1; i <= sig.n; ++i) {
        pic.labels.push_back("psi_" + std::to_string(i));
    }
    for (const auto& t : boundary) {
        pic.labels.push_back(t.class_label());
    }
    return pic;
}

int pic_generator_count(const SpinSignature& sig) { return pic_generators(sig).count(); }

namespace {

ordered_json side_json(const Side& s) {
    ordered_json j;
    j["genus"] = s.genus;
    j["markings"] = s.markings;
    j["twists"] = s.twists;
    j["parity"] = s.parity ? ordered_json(to_string(*s.parity)) : ordered_json(nullptr);
    j["description"] = s.description;
    return j;
}

ordered_json type_json(const BoundaryDivisorType& t) {
    ordered_json j;
    j["kind"] = to_string(t.kind);
    j["name"] = t.name();
    if (t.kind == Kind::AIrr || t.kind == Kind::BIrr) {
        j["split"] = nullptr;
    } else {
        j["split"] = {{"g1", t.g1}, {"S1", t.s1}};
    }
    j["node"] = to_string(t.node);
    auto parity = ordered_json::array();
    for (const auto& s : t.sides) {
        parity.push_back(s.parity ? ordered_json(to_string(*s.parity)) : ordered_json(nullptr));
    }
    j["parity"] = std::move(parity);
    auto sides = ordered_json::array();
    for (const auto& s : t.sides) {
        sides.push_back(side_json(s));
    }
    j["sides"] = std::move(sides);
    return j;
}

} // namespace

std::string to_text(const BoundaryDivisorType& t) { return type_json(t).dump(); }

std::string to_text(const std::vector<BoundaryDivisorType>& types) {
    std::string out;
    for (const auto& t : types) {
        out += to_text(t) + "\n";
    }
    return out;
}

} // namespace spinmod::spin
