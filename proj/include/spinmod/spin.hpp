#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spinmod::spin {

/// Index (g, n, m_1..m_n) of a compactified spin moduli space with twists m_i in {0, 1}.
struct SpinSignature {
    int g = 0;
    int n = 0;
    std::vector<int> m;

    /// Signature with n taken from the twist vector.
    static SpinSignature make(int g, std::vector<int> twists);

    [[nodiscard]] int twist_sum() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const SpinSignature&, const SpinSignature&) = default;
};

/// Throws StructuralError unless 2g-2+n > 0, n == |m| and every m_i is 0 or 1.
void check_signature(const SpinSignature& sig);

[[nodiscard]] bool is_nonempty(const SpinSignature& sig);

/// Degree g - 1 + (sum m_i) / 2 of the spin line bundle. Throws EmptinessError on odd twist sum.
[[nodiscard]] int spin_degree(const SpinSignature& sig);

/// Generic number of spin structures over a smooth curve, 2^{2g}.
[[nodiscard]] long long fiber_degree(const SpinSignature& sig);

enum class Kind { AIrr, BIrr, Delta, A, B };
enum class NodeMode { Ordinary, Exceptional };
enum class Parity { Even, Odd };

[[nodiscard]] std::string to_string(Kind k);
[[nodiscard]] std::string to_string(NodeMode m);
[[nodiscard]] std::string to_string(Parity p);

/// One side of a one-node degeneration (or the normalization of an
/// irreducible one). Points are the side's markings in label order followed
/// by the node branch(es); `twists` is aligned with that point list.
struct Side {
    int genus = 0;
    std::vector<int> markings;
    std::vector<int> twists;
    std::optional<Parity> parity;
    std::string description;

    [[nodiscard]] int point_count() const { return static_cast<int>(twists.size()); }
    [[nodiscard]] int twist_sum() const;
    [[nodiscard]] bool stable() const { return 2 * genus - 2 + point_count() > 0; }

    friend bool operator==(const Side&, const Side&) = default;
};

/// A boundary divisor of the spin moduli space: one-node topological type
/// plus the spin decoration of the node and of the sides.
struct BoundaryDivisorType {
    Kind kind = Kind::AIrr;
    NodeMode node = NodeMode::Ordinary;
    /// Distinguished side data (g1, S1); unset for irreducible kinds.
    int g1 = 0;
    std::vector<int> s1;
    /// One side for irreducible kinds, two for separating ones.
    std::vector<Side> sides;

    /// Display name, e.g. "A_irr", "Delta_{1,{1}}", "B_{1,{}}".
    [[nodiscard]] std::string name() const;
    /// Class label, e.g. "alpha_irr", "delta_{1,{1}}", "beta_{1,{3}}".
    [[nodiscard]] std::string class_label() const;

    friend bool operator==(const BoundaryDivisorType&, const BoundaryDivisorType&) = default;
};

/// Checks side stability and per-side parity for a divisor type.
[[nodiscard]] bool satisfies_invariants(const BoundaryDivisorType& t);

/// Boundary divisor types of a nonempty signature in the window g <= 2, n <= 5.
[[nodiscard]] std::vector<BoundaryDivisorType> enumerate_boundary(const SpinSignature& sig);

struct PicGenerators {
    std::vector<std::string> labels;
    /// Free generation is only asserted for g >= 5.
    bool caveat = false;

    [[nodiscard]] int count() const { return static_cast<int>(labels.size()); }
};

/// Hodge class, psi classes and one boundary class per divisor type.
[[nodiscard]] PicGenerators pic_generators(const SpinSignature& sig);
[[nodiscard]] int pic_generator_count(const SpinSignature& sig);

/// Stable-field-order JSON record of a divisor type.
[[nodiscard]] std::string to_text(const BoundaryDivisorType& t);
[[nodiscard]] std::string to_text(const std::vector<BoundaryDivisorType>& types);

} // namespace spinmod::spin
