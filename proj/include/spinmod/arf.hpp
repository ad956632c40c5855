#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinmod::arf {

/// Vector of (Z/2)^{2g}: bit i is the a_{i+1} coordinate, bit g+i the b_{i+1} coordinate.
using Vec = std::uint32_t;

/// Largest genus accepted by the vector encoding.
inline constexpr int kMaxGenus = 8;

/// Standard symplectic form on (Z/2)^{2g}: a_i . b_j = delta_ij, a.a = b.b = 0.
class SymplecticSpace {
  public:
    explicit SymplecticSpace(int genus);

    [[nodiscard]] int genus() const { return genus_; }
    [[nodiscard]] int dimension() const { return 2 * genus_; }
    [[nodiscard]] Vec size() const { return Vec{1} << dimension(); }
    [[nodiscard]] Vec a(int i) const { return Vec{1} << i; }
    [[nodiscard]] Vec b(int i) const { return Vec{1} << (genus_ + i); }
    [[nodiscard]] Vec basis(int j) const { return Vec{1} << j; }

    [[nodiscard]] int pair(Vec x, Vec y) const;

    /// x -> x + (x.v) v.
    [[nodiscard]] Vec transvect(Vec x, Vec v) const { return pair(x, v) ? x ^ v : x; }

    friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

  private:
    int genus_;
};

/// Quadratic refinement of the symplectic form, stored by its values on
/// a_1..a_g, b_1..b_g and extended by Q(x+y) = Q(x) + Q(y) + x.y.
class QuadraticForm {
  public:
    QuadraticForm(SymplecticSpace space, Vec basis_values);

    /// All 2^{2g} forms, in basis-value order.
    static std::vector<QuadraticForm> all(int genus);

    /// Parses a 2g-character bit string ordered a_1..a_g, b_1..b_g.
    static QuadraticForm parse(const std::string& bits);

    [[nodiscard]] const SymplecticSpace& space() const { return space_; }
    [[nodiscard]] Vec basis_values() const { return values_; }

    [[nodiscard]] int operator()(Vec v) const { return evaluate(v); }
    [[nodiscard]] int evaluate(Vec v) const;

    /// Same value as evaluate(), accumulated over the basis in the given order.
    [[nodiscard]] int evaluate_in_order(Vec v, const std::vector<int>& basis_order) const;

    /// The form x -> Q(f(x)) where f sends basis vector j to images[j].
    [[nodiscard]] QuadraticForm pullback(const std::vector<Vec>& images) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

  private:
    SymplecticSpace space_;
    Vec values_;
};

/// Sum of Q(a_i) Q(b_i) mod 2.
[[nodiscard]] int arf(const QuadraticForm& q);

struct ParityCounts {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;

    friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

/// Exhaustive count of forms by Arf invariant. Window 1 <= g <= 4.
[[nodiscard]] ParityCounts count_by_arf(int genus);

/// (2^{g-1}(2^g+1), 2^{g-1}(2^g-1)) for g >= 1; (1, 0) for g = 0.
[[nodiscard]] ParityCounts theta_counts_closed_form(int genus);

struct OrbitSummary {
    int genus = 0;
    /// Orbit sizes, largest first.
    std::vector<std::uint64_t> sizes;
    /// Arf value of each orbit, aligned with `sizes`.
    std::vector<int> arf_values;
    /// True when every orbit is contained in an Arf level set.
    bool arf_constant = false;
};

/// Orbits of the group generated by all symplectic transvections, acting on
/// forms by pullback. Window 1 <= g <= 3.
[[nodiscard]] OrbitSummary transvection_orbits(int genus);

/// Number of orbits on the forms of the given Arf value under the group
/// generated by `generators` (each a list of basis images, assumed symplectic).
[[nodiscard]] std::uint64_t orbit_count(int genus, const std::vector<std::vector<Vec>>& generators, int arf_value);

} // namespace spinmod::arf
