#pragma once

#include "spinmod/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinmod::induction {

/// Degree above which the rational homology of a level structure over
/// M_{g,n} vanishes: n-3 (g = 0), 4g-5 (g > 0, n = 0), 4g-4+n (g > 0, n > 0).
[[nodiscard]] int harer_bound(int g, int n);

/// Vanishing of H^k_c of the open moduli space via Poincare duality.
struct VanishingReport {
    int g = 0;
    int n = 0;
    int k = 0;
    int c_value = 0;
    int complex_dim = 0;
    /// 2 * complex_dim - k > c_value.
    bool vanishes = false;
    /// The stated vanishing range for this k, when there is one.
    std::optional<bool> stated_vanishes;
    std::string stated_range;
    /// Stated range and duality computation disagree.
    bool flagged = false;
};

[[nodiscard]] VanishingReport hc_vanishes(int g, int n, int k);

/// Stable (g, n) in the window where H^k_c is not known to vanish. Returns
/// nothing when k exceeds twice the largest complex dimension in the window.
[[nodiscard]] std::vector<std::pair<int, int>> base_cases(int k, int g_max, int n_max);

/// Integer Betti vectors of a smooth compact space of complex dimension d.
struct BettiConstraintSystem {
    int dimension = 0;
    Rational chi;
    std::map<int, long long> fixed;
    std::map<int, long long> lower;
    std::map<int, long long> upper;
    /// Search bound for every b_k without an explicit upper bound.
    long long cap = 64;
};

struct BettiResolution {
    enum class Status { Unique, Ambiguous, Infeasible };
    Status status = Status::Infeasible;
    /// The solution when unique; up to two witnesses when ambiguous.
    std::vector<std::vector<long long>> solutions;
    std::size_t solution_count = 0;

    [[nodiscard]] std::string status_name() const;
};

/// Exhaustive search over b_0..b_d with b_k = b_{2d-k} and sum (-1)^k b_k = chi.
/// Bounds given for k > d apply to the dual index.
[[nodiscard]] BettiResolution resolve_betti(const BettiConstraintSystem& sys);

[[nodiscard]] std::string to_text(const VanishingReport& r);
[[nodiscard]] BettiConstraintSystem betti_system_from_text(const std::string& text);
[[nodiscard]] std::string to_text(const BettiConstraintSystem& sys);

} // namespace spinmod::induction
