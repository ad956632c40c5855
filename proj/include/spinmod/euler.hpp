#pragma once

#include "spinmod/arf.hpp"
#include "spinmod/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace spinmod::euler {

// Euler characteristics here are of complex algebraic strata, so the
// topological and compactly supported versions agree and are additive over
// locally closed stratifications.

/// chi(M_{0,n}) via chi(M_{0,n+1}) = (2 - n) chi(M_{0,n}), chi(M_{0,3}) = 1.
[[nodiscard]] Rational chi_m0n(int n);

/// chi(X / G) = (1/|G|) sum_g chi(X^g). The first entry belongs to the identity.
[[nodiscard]] Rational burnside_chi(int group_order, std::span<const Rational> fixed_chis);

struct CoverStratum {
    long long fiber_size = 0;
    Rational chi;
};

/// Sum of fiber_size * chi over strata of the base.
[[nodiscard]] Rational stratified_cover_chi(std::span<const CoverStratum> strata);

/// Genus g solving 2g - 2 = d (2 h - 2) + ramification_excess. A non-integral
/// or negative answer means no such cover exists.
[[nodiscard]] Rational rh_genus(long long degree, long long base_genus, long long ramification_excess);

/// Upper bound on the genus of a connected degree-d cover of a genus-h curve
/// branched over at most `branch_points` points.
[[nodiscard]] Rational rh_genus_bound(long long degree, long long base_genus, long long branch_points);

/// A stratum of M_{1,n} over which the automorphism group of the pointed
/// curve acts on H_1(E, Z/2) through `generators` (basis images; empty = trivially).
struct ThetaStratum {
    std::string name;
    Rational chi;
    std::vector<std::vector<arf::Vec>> generators;
};

/// chi of the space of smooth pointed curves with a theta characteristic of
/// the given Arf value: each stratum contributes chi times the number of
/// automorphism orbits on those characteristics.
[[nodiscard]] Rational theta_orbit_chi(int genus, std::span<const ThetaStratum> strata, int arf_value);

enum class Provenance { Cited, Derived, Elementary };

[[nodiscard]] std::string to_string(Provenance p);
[[nodiscard]] Provenance parse_provenance(const std::string& text);

struct Constant {
    std::string name;
    Rational value;
    Provenance provenance = Provenance::Elementary;
    /// Formula anchor locating the value in the source argument.
    std::string quote;
    /// How the value was obtained (oracle description for derived values).
    std::string note;

    friend bool operator==(const Constant&, const Constant&) = default;
};

/// coeff * product of factors; an empty factor list is the constant coeff.
struct Term {
    Rational coeff;
    std::vector<std::string> factors;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Declares that `whole` is the disjoint union of `parts` (repeats allowed).
struct Partition {
    std::string whole;
    std::vector<std::string> parts;

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct ChiLedger {
    std::string name;
    std::string citation;
    std::vector<Constant> constants;
    std::vector<Partition> partitions;
    std::vector<Term> terms;
    Rational expected;

    friend bool operator==(const ChiLedger&, const ChiLedger&) = default;
};

struct PartitionCheck {
    std::string whole;
    Rational whole_value;
    Rational parts_sum;
    bool pass = false;
};

struct LedgerResult {
    std::string name;
    Rational value;
    Rational expected;
    std::vector<PartitionCheck> partitions;
    /// value == expected and every partition adds up.
    bool pass = false;
};

/// Evaluates sum coeff * prod factors. Factor names resolve in the ledger's
/// constants first, then in `previous` (results of earlier ledgers).
/// Throws std::invalid_argument on an unresolved name or duplicate constant.
[[nodiscard]] LedgerResult ledger_eval(const ChiLedger& ledger, const std::map<std::string, Rational>& previous = {});

/// Evaluates ledgers in order, feeding each result to the later ones by name.
[[nodiscard]] std::vector<LedgerResult> evaluate_book(std::span<const ChiLedger> ledgers);

[[nodiscard]] std::string to_text(const ChiLedger& ledger);
[[nodiscard]] ChiLedger ledger_from_text(const std::string& text);

/// Oracle-produced values that seed the bundled ledgers.
struct DerivedConstants {
    Rational chi_m04;
    Rational chi_m05;
    Rational chi_m04_prime;
    Rational chi_m05_prime;
    Rational chi_s11_plus;
    Rational chi_s11_minus;
    Rational chi_s12_00_plus;
    Rational chi_s12_00_minus;
};

[[nodiscard]] DerivedConstants derive_constants();

/// Strata of M_{1,1} and M_{1,2} with their mod-2 automorphism actions.
[[nodiscard]] std::vector<ThetaStratum> m11_theta_strata();
[[nodiscard]] std::vector<ThetaStratum> m12_theta_strata();

/// The bundled ledgers, in dependency order:
/// chi_Y, chi_S12_11, chi_S13_110, chi_S12bar, chi_S13bar.
[[nodiscard]] std::vector<ChiLedger> bundled_ledgers();

/// Looks up one bundled ledger by name; throws std::invalid_argument if unknown.
[[nodiscard]] ChiLedger bundled_ledger(const std::string& name);

} // namespace spinmod::euler
