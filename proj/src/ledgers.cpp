// Bundled Euler-characteristic ledgers for the genus-one spin moduli spaces.
//
// Constants marked derived are produced here by their oracles (recursion,
// Burnside quotients, orbit counts of automorphisms on theta
// characteristics); nothing is solved backwards from an expected total.

#include "spinmod/euler.hpp"

#include <array>
#include <stdexcept>

namespace spinmod::euler {

namespace {

using arf::Vec;

// Actions on H_1(E, Z/2) with basis a = bit 0, b = bit 1.
const std::vector<Vec> kIdentity{0b01, 0b10};
// z -> iz on the square lattice: a -> b, b -> -a.
const std::vector<Vec> kQuarterTurn{0b10, 0b01};
// z -> omega z on the hexagonal lattice: a -> b, b -> -a-b.
const std::vector<Vec> kThirdTurn{0b10, 0b11};

const Rational kPoint(1);
const Rational kChiM11(1);  // the affine j-line
const Rational kChiM12(1);  // external value
const Rational kChiM13(0);  // external value

Constant cited(std::string name, Rational value, std::string quote, std::string note) {
    return {std::move(name), std::move(value), Provenance::Cited, std::move(quote), std::move(note)};
}

Constant derived(std::string name, Rational value, std::string quote, std::string note) {
    return {std::move(name), std::move(value), Provenance::Derived, std::move(quote), std::move(note)};
}

Constant elementary(std::string name, Rational value, std::string quote, std::string note) {
    return {std::move(name), std::move(value), Provenance::Elementary, std::move(quote), std::move(note)};
}

Term term(std::int64_t coeff, std::vector<std::string> factors) { return {Rational(coeff), std::move(factors)}; }

Rational chi_x() {
    // X (2-torsion second point) is isomorphic to M'_{0,4}.
    const std::array<Rational, 2> fixed{chi_m0n(4), Rational(1)};
    return burnside_chi(2, fixed);
}

} // namespace

std::vector<ThetaStratum> m11_theta_strata() {
    // Generic curves only have -1, which is trivial mod 2; j = 1728 and
    // j = 0 are the two points with extra automorphisms.
    return {
        {"M11_generic", kChiM11 - Rational(2), {kIdentity}},
        {"M11_j1728", kPoint, {kQuarterTurn}},
        {"M11_j0", kPoint, {kThirdTurn}},
    };
}

std::vector<ThetaStratum> m12_theta_strata() {
    const Rational x = chi_x();
    return {
        {"M12_generic", kChiM12 - x - kPoint, {}},
        {"X_open", x - kPoint, {kIdentity}},
        {"pt_lambda_minus1", kPoint, {kQuarterTurn}},
        {"pt_lambda_minus_omega", kPoint, {kThirdTurn}},
    };
}

DerivedConstants derive_constants() {
    DerivedConstants d;
    d.chi_m04 = chi_m0n(4);
    d.chi_m05 = chi_m0n(5);
    const std::array<Rational, 2> fixed4{d.chi_m04, Rational(1)};
    d.chi_m04_prime = burnside_chi(2, fixed4);
    // A transposition of two labels on a 5-pointed line fixes three points, so
    // it has no fixed configurations.
    const std::array<Rational, 2> fixed5{d.chi_m05, Rational(0)};
    d.chi_m05_prime = burnside_chi(2, fixed5);
    const auto s11 = m11_theta_strata();
    d.chi_s11_plus = theta_orbit_chi(1, s11, 0);
    d.chi_s11_minus = theta_orbit_chi(1, s11, 1);
    const auto s12 = m12_theta_strata();
    d.chi_s12_00_plus = theta_orbit_chi(1, s12, 0);
    d.chi_s12_00_minus = theta_orbit_chi(1, s12, 1);
    return d;
}

std::vector<ChiLedger> bundled_ledgers() {
    const DerivedConstants d = derive_constants();
    const Rational x = chi_x();

    ChiLedger y;
    y.name = "chi_Y";
    y.citation = "Y is doubly covered by M_{0,4} minus a point, away from one point of Y";
    y.constants = {
        derived("chi_M04", d.chi_m04, "chi(M_{0,4})", "recursion chi(M_{0,n+1}) = (2-n) chi(M_{0,n})"),
        elementary("chi_point", kPoint, "chi(point) = 1", "a point"),
    };
    y.terms = {
        {Rational(1, 2), {"chi_M04"}},
        {Rational(-1, 2), {"chi_point"}},
        term(1, {"chi_point"}),
    };
    y.expected = Rational(0);

    ChiLedger s12;
    s12.name = "chi_S12_11";
    s12.citation = "S_{1,2}^{(1,1)} -> M_{1,2}: fibers 4 generically, 2 over X, 1 and 2 over the special points";
    s12.constants = {
        cited("chi_M12", kChiM12, "chi(M_{1,2}) = 1", "external value, not recomputed"),
        derived("chi_X", x, "chi(M'_{0,4}) = 0",
                "X = M'_{0,4}; Burnside over the label swap, fixed locus the single configuration with cross-ratio -1"),
        derived("chi_M12_generic", kChiM12 - x - kPoint, "M_{1,2} \\ (X u {point})", "additivity"),
        derived("chi_X_open", x - kPoint, "X \\ {point}", "additivity"),
        elementary("chi_point", kPoint, "chi(point) = 1", "a point"),
    };
    s12.partitions = {{"chi_M12", {"chi_M12_generic", "chi_X_open", "chi_point", "chi_point"}}};
    s12.terms = {
        term(4, {"chi_M12_generic"}),
        term(2, {"chi_X_open"}),
        term(1, {"chi_point"}),
        term(2, {"chi_point"}),
    };
    s12.expected = Rational(1);

    const Rational chi_y = ledger_eval(y).value;
    ChiLedger s13;
    s13.name = "chi_S13_110";
    s13.citation = "S_{1,3}^{(1,1,0)} -> M_{1,3}: fibers 4 generically, 2 over Y, 2 over one special point";
    s13.constants = {
        cited("chi_M13", kChiM13, "chi(M_{1,3}) = 0", "external value, not recomputed"),
        derived("chi_M13_generic", kChiM13 - chi_y - kPoint, "M_{1,3} \\ (Y u {point})",
                "additivity, with chi(Y) from ledger chi_Y"),
        elementary("chi_point", kPoint, "chi(point) = 1", "a point"),
    };
    s13.partitions = {{"chi_M13", {"chi_M13_generic", "chi_Y", "chi_point"}}};
    s13.terms = {
        term(4, {"chi_M13_generic"}),
        term(2, {"chi_Y"}),
        term(2, {"chi_point"}),
    };
    s13.expected = Rational(-2);

    ChiLedger s12bar;
    s12bar.name = "chi_S12bar";
    s12bar.citation = "stratification of the compactified S_{1,2}^{(1,1)} by graph type";
    s12bar.constants = {
        derived("chi_M04prime", d.chi_m04_prime, "chi(M'_{0,4}) = 0", "Burnside: (chi(M_{0,4}) + 1) / 2"),
        derived("chi_S11_plus", d.chi_s11_plus, "chi(S_{1,1}^{(0),+})",
                "orbits of Aut(E) on the 3 even characteristics over the strata of the j-line: generic 3, j=1728 2, j=0 1"),
        derived("chi_S11_minus", d.chi_s11_minus, "chi(S_{1,1}^{(0),-}) = chi(M_{1,1})",
                "unique odd characteristic: one orbit on every stratum"),
    };
    s12bar.terms = {
        term(1, {"chi_S12_11"}),
        term(3, {"chi_M04prime"}),
        term(1, {"chi_S11_plus"}),
        term(1, {"chi_S11_minus"}),
        term(3, {}),
        term(1, {}),
    };
    s12bar.expected = Rational(6);

    ChiLedger s13bar;
    s13bar.name = "chi_S13bar";
    s13bar.citation = "stratification of the compactified S_{1,3}^{(1,1,0)} by graph type";
    s13bar.constants = {
        derived("chi_M04", d.chi_m04, "chi(M_{0,4})", "recursion chi(M_{0,n+1}) = (2-n) chi(M_{0,n})"),
        derived("chi_M04prime", d.chi_m04_prime, "chi(M'_{0,4}) = 0", "Burnside: (chi(M_{0,4}) + 1) / 2"),
        derived("chi_M05prime", d.chi_m05_prime, "chi(M'_{0,5})",
                "Burnside: (chi(M_{0,5}) + 0) / 2, the transposition has no fixed points"),
        derived("chi_S11_plus", d.chi_s11_plus, "chi(S_{1,1}^{(0),+})",
                "orbits of Aut(E) on the 3 even characteristics over the strata of the j-line"),
        derived("chi_S11_minus", d.chi_s11_minus, "chi(S_{1,1}^{(0),-})", "unique odd characteristic"),
        derived("chi_S12_00_plus", d.chi_s12_00_plus, "chi(S_{1,2}^{(0,0),+})",
                "orbits of Aut(E,p1,p2) on even characteristics over M_{1,2} strata: generic 3, X 3, "
                "lambda=-1 point 2, lambda=-omega point 1"),
        derived("chi_S12_00_minus", d.chi_s12_00_minus, "chi(S_{1,2}^{(0,0),-})",
                "unique odd characteristic over every M_{1,2} stratum"),
    };
    s13bar.terms = {
        term(1, {"chi_S13_110"}),
        term(2, {"chi_M05prime"}),
        term(1, {"chi_S11_plus", "chi_M04"}),
        term(1, {"chi_S11_minus", "chi_M04"}),
        term(2, {"chi_S12_11"}),
        term(1, {"chi_S12_00_plus"}),
        term(1, {"chi_S12_00_minus"}),
        term(3, {"chi_M04"}),
        term(12, {"chi_M04prime"}),
        term(3, {"chi_S11_plus"}),
        term(3, {"chi_S11_minus"}),
        term(9, {}),
        term(5, {}),
        term(2, {}),
    };
    s13bar.expected = Rational(18);

    return {y, s12, s13, s12bar, s13bar};
}

ChiLedger bundled_ledger(const std::string& name) {
    for (auto& ledger : bundled_ledgers()) {
        if (ledger.name == name) {
            return ledger;
        }
    }
    throw std::invalid_argument("no bundled ledger named '" + name + "'");
}

} // namespace spinmod::euler
