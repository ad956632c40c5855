#include "spinmod/verify.hpp"

#include "spinmod/arf.hpp"
#include "spinmod/euler.hpp"
#include "spinmod/induction.hpp"
#include "spinmod/relations.hpp"
#include "spinmod/spin.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace spinmod::verify {

namespace {

class Recorder {
  public:
    explicit Recorder(VerificationReport& report) : report_(report) {}

    void equal(std::string name, std::string anchor, std::string expected, std::string got) {
        const bool pass = expected == got;
        report_.checks.push_back({std::move(name), std::move(anchor), std::move(expected), std::move(got), pass});
    }

    template <typename T>
    void equal(std::string name, std::string anchor, const T& expected, const T& got) {
        equal(std::move(name), std::move(anchor), render(expected), render(got));
    }

  private:
    template <typename T>
    static std::string render(const T& v) {
        if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
            return v;
        } else {
            std::ostringstream os;
            os << v;
            return os.str();
        }
    }

    VerificationReport& report_;
};

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + xs[i];
    }
    return out;
}

template <typename T>
std::string tuple_str(const std::vector<T>& xs) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << (i ? "," : "") << xs[i];
    }
    os << ")";
    return os.str();
}

std::string pairs_str(const std::vector<std::pair<int, int>>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + std::string("(") + std::to_string(xs[i].first) + "," + std::to_string(xs[i].second) + ")";
    }
    return out + "}";
}

std::vector<std::string> names_of(const std::vector<spin::BoundaryDivisorType>& types) {
    std::vector<std::string> out;
    for (const auto& t : types) {
        out.push_back(t.name());
    }
    return out;
}

const spin::BoundaryDivisorType& find_type(const std::vector<spin::BoundaryDivisorType>& types, const std::string& name) {
    const auto it = std::find_if(types.begin(), types.end(), [&](const auto& t) { return t.name() == name; });
    if (it == types.end()) {
        throw std::runtime_error("boundary type " + name + " missing");
    }
    return *it;
}

// Description of the positive-genus side, or of the normalization.
std::string lead_description(const spin::BoundaryDivisorType& t) { return t.sides.front().description; }

void boundary_suite(Recorder& rec) {
    using spin::SpinSignature;
    const auto s1211 = SpinSignature::make(1, {1, 1});
    const auto s13110 = SpinSignature::make(1, {1, 1, 0});

    rec.equal("nonempty (1,1,(1))", "S_{1,1}^{(1)} empty by degree", false, spin::is_nonempty(SpinSignature::make(1, {1})));
    rec.equal("nonempty (2,1,(1))", "S_{2,1}^{(1)} empty by degree", false, spin::is_nonempty(SpinSignature::make(2, {1})));
    rec.equal("degree (1,2,(1,1))", "deg zeta = g - 1 + (sum m_i)/2", 1, spin::spin_degree(s1211));
    rec.equal("degree (1,3,(1,1,0))", "deg zeta = g - 1 + (sum m_i)/2", 1, spin::spin_degree(s13110));
    rec.equal("fiber degree (1,2,(1,1))", "projection to M_{1,2} generically 4:1", 4LL, spin::fiber_degree(s1211));
    rec.equal("fiber degree (1,3,(1,1,0))", "projection to M_{1,3} generically 4:1", 4LL, spin::fiber_degree(s13110));
    rec.equal("fiber degree (0,4,(0,0,0,0))", "S_{0,n}^{(m)} = M_{0,n}", 1LL,
              spin::fiber_degree(SpinSignature::make(0, {0, 0, 0, 0})));

    const auto b1211 = spin::enumerate_boundary(s1211);
    rec.equal("boundary (1,2,(1,1))", "A_irr, B_irr, A_{1,{}}, B_{1,{}}", std::string("A_irr, B_irr, A_{1,{}}, B_{1,{}}"),
              join(names_of(b1211)));
    rec.equal("A_irr side (1,2,(1,1))", "4-pointed rational curve with O_C(P), ordinary node",
              std::string("smooth 4-pointed rational curve C carrying the line bundle O_C(P)"),
              lead_description(find_type(b1211, "A_irr")));
    rec.equal("B_irr side (1,2,(1,1))", "4-pointed rational curve with O_C, exceptional component",
              std::string("smooth 4-pointed rational curve C carrying the line bundle O_C"),
              lead_description(find_type(b1211, "B_irr")));
    rec.equal("A_{1,{}} elliptic side (1,2,(1,1))", "even root of O_E",
              std::string("smooth 1-pointed elliptic curve E carrying an even root of O_E"),
              lead_description(find_type(b1211, "A_{1,{}}")));
    rec.equal("B_{1,{}} elliptic side (1,2,(1,1))", "O_E on the elliptic tail",
              std::string("smooth 1-pointed elliptic curve E carrying the line bundle O_E"),
              lead_description(find_type(b1211, "B_{1,{}}")));
    rec.equal("B_{1,{}} rational side (1,2,(1,1))", "3-pointed rational curve with O_C",
              std::string("smooth 3-pointed rational curve C carrying the line bundle O_C"),
              find_type(b1211, "B_{1,{}}").sides[1].description);

    const auto b13110 = spin::enumerate_boundary(s13110);
    rec.equal("boundary (1,3,(1,1,0))", "eight boundary components",
              std::string("A_irr, B_irr, A_{1,{}}, B_{1,{}}, Delta_{1,{1}}, Delta_{1,{2}}, A_{1,{3}}, B_{1,{3}}"),
              join(names_of(b13110)));
    for (const char* delta : {"Delta_{1,{1}}", "Delta_{1,{2}}"}) {
        rec.equal(std::string(delta) + " elliptic side (1,3,(1,1,0))", "square root of O_E(p_1+p_2), ordinary node",
                  std::string("smooth 2-pointed elliptic curve E carrying a square root of O_E(p_1+p_2)"),
                  lead_description(find_type(b13110, delta)));
        rec.equal(std::string(delta) + " rational side (1,3,(1,1,0))", "3-pointed rational curve with O_C",
                  std::string("smooth 3-pointed rational curve C carrying the line bundle O_C"),
                  find_type(b13110, delta).sides[1].description);
    }
    rec.equal("A_{1,{3}} elliptic side (1,3,(1,1,0))", "2-pointed E with an even root of O_E",
              std::string("smooth 2-pointed elliptic curve E carrying an even root of O_E"),
              lead_description(find_type(b13110, "A_{1,{3}}")));
    rec.equal("B_{1,{3}} elliptic side (1,3,(1,1,0))", "2-pointed E with O_E",
              std::string("smooth 2-pointed elliptic curve E carrying the line bundle O_E"),
              lead_description(find_type(b13110, "B_{1,{3}}")));
    rec.equal("A_{1,{}} rational side (1,3,(1,1,0))", "4-pointed rational curve with O_C",
              std::string("smooth 4-pointed rational curve C carrying the line bundle O_C"),
              find_type(b13110, "A_{1,{}}").sides[1].description);

    rec.equal("pic generators (1,2,(1,1))", "oracle: 1 + n + #boundary types", 7, spin::pic_generator_count(s1211));
    rec.equal("pic generators (1,3,(1,1,0))", "oracle: 1 + n + #boundary types", 12, spin::pic_generator_count(s13110));
    rec.equal("pic generators (0,4,(0,0,0,0))", "oracle: M_{0,4} has 3 boundary points", 8,
              spin::pic_generator_count(SpinSignature::make(0, {0, 0, 0, 0})));
    rec.equal("boundary count (2,0,())", "oracle: 2 irreducible + 3 parity classes on the (1|1) split", 5,
              static_cast<int>(spin::enumerate_boundary(SpinSignature::make(2, {})).size()));
}

void arf_suite(Recorder& rec) {
    auto counts = [](const arf::ParityCounts& c) {
        return "(" + std::to_string(c.even) + "," + std::to_string(c.odd) + ")";
    };
    rec.equal("theta counts g=1", "one odd and three even theta-characteristics", std::string("(3,1)"),
              counts(arf::count_by_arf(1)));
    rec.equal("theta counts g=2", "six odd and ten even theta-characteristics", std::string("(10,6)"),
              counts(arf::count_by_arf(2)));
    for (int g = 1; g <= 4; ++g) {
        rec.equal("brute force = 2^{g-1}(2^g +- 1), g=" + std::to_string(g), "oracle: exhaustive count over 2^{2g} forms",
                  counts(arf::theta_counts_closed_form(g)), counts(arf::count_by_arf(g)));
    }
    for (int g = 1; g <= 3; ++g) {
        const auto orbits = arf::transvection_orbits(g);
        rec.equal("transvection orbits g=" + std::to_string(g), "two isomorphism classes of quadratic forms", 2,
                  static_cast<int>(orbits.sizes.size()));
        rec.equal("orbits are Arf level sets g=" + std::to_string(g), "oracle: Arf constant on orbits", true,
                  orbits.arf_constant);
    }
    for (int g = 1; g <= 3; ++g) {
        bool holds = true;
        const arf::SymplecticSpace space(g);
        for (const auto& q : arf::QuadraticForm::all(g)) {
            for (arf::Vec x = 0; x < space.size(); ++x) {
                for (arf::Vec y = 0; y < space.size(); ++y) {
                    holds = holds && q(x ^ y) == (q(x) ^ q(y) ^ space.pair(x, y));
                }
            }
        }
        rec.equal("quadratic identity exhaustive g=" + std::to_string(g), "Q(x+y) = Q(x) + Q(y) + x.y", true, holds);
    }
}

void euler_suite(Recorder& rec) {
    using euler::CoverStratum;
    const auto d = euler::derive_constants();
    rec.equal("chi(M_{0,4})", "oracle: sphere minus three points", Rational(-1), d.chi_m04);
    rec.equal("chi(M'_{0,4})", "chi(M'_{0,4}) = 0", Rational(0), d.chi_m04_prime);
    rec.equal("chi(M'_{0,5})", "oracle: Burnside, transposition acts freely", Rational(1), d.chi_m05_prime);
    rec.equal("chi(S_{1,1}^{(0),-})", "S_{1,1}^{(0),-} = M_{1,1}", Rational(1), d.chi_s11_minus);
    rec.equal("chi(S_{1,1}^{(0),+})", "oracle: 3-sheeted cover of the j-line, fibers 2 and 1 at j=1728, 0", Rational(0),
              d.chi_s11_plus);
    rec.equal("chi(S_{1,2}^{(0,0),-})", "oracle: one odd characteristic over every stratum of M_{1,2}", Rational(1),
              d.chi_s12_00_minus);
    rec.equal("chi(S_{1,2}^{(0,0),+})", "oracle: orbits of Aut(E,p1,p2) on even characteristics", Rational(0),
              d.chi_s12_00_plus);

    const std::vector<CoverStratum> s12{{4, Rational(0)}, {2, Rational(-1)}, {1, Rational(1)}, {2, Rational(1)}};
    rec.equal("cover sum chi(S_{1,2}^{(1,1)})", "4 chi(M_{1,2}) - 2 chi(M'_{0,4}) - 3 = 1", Rational(1),
              euler::stratified_cover_chi(s12));
    const std::vector<CoverStratum> s13{{4, Rational(-1)}, {2, Rational(0)}, {2, Rational(1)}};
    rec.equal("cover sum chi(S_{1,3}^{(1,1,0)})", "4 chi(M_{1,3} \\ Y u pt) + 2 chi(Y) + 2 chi(pt) = -2", Rational(-2),
              euler::stratified_cover_chi(s13));

    const auto ledgers = euler::bundled_ledgers();
    const auto results = euler::evaluate_book(ledgers);
    const std::map<std::string, std::pair<Rational, std::string>> anchors{
        {"chi_Y", {Rational(0), "chi(Y) = chi(M_{0,4} \\ pt)/2 + 1 = 0"}},
        {"chi_S12_11", {Rational(1), "chi(S_{1,2}^{(1,1)}) = 1"}},
        {"chi_S13_110", {Rational(-2), "chi(S_{1,3}^{(1,1,0)}) = -2"}},
        {"chi_S12bar", {Rational(6), "... + 3 + 1 = 6"}},
        {"chi_S13bar", {Rational(18), "... + 9 + 5 + 2 = 18"}},
    };
    for (const auto& r : results) {
        const auto& [value, anchor] = anchors.at(r.name);
        rec.equal("ledger " + r.name, anchor, value, r.value);
        rec.equal("ledger " + r.name + " sealed", "oracle: total and partition sums agree", true, r.pass);
    }

    bool gate = true;
    for (long long deg = 1; deg <= 1000; ++deg) {
        gate = gate && euler::rh_genus(deg, 0, 0) <= Rational(0);
        gate = gate && euler::rh_genus_bound(deg, 0, 2) <= Rational(0);
    }
    rec.equal("Riemann-Hurwitz forces genus 0 (d <= 1000)", "2g-2 = d(-2) and 2g-2 <= d(-2) + 2(d-1)", true, gate);
}

void induction_suite(Recorder& rec) {
    rec.equal("c(0,5)", "c = n - 3 for g = 0", 2, induction::harer_bound(0, 5));
    rec.equal("c(2,0)", "c = 4g - 5 for g > 0, n = 0", 3, induction::harer_bound(2, 0));
    rec.equal("c(1,3)", "c = 4g - 4 + n for g > 0, n > 0", 3, induction::harer_bound(1, 3));
    rec.equal("H^1_c(S_{1,2}) = 0", "g = 1, n >= 2", true, induction::hc_vanishes(1, 2, 1).vanishes);
    rec.equal("H^3_c(S_{0,7}) = 0", "g = 0, n >= 7", true, induction::hc_vanishes(0, 7, 3).vanishes);
    const auto r041 = induction::hc_vanishes(0, 4, 1);
    rec.equal("H^1_c(S_{0,4}) by duality", "oracle: 2*1 - 1 = 1 is not > c(0,4) = 1", false, r041.vanishes);
    rec.equal("(0,4,1) flagged against g = 0, n >= 4", "g = 0, n >= 4", true, r041.flagged);
    rec.equal("base cases k=3, g<=3, n<=7", "g = 0, n <= 6 and (1,1), (1,2), (1,3), (2,0), (2,1)",
              std::string("{(0,3),(0,4),(0,5),(0,6),(1,1),(1,2),(1,3),(2,0),(2,1)}"),
              pairs_str(induction::base_cases(3, 3, 7)));
    rec.equal("base cases k=1, g<=2, n<=5", "(0,3), (1,1) and the flagged (0,4)", std::string("{(0,3),(0,4),(1,1)}"),
              pairs_str(induction::base_cases(1, 2, 5)));

    induction::BettiConstraintSystem s12;
    s12.dimension = 2;
    s12.chi = Rational(6);
    s12.fixed = {{0, 1}, {1, 0}};
    s12.lower = {{2, 4}};
    const auto r12 = induction::resolve_betti(s12);
    rec.equal("Betti vector of the compactified S_{1,2}^{(1,1)}", "four independent boundary classes, chi = 6",
              std::string("unique (1,0,4,0,1)"),
              r12.status_name() + (r12.solutions.empty() ? "" : " " + tuple_str(r12.solutions.front())));

    induction::BettiConstraintSystem s13;
    s13.dimension = 3;
    s13.chi = Rational(18);
    s13.fixed = {{0, 1}, {1, 0}};
    s13.upper = {{2, 8}};
    const auto r13 = induction::resolve_betti(s13);
    rec.equal("Betti vector of the compactified S_{1,3}^{(1,1,0)}", "h^2 <= 8 and chi = 18, hence h^3 = 0",
              std::string("unique (1,0,8,0,8,0,1)"),
              r13.status_name() + (r13.solutions.empty() ? "" : " " + tuple_str(r13.solutions.front())));

    s13.fixed = {{1, 0}};
    s13.lower = {{0, 1}};
    rec.equal("without connectedness", "oracle: (2,0,7,0,7,0,2) also fits", std::string("ambiguous"),
              induction::resolve_betti(s13).status_name());
}

void relations_suite(Recorder& rec) {
    const auto ind = relations::replay_independence_s1211();
    rec.equal("independence rank", "restrictions give b_1 = a_1 = b_0 = a_0 = 0", true, ind.pass);
    rec.equal("independence relation space", "four boundary classes linearly independent", 0, ind.relation_dimension);
    const auto ker = relations::replay_kernel_s13110();
    rec.equal("kernel dimension", "kernel of xi^* is four-dimensional", 4, ker.solution_dimension);
    rec.equal("kernel basis", "generated by alpha_irr, beta_irr, beta_{1,{}}, beta_{1,{3}}",
              std::string("alpha_irr, beta_irr, beta_{1,{}}, beta_{1,{3}}"), join(ker.basis_labels));
    rec.equal("residual class vanishes", "rho(gamma) = 0", true, ker.residual_vanishes);
    rec.equal("kernel certificate", "oracle: exact elimination", true, ker.pass);
}

const std::map<std::string, std::function<void(Recorder&)>>& suites() {
    static const std::map<std::string, std::function<void(Recorder&)>> table{
        {"boundary", boundary_suite}, {"arf", arf_suite},         {"euler", euler_suite},
        {"induction", induction_suite}, {"relations", relations_suite},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"boundary", "arf", "euler", "induction", "relations", "all"};
    return names;
}

VerificationReport run_verify(const std::string& suite) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw UnknownSuite("unknown suite '" + suite + "'");
    }
    VerificationReport report;
    report.suite = suite;
    Recorder rec(report);
    const auto start = std::chrono::steady_clock::now();
    for (const auto& name : suite_names()) {
        if (name == "all" || (suite != "all" && suite != name)) {
            continue;
        }
        try {
            suites().at(name)(rec);
        } catch (const std::exception& e) {
            rec.equal(name + " suite completed", "oracle: no exception", std::string("no exception"),
                      std::string("exception: ") + e.what());
        }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.pass = !report.checks.empty() &&
                  std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
    return report;
}

} // namespace spinmod::verify
