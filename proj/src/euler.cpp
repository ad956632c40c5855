#include "spinmod/euler.hpp"

#include "spinmod/error.hpp"

#include <json.hpp>

#include <stdexcept>

namespace spinmod::euler {

using ordered_json = nlohmann::ordered_json;

Rational chi_m0n(int n) {
    if (n < 3) {
        throw std::invalid_argument("chi(M_{0,n}) needs n >= 3");
    }
    Rational chi(1);
    for (int k = 3; k < n; ++k) {
        chi *= Rational(2 - k);
    }
    return chi;
}

Rational burnside_chi(int group_order, std::span<const Rational> fixed_chis) {
    if (fixed_chis.empty()) {
        throw std::invalid_argument("burnside_chi needs at least the identity's entry");
    }
    if (group_order < 1 || static_cast<std::size_t>(group_order) != fixed_chis.size()) {
        throw std::invalid_argument("burnside_chi needs one fixed-locus value per group element");
    }
    Rational sum;
    for (const auto& chi : fixed_chis) {
        sum += chi;
    }
    return sum / Rational(group_order);
}

Rational stratified_cover_chi(std::span<const CoverStratum> strata) {
    Rational sum;
    for (const auto& s : strata) {
        if (s.fiber_size < 0) {
            throw std::invalid_argument("negative fiber size");
        }
        sum += Rational(s.fiber_size) * s.chi;
    }
    return sum;
}

Rational rh_genus(long long degree, long long base_genus, long long ramification_excess) {
    if (degree < 1) {
        throw std::invalid_argument("cover degree must be positive");
    }
    const Rational euler_term = Rational(degree) * Rational(2 * base_genus - 2) + Rational(ramification_excess);
    return euler_term / Rational(2) + Rational(1);
}

Rational rh_genus_bound(long long degree, long long base_genus, long long branch_points) {
    // Each branch point absorbs at most d - 1 of ramification.
    return rh_genus(degree, base_genus, branch_points * (degree - 1));
}

Rational theta_orbit_chi(int genus, std::span<const ThetaStratum> strata, int arf_value) {
    Rational sum;
    for (const auto& s : strata) {
        const auto orbits = arf::orbit_count(genus, s.generators, arf_value);
        sum += Rational(static_cast<std::int64_t>(orbits)) * s.chi;
    }
    return sum;
}

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::Cited: return "cited";
    case Provenance::Derived: return "derived";
    case Provenance::Elementary: return "elementary";
    }
    return "?";
}

Provenance parse_provenance(const std::string& text) {
    if (text == "cited") {
        return Provenance::Cited;
    }
    if (text == "derived") {
        return Provenance::Derived;
    }
    if (text == "elementary") {
        return Provenance::Elementary;
    }
    throw ParseError("unknown provenance '" + text + "'");
}

LedgerResult ledger_eval(const ChiLedger& ledger, const std::map<std::string, Rational>& previous) {
    std::map<std::string, Rational> scope;
    for (const auto& c : ledger.constants) {
        if (!scope.emplace(c.name, c.value).second) {
            throw std::invalid_argument("ledger " + ledger.name + ": constant '" + c.name + "' defined twice");
        }
    }
    auto lookup = [&](const std::string& name) {
        if (auto it = scope.find(name); it != scope.end()) {
            return it->second;
        }
        if (auto it = previous.find(name); it != previous.end()) {
            return it->second;
        }
        throw std::invalid_argument("ledger " + ledger.name + ": unresolved name '" + name + "'");
    };

    LedgerResult result;
    result.name = ledger.name;
    result.expected = ledger.expected;
    for (const auto& term : ledger.terms) {
        Rational product = term.coeff;
        for (const auto& factor : term.factors) {
            product *= lookup(factor);
        }
        result.value += product;
    }
    bool partitions_ok = true;
    for (const auto& p : ledger.partitions) {
        PartitionCheck check;
        check.whole = p.whole;
        check.whole_value = lookup(p.whole);
        for (const auto& part : p.parts) {
            check.parts_sum += lookup(part);
        }
        check.pass = check.whole_value == check.parts_sum;
        partitions_ok = partitions_ok && check.pass;
        result.partitions.push_back(std::move(check));
    }
    result.pass = partitions_ok && result.value == result.expected;
    return result;
}

std::vector<LedgerResult> evaluate_book(std::span<const ChiLedger> ledgers) {
    std::map<std::string, Rational> results;
    std::vector<LedgerResult> out;
    for (const auto& ledger : ledgers) {
        auto r = ledger_eval(ledger, results);
        results[ledger.name] = r.value;
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_text(const ChiLedger& ledger) {
    ordered_json doc;
    doc["name"] = ledger.name;
    doc["citation"] = ledger.citation;
    auto constants = ordered_json::array();
    for (const auto& c : ledger.constants) {
        ordered_json j;
        j["name"] = c.name;
        j["value"] = c.value.str();
        j["provenance"] = to_string(c.provenance);
        j["quote"] = c.quote;
        j["note"] = c.note;
        constants.push_back(std::move(j));
    }
    doc["constants"] = std::move(constants);
    auto partitions = ordered_json::array();
    for (const auto& p : ledger.partitions) {
        ordered_json j;
        j["whole"] = p.whole;
        j["parts"] = p.parts;
        partitions.push_back(std::move(j));
    }
    doc["partitions"] = std::move(partitions);
    auto terms = ordered_json::array();
    for (const auto& t : ledger.terms) {
        ordered_json j;
        j["coeff"] = t.coeff.str();
        j["factors"] = t.factors;
        terms.push_back(std::move(j));
    }
    doc["terms"] = std::move(terms);
    doc["expected"] = ledger.expected.str();
    return doc.dump(2) + "\n";
}

ChiLedger ledger_from_text(const std::string& text) {
    ChiLedger ledger;
    try {
        const auto doc = ordered_json::parse(text);
        ledger.name = doc.at("name").get<std::string>();
        ledger.citation = doc.value("citation", std::string{});
        for (const auto& j : doc.at("constants")) {
            Constant c;
            c.name = j.at("name").get<std::string>();
            c.value = Rational::parse(j.at("value").get<std::string>());
            if (!j.contains("provenance")) {
                throw ParseError("constant '" + c.name + "' has no provenance tag");
            }
            c.provenance = parse_provenance(j.at("provenance").get<std::string>());
            c.quote = j.value("quote", std::string{});
            c.note = j.value("note", std::string{});
            ledger.constants.push_back(std::move(c));
        }
        if (doc.contains("partitions")) {
            for (const auto& j : doc.at("partitions")) {
                ledger.partitions.push_back({j.at("whole").get<std::string>(), j.at("parts").get<std::vector<std::string>>()});
            }
        }
        for (const auto& j : doc.at("terms")) {
            ledger.terms.push_back({Rational::parse(j.at("coeff").get<std::string>()),
                                    j.at("factors").get<std::vector<std::string>>()});
        }
        ledger.expected = Rational::parse(doc.at("expected").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ledger document: ") + e.what());
    }
    return ledger;
}

} // namespace spinmod::euler
