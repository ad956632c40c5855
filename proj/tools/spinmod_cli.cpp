// spinmod: command-line front end for the spin moduli verification library.

#include "spinmod/arf.hpp"
#include "spinmod/error.hpp"
#include "spinmod/euler.hpp"
#include "spinmod/graphs.hpp"
#include "spinmod/induction.hpp"
#include "spinmod/relations.hpp"
#include "spinmod/spin.hpp"
#include "spinmod/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using ordered_json = nlohmann::ordered_json;
using spinmod::verify::Check;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json results = ordered_json::array();
    std::vector<Check> checks;
    /// Plain-mode table rows; the first row is the header.
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> notes;

    void check(std::string name, std::string anchor, std::string expected, std::string got) {
        const bool pass = expected == got;
        checks.push_back({std::move(name), std::move(anchor), std::move(expected), std::move(got), pass});
    }

    [[nodiscard]] bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

void print_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) {
        return;
    }
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            if (i + 1 < row.size()) {
                cell.resize(width[i], ' ');
                cell += "  ";
            }
            line += cell;
        }
        std::cout << line << "\n";
    }
}

int emit(const Output& out, bool json, bool quiet) {
    const bool pass = out.pass();
    if (quiet) {
        return pass ? kExitPass : kExitFail;
    }
    if (json) {
        ordered_json doc;
        doc["command"] = out.command;
        doc["inputs"] = out.inputs;
        doc["results"] = out.results;
        auto checks = ordered_json::array();
        for (const auto& c : out.checks) {
            checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
        }
        doc["checks"] = std::move(checks);
        doc["pass"] = pass;
        std::cout << doc.dump(2) << "\n";
        return pass ? kExitPass : kExitFail;
    }
    print_table(out.table);
    for (const auto& note : out.notes) {
        std::cout << note << "\n";
    }
    if (!out.checks.empty()) {
        if (!out.table.empty()) {
            std::cout << "\n";
        }
        std::vector<std::vector<std::string>> rows{{"check", "expected", "got", "result"}};
        for (const auto& c : out.checks) {
            rows.push_back({c.name, c.expected, c.got, c.pass ? "PASS" : "FAIL"});
        }
        print_table(rows);
    }
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitPass : kExitFail;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw spinmod::ParseError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Output cmd_strata(int g, int n) {
    Output out;
    out.command = "strata";
    out.inputs = {{"g", g}, {"n", n}};
    out.table.push_back({"key", "edges", "automorphisms"});
    for (const auto& graph : spinmod::graphs::enumerate_strata(g, n)) {
        const auto key = spinmod::graphs::canonical_key(graph);
        const auto aut = spinmod::graphs::automorphism_count(graph);
        out.results.push_back({{"key", key},
                               {"edges", graph.edges.size()},
                               {"automorphisms", aut},
                               {"graph", ordered_json::parse(spinmod::graphs::to_text(graph))}});
        out.table.push_back({key, std::to_string(graph.edges.size()), std::to_string(aut)});
    }
    out.notes.push_back(std::to_string(out.results.size()) + " strata");
    return out;
}

Output cmd_boundary(int g, const std::vector<int>& m) {
    Output out;
    out.command = "boundary";
    const auto sig = spinmod::spin::SpinSignature::make(g, m);
    out.inputs = {{"g", g}, {"n", sig.n}, {"m", m}};
    out.table.push_back({"type", "class", "node", "sides"});
    for (const auto& t : spinmod::spin::enumerate_boundary(sig)) {
        out.results.push_back(ordered_json::parse(spinmod::spin::to_text(t)));
        std::string sides;
        for (const auto& s : t.sides) {
            sides += (sides.empty() ? "" : " | ") + s.description;
        }
        out.table.push_back({t.name(), t.class_label(), spinmod::spin::to_string(t.node), sides});
    }
    return out;
}

Output cmd_pic_rank(int g, const std::vector<int>& m) {
    Output out;
    out.command = "pic-rank";
    const auto sig = spinmod::spin::SpinSignature::make(g, m);
    out.inputs = {{"g", g}, {"n", sig.n}, {"m", m}};
    const auto gens = spinmod::spin::pic_generators(sig);
    out.results.push_back({{"count", gens.count()}, {"generators", gens.labels}, {"caveat", gens.caveat}});
    out.table.push_back({"generator"});
    for (const auto& label : gens.labels) {
        out.table.push_back({label});
    }
    out.notes.push_back(std::to_string(gens.count()) + " generators for " + sig.str());
    if (gens.caveat) {
        out.notes.push_back("note: free generation is only known for g >= 5; this is a generator count");
    }
    return out;
}

Output cmd_arf(int g) {
    Output out;
    out.command = "arf";
    out.inputs = {{"g", g}};
    const auto counts = spinmod::arf::count_by_arf(g);
    const auto closed = spinmod::arf::theta_counts_closed_form(g);
    ordered_json r{{"even", counts.even}, {"odd", counts.odd}};
    out.table.push_back({"arf", "forms"});
    out.table.push_back({"0 (even)", std::to_string(counts.even)});
    out.table.push_back({"1 (odd)", std::to_string(counts.odd)});
    auto pair = [](const spinmod::arf::ParityCounts& c) {
        return "(" + std::to_string(c.even) + "," + std::to_string(c.odd) + ")";
    };
    out.check("counts match 2^{g-1}(2^g +- 1)", "oracle: closed form", pair(closed), pair(counts));
    if (g <= 3) {
        const auto orbits = spinmod::arf::transvection_orbits(g);
        r["orbit_sizes"] = orbits.sizes;
        r["orbit_arf"] = orbits.arf_values;
        out.check("transvection orbits", "two isomorphism classes of quadratic forms", "2",
                  std::to_string(orbits.sizes.size()));
        out.check("orbits are Arf level sets", "oracle: Arf constant on orbits", "true",
                  orbits.arf_constant ? "true" : "false");
    }
    out.results.push_back(std::move(r));
    return out;
}

Output cmd_euler(const std::vector<std::string>& sources, const std::string& write_dir) {
    Output out;
    out.command = "euler";
    out.inputs = {{"ledgers", sources}};
    if (!write_dir.empty()) {
        std::filesystem::create_directories(write_dir);
        for (const auto& ledger : spinmod::euler::bundled_ledgers()) {
            std::ofstream(std::filesystem::path(write_dir) / (ledger.name + ".json"), std::ios::binary)
                << spinmod::euler::to_text(ledger);
        }
        out.inputs["write_bundled"] = write_dir;
    }
    std::vector<spinmod::euler::ChiLedger> ledgers;
    const auto names = sources.empty() ? std::vector<std::string>{"all"} : sources;
    for (const auto& src : names) {
        if (std::filesystem::is_regular_file(src)) {
            ledgers.push_back(spinmod::euler::ledger_from_text(read_file(src)));
        } else if (src == "all") {
            for (auto& l : spinmod::euler::bundled_ledgers()) {
                ledgers.push_back(std::move(l));
            }
        } else {
            ledgers.push_back(spinmod::euler::bundled_ledger(src));
        }
    }
    out.table.push_back({"ledger", "value", "expected"});
    for (const auto& r : spinmod::euler::evaluate_book(ledgers)) {
        ordered_json parts = ordered_json::array();
        for (const auto& p : r.partitions) {
            parts.push_back({{"whole", p.whole}, {"whole_value", p.whole_value.str()}, {"parts_sum", p.parts_sum.str()}});
            out.check(r.name + ": partition of " + p.whole, "oracle: additivity over the stratification",
                      p.whole_value.str(), p.parts_sum.str());
        }
        out.results.push_back({{"name", r.name}, {"value", r.value.str()}, {"expected", r.expected.str()}, {"partitions", parts}});
        out.table.push_back({r.name, r.value.str(), r.expected.str()});
        const auto& ledger = *std::find_if(ledgers.begin(), ledgers.end(), [&](const auto& l) { return l.name == r.name; });
        out.check(r.name, ledger.citation, r.expected.str(), r.value.str());
    }
    return out;
}

Output cmd_plan(int k, int g_max, int n_max) {
    Output out;
    out.command = "plan";
    out.inputs = {{"k", k}, {"g_max", g_max}, {"n_max", n_max}};
    const auto cases = spinmod::induction::base_cases(k, g_max, n_max);
    out.table.push_back({"g", "n", "c(g,n)", "dim", "stated range"});
    for (auto [g, n] : cases) {
        const auto r = spinmod::induction::hc_vanishes(g, n, k);
        out.results.push_back(ordered_json::parse(spinmod::induction::to_text(r)));
        std::string stated = r.stated_vanishes ? (*r.stated_vanishes ? "vanishes" : "does not vanish") : "-";
        out.table.push_back({std::to_string(g), std::to_string(n), std::to_string(r.c_value), std::to_string(r.complex_dim),
                             stated + (r.flagged ? "  FLAG" : "")});
        if (r.flagged) {
            out.notes.push_back("flag: (" + std::to_string(g) + "," + std::to_string(n) +
                                ") is inside the stated vanishing range \"" + r.stated_range +
                                "\" but duality does not force H^" + std::to_string(k) + "_c = 0");
        }
    }
    out.notes.push_back(std::to_string(cases.size()) + " base cases");
    return out;
}

std::string vec_str(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

Output cmd_betti(const std::string& path) {
    Output out;
    out.command = "betti";
    out.inputs = {{"file", path}};
    const auto sys = spinmod::induction::betti_system_from_text(read_file(path));
    const auto res = spinmod::induction::resolve_betti(sys);
    ordered_json sols = ordered_json::array();
    out.table.push_back({"status", "solutions", "betti"});
    for (const auto& s : res.solutions) {
        sols.push_back(s);
    }
    out.results.push_back({{"status", res.status_name()}, {"solution_count", res.solution_count}, {"solutions", sols}});
    out.table.push_back({res.status_name(), std::to_string(res.solution_count),
                         res.solutions.empty() ? "-" : vec_str(res.solutions.front())});
    if (res.solutions.size() > 1) {
        out.table.push_back({"", "", vec_str(res.solutions[1])});
    }
    return out;
}

Output cmd_verify(const std::string& suite) {
    Output out;
    out.command = "verify";
    out.inputs = {{"suite", suite}};
    const auto report = spinmod::verify::run_verify(suite);
    out.checks = report.checks;
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << report.elapsed_ms;
    out.results.push_back({{"suite", report.suite}, {"checks", report.checks.size()}, {"elapsed_ms", report.elapsed_ms}});
    out.notes.push_back(report.suite + ": " + std::to_string(report.checks.size()) + " checks in " + ms.str() + " ms");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification engine for compactified spin moduli spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    bool quiet = false;
    app.add_flag("--json", json, "Emit one JSON document");
    app.add_flag("-q,--quiet", quiet, "Exit status only");

    int g = 0;
    int n = 0;
    int k = 0;
    std::vector<int> m;
    std::string path;
    std::string write_dir;
    std::vector<std::string> sources;

    auto* strata = app.add_subcommand("strata", "Stable dual graphs of M_{g,n}-bar");
    strata->add_option("g", g)->required();
    strata->add_option("n", n)->required();

    auto* boundary = app.add_subcommand("boundary", "Boundary divisor types of S_{g,n}^{(m)}-bar");
    boundary->add_option("g", g)->required();
    boundary->add_option("m", m, "Twist vector m_1 .. m_n");

    auto* pic = app.add_subcommand("pic-rank", "Picard generator count of S_{g,n}^{(m)}-bar");
    pic->add_option("g", g)->required();
    pic->add_option("m", m, "Twist vector m_1 .. m_n");

    auto* arf = app.add_subcommand("arf", "Quadratic forms by Arf invariant");
    arf->add_option("g", g)->required();

    auto* euler = app.add_subcommand("euler", "Evaluate Euler characteristic ledgers in order");
    euler->add_option("ledgers", sources, "Ledger files or bundled names (default: all bundled)");
    euler->add_option("--write-bundled", write_dir, "Write the bundled ledgers to this directory");

    int g_max = 0;
    int n_max = 0;
    auto* plan = app.add_subcommand("plan", "Induction base cases for H^k_c");
    plan->add_option("k", k)->required();
    plan->add_option("g_max", g_max)->required();
    plan->add_option("n_max", n_max)->required();

    auto* betti = app.add_subcommand("betti", "Resolve a Betti constraint system");
    betti->add_option("file", path)->required();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a bundled verification suite");
    verify->add_option("suite", suite)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        Output out;
        if (*strata) {
            out = cmd_strata(g, n);
        } else if (*boundary) {
            out = cmd_boundary(g, m);
        } else if (*pic) {
            out = cmd_pic_rank(g, m);
        } else if (*arf) {
            out = cmd_arf(g);
        } else if (*euler) {
            out = cmd_euler(sources, write_dir);
        } else if (*plan) {
            out = cmd_plan(k, g_max, n_max);
        } else if (*betti) {
            out = cmd_betti(path);
        } else {
            out = cmd_verify(suite);
        }
        return emit(out, json, quiet);
    } catch (const std::exception& e) {
        if (!quiet) {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kExitUsage;
    }
}
