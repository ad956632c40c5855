#include "spinmod/induction.hpp"

#include "spinmod/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace spinmod::induction {

using ordered_json = nlohmann::ordered_json;

namespace {

void check_stable(int g, int n) {
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
        throw std::invalid_argument("unstable type (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
    }
}

struct StatedRange {
    std::string text;
    std::function<bool(int, int)> vanishes;
};

// Stated vanishing ranges for H^1_c and H^3_c of the spin moduli spaces.
std::optional<StatedRange> stated_range(int k) {
    if (k == 1) {
        return StatedRange{"any g >= 2; g = 1, n >= 2; g = 0, n >= 4", [](int g, int n) {
                               return g >= 2 || (g == 1 && n >= 2) || (g == 0 && n >= 4);
                           }};
    }
    if (k == 3) {
        return StatedRange{"any g >= 3; g = 2, n >= 2; g = 1, n >= 4; g = 0, n >= 7", [](int g, int n) {
                               return g >= 3 || (g == 2 && n >= 2) || (g == 1 && n >= 4) || (g == 0 && n >= 7);
                           }};
    }
    return std::nullopt;
}

} // namespace

int harer_bound(int g, int n) {
    check_stable(g, n);
    if (g == 0) {
        return n - 3;
    }
    if (n == 0) {
        return 4 * g - 5;
    }
    return 4 * g - 4 + n;
}

VanishingReport hc_vanishes(int g, int n, int k) {
    if (k < 0) {
        throw std::invalid_argument("cohomological degree must be nonnegative");
    }
    VanishingReport r;
    r.g = g;
    r.n = n;
    r.k = k;
    r.c_value = harer_bound(g, n);
    r.complex_dim = 3 * g - 3 + n;
    // H^k_c is dual to H_{2d-k}, which vanishes above c(g, n).
    r.vanishes = 2 * r.complex_dim - k > r.c_value;
    if (auto range = stated_range(k)) {
        r.stated_range = range->text;
        r.stated_vanishes = range->vanishes(g, n);
        r.flagged = *r.stated_vanishes != r.vanishes;
    }
    return r;
}

std::vector<std::pair<int, int>> base_cases(int k, int g_max, int n_max) {
    if (k < 0 || g_max < 0 || n_max < 0) {
        throw std::invalid_argument("base_cases needs a nonnegative degree and window");
    }
    std::vector<std::pair<int, int>> stable;
    int top_real_dim = -1;
    for (int g = 0; g <= g_max; ++g) {
        for (int n = 0; n <= n_max; ++n) {
            if (2 * g - 2 + n > 0) {
                stable.emplace_back(g, n);
                top_real_dim = std::max(top_real_dim, 2 * (3 * g - 3 + n));
            }
        }
    }
    std::vector<std::pair<int, int>> out;
    if (k > top_real_dim) {
        return out;
    }
    for (auto [g, n] : stable) {
        if (!hc_vanishes(g, n, k).vanishes) {
            out.emplace_back(g, n);
        }
    }
    return out;
}

std::string BettiResolution::status_name() const {
    switch (status) {
    case Status::Unique: return "unique";
    case Status::Ambiguous: return "ambiguous";
    case Status::Infeasible: return "infeasible";
    }
    return "?";
}

BettiResolution resolve_betti(const BettiConstraintSystem& sys) {
    const int d = sys.dimension;
    if (d < 0) {
        throw std::invalid_argument("complex dimension must be nonnegative");
    }
    if (sys.cap < 0) {
        throw std::invalid_argument("Betti cap must be nonnegative");
    }
    auto check_index = [d](int k) {
        if (k < 0 || k > 2 * d) {
            throw std::invalid_argument("Betti index " + std::to_string(k) + " outside [0, 2d]");
        }
    };

    // Box for b_0..b_d after folding duality.
    std::vector<long long> lo(static_cast<std::size_t>(d + 1), 0);
    std::vector<long long> hi(static_cast<std::size_t>(d + 1), sys.cap);
    auto fold = [d](int k) { return k <= d ? k : 2 * d - k; };
    for (const auto& [k, v] : sys.lower) {
        check_index(k);
        lo[fold(k)] = std::max(lo[fold(k)], v);
    }
    for (const auto& [k, v] : sys.upper) {
        check_index(k);
        hi[fold(k)] = std::min(hi[fold(k)], v);
    }
    for (const auto& [k, v] : sys.fixed) {
        check_index(k);
        lo[fold(k)] = std::max(lo[fold(k)], v);
        hi[fold(k)] = std::min(hi[fold(k)], v);
    }

    BettiResolution res;
    if (!sys.chi.is_integer() || sys.chi.num() > std::numeric_limits<long>::max() ||
        sys.chi.num() < std::numeric_limits<long>::min()) {
        return res;
    }
    const long long chi = sys.chi.num().get_si();

    std::vector<long long> b(static_cast<std::size_t>(d + 1), 0);
    // Enumerate b_0..b_{d-1}; the Euler equation pins b_d.
    std::function<void(int, long long)> search = [&](int k, long long partial) {
        if (k == d) {
            const long long middle = (d % 2 == 0 ? 1 : -1) * (chi - partial);
            if (middle < lo[d] || middle > hi[d]) {
                return;
            }
            b[d] = middle;
            ++res.solution_count;
            if (res.solutions.size() < 2) {
                std::vector<long long> full(static_cast<std::size_t>(2 * d + 1));
                for (int i = 0; i <= 2 * d; ++i) {
                    full[i] = b[fold(i)];
                }
                res.solutions.push_back(std::move(full));
            }
            return;
        }
        const long long sign = k % 2 == 0 ? 2 : -2;
        for (long long v = lo[k]; v <= hi[k]; ++v) {
            b[k] = v;
            search(k + 1, partial + sign * v);
        }
    };
    search(0, 0);

    if (res.solution_count == 0) {
        res.status = BettiResolution::Status::Infeasible;
    } else if (res.solution_count == 1) {
        res.status = BettiResolution::Status::Unique;
    } else {
        res.status = BettiResolution::Status::Ambiguous;
    }
    return res;
}

std::string to_text(const VanishingReport& r) {
    ordered_json j;
    j["g"] = r.g;
    j["n"] = r.n;
    j["k"] = r.k;
    j["c"] = r.c_value;
    j["dim"] = r.complex_dim;
    j["vanishes"] = r.vanishes;
    j["flagged"] = r.flagged;
    j["stated_vanishes"] = r.stated_vanishes ? ordered_json(*r.stated_vanishes) : ordered_json(nullptr);
    j["stated_range"] = r.stated_range;
    return j.dump();
}

namespace {

std::map<int, long long> index_map(const ordered_json& j) {
    std::map<int, long long> out;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size()) {
            throw ParseError("Betti index '" + key + "' is not an integer");
        }
        out[k] = value.get<long long>();
    }
    return out;
}

ordered_json index_json(const std::map<int, long long>& m) {
    auto j = ordered_json::object();
    for (const auto& [k, v] : m) {
        j[std::to_string(k)] = v;
    }
    return j;
}

} // namespace

BettiConstraintSystem betti_system_from_text(const std::string& text) {
    BettiConstraintSystem sys;
    try {
        const auto doc = ordered_json::parse(text);
        sys.dimension = doc.at("dimension").get<int>();
        sys.chi = Rational::parse(doc.at("chi").get<std::string>());
        if (doc.contains("fixed")) {
            sys.fixed = index_map(doc.at("fixed"));
        }
        if (doc.contains("lower")) {
            sys.lower = index_map(doc.at("lower"));
        }
        if (doc.contains("upper")) {
            sys.upper = index_map(doc.at("upper"));
        }
        sys.cap = doc.value("cap", sys.cap);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("Betti constraint document: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("Betti constraint document: malformed index");
    }
    return sys;
}

std::string to_text(const BettiConstraintSystem& sys) {
    ordered_json doc;
    doc["dimension"] = sys.dimension;
    doc["chi"] = sys.chi.str();
    doc["fixed"] = index_json(sys.fixed);
    doc["lower"] = index_json(sys.lower);
    doc["upper"] = index_json(sys.upper);
    doc["cap"] = sys.cap;
    return doc.dump(2) + "\n";
}

} // namespace spinmod::induction
