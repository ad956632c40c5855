#include "spinmod/relations.hpp"

#include "spinmod/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spinmod::relations {

using ordered_json = nlohmann::ordered_json;

QMatrix::QMatrix(int rows, int cols) : QMatrix(rows, cols, std::vector<Rational>(static_cast<std::size_t>(rows * cols))) {}

QMatrix::QMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) {
        throw StructuralError("matrix dimensions must be nonnegative");
    }
    if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw StructuralError("matrix entry count does not match rows * cols");
    }
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

std::size_t QMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw StructuralError("matrix index out of range");
    }
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw StructuralError("vector length does not match matrix columns");
    }
    std::vector<Rational> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) {
        throw StructuralError("matrix product dimension mismatch");
    }
    QMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) {
                continue;
            }
            for (int j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

QMatrix LuFactors::permuted(const QMatrix& a) const {
    QMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out(i, j) = a(row_order[i], j);
        }
    }
    return out;
}

LuFactors lu_decompose(const QMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    LuFactors f;
    f.row_order.resize(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        f.row_order[i] = i;
    }
    f.lower = QMatrix::identity(rows);
    f.upper = m;
    QMatrix& u = f.upper;
    QMatrix& l = f.lower;

    int pivot_row = 0;
    for (int c = 0; c < cols && pivot_row < rows; ++c) {
        int found = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (!u(r, c).is_zero()) {
                found = r;
                break;
            }
        }
        if (found < 0) {
            continue;
        }
        if (found != pivot_row) {
            for (int j = 0; j < cols; ++j) {
                std::swap(u(found, j), u(pivot_row, j));
            }
            for (int j = 0; j < pivot_row; ++j) {
                std::swap(l(found, j), l(pivot_row, j));
            }
            std::swap(f.row_order[found], f.row_order[pivot_row]);
        }
        for (int r = pivot_row + 1; r < rows; ++r) {
            if (u(r, c).is_zero()) {
                continue;
            }
            const Rational factor = u(r, c) / u(pivot_row, c);
            l(r, pivot_row) = factor;
            for (int j = c; j < cols; ++j) {
                u(r, j) -= factor * u(pivot_row, j);
            }
        }
        ++pivot_row;
    }
    f.rank = pivot_row;
    return f;
}

int rank(const QMatrix& m) { return lu_decompose(m).rank; }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    QMatrix r = lu_decompose(m).upper;
    const int rows = r.rows();
    const int cols = r.cols();

    // Back-substitute the echelon form into reduced form.
    std::vector<int> pivot_cols;
    for (int i = 0; i < rows; ++i) {
        int c = 0;
        while (c < cols && r(i, c).is_zero()) {
            ++c;
        }
        if (c == cols) {
            break;
        }
        pivot_cols.push_back(c);
    }
    for (int i = static_cast<int>(pivot_cols.size()) - 1; i >= 0; --i) {
        const int pc = pivot_cols[i];
        const Rational inv = Rational(1) / r(i, pc);
        for (int j = pc; j < cols; ++j) {
            r(i, j) *= inv;
        }
        for (int above = 0; above < i; ++above) {
            const Rational factor = r(above, pc);
            if (factor.is_zero()) {
                continue;
            }
            for (int j = pc; j < cols; ++j) {
                r(above, j) -= factor * r(i, j);
            }
        }
    }

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) {
            continue;
        }
        std::vector<Rational> v(static_cast<std::size_t>(cols));
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -r(static_cast<int>(i), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

const std::vector<std::string> kComponents{"A_irr", "B_irr", "A_{1,{}}", "B_{1,{}}"};
const std::vector<std::string> kClasses{"alpha_irr", "beta_irr", "alpha_{1,{}}", "beta_{1,{}}"};
// Coefficient (column) surviving the restriction to each component (row).
const std::array<int, 4> kSurvivor{3, 2, 1, 0};
const std::array<const char*, 4> kSurvivorName{"b_1", "a_1", "b_0", "a_0"};

QMatrix restriction_pattern(const Instantiation& scalars) {
    QMatrix m(4, 4);
    for (int row = 0; row < 4; ++row) {
        m(row, kSurvivor[row]) = scalars[row];
    }
    return m;
}

bool is_permutation_pattern(const QMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        int row_nonzero = 0;
        int col_nonzero = 0;
        for (int j = 0; j < m.cols(); ++j) {
            row_nonzero += m(i, j).is_zero() ? 0 : 1;
            col_nonzero += m(j, i).is_zero() ? 0 : 1;
        }
        if (row_nonzero != 1 || col_nonzero != 1) {
            return false;
        }
    }
    return true;
}

} // namespace

IndependenceCertificate replay_independence_s1211(const std::vector<Instantiation>& instantiations) {
    IndependenceCertificate cert;
    cert.components = kComponents;
    cert.classes = kClasses;
    for (int row = 0; row < 4; ++row) {
        cert.constraints.push_back({"restriction to " + kComponents[row] + " => " + kSurvivorName[row] + " = 0",
                                    "a_0 alpha_irr + b_0 beta_irr + a_1 alpha_{1,{}} + b_1 beta_{1,{}} = 0 restricted to " +
                                        kComponents[row]});
    }
    const Instantiation ones{Rational(1), Rational(1), Rational(1), Rational(1)};
    cert.permutation_pattern = is_permutation_pattern(restriction_pattern(ones));
    bool all_full = !instantiations.empty();
    int worst = 4;
    for (const auto& scalars : instantiations) {
        const int r = rank(restriction_pattern(scalars));
        cert.sampled_ranks.push_back(r);
        all_full = all_full && r == 4;
        worst = std::min(worst, r);
    }
    cert.relation_dimension = 4 - worst;
    cert.pass = cert.permutation_pattern && all_full;
    return cert;
}

IndependenceCertificate replay_independence_s1211() {
    return replay_independence_s1211({
        {Rational(1), Rational(1), Rational(1), Rational(1)},
        {Rational(2), Rational(3), Rational(5), Rational(7)},
        {Rational(-1), Rational(1, 2), Rational(3), Rational(-4, 3)},
        {Rational(-7, 5), Rational(11), Rational(-2, 9), Rational(13, 4)},
    });
}

namespace {

const std::vector<std::string> kVariables{"a", "b", "c1", "c2", "c3", "d1", "d2", "d3", "e", "f", "h", "k", "s", "t"};

int var(const std::string& name) {
    const auto it = std::find(kVariables.begin(), kVariables.end(), name);
    if (it == kVariables.end()) {
        throw std::logic_error("unknown proof variable " + name);
    }
    return static_cast<int>(it - kVariables.begin());
}

struct Equation {
    std::string text;
    std::string anchor;
    // lhs - rhs = 0 with rhs a single variable or zero.
    std::string lhs;
    std::string rhs;
};

const std::vector<Equation> kEquations{
    {"s = 0", "xi^*(Delta_{1,{1}}) != 0", "s", ""},
    {"t = 0", "xi^*(Delta_{1,{2}}) != 0", "t", ""},
    {"e = a", "A_{1,{3}} meets A_{1,{}}", "e", "a"},
    {"f = b", "B_{1,{3}} meets B_{1,{}}", "f", "b"},
    {"c3 = 0", "Delta_{1,{1}} meets A_irr", "c3", ""},
    {"d3 = 0", "Delta_{1,{2}} meets A_irr", "d3", ""},
    {"c2 = a", "Delta_{1,{1}} meets A_{1,{}}", "c2", "a"},
    {"c1 = b", "Delta_{1,{1}} meets B_{1,{}}", "c1", "b"},
    {"d2 = a", "Delta_{1,{2}} meets A_{1,{}}", "d2", "a"},
    {"d1 = b", "Delta_{1,{2}} meets B_{1,{}}", "d1", "b"},
};

// Coordinates of rho(beta) on the boundary components, as proof variables:
// (a delta_irr) on A_{1,{}}, (b delta_irr) on B_{1,{}}, c1..c3 and d1..d3 on
// the two Delta components (alpha_irr, beta_irr, beta_{1,{}}), e and f on
// A_{1,{3}}, B_{1,{3}}. A_irr and B_irr restrict to zero.
const std::vector<std::string> kRhoSlots{"a", "b", "c1", "c2", "c3", "d1", "d2", "d3", "e", "f"};
// Restrictions of alpha_irr and beta_irr in the same coordinates.
const std::vector<int> kRhoAlphaIrr{0, 1, 1, 0, 0, 1, 0, 0, 0, 1};
const std::vector<int> kRhoBetaIrr{1, 0, 0, 1, 0, 0, 1, 0, 1, 0};

const std::vector<std::string> kKernelLabels{"alpha_irr", "beta_irr", "beta_{1,{}}", "beta_{1,{3}}"};
const std::vector<std::string> kKernelParameters{"b", "a", "h", "k"};

// rho(gamma) for gamma = beta - b alpha_irr - a beta_irr.
std::vector<Rational> residual(const std::vector<Rational>& x) {
    std::vector<Rational> out;
    const Rational a = x[var("a")];
    const Rational b = x[var("b")];
    for (std::size_t i = 0; i < kRhoSlots.size(); ++i) {
        out.push_back(x[var(kRhoSlots[i])] - b * Rational(kRhoAlphaIrr[i]) - a * Rational(kRhoBetaIrr[i]));
    }
    return out;
}

} // namespace

KernelCertificate replay_kernel_s13110(const std::set<std::string>& dropped) {
    KernelCertificate cert;
    cert.variables = kVariables;
    cert.basis_labels = kKernelLabels;
    cert.basis_parameters = kKernelParameters;

    std::vector<Equation> used;
    for (const auto& eq : kEquations) {
        if (dropped.count(eq.text) == 0) {
            used.push_back(eq);
            cert.constraints.push_back({eq.text, eq.anchor});
        }
    }
    const int nv = static_cast<int>(kVariables.size());
    QMatrix system(static_cast<int>(used.size()), nv);
    for (int row = 0; row < system.rows(); ++row) {
        system(row, var(used[row].lhs)) += Rational(1);
        if (!used[row].rhs.empty()) {
            system(row, var(used[row].rhs)) -= Rational(1);
        }
    }
    const auto kernel = kernel_basis(system);
    cert.solution_dimension = static_cast<int>(kernel.size());
    cert.consistent = true;  // homogeneous

    cert.residual_vanishes = std::all_of(kernel.begin(), kernel.end(), [](const auto& x) {
        const auto r = residual(x);
        return std::all_of(r.begin(), r.end(), [](const Rational& v) { return v.is_zero(); }) &&
               x[var("s")].is_zero() && x[var("t")].is_zero();
    });

    // The solution space must be parametrized by (b, a, h, k) alone.
    QMatrix projection(static_cast<int>(kKernelParameters.size()), cert.solution_dimension);
    for (int i = 0; i < projection.rows(); ++i) {
        for (int j = 0; j < projection.cols(); ++j) {
            projection(i, j) = kernel[j][var(kKernelParameters[i])];
        }
    }
    cert.parameters_free = cert.solution_dimension == projection.rows() && rank(projection) == projection.rows();
    cert.pass = cert.consistent && cert.residual_vanishes && cert.parameters_free &&
                cert.solution_dimension == static_cast<int>(kKernelLabels.size());
    return cert;
}

std::vector<Rational> KernelCertificate::class_for(const std::vector<Rational>& parameter_values) const {
    if (parameter_values.size() != basis_parameters.size()) {
        throw StructuralError("one value per kernel parameter expected");
    }
    if (!parameters_free) {
        throw std::logic_error("kernel parameters do not determine the class");
    }
    // The class has coefficient x[p] on the label carried by parameter p, and
    // gamma = 0 leaves nothing else; solve for the full solution to confirm.
    std::vector<Rational> x(variables.size());
    std::map<std::string, Rational> given;
    for (std::size_t i = 0; i < basis_parameters.size(); ++i) {
        given[basis_parameters[i]] = parameter_values[i];
    }
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (auto it = given.find(variables[i]); it != given.end()) {
            x[i] = it->second;
        }
    }
    for (const auto& c : constraints) {
        for (const auto& eq : kEquations) {
            if (eq.text == c.equation && !eq.rhs.empty()) {
                x[var(eq.lhs)] = x[var(eq.rhs)];
            }
        }
    }
    const auto r = residual(x);
    if (!std::all_of(r.begin(), r.end(), [](const Rational& v) { return v.is_zero(); })) {
        throw std::logic_error("residual class does not vanish");
    }
    std::vector<Rational> coefficients;
    for (const auto& p : basis_parameters) {
        coefficients.push_back(x[var(p)]);
    }
    return coefficients;
}

std::string to_text(const IndependenceCertificate& c) {
    ordered_json j;
    j["certificate"] = "independence of boundary classes on the compactified S_{1,2}^{(1,1)}";
    auto constraints = ordered_json::array();
    for (const auto& k : c.constraints) {
        constraints.push_back({{"equation", k.equation}, {"anchor", k.anchor}});
    }
    j["constraints"] = std::move(constraints);
    j["permutation_pattern"] = c.permutation_pattern;
    j["sampled_ranks"] = c.sampled_ranks;
    j["solution_dimension"] = c.relation_dimension;
    j["basis_labels"] = c.classes;
    j["pass"] = c.pass;
    return j.dump(2) + "\n";
}

std::string to_text(const KernelCertificate& c) {
    ordered_json j;
    j["certificate"] = "kernel of xi^* on H^2 of the compactified S_{1,3}^{(1,1,0)}";
    auto constraints = ordered_json::array();
    for (const auto& k : c.constraints) {
        constraints.push_back({{"equation", k.equation}, {"anchor", k.anchor}});
    }
    j["constraints"] = std::move(constraints);
    j["variables"] = c.variables;
    j["solution_dimension"] = c.solution_dimension;
    j["basis_labels"] = c.basis_labels;
    j["basis_parameters"] = c.basis_parameters;
    j["residual_vanishes"] = c.residual_vanishes;
    j["pass"] = c.pass;
    return j.dump(2) + "\n";
}

} // namespace spinmod::relations
