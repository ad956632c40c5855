#pragma once

#include "spinmod/rational.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace spinmod::relations {

/// Dense row-major matrix over the rationals.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols);
    QMatrix(int rows, int cols, std::vector<Rational> entries);

    static QMatrix identity(int n);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] const Rational& operator()(int r, int c) const { return entries_[index(r, c)]; }
    [[nodiscard]] Rational& operator()(int r, int c) { return entries_[index(r, c)]; }

    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

  private:
    [[nodiscard]] std::size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

/// P A = L U with P a row permutation, L unit lower triangular (rows x rows)
/// and U in row echelon form (rows x cols).
struct LuFactors {
    /// Row i of P A is row `row_order[i]` of A.
    std::vector<int> row_order;
    QMatrix lower;
    QMatrix upper;
    int rank = 0;

    [[nodiscard]] QMatrix permuted(const QMatrix& a) const;
};

[[nodiscard]] LuFactors lu_decompose(const QMatrix& m);
[[nodiscard]] int rank(const QMatrix& m);

/// Basis of the right kernel read off the reduced row echelon form; one
/// vector per free column, with a 1 in that column.
[[nodiscard]] std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

struct Constraint {
    std::string equation;
    std::string anchor;
};

struct IndependenceCertificate {
    std::vector<std::string> components;
    std::vector<std::string> classes;
    std::vector<Constraint> constraints;
    bool permutation_pattern = false;
    /// Rank at each sampled instantiation of the nonzero scalars.
    std::vector<int> sampled_ranks;
    /// Dimension of the space of linear relations among the classes.
    int relation_dimension = 0;
    bool pass = false;
};

using Instantiation = std::array<Rational, 4>;

/// Restricting a relation among the four boundary classes of the
/// compactified S_{1,2}^{(1,1)} to the four boundary components kills one
/// coefficient each. `instantiations` supply the nonzero scalars.
[[nodiscard]] IndependenceCertificate replay_independence_s1211(const std::vector<Instantiation>& instantiations);
[[nodiscard]] IndependenceCertificate replay_independence_s1211();

struct KernelCertificate {
    std::vector<std::string> variables;
    std::vector<Constraint> constraints;
    int solution_dimension = 0;
    /// Kernel classes with the proof variable carrying each coefficient.
    std::vector<std::string> basis_labels;
    std::vector<std::string> basis_parameters;
    bool consistent = true;
    bool residual_vanishes = false;
    bool parameters_free = false;
    bool pass = false;

    /// Coefficients on `basis_labels` of the class with the given values of
    /// `basis_parameters`.
    [[nodiscard]] std::vector<Rational> class_for(const std::vector<Rational>& parameter_values) const;
};

/// Solves the overlap constraints on the restrictions of a class in the
/// kernel of the pullback to B_irr of the compactified S_{1,3}^{(1,1,0)}.
/// Equations named in `dropped` (e.g. "c2 = a") are left out.
[[nodiscard]] KernelCertificate replay_kernel_s13110(const std::set<std::string>& dropped = {});

[[nodiscard]] std::string to_text(const IndependenceCertificate& c);
[[nodiscard]] std::string to_text(const KernelCertificate& c);

} // namespace spinmod::relations
