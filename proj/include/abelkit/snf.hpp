#pragma once

#include <optional>
#include <vector>

#include "abelkit/matrix.hpp"

namespace abelkit {

/// Smith normal form of an integer matrix A: D = U * A * V with U, V unimodular,
/// D diagonal, every diagonal entry nonnegative, and d_i | d_{i+1} (zeros last).
/// The inverses are tracked alongside so callers never need to invert anything.
struct SnfDecomposition {
    IntegerMatrix U, D, V;
    IntegerMatrix U_inv, V_inv;

    /// Number of nonzero diagonal entries.
    int rank() const;
    Int diag(int i) const;
};

/// Deterministic: pivots are chosen by smallest nonzero absolute value,
/// scanning the trailing submatrix row-major, strict improvement only.
SnfDecomposition smith_normal_form(const IntegerMatrix& A);

/// Basis of the lattice { x in Z^cols : A x = 0 }, one column per basis vector.
IntegerMatrix kernel_lattice_basis(const IntegerMatrix& A);

/// One integer solution of A x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntegerMatrix& A, const std::vector<Int>& b);

/// System of linear congruences over shared integer unknowns. Each equation is
///   sum_j coeffs[j] * x_j == rhs   (mod modulus),   modulus == 0 meaning equality in Z.
/// Solved exactly by introducing one slack variable per modular equation and
/// running the Smith solver on the stacked system.
class CongruenceSystem {
public:
    explicit CongruenceSystem(int num_vars) : num_vars_(num_vars) {}

    void add_equation(std::vector<Int> coeffs, Int rhs, Int modulus);

    /// Values for the original unknowns, slacks stripped.
    std::optional<std::vector<Int>> solve() const;

    int num_vars() const { return num_vars_; }

private:
    struct Equation {
        std::vector<Int> coeffs;
        Int rhs;
        Int modulus;
    };
    int num_vars_;
    std::vector<Equation> eqs_;
};

}  // namespace abelkit
