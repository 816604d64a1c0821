#include "abelkit/snf.hpp"

namespace abelkit {

int SnfDecomposition::rank() const {
    int r = 0;
    int lim = std::min(D.rows(), D.cols());
    for (int i = 0; i < lim; ++i)
        if (D.at(i, i) != 0) ++r;
    return r;
}

Int SnfDecomposition::diag(int i) const {
    if (i >= std::min(D.rows(), D.cols())) return 0;
    return D.at(i, i);
}

namespace {

struct Worker {
    IntegerMatrix D, U, Uinv, V, Vinv;

    void row_swap(int i, int j) {
        D.swap_rows(i, j);
        U.swap_rows(i, j);
        Uinv.swap_cols(i, j);
    }
    void col_swap(int i, int j) {
        D.swap_cols(i, j);
        V.swap_cols(i, j);
        Vinv.swap_rows(i, j);
    }
    // row dst += q * row src, with U <- E U and Uinv <- Uinv E^-1
    void row_add(int dst, int src, const Int& q) {
        D.add_row_multiple(dst, src, q);
        U.add_row_multiple(dst, src, q);
        Uinv.add_col_multiple(src, dst, -q);
    }
    // col dst += q * col src, with V <- V F and Vinv <- F^-1 Vinv
    void col_add(int dst, int src, const Int& q) {
        D.add_col_multiple(dst, src, q);
        V.add_col_multiple(dst, src, q);
        Vinv.add_row_multiple(src, dst, -q);
    }
    void row_negate(int i) {
        D.negate_row(i);
        U.negate_row(i);
        Uinv.negate_col(i);
    }
};

}  // namespace

SnfDecomposition smith_normal_form(const IntegerMatrix& A) {
    const int m = A.rows(), n = A.cols();
    Worker w{A, IntegerMatrix::identity(m), IntegerMatrix::identity(m),
             IntegerMatrix::identity(n), IntegerMatrix::identity(n)};

    const int lim = std::min(m, n);
    for (int t = 0; t < lim; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing submatrix, row-major scan.
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& v = w.D.at(i, j);
                    if (v == 0) continue;
                    Int a = abs(v);
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto diagonal_done;  // trailing submatrix is zero
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                const Int& v = w.D.at(i, t);
                if (v == 0) continue;
                Int q = v / w.D.at(t, t);
                w.row_add(i, t, -q);
                if (w.D.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                const Int& v = w.D.at(t, j);
                if (v == 0) continue;
                Int q = v / w.D.at(t, t);
                w.col_add(j, t, -q);
                if (w.D.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // remainders are strictly smaller pivots

            // Pivot divides its row and column; pull in any entry it misses.
            const Int& d = w.D.at(t, t);
            int bi = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (w.D.at(i, j) % d != 0) {
                        bi = i;
                        break;
                    }
            if (bi >= 0) {
                w.row_add(t, bi, 1);
                continue;
            }
            break;
        }
    }
diagonal_done:
    for (int t = 0; t < lim; ++t)
        if (w.D.at(t, t) < 0) w.row_negate(t);

    return SnfDecomposition{std::move(w.U), std::move(w.D), std::move(w.V),
                            std::move(w.Uinv), std::move(w.Vinv)};
}

IntegerMatrix kernel_lattice_basis(const IntegerMatrix& A) {
    SnfDecomposition s = smith_normal_form(A);
    const int n = A.cols();
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (s.diag(j) == 0) free_cols.push_back(j);
    IntegerMatrix basis(n, int(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (int r = 0; r < n; ++r) basis.at(r, int(k)) = s.V.at(r, free_cols[k]);
    return basis;
}

std::optional<std::vector<Int>> solve_linear(const IntegerMatrix& A, const std::vector<Int>& b) {
    if (int(b.size()) != A.rows()) throw Error("solve_linear: rhs size mismatch");
    SnfDecomposition s = smith_normal_form(A);
    const int m = A.rows(), n = A.cols();

    std::vector<Int> c(m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            if (s.U.at(i, k) != 0) c[i] += s.U.at(i, k) * b[k];

    std::vector<Int> y(n);
    for (int i = 0; i < m; ++i) {
        Int d = s.diag(i);
        if (i < n && d != 0) {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }

    std::vector<Int> x(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (s.V.at(i, k) != 0 && y[k] != 0) x[i] += s.V.at(i, k) * y[k];
    return x;
}

void CongruenceSystem::add_equation(std::vector<Int> coeffs, Int rhs, Int modulus) {
    if (int(coeffs.size()) != num_vars_) throw Error("congruence equation arity mismatch");
    if (modulus < 0) modulus = -modulus;
    eqs_.push_back(Equation{std::move(coeffs), std::move(rhs), std::move(modulus)});
}

std::optional<std::vector<Int>> CongruenceSystem::solve() const {
    int slacks = 0;
    for (const auto& e : eqs_)
        if (e.modulus != 0) ++slacks;

    IntegerMatrix B(int(eqs_.size()), num_vars_ + slacks);
    std::vector<Int> rhs(eqs_.size());
    int slack = 0;
    for (std::size_t r = 0; r < eqs_.size(); ++r) {
        const auto& e = eqs_[r];
        for (int j = 0; j < num_vars_; ++j) B.at(int(r), j) = e.coeffs[j];
        if (e.modulus != 0) B.at(int(r), num_vars_ + slack++) = e.modulus;
        rhs[r] = e.rhs;
    }

    auto sol = solve_linear(B, rhs);
    if (!sol) return std::nullopt;
    sol->resize(num_vars_);
    return sol;
}

}  // namespace abelkit
