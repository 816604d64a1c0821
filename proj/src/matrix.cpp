#include "abelkit/matrix.hpp"

#include <sstream>

namespace abelkit {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    a_.reserve(std::size_t(rows_) * cols_);
    for (const auto& row : init) {
        if (int(row.size()) != cols_) throw Error("ragged matrix initializer");
        for (const auto& v : row) a_.push_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix product shape mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum shape mismatch");
    IntegerMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix difference shape mismatch");
    IntegerMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
    return out;
}

IntegerMatrix IntegerMatrix::operator-() const {
    IntegerMatrix out = *this;
    for (auto& v : out.a_) v = -v;
    return out;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool IntegerMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

void IntegerMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntegerMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntegerMatrix::add_row_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntegerMatrix::add_col_multiple(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

void IntegerMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntegerMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

IntegerMatrix IntegerMatrix::column(int j) const {
    IntegerMatrix out(rows_, 1);
    for (int r = 0; r < rows_; ++r) out.at(r, 0) = at(r, j);
    return out;
}

}  // namespace abelkit
