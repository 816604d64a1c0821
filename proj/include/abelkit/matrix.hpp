#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "abelkit/ints.hpp"

namespace abelkit {

/// Dense matrix over Z with exact entries. Row-major storage.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<Int>> init);

    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool operator==(const IntegerMatrix& other) const = default;

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntegerMatrix operator+(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-(const IntegerMatrix& rhs) const;
    IntegerMatrix operator-() const;

    bool is_zero() const;
    bool is_identity() const;

    std::string to_string() const;

    // Elementary operations, used by the Smith normal form routine.
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& q);  // row dst += q * row src
    void add_col_multiple(int dst, int src, const Int& q);  // col dst += q * col src
    void negate_row(int i);
    void negate_col(int j);

    IntegerMatrix column(int j) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

}  // namespace abelkit
