#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "artin/field.hpp"

namespace artin {

/// Dense row-major matrix over a prime field.
class FpMatrix {
  public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, PrimeField field);

    static FpMatrix identity(std::size_t n, PrimeField field);
    /// Builds a matrix from signed integer rows; entries are reduced mod p.
    static FpMatrix from_rows(PrimeField field,
                              std::initializer_list<std::initializer_list<std::int64_t>> rows);
    /// Builds a single column.
    static FpMatrix column(PrimeField field, std::span<const fp_t> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    fp_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    fp_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const fp_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<fp_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::vector<fp_t> col(std::size_t c) const;

    std::span<const fp_t> data() const { return data_; }
    std::span<fp_t> data() { return data_; }

    bool is_zero() const;
    FpMatrix transpose() const;
    /// Rows [first, first + count).
    FpMatrix slice_rows(std::size_t first, std::size_t count) const;
    FpMatrix select_cols(std::span<const std::size_t> cols) const;
    void append_row(std::span<const fp_t> row);

    bool operator==(const FpMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    PrimeField field_;
    std::vector<fp_t> data_;
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix scale(const FpMatrix& a, fp_t s);
std::vector<fp_t> mat_vec(const FpMatrix& a, std::span<const fp_t> x);

/// Horizontal concatenation; all blocks must share a row count.
FpMatrix hstack(std::span<const FpMatrix> blocks);
/// Vertical concatenation; all blocks must share a column count.
FpMatrix vstack(std::span<const FpMatrix> blocks);
/// Kronecker product a ⊗ b.
FpMatrix kron(const FpMatrix& a, const FpMatrix& b);
/// Block diagonal matrix with `copies` copies of `a`.
FpMatrix block_diagonal(const FpMatrix& a, std::size_t copies);

}  // namespace artin
