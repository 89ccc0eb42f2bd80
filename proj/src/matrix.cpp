#include "artin/matrix.hpp"

#include <algorithm>

namespace artin {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, PrimeField field) {
    FpMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(PrimeField field,
                             std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    FpMatrix m(r, c, field);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error("ragged matrix literal");
        std::size_t j = 0;
        for (auto v : row) m(i, j++) = field.reduce(v);
        ++i;
    }
    return m;
}

FpMatrix FpMatrix::column(PrimeField field, std::span<const fp_t> entries) {
    FpMatrix m(entries.size(), 1, field);
    std::copy(entries.begin(), entries.end(), m.data_.begin());
    return m;
}

std::vector<fp_t> FpMatrix::col(std::size_t c) const {
    std::vector<fp_t> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](fp_t v) { return v == 0; });
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

FpMatrix FpMatrix::slice_rows(std::size_t first, std::size_t count) const {
    FpMatrix out(count, cols_, field_);
    std::copy_n(data_.begin() + first * cols_, count * cols_, out.data_.begin());
    return out;
}

FpMatrix FpMatrix::select_cols(std::span<const std::size_t> cols) const {
    FpMatrix out(rows_, cols.size(), field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
    return out;
}

void FpMatrix::append_row(std::span<const fp_t> row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error("append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
    const auto& f = a.field();
    const std::uint64_t p = f.prime();
    FpMatrix out(a.rows(), b.cols(), f);
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a(i, k);
            if (aik == 0) continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = static_cast<fp_t>(acc[j]);
    }
    return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum: dimension mismatch");
    FpMatrix out(a.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.data().size(); ++i)
        out.data()[i] = a.field().add(a.data()[i], b.data()[i]);
    return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("matrix difference: dimension mismatch");
    FpMatrix out(a.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.data().size(); ++i)
        out.data()[i] = a.field().sub(a.data()[i], b.data()[i]);
    return out;
}

FpMatrix scale(const FpMatrix& a, fp_t s) {
    FpMatrix out = a;
    for (auto& v : out.data()) v = a.field().mul(v, s);
    return out;
}

std::vector<fp_t> mat_vec(const FpMatrix& a, std::span<const fp_t> x) {
    if (a.cols() != x.size()) throw Error("matrix-vector product: dimension mismatch");
    const std::uint64_t p = a.field().prime();
    std::vector<fp_t> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        auto row = a.row(i);
        for (std::size_t j = 0; j < x.size(); ++j)
            if (row[j] != 0 && x[j] != 0) acc = (acc + static_cast<std::uint64_t>(row[j]) * x[j]) % p;
        y[i] = static_cast<fp_t>(acc);
    }
    return y;
}

FpMatrix hstack(std::span<const FpMatrix> blocks) {
    if (blocks.empty()) return {};
    const std::size_t r = blocks.front().rows();
    std::size_t c = 0;
    for (const auto& b : blocks) {
        if (b.rows() != r) throw Error("hstack: row mismatch");
        c += b.cols();
    }
    FpMatrix out(r, c, blocks.front().field());
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < r; ++i)
            std::copy(b.row(i).begin(), b.row(i).end(), out.row(i).begin() + off);
        off += b.cols();
    }
    return out;
}

FpMatrix vstack(std::span<const FpMatrix> blocks) {
    if (blocks.empty()) return {};
    const std::size_t c = blocks.front().cols();
    std::size_t r = 0;
    for (const auto& b : blocks) {
        if (b.cols() != c) throw Error("vstack: column mismatch");
        r += b.rows();
    }
    FpMatrix out(r, c, blocks.front().field());
    std::size_t off = 0;
    for (const auto& b : blocks) {
        std::copy(b.data().begin(), b.data().end(), out.data().begin() + off * c);
        off += b.rows();
    }
    return out;
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
    const auto& f = a.field();
    FpMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), f);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const fp_t aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = f.mul(aij, b(k, l));
        }
    return out;
}

FpMatrix block_diagonal(const FpMatrix& a, std::size_t copies) {
    FpMatrix out(a.rows() * copies, a.cols() * copies, a.field());
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < a.rows(); ++i)
            std::copy(a.row(i).begin(), a.row(i).end(),
                      out.row(c * a.rows() + i).begin() + c * a.cols());
    return out;
}

}  // namespace artin
