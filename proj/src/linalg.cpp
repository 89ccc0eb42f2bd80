#include "artin/linalg.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace artin {

namespace {

std::atomic<std::size_t> g_parallel_threshold{1u << 16};

// row[c..] -= factor * pivot[c..]
inline void axpy_row(fp_t* row, const fp_t* pivot, std::size_t from, std::size_t cols,
                     fp_t factor, std::uint64_t p) {
    const std::uint64_t neg = p - factor;
    for (std::size_t j = from; j < cols; ++j)
        if (pivot[j] != 0) row[j] = static_cast<fp_t>((row[j] + neg * pivot[j]) % p);
}

inline void normalize_pivot_row(FpMatrix& m, std::size_t r, std::size_t c) {
    const auto& f = m.field();
    const fp_t inv = f.inv(m(r, c));
    if (inv == 1) return;
    auto row = m.row(r);
    for (std::size_t j = c; j < m.cols(); ++j) row[j] = f.mul(row[j], inv);
}

template <bool Parallel>
RrefResult rref_impl(FpMatrix m) {
    RrefResult out;
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::uint64_t p = m.field().prime();
    [[maybe_unused]] const bool big = rows * cols >= g_parallel_threshold.load();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && m(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != rank) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(rank).begin());
        normalize_pivot_row(m, rank, c);
        const fp_t* pivot = m.row(rank).data();
        fp_t* base = m.data().data();
        const auto prow = static_cast<std::ptrdiff_t>(rank);
        const auto nrows = static_cast<std::ptrdiff_t>(rows);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (big)
            for (std::ptrdiff_t r = 0; r < nrows; ++r) {
                if (r == prow) continue;
                fp_t* row = base + static_cast<std::size_t>(r) * cols;
                if (row[c] != 0) axpy_row(row, pivot, c, cols, row[c], p);
            }
        } else {
            for (std::ptrdiff_t r = 0; r < nrows; ++r) {
                if (r == prow) continue;
                fp_t* row = base + static_cast<std::size_t>(r) * cols;
                if (row[c] != 0) axpy_row(row, pivot, c, cols, row[c], p);
            }
        }
        out.pivots.push_back(c);
        ++rank;
    }
    out.matrix = std::move(m);
    return out;
}

}  // namespace

RrefResult rref(FpMatrix m) { return rref_impl<true>(std::move(m)); }
RrefResult rref_reference(FpMatrix m) { return rref_impl<false>(std::move(m)); }

void set_parallel_threshold(std::size_t cells) { g_parallel_threshold = cells; }
std::size_t parallel_threshold() { return g_parallel_threshold; }

std::size_t rank(const FpMatrix& m) { return rref(m).rank(); }

FpMatrix kernel_rows(const FpMatrix& m) {
    const auto red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : red.pivots) is_pivot[c] = true;
    FpMatrix out(n - red.rank(), n, m.field());
    std::size_t k = 0;
    for (std::size_t fcol = 0; fcol < n; ++fcol) {
        if (is_pivot[fcol]) continue;
        out(k, fcol) = 1;
        for (std::size_t r = 0; r < red.rank(); ++r)
            out(k, red.pivots[r]) = m.field().neg(red.matrix(r, fcol));
        ++k;
    }
    return out;
}

FpMatrix kernel_basis(const FpMatrix& m) { return kernel_rows(m).transpose(); }

FpMatrix image_basis(const FpMatrix& m) {
    const auto red = rref(m);
    return m.select_cols(red.pivots);
}

std::optional<std::vector<fp_t>> solve(const FpMatrix& m, std::span<const fp_t> b) {
    if (b.size() != m.rows()) throw Error("solve: right-hand side has wrong length");
    const std::size_t n = m.cols();
    FpMatrix aug(m.rows(), n + 1, m.field());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
        aug(r, n) = b[r];
    }
    const auto red = rref(std::move(aug));
    if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
    std::vector<fp_t> x(n, 0);
    for (std::size_t r = 0; r < red.rank(); ++r) x[red.pivots[r]] = red.matrix(r, n);
    return x;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient, PrimeField field) : basis_(0, ambient, field) {}

Subspace Subspace::span_rows(const FpMatrix& generators) {
    auto red = rref(generators);
    Subspace s;
    s.basis_ = red.matrix.slice_rows(0, red.rank());
    s.pivots_ = std::move(red.pivots);
    return s;
}

Subspace Subspace::span_cols(const FpMatrix& generators) { return span_rows(generators.transpose()); }

Subspace Subspace::whole(std::size_t ambient, PrimeField field) {
    return span_rows(FpMatrix::identity(ambient, field));
}

std::vector<fp_t> Subspace::reduce(std::span<const fp_t> v) const {
    if (v.size() != ambient()) throw Error("subspace: vector has wrong length");
    std::vector<fp_t> w(v.begin(), v.end());
    const std::uint64_t p = field().prime();
    for (std::size_t r = 0; r < dim(); ++r) {
        const fp_t f = w[pivots_[r]];
        if (f != 0) axpy_row(w.data(), basis_.row(r).data(), pivots_[r], ambient(), f, p);
    }
    return w;
}

bool Subspace::contains(std::span<const fp_t> v) const {
    auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](fp_t x) { return x == 0; });
}

std::vector<fp_t> Subspace::coordinates(std::span<const fp_t> v) const {
    std::vector<fp_t> c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
}

bool Subspace::insert(std::span<const fp_t> v) {
    auto w = reduce(v);
    auto lead = std::find_if(w.begin(), w.end(), [](fp_t x) { return x != 0; });
    if (lead == w.end()) return false;
    const std::size_t c = static_cast<std::size_t>(lead - w.begin());
    const auto& f = field();
    const fp_t inv = f.inv(w[c]);
    for (std::size_t j = c; j < w.size(); ++j) w[j] = f.mul(w[j], inv);
    const std::uint64_t p = f.prime();
    for (std::size_t r = 0; r < dim(); ++r) {
        auto row = basis_.row(r);
        if (row[c] != 0) axpy_row(row.data(), w.data(), c, ambient(), row[c], p);
    }
    // keep rows ordered by pivot column
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin());
    FpMatrix grown(dim() + 1, ambient(), f);
    for (std::size_t r = 0, k = 0; r <= dim(); ++r) {
        auto src = r == pos ? std::span<const fp_t>(w) : basis_.row(k++);
        std::copy(src.begin(), src.end(), grown.row(r).begin());
    }
    basis_ = std::move(grown);
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), c);
    return true;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
    std::vector<std::size_t> out;
    out.reserve(ambient() - dim());
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient(); ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    for (std::size_t r = 0; r < dim(); ++r)
        if (!other.contains(basis_.row(r))) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (ambient() != other.ambient()) throw Error("subspace sum: ambient mismatch");
    if (other.dim() == 0) return *this;
    if (dim() == 0) return other;
    const FpMatrix parts[] = {basis_, other.basis_};
    return span_rows(vstack(parts));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient() != other.ambient()) throw Error("subspace intersection: ambient mismatch");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient(), field());
    // (a, b) with a U = b W: nullspace of the stacked row bases
    const FpMatrix parts[] = {basis_, other.basis_};
    const FpMatrix ker = kernel_rows(vstack(parts).transpose());
    FpMatrix gens(ker.rows(), ambient(), field());
    for (std::size_t k = 0; k < ker.rows(); ++k) {
        for (std::size_t r = 0; r < dim(); ++r) {
            const fp_t a = ker(k, r);
            if (a == 0) continue;
            for (std::size_t j = 0; j < ambient(); ++j)
                gens(k, j) = field().add(gens(k, j), field().mul(a, basis_(r, j)));
        }
    }
    return span_rows(gens);
}

}  // namespace artin
