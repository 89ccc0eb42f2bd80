#pragma once

#include <optional>
#include <span>
#include <vector>

#include "artin/matrix.hpp"

namespace artin {

struct RrefResult {
    FpMatrix matrix;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form. Leftmost pivot, first nonzero row at or below
/// the current rank, pivots normalized to 1. Rows below the rank are zero.
/// The elimination sweep is OpenMP-parallel for large matrices; results are
/// bit-identical to rref_reference.
RrefResult rref(FpMatrix m);

/// Single-threaded reference kernel with the same tie-breaking as rref().
RrefResult rref_reference(FpMatrix m);

/// Row count above which rref() parallelizes its elimination sweep.
void set_parallel_threshold(std::size_t cells);
std::size_t parallel_threshold();

std::size_t rank(const FpMatrix& m);

/// Columns form a basis of the right nullspace. One column per free column
/// of rref(m), in increasing order, with that free variable set to 1.
FpMatrix kernel_basis(const FpMatrix& m);
/// Same basis as kernel_basis, one vector per row.
FpMatrix kernel_rows(const FpMatrix& m);

/// The pivot columns of m, i.e. a basis of its column space taken from m itself.
FpMatrix image_basis(const FpMatrix& m);

/// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<std::vector<fp_t>> solve(const FpMatrix& m, std::span<const fp_t> b);

/// A linear subspace of F_p^n kept as the nonzero rows of its RREF, so two
/// subspaces are equal exactly when their bases compare equal.
class Subspace {
  public:
    Subspace() = default;
    Subspace(std::size_t ambient, PrimeField field);

    static Subspace span_rows(const FpMatrix& generators);
    static Subspace span_cols(const FpMatrix& generators);
    static Subspace whole(std::size_t ambient, PrimeField field);

    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const PrimeField& field() const { return basis_.field(); }
    const FpMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Normal form of v modulo the subspace: zero on every pivot coordinate.
    std::vector<fp_t> reduce(std::span<const fp_t> v) const;
    bool contains(std::span<const fp_t> v) const;
    /// Coordinates of v (assumed to lie in the subspace) in the RREF basis.
    std::vector<fp_t> coordinates(std::span<const fp_t> v) const;
    /// Inserts v; returns false if it was already contained.
    bool insert(std::span<const fp_t> v);

    /// Non-pivot coordinates in increasing order; the matching unit vectors
    /// span a complement.
    std::vector<std::size_t> complement_coordinates() const;

    bool is_subspace_of(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool operator==(const Subspace& other) const {
        return pivots_ == other.pivots_ && basis_ == other.basis_;
    }

  private:
    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace artin
