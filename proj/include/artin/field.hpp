#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace artin {

/// Residue of a prime field, stored in [0, p).
using fp_t = std::uint32_t;

/// Base exception for everything the library reports as a user-facing error.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p = 101);

    std::uint32_t prime() const { return p_; }

    fp_t add(fp_t a, fp_t b) const {
        fp_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + (p_ - b); }
    fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
    fp_t mul(fp_t a, fp_t b) const {
        return static_cast<fp_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    fp_t pow(fp_t a, std::uint64_t e) const;
    fp_t inv(fp_t a) const;

    /// Maps an arbitrary signed integer to its residue.
    fp_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<fp_t>(r < 0 ? r + p_ : r);
    }

    bool operator==(const PrimeField&) const = default;

  private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace artin
