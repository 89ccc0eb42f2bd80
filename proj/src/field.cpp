#include "artin/field.hpp"

namespace artin {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

fp_t PrimeField::pow(fp_t a, std::uint64_t e) const {
    fp_t result = 1 % p_;
    fp_t base = a % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

fp_t PrimeField::inv(fp_t a) const {
    if (a % p_ == 0) throw Error("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

}  // namespace artin
