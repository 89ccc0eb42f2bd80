#include "artin/verify.hpp"

namespace artin {

IdealContext::IdealContext(const MonomialAlgebra& R, IdealRep ideal)
    : I(std::move(ideal)), inv(ring_invariants(R, I)) {
    const auto m = maximal_ideal_rep(R);
    mI = ideal_from_subspace(R, ideal_product(R, m, I));
    I2 = ideal_from_subspace(R, ideal_product(R, I, I));
    m2I_zero = check_m2I_zero(R, I);
}

ModuleProfile::ModuleProfile(ModuleRep M, int depth, std::optional<IdealRep> relation_ideal)
    : M_(std::move(M)), res_(minimal_resolution(M_, depth)), relation_ideal_(std::move(relation_ideal)) {
    free_ = artin::is_free(M_);
}

const ModuleRep& ModuleProfile::syzygy(int t) const {
    if (t == 0) return M_;
    if (t < 0 || t > depth()) throw DepthExceeded();
    return res_.syzygies[static_cast<std::size_t>(t - 1)].module;
}

std::size_t ModuleProfile::betti(int t) const {
    if (t < 0 || t > depth()) throw DepthExceeded();
    return res_.betti[static_cast<std::size_t>(t)];
}

std::size_t ModuleProfile::length_times(int t, const IdealRep& J) {
    const auto key = std::make_pair(t, J.key);
    if (auto it = times_.find(key); it != times_.end()) return it->second;
    const auto& X = syzygy(t);
    const std::size_t v = X.dim() == 0 ? 0 : ideal_times(X, J).dim();
    times_.emplace(key, v);
    return v;
}

bool ModuleProfile::I_free(int t, const IdealRep& I) {
    const auto& X = syzygy(t);
    if (X.dim() == 0) return true;
    const std::size_t s = X.algebra().length() - I.length();
    return X.dim() - length_times(t, I) == betti(t) * s;
}

Rational ModuleProfile::gamma(int t, const IdealRep& I) {
    const auto len = static_cast<std::int64_t>(length(t));
    if (len == 0) throw Error("gamma: zero module");
    return Rational(len, len - static_cast<std::int64_t>(length_times(t, I))) - 1;
}

std::size_t ModuleProfile::socle_dim(int t) {
    if (auto it = socle_dim_.find(t); it != socle_dim_.end()) return it->second;
    const std::size_t d = socle_module(syzygy(t)).dim();
    socle_dim_.emplace(t, d);
    return d;
}

bool ModuleProfile::socle_equals(int t, const IdealRep& I) {
    const auto key = std::make_pair(t, I.key);
    if (auto it = socle_eq_.find(key); it != socle_eq_.end()) return it->second;
    const auto& X = syzygy(t);
    const bool eq = X.dim() == 0 || socle_module(X) == ideal_times(X, I);
    socle_eq_.emplace(key, eq);
    return eq;
}

ModuleProfile& ModuleProfile::dual() {
    if (!dual_) dual_ = std::make_unique<ModuleProfile>(matlis_dual(M_), depth());
    return *dual_;
}

// ---------------------------------------------------------------------------

PairProfile::PairProfile(ModuleProfile& M, ModuleProfile& N)
    : M_(M), N_(N), complex_(M.module(), N.resolution()) {}

std::size_t PairProfile::tor_length(int i) const {
    if (i < 0 || i >= complex_.depth()) throw DepthExceeded();
    return complex_.tor_length(i);
}

const ModuleRep& PairProfile::tensor_syzygy(int i) {
    if (i < 0 || i >= complex_.depth()) throw DepthExceeded();
    auto it = tensors_.find(i);
    if (it == tensors_.end()) it = tensors_.emplace(i, complex_.tensor_syzygy(i)).first;
    return it->second;
}

std::size_t PairProfile::tensor_times(int i, const IdealRep& J) {
    const auto key = std::make_pair(i, J.key);
    if (auto it = times_.find(key); it != times_.end()) return it->second;
    const auto& X = tensor_syzygy(i);
    const std::size_t v = X.dim() == 0 ? 0 : ideal_times(X, J).dim();
    times_.emplace(key, v);
    return v;
}

Rational PairProfile::tensor_gamma(int i, const IdealRep& I) {
    const auto len = static_cast<std::int64_t>(tensor_length(i));
    if (len == 0) throw Error("gamma: zero module");
    return Rational(len, len - static_cast<std::int64_t>(tensor_times(i, I))) - 1;
}

std::size_t PairProfile::tor1_of_syzygy(int i) {
    if (auto it = tor1_.find(i); it != tor1_.end()) return it->second;
    const auto& X = N_.syzygy(i - 1);
    const std::size_t v = TensorComplex(M_.module(), minimal_resolution(X, 2)).tor_length(1);
    tor1_.emplace(i, v);
    return v;
}

// ---------------------------------------------------------------------------

RingContext::RingContext(RingPtr R, int depth)
    : R_(std::move(R)), depth_(depth), m_(maximal_ideal_rep(*R_)), soc_(socle_ring(*R_)),
      m2_(maximal_power(*R_, 2)), loewy_(loewy_length(*R_)) {}

ModuleProfile& RingContext::omega() {
    if (!omega_) omega_ = std::make_unique<ModuleProfile>(canonical_module(R_), depth_);
    return *omega_;
}

PairProfile& RingContext::omega_pair() {
    if (!omega_pair_) omega_pair_ = std::make_unique<PairProfile>(omega(), omega());
    return *omega_pair_;
}

PairProfile& RingContext::with_omega(ModuleProfile& M) {
    auto& slot = with_omega_[&M];
    if (!slot) slot = std::make_unique<PairProfile>(M, omega());
    return *slot;
}

PairProfile& RingContext::with_dual(ModuleProfile& M) {
    auto& slot = with_dual_[&M];
    if (!slot) slot = std::make_unique<PairProfile>(M, M.dual());
    return *slot;
}

}  // namespace artin
