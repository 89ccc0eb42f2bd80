#pragma once

#include <vector>

#include "artin/resolve.hpp"

namespace artin {

/// The complex M ⊗ F_• for a minimal resolution F_• of N, with
/// M ⊗ F_k = M^{b_k} and maps built blockwise from the differential entries.
class TensorComplex {
  public:
    TensorComplex(const ModuleRep& M, const Resolution& resN);

    /// Differentials are available for k = 1 … depth().
    int depth() const { return static_cast<int>(maps_.size()); }
    const FpMatrix& map(int k) const { return maps_.at(static_cast<std::size_t>(k - 1)); }
    std::size_t rank(int k) const { return ranks_.at(static_cast<std::size_t>(k - 1)); }

    /// λ(Tor_i(M, N)) for 0 ≤ i < depth().
    std::size_t tor_length(int i) const;
    ModuleRep tor(int i) const;
    /// M ⊗ N_i = coker(M ⊗ F_{i+1} → M ⊗ F_i) for 0 ≤ i < depth(); N_0 = N.
    ModuleRep tensor_syzygy(int i) const;

  private:
    ModuleRep power(std::size_t copies) const;

    ModuleRep M_;
    std::vector<std::size_t> betti_;
    std::vector<FpMatrix> maps_;
    std::vector<std::size_t> ranks_;
};

/// Tor_i(M, N) via a minimal resolution of N.
ModuleRep tor(const ModuleRep& M, const ModuleRep& N, int i);
std::size_t tor_length(const ModuleRep& M, const ModuleRep& N, int i);
/// Vanishing flags for Tor_i(M, N), i = lo … hi.
std::vector<bool> tor_vanishing_window(const ModuleRep& M, const ModuleRep& N, int lo, int hi);

}  // namespace artin
