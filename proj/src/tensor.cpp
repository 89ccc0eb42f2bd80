#include "artin/homology.hpp"

namespace artin {

ModuleRep tensor(const ModuleRep& M, const ModuleRep& N) {
    if (M.dim() == 0 || N.dim() == 0) return ModuleRep::zero(M.ring());
    return TensorComplex(M, minimal_resolution(N, 1)).tensor_syzygy(0);
}

}  // namespace artin
