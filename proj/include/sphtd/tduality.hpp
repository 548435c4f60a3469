#pragma once

#include "sphtd/ahss.hpp"
#include "sphtd/gysin.hpp"

namespace sphtd {

/* (M, e, h) -> (M, h, e). Throws InadmissibleDualEuler when h cannot be the
 * Euler number of an S^{2n-1}-bundle over M. */
BundleWithFlux dualize(const BundleWithFlux& bundle);

/*
 * Both sides of a degree-shifting isomorphism: (even, odd) of the bundle and
 * of its dual. The verdict is computed from the groups on demand.
 */
struct DualityReport {
    BundleWithFlux bundle;
    BundleWithFlux dual;
    ParityParts lhs;
    ParityParts rhs;

    bool holds() const
    {
        return is_isomorphic(lhs.even, rhs.odd) && is_isomorphic(lhs.odd, rhs.even);
    }
};

/* H^even_H(Z) = H^odd_Hhat(Zhat) and H^odd_H(Z) = H^even_Hhat(Zhat). */
DualityReport verify_cohomology_duality(const BundleWithFlux& bundle);

/* K^0_H(Z) = K^1_Hhat(Zhat) and K^1_H(Z) = K^0_Hhat(Zhat); torsion-free bases only. */
DualityReport verify_k_duality(const BundleWithFlux& bundle);

/* Twisted cohomology of the total space, via the Gysin sequence. */
ParityParts twisted_cohomology(const BundleWithFlux& bundle);

/* Twisted K-theory of the total space, via the spectral sequence. */
KGroups twisted_k(const BundleWithFlux& bundle);

}  // namespace sphtd
