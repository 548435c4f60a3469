#pragma once

#include "sphtd/graded.hpp"

namespace sphtd {

/*
 * Euler numbers realizable by S^{2n-1}-bundles over a closed 2n-manifold:
 *   n = 2      any integer (principal SU(2)-bundles, second Chern class)
 *   n = 4      any integer (Hopf bundle over S^8)
 *   otherwise  even integers only
 */
bool admissible_euler(int n, const Integer& e);

/* Human-readable statement of the rule admissible_euler checks. */
std::string euler_rule(int n);

/* An S^{2n-1}-bundle Z -> M over a 2n-manifold, with Euler number e and
 * a flux h in H^{4n-1}(Z;Z) = Z. */
class BundleWithFlux {
public:
    /* Throws InvalidBase if validate_base fails, InadmissibleEuler if e
     * violates the parity rule for n. */
    BundleWithFlux(BaseManifold base, Integer euler, Integer flux);

    const BaseManifold& base() const { return base_; }
    int n() const { return base_.half_dim; }
    const Integer& euler() const { return euler_; }
    const Integer& flux() const { return flux_; }

    friend bool operator==(const BundleWithFlux&, const BundleWithFlux&) = default;

private:
    BaseManifold base_;
    Integer euler_;
    Integer flux_;
};

struct GysinResult {
    GradedGroup cohomology;  // H^0 .. H^{4n-1} of the total space
    /* The extension 0 -> Z_|e| -> H^{2n}(Z) -> H^1(M) -> 0 was resolved as
     * split although H^1(M) has torsion (never the case for a genuine
     * manifold, where H^1 is free). */
    bool split_by_convention = false;
};

GysinResult gysin_sequence(const BundleWithFlux& bundle);

/* Shorthand for gysin_sequence(bundle).cohomology. */
GradedGroup total_space_cohomology(const BundleWithFlux& bundle);

/* pi_* : H^{4n-1}(Z;Z) -> H^{2n}(M;Z) = Z identifies the flux with an integer. */
inline Integer pushforward_flux(const BundleWithFlux& bundle) { return bundle.flux(); }

}  // namespace sphtd
