#include "sphtd/tduality.hpp"

#include "sphtd/error.hpp"

#include <sstream>

namespace sphtd {

BundleWithFlux dualize(const BundleWithFlux& bundle)
{
    if (!admissible_euler(bundle.n(), bundle.flux())) {
        std::ostringstream os;
        os << "no spherical T-dual: dual Euler number " << bundle.flux() << " is inadmissible ("
           << euler_rule(bundle.n()) << ")";
        throw Error(ErrorCode::InadmissibleDualEuler, os.str());
    }
    return BundleWithFlux(bundle.base(), bundle.flux(), bundle.euler());
}

ParityParts twisted_cohomology(const BundleWithFlux& bundle)
{
    return twisted_cohomology(total_space_cohomology(bundle), bundle.flux());
}

KGroups twisted_k(const BundleWithFlux& bundle)
{
    if (!bundle.base().torsion_free())
        throw Error(ErrorCode::TorsionBase, "twisted K-theory: base '" + bundle.base().name + "' has torsion");
    return twisted_k(total_space_cohomology(bundle), bundle.n(), bundle.flux());
}

DualityReport verify_cohomology_duality(const BundleWithFlux& bundle)
{
    BundleWithFlux dual = dualize(bundle);
    ParityParts lhs = twisted_cohomology(bundle);
    ParityParts rhs = twisted_cohomology(dual);
    return {bundle, std::move(dual), std::move(lhs), std::move(rhs)};
}

DualityReport verify_k_duality(const BundleWithFlux& bundle)
{
    if (!bundle.base().torsion_free())
        throw Error(ErrorCode::TorsionBase, "K-theory duality: base '" + bundle.base().name + "' has torsion");
    BundleWithFlux dual = dualize(bundle);
    const KGroups lhs = twisted_k(bundle);
    const KGroups rhs = twisted_k(dual);
    return {bundle, std::move(dual), {lhs.k0, lhs.k1}, {rhs.k0, rhs.k1}};
}

}  // namespace sphtd
