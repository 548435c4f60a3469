#include "sphtd/gysin.hpp"

#include "sphtd/error.hpp"

#include <sstream>

namespace sphtd {

bool admissible_euler(int n, const Integer& e)
{
    if (n < 2)
        return false;
    if (n == 2 || n == 4)
        return true;
    return mpz_even_p(e.get_mpz_t()) != 0;
}

std::string euler_rule(int n)
{
    std::ostringstream os;
    if (n < 2)
        os << "sphere bundles need n >= 2, got n=" << n;
    else if (n == 2 || n == 4)
        os << "any Euler number is admissible for n=" << n;
    else
        os << "Euler number must be even for n=" << n;
    return os.str();
}

BundleWithFlux::BundleWithFlux(BaseManifold base, Integer euler, Integer flux)
    : base_(std::move(base)), euler_(std::move(euler)), flux_(std::move(flux))
{
    const auto violations = validate_base(base_);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "invalid base '" << base_.name << "': " << violations.front();
        for (std::size_t i = 1; i < violations.size(); ++i)
            os << "; " << violations[i];
        throw Error(ErrorCode::InvalidBase, os.str());
    }
    if (!admissible_euler(n(), euler_)) {
        std::ostringstream os;
        os << "inadmissible Euler number " << euler_ << ": " << euler_rule(n());
        throw Error(ErrorCode::InadmissibleEuler, os.str());
    }
}

/*
 * Gysin sequence of S^{2n-1} -> Z -> M:
 *
 *   H^{j-2n}(M) --e--> H^j(M) --> H^j(Z) --> H^{j-2n+1}(M) --e--> H^{j+1}(M)
 *
 * Cup with e is non-zero only on H^0(M) = Z -> H^{2n}(M) = Z, so
 *   H^j(Z)    = H^j(M) + H^{j-2n+1}(M)        for j != 2n-1, 2n
 *   H^{2n-1}  = H^{2n-1}(M) + ker(x e)
 *   H^{2n}    = coker(x e) + H^1(M)            (split extension)
 */
GysinResult gysin_sequence(const BundleWithFlux& bundle)
{
    const int n = bundle.n();
    const GradedGroup& hm = bundle.base().cohomology;
    const int top = 4 * n - 1;

    IntMatrix cup_euler(1, 1);
    cup_euler(0, 0) = bundle.euler();
    const KernelCokernel kc = kernel_cokernel(cup_euler);

    GysinResult result{GradedGroup::zero(top), false};
    for (int j = 0; j <= top; ++j) {
        AbelianGroup sub = (j == 2 * n) ? kc.cokernel : hm.at(j);
        AbelianGroup quotient = (j == 2 * n - 1) ? kc.kernel : hm.at(j - 2 * n + 1);
        result.cohomology.set(j, direct_sum({sub, quotient}));
    }
    result.split_by_convention = !hm.at(1).is_free();
    return result;
}

GradedGroup total_space_cohomology(const BundleWithFlux& bundle)
{
    return gysin_sequence(bundle).cohomology;
}

}  // namespace sphtd
