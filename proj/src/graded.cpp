#include "sphtd/graded.hpp"

#include "sphtd/error.hpp"

#include <algorithm>
#include <sstream>

namespace sphtd {

GradedGroup::GradedGroup(std::vector<AbelianGroup> groups) : groups_(std::move(groups)) {}

GradedGroup GradedGroup::zero(int top)
{
    if (top < 0)
        throw Error(ErrorCode::BadArguments, "GradedGroup: negative top degree");
    return GradedGroup(std::vector<AbelianGroup>(static_cast<std::size_t>(top) + 1));
}

const AbelianGroup& GradedGroup::at(int degree) const
{
    static const AbelianGroup zero_group;
    if (degree < 0 || degree > top())
        return zero_group;
    return groups_[static_cast<std::size_t>(degree)];
}

void GradedGroup::set(int degree, AbelianGroup g)
{
    if (degree < 0 || degree > top())
        throw Error(ErrorCode::BadArguments, "GradedGroup: degree out of range");
    groups_[static_cast<std::size_t>(degree)] = std::move(g);
}

bool GradedGroup::has_torsion() const
{
    return std::any_of(groups_.begin(), groups_.end(), [](const AbelianGroup& g) { return !g.is_free(); });
}

std::vector<std::string> validate_base(const BaseManifold& m)
{
    std::vector<std::string> violations;
    const int n = m.half_dim;
    const int top = m.cohomology.top();
    if (n < 2) {
        std::ostringstream os;
        os << "dimension 2n = " << 2 * n << " must be at least 4";
        violations.push_back(os.str());
    }
    if (top != 2 * n) {
        std::ostringstream os;
        os << "top degree " << top << " does not match dimension " << 2 * n;
        violations.push_back(os.str());
        return violations;
    }
    const AbelianGroup z = AbelianGroup::free(1);
    if (m.cohomology.at(0) != z)
        violations.push_back("H^0 must be Z");
    if (m.cohomology.at(top) != z) {
        std::ostringstream os;
        os << "H^" << top << " must be Z";
        violations.push_back(os.str());
    }
    for (int j = 1; j < n; ++j) {
        if (m.cohomology.at(j).rank() != m.cohomology.at(top - j).rank()) {
            std::ostringstream os;
            os << "duality violation at (" << j << "," << top - j << "): ranks "
               << m.cohomology.at(j).rank() << " and " << m.cohomology.at(top - j).rank();
            violations.push_back(os.str());
        }
    }
    return violations;
}

ParityParts parity_parts(const GradedGroup& g)
{
    std::vector<AbelianGroup> even, odd;
    for (int j = 0; j <= g.top(); ++j)
        (j % 2 == 0 ? even : odd).push_back(g.at(j));
    return {direct_sum(even), direct_sum(odd)};
}

ParityParts twisted_cohomology(const GradedGroup& total_space, const Integer& h)
{
    const int top = total_space.top();
    const AbelianGroup z = AbelianGroup::free(1);
    if (total_space.at(0) != z)
        throw Error(ErrorCode::DegreeZeroNotZ, "twisted cohomology: H^0 of the total space must be Z");
    if (top < 3 || top % 2 == 0 || total_space.at(top) != z)
        throw Error(ErrorCode::TopNotZ, "twisted cohomology: top degree must be odd with H^top = Z");

    IntMatrix cup(1, 1);
    cup(0, 0) = h;
    const KernelCokernel kc = kernel_cokernel(cup);

    std::vector<AbelianGroup> even{kc.kernel};
    std::vector<AbelianGroup> odd{kc.cokernel};
    for (int j = 1; j < top; ++j)
        (j % 2 == 0 ? even : odd).push_back(total_space.at(j));
    return {direct_sum(even), direct_sum(odd)};
}

}  // namespace sphtd
