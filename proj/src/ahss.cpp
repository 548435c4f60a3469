#include "sphtd/ahss.hpp"

#include "sphtd/error.hpp"

#include <sstream>

namespace sphtd {

BigradedPage::BigradedPage(int r, int n, std::vector<AbelianGroup> columns)
    : r_(r), n_(n), columns_(std::move(columns))
{
    if (r_ < 2 || n_ < 1)
        throw Error(ErrorCode::BadArguments, "BigradedPage: need r >= 2 and n >= 1");
    if (columns_.size() != static_cast<std::size_t>(4 * n_))
        throw Error(ErrorCode::TopDegreeMismatch, "BigradedPage: expected columns 0 .. 4n-1");
}

const AbelianGroup& BigradedPage::at(int p) const
{
    static const AbelianGroup zero_group;
    if (p < 0 || p > last_column())
        return zero_group;
    return columns_[static_cast<std::size_t>(p)];
}

bool BigradedPage::from_torsion_free_base() const
{
    for (int p = 0; p <= last_column(); ++p)
        if (p != 2 * n_ && !at(p).is_free())
            return false;
    return true;
}

BigradedPage e2_page(const GradedGroup& total_space, int n)
{
    if (n < 1 || total_space.top() != 4 * n - 1) {
        std::ostringstream os;
        os << "E_2 page: total space has top degree " << total_space.top() << ", expected 4n-1 = " << 4 * n - 1;
        throw Error(ErrorCode::TopDegreeMismatch, os.str());
    }
    return BigradedPage(2, n, total_space.groups());
}

BigradedPage next_page(const BigradedPage& page, const Integer& h)
{
    if (!page.from_torsion_free_base())
        throw Error(ErrorCode::TorsionBase, "spectral sequence: the base must be torsion-free");
    if (page.is_terminal())
        return page;

    std::vector<AbelianGroup> columns = page.columns();
    if (page.r() == page.last_column()) {
        // d_{4n-1} : E^{0} = Z -> E^{4n-1} = Z is multiplication by h
        const AbelianGroup& source = page.at(0);
        const AbelianGroup& target = page.at(page.last_column());
        if (source.is_zero() || target.is_zero())
            return BigradedPage(page.r() + 1, page.n(), std::move(columns));
        if (source != AbelianGroup::free(1) || target != AbelianGroup::free(1))
            throw Error(ErrorCode::BadArguments, "spectral sequence: d_{4n-1} needs Z in columns 0 and 4n-1");
        IntMatrix cup(1, 1);
        cup(0, 0) = h;
        const KernelCokernel kc = kernel_cokernel(cup);
        columns.front() = kc.kernel;
        columns.back() = kc.cokernel;
    }
    return BigradedPage(page.r() + 1, page.n(), std::move(columns));
}

BigradedPage run_to_infinity(const BigradedPage& page, const Integer& h)
{
    BigradedPage current = page;
    if (!current.from_torsion_free_base())
        throw Error(ErrorCode::TorsionBase, "spectral sequence: the base must be torsion-free");
    while (!current.is_terminal())
        current = next_page(current, h);
    return current;
}

KGroups assemble_k(const BigradedPage& terminal)
{
    if (!terminal.is_terminal())
        throw Error(ErrorCode::NotTerminal, "assemble_k: page has not converged");
    std::vector<AbelianGroup> even, odd;
    for (int p = 0; p <= terminal.last_column(); ++p)
        (p % 2 == 0 ? even : odd).push_back(terminal.at(p));
    return {direct_sum(even), direct_sum(odd)};
}

KGroups untwisted_k(const GradedGroup& total_space, int n)
{
    const BigradedPage e2 = e2_page(total_space, n);
    if (!e2.from_torsion_free_base())
        throw Error(ErrorCode::TorsionBase, "untwisted K: the base must be torsion-free");
    const ParityParts parts = parity_parts(total_space);
    return {parts.even, parts.odd};
}

KGroups twisted_k(const GradedGroup& total_space, int n, const Integer& h)
{
    return assemble_k(run_to_infinity(e2_page(total_space, n), h));
}

}  // namespace sphtd
