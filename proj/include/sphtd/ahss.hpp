#pragma once

#include "sphtd/graded.hpp"

namespace sphtd {

/*
 * One page E_r of the twisted Atiyah-Hirzebruch spectral sequence of a
 * (4n-1)-dimensional sphere-bundle total space.
 *
 * Odd rows vanish and the even rows are all equal (Bott periodicity), so the
 * page is stored as one group per column p = 0 .. 4n-1.
 */
class BigradedPage {
public:
    BigradedPage(int r, int n, std::vector<AbelianGroup> columns);

    int r() const { return r_; }
    int n() const { return n_; }
    int last_column() const { return 4 * n_ - 1; }
    const AbelianGroup& at(int p) const;
    const std::vector<AbelianGroup>& columns() const { return columns_; }

    /* No differential d_s with s >= r can be non-zero. */
    bool is_terminal() const { return r_ >= 4 * n_; }

    /* Torsion outside column 2n can only come from torsion in the base. */
    bool from_torsion_free_base() const;

    friend bool operator==(const BigradedPage&, const BigradedPage&) = default;

private:
    int r_;
    int n_;
    std::vector<AbelianGroup> columns_;
};

/* E_2^{p,even} = H^p(Z;Z). */
BigradedPage e2_page(const GradedGroup& total_space, int n);

/*
 * E_r -> E_{r+1}. Even d_r vanish because odd rows do; d_3 .. d_{4n-3} vanish
 * for sphere bundles over torsion-free bases; d_{4n-1} is cup with the flux,
 * x h : E^{0} -> E^{4n-1}.
 */
BigradedPage next_page(const BigradedPage& page, const Integer& h);

BigradedPage run_to_infinity(const BigradedPage& page, const Integer& h);

struct KGroups {
    AbelianGroup k0;
    AbelianGroup k1;

    friend bool operator==(const KGroups&, const KGroups&) = default;
};

/* Filtration quotients are summed with every extension taken split. */
KGroups assemble_k(const BigradedPage& terminal);

/* Untwisted K^even / K^odd of the total space; the sequence collapses at E_2. */
KGroups untwisted_k(const GradedGroup& total_space, int n);

/* e2_page -> run_to_infinity -> assemble_k. */
KGroups twisted_k(const GradedGroup& total_space, int n, const Integer& h);

}  // namespace sphtd
