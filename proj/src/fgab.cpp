#include "sphtd/fgab.hpp"

#include "sphtd/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace sphtd {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::BadArguments: return "BadArguments";
    case ErrorCode::DegreeZeroNotZ: return "DegreeZeroNotZ";
    case ErrorCode::TopNotZ: return "TopNotZ";
    case ErrorCode::InadmissibleEuler: return "InadmissibleEuler";
    case ErrorCode::InadmissibleDualEuler: return "InadmissibleDualEuler";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::TopDegreeMismatch: return "TopDegreeMismatch";
    case ErrorCode::TorsionBase: return "TorsionBase";
    case ErrorCode::NotTerminal: return "NotTerminal";
    case ErrorCode::NoClosingSign: return "NoClosingSign";
    case ErrorCode::BadTruncation: return "BadTruncation";
    case ErrorCode::ContainsEta: return "ContainsEta";
    }
    return "Unknown";
}

/****************************************************
 *                   IntMatrix
 ***************************************************/

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw Error(ErrorCode::BadArguments, "IntMatrix: entry count does not match rows*cols");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw Error(ErrorCode::BadArguments, "IntMatrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> diag)
{
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0)
                return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::BadArguments, "IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

/****************************************************
 *                 Smith normal form
 ***************************************************/

namespace {

/* Row and column operations applied simultaneously to D and to the
 * accumulated transforms, keeping U * A * V = D at every step. */
class SmithReducer {
public:
    explicit SmithReducer(const IntMatrix& a)
        : d_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols()))
    {
    }

    SmithForm run()
    {
        const std::size_t steps = std::min(d_.rows(), d_.cols());
        for (std::size_t t = 0; t < steps; ++t) {
            if (!reduce_pivot(t))
                break;
            if (d_(t, t) < 0)
                negate_row(t);
        }
        return {std::move(u_), std::move(d_), std::move(v_)};
    }

private:
    /* Returns false when the trailing block is zero. */
    bool reduce_pivot(std::size_t t)
    {
        for (;;) {
            std::size_t pi = 0, pj = 0;
            if (!find_min_entry(t, pi, pj))
                return false;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < d_.rows(); ++i) {
                if (d_(i, t) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
                add_row_multiple(i, t, -q);
                if (d_(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < d_.cols(); ++j) {
                if (d_(t, j) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
                add_col_multiple(j, t, -q);
                if (d_(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < d_.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d_.cols(); ++j)
                    if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
                        add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                return true;
        }
    }

    bool find_min_entry(std::size_t t, std::size_t& pi, std::size_t& pj) const
    {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < d_.rows(); ++i)
            for (std::size_t j = t; j < d_.cols(); ++j) {
                const Integer& x = d_(i, j);
                if (x == 0)
                    continue;
                if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
                    best = x;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < d_.cols(); ++j)
            std::swap(d_(a, j), d_(b, j));
        for (std::size_t j = 0; j < u_.cols(); ++j)
            std::swap(u_(a, j), u_(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < d_.rows(); ++i)
            std::swap(d_(i, a), d_(i, b));
        for (std::size_t i = 0; i < v_.rows(); ++i)
            std::swap(v_(i, a), v_(i, b));
    }

    // row[target] += c * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& c)
    {
        for (std::size_t j = 0; j < d_.cols(); ++j)
            d_(target, j) += c * d_(source, j);
        for (std::size_t j = 0; j < u_.cols(); ++j)
            u_(target, j) += c * u_(source, j);
    }

    // col[target] += c * col[source]
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& c)
    {
        for (std::size_t i = 0; i < d_.rows(); ++i)
            d_(i, target) += c * d_(i, source);
        for (std::size_t i = 0; i < v_.rows(); ++i)
            v_(i, target) += c * v_(i, source);
    }

    void negate_row(std::size_t t)
    {
        for (std::size_t j = 0; j < d_.cols(); ++j)
            d_(t, j) = -d_(t, j);
        for (std::size_t j = 0; j < u_.cols(); ++j)
            u_(t, j) = -u_(t, j);
    }

    IntMatrix d_;
    IntMatrix u_;
    IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    return SmithReducer(a).run();
}

std::vector<Integer> invariant_factors(const IntMatrix& a)
{
    const SmithForm snf = smith_normal_form(a);
    std::vector<Integer> result;
    const std::size_t steps = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < steps && snf.d(t, t) != 0; ++t)
        result.push_back(snf.d(t, t));
    return result;
}

KernelCokernel kernel_cokernel(const IntMatrix& f)
{
    const std::vector<Integer> factors = invariant_factors(f);
    const std::size_t r = factors.size();
    std::vector<Integer> torsion;
    for (const Integer& d : factors)
        if (d > 1)
            torsion.push_back(d);
    return {AbelianGroup::free(f.cols() - r), AbelianGroup(f.rows() - r, std::move(torsion))};
}

/****************************************************
 *                  AbelianGroup
 ***************************************************/

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion))
{
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2)
            throw Error(ErrorCode::BadArguments, "AbelianGroup: torsion coefficients must be >= 2");
        if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
            throw Error(ErrorCode::BadArguments, "AbelianGroup: torsion is not a divisibility chain");
    }
}

AbelianGroup AbelianGroup::from_orders(std::size_t rank, std::span<const Integer> orders)
{
    std::vector<Integer> nontrivial;
    for (const Integer& m : orders) {
        if (m == 0)
            ++rank;
        else if (abs(m) != 1)
            nontrivial.push_back(abs(m));
    }
    const std::vector<Integer> factors = invariant_factors(IntMatrix::diagonal(nontrivial));
    std::vector<Integer> torsion;
    for (const Integer& d : factors)
        if (d > 1)
            torsion.push_back(d);
    return AbelianGroup(rank, std::move(torsion));
}

AbelianGroup AbelianGroup::cyclic(const Integer& m)
{
    const Integer order = m;
    return from_orders(0, std::span<const Integer>(&order, 1));
}

std::string AbelianGroup::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << 'Z';
        if (rank_ > 1)
            os << '^' << rank_;
        first = false;
    }
    for (const Integer& d : torsion_) {
        os << (first ? "" : " + ") << "Z_" << d;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g)
{
    return os << g.to_string();
}

AbelianGroup direct_sum(std::span<const AbelianGroup> groups)
{
    std::size_t rank = 0;
    std::vector<Integer> orders;
    for (const AbelianGroup& g : groups) {
        rank += g.rank();
        orders.insert(orders.end(), g.torsion().begin(), g.torsion().end());
    }
    return AbelianGroup::from_orders(rank, orders);
}

AbelianGroup direct_sum(std::initializer_list<AbelianGroup> groups)
{
    return direct_sum(std::span<const AbelianGroup>(groups.begin(), groups.size()));
}

}  // namespace sphtd
