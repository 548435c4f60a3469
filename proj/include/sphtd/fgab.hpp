#pragma once

/*
 * Finitely generated abelian groups and integer matrices.
 *
 * An AbelianGroup is stored in invariant-factor normal form
 *     Z^r + Z_{d_1} + ... + Z_{d_t},   d_i >= 2,  d_i | d_{i+1},
 * so two values are isomorphic exactly when they compare equal.
 * All integers are GMP arbitrary-precision.
 */

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sphtd {

using Integer = mpz_class;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    /* Row-major nested initializer, e.g. IntMatrix::from_rows({{2, 4}, {6, 8}}). */
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const Integer> diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Integer>& entries() const { return entries_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_diagonal() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

class AbelianGroup {
public:
    /* The zero group. */
    AbelianGroup() = default;

    /* Validating constructor: torsion must already be a divisibility chain of
     * integers >= 2. Throws Error(BadArguments) otherwise. */
    AbelianGroup(std::size_t rank, std::vector<Integer> torsion);

    /* Normalizing constructor: accepts arbitrary torsion orders (zeros become
     * free summands, units vanish, signs are dropped). */
    static AbelianGroup from_orders(std::size_t rank, std::span<const Integer> orders);

    static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }

    /* Z/m: Z for m = 0, the zero group for m = +-1. */
    static AbelianGroup cyclic(const Integer& m);

    std::size_t rank() const { return rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool is_zero() const { return rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }
    AbelianGroup free_part() const { return free(rank_); }

    /* "Z^2 + Z_2 + Z_12", "Z", "0". */
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<Integer> torsion_;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

struct SmithForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // rows x cols, diagonal, non-negative divisibility chain
    IntMatrix v;  // cols x cols, unimodular
};

/* U * A * V = D. */
SmithForm smith_normal_form(const IntMatrix& a);

/* The nonzero diagonal of the Smith form, i.e. the invariant factors. */
std::vector<Integer> invariant_factors(const IntMatrix& a);

struct KernelCokernel {
    AbelianGroup kernel;
    AbelianGroup cokernel;
};

/* f is a map Z^cols -> Z^rows acting on column vectors. */
KernelCokernel kernel_cokernel(const IntMatrix& f);

AbelianGroup direct_sum(std::span<const AbelianGroup> groups);
AbelianGroup direct_sum(std::initializer_list<AbelianGroup> groups);

inline bool is_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

}  // namespace sphtd
