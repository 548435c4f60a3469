#pragma once

/*
 * A formal differential graded algebra for the universal Chern character of
 * cohomotopy twists in degree 2k+1.
 *
 * Generators:
 *   s_i   (i >= 1)  even, degree 2i        power-sum classes
 *   w_i   (i >= 1)  odd,  degree 2i - 1    their transgressions to the loop space
 *   eta             odd,  degree 2k + 1    the twist, eta^2 = 0
 *
 * The differential is the derivation with
 *   d s_n = lambda(n,k) eta s_{n-k},   d w_n = lambda(n,k) eta w_{n-k},   d eta = 0,
 * lambda(n,k) = (-1)^{k+1} n!/(n-k)!, and s_0 = index (0 on the index-zero
 * component), w_0 = 0. All coefficients are exact rationals.
 */

#include "sphtd/error.hpp"
#include "sphtd/fgab.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sphtd {

using Rational = mpq_class;

/* eta^{0|1} * s_{i1} s_{i2} ... * w_{j1} w_{j2} ...  with i's non-decreasing
 * and j's strictly increasing; eta always leftmost. */
struct Monomial {
    bool eta = false;
    std::vector<int> s;
    std::vector<int> omega;

    int degree(int k) const;
    bool is_odd(int k) const { return degree(k) % 2 != 0; }

    std::string to_string() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class FormalElement {
public:
    using Terms = std::map<Monomial, Rational>;

    FormalElement() = default;

    static FormalElement constant(const Rational& c);
    static FormalElement one() { return constant(1); }
    static FormalElement s(int i);
    static FormalElement omega(int i);
    static FormalElement eta();
    static FormalElement monomial(Monomial m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool contains_eta() const;

    /* Drop every term of degree > max_degree. */
    FormalElement truncated(int max_degree, int k) const;

    Rational coefficient(const Monomial& m) const;

    FormalElement& operator+=(const FormalElement& other);
    FormalElement& operator-=(const FormalElement& other);
    FormalElement& operator*=(const Rational& c);

    friend FormalElement operator+(FormalElement a, const FormalElement& b) { return a += b; }
    friend FormalElement operator-(FormalElement a, const FormalElement& b) { return a -= b; }
    friend FormalElement operator*(FormalElement a, const Rational& c) { return a *= c; }
    friend FormalElement operator*(const Rational& c, FormalElement a) { return a *= c; }
    /* Graded-commutative product with Koszul signs. */
    friend FormalElement operator*(const FormalElement& a, const FormalElement& b);

    friend bool operator==(const FormalElement&, const FormalElement&) = default;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

struct ChernContext {
    int k = 1;      // the twist has degree 2k+1
    int N = 10;     // identities hold modulo degree > N
    int index = 0;  // value of s_0

    static ChernContext with_default_truncation(int k) { return {k, 4 * k + 6, 0}; }
};

/* (-1)^{k+1} n!/(n-k)!. Throws BadArguments unless n >= k >= 1. */
Rational lambda_coeff(int n, int k);

FormalElement differential(const FormalElement& x, const ChernContext& ctx);

/* d(d(x)) = 0 for every monomial of degree <= N in s_i, w_i and eta. */
bool d_squared_check(const ChernContext& ctx);

/* sum_{n=1}^{N/2} s_n / n! */
FormalElement chern_even(const ChernContext& ctx);

/* The sign e with (d - e*eta) chern_even = 0 mod degree > N. Throws
 * BadTruncation when N is too small to see eta s_1, NoClosingSign when
 * neither sign works. */
int twisted_closure_sign(const ChernContext& ctx);

/* Sign used in the published closure statement (d - eta) Ch = 0. */
inline constexpr int kPublishedClosureSign = 1;

struct OddSeriesSolution {
    std::vector<Rational> coefficients;        // a_1 .. a_{(N+1)/2}
    bool closes = false;                       // (d - eps eta) sum a_n w_n = 0, checked in the algebra
    std::vector<Rational> published_coefficients;  // lambda(n,k)/n!, zero for n < k
    bool published_closes = false;
    std::optional<int> published_first_failure;    // smallest m where the recursion fails
};

/* Solves a_{m+k} lambda(m+k,k) = eps a_m from the seeds a_1..a_k. */
OddSeriesSolution odd_series_coefficients(const ChernContext& ctx, int eps, std::span<const Rational> seeds);

/* sum_n a_n w_n for the given coefficients a_1, a_2, ... */
FormalElement chern_odd(std::span<const Rational> coefficients);

/****************************************************
 *              Symmetric functions
 ***************************************************/

/* Newton's identities: s_n = c_1 s_{n-1} - c_2 s_{n-2} + ... + (-1)^{n-1} n c_n,
 * with c_j = 0 beyond the given list. Works over any commutative ring T that
 * accepts integer scalars. */
template <class T>
std::vector<T> newton_c_to_s(std::span<const T> c, std::size_t length)
{
    std::vector<T> s(length + 1, T(0));  // s[0] unused
    auto chern = [&](std::size_t i) { return i <= c.size() ? c[i - 1] : T(0); };
    for (std::size_t n = 1; n <= length; ++n) {
        T acc(0);
        for (std::size_t i = 1; i < n; ++i) {
            T term = chern(i) * s[n - i];
            if (i % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        T last = chern(n) * T(static_cast<long>(n));
        if (n % 2 == 0)
            acc -= last;
        else
            acc += last;
        s[n] = acc;
    }
    s.erase(s.begin());
    return s;
}

std::vector<Rational> newton_c_to_s(std::span<const Rational> c);
std::vector<Rational> newton_s_to_c(std::span<const Rational> s);

struct TensorTerm {
    Integer binomial;
    int e_index;  // s_{e_index}(E)
    int f_index;  // s_{f_index}(F)
};

/* s_n(E (x) F) = sum_i binom(n,i) s_{n-i}(E) s_i(F). */
std::vector<TensorTerm> tensor_power_sum_terms(int n);

/* sE[0] and sF[0] are the ranks. */
template <class T>
T tensor_power_sums(std::span<const T> sE, std::span<const T> sF, int n)
{
    if (n < 0 || sE.size() <= static_cast<std::size_t>(n) || sF.size() <= static_cast<std::size_t>(n))
        throw Error(ErrorCode::BadArguments, "tensor_power_sums: need power sums up to index n");
    T total(0);
    for (const TensorTerm& t : tensor_power_sum_terms(n))
        total += T(Rational(t.binomial)) * sE[t.e_index] * sF[t.f_index];
    return total;
}

/* a + b v with v^2 = 0: the classes of a rank-one virtual bundle over S^{2k},
 * truncated above degree 2k. */
struct DualNumber {
    Rational real;
    Rational dual;

    DualNumber() = default;
    DualNumber(long x) : real(x) {}
    DualNumber(Rational a, Rational b = 0) : real(std::move(a)), dual(std::move(b)) {}

    DualNumber& operator+=(const DualNumber& o) { real += o.real; dual += o.dual; return *this; }
    DualNumber& operator-=(const DualNumber& o) { real -= o.real; dual -= o.dual; return *this; }
    friend DualNumber operator*(const DualNumber& a, const DualNumber& b)
    {
        return {a.real * b.real, a.real * b.dual + a.dual * b.real};
    }
    friend bool operator==(const DualNumber& a, const DualNumber& b)
    {
        return a.real == b.real && a.dual == b.dual;
    }
};

/*
 * Coefficient of v s_{n-k} in s_n(E~ (x) F), where E~ is a rank-one virtual
 * bundle with c_1 = ... = c_{k-1} = 0, c_k = v and v^2 = 0. Computed from the
 * Newton identities and the tensor power-sum expansion; equals
 * (-1)^{k+1} n!/((k-1)!(n-k)!).
 */
Rational special_tensor_coefficient(int k, int n);

/* Pullback along the clutching map: 1 (x) x  ->  1 (x) fibre + w (x) w_part. */
struct ClutchingImage {
    FormalElement fibre;
    FormalElement w_part;

    friend bool operator==(const ClutchingImage&, const ClutchingImage&) = default;
};

/* Throws ContainsEta if x involves eta. */
ClutchingImage clutching_pullback(const FormalElement& x, const ChernContext& ctx);

/* General element 1 (x) a + w (x) b, using w^2 = 0. */
ClutchingImage clutching_pullback(const ClutchingImage& x, const ChernContext& ctx);

}  // namespace sphtd
