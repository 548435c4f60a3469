#include "sphtd/chern.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sphtd {

namespace {

/* Sorts w in place and returns the sign of the sorting permutation, or 0 if
 * an index repeats (w_i w_i = 0 for odd w_i). */
int sort_odd_factors(std::vector<int>& w)
{
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
            if (w[j - 1] == w[j])
                return 0;
            std::swap(w[j - 1], w[j]);
            sign = -sign;
        }
    return sign;
}

Rational factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return Rational(f);
}

/* n (n-1) ... (n-k+1); zero for 0 <= n < k. */
Integer falling_factorial(int n, int k)
{
    Integer f = 1;
    for (int i = 0; i < k; ++i)
        f *= (n - i);
    return f;
}

}  // namespace

/****************************************************
 *                  Monomials
 ***************************************************/

int Monomial::degree(int k) const
{
    int d = eta ? 2 * k + 1 : 0;
    for (int i : s)
        d += 2 * i;
    for (int i : omega)
        d += 2 * i - 1;
    return d;
}

std::string Monomial::to_string() const
{
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first)
            os << '*';
        first = false;
    };
    if (eta) {
        sep();
        os << "eta";
    }
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i])
            ++j;
        sep();
        os << "s" << s[i];
        if (j - i > 1)
            os << '^' << j - i;
        i = j;
    }
    for (int i : omega) {
        sep();
        os << "w" << i;
    }
    if (first)
        os << '1';
    return os.str();
}

/****************************************************
 *                FormalElement
 ***************************************************/

FormalElement FormalElement::constant(const Rational& c)
{
    return monomial(Monomial{}, c);
}

FormalElement FormalElement::s(int i)
{
    if (i < 1)
        throw Error(ErrorCode::BadArguments, "s_i needs i >= 1");
    return monomial(Monomial{false, {i}, {}});
}

FormalElement FormalElement::omega(int i)
{
    if (i < 1)
        throw Error(ErrorCode::BadArguments, "w_i needs i >= 1");
    return monomial(Monomial{false, {}, {i}});
}

FormalElement FormalElement::eta()
{
    return monomial(Monomial{true, {}, {}});
}

FormalElement FormalElement::monomial(Monomial m, const Rational& c)
{
    std::sort(m.s.begin(), m.s.end());
    const int sign = sort_odd_factors(m.omega);
    FormalElement x;
    if (sign != 0)
        x.add_term(m, c * sign);
    return x;
}

bool FormalElement::contains_eta() const
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.eta; });
}

FormalElement FormalElement::truncated(int max_degree, int k) const
{
    FormalElement x;
    for (const auto& [m, c] : terms_)
        if (m.degree(k) <= max_degree)
            x.terms_.emplace(m, c);
    return x;
}

Rational FormalElement::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FormalElement::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FormalElement& FormalElement::operator+=(const FormalElement& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

FormalElement& FormalElement::operator-=(const FormalElement& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

FormalElement& FormalElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_)
        term.second *= c;
    return *this;
}

FormalElement operator*(const FormalElement& a, const FormalElement& b)
{
    FormalElement result;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.eta && mb.eta)
                continue;
            // eta from the right factor moves left past the odd w's of the left factor
            int sign = (mb.eta && ma.omega.size() % 2 == 1) ? -1 : 1;
            Monomial m;
            m.eta = ma.eta || mb.eta;
            m.s.reserve(ma.s.size() + mb.s.size());
            std::merge(ma.s.begin(), ma.s.end(), mb.s.begin(), mb.s.end(), std::back_inserter(m.s));
            m.omega = ma.omega;
            m.omega.insert(m.omega.end(), mb.omega.begin(), mb.omega.end());
            sign *= sort_odd_factors(m.omega);
            if (sign != 0)
                result.add_term(m, ca * cb * sign);
        }
    return result;
}

std::string FormalElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        const bool constant = !m.eta && m.s.empty() && m.omega.empty();
        if (constant)
            os << mag.get_str();
        else if (mag == 1)
            os << m.to_string();
        else
            os << mag.get_str() << '*' << m.to_string();
        first = false;
    }
    return os.str();
}

/****************************************************
 *                 Differential
 ***************************************************/

Rational lambda_coeff(int n, int k)
{
    if (k < 1 || n < k)
        throw Error(ErrorCode::BadArguments, "lambda(n,k) needs n >= k >= 1");
    Rational value(falling_factorial(n, k));
    return (k % 2 == 1) ? value : Rational(-value);
}

FormalElement differential(const FormalElement& x, const ChernContext& ctx)
{
    const int k = ctx.k;
    FormalElement result;
    for (const auto& [m, c] : x.terms()) {
        // every term of d(m) carries a new eta, and eta^2 = 0
        if (m.eta)
            continue;

        // d(s_i^mult) = mult * s_i^{mult-1} * lambda(i,k) eta s_{i-k}
        for (std::size_t pos = 0; pos < m.s.size();) {
            const int i = m.s[pos];
            std::size_t end = pos;
            while (end < m.s.size() && m.s[end] == i)
                ++end;
            const long mult = static_cast<long>(end - pos);
            if (i >= k) {
                Monomial t{true, m.s, m.omega};
                t.s.erase(t.s.begin() + static_cast<std::ptrdiff_t>(pos));
                Rational coeff = c * lambda_coeff(i, k) * mult;
                if (i == k)
                    coeff *= ctx.index;
                else
                    t.s.insert(std::upper_bound(t.s.begin(), t.s.end(), i - k), i - k);
                if (coeff != 0)
                    result += FormalElement::monomial(std::move(t), coeff);
            }
            pos = end;
        }

        // the Koszul sign past the preceding w's cancels the sign of moving eta to the front
        for (std::size_t pos = 0; pos < m.omega.size(); ++pos) {
            const int i = m.omega[pos];
            if (i <= k)
                continue;  // w_{i-k} vanishes for i-k <= 0
            Monomial t{true, m.s, m.omega};
            t.omega[pos] = i - k;
            result += FormalElement::monomial(std::move(t), c * lambda_coeff(i, k));
        }
    }
    return result.truncated(ctx.N, k);
}

namespace {

/* All monomials of degree <= max_degree (eta, s_i, w_i). */
std::vector<Monomial> monomials_up_to(int max_degree, int k)
{
    std::vector<Monomial> out;
    Monomial cur;
    const int max_s = max_degree / 2;
    const int max_w = (max_degree + 1) / 2;

    std::function<void(int, int)> add_omegas = [&](int from, int budget) {
        out.push_back(cur);
        for (int i = from; i <= max_w && 2 * i - 1 <= budget; ++i) {
            cur.omega.push_back(i);
            add_omegas(i + 1, budget - (2 * i - 1));
            cur.omega.pop_back();
        }
    };
    std::function<void(int, int)> add_s = [&](int from, int budget) {
        add_omegas(1, budget);
        for (int i = from; i <= max_s && 2 * i <= budget; ++i) {
            cur.s.push_back(i);
            add_s(i, budget - 2 * i);
            cur.s.pop_back();
        }
    };

    cur.eta = false;
    add_s(1, max_degree);
    if (2 * k + 1 <= max_degree) {
        cur.eta = true;
        add_s(1, max_degree - (2 * k + 1));
    }
    return out;
}

}  // namespace

bool d_squared_check(const ChernContext& ctx)
{
    // room for both applications of d, so nothing is lost to truncation
    const ChernContext wide{ctx.k, ctx.N + 2, ctx.index};
    for (const Monomial& m : monomials_up_to(ctx.N, ctx.k)) {
        const FormalElement x = FormalElement::monomial(m);
        if (!differential(differential(x, wide), wide).is_zero())
            return false;
    }
    return true;
}

FormalElement chern_even(const ChernContext& ctx)
{
    FormalElement ch;
    for (int n = 1; 2 * n <= ctx.N; ++n)
        ch += FormalElement::s(n) * (Rational(1) / factorial(n));
    return ch;
}

int twisted_closure_sign(const ChernContext& ctx)
{
    if (ctx.k < 1 || ctx.N < 2 * ctx.k + 2) {
        std::ostringstream os;
        os << "truncation N = " << ctx.N << " is below 2k+2 = " << 2 * ctx.k + 2;
        throw Error(ErrorCode::BadTruncation, os.str());
    }
    const FormalElement ch = chern_even(ctx);
    const FormalElement d_ch = differential(ch, ctx);
    const FormalElement eta_ch = (FormalElement::eta() * ch).truncated(ctx.N, ctx.k);
    if (eta_ch.is_zero()) {
        std::ostringstream os;
        os << "truncation N = " << ctx.N << " drops eta*s_1 (degree " << 2 * ctx.k + 3
           << "), so the closure sign is undetermined";
        throw Error(ErrorCode::BadTruncation, os.str());
    }
    for (int eps : {1, -1})
        if ((d_ch - eta_ch * Rational(eps)).is_zero())
            return eps;
    throw Error(ErrorCode::NoClosingSign, "neither d - eta nor d + eta annihilates the even Chern series");
}

FormalElement chern_odd(std::span<const Rational> coefficients)
{
    FormalElement ch;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        ch += FormalElement::omega(static_cast<int>(i) + 1) * coefficients[i];
    return ch;
}

OddSeriesSolution odd_series_coefficients(const ChernContext& ctx, int eps, std::span<const Rational> seeds)
{
    const int k = ctx.k;
    if (k < 1 || ctx.N < 2 * k + 2) {
        std::ostringstream os;
        os << "truncation N = " << ctx.N << " is below 2k+2 = " << 2 * k + 2;
        throw Error(ErrorCode::BadTruncation, os.str());
    }
    if (eps != 1 && eps != -1)
        throw Error(ErrorCode::BadArguments, "odd series: eps must be +1 or -1");
    if (seeds.size() != static_cast<std::size_t>(k))
        throw Error(ErrorCode::BadArguments, "odd series: expected exactly k seed coefficients");

    const int count = (ctx.N + 1) / 2;
    OddSeriesSolution sol;
    sol.coefficients.assign(seeds.begin(), seeds.end());
    sol.coefficients.resize(static_cast<std::size_t>(count));
    // a_{m+k} lambda(m+k,k) = eps a_m
    for (int m = 1; m + k <= count; ++m)
        sol.coefficients[m + k - 1] = Rational(eps) * sol.coefficients[m - 1] / lambda_coeff(m + k, k);

    sol.published_coefficients.resize(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        Rational lam(falling_factorial(n, k));
        if (k % 2 == 0)
            lam = -lam;
        sol.published_coefficients[n - 1] = lam / factorial(n);
    }
    for (int m = 1; m + k <= count; ++m) {
        const Rational lhs = sol.published_coefficients[m + k - 1] * lambda_coeff(m + k, k);
        if (lhs != Rational(eps) * sol.published_coefficients[m - 1]) {
            sol.published_first_failure = m;
            break;
        }
    }

    auto closes = [&](std::span<const Rational> a) {
        const FormalElement ch = chern_odd(a);
        const FormalElement lhs = differential(ch, ctx) - (FormalElement::eta() * ch).truncated(ctx.N, k) * Rational(eps);
        return lhs.is_zero();
    };
    sol.closes = closes(sol.coefficients);
    sol.published_closes = closes(sol.published_coefficients);
    return sol;
}

/****************************************************
 *              Symmetric functions
 ***************************************************/

std::vector<Rational> newton_c_to_s(std::span<const Rational> c)
{
    return newton_c_to_s<Rational>(c, c.size());
}

std::vector<Rational> newton_s_to_c(std::span<const Rational> s)
{
    // n c_n = sum_{i=1}^n (-1)^{i-1} c_{n-i} s_i,  c_0 = 1
    std::vector<Rational> c(s.size() + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= s.size(); ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            Rational term = c[n - i] * s[i - 1];
            if (i % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        c[n] = acc / static_cast<long>(n);
    }
    c.erase(c.begin());
    return c;
}

std::vector<TensorTerm> tensor_power_sum_terms(int n)
{
    if (n < 0)
        throw Error(ErrorCode::BadArguments, "tensor power sums need n >= 0");
    std::vector<TensorTerm> terms;
    Integer binom = 1;
    for (int i = 0; i <= n; ++i) {
        terms.push_back({binom, n - i, i});
        binom = binom * (n - i) / (i + 1);
    }
    return terms;
}

Rational special_tensor_coefficient(int k, int n)
{
    if (k < 1 || n < k)
        throw Error(ErrorCode::BadArguments, "special tensor coefficient needs n >= k >= 1");

    // E~: c_k = v, lower classes vanish, v^2 = 0
    std::vector<DualNumber> c(static_cast<std::size_t>(k), DualNumber(0));
    c.back() = DualNumber(0, 1);
    std::vector<DualNumber> s_tilde{DualNumber(1)};  // rank one
    const auto higher = newton_c_to_s<DualNumber>(c, static_cast<std::size_t>(n));
    s_tilde.insert(s_tilde.end(), higher.begin(), higher.end());

    // coefficient of s_j(F) in s_n(E~ (x) F)
    std::vector<DualNumber> coeff(static_cast<std::size_t>(n) + 1, DualNumber(0));
    for (const TensorTerm& t : tensor_power_sum_terms(n))
        coeff[t.f_index] += DualNumber(Rational(t.binomial)) * s_tilde[t.e_index];

    for (int j = 0; j <= n; ++j) {
        const DualNumber& cj = coeff[j];
        const bool ok = (j == n) ? cj == DualNumber(1) : (j == n - k ? cj.real == 0 : cj == DualNumber(0));
        if (!ok)
            throw Error(ErrorCode::BadArguments, "special tensor expansion has an unexpected term");
    }
    return coeff[n - k].dual;
}

/****************************************************
 *                  Clutching
 ***************************************************/

namespace {

/* eta * y  ->  y */
FormalElement strip_eta(const FormalElement& x)
{
    FormalElement y;
    for (const auto& [m, c] : x.terms()) {
        Monomial t = m;
        t.eta = false;
        y += FormalElement::monomial(std::move(t), c);
    }
    return y;
}

}  // namespace

ClutchingImage clutching_pullback(const FormalElement& x, const ChernContext& ctx)
{
    if (x.contains_eta())
        throw Error(ErrorCode::ContainsEta, "clutching pullback: element must not involve eta");
    return {x, strip_eta(differential(x, ctx))};
}

ClutchingImage clutching_pullback(const ClutchingImage& x, const ChernContext& ctx)
{
    // psi*(w (x) b) = w (x) b + w^2 (x) db = w (x) b
    ClutchingImage image = clutching_pullback(x.fibre, ctx);
    if (x.w_part.contains_eta())
        throw Error(ErrorCode::ContainsEta, "clutching pullback: element must not involve eta");
    image.w_part += x.w_part;
    return image;
}

}  // namespace sphtd
