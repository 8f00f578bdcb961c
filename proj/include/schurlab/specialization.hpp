#pragma once

#include "schurlab/identity.hpp"
#include "schurlab/numeric.hpp"
#include "schurlab/qpoly.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/ssyt.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace schurlab {

// Principal specialization of e_k at n ones: binomial(n, k), zero outside
// 0 <= k <= n.
inline Int ps_e(long n, long k)
{
    return binomial(n, k);
}

// Principal specialization of s_lam at n ones: the number of SSYT of shape
// lam with entries in 1..n, counted by direct enumeration.
inline Int ps_schur(const partition& lam, long n)
{
    return count_ssyt(lam, n);
}

inline Int ps_expansion(const schur_expansion& a, long n)
{
    Int acc = 0;
    for (const auto& [lam, c] : a.terms())
        acc += c * ps_schur(lam, n);
    return acc;
}

// ps_n(e_k) = ps_{n-1}(e_k + e_{k-1}), the Pascal recurrence.
inline bool pascal_recurrence_check(long n, long k)
{
    return ps_e(n, k) == ps_e(n - 1, k) + ps_e(n - 1, k - 1);
}

// W_n(q) = sum_k binomial(n,k)^2 q^k
inline qpolynomial w_polynomial(long n)
{
    std::vector<Int> coeffs;
    for (long k = 0; k <= n; ++k) {
        Int b = binomial(n, k);
        coeffs.push_back(b * b);
    }
    return qpolynomial(std::move(coeffs));
}

// (central binomial, central Delannoy) = (W_n(1), W_n(2))
inline std::pair<Int, Int> central_values(long n)
{
    const qpolynomial w = w_polynomial(n);
    return {w.eval(Int(1)), w.eval(Int(2))};
}

// seq(n-1) * seq(n+1) - seq(n)^2, the n-th q-log-convexity defect.
inline qpolynomial qlc_defect(const std::function<qpolynomial(long)>& seq, long n)
{
    if (n < 1)
        throw std::invalid_argument("qlc_defect: n must be >= 1");
    return seq(n - 1) * seq(n + 1) - seq(n) * seq(n);
}

// Coefficient bridge between the defect of W and the main identity:
//   [q^r] (W_{n-1} W_{n+1} - W_n^2) = 2 ps_{n-1}(L(r))
inline bool coefficient_bridge(long n, long r)
{
    if (n < 1 || r < 1)
        throw std::invalid_argument("coefficient_bridge: need n >= 1, r >= 1");
    const qpolynomial defect = qlc_defect(w_polynomial, n);
    return defect.coeff(r) == 2 * ps_expansion(lhs_L(r), n - 1);
}

// The five index-shuffle identities used to reduce the defect coefficient to
// L(r); each side is expanded into the Schur basis and compared exactly. The
// fifth is a chain of three sums, both equalities are required.
inline std::array<bool, 5> shuffle_relations_check(long r)
{
    auto sum = [&](auto idx) {
        schur_expansion acc;
        for (long k = 0; k <= r; ++k) {
            auto v = idx(k);
            acc += expand_eproduct(eproduct(std::vector<long>(v.begin(), v.end())));
        }
        return acc;
    };
    using ix = std::array<long, 4>;
    std::array<bool, 5> out{};
    out[0] = sum([&](long k) { return ix{k, k, r - k - 2, r - k - 2}; }) ==
             sum([&](long k) { return ix{k - 1, k - 1, r - k - 1, r - k - 1}; });
    out[1] = sum([&](long k) { return ix{k - 1, k - 1, r - k, r - k}; }) ==
             sum([&](long k) { return ix{k, k, r - k - 1, r - k - 1}; });
    out[2] = sum([&](long k) { return ix{k, k, r - k, r - k - 1}; }) ==
             sum([&](long k) { return ix{r - k, r - k, k, k - 1}; });
    out[3] = sum([&](long k) { return ix{k, k, r - k, r - k - 2}; }) ==
             sum([&](long k) { return ix{r - k, r - k, k, k - 2}; });
    const schur_expansion lhs5 = sum([&](long k) { return ix{k - 1, k - 1, r - k, r - k - 1}; });
    out[4] = lhs5 == sum([&](long k) { return ix{r - k - 1, r - k - 1, k, k - 1}; }) &&
             lhs5 == sum([&](long k) { return ix{k, k, r - k - 1, r - k - 2}; });
    return out;
}

struct qlc_witness {
    long n = 0;
    long r = 0;
    Int coefficient;
};

// Scan the defects of sum_k binomial(n,k)^m q^k for a negative coefficient;
// first witness in (n, r) order, if any.
inline std::optional<qlc_witness> power_m_counterexample(long m, long n_max)
{
    if (m < 1)
        throw std::invalid_argument("power_m_counterexample: m must be >= 1");
    auto seq = [m](long n) {
        std::vector<Int> coeffs;
        for (long k = 0; k <= n; ++k)
            coeffs.push_back(pow_int(binomial(n, k), static_cast<unsigned long>(m)));
        return qpolynomial(std::move(coeffs));
    };
    for (long n = 1; n <= n_max; ++n) {
        const qpolynomial defect = qlc_defect(seq, n);
        for (long r = 0; r <= defect.degree(); ++r)
            if (defect.coeff(r) < 0)
                return qlc_witness{n, r, defect.coeff(r)};
    }
    return std::nullopt;
}

// Rank generating function of type-A noncrossing partitions:
//   N_n(q) = sum_{k=0}^{n-1} (1/n) binomial(n,k) binomial(n,k+1) q^k,
//each coefficient checked to be an exact integer.
inline qpolynomial narayana(long n)
{
    if (n < 1)
        throw std::invalid_argument("narayana: n must be >= 1");
    std::vector<Int> coeffs;
    for (long k = 0; k <= n - 1; ++k) {
        Int num = binomial(n, k) * binomial(n, k + 1);
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), Int(n).get_mpz_t());
        if (rem != 0)
            throw std::logic_error("narayana: non-integer coefficient");
        coeffs.push_back(std::move(q));
    }
    return qpolynomial(std::move(coeffs));
}

} // namespace schurlab
