#pragma once

#include "schurlab/numeric.hpp"
#include "schurlab/qpoly.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schurlab {

// Triangular array a(n,k), 0 <= k <= n. Either backed by the built-in
// binomial-squared generator or by explicit rows. a(n,k) is 0 outside the
// triangle by convention.
class triangular_array {
public:
    static triangular_array binomial_squared()
    {
        triangular_array a;
        a.kind_ = kind::binomial_squared;
        return a;
    }

    static triangular_array identity()
    {
        triangular_array a;
        a.kind_ = kind::identity;
        return a;
    }

    static triangular_array from_rows(std::vector<std::vector<Int>> rows)
    {
        for (std::size_t n = 0; n < rows.size(); ++n)
            if (rows[n].size() != n + 1)
                throw std::invalid_argument("triangular_array: row " + std::to_string(n) +
                                            " must have " + std::to_string(n + 1) + " entries");
        triangular_array a;
        a.kind_ = kind::explicit_rows;
        a.rows_ = std::move(rows);
        return a;
    }

    // number of explicit rows, or -1 when generator-backed
    long rows_provided() const
    {
        return kind_ == kind::explicit_rows ? static_cast<long>(rows_.size()) : -1;
    }

    Int at(long n, long k) const
    {
        if (n < 0 || k < 0 || k > n)
            return 0;
        switch (kind_) {
        case kind::binomial_squared: {
            Int b = binomial(n, k);
            return b * b;
        }
        case kind::identity:
            return k == n ? 1 : 0;
        case kind::explicit_rows:
            if (static_cast<std::size_t>(n) >= rows_.size())
                throw std::out_of_range("triangular_array: row " + std::to_string(n) +
                                        " not provided");
            return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        }
        return 0;
    }

private:
    enum class kind { binomial_squared, identity, explicit_rows };
    kind kind_ = kind::binomial_squared;
    std::vector<std::vector<Int>> rows_;
};

// alpha(n,r,k) = a(n+1,k) a(n-1,r-k) + a(n+1,r-k) a(n-1,k) - 2 a(n,r-k) a(n,k)
inline Int alpha(const triangular_array& a, long n, long r, long k)
{
    return a.at(n + 1, k) * a.at(n - 1, r - k) + a.at(n + 1, r - k) * a.at(n - 1, k) -
           2 * a.at(n, r - k) * a.at(n, k);
}

// The sextic analysis of alpha for the binomial-squared array:
//   f1(x) = (n+1)^2 (n-x+1)^2 (n-x)^2
//   f2(x) = (n+1)^2 (n-(r-x)+1)^2 (n-(r-x))^2
//   f3(x) = n^2 (n-x+1)^2 (n-(r-x)+1)^2
//   f = f1 + f2 - 2 f3,  f'(x) = 2(2x-r) g(x),  g'(x) = 2(2x-r)(1+2n).
// All kept as exact integer-coefficient polynomials in x. Construction
// checks the stated factorization of f' against symbolic differentiation.
struct fg_polys {
    qpolynomial f1, f2, f3, f, g, f_prime, g_prime;
};

inline fg_polys make_fg(long n, long r)
{
    if (n < 1 || r < 0 || r > 2 * n)
        throw std::invalid_argument("make_fg: need n >= 1, 0 <= r <= 2n");
    auto linear = [](long c0, long c1) { return qpolynomial{c0, c1}; };
    auto sq = [](const qpolynomial& p) { return p * p; };
    const Int n1 = Int(n + 1) * Int(n + 1);
    const Int nn = Int(n) * Int(n);

    fg_polys out;
    out.f1 = n1 * (sq(linear(n + 1, -1)) * sq(linear(n, -1)));
    out.f2 = n1 * (sq(linear(n - r + 1, 1)) * sq(linear(n - r, 1)));
    out.f3 = nn * (sq(linear(n + 1, -1)) * sq(linear(n - r + 1, 1)));
    out.f = out.f1 + out.f2 - Int(2) * out.f3;

    // g written out coefficient by coefficient
    const Int g2 = Int(4) * n + 2;
    const Int g1 = Int(-4) * n * r - Int(2) * r;
    Int g0 = Int(8) * n * n * n * n + Int(22) * n * n * n + Int(21) * n * n + Int(8) * n + 1;
    g0 += Int(2) * n * n * r * r - Int(8) * n * n * n * r - Int(17) * n * n * r;
    g0 += Int(4) * n * r * r - Int(12) * n * r + Int(2) * r * r - Int(3) * r;
    out.g = qpolynomial(std::vector<Int>{g0, g1, g2});

    out.f_prime = derivative(out.f);
    out.g_prime = derivative(out.g);
    const qpolynomial two_2x_minus_r{-2 * r, 4};
    if (out.f_prime != two_2x_minus_r * out.g)
        throw std::logic_error("make_fg: f' does not factor as 2(2x-r) g");
    if (out.g_prime != qpolynomial{-2 * r * (1 + 2 * n), 4 * (1 + 2 * n)})
        throw std::logic_error("make_fg: g' mismatch");
    return out;
}

// Exact closed form of f(r/2): -r (2n(2n-r) + (2n-r) + 2n) (2+2n-r)^2 / 8
inline Rat f_half_r_closed_form(long n, long r)
{
    Rat num = Rat(-r) * Rat(2 * n * (2 * n - r) + (2 * n - r) + 2 * n) *
              Rat((2 + 2 * n - r)) * Rat((2 + 2 * n - r));
    return num / 8;
}

// alpha(n,r,k) n^2 (n-k+1)^2 (n-r+k+1)^2 = binomial(n,k)^2 binomial(n,r-k)^2 f(k)
inline bool alpha_factorization_check(long n, long r, long k)
{
    if (!(n >= 1 && 0 <= r && r <= 2 * n && r - n - 1 < k && k <= r / 2 && k <= n && r - k <= n))
        throw std::invalid_argument("alpha_factorization_check: indices out of range");
    const triangular_array a = triangular_array::binomial_squared();
    const Int lhs = alpha(a, n, r, k) * Int(n) * Int(n) * Int(n - k + 1) * Int(n - k + 1) *
                    Int(n - r + k + 1) * Int(n - r + k + 1);
    const fg_polys fg = make_fg(n, r);
    const Int bk = binomial(n, k);
    const Int brk = binomial(n, r - k);
    const Int rhs = bk * bk * brk * brk * fg.f.eval(Int(k));
    return lhs == rhs;
}

// Largest split point k' in {-1, .., floor(r/2)} with alpha >= 0 up to k' and
// alpha <= 0 beyond it; nullopt when no single sign change exists.
inline std::optional<long> sign_change_index(const triangular_array& a, long n, long r)
{
    const long kmax = r / 2;
    std::vector<Int> vals;
    for (long k = 0; k <= kmax; ++k)
        vals.push_back(alpha(a, n, r, k));
    for (long kp = kmax; kp >= -1; --kp) {
        bool ok = true;
        for (long k = 0; k <= kmax && ok; ++k) {
            if (k <= kp)
                ok = vals[static_cast<std::size_t>(k)] >= 0;
            else
                ok = vals[static_cast<std::size_t>(k)] <= 0;
        }
        if (ok)
            return kp;
    }
    return std::nullopt;
}

// y_n = sum_k a(n,k) x_k for n = 0..n_max
inline std::vector<Rat> apply_transform(const triangular_array& a, const std::vector<Rat>& x,
                                        long n_max)
{
    if (static_cast<long>(x.size()) < n_max + 1)
        throw std::invalid_argument("apply_transform: sequence shorter than n_max");
    std::vector<Rat> y;
    for (long n = 0; n <= n_max; ++n) {
        Rat acc = 0;
        for (long k = 0; k <= n; ++k)
            acc += Rat(a.at(n, k)) * x[static_cast<std::size_t>(k)];
        y.push_back(acc);
    }
    return y;
}

struct log_convexity_result {
    bool ok = true;
    long first_violation = -1; // index k with x_{k-1} x_{k+1} < x_k^2, or a negative value
};

// x_{k-1} x_{k+1} >= x_k^2 for 1 <= k <= n_max - 1; values must be nonnegative.
inline log_convexity_result is_log_convex(const std::vector<Rat>& x, long n_max)
{
    if (static_cast<long>(x.size()) < n_max + 1)
        throw std::invalid_argument("is_log_convex: sequence shorter than n_max");
    for (long k = 0; k <= n_max; ++k)
        if (x[static_cast<std::size_t>(k)] < 0)
            return {false, k};
    for (long k = 1; k <= n_max - 1; ++k)
        if (x[static_cast<std::size_t>(k - 1)] * x[static_cast<std::size_t>(k + 1)] <
            x[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)])
            return {false, k};
    return {};
}

struct preservation_report {
    std::string sequence;
    bool input_log_convex = false;
    bool output_log_convex = false;
    long violation_index = -1;
    bool passed() const { return input_log_convex && output_log_convex; }
};

// For each corpus sequence (log-convex on 0..n_max by precondition), check
// that the transformed sequence stays log-convex on 0..n_max-1.
inline std::vector<preservation_report>
preservation_suite(const triangular_array& a,
                   const std::vector<std::pair<std::string, std::vector<Rat>>>& corpus,
                   long n_max)
{
    std::vector<preservation_report> out;
    for (const auto& [name, x] : corpus) {
        preservation_report rep;
        rep.sequence = name;
        const auto in_check = is_log_convex(x, n_max);
        rep.input_log_convex = in_check.ok;
        if (!in_check.ok) {
            rep.violation_index = in_check.first_violation;
            out.push_back(std::move(rep));
            continue;
        }
        const auto y = apply_transform(a, x, n_max);
        const auto out_check = is_log_convex(y, n_max - 1);
        rep.output_log_convex = out_check.ok;
        rep.violation_index = out_check.ok ? -1 : out_check.first_violation;
        out.push_back(std::move(rep));
    }
    return out;
}

// The five standard corpus sequences: 1, 2^k, k!, binomial(2k,k), and the
// central Delannoy numbers.
inline std::vector<std::pair<std::string, std::vector<Rat>>> builtin_corpus(long n_max)
{
    std::vector<std::pair<std::string, std::vector<Rat>>> corpus;
    std::vector<Rat> ones, pow2, fact, central, delannoy;
    for (long k = 0; k <= n_max; ++k) {
        ones.emplace_back(1);
        pow2.emplace_back(pow_int(Int(2), static_cast<unsigned long>(k)));
        fact.emplace_back(factorial(k));
        central.emplace_back(binomial(2 * k, k));
        Int d = 0;
        for (long j = 0; j <= k; ++j) {
            Int b = binomial(k, j);
            d += b * b * pow_int(Int(2), static_cast<unsigned long>(j));
        }
        delannoy.emplace_back(d);
    }
    corpus.emplace_back("ones", std::move(ones));
    corpus.emplace_back("powers-of-2", std::move(pow2));
    corpus.emplace_back("factorial", std::move(fact));
    corpus.emplace_back("central-binomial", std::move(central));
    corpus.emplace_back("central-delannoy", std::move(delannoy));
    return corpus;
}

} // namespace schurlab
