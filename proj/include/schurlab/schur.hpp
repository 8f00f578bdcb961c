#pragma once

#include "schurlab/numeric.hpp"
#include "schurlab/partition.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace schurlab {

// Element of the ring of symmetric functions in the Schur basis: a finite map
// from partition to integer coefficient. Zero coefficients are never stored,
// so equality is plain map equality. Values are immutable in spirit: every
// operation returns a fresh expansion.
class schur_expansion {
public:
    using term_map = std::map<partition, Int, canonical_less>;

    schur_expansion() = default;

    static schur_expansion single(partition lam, Int c = 1)
    {
        schur_expansion e;
        e.add_term(std::move(lam), std::move(c));
        return e;
    }

    void add_term(const partition& lam, const Int& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(lam, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const term_map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coeff(const partition& lam) const
    {
        auto it = terms_.find(lam);
        return it == terms_.end() ? Int(0) : it->second;
    }

    std::set<long> weights() const
    {
        std::set<long> w;
        for (const auto& [lam, c] : terms_)
            w.insert(lam.weight());
        return w;
    }

    friend bool operator==(const schur_expansion& a, const schur_expansion& b)
    {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const schur_expansion& a, const schur_expansion& b)
    {
        return !(a == b);
    }

    schur_expansion& operator+=(const schur_expansion& o)
    {
        for (const auto& [lam, c] : o.terms_)
            add_term(lam, c);
        return *this;
    }
    schur_expansion& operator-=(const schur_expansion& o)
    {
        for (const auto& [lam, c] : o.terms_)
            add_term(lam, -c);
        return *this;
    }

    friend schur_expansion operator+(schur_expansion a, const schur_expansion& b)
    {
        a += b;
        return a;
    }
    friend schur_expansion operator-(schur_expansion a, const schur_expansion& b)
    {
        a -= b;
        return a;
    }
    friend schur_expansion operator-(const schur_expansion& a)
    {
        return scale(-1, a);
    }

    static schur_expansion scale(const Int& c, const schur_expansion& a)
    {
        schur_expansion out;
        if (c == 0)
            return out;
        for (const auto& [lam, v] : a.terms_)
            out.terms_.emplace(lam, c * v);
        return out;
    }

private:
    term_map terms_;
};

inline bool is_schur_positive(const schur_expansion& a)
{
    for (const auto& [lam, c] : a.terms())
        if (c <= 0)
            return false;
    return true;
}

// All partitions obtained from mu by adding a vertical strip of exactly k
// squares (at most one square per row, plus any number of new length-1 rows).
inline std::vector<partition> vertical_strip_additions(const partition& mu, long k)
{
    std::vector<partition> out;
    if (k < 0)
        return out;
    // runs of equal parts: within a run only a prefix may be incremented
    std::vector<std::pair<int, int>> runs; // value, length
    for (int v : mu.parts()) {
        if (!runs.empty() && runs.back().first == v)
            ++runs.back().second;
        else
            runs.emplace_back(v, 1);
    }
    std::vector<int> chosen(runs.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long left) {
        if (idx == runs.size()) {
            std::vector<int> parts;
            for (std::size_t i = 0; i < runs.size(); ++i) {
                parts.insert(parts.end(), static_cast<std::size_t>(chosen[i]),
                             runs[i].first + 1);
                parts.insert(parts.end(),
                             static_cast<std::size_t>(runs[i].second - chosen[i]),
                             runs[i].first);
            }
            parts.insert(parts.end(), static_cast<std::size_t>(left), 1);
            out.push_back(partition(std::move(parts)));
            return;
        }
        const long cap = std::min<long>(runs[idx].second, left);
        for (long p = 0; p <= cap; ++p) {
            chosen[idx] = static_cast<int>(p);
            rec(idx + 1, left - p);
        }
    };
    rec(0, k);
    return out;
}

// Dual Pieri rule: multiply by e_k, replacing each s_mu with the sum of s_lam
// over vertical-strip additions of size k. e_0 is the identity, e_k = 0 for
// k < 0.
inline schur_expansion pieri_mul_e(const schur_expansion& a, long k)
{
    if (k < 0)
        return {};
    if (k == 0)
        return a;
    schur_expansion out;
    for (const auto& [mu, c] : a.terms())
        for (const auto& lam : vertical_strip_additions(mu, k))
            out.add_term(lam, c);
    return out;
}

// Product of elementary symmetric functions, kept as the multiset of indices.
// Any negative index collapses the whole product to zero; e_0 factors are
// dropped on construction.
class eproduct {
public:
    eproduct() = default; // the empty product, i.e. the ring identity

    explicit eproduct(const std::vector<long>& indices)
    {
        for (long i : indices) {
            if (i < 0) {
                zero_ = true;
                indices_.clear();
                return;
            }
            if (i > 0)
                indices_.push_back(static_cast<int>(i));
        }
        std::sort(indices_.rbegin(), indices_.rend());
    }

    static eproduct zero()
    {
        eproduct p;
        p.zero_ = true;
        return p;
    }

    bool is_zero() const { return zero_; }
    const std::vector<int>& indices() const { return indices_; }
    long degree() const
    {
        return zero_ ? 0 : std::accumulate(indices_.begin(), indices_.end(), 0l);
    }

    friend bool operator==(const eproduct& a, const eproduct& b)
    {
        return a.zero_ == b.zero_ && a.indices_ == b.indices_;
    }

private:
    std::vector<int> indices_; // descending, all >= 1
    bool zero_ = false;
};

// Fold the Pieri rule over the indices, largest first, starting from s_{}.
inline schur_expansion expand_eproduct(const eproduct& p)
{
    if (p.is_zero())
        return {};
    schur_expansion acc = schur_expansion::single(partition{});
    for (int k : p.indices())
        acc = pieri_mul_e(acc, k);
    return acc;
}

// Operator sending s_lam to s_{lam union mu} termwise. The union map is
// injective for fixed mu, so coefficients carry over unchanged.
inline schur_expansion delta(const schur_expansion& a, const partition& mu)
{
    schur_expansion out;
    for (const auto& [lam, c] : a.terms())
        out.add_term(union_parts(lam, mu), c);
    return out;
}

struct signed_eproduct {
    int sign = 1;
    eproduct term;
};

// Dual Jacobi-Trudi determinant det(e_{lam'_i - i + j}), i,j = 1..lam_1,
// expanded over permutations into signed e-monomials. Terms containing an
// e index below zero vanish and are omitted. The signed expansion sums to
// s_lam exactly.
inline std::vector<signed_eproduct> jacobi_trudi_e(const partition& lam)
{
    const long n = lam.empty() ? 0 : lam.parts()[0];
    std::vector<signed_eproduct> out;
    if (n == 0) {
        out.push_back({1, eproduct{}});
        return out;
    }
    const partition lamc = conjugate(lam);
    std::vector<long> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0l);
    do {
        std::vector<long> idx;
        bool vanishes = false;
        for (long i = 0; i < n; ++i) {
            const long e = lamc.part(i) - (i + 1) + (perm[static_cast<std::size_t>(i)] + 1);
            if (e < 0) {
                vanishes = true;
                break;
            }
            idx.push_back(e);
        }
        if (vanishes)
            continue;
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        out.push_back({inversions % 2 == 0 ? 1 : -1, eproduct(idx)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline schur_expansion expand_jacobi_trudi(const partition& lam)
{
    schur_expansion acc;
    for (const auto& [sign, term] : jacobi_trudi_e(lam)) {
        if (sign > 0)
            acc += expand_eproduct(term);
        else
            acc -= expand_eproduct(term);
    }
    return acc;
}

inline std::string to_string(const eproduct& p)
{
    if (p.is_zero())
        return "0";
    if (p.indices().empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < p.indices().size(); ++i) {
        if (i)
            out += '*';
        out += 'e';
        out += std::to_string(p.indices()[i]);
    }
    return out;
}

// Text form: `c*s[parts]` terms joined by ` + ` / ` - ` in canonical key
// order, unit coefficients left implicit, `0` for the empty expansion.
inline std::string to_string(const schur_expansion& a)
{
    if (a.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : a.terms()) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += mag.get_str();
            out += '*';
        }
        out += 's';
        out += to_string(lam);
    }
    return out;
}

inline schur_expansion parse_expansion(std::string_view s)
{
    schur_expansion out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    skip_ws();
    if (i >= s.size())
        throw std::invalid_argument("expansion: empty input");
    if (s[i] == '0') {
        ++i;
        skip_ws();
        if (i != s.size())
            throw std::invalid_argument("expansion: trailing input after 0");
        return out;
    }
    bool negative = false;
    if (s[i] == '-') {
        negative = true;
        ++i;
    }
    for (;;) {
        skip_ws();
        Int coeff = 1;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i > start) {
            coeff = Int(std::string(s.substr(start, i - start)));
            if (i >= s.size() || s[i] != '*')
                throw std::invalid_argument("expansion: expected '*' after coefficient");
            ++i;
        }
        if (i >= s.size() || s[i] != 's')
            throw std::invalid_argument("expansion: expected 's'");
        ++i;
        std::size_t close = s.find(']', i);
        if (i >= s.size() || s[i] != '[' || close == std::string_view::npos)
            throw std::invalid_argument("expansion: expected '[parts]'");
        partition lam = parse_partition(s.substr(i, close - i + 1));
        i = close + 1;
        out.add_term(lam, negative ? Int(-coeff) : coeff);
        skip_ws();
        if (i == s.size())
            break;
        if (s[i] == '+')
            negative = false;
        else if (s[i] == '-')
            negative = true;
        else
            throw std::invalid_argument("expansion: expected '+' or '-'");
        ++i;
    }
    return out;
}

} // namespace schurlab
