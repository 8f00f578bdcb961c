#pragma once

#include "schurlab/numeric.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/ssyt.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace schurlab {

// Independent cross-check for expand_eproduct. The e-product is expanded by
// brute force into monomials in m variables, then Schur polynomials (built by
// SSYT enumeration, not by the Pieri rule) are peeled off greedily along the
// canonical partition order. Requires m >= degree so that distinct symmetric
// functions stay distinct as polynomials.
namespace oracle_detail {

using monomial_map = std::map<std::vector<int>, Int>;

inline monomial_map one(long m)
{
    return {{std::vector<int>(static_cast<std::size_t>(m), 0), Int(1)}};
}

inline monomial_map elementary(long k, long m)
{
    monomial_map out;
    if (k < 0)
        return out;
    if (k == 0)
        return one(m);
    if (k > m)
        return out;
    std::vector<int> expo(static_cast<std::size_t>(m), 0);
    std::function<void(long, long)> rec = [&](long pos, long left) {
        if (left == 0) {
            out.emplace(expo, Int(1));
            return;
        }
        if (pos + left > m)
            return;
        expo[static_cast<std::size_t>(pos)] = 1;
        rec(pos + 1, left - 1);
        expo[static_cast<std::size_t>(pos)] = 0;
        rec(pos + 1, left);
    };
    rec(0, k);
    return out;
}

inline monomial_map mul(const monomial_map& a, const monomial_map& b)
{
    monomial_map out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    return out;
}

inline monomial_map schur_monomials(const partition& lam, long m)
{
    monomial_map out;
    for_each_ssyt(lam, m, [&](const std::vector<int>& content) {
        auto [it, inserted] = out.emplace(content, Int(1));
        if (!inserted)
            it->second += 1;
    });
    return out;
}

inline partition exponent_partition(const std::vector<int>& expo)
{
    return partition(std::vector<int>(expo));
}

} // namespace oracle_detail

inline schur_expansion monomial_oracle_expand(const eproduct& p, long m)
{
    using namespace oracle_detail;
    if (p.is_zero())
        return {};
    if (m < p.degree())
        throw std::invalid_argument("monomial_oracle_expand: need m >= degree");
    if (m == 0)
        return schur_expansion::single(partition{});

    monomial_map poly = one(m);
    for (int k : p.indices())
        poly = mul(poly, elementary(k, m));

    schur_expansion out;
    partition prev_lead;
    bool have_prev = false;
    while (!poly.empty()) {
        // earliest sorted exponent vector in canonical order: within one
        // weight that is the lexicographically largest, which refines
        // dominance, so its monomial coefficient is exactly the Schur
        // coefficient
        partition lead = exponent_partition(poly.begin()->first);
        for (const auto& [expo, c] : poly) {
            partition cand = exponent_partition(expo);
            if (canonical_compare(cand, lead) < 0)
                lead = cand;
        }
        if (have_prev && canonical_compare(lead, prev_lead) <= 0)
            throw std::logic_error("monomial oracle: peeling failed to make progress");
        prev_lead = lead;
        have_prev = true;

        std::vector<int> lead_expo(lead.parts());
        lead_expo.resize(static_cast<std::size_t>(m), 0);
        auto it = poly.find(lead_expo);
        if (it == poly.end())
            throw std::logic_error("monomial oracle: leading monomial missing");
        const Int c = it->second;

        monomial_map s = schur_monomials(lead, m);
        for (const auto& [expo, sc] : s) {
            auto jt = poly.find(expo);
            Int nv = (jt == poly.end() ? Int(0) : jt->second) - c * sc;
            if (jt == poly.end()) {
                if (nv != 0)
                    poly.emplace(expo, std::move(nv));
            } else if (nv == 0) {
                poly.erase(jt);
            } else {
                jt->second = std::move(nv);
            }
        }
        out.add_term(lead, c);
    }
    return out;
}

} // namespace schurlab
