#pragma once

#include "schurlab/families.hpp"
#include "schurlab/identity.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace schurlab {

// Exact instance checks for the lemma chain behind the main identity.
// Every check compares two full Schur expansions and keeps the difference
// for the report, so a failure pinpoints the offending terms.

namespace lemmas_detail {

inline std::string t_param(long t) { return "t=" + std::to_string(t); }

inline schur_expansion fam(family_id id, long t) { return family_sum(id, t); }

} // namespace lemmas_detail

// Parity split of L: the odd and even closed forms.
inline std::array<lemma_report, 2> check_lemma_3_2(long t)
{
    using namespace lemmas_detail;
    schur_expansion odd_rhs =
        fam(family_id::A1, t) + fam(family_id::A2, t) - fam(family_id::A3, t) - fam(family_id::A4, t);
    schur_expansion even_rhs =
        fam(family_id::B1, t) + fam(family_id::B2, t) - fam(family_id::B3, t) - fam(family_id::B4, t);
    return {make_report("3.2-odd", t_param(t), lhs_L(2 * t + 1), std::move(odd_rhs)),
            make_report("3.2-even", t_param(t), lhs_L(2 * t), std::move(even_rhs))};
}

// Pointwise first-difference identities A_m - Delta^{(1,1)} B_m = T-pair.
// Returns nullopt when (k,i,j) is outside the stated range of the item.
inline std::optional<lemma_report> lemma_3_3_point(int item, long t, long k, long i, long j)
{
    struct ranges {
        long klo, khi, ilo;
        bool i_to_km1;
        long joff;
    };
    // item ranges: (i) k 0..t-1, i 0..k, j 0..2t-2k-1
    //              (ii) k 0..t-1, i 0..k, j 0..2t-2k-2
    //              (iii) k 1..t-1, i 0..k, j 0..2t-2k-1
    //              (iv) k 1..t,  i 0..k-1, j 0..2t-2k
    bool in_range = false;
    switch (item) {
    case 1: in_range = 0 <= k && k <= t - 1 && 0 <= i && i <= k && 0 <= j && j <= 2 * t - 2 * k - 1; break;
    case 2: in_range = 0 <= k && k <= t - 1 && 0 <= i && i <= k && 0 <= j && j <= 2 * t - 2 * k - 2; break;
    case 3: in_range = 1 <= k && k <= t - 1 && 0 <= i && i <= k && 0 <= j && j <= 2 * t - 2 * k - 1; break;
    case 4: in_range = 1 <= k && k <= t && 0 <= i && i <= k - 1 && 0 <= j && j <= 2 * t - 2 * k; break;
    default: throw std::invalid_argument("lemma_3_3_point: item must be 1..4");
    }
    if (!in_range)
        return std::nullopt;
    static const int pair_first[5] = {0, 1, 3, 5, 7};
    schur_expansion lhs =
        a_term(item, t, k, i, j) - delta(b_term(item, t, k, i, j), partition{1, 1});
    schur_expansion rhs = t_pair_term(pair_first[item], t, k, i, j) +
                          t_pair_term(pair_first[item] + 1, t, k, i, j);
    static const char* names[5] = {nullptr, "3.3(i)", "3.3(ii)", "3.3(iii)", "3.3(iv)"};
    std::string param = "t=" + std::to_string(t) + " k=" + std::to_string(k) +
                        " i=" + std::to_string(i) + " j=" + std::to_string(j);
    return make_report(names[item], std::move(param), std::move(lhs), std::move(rhs));
}

inline std::vector<lemma_report> check_lemma_3_3(long t)
{
    std::vector<lemma_report> out;
    for (int item = 1; item <= 4; ++item)
        for (long k = 0; k <= t; ++k)
            for (long i = 0; i <= k; ++i)
                for (long j = 0; j <= 2 * t - 2 * k + 1; ++j)
                    if (auto rep = lemma_3_3_point(item, t, k, i, j))
                        out.push_back(std::move(*rep));
    return out;
}

// First difference of L in ten parts.
inline lemma_report check_lemma_3_4(long t)
{
    using namespace lemmas_detail;
    schur_expansion lhs = lhs_L(2 * t + 1) - delta(lhs_L(2 * t), partition{1, 1});
    schur_expansion rhs = fam(family_id::T1, t) + fam(family_id::T2, t) +
                          fam(family_id::T3, t) + fam(family_id::T4, t) -
                          fam(family_id::T5, t) - fam(family_id::T6, t) -
                          fam(family_id::T7, t) - fam(family_id::T8, t) +
                          fam(family_id::T9, t) - fam(family_id::T10, t);
    return make_report("3.4", t_param(t), std::move(lhs), std::move(rhs));
}

// Second difference of each T_i splits into the two quadruple sums.
inline std::vector<lemma_report> check_lemma_3_5(long t)
{
    using namespace lemmas_detail;
    static const family_id small[8] = {family_id::T1, family_id::T2, family_id::T3,
                                       family_id::T4, family_id::T5, family_id::T6,
                                       family_id::T7, family_id::T8};
    static const family_id split1[8] = {family_id::T11, family_id::T21, family_id::T31,
                                        family_id::T41, family_id::T51, family_id::T61,
                                        family_id::T71, family_id::T81};
    static const family_id split2[8] = {family_id::T12, family_id::T22, family_id::T32,
                                        family_id::T42, family_id::T52, family_id::T62,
                                        family_id::T72, family_id::T82};
    std::vector<lemma_report> out;
    for (int i = 0; i < 8; ++i) {
        schur_expansion lhs = fam(small[i], t + 1) - delta(fam(small[i], t), partition{2, 2});
        schur_expansion rhs = fam(split1[i], t) + fam(split2[i], t);
        out.push_back(make_report("3.5-T" + std::to_string(i + 1), t_param(t),
                                  std::move(lhs), std::move(rhs)));
    }
    return out;
}

// Quadruple-to-triple reduction: T splits against N and M.
inline std::vector<lemma_report> check_lemma_3_6(long t)
{
    using namespace lemmas_detail;
    using fid = family_id;
    struct row {
        const char* name;
        fid a, b;
        int sn;     // +1 or -1 on the first rhs family
        fid c;
        bool has_d;
        fid d;
    };
    static const row rows[8] = {
        {"3.6:T41-T61", fid::T41, fid::T61, -1, fid::N1, false, fid::N1},
        {"3.6:T31-T71", fid::T31, fid::T71, +1, fid::N2, true, fid::N3},
        {"3.6:T11-T81", fid::T11, fid::T81, +1, fid::N4, true, fid::N5},
        {"3.6:T21-T51", fid::T21, fid::T51, +1, fid::N6, false, fid::N6},
        {"3.6:T32-T72", fid::T32, fid::T72, -1, fid::M1, false, fid::M1},
        {"3.6:T42-T62", fid::T42, fid::T62, +1, fid::M2, true, fid::M3},
        {"3.6:T12-T82", fid::T12, fid::T82, +1, fid::M4, true, fid::M5},
        {"3.6:T22-T52", fid::T22, fid::T52, +1, fid::M6, false, fid::M6},
    };
    std::vector<lemma_report> out;
    for (const auto& r : rows) {
        schur_expansion lhs = fam(r.a, t) - fam(r.b, t);
        schur_expansion rhs = r.sn > 0 ? fam(r.c, t) : -fam(r.c, t);
        if (r.has_d)
            rhs -= fam(r.d, t);
        out.push_back(make_report(r.name, t_param(t), std::move(lhs), std::move(rhs)));
    }
    return out;
}

// Triple-to-double reduction: N and M against C and D.
inline std::vector<lemma_report> check_lemma_3_7(long t)
{
    using namespace lemmas_detail;
    using fid = family_id;
    std::vector<lemma_report> out;
    auto push = [&](const char* name, schur_expansion lhs, schur_expansion rhs) {
        out.push_back(make_report(name, t_param(t), std::move(lhs), std::move(rhs)));
    };
    push("3.7:N2-N1", fam(fid::N2, t) - fam(fid::N1, t), fam(fid::C1, t) - fam(fid::C2, t));
    push("3.7:N4-N3", fam(fid::N4, t) - fam(fid::N3, t), fam(fid::C3, t));
    push("3.7:N6-N5", fam(fid::N6, t) - fam(fid::N5, t), fam(fid::C4, t) + fam(fid::C5, t));
    push("3.7:M2-M1", fam(fid::M2, t) - fam(fid::M1, t),
         fam(fid::D1, t) - fam(fid::D2, t) - fam(fid::D3, t) - fam(fid::D4, t));
    push("3.7:M4-M3", fam(fid::M4, t) - fam(fid::M3, t),
         fam(fid::D5, t) + fam(fid::D6, t) - fam(fid::D7, t));
    push("3.7:M6-M5", fam(fid::M6, t) - fam(fid::M5, t), fam(fid::D8, t) - fam(fid::D9, t));
    return out;
}

// Second differences of T9 and T10 in terms of the E families.
inline std::array<lemma_report, 2> check_lemma_3_8(long t)
{
    using namespace lemmas_detail;
    using fid = family_id;
    schur_expansion lhs9 = fam(fid::T9, t + 1) - delta(fam(fid::T9, t), partition{2, 2});
    schur_expansion rhs9 = fam(fid::E1, t) + fam(fid::E2, t) + fam(fid::E3, t);
    schur_expansion lhs10 = fam(fid::T10, t + 1) - delta(fam(fid::T10, t), partition{2, 2});
    schur_expansion rhs10 = fam(fid::E4, t) + fam(fid::E5, t) + fam(fid::E6, t) +
                            fam(fid::E7, t) + fam(fid::E8, t) + fam(fid::E9, t);
    return {make_report("3.8:T9", t_param(t), std::move(lhs9), std::move(rhs9)),
            make_report("3.8:T10", t_param(t), std::move(lhs10), std::move(rhs10))};
}

namespace lemmas_detail {

inline schur_expansion first_diff_odd(bool left, long t)
{
    auto F = left ? lhs_L : rhs_R;
    return F(2 * t + 1) - delta(F(2 * t), partition{1, 1});
}

inline schur_expansion first_diff_even(bool left, long t)
{
    auto F = left ? lhs_L : rhs_R;
    return F(2 * t + 2) - delta(F(2 * t + 1), partition{1, 1});
}

inline schur_expansion second_diff_odd(bool left, long t)
{
    return first_diff_odd(left, t + 1) - delta(first_diff_odd(left, t), partition{2, 2});
}

inline schur_expansion second_diff_even(bool left, long t)
{
    return first_diff_even(left, t + 1) - delta(first_diff_even(left, t), partition{2, 2});
}

inline schur_expansion sum_over_34(long n)
{
    schur_expansion acc;
    for (const auto& lam : partitions_34(n))
        acc.add_term(lam, 1);
    return acc;
}

} // namespace lemmas_detail

// Closed form of the second differences: sums over partitions with parts in
// {3,4}, of 4t+4 in the odd case and 4t+6 in the even case.
inline std::array<lemma_report, 4> check_lemma_3_9(long t)
{
    using namespace lemmas_detail;
    return {make_report("3.9:Lo2", t_param(t), second_diff_odd(true, t), sum_over_34(4 * t + 4)),
            make_report("3.9:Ro2", t_param(t), second_diff_odd(false, t), sum_over_34(4 * t + 4)),
            make_report("3.9:Le2", t_param(t), second_diff_even(true, t), sum_over_34(4 * t + 6)),
            make_report("3.9:Re2", t_param(t), second_diff_even(false, t), sum_over_34(4 * t + 6))};
}

// First differences of L and R agree.
inline std::array<lemma_report, 2> check_lemma_3_10(long t)
{
    using namespace lemmas_detail;
    return {make_report("3.10:odd", t_param(t), first_diff_odd(true, t), first_diff_odd(false, t)),
            make_report("3.10:even", t_param(t), first_diff_even(true, t), first_diff_even(false, t))};
}

} // namespace schurlab
