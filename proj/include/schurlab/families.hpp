#pragma once

#include "schurlab/partition.hpp"
#include "schurlab/schur.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schurlab {

// The named Schur-term families feeding the lemma chain. Each one is a
// multi-indexed sum of shapes built from multiplicities of the parts
// 4,3,2,1 (sometimes multiplied by an e_k and expanded through the Pieri
// rule). Two conventions apply throughout:
//   - a shape whose multiplicity expression goes negative contributes 0,
//   - a sum whose upper bound is below its lower bound is empty.
enum class family_id {
    A1, A2, A3, A4,
    B1, B2, B3, B4,
    T1, T2, T3, T4, T5, T6, T7, T8, T9, T10,
    T11, T12, T21, T22, T31, T32, T41, T42,
    T51, T52, T61, T62, T71, T72, T81, T82,
    N1, N2, N3, N4, N5, N6,
    M1, M2, M3, M4, M5, M6,
    C1, C2, C3, C4, C5,
    D1, D2, D3, D4, D5, D6, D7, D8, D9,
    E1, E2, E3, E4, E5, E6, E7, E8, E9,
};

inline const std::vector<std::pair<family_id, const char*>>& family_table()
{
    static const std::vector<std::pair<family_id, const char*>> table = {
        {family_id::A1, "A1"},   {family_id::A2, "A2"},   {family_id::A3, "A3"},
        {family_id::A4, "A4"},   {family_id::B1, "B1"},   {family_id::B2, "B2"},
        {family_id::B3, "B3"},   {family_id::B4, "B4"},   {family_id::T1, "T1"},
        {family_id::T2, "T2"},   {family_id::T3, "T3"},   {family_id::T4, "T4"},
        {family_id::T5, "T5"},   {family_id::T6, "T6"},   {family_id::T7, "T7"},
        {family_id::T8, "T8"},   {family_id::T9, "T9"},   {family_id::T10, "T10"},
        {family_id::T11, "T11"}, {family_id::T12, "T12"}, {family_id::T21, "T21"},
        {family_id::T22, "T22"}, {family_id::T31, "T31"}, {family_id::T32, "T32"},
        {family_id::T41, "T41"}, {family_id::T42, "T42"}, {family_id::T51, "T51"},
        {family_id::T52, "T52"}, {family_id::T61, "T61"}, {family_id::T62, "T62"},
        {family_id::T71, "T71"}, {family_id::T72, "T72"}, {family_id::T81, "T81"},
        {family_id::T82, "T82"}, {family_id::N1, "N1"},   {family_id::N2, "N2"},
        {family_id::N3, "N3"},   {family_id::N4, "N4"},   {family_id::N5, "N5"},
        {family_id::N6, "N6"},   {family_id::M1, "M1"},   {family_id::M2, "M2"},
        {family_id::M3, "M3"},   {family_id::M4, "M4"},   {family_id::M5, "M5"},
        {family_id::M6, "M6"},   {family_id::C1, "C1"},   {family_id::C2, "C2"},
        {family_id::C3, "C3"},   {family_id::C4, "C4"},   {family_id::C5, "C5"},
        {family_id::D1, "D1"},   {family_id::D2, "D2"},   {family_id::D3, "D3"},
        {family_id::D4, "D4"},   {family_id::D5, "D5"},   {family_id::D6, "D6"},
        {family_id::D7, "D7"},   {family_id::D8, "D8"},   {family_id::D9, "D9"},
        {family_id::E1, "E1"},   {family_id::E2, "E2"},   {family_id::E3, "E3"},
        {family_id::E4, "E4"},   {family_id::E5, "E5"},   {family_id::E6, "E6"},
        {family_id::E7, "E7"},   {family_id::E8, "E8"},   {family_id::E9, "E9"},
    };
    return table;
}

inline const char* to_string(family_id id)
{
    for (const auto& [fid, name] : family_table())
        if (fid == id)
            return name;
    throw std::invalid_argument("unknown family id");
}

inline family_id parse_family_id(std::string_view name)
{
    for (const auto& [fid, fname] : family_table())
        if (name == fname)
            return fid;
    throw std::invalid_argument("unknown family: " + std::string(name));
}

namespace families_detail {

// s_(4^m4, 3^m3, 2^m2, 1^m1), dropped when any multiplicity is negative
inline void add_shape(schur_expansion& acc, long m4, long m3, long m2, long m1)
{
    auto lam = shape_from_multiplicities({m4, m3, m2, m1});
    if (lam)
        acc.add_term(*lam, 1);
}

// e_k * s_(3^m3, 2^m2, 1^m1) expanded via the Pieri rule
inline schur_expansion e_times_shape(long k, long m3, long m2, long m1)
{
    schur_expansion base;
    add_shape(base, 0, m3, m2, m1);
    return pieri_mul_e(base, k);
}

} // namespace families_detail

// Single A/B products (the building blocks of the parity split of L).
inline schur_expansion a_term(int m, long t, long k, long i, long j)
{
    using families_detail::e_times_shape;
    switch (m) {
    case 1:
    case 2:
        return e_times_shape(k, i, k - i + j, 4 * t - 3 * k - 2 * j - i);
    case 3:
        return e_times_shape(k - 1, i, k - i + j, 4 * t - 3 * k - 2 * j - i + 1);
    case 4:
        return e_times_shape(k, i, k - i + j - 1, 4 * t - 3 * k - 2 * j - i + 2);
    default:
        throw std::invalid_argument("a_term: m must be 1..4");
    }
}

inline schur_expansion b_term(int m, long t, long k, long i, long j)
{
    using families_detail::e_times_shape;
    switch (m) {
    case 1:
    case 2:
        return e_times_shape(k, i, k - i + j, 4 * t - 3 * k - 2 * j - i - 2);
    case 3:
        return e_times_shape(k - 1, i, k - i + j, 4 * t - 3 * k - 2 * j - i - 1);
    case 4:
        return e_times_shape(k, i, k - i + j - 1, 4 * t - 3 * k - 2 * j - i);
    default:
        throw std::invalid_argument("b_term: m must be 1..4");
    }
}

// Quadruple-sum values T_m(t,i,j,k), m = 1..8. All built from
//   P(t,k,i,j,a,b) = s_(4^a, 3^{i-a+b}, 2^{4t-2k-2i-j-b}, 1^{4k+i+2j-a-b-4t})
// with the bounds
//   beta1 = 4k+i+2j-4t,  beta2 = k-i+j,  beta3 = beta1 - a
// evaluated at the arguments of T_m; the P argument shifts are literal.
inline schur_expansion t_pair_term(int m, long t, long k, long i, long j)
{
    schur_expansion acc;
    const long b1 = 4 * k + i + 2 * j - 4 * t;
    const long b2 = k - i + j;
    auto P = [&](long kk, long ii, long jj, long a, long b) {
        families_detail::add_shape(acc, a, ii - a + b,
                                   4 * t - 2 * kk - 2 * ii - jj - b,
                                   4 * kk + ii + 2 * jj - a - b - 4 * t);
    };
    switch (m) {
    case 1:
    case 3:
        for (long a = 0; a <= b1 + 1; ++a)
            for (long b = 0; b <= std::min(b2, b1 - a + 1); ++b)
                P(k + 1, i, j - 1, a, b);
        break;
    case 2:
    case 4:
        for (long a = 0; a <= b1; ++a)
            for (long b = 0; b <= std::min(b2, b1 - a); ++b)
                P(k, i, j, a, b);
        break;
    case 5:
        for (long a = 0; a <= b1 - 1; ++a)
            for (long b = 0; b <= std::min(b2, b1 - a - 1); ++b)
                P(k, i, j, a, b);
        break;
    case 6:
        for (long a = 0; a <= b1 - 2; ++a)
            for (long b = 0; b <= std::min(b2, b1 - a - 2); ++b)
                P(k - 1, i, j + 1, a, b);
        break;
    case 7:
        for (long a = 0; a <= b1 - 1; ++a)
            for (long b = 0; b <= std::min(b2 - 1, b1 - a - 1); ++b)
                P(k, i, j, a, b);
        break;
    case 8:
        for (long a = 0; a <= b1 - 2; ++a)
            for (long b = 0; b <= std::min(b2 - 1, b1 - a - 2); ++b)
                P(k - 1, i, j + 1, a, b);
        break;
    default:
        throw std::invalid_argument("t_pair_term: m must be 1..8");
    }
    return acc;
}

namespace families_detail {

// Q_1 does not depend on i, Q_2 does not depend on b.
inline void add_q1(schur_expansion& acc, long t, long k, long j, long a, long b)
{
    add_shape(acc, a, k - a + b + 1, 4 * t - 4 * k - j - b - 1,
              5 * k + 2 * j - a - b - 4 * t + 3);
}

inline void add_q2(schur_expansion& acc, long t, long k, long i, long j, long a)
{
    add_shape(acc, a, k - a + j + 1, 4 * t - 3 * k - i - 2 * j,
              3 * k + 2 * i + j - a - 4 * t + 1);
}

inline schur_expansion family_A(int m, long t)
{
    schur_expansion acc;
    auto sum = [&](long klo, long khi, auto ihi, auto jhi) {
        for (long k = klo; k <= khi; ++k)
            for (long i = 0; i <= ihi(k); ++i)
                for (long j = 0; j <= jhi(k); ++j)
                    acc += a_term(m, t, k, i, j);
    };
    switch (m) {
    case 1: sum(0, t, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k; }); break;
    case 2: sum(0, t - 1, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k - 1; }); break;
    case 3: sum(1, t, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k; }); break;
    case 4: sum(1, t, [](long k) { return k - 1; }, [t](long k) { return 2 * t - 2 * k + 1; }); break;
    }
    return acc;
}

inline schur_expansion family_B(int m, long t)
{
    schur_expansion acc;
    auto sum = [&](long klo, long khi, auto ihi, auto jhi) {
        for (long k = klo; k <= khi; ++k)
            for (long i = 0; i <= ihi(k); ++i)
                for (long j = 0; j <= jhi(k); ++j)
                    acc += b_term(m, t, k, i, j);
    };
    switch (m) {
    case 1: sum(0, t - 1, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k - 1; }); break;
    case 2: sum(0, t - 1, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k - 2; }); break;
    case 3: sum(1, t - 1, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k - 1; }); break;
    case 4: sum(1, t, [](long k) { return k - 1; }, [t](long k) { return 2 * t - 2 * k; }); break;
    }
    return acc;
}

inline schur_expansion family_T_small(int m, long t)
{
    schur_expansion acc;
    auto sum = [&](long klo, long khi, auto ihi, auto jhi) {
        for (long k = klo; k <= khi; ++k)
            for (long i = 0; i <= ihi(k); ++i)
                for (long j = 0; j <= jhi(k); ++j)
                    acc += t_pair_term(m, t, k, i, j);
    };
    switch (m) {
    case 1:
    case 2:
        sum(0, t - 1, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k - 1; });
        break;
    case 3:
    case 4:
        sum(0, t - 1, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k - 2; });
        break;
    case 5:
    case 6:
        sum(1, t - 1, [](long k) { return k; }, [t](long k) { return 2 * t - 2 * k - 1; });
        break;
    case 7:
    case 8:
        sum(1, t, [](long k) { return k - 1; }, [t](long k) { return 2 * t - 2 * k; });
        break;
    }
    return acc;
}

inline schur_expansion family_T9(long t)
{
    schur_expansion acc;
    for (long k = 0; k <= t; ++k)
        acc += e_times_shape(k, k, 2 * t - 2 * k, 0);
    return acc;
}

inline schur_expansion family_T10(long t)
{
    schur_expansion acc;
    for (long k = 0; k <= t - 1; ++k)
        acc += e_times_shape(k, k + 1, 2 * t - 2 * k - 2, 1);
    return acc;
}

// The sixteen split families T_{m1}/T_{m2}. gamma1 = 5k+2j+2-4t,
// gamma2 = gamma1 - a, gamma3 = 3k+2i+j-4t, all at the local loop variables.
inline schur_expansion family_T_split(family_id id, long t)
{
    schur_expansion acc;
    auto g1 = [t](long k, long j) { return 5 * k + 2 * j + 2 - 4 * t; };
    auto g3 = [t](long k, long i, long j) { return 3 * k + 2 * i + j - 4 * t; };
    switch (id) {
    case family_id::T11:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 1; ++j)
                for (long a = 0; a <= g1(k, j); ++a)
                    for (long b = 0; b <= std::min(j, g1(k, j) - a); ++b)
                        add_q1(acc, t, k, j, a, b);
        break;
    case family_id::T21:
        // not the same sum as T11: this is the i=k+1 slice of the second
        // difference of T2, and only this version satisfies both reduction
        // identities (T2 split and T21 - T51 = N6)
        for (long k = 0; k <= t - 1; ++k)
            for (long j = -1; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = 0; a <= g1(k, j) + 1; ++a)
                    for (long b = 0; b <= std::min(j + 1, g1(k, j) - a + 1); ++b)
                        add_q1(acc, t, k, j, a, b);
        break;
    case family_id::T12:
        for (long k = 0; k <= t; ++k)
            for (long i = 0; i <= k; ++i)
                for (long j = 0; j <= 2 * t - 2 * k - 1; ++j)
                    for (long a = 0; a <= g3(k, i, j); ++a)
                        add_q2(acc, t, k, i, j, a);
        break;
    case family_id::T22:
        // overflow-b slice of the second difference of T2; agrees with T12
        // as a sum but is kept in its derived form
        for (long k = 0; k <= t - 1; ++k)
            for (long i = -1; i <= k - 1; ++i)
                for (long j = 0; j <= 2 * t - 2 * k - 1; ++j)
                    for (long a = 0; a <= g3(k, i, j) + 1; ++a)
                        add_q2(acc, t, k, i, j, a);
        break;
    case family_id::T31:
        for (long k = 0; k <= t; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = 0; a <= g1(k, j); ++a)
                    for (long b = 0; b <= std::min(j, g1(k, j) - a); ++b)
                        add_q1(acc, t, k, j, a, b);
        break;
    case family_id::T32:
        for (long k = 0; k <= t; ++k)
            for (long i = 0; i <= k; ++i)
                for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                    for (long a = 0; a <= g3(k, i, j); ++a)
                        add_q2(acc, t, k, i, j, a);
        break;
    case family_id::T41:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = -1; j <= 2 * t - 2 * k - 3; ++j)
                for (long a = 0; a <= g1(k, j) + 1; ++a)
                    for (long b = 0; b <= std::min(j + 1, g1(k, j) - a + 1); ++b)
                        add_q1(acc, t, k, j, a, b);
        break;
    case family_id::T42:
        for (long k = 0; k <= t - 1; ++k)
            for (long i = -1; i <= k - 1; ++i)
                for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                    for (long a = 0; a <= g3(k, i, j) + 1; ++a)
                        add_q2(acc, t, k, i, j, a);
        break;
    case family_id::T51:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = -1; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = 0; a <= g1(k, j); ++a)
                    for (long b = 0; b <= std::min(j + 1, g1(k, j) - a); ++b)
                        add_q1(acc, t, k, j, a, b);
        break;
    case family_id::T52:
        for (long k = 0; k <= t - 1; ++k)
            for (long i = -1; i <= k - 1; ++i)
                for (long j = 0; j <= 2 * t - 2 * k - 1; ++j)
                    for (long a = 0; a <= g3(k, i, j); ++a)
                        add_q2(acc, t, k, i, j, a);
        break;
    case family_id::T61:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = -2; j <= 2 * t - 2 * k - 3; ++j)
                for (long a = 0; a <= g1(k, j) + 1; ++a)
                    for (long b = 0; b <= std::min(j + 2, g1(k, j) - a + 1); ++b)
                        add_q1(acc, t, k, j, a, b);
        break;
    case family_id::T62:
        for (long k = -2; k <= t - 3; ++k)
            for (long i = 0; i <= k + 2; ++i)
                for (long j = 2; j <= 2 * t - 2 * k - 3; ++j)
                    for (long a = 0; a <= g3(k, i, j) + 1; ++a)
                        add_q2(acc, t, k, i, j, a);
        break;
    case family_id::T71:
        for (long k = 0; k <= t; ++k)
            for (long j = -2; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = 0; a <= g1(k, j) + 1; ++a)
                    for (long b = -1; b <= std::min(j + 1, g1(k, j) - a); ++b)
                        add_q1(acc, t, k, j, a, b);
        break;
    case family_id::T72:
        for (long k = 0; k <= t; ++k)
            for (long i = 0; i <= k - 1; ++i)
                for (long j = -1; j <= 2 * t - 2 * k - 1; ++j)
                    for (long a = 0; a <= g3(k, i, j); ++a)
                        add_q2(acc, t, k, i, j, a);
        break;
    case family_id::T81:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = 0; a <= g1(k, j) + 1; ++a)
                    for (long b = 0; b <= std::min(j, g1(k, j) - a + 1); ++b)
                        add_q1(acc, t, k, j, a, b);
        break;
    case family_id::T82:
        for (long k = -1; k <= t - 1; ++k)
            for (long i = 0; i <= k; ++i)
                for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                    for (long a = 0; a <= g3(k, i, j) + 1; ++a)
                        add_q2(acc, t, k, i, j, a);
        break;
    default:
        throw std::invalid_argument("family_T_split: not a split family");
    }
    return acc;
}

inline schur_expansion family_N(int m, long t)
{
    schur_expansion acc;
    switch (m) {
    case 1:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 1; ++j)
                for (long a = 0; a <= 5 * k + j - 4 * t - 1; ++a)
                    add_shape(acc, a, k - a + j + 1, 4 * t - 4 * k - 2 * j + 1,
                              5 * k + j - 1 - 4 * t - a);
        break;
    case 2:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = 0; a <= 5 * k + j - 4 * t + 2; ++a)
                    add_shape(acc, a, k - a + j + 1, 4 * t - 4 * k - 2 * j - 1,
                              5 * k + j + 3 - 4 * t - a);
        break;
    case 3:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= k; ++a)
                for (long b = 0; b <= std::min(2 * t - 2 * k - 2, k - a); ++b)
                    add_shape(acc, a, k - a + b + 1, 2 * t - 2 * k - b, k - a - b + 1);
        break;
    case 4:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= k; ++a)
                for (long b = 0; b <= std::min(2 * t - 2 * k - 1, k - a); ++b)
                    add_shape(acc, a, k + 1 - a + b, 2 * t - 2 * k - b, k + 1 - a - b);
        break;
    case 5:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = std::max(0l, 5 * k + j - 4 * t + 3);
                     a <= 5 * k + 2 * j - 4 * t + 3; ++a)
                    add_shape(acc, a, 6 * k - 4 * t + 2 * j - 2 * a + 4,
                              8 * t - 9 * k - 3 * j + a - 4, 0);
        break;
    case 6:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 1; ++j)
                for (long a = std::max(0l, 5 * k + j - 4 * t + 1);
                     a <= 5 * k + 2 * j - 4 * t + 1; ++a)
                    add_shape(acc, a, 6 * k - 4 * t + 2 * j - 2 * a + 2,
                              8 * t - 9 * k - 3 * j + a - 1, 0);
        break;
    }
    return acc;
}

inline schur_expansion family_M(int m, long t)
{
    schur_expansion acc;
    switch (m) {
    case 1:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = 0; a <= 5 * k + j + 2 - 4 * t; ++a)
                    add_shape(acc, a, k + 1 - a + j, 4 * t - 2 * j - 1 - 4 * k,
                              5 * k + j - 4 * t + 3 - a);
        break;
    case 2:
        for (long k = 0; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = 0; a <= 5 * k + j - 4 * t - 1; ++a)
                    add_shape(acc, a, k + 1 - a + j, 4 * t + 1 - 4 * k - 2 * j,
                              5 * k + j - 4 * t - 1 - a);
        break;
    case 3:
        // j is pinned at 2t-2k-1, the boundary slice of the second
        // difference this family captures; any other value breaks the
        // weight-(4t+4) homogeneity of the shapes
        for (long k = 0; k <= t - 1; ++k) {
            const long j = 2 * t - 2 * k - 1;
            for (long i = 1; i <= k; ++i)
                for (long a = 0; a <= 3 * k + j + 2 * i - 4 * t - 3; ++a)
                    add_shape(acc, a, 2 * t - k - a, k + 4 - i,
                              k + 2 * i - 2 * t - 4 - a);
        }
        break;
    case 4:
        for (long k = 0; k <= t - 1; ++k)
            for (long i = 0; i <= k; ++i)
                for (long a = 0; a <= k + 2 * i - 2 * t - 1; ++a)
                    add_shape(acc, a, 2 * t - a - k, k - i + 2, k + 2 * i - 2 * t - a);
        break;
    case 5:
        for (long k = 0; k <= t - 1; ++k)
            for (long i = 0; i <= k; ++i)
                for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                    for (long a = std::max(0l, 3 * k + j + 2 * i - 4 * t + 1);
                         a <= 3 * k + j + 2 * i - 4 * t + 1; ++a)
                        add_shape(acc, a, k + 1 - a + j, 4 * t - 2 * j - i - 3 * k, 0);
        break;
    case 6:
        for (long k = 1; k <= t - 1; ++k)
            for (long i = 0; i <= k; ++i)
                for (long j = 0; j <= 2 * t - 2 * k - 1; ++j)
                    for (long a = std::max(0l, 3 * k + j + 2 * i - 4 * t - 1);
                         a <= 3 * k + j + 2 * i - 4 * t - 1; ++a)
                        add_shape(acc, a, k + 1 - a + j, 4 * t - 2 * j - i - 3 * k + 1, 0);
        break;
    }
    return acc;
}

inline schur_expansion family_C(int m, long t)
{
    schur_expansion acc;
    switch (m) {
    case 1:
        for (long k = 1; k <= t; ++k)
            for (long a = 0; a <= 5 * k - 4 * t - 3; ++a)
                add_shape(acc, a, k - a, 4 * t - 4 * k + 3, 5 * k - 4 * t - a - 2);
        break;
    case 2:
        for (long k = 1; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 1; ++j)
                for (long a = std::max(0l, 5 * k + j - 4 * t - 1);
                     a <= 5 * k + j - 4 * t - 1; ++a)
                    add_shape(acc, a, k - a + j + 1, 4 * t - 4 * k - 2 * j + 1, 0);
        break;
    case 3:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= 3 * k - 2 * t + 1; ++a)
                add_shape(acc, a, 2 * t - k - a, 1, 3 * k - 2 * t - a + 2);
        break;
    case 4:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = std::max(0l, 5 * k - 4 * t + 1); a <= 5 * k - 4 * t + 1; ++a)
                add_shape(acc, a, k + 1 - a, 4 * t - 4 * k, 0);
        break;
    case 5:
        for (long k = 1; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = std::max(0l, 5 * k + j - 4 * t + 2);
                     a <= 5 * k + j - 4 * t + 2; ++a)
                    add_shape(acc, a, k + j - a + 2, 4 * t - 4 * k - 2 * j - 2, 0);
        break;
    }
    return acc;
}

inline schur_expansion family_D(int m, long t)
{
    schur_expansion acc;
    switch (m) {
    case 1:
        for (long k = 0; k <= t - 2; ++k)
            for (long j = 1; j <= 2 * t - 2 * k - 3; ++j)
                for (long a = std::max(0l, 5 * k + j - 4 * t + 3);
                     a <= 5 * k + j - 4 * t + 3; ++a)
                    add_shape(acc, a, k + 1 - a + j, 4 * t - 2 * j - 4 * k - 1, 0);
        break;
    case 2:
        for (long a = 0; a <= t - 3; ++a)
            add_shape(acc, a, t - a, 3, t - a - 2);
        break;
    case 3:
        for (long k = 0; k <= t - 2; ++k)
            for (long a = 0; a <= 5 * k - 4 * t + 2; ++a)
                add_shape(acc, a, k + 1 - a, 4 * t - 4 * k - 1, 5 * k - 4 * t - a + 3);
        break;
    case 4:
        for (long k = 0; k <= t - 2; ++k)
            for (long a = 0; a <= 3 * k - 2 * t; ++a)
                add_shape(acc, a, 2 * t - k - a - 1, 3, 3 * k - 2 * t - a + 1);
        break;
    case 5:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= 3 * k - 2 * t - 1; ++a)
                add_shape(acc, a, 2 * t - a - k, 2, 3 * k - 2 * t - a);
        break;
    case 6:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= 3 * k - 2 * t - 3; ++a)
                add_shape(acc, a, 2 * t - a - k, 3, 3 * k - 2 * t - a - 2);
        break;
    case 7:
        for (long k = 0; k <= t - 1; ++k)
            for (long i = 0; i <= k - 2; ++i)
                for (long a = std::max(0l, k + 2 * i - 2 * t); a <= k + 2 * i - 2 * t; ++a)
                    add_shape(acc, a, 2 * t - k - a, k - i + 2, 0);
        break;
    case 8:
        for (long k = 1; k <= t - 1; ++k)
            for (long i = 0; i <= k - 1; ++i)
                for (long a = std::max(0l, k - 2 * t + 2 * i); a <= k - 2 * t + 2 * i; ++a)
                    add_shape(acc, a, 2 * t - a - k, k - i + 2, 0);
        break;
    case 9:
        for (long k = 1; k <= t - 1; ++k)
            for (long j = 0; j <= 2 * t - 2 * k - 2; ++j)
                for (long a = std::max(0l, 5 * k + j - 4 * t + 1);
                     a <= 5 * k + j - 4 * t + 1; ++a)
                    add_shape(acc, a, k + 1 - a + j, 4 * t - 4 * k - 2 * j, 0);
        break;
    }
    return acc;
}

inline schur_expansion family_E(int m, long t)
{
    schur_expansion acc;
    switch (m) {
    case 1:
        for (long a = 0; a <= t + 1; ++a)
            add_shape(acc, a, t + 1 - a, 0, t + 1 - a);
        break;
    case 2:
        for (long k = 0; k <= t; ++k)
            for (long a = 0; a <= 3 * k - 2 * t - 1; ++a)
                add_shape(acc, a, 2 * t - k - a + 1, 1, 3 * k - 2 * t - 1 - a);
        break;
    case 3:
        for (long k = 0; k <= t; ++k)
            for (long a = 0; a <= 3 * k - 2 * t - 2; ++a)
                add_shape(acc, a, 2 * t - k - a + 2, 0, 3 * k - 2 * t - 2 - a);
        break;
    case 4:
        for (long a = 0; a <= t; ++a)
            add_shape(acc, a, t + 1 - a, 0, t + 1 - a);
        break;
    case 5:
        for (long a = 0; a <= t - 1; ++a)
            add_shape(acc, a, t + 1 - a, 1, t - 1 - a);
        break;
    case 6:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= 3 * k - 2 * t + 1; ++a)
                add_shape(acc, a, 2 * t - k - a, 1, 3 * k + 2 - 2 * t - a);
        break;
    case 7:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= 3 * k - 2 * t; ++a)
                add_shape(acc, a, 2 * t + 1 - k - a, 0, 3 * k + 1 - 2 * t - a);
        break;
    case 8:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= 3 * k - 2 * t; ++a)
                add_shape(acc, a, 2 * t - k - a, 2, 3 * k - 2 * t - a);
        break;
    case 9:
        for (long k = 0; k <= t - 1; ++k)
            for (long a = 0; a <= 3 * k - 2 * t - 1; ++a)
                add_shape(acc, a, 2 * t + 1 - k - a, 1, 3 * k - 1 - 2 * t - a);
        break;
    }
    return acc;
}

} // namespace families_detail

inline schur_expansion family_sum(family_id id, long t)
{
    using namespace families_detail;
    switch (id) {
    case family_id::A1: return family_A(1, t);
    case family_id::A2: return family_A(2, t);
    case family_id::A3: return family_A(3, t);
    case family_id::A4: return family_A(4, t);
    case family_id::B1: return family_B(1, t);
    case family_id::B2: return family_B(2, t);
    case family_id::B3: return family_B(3, t);
    case family_id::B4: return family_B(4, t);
    case family_id::T1: return family_T_small(1, t);
    case family_id::T2: return family_T_small(2, t);
    case family_id::T3: return family_T_small(3, t);
    case family_id::T4: return family_T_small(4, t);
    case family_id::T5: return family_T_small(5, t);
    case family_id::T6: return family_T_small(6, t);
    case family_id::T7: return family_T_small(7, t);
    case family_id::T8: return family_T_small(8, t);
    case family_id::T9: return family_T9(t);
    case family_id::T10: return family_T10(t);
    case family_id::T11: case family_id::T12: case family_id::T21: case family_id::T22:
    case family_id::T31: case family_id::T32: case family_id::T41: case family_id::T42:
    case family_id::T51: case family_id::T52: case family_id::T61: case family_id::T62:
    case family_id::T71: case family_id::T72: case family_id::T81: case family_id::T82:
        return family_T_split(id, t);
    case family_id::N1: return family_N(1, t);
    case family_id::N2: return family_N(2, t);
    case family_id::N3: return family_N(3, t);
    case family_id::N4: return family_N(4, t);
    case family_id::N5: return family_N(5, t);
    case family_id::N6: return family_N(6, t);
    case family_id::M1: return family_M(1, t);
    case family_id::M2: return family_M(2, t);
    case family_id::M3: return family_M(3, t);
    case family_id::M4: return family_M(4, t);
    case family_id::M5: return family_M(5, t);
    case family_id::M6: return family_M(6, t);
    case family_id::C1: return family_C(1, t);
    case family_id::C2: return family_C(2, t);
    case family_id::C3: return family_C(3, t);
    case family_id::C4: return family_C(4, t);
    case family_id::C5: return family_C(5, t);
    case family_id::D1: return family_D(1, t);
    case family_id::D2: return family_D(2, t);
    case family_id::D3: return family_D(3, t);
    case family_id::D4: return family_D(4, t);
    case family_id::D5: return family_D(5, t);
    case family_id::D6: return family_D(6, t);
    case family_id::D7: return family_D(7, t);
    case family_id::D8: return family_D(8, t);
    case family_id::D9: return family_D(9, t);
    case family_id::E1: return family_E(1, t);
    case family_id::E2: return family_E(2, t);
    case family_id::E3: return family_E(3, t);
    case family_id::E4: return family_E(4, t);
    case family_id::E5: return family_E(5, t);
    case family_id::E6: return family_E(6, t);
    case family_id::E7: return family_E(7, t);
    case family_id::E8: return family_E(8, t);
    case family_id::E9: return family_E(9, t);
    }
    throw std::invalid_argument("unknown family id");
}

} // namespace schurlab
