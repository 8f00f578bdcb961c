#pragma once

#include "schurlab/partition.hpp"
#include "schurlab/schur.hpp"

#include <string>

namespace schurlab {

// Left side of the main identity:
//   L(r) = sum_{k=0}^{r} ( e_{k-1}^2 e_{r-k}^2 + e_{k-2} e_k e_{r-k}^2
//                          - 2 e_{k-1} e_k e_{r-k-1} e_{r-k} )
// expanded into the Schur basis. Negative e indices kill their product, which
// also makes L(0) well defined (it evaluates to 0).
inline schur_expansion lhs_L(long r)
{
    schur_expansion acc;
    for (long k = 0; k <= r; ++k) {
        acc += expand_eproduct(eproduct({k - 1, k - 1, r - k, r - k}));
        acc += expand_eproduct(eproduct({k - 2, k, r - k, r - k}));
        acc -= schur_expansion::scale(
            2, expand_eproduct(eproduct({k - 1, k, r - k - 1, r - k})));
    }
    return acc;
}

// Right side: unit-coefficient sum of s_lam over all partitions of 2r-2 with
// even multiplicity of the parts 3, 2 and 1 and no part above 4.
inline schur_expansion rhs_R(long r)
{
    schur_expansion acc;
    for (const auto& lam : r_shapes(r))
        acc.add_term(lam, 1);
    return acc;
}

struct lemma_report {
    std::string lemma;
    std::string parameter;
    bool passed = false;
    schur_expansion lhs, rhs, discrepancy;
};

inline lemma_report make_report(std::string lemma, std::string parameter,
                                schur_expansion lhs, schur_expansion rhs)
{
    lemma_report rep;
    rep.lemma = std::move(lemma);
    rep.parameter = std::move(parameter);
    rep.discrepancy = lhs - rhs;
    rep.passed = rep.discrepancy.empty();
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
}

inline lemma_report verify_main_identity(long r)
{
    return make_report("main-identity", "r=" + std::to_string(r), lhs_L(r), rhs_R(r));
}

} // namespace schurlab
