#ifndef CUBICLIN_ORACLE_HPP
#define CUBICLIN_ORACLE_HPP

#include "checker.hpp"
#include "exact_matrix.hpp"
#include "system_builders.hpp"

namespace cubiclin {

/// The derivation D_F = sum_i y_i d/dF_i of the cubic-linear map F of A,
/// with d/dF_i realized through the adjugate of JF. Because det(JF) = 1 the
/// adjugate IS the inverse, so every coefficient stays polynomial. Only
/// meaningful for Keller matrices; construction verifies det(JF) = 1 and
/// adj(JF) * JF = Id exactly.
struct DerivationState {
    size_t n = 0;
    size_t iteration_bound = 0;  // 3^(n-1) + 1
    UniversePtr universe;        // x1..xn, y1..yn
    std::vector<MultiPoly> map_components;   // F_i = x_i + (Ax)_i^3
    std::vector<MultiPoly> direction_coeff;  // coefficient of d/dx_j in D_F

    MultiPoly apply(const MultiPoly& p) const {
        MultiPoly out(universe);
        for (size_t j = 0; j < n; ++j) {
            MultiPoly dj = p.derivative(j);
            if (!dj.is_zero()) out += direction_coeff[j] * dj;
        }
        return out;
    }
};

inline DerivationState make_derivation_state(const ExactMatrix& a, size_t n_limit = 3) {
    size_t n = a.n();
    if (n == 0 || n > n_limit)
        throw std::invalid_argument("derivation oracle limited to 1 <= n <= " +
                                    std::to_string(n_limit));
    DerivationState st;
    st.n = n;
    st.iteration_bound = 1;
    for (size_t i = 0; i + 1 < n; ++i) st.iteration_bound *= 3;
    st.iteration_bound += 1;
    st.universe = make_xy_universe(n);
    const UniversePtr& u = st.universe;

    std::vector<MultiPoly> x = builders_detail::var_run(u, 0, n);
    std::vector<MultiPoly> ax = builders_detail::apply_matrix(a, x, u);
    st.map_components.reserve(n);
    for (size_t i = 0; i < n; ++i) st.map_components.push_back(x[i] + ax[i].pow(3));

    // JF = Id + 3 * Delta[(Ax)^2] * A
    PolyMatrix jf = PolyMatrix::identity(n, u);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly sq = GaussianRational(3) * (ax[i] * ax[i]);
        for (size_t j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero()) jf.at(i, j) += sq * a.at(i, j);
    }
    MultiPoly det = jf.det();
    if (!(det == MultiPoly::constant(u, GaussianRational(1))))
        throw precondition_error(
            "derivation oracle requires det(JF) = 1; got " + det.to_string(),
            Verdict::make_fails("Jacobian determinant of the cubic-linear map is not 1"));

    PolyMatrix adj = jf.adjugate();
    if (!(adj * jf == PolyMatrix::identity(n, u)))
        throw arithmetic_error("adjugate identity adj(JF) * JF = Id failed");

    // d/dF_i = sum_j ((JF^-1)^t)_{ij} d/dx_j = sum_j adj_{ji} d/dx_j, so the
    // d/dx_j coefficient of D_F = sum_i y_i d/dF_i is sum_i y_i * adj_{ji}.
    st.direction_coeff.assign(n, MultiPoly(u));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            if (adj.at(j, i).is_zero()) continue;
            st.direction_coeff[j] += MultiPoly::variable(u, n + i) * adj.at(j, i);
        }
    return st;
}

/// Invertibility by iterated derivation: F is invertible iff D_F^N x_i = 0
/// for every i, with N = 3^(n-1) + 1. Unknown only on budget exhaustion.
inline Tri derivation_check(const ExactMatrix& a, const CheckOptions& opts = {},
                            size_t n_limit = 3) {
    DerivationState st = make_derivation_state(a, n_limit);
    checker_detail::Timer timer;
    for (size_t i = 0; i < st.n; ++i) {
        MultiPoly p = MultiPoly::variable(st.universe, i);
        for (size_t t = 0; t < st.iteration_bound && !p.is_zero(); ++t) {
            p = st.apply(p);
            if (p.term_count() > opts.budget.max_terms) return Tri::Unknown;
            if (timer.seconds() > opts.budget.wall_seconds) return Tri::Unknown;
        }
        if (!p.is_zero()) return Tri::False;
    }
    return Tri::True;
}

}  // namespace cubiclin

#endif
