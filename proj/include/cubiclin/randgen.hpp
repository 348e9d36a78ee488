#ifndef CUBICLIN_RANDGEN_HPP
#define CUBICLIN_RANDGEN_HPP

#include <random>

#include "exact_matrix.hpp"
#include "transform.hpp"

namespace cubiclin {

/// Replayable description of one random matrix draw. Identical GenSpec ==
/// identical output; the source is std::mt19937_64 seeded with `seed`.
struct GenSpec {
    enum class Family { RankR, Triangular, DiagonalInvertible, BlockZeroBottom };

    size_t n = 2;
    size_t r = 1;               // target rank (RankR), top-block size (BlockZeroBottom)
    long long bound = 25;       // entries drawn from [-bound, bound] (or [0, bound])
    bool nonnegative = false;
    uint64_t seed = 0;
    Family family = Family::RankR;
};

inline std::string to_string(GenSpec::Family f) {
    switch (f) {
        case GenSpec::Family::RankR: return "rank_r";
        case GenSpec::Family::Triangular: return "triangular";
        case GenSpec::Family::DiagonalInvertible: return "diagonal_invertible";
        case GenSpec::Family::BlockZeroBottom: return "block_zero_bottom";
    }
    return "?";
}

namespace randgen_detail {

inline GaussianRational draw(std::mt19937_64& rng, const GenSpec& spec) {
    std::uniform_int_distribution<long long> dist(spec.nonnegative ? 0 : -spec.bound,
                                                  spec.bound);
    return GaussianRational(mpq_class(static_cast<long>(dist(rng))));
}

inline GaussianRational draw_nonzero(std::mt19937_64& rng, long long bound) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    long long v = 0;
    while (v == 0) v = dist(rng);
    return GaussianRational(mpq_class(static_cast<long>(v)));
}

}  // namespace randgen_detail

/// First r rows uniform and independent; remaining rows random integer
/// combinations of them, so the rank is exactly r (verified post hoc).
inline ExactMatrix random_rank_r(const GenSpec& spec) {
    if (spec.family != GenSpec::Family::RankR)
        throw std::invalid_argument("random_rank_r requires family rank_r");
    if (spec.r < 1 || spec.r > spec.n || spec.bound < 1)
        throw std::invalid_argument("random_rank_r requires 1 <= r <= n and bound >= 1");
    std::mt19937_64 rng(spec.seed);
    const size_t n = spec.n, r = spec.r;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<ExactVector> top(r, ExactVector(n));
        for (auto& row : top)
            for (auto& e : row) e = randgen_detail::draw(rng, spec);
        ExactMatrix m(n);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = top[i][j];
        std::uniform_int_distribution<long long> cdist(-spec.bound, spec.bound);
        for (size_t i = r; i < n; ++i)
            for (size_t c = 0; c < r; ++c) {
                GaussianRational coeff(mpq_class(static_cast<long>(cdist(rng))));
                if (coeff.is_zero()) continue;
                for (size_t j = 0; j < n; ++j) m.at(i, j) += coeff * top[c][j];
            }
        if (m.rank() == r) return m;
    }
    throw structural_error("random_rank_r: rank target not met after bounded resampling");
}

/// Random rank-1 Keller matrix A = u * v^t: the Keller identity for rank 1
/// reduces to sum_i u_i^3 v_i = 0, solved for the last coordinate of v.
inline ExactMatrix random_rank1_druzkowski(size_t n, long long bound, uint64_t seed) {
    if (n < 2 || bound < 1)
        throw std::invalid_argument("random_rank1_druzkowski requires n >= 2, bound >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ExactVector u(n), v(n);
        for (auto& e : u) e = randgen_detail::draw_nonzero(rng, bound);
        std::uniform_int_distribution<long long> dist(-bound, bound);
        GaussianRational acc(0);
        for (size_t i = 0; i + 1 < n; ++i) {
            v[i] = GaussianRational(mpq_class(static_cast<long>(dist(rng))));
            acc += u[i] * u[i] * u[i] * v[i];
        }
        GaussianRational un3 = u[n - 1] * u[n - 1] * u[n - 1];
        v[n - 1] = -(acc * un3.inv());
        ExactMatrix m(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = u[i] * v[j];
        if (m.rank() == 1) return m;
    }
    throw structural_error("random_rank1_druzkowski: bounded resampling exhausted");
}

/// Invertible diagonal scaling with uniform nonzero integer entries.
inline DiagonalAction random_diagonal(size_t n, long long bound, uint64_t seed) {
    if (n < 1 || bound < 1)
        throw std::invalid_argument("random_diagonal requires n >= 1 and bound >= 1");
    std::mt19937_64 rng(seed);
    ExactVector d(n);
    for (auto& e : d) e = randgen_detail::draw_nonzero(rng, bound);
    return DiagonalAction(std::move(d));
}

/// Structured families: upper triangular, invertible diagonal, and the
/// [[A11, A12], [0, 0]] block form with an r x r top-left block.
inline ExactMatrix random_structured(const GenSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    const size_t n = spec.n;
    switch (spec.family) {
        case GenSpec::Family::Triangular: {
            ExactMatrix m(n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j) m.at(i, j) = randgen_detail::draw(rng, spec);
            return m;
        }
        case GenSpec::Family::DiagonalInvertible: {
            ExactMatrix m(n);
            for (size_t i = 0; i < n; ++i)
                m.at(i, i) = randgen_detail::draw_nonzero(rng, spec.bound);
            return m;
        }
        case GenSpec::Family::BlockZeroBottom: {
            if (spec.r < 1 || spec.r >= n)
                throw std::invalid_argument("block family requires 1 <= r < n");
            ExactMatrix a11(spec.r);
            for (size_t i = 0; i < spec.r; ++i)
                for (size_t j = 0; j < spec.r; ++j)
                    a11.at(i, j) = randgen_detail::draw(rng, spec);
            std::vector<ExactVector> a12(spec.r, ExactVector(n - spec.r));
            for (auto& row : a12)
                for (auto& e : row) e = randgen_detail::draw(rng, spec);
            return block_embed(a11, a12);
        }
        case GenSpec::Family::RankR:
            return random_rank_r(spec);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace cubiclin

#endif
