#ifndef CUBICLIN_SYSTEM_BUILDERS_HPP
#define CUBICLIN_SYSTEM_BUILDERS_HPP

#include <cmath>
#include <random>

#include "exact_matrix.hpp"
#include "poly_system.hpp"
#include "verdict.hpp"

namespace cubiclin {

namespace builders_detail {

/// Visits index subsets of {0..n-1} of size 1..r in canonical order
/// (by size, then lexicographically); callback returns false to stop.
template <class F>
inline void for_each_subset(size_t n, size_t r, F&& f) {
    std::vector<size_t> subset;
    for (size_t k = 1; k <= r && k <= n; ++k) {
        subset.assign(k, 0);
        for (size_t i = 0; i < k; ++i) subset[i] = i;
        while (true) {
            if (!f(subset)) return;
            size_t i = k;
            bool done = true;
            while (i-- > 0) {
                if (subset[i] != i + n - k) {
                    ++subset[i];
                    for (size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
                    done = false;
                    break;
                }
                if (i == 0) break;
            }
            if (done) break;
        }
    }
}

/// Coefficients, indexed by (s-degree, t-degree), of
///   Sum_{0 < |S| <= rank_bound} minor_S * Prod_{i in S} (s*z_i + t*y_i)^2,
/// accumulated without ever materializing s and t. minor_of(S) may be any
/// polynomial (zero minors are skipped).
template <class MinorFn>
inline std::map<std::pair<int, int>, MultiPoly> pencil_coefficients(
    size_t n, size_t rank_bound, MinorFn&& minor_of, const std::vector<MultiPoly>& z,
    const std::vector<MultiPoly>& y, const UniversePtr& u) {
    std::map<std::pair<int, int>, MultiPoly> acc;
    for_each_subset(n, rank_bound, [&](const std::vector<size_t>& s) {
        MultiPoly minor = minor_of(s);
        if (minor.is_zero()) return true;
        // expand Prod_{i in S} (s*z_i + t*y_i)^2 by (s-deg, t-deg)
        std::map<std::pair<int, int>, MultiPoly> prod;
        prod.emplace(std::pair<int, int>{0, 0}, MultiPoly::constant(u, GaussianRational(1)));
        for (size_t i : s) {
            std::map<std::pair<int, int>, MultiPoly> next;
            const MultiPoly parts[3] = {z[i] * z[i], GaussianRational(2) * (z[i] * y[i]),
                                        y[i] * y[i]};
            const std::pair<int, int> degs[3] = {{2, 0}, {1, 1}, {0, 2}};
            for (auto& [d, p] : prod) {
                for (int t = 0; t < 3; ++t) {
                    if (parts[t].is_zero()) continue;
                    std::pair<int, int> nd{d.first + degs[t].first, d.second + degs[t].second};
                    auto it = next.find(nd);
                    if (it == next.end()) it = next.emplace(nd, MultiPoly(u)).first;
                    it->second += p * parts[t];
                }
            }
            prod = std::move(next);
        }
        for (auto& [d, p] : prod) {
            MultiPoly contrib = minor * p;
            if (contrib.is_zero()) continue;
            auto it = acc.find(d);
            if (it == acc.end()) it = acc.emplace(d, MultiPoly(u)).first;
            it->second += contrib;
        }
        return true;
    });
    return acc;
}

inline std::vector<MultiPoly> var_run(const UniversePtr& u, size_t offset, size_t n) {
    std::vector<MultiPoly> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.push_back(MultiPoly::variable(u, offset + i));
    return v;
}

inline std::vector<MultiPoly> const_run(const UniversePtr& u,
                                        const std::vector<GaussianRational>& c) {
    std::vector<MultiPoly> v;
    v.reserve(c.size());
    for (auto& x : c) v.push_back(MultiPoly::constant(u, x));
    return v;
}

/// (A*v)_i for a vector of polynomials.
inline std::vector<MultiPoly> apply_matrix(const ExactMatrix& A,
                                           const std::vector<MultiPoly>& v,
                                           const UniversePtr& u) {
    std::vector<MultiPoly> out(A.n(), MultiPoly(u));
    for (size_t i = 0; i < A.n(); ++i)
        for (size_t j = 0; j < A.n(); ++j)
            if (!A.at(i, j).is_zero()) out[i] += A.at(i, j) * v[j];
    return out;
}

}  // namespace builders_detail

/// Universe z1..zn, y1..yn: the ambient space of the C1/C2 systems.
inline UniversePtr make_zy_universe(size_t n) {
    std::vector<std::string> names = VarUniverse::indexed("z", n);
    auto ys = VarUniverse::indexed("y", n);
    names.insert(names.end(), ys.begin(), ys.end());
    return make_universe(std::move(names));
}

inline UniversePtr make_xy_universe(size_t n) {
    std::vector<std::string> names = VarUniverse::indexed("x", n);
    auto ys = VarUniverse::indexed("y", n);
    names.insert(names.end(), ys.begin(), ys.end());
    return make_universe(std::move(names));
}

/// det(Id + Delta[(A*x)^2] * A) - 1 as an explicit polynomial in x1..xn,
/// expanded through principal minors with rank truncation. A is Druzkowski
/// iff this vanishes identically.
inline MultiPoly keller_polynomial(const ExactMatrix& A, const UniversePtr& xuniv,
                                   size_t symbolic_limit = 6) {
    size_t n = A.n();
    if (n > symbolic_limit)
        throw structural_error(
            "keller_polynomial: dimension " + std::to_string(n) + " exceeds symbolic limit " +
            std::to_string(symbolic_limit) + "; use is_druzkowski randomized mode");
    std::vector<MultiPoly> x = builders_detail::var_run(xuniv, 0, n);
    std::vector<MultiPoly> Ax = builders_detail::apply_matrix(A, x, xuniv);
    std::vector<MultiPoly> u(n, MultiPoly(xuniv));
    for (size_t i = 0; i < n; ++i) u[i] = Ax[i] * Ax[i];
    MultiPoly p(xuniv);
    builders_detail::for_each_subset(n, A.rank(), [&](const std::vector<size_t>& s) {
        GaussianRational minor = A.principal_minor(s);
        if (minor.is_zero()) return true;
        MultiPoly prod = MultiPoly::constant(xuniv, minor);
        for (size_t i : s) prod *= u[i];
        p += prod;
        return true;
    });
    return p;
}

inline MultiPoly keller_polynomial(const ExactMatrix& A, size_t symbolic_limit = 6) {
    return keller_polynomial(A, make_universe(VarUniverse::indexed("x", A.n())),
                             symbolic_limit);
}

struct DruzkowskiOptions {
    enum class Mode { Exact, Randomized };
    Mode mode = Mode::Randomized;
    size_t trials = 64;
    uint64_t seed = 1;
    long long box = 1000000;   // sample entries uniformly in [-box, box]
    size_t symbolic_limit = 6;
};

/// Is F_A(x) = x + (Ax)^3 a Keller map?  Exact mode decides by
/// keller_polynomial == 0; randomized mode evaluates the Keller determinant
/// at integer points and reports a Schwartz-Zippel failure bound.
inline Verdict is_druzkowski(const ExactMatrix& A, const DruzkowskiOptions& opts = {}) {
    size_t n = A.n();
    if (opts.mode == DruzkowskiOptions::Mode::Exact) {
        MultiPoly p = keller_polynomial(A, opts.symbolic_limit);
        if (p.is_zero()) return Verdict::make_holds("", "keller polynomial vanishes");
        Verdict v = Verdict::make_fails("keller polynomial is nonzero: " + p.to_string());
        // exhibit a concrete failing point by sampling deterministically
        std::mt19937_64 rng(1);
        std::uniform_int_distribution<long> dist(-5, 5);
        for (int tries = 0; tries < 1000; ++tries) {
            ExactVector pt(n);
            for (auto& c : pt) c = GaussianRational(dist(rng));
            if (!p.evaluate(pt).is_zero()) {
                v.witness = pt;
                break;
            }
        }
        return v;
    }

    size_t rank = A.rank();
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long long> dist(-opts.box, opts.box);
    for (size_t trial = 0; trial < opts.trials; ++trial) {
        ExactVector v(n);
        for (auto& c : v) c = GaussianRational(mpq_class(static_cast<long>(dist(rng))));
        ExactVector Av = A.apply(v);
        ExactMatrix M = ExactMatrix::identity(n);
        for (size_t i = 0; i < n; ++i) {
            GaussianRational ui = Av[i] * Av[i];
            if (ui.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) M.at(i, j) += ui * A.at(i, j);
        }
        if (!(M.det() == GaussianRational(1))) {
            Verdict bad = Verdict::make_fails("det(Id+Delta[(Av)^2]A) != 1 at sampled point");
            bad.witness = v;
            return bad;
        }
    }
    // degree of the Keller polynomial is at most 2*rank; per-trial failure
    // probability <= deg / (2*box+1)
    double per_trial =
        static_cast<double>(2 * rank) / (2.0 * static_cast<double>(opts.box) + 1.0);
    Verdict ok = Verdict::make_holds(
        "", "all " + std::to_string(opts.trials) + " sampled determinants equal 1");
    ok.sz_log2_failure_bound = static_cast<double>(opts.trials) * std::log2(per_trial);
    return ok;
}

/// Coefficient polynomials, one per s^a t^b monomial, of
/// det(Id + Delta[(s z + t y)^2] A) - 1 expanded with rank truncation.
/// All generators vanish iff the pencil determinant condition holds.
inline PolySystem pencil_system(const ExactMatrix& A, const std::vector<MultiPoly>& z,
                                const std::vector<MultiPoly>& y, const UniversePtr& u) {
    auto coeffs = builders_detail::pencil_coefficients(
        A.n(), A.rank(),
        [&](const std::vector<size_t>& s) {
            return MultiPoly::constant(u, A.principal_minor(s));
        },
        z, y, u);
    PolySystem sys(u);
    for (auto& [d, p] : coeffs) sys.push(p, Provenance::pencil(d.first, d.second));
    return sys;
}

/// Symbolic z and y over the z/y universe.
inline PolySystem pencil_system(const ExactMatrix& A) {
    UniversePtr u = make_zy_universe(A.n());
    size_t n = A.n();
    return pencil_system(A, builders_detail::var_run(u, 0, n),
                         builders_detail::var_run(u, n, n), u);
}

/// Membership system of V_n: the n cubic rows of z + A(z^3 + z*y^2) followed
/// by the pencil coefficients; unknowns z1..zn, y1..yn.
inline PolySystem c1_system(const ExactMatrix& A) {
    size_t n = A.n();
    UniversePtr u = make_zy_universe(n);
    std::vector<MultiPoly> z = builders_detail::var_run(u, 0, n);
    std::vector<MultiPoly> y = builders_detail::var_run(u, n, n);

    PolySystem sys(u);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly row = z[i];
        for (size_t j = 0; j < n; ++j) {
            if (A.at(i, j).is_zero()) continue;
            row += A.at(i, j) * (z[j] * z[j] * z[j] + z[j] * y[j] * y[j]);
        }
        sys.push(std::move(row), Provenance::cubic_row(static_cast<int>(i)));
    }
    PolySystem pencil = pencil_system(A, z, y, u);
    for (size_t i = 0; i < pencil.size(); ++i)
        sys.push(pencil.generators()[i], pencil.provenance()[i]);
    return sys;
}

/// Membership system of W_n: rows z + A(z^3 + z*(Ay)^2); the pencil part
/// (with A*y in place of y) is appended only when A is not known Druzkowski.
inline PolySystem c2_system(const ExactMatrix& A, bool assume_druzkowski) {
    size_t n = A.n();
    UniversePtr u = make_zy_universe(n);
    std::vector<MultiPoly> z = builders_detail::var_run(u, 0, n);
    std::vector<MultiPoly> y = builders_detail::var_run(u, n, n);
    std::vector<MultiPoly> Ay = builders_detail::apply_matrix(A, y, u);

    PolySystem sys(u);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly row = z[i];
        for (size_t j = 0; j < n; ++j) {
            if (A.at(i, j).is_zero()) continue;
            row += A.at(i, j) * (z[j] * z[j] * z[j] + z[j] * (Ay[j] * Ay[j]));
        }
        sys.push(std::move(row), Provenance::cubic_row(static_cast<int>(i)));
    }
    if (!assume_druzkowski) {
        PolySystem pencil = pencil_system(A, z, Ay, u);
        for (size_t i = 0; i < pencil.size(); ++i)
            sys.push(pencil.generators()[i], pencil.provenance()[i]);
    }
    return sys;
}

/// The untransformed injectivity rows x + (Ax)^3 + (Ax)*(Ay)^2; provided for
/// benchmarking against the z := A*x transformed system.
inline PolySystem injective_direct_system(const ExactMatrix& A) {
    size_t n = A.n();
    UniversePtr u = make_xy_universe(n);
    std::vector<MultiPoly> x = builders_detail::var_run(u, 0, n);
    std::vector<MultiPoly> y = builders_detail::var_run(u, n, n);
    std::vector<MultiPoly> Ax = builders_detail::apply_matrix(A, x, u);
    std::vector<MultiPoly> Ay = builders_detail::apply_matrix(A, y, u);

    PolySystem sys(u);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly row = x[i] + Ax[i] * Ax[i] * Ax[i] + Ax[i] * (Ay[i] * Ay[i]);
        sys.push(std::move(row), Provenance::cubic_row(static_cast<int>(i)));
    }
    return sys;
}

enum class ZkVariant { Thm18, Thm19 };

/// System over y1..yn whose infeasibility certifies the Z_k criterion:
///   Thm18: rows of Z_k + A(Z_k^3 + Z_k*(Ay)^2)
///   Thm19: rows of Z_k + A(Z_k^3 + Z_k*y^2) plus the pencil at z = Z_k.
inline PolySystem zk_system(const ExactMatrix& A, size_t k, ZkVariant variant) {
    size_t n = A.n();
    if (k < 3 || k > n)
        throw std::invalid_argument("zk_system requires 3 <= k <= n (got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n) + ")");
    ZkVector zk(n, k);
    UniversePtr u = make_universe(VarUniverse::indexed("y", n));
    std::vector<MultiPoly> y = builders_detail::var_run(u, 0, n);
    std::vector<MultiPoly> inner =
        variant == ZkVariant::Thm18 ? builders_detail::apply_matrix(A, y, u) : y;

    PolySystem sys(u);
    const MultiPoly one = MultiPoly::constant(u, GaussianRational(1));
    for (size_t i = 0; i < n; ++i) {
        // Z_k^3 = Z_k, so row i is zk_i + sum_{j<k} a_ij (1 + inner_j^2)
        MultiPoly row = MultiPoly::constant(u, zk.at(i));
        for (size_t j = 0; j < k; ++j) {
            if (A.at(i, j).is_zero()) continue;
            row += A.at(i, j) * (one + inner[j] * inner[j]);
        }
        sys.push(std::move(row), Provenance::cubic_row(static_cast<int>(i)));
    }
    if (variant == ZkVariant::Thm19) {
        PolySystem pencil =
            pencil_system(A, builders_detail::const_run(u, zk.to_vector()), y, u);
        for (size_t i = 0; i < pencil.size(); ++i)
            sys.push(pencil.generators()[i], pencil.provenance()[i]);
    }
    return sys;
}

/// V_n membership at z = Z_k over a rank-r symbolic matrix: free first rows
/// a_{i,j}, dependent rows Sum_j b_{i,j} * row_j; unknowns {y, a, b}.
inline PolySystem vn_slice_system(size_t n, size_t k, size_t r) {
    if (r < 1 || r >= n) throw std::invalid_argument("vn_slice_system requires 1 <= r < n");
    if (k < 1 || k > n) throw std::invalid_argument("vn_slice_system requires 1 <= k <= n");
    std::vector<std::string> names = VarUniverse::indexed("y", n);
    for (size_t i = 1; i <= r; ++i)
        for (size_t j = 1; j <= n; ++j)
            names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
    for (size_t i = 1; i <= n - r; ++i)
        for (size_t j = 1; j <= r; ++j)
            names.push_back("b" + std::to_string(i) + "_" + std::to_string(j));
    UniversePtr u = make_universe(std::move(names));

    auto avar = [&](size_t i, size_t j) {  // 0-based
        return MultiPoly::variable(u, n + i * n + j);
    };
    auto bvar = [&](size_t i, size_t j) {
        return MultiPoly::variable(u, n + r * n + i * r + j);
    };
    PolyMatrix M(n, u);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j) M.at(i, j) = avar(i, j);
    for (size_t i = 0; i < n - r; ++i)
        for (size_t j = 0; j < n; ++j) {
            MultiPoly e(u);
            for (size_t m = 0; m < r; ++m) e += bvar(i, m) * avar(m, j);
            M.at(r + i, j) = std::move(e);
        }

    ZkVector zk(n, k);
    std::vector<MultiPoly> y = builders_detail::var_run(u, 0, n);
    PolySystem sys(u);
    const MultiPoly one = MultiPoly::constant(u, GaussianRational(1));
    for (size_t i = 0; i < n; ++i) {
        MultiPoly row = MultiPoly::constant(u, zk.at(i));
        for (size_t j = 0; j < k; ++j) row += M.at(i, j) * (one + y[j] * y[j]);
        sys.push(std::move(row), Provenance::cubic_row(static_cast<int>(i)));
    }
    // pencil with symbolic principal minors; rank(M) <= r identically, so
    // subsets above size r contribute nothing
    auto coeffs = builders_detail::pencil_coefficients(
        n, r,
        [&](const std::vector<size_t>& s) {
            PolyMatrix sub(s.size(), u);
            for (size_t i = 0; i < s.size(); ++i)
                for (size_t j = 0; j < s.size(); ++j) sub.at(i, j) = M.at(s[i], s[j]);
            return sub.det();
        },
        builders_detail::const_run(u, zk.to_vector()), y, u);
    for (auto& [d, p] : coeffs) sys.push(p, Provenance::pencil(d.first, d.second));
    return sys;
}

}  // namespace cubiclin

#endif
