#ifndef CUBICLIN_TRANSFORM_HPP
#define CUBICLIN_TRANSFORM_HPP

#include <vector>

#include "exact_matrix.hpp"
#include "multipoly.hpp"

namespace cubiclin {

/// Invertible diagonal matrix acting by A -> D A D^-3 on matrices and by
/// (y, z) -> (Dy, Dz) on witnesses.
struct DiagonalAction {
    ExactVector d;

    explicit DiagonalAction(ExactVector diag) : d(std::move(diag)) {
        for (const auto& e : d)
            if (e.is_zero()) throw structural_error("diagonal action needs nonzero entries");
    }

    static DiagonalAction identity(size_t n) {
        return DiagonalAction(ExactVector(n, GaussianRational(1)));
    }

    size_t n() const { return d.size(); }

    ExactMatrix matrix() const {
        ExactMatrix m(d.size());
        for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }

    ExactVector apply(const ExactVector& v) const {
        if (v.size() != d.size()) throw structural_error("vector dimension mismatch");
        ExactVector r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = d[i] * v[i];
        return r;
    }

    /// D^3 y, the witness transform that preserves the Ay-based variety.
    ExactVector apply_cubed(const ExactVector& v) const {
        if (v.size() != d.size()) throw structural_error("vector dimension mismatch");
        ExactVector r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = d[i] * d[i] * d[i] * v[i];
        return r;
    }
};

/// (D A D^-3)_{ij} = d_i * a_{ij} / d_j^3.
inline ExactMatrix diagonal_conjugate(const ExactMatrix& a, const DiagonalAction& act) {
    if (a.n() != act.n()) throw structural_error("diagonal action dimension mismatch");
    ExactMatrix r(a.n());
    for (size_t i = 0; i < a.n(); ++i) {
        for (size_t j = 0; j < a.n(); ++j) {
            GaussianRational dj3 = act.d[j] * act.d[j] * act.d[j];
            r.at(i, j) = act.d[i] * a.at(i, j) * dj3.inv();
        }
    }
    return r;
}

/// Diagonal scaling that turns a witness z into an idempotent vector:
/// d_i = 1 where z_i = 0, else 1/z_i, so that (Dz) * (Dz) = Dz.
inline std::pair<DiagonalAction, ExactVector> normalize_witness(const ExactVector& z) {
    ExactVector d(z.size()), zn(z.size());
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i].is_zero()) {
            d[i] = GaussianRational(1);
            zn[i] = GaussianRational(0);
        } else {
            d[i] = z[i].inv();
            zn[i] = GaussianRational(1);
        }
    }
    return {DiagonalAction(std::move(d)), std::move(zn)};
}

/// Checks the defining identity of cubic similarity, (Bx)^3 = L^-1 (A L x)^3,
/// as an exact polynomial identity in x.
inline bool verify_cubic_similar(const ExactMatrix& a, const ExactMatrix& b,
                                 const ExactMatrix& l) {
    size_t n = a.n();
    if (b.n() != n || l.n() != n) throw structural_error("matrix dimension mismatch");
    if (l.det().is_zero()) throw structural_error("similarity matrix must be invertible");
    ExactMatrix linv = l.inverse();
    ExactMatrix al = a * l;
    auto u = make_universe(VarUniverse::indexed("x", n));
    std::vector<MultiPoly> x;
    x.reserve(n);
    for (size_t i = 0; i < n; ++i) x.push_back(MultiPoly::variable(u, i));

    auto linear_cubed = [&](const ExactMatrix& m) {
        std::vector<MultiPoly> out;
        out.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            MultiPoly row = MultiPoly::zero(u);
            for (size_t j = 0; j < n; ++j) row = row + MultiPoly::constant(u, m.at(i, j)) * x[j];
            out.push_back(row.pow(3));
        }
        return out;
    };

    auto lhs = linear_cubed(b);
    auto rhs_cubed = linear_cubed(al);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly rhs = MultiPoly::zero(u);
        for (size_t j = 0; j < n; ++j)
            rhs = rhs + MultiPoly::constant(u, linv.at(i, j)) * rhs_cubed[j];
        if (!(lhs[i] == rhs)) return false;
    }
    return true;
}

/// [[A11, A12], [0, 0]]; A12 given as rows of width m appended to A11's rows.
inline ExactMatrix block_embed(const ExactMatrix& a11,
                               const std::vector<ExactVector>& a12) {
    size_t k = a11.n();
    if (a12.size() != k) throw structural_error("block row count mismatch");
    size_t m = k == 0 ? 0 : a12[0].size();
    for (const auto& row : a12)
        if (row.size() != m) throw structural_error("ragged block");
    ExactMatrix r(k + m);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) r.at(i, j) = a11.at(i, j);
        for (size_t j = 0; j < m; ++j) r.at(i, k + j) = a12[i][j];
    }
    return r;
}

enum class ZkObstruction { ObstructionNilpotency, ObstructionImage, NoObstruction };

inline std::string to_string(ZkObstruction o) {
    switch (o) {
        case ZkObstruction::ObstructionNilpotency: return "ObstructionNilpotency";
        case ZkObstruction::ObstructionImage: return "ObstructionImage";
        case ZkObstruction::NoObstruction: return "NoObstruction";
    }
    return "?";
}

namespace transform_detail {

/// Rank of a k x c rectangular system given as row vectors.
inline size_t rect_rank(std::vector<ExactVector> rows) {
    size_t rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        GaussianRational inv = rows[rank][col].inv();
        for (size_t j = col; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            GaussianRational f = rows[i][col];
            for (size_t j = col; j < cols; ++j)
                rows[i][j] = rows[i][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace transform_detail

/// Necessary conditions for a witness with z = Z_k: the leading k x k block
/// must be nilpotent and (1,...,1)^t must lie in its image. Returns the first
/// failed condition; NoObstruction still requires the full ideal check.
inline ZkObstruction zk_image_prefilter(const ExactMatrix& a, size_t k) {
    if (k < 1 || k > a.n()) throw structural_error("k out of range");
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    ExactMatrix a11 = a.submatrix(idx, idx);
    if (!a11.is_nilpotent()) return ZkObstruction::ObstructionNilpotency;

    // (1,...,1)^t in image(A11)  <=>  rank unchanged by augmentation; the
    // image of A11 is the column space, so rank columns == rank [cols | 1].
    // Work with the transpose so columns become rows.
    std::vector<ExactVector> cols(k, ExactVector(k)), acols(k + 1, ExactVector(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            cols[j][i] = a11.at(i, j);
            acols[j][i] = a11.at(i, j);
        }
    for (size_t i = 0; i < k; ++i) acols[k][i] = GaussianRational(1);
    if (transform_detail::rect_rank(cols) != transform_detail::rect_rank(acols))
        return ZkObstruction::ObstructionImage;
    return ZkObstruction::NoObstruction;
}

}  // namespace cubiclin

#endif
