#ifndef CUBICLIN_EXACT_MATRIX_HPP
#define CUBICLIN_EXACT_MATRIX_HPP

#include <map>
#include <vector>

#include "gaussian_rational.hpp"
#include "multipoly.hpp"

namespace cubiclin {

using ExactVector = std::vector<GaussianRational>;

/// Dense square matrix over Q(i) with exact queries only.
class ExactMatrix {
public:
    ExactMatrix() : n_(0) {}
    explicit ExactMatrix(size_t n) : n_(n), e_(n * n) {}
    ExactMatrix(size_t n, std::vector<GaussianRational> entries)
        : n_(n), e_(std::move(entries)) {
        if (e_.size() != n * n) throw structural_error("entry count != n*n");
    }

    static ExactMatrix identity(size_t n) {
        ExactMatrix m(n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }

    size_t n() const { return n_; }
    GaussianRational& at(size_t i, size_t j) { return e_[i * n_ + j]; }
    const GaussianRational& at(size_t i, size_t j) const { return e_[i * n_ + j]; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.n_ != b.n_) throw structural_error("matrix dimension mismatch");
        ExactMatrix r(a.n_);
        for (size_t i = 0; i < a.n_; ++i)
            for (size_t k = 0; k < a.n_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.n_ != b.n_) throw structural_error("matrix dimension mismatch");
        ExactMatrix r(a.n_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.n_ != b.n_) throw structural_error("matrix dimension mismatch");
        ExactMatrix r(a.n_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend ExactMatrix operator*(const GaussianRational& c, const ExactMatrix& a) {
        ExactMatrix r(a.n_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
        return r;
    }

    ExactVector apply(const ExactVector& v) const {
        if (v.size() != n_) throw structural_error("vector dimension mismatch");
        ExactVector r(n_);
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(n_);
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    bool is_upper_triangular() const {
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < i; ++j)
                if (!at(i, j).is_zero()) return false;
        return true;
    }
    bool is_lower_triangular() const { return transpose().is_upper_triangular(); }

    /// Bareiss fraction-free elimination; exact.
    GaussianRational det() const {
        if (n_ == 0) return GaussianRational(1);
        ExactMatrix m = *this;
        GaussianRational prev(1);
        int sign = 1;
        for (size_t k = 0; k + 1 < n_; ++k) {
            if (m.at(k, k).is_zero()) {
                size_t p = k + 1;
                while (p < n_ && m.at(p, k).is_zero()) ++p;
                if (p == n_) return GaussianRational(0);
                for (size_t j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(p, j));
                sign = -sign;
            }
            for (size_t i = k + 1; i < n_; ++i)
                for (size_t j = k + 1; j < n_; ++j)
                    m.at(i, j) =
                        (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            prev = m.at(k, k);
        }
        GaussianRational d = m.at(n_ - 1, n_ - 1);
        return sign < 0 ? -d : d;
    }

    size_t rank() const {
        ExactMatrix m = *this;
        size_t r = 0;
        for (size_t col = 0; col < n_ && r < n_; ++col) {
            size_t p = r;
            while (p < n_ && m.at(p, col).is_zero()) ++p;
            if (p == n_) continue;
            for (size_t j = 0; j < n_; ++j) std::swap(m.at(r, j), m.at(p, j));
            GaussianRational inv = m.at(r, col).inv();
            for (size_t i = r + 1; i < n_; ++i) {
                if (m.at(i, col).is_zero()) continue;
                GaussianRational f = m.at(i, col) * inv;
                for (size_t j = col; j < n_; ++j) m.at(i, j) -= f * m.at(r, j);
            }
            ++r;
        }
        return r;
    }

    /// Inverse via Gauss-Jordan; throws on singular input.
    ExactMatrix inverse() const {
        ExactMatrix m = *this;
        ExactMatrix inv = identity(n_);
        for (size_t col = 0; col < n_; ++col) {
            size_t p = col;
            while (p < n_ && m.at(p, col).is_zero()) ++p;
            if (p == n_) throw arithmetic_error("matrix is singular");
            for (size_t j = 0; j < n_; ++j) {
                std::swap(m.at(col, j), m.at(p, j));
                std::swap(inv.at(col, j), inv.at(p, j));
            }
            GaussianRational piv = m.at(col, col).inv();
            for (size_t j = 0; j < n_; ++j) {
                m.at(col, j) *= piv;
                inv.at(col, j) *= piv;
            }
            for (size_t i = 0; i < n_; ++i) {
                if (i == col || m.at(i, col).is_zero()) continue;
                GaussianRational f = m.at(i, col);
                for (size_t j = 0; j < n_; ++j) {
                    m.at(i, j) -= f * m.at(col, j);
                    inv.at(i, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    /// Characteristic polynomial det(t*Id - M), monic of degree n, univariate
    /// in the single variable of `tuniv`. Faddeev-LeVerrier, exact.
    MultiPoly char_poly(const UniversePtr& tuniv, size_t tvar = 0) const {
        std::vector<GaussianRational> c(n_ + 1);
        c[0] = GaussianRational(1);
        ExactMatrix m(n_);  // M_0 = 0
        for (size_t k = 1; k <= n_; ++k) {
            for (size_t i = 0; i < n_; ++i) m.at(i, i) += c[k - 1];
            m = *this * m;
            GaussianRational tr(0);
            for (size_t i = 0; i < n_; ++i) tr += m.at(i, i);
            c[k] = -(tr / GaussianRational(static_cast<long>(k)));
        }
        MultiPoly p(tuniv);
        for (size_t k = 0; k <= n_; ++k) {
            Monomial mo(tuniv->size());
            mo.set(tvar, static_cast<Monomial::Exp>(n_ - k));
            p.add_term(mo, c[k]);
        }
        return p;
    }

    bool is_nilpotent() const {
        // char poly == t^n  <=>  all Faddeev-LeVerrier coefficients vanish
        std::vector<GaussianRational> c(n_ + 1);
        c[0] = GaussianRational(1);
        ExactMatrix m(n_);
        for (size_t k = 1; k <= n_; ++k) {
            for (size_t i = 0; i < n_; ++i) m.at(i, i) += c[k - 1];
            m = *this * m;
            GaussianRational tr(0);
            for (size_t i = 0; i < n_; ++i) tr += m.at(i, i);
            c[k] = -(tr / GaussianRational(static_cast<long>(k)));
            if (!c[k].is_zero()) return false;
        }
        return true;
    }

    ExactMatrix submatrix(const std::vector<size_t>& rows,
                          const std::vector<size_t>& cols) const {
        ExactMatrix r(rows.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
        return r;
    }

    GaussianRational principal_minor(const std::vector<size_t>& idx) const {
        return submatrix(idx, idx).det();
    }

    /// All principal minors of size 1..r, keyed by index subset. Subsets are
    /// enumerated by size, then lexicographically.
    std::map<std::vector<size_t>, GaussianRational> principal_minors_up_to(size_t r) const {
        std::map<std::vector<size_t>, GaussianRational> out;
        for_each_principal_subset(r, [&](const std::vector<size_t>& s) {
            out.emplace(s, principal_minor(s));
            return true;
        });
        return out;
    }

    /// Visits principal index subsets of size 1..r in canonical order;
    /// callback returns false to stop.
    template <class F>
    void for_each_principal_subset(size_t r, F&& f) const {
        std::vector<size_t> subset;
        for (size_t k = 1; k <= r && k <= n_; ++k) {
            subset.assign(k, 0);
            for (size_t i = 0; i < k; ++i) subset[i] = i;
            while (true) {
                if (!f(subset)) return;
                size_t i = k;
                bool done = true;
                while (i-- > 0) {
                    if (subset[i] != i + n_ - k) {
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

private:
    size_t n_;
    std::vector<GaussianRational> e_;
};

/// Dense square matrix of polynomials over a shared universe.
class PolyMatrix {
public:
    PolyMatrix(size_t n, UniversePtr u)
        : n_(n), universe_(std::move(u)), e_(n * n, MultiPoly(universe_)) {}

    static PolyMatrix identity(size_t n, UniversePtr u) {
        PolyMatrix m(n, std::move(u));
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = MultiPoly::constant(m.universe_, GaussianRational(1));
        return m;
    }

    size_t n() const { return n_; }
    const UniversePtr& universe() const { return universe_; }
    MultiPoly& at(size_t i, size_t j) { return e_[i * n_ + j]; }
    const MultiPoly& at(size_t i, size_t j) const { return e_[i * n_ + j]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.n_ != b.n_) throw structural_error("matrix dimension mismatch");
        PolyMatrix r(a.n_, a.universe_);
        for (size_t i = 0; i < a.n_; ++i)
            for (size_t k = 0; k < a.n_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < a.n_; ++j)
                    if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    /// Determinant by expansion along rows with memoization on column
    /// subsets; suited to the small symbolic matrices used here.
    MultiPoly det() const {
        if (n_ == 0) return MultiPoly::constant(universe_, GaussianRational(1));
        std::map<uint64_t, MultiPoly> memo;
        return det_rec(0, (uint64_t(1) << n_) - 1, memo);
    }

    /// adj(M) with M * adj(M) == det(M) * Id.
    PolyMatrix adjugate() const {
        PolyMatrix r(n_, universe_);
        if (n_ == 1) {
            r.at(0, 0) = MultiPoly::constant(universe_, GaussianRational(1));
            return r;
        }
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j) {
                MultiPoly c = minor_det(j, i);  // cofactor C_ji, transposed
                if ((i + j) % 2 == 1) c = -c;
                r.at(i, j) = std::move(c);
            }
        return r;
    }

private:
    MultiPoly det_rec(size_t row, uint64_t cols, std::map<uint64_t, MultiPoly>& memo) const {
        if (cols == 0) return MultiPoly::constant(universe_, GaussianRational(1));
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        MultiPoly acc(universe_);
        int sign = 1;
        for (size_t j = 0; j < n_; ++j) {
            if (!(cols & (uint64_t(1) << j))) continue;
            if (!at(row, j).is_zero()) {
                MultiPoly sub = det_rec(row + 1, cols & ~(uint64_t(1) << j), memo);
                MultiPoly contrib = at(row, j) * sub;
                if (sign < 0) contrib = -contrib;
                acc += contrib;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    }

    MultiPoly minor_det(size_t drop_row, size_t drop_col) const {
        PolyMatrix sub(n_ - 1, universe_);
        size_t r = 0;
        for (size_t i = 0; i < n_; ++i) {
            if (i == drop_row) continue;
            size_t c = 0;
            for (size_t j = 0; j < n_; ++j) {
                if (j == drop_col) continue;
                sub.at(r, c) = at(i, j);
                ++c;
            }
            ++r;
        }
        return sub.det();
    }

    size_t n_;
    UniversePtr universe_;
    std::vector<MultiPoly> e_;
};

inline PolyMatrix adjugate_polymatrix(const PolyMatrix& m) { return m.adjugate(); }

}  // namespace cubiclin

#endif
