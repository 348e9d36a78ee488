#ifndef CUBICLIN_MONOMIAL_HPP
#define CUBICLIN_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cubiclin {

struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered set of distinct variable names. Indices are stable for the
/// life of the universe; polynomials reference their universe by shared_ptr.
class VarUniverse {
public:
    explicit VarUniverse(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            auto [it, fresh] = index_.emplace(names_[i], i);
            if (!fresh) throw structural_error("duplicate variable name: " + names_[i]);
        }
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& n) const { return index_.count(n) != 0; }
    size_t index_of(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) throw structural_error("unknown variable: " + n);
        return it->second;
    }

    bool operator==(const VarUniverse& o) const { return names_ == o.names_; }

    /// "z1".."zn" style run of indexed names.
    static std::vector<std::string> indexed(const std::string& prefix, size_t n) {
        std::vector<std::string> out;
        out.reserve(n);
        for (size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
        return out;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, size_t> index_;
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

inline UniversePtr make_universe(std::vector<std::string> names) {
    return std::make_shared<const VarUniverse>(std::move(names));
}

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent vector aligned with a VarUniverse.
class Monomial {
public:
    using Exp = uint32_t;

    Monomial() = default;
    explicit Monomial(size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<Exp> exp) : exp_(std::move(exp)) {
        deg_ = std::accumulate(exp_.begin(), exp_.end(), Exp(0));
    }

    size_t nvars() const { return exp_.size(); }
    Exp operator[](size_t i) const { return exp_[i]; }
    Exp degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    const std::vector<Exp>& exponents() const { return exp_; }

    void set(size_t i, Exp e) {
        deg_ = deg_ - exp_[i] + e;
        exp_[i] = e;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.exp_.size());
        for (size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    bool divides(const Monomial& m) const {
        if (deg_ > m.deg_) return false;
        for (size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > m.exp_[i]) return false;
        return true;
    }

    /// this / m; requires m.divides(*this).
    Monomial quotient(const Monomial& m) const {
        Monomial r(exp_.size());
        for (size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = exp_[i] - m.exp_[i];
        r.deg_ = deg_ - m.deg_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exp_.size());
        Monomial::Exp d = 0;
        for (size_t i = 0; i < a.exp_.size(); ++i) {
            r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
            d += r.exp_[i];
        }
        r.deg_ = d;
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.exp_.size(); ++i)
            if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Plain exponent-vector comparison; the storage order of MultiPoly terms.
    /// Not multiplicative, only used for canonical container ordering.
    friend bool storage_less(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

    std::string to_string(const VarUniverse& u) const {
        if (is_one()) return "1";
        std::string out;
        for (size_t i = 0; i < exp_.size(); ++i) {
            if (exp_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += u.name(i);
            if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
        }
        return out;
    }

private:
    std::vector<Exp> exp_;
    Exp deg_ = 0;
};

struct MonomialStorageLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return storage_less(a, b); }
};

/// Total multiplicative monomial order with 1 minimal.
/// kind: lex, grevlex, or block(split, inner orders on the two index ranges).
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
    /// Variables [0, split) dominate variables [split, n); each block compared
    /// by its own inner order.
    static MonomialOrder block(size_t split, MonomialOrder first, MonomialOrder second) {
        MonomialOrder o(Kind::Block);
        o.split_ = split;
        o.first_ = std::make_shared<MonomialOrder>(std::move(first));
        o.second_ = std::make_shared<MonomialOrder>(std::move(second));
        return o;
    }

    Kind kind() const { return kind_; }

    /// Three-way compare: negative if a < b, 0 if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::Grevlex) {  // fast path using the cached degrees
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            for (size_t i = a.nvars(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
            }
            return 0;
        }
        return compare_range(a, b, 0, a.nvars());
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::Grevlex: return "grevlex";
            case Kind::Block:
                return "block(" + std::to_string(split_) + "," + first_->to_string() + "," +
                       second_->to_string() + ")";
        }
        return "?";
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    int compare_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) const {
        switch (kind_) {
            case Kind::Lex: {
                for (size_t i = lo; i < hi; ++i) {
                    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                }
                return 0;
            }
            case Kind::Grevlex: {
                long da = 0, db = 0;
                for (size_t i = lo; i < hi; ++i) {
                    da += a[i];
                    db += b[i];
                }
                if (da != db) return da < db ? -1 : 1;
                // reverse scan, smaller trailing exponent wins
                for (size_t i = hi; i-- > lo;) {
                    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
                }
                return 0;
            }
            case Kind::Block: {
                size_t mid = std::min(lo + split_, hi);
                int c = first_->compare_range(a, b, lo, mid);
                if (c != 0) return c;
                return second_->compare_range(a, b, mid, hi);
            }
        }
        return 0;
    }

    Kind kind_;
    size_t split_ = 0;
    std::shared_ptr<MonomialOrder> first_, second_;
};

}  // namespace cubiclin

#endif
