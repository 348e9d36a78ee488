#ifndef CUBICLIN_MULTIPOLY_HPP
#define CUBICLIN_MULTIPOLY_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gaussian_rational.hpp"
#include "monomial.hpp"

namespace cubiclin {

/// Sparse multivariate polynomial over Q(i). Terms are kept in a map with a
/// fixed storage order, so iteration is deterministic; no zero coefficients
/// are ever stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialStorageLess>;

    MultiPoly() = default;
    explicit MultiPoly(UniversePtr u) : universe_(std::move(u)) {}

    static MultiPoly zero(UniversePtr u) { return MultiPoly(std::move(u)); }

    static MultiPoly constant(UniversePtr u, GaussianRational c) {
        MultiPoly p(std::move(u));
        if (!c.is_zero()) p.terms_.emplace(Monomial(p.universe_->size()), std::move(c));
        return p;
    }

    static MultiPoly variable(UniversePtr u, size_t idx, Monomial::Exp power = 1) {
        MultiPoly p(u);
        Monomial m(u->size());
        m.set(idx, power);
        p.terms_.emplace(std::move(m), GaussianRational(1));
        return p;
    }

    static MultiPoly term(UniversePtr u, Monomial m, GaussianRational c) {
        MultiPoly p(std::move(u));
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const UniversePtr& universe() const { return universe_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    GaussianRational constant_value() const {
        if (terms_.empty()) return GaussianRational(0);
        return terms_.begin()->first.is_one() ? terms_.begin()->second : GaussianRational(0);
    }

    Monomial::Exp total_degree() const {
        Monomial::Exp d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.universe_);
        for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& b) {
        check_same(*this, b);
        for (auto& [m, c] : b.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& b) {
        check_same(*this, b);
        for (auto& [m, c] : b.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_same(a, b);
        MultiPoly r(a.universe_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    friend MultiPoly operator*(const MultiPoly& a, const GaussianRational& c) {
        MultiPoly r(a.universe_);
        if (c.is_zero()) return r;
        for (auto& [m, k] : a.terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    friend MultiPoly operator*(const GaussianRational& c, const MultiPoly& a) { return a * c; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(universe_, GaussianRational(1));
        MultiPoly base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return same_universe(a.universe_, b.universe_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// d/d(var idx).
    MultiPoly derivative(size_t idx) const {
        MultiPoly r(universe_);
        for (auto& [m, c] : terms_) {
            Monomial::Exp e = m[idx];
            if (e == 0) continue;
            Monomial dm = m;
            dm.set(idx, e - 1);
            r.add_term(dm, c * GaussianRational(static_cast<long>(e)));
        }
        return r;
    }

    GaussianRational evaluate(const std::vector<GaussianRational>& point) const {
        if (point.size() != universe_->size())
            throw structural_error("evaluation point arity mismatch");
        GaussianRational sum(0);
        for (auto& [m, c] : terms_) {
            GaussianRational v = c;
            for (size_t i = 0; i < point.size(); ++i)
                for (Monomial::Exp e = 0; e < m[i]; ++e) v *= point[i];
            sum += v;
        }
        return sum;
    }

    /// Ring homomorphism. Variables present in `assignment` map to the given
    /// images (all over `target`); every other variable with a nonzero
    /// exponent must exist by name in the target universe.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment,
                         const UniversePtr& target) const {
        std::vector<const MultiPoly*> image(universe_->size(), nullptr);
        std::vector<long> pass_through(universe_->size(), -1);
        for (auto& [name, img] : assignment) {
            if (!universe_->contains(name))
                throw structural_error("assignment key not in universe: " + name);
            if (!same_universe(img.universe(), target))
                throw structural_error("assignment image universe mismatch for " + name);
            image[universe_->index_of(name)] = &img;
        }
        MultiPoly result(target);
        for (auto& [m, c] : terms_) {
            MultiPoly acc = MultiPoly::constant(target, c);
            for (size_t i = 0; i < universe_->size(); ++i) {
                Monomial::Exp e = m[i];
                if (e == 0) continue;
                if (image[i]) {
                    acc *= image[i]->pow(e);
                } else {
                    if (pass_through[i] < 0) {
                        const std::string& nm = universe_->name(i);
                        if (!target->contains(nm))
                            throw structural_error("unassigned variable absent from target: " + nm);
                        pass_through[i] = static_cast<long>(target->index_of(nm));
                    }
                    acc *= MultiPoly::variable(target, static_cast<size_t>(pass_through[i]), e);
                }
            }
            result += acc;
        }
        return result;
    }

    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const {
        UniversePtr target =
            assignment.empty() ? universe_ : assignment.begin()->second.universe();
        return substitute(assignment, target);
    }

    /// Groups the terms of p by their monomial in `pivot_vars`. Returns
    /// (pivot monomial, coefficient polynomial) pairs, pivot monomials in
    /// decreasing grevlex order; Sum coeff_i * mono_i == p exactly.
    std::vector<std::pair<Monomial, MultiPoly>> collect_coefficients(
        const std::set<size_t>& pivot_vars) const {
        std::map<Monomial, MultiPoly, MonomialStorageLess> groups;
        size_t n = universe_->size();
        for (auto& [m, c] : terms_) {
            Monomial pivot(n), rest(n);
            for (size_t i = 0; i < n; ++i) {
                if (pivot_vars.count(i))
                    pivot.set(i, m[i]);
                else
                    rest.set(i, m[i]);
            }
            auto it = groups.find(pivot);
            if (it == groups.end()) it = groups.emplace(pivot, MultiPoly(universe_)).first;
            it->second.add_term(rest, c);
        }
        std::vector<std::pair<Monomial, MultiPoly>> out(groups.begin(), groups.end());
        MonomialOrder ord = MonomialOrder::grevlex();
        std::sort(out.begin(), out.end(),
                  [&](auto& a, auto& b) { return ord.compare(a.first, b.first) > 0; });
        return out;
    }

    /// Leading term w.r.t. an order; poly must be nonzero.
    std::pair<Monomial, GaussianRational> leading_term(const MonomialOrder& ord) const {
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    /// Canonical text: terms in decreasing grevlex order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const TermMap::value_type*> ts;
        ts.reserve(terms_.size());
        for (auto& t : terms_) ts.push_back(&t);
        MonomialOrder ord = MonomialOrder::grevlex();
        std::sort(ts.begin(), ts.end(),
                  [&](auto* a, auto* b) { return ord.compare(a->first, b->first) > 0; });
        std::string out;
        for (auto* t : ts) {
            const auto& [m, c] = *t;
            std::string cs;
            bool negated = false;
            if (c.is_rational()) {
                mpq_class q = c.re();
                if (q < 0) {
                    negated = true;
                    q = -q;
                }
                cs = q.get_str();
            } else {
                cs = "(" + c.to_string() + ")";
            }
            if (!out.empty())
                out += negated ? " - " : " + ";
            else if (negated)
                out += "-";
            if (m.is_one())
                out += cs;
            else if (cs == "1")
                out += m.to_string(*universe_);
            else
                out += cs + "*" + m.to_string(*universe_);
        }
        return out;
    }

private:
    static void check_same(const MultiPoly& a, const MultiPoly& b) {
        if (!same_universe(a.universe_, b.universe_))
            throw structural_error("polynomial universe mismatch");
    }

    UniversePtr universe_;
    TermMap terms_;
};

}  // namespace cubiclin

#endif
