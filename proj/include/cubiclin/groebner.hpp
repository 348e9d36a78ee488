#ifndef CUBICLIN_GROEBNER_HPP
#define CUBICLIN_GROEBNER_HPP

#include <chrono>
#include <optional>
#include <set>
#include <vector>

#include "poly_system.hpp"

namespace cubiclin {

/// Hard limits for one engine run. Exceeding any limit aborts the run with
/// an incomplete (UNKNOWN) result, never a wrong one.
struct ResourceBudget {
    double wall_seconds = 300.0;
    size_t max_pairs = SIZE_MAX;  // pair-queue limit (pairs considered)
    size_t max_terms = SIZE_MAX;  // per-polynomial term cap during reduction
};

struct BuchbergerOptions {
    bool track_cofactors = false;
    bool product_criterion = true;  // coprime-leading-term criterion
    bool chain_criterion = true;    // Gebauer-Moeller chain rules
    bool presimplify = true;        // inter-reduce the input before pairing
};

struct GroebnerStats {
    size_t pairs_considered = 0;
    size_t pairs_reduced = 0;
    size_t reduction_steps = 0;
    size_t basis_size = 0;
    double elapsed_seconds = 0.0;
};

/// Output of one Buchberger run. When complete, `basis` is the reduced
/// Groebner basis: auto-reduced, monic, sorted by increasing leading
/// monomial. When cofactors are tracked, basis[i] == sum_j cofactors[i][j] *
/// generators[j] exactly.
struct GroebnerResult {
    bool completed = false;
    std::string abort_reason;  // set when !completed
    UniversePtr universe;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<MultiPoly> basis;
    std::vector<std::vector<MultiPoly>> cofactors;  // empty unless tracked
    std::vector<MultiPoly> generators;              // the input, as run
    GroebnerStats stats;
};

namespace gbdetail {

using Term = std::pair<Monomial, GaussianRational>;

/// Terms sorted strictly descending in the engine order.
struct VPoly {
    std::vector<Term> t;
    bool is_zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().first; }
    const GaussianRational& lc() const { return t.front().second; }
};

inline VPoly to_vpoly(const MultiPoly& p, const MonomialOrder& ord) {
    VPoly v;
    v.t.reserve(p.term_count());
    for (auto& [m, c] : p.terms()) v.t.emplace_back(m, c);
    std::sort(v.t.begin(), v.t.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.first, b.first) > 0; });
    return v;
}

inline MultiPoly from_vpoly(const VPoly& v, const UniversePtr& u) {
    MultiPoly p(u);
    for (auto& [m, c] : v.t) p.add_term(m, c);
    return p;
}

/// terms[from..] := terms[from..] - c * mono * g, merging sorted term lists.
/// Returns the merged tail as a fresh vector (prefix [0, from) is untouched
/// and not included).
inline std::vector<Term> sub_mul_tail(std::vector<Term>& terms, size_t from, const VPoly& g,
                                      const GaussianRational& c, const Monomial& mono,
                                      const MonomialOrder& ord) {
    std::vector<Term> out;
    out.reserve(terms.size() - from + g.t.size());
    size_t i = from, j = 0;
    while (i < terms.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.push_back(std::move(terms[i++]));
            continue;
        }
        Monomial gm = g.t[j].first * mono;
        int cmp = i == terms.size() ? -1 : ord.compare(terms[i].first, gm);
        if (cmp > 0) {
            out.push_back(std::move(terms[i++]));
        } else if (cmp < 0) {
            GaussianRational nc = -(c * g.t[j].second);
            if (!nc.is_zero()) out.emplace_back(std::move(gm), std::move(nc));
            ++j;
        } else {
            GaussianRational nc = terms[i].second - c * g.t[j].second;
            if (!nc.is_zero()) out.emplace_back(std::move(gm), std::move(nc));
            ++i;
            ++j;
        }
    }
    return out;
}

/// f := f - c * mono * g.
inline void sub_mul(VPoly& f, const VPoly& g, const GaussianRational& c, const Monomial& mono,
                    const MonomialOrder& ord) {
    f.t = sub_mul_tail(f.t, 0, g, c, mono, ord);
}

/// Geobucket accumulator: terms live in buckets of capacity 4^(i+1), each
/// sorted ascending (max at the back). Keeps reduction merge traffic
/// near-linear instead of quadratic in the tail length.
struct Geobucket {
    explicit Geobucket(const MonomialOrder& o) : ord(&o) {}

    const MonomialOrder* ord;
    std::vector<std::vector<Term>> b;
    size_t total = 0;

    static size_t cap(size_t i) { return size_t(1) << (2 * i + 2); }

    std::vector<Term> merge2(std::vector<Term>&& x, std::vector<Term>&& y) const {
        std::vector<Term> out;
        out.reserve(x.size() + y.size());
        size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (i == x.size()) {
                out.push_back(std::move(y[j++]));
            } else if (j == y.size()) {
                out.push_back(std::move(x[i++]));
            } else {
                int c = ord->compare(x[i].first, y[j].first);
                if (c < 0) {
                    out.push_back(std::move(x[i++]));
                } else if (c > 0) {
                    out.push_back(std::move(y[j++]));
                } else {
                    GaussianRational s = x[i].second + y[j].second;
                    if (!s.is_zero()) out.emplace_back(std::move(x[i].first), std::move(s));
                    ++i;
                    ++j;
                }
            }
        }
        return out;
    }

    /// f must be sorted ascending.
    void add(std::vector<Term>&& f) {
        if (f.empty()) return;
        size_t i = 0;
        while (cap(i) < f.size()) ++i;
        while (true) {
            if (i >= b.size()) b.resize(i + 1);
            if (b[i].empty()) {
                total += f.size();
                b[i] = std::move(f);
                return;
            }
            total -= b[i].size();
            f = merge2(std::move(b[i]), std::move(f));
            b[i].clear();
            if (f.size() <= cap(i)) {
                total += f.size();
                b[i] = std::move(f);
                return;
            }
            ++i;
        }
    }

    /// f sorted descending (the VPoly convention).
    void add_descending(std::vector<Term>&& f) {
        std::reverse(f.begin(), f.end());
        add(std::move(f));
    }

    /// Extracts the maximal term (summing duplicates across buckets,
    /// skipping cancellations); false when empty.
    bool pop_max(Term& out_t) {
        while (true) {
            int best = -1;
            for (size_t i = 0; i < b.size(); ++i) {
                if (b[i].empty()) continue;
                if (best < 0 || ord->compare(b[i].back().first, b[best].back().first) > 0)
                    best = static_cast<int>(i);
            }
            if (best < 0) return false;
            Monomial m = std::move(b[best].back().first);
            GaussianRational c = std::move(b[best].back().second);
            b[best].pop_back();
            --total;
            for (size_t i = 0; i < b.size(); ++i) {
                if (static_cast<int>(i) == best || b[i].empty()) continue;
                if (b[i].back().first == m) {
                    c += b[i].back().second;
                    b[i].pop_back();
                    --total;
                }
            }
            if (!c.is_zero()) {
                out_t = {std::move(m), std::move(c)};
                return true;
            }
        }
    }
};

inline void make_monic(VPoly& f, GaussianRational& scale_out) {
    scale_out = GaussianRational(1);
    if (f.is_zero() || f.lc().is_one()) return;
    GaussianRational inv = f.lc().inv();
    scale_out = inv;
    for (auto& [m, c] : f.t) c *= inv;
}

}  // namespace gbdetail

/// Deterministic Buchberger with sugar-tiebreak normal pair selection,
/// Gebauer-Moeller criteria and optional exact cofactor tracking.
class GroebnerEngine {
public:
    GroebnerEngine(UniversePtr universe, MonomialOrder order, ResourceBudget budget,
                   BuchbergerOptions opts)
        : u_(std::move(universe)), ord_(std::move(order)), budget_(budget), opts_(opts) {}

    GroebnerResult run(const std::vector<MultiPoly>& generators) {
        start_ = Clock::now();
        GroebnerResult res;
        res.universe = u_;
        res.order = ord_;
        res.generators = generators;
        ngens_ = generators.size();

        for (size_t i = 0; i < generators.size(); ++i) {
            gbdetail::VPoly v = gbdetail::to_vpoly(generators[i], ord_);
            Rep rep;
            if (opts_.track_cofactors) {
                rep.assign(ngens_, MultiPoly(u_));
                rep[i] = MultiPoly::constant(u_, GaussianRational(1));
            }
            if (!v.is_zero()) add_element(std::move(v), std::move(rep));
            if (unit_found_) break;
        }
        if (!unit_found_ && opts_.presimplify) presimplify();

        if (!unit_found_) {
            while (!pairs_.empty()) {
                if (out_of_budget(res)) return res;
                auto it = pairs_.begin();
                Pair pr = *it;
                pairs_.erase(it);
                ++stats_.pairs_considered;
                reduce_spair(pr);
                if (aborted_) {
                    finalize_abort(res);
                    return res;
                }
                if (unit_found_) break;
            }
        }

        build_reduced_basis(res);
        if (aborted_) {
            finalize_abort(res);
            return res;
        }
        res.completed = true;
        stats_.basis_size = res.basis.size();
        stats_.elapsed_seconds = elapsed();
        res.stats = stats_;
        return res;
    }

private:
    using Clock = std::chrono::steady_clock;
    using Rep = std::vector<MultiPoly>;  // cofactors over the input generators

    struct Pair {
        size_t i, j;
        Monomial lcm;
        unsigned sugar;
    };
    struct PairCmp {
        const MonomialOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            int c = ord->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    bool out_of_budget(GroebnerResult& res) {
        const char* why = nullptr;
        if (elapsed() > budget_.wall_seconds) why = "wall-clock limit exceeded";
        else if (stats_.pairs_considered > budget_.max_pairs) why = "pair limit exceeded";
        if (!why) return false;
        aborted_ = true;
        abort_reason_ = why;
        finalize_abort(res);
        return true;
    }

    void finalize_abort(GroebnerResult& res) {
        res.completed = false;
        res.abort_reason = abort_reason_;
        stats_.basis_size = 0;
        stats_.elapsed_seconds = elapsed();
        res.stats = stats_;
        res.basis.clear();
        res.cofactors.clear();
    }

    // ---- cofactor bookkeeping -------------------------------------------

    static void rep_sub_mul(Rep& dst, const GaussianRational& c, const Monomial& mono,
                            const Rep& src, const UniversePtr& u) {
        for (size_t k = 0; k < dst.size(); ++k) {
            for (auto& [m, sc] : src[k].terms()) dst[k].add_term(m * mono, -(c * sc));
        }
        (void)u;
    }

    static void rep_scale(Rep& dst, const GaussianRational& c) {
        for (auto& p : dst) p = p * c;
    }

    // ---- reduction ------------------------------------------------------

    /// Full normal form of f against the current basis; updates rep and sugar.
    /// Returns false if a resource limit tripped.
    bool reduce_full(gbdetail::VPoly& f, Rep& rep, unsigned& sugar) {
        std::vector<gbdetail::Term> out;
        gbdetail::Geobucket gb(ord_);
        gb.add_descending(std::move(f.t));
        gbdetail::Term t;
        size_t steps_since_check = 0;
        while (gb.pop_max(t)) {
            if (++steps_since_check >= 256) {
                steps_since_check = 0;
                if (elapsed() > budget_.wall_seconds) {
                    aborted_ = true;
                    abort_reason_ = "wall-clock limit exceeded";
                    return false;
                }
            }
            if (gb.total + out.size() > budget_.max_terms) {
                aborted_ = true;
                abort_reason_ = "term limit exceeded";
                return false;
            }
            size_t red = SIZE_MAX;
            for (size_t k = 0; k < basis_.size(); ++k) {
                if (alive_[k] && lm_[k].divides(t.first)) {
                    red = k;
                    break;
                }
            }
            if (red == SIZE_MAX) {
                out.push_back(std::move(t));
                continue;
            }
            Monomial q = t.first.quotient(lm_[red]);
            GaussianRational c = t.second;  // basis elements are monic
            // the popped head cancels against c*q*lead(g); feed in the tail
            const auto& g = basis_[red].t;
            std::vector<gbdetail::Term> sub;
            sub.reserve(g.size() - 1);
            for (size_t idx = g.size(); idx-- > 1;)
                sub.emplace_back(g[idx].first * q, -(c * g[idx].second));
            gb.add(std::move(sub));
            if (opts_.track_cofactors) rep_sub_mul(rep, c, q, reps_[red], u_);
            sugar = std::max(sugar, sugar_[red] + q.degree());
            ++stats_.reduction_steps;
        }
        f.t = std::move(out);
        return true;
    }

    void reduce_spair(const Pair& pr) {
        const Monomial& L = pr.lcm;
        gbdetail::VPoly s;
        // s = (L/lm_i)*g_i - (L/lm_j)*g_j, both monic
        Monomial qi = L.quotient(lm_[pr.i]);
        Monomial qj = L.quotient(lm_[pr.j]);
        s.t.reserve(basis_[pr.i].t.size());
        for (auto& [m, c] : basis_[pr.i].t) s.t.emplace_back(m * qi, c);
        gbdetail::sub_mul(s, basis_[pr.j], GaussianRational(1), qj, ord_);
        Rep rep;
        if (opts_.track_cofactors) {
            rep.assign(ngens_, MultiPoly(u_));
            rep_sub_mul(rep, GaussianRational(-1), qi, reps_[pr.i], u_);
            rep_sub_mul(rep, GaussianRational(1), qj, reps_[pr.j], u_);
        }
        unsigned sugar = std::max(sugar_[pr.i] + qi.degree(), sugar_[pr.j] + qj.degree());
        if (!reduce_full(s, rep, sugar)) return;
        ++stats_.pairs_reduced;
        if (s.is_zero()) return;
        GaussianRational scale;
        gbdetail::make_monic(s, scale);
        if (opts_.track_cofactors && !scale.is_one()) rep_scale(rep, scale);
        add_element(std::move(s), std::move(rep), sugar);
    }

    // ---- basis growth and pair management -------------------------------

    void add_element(gbdetail::VPoly v, Rep rep, unsigned sugar_hint = 0) {
        GaussianRational scale;
        gbdetail::make_monic(v, scale);
        if (opts_.track_cofactors && !scale.is_one()) rep_scale(rep, scale);
        if (v.lm().is_one()) {
            unit_found_ = true;
            unit_rep_ = std::move(rep);
            return;
        }
        size_t t = basis_.size();
        unsigned sug = sugar_hint ? sugar_hint : v.lm().degree() + tail_degree(v);
        basis_.push_back(std::move(v));
        lm_.push_back(basis_.back().lm());
        sugar_.push_back(sug);
        alive_.push_back(true);
        reps_.push_back(std::move(rep));
        update_pairs(t);
    }

    static unsigned tail_degree(const gbdetail::VPoly& v) {
        unsigned d = 0;
        for (auto& [m, c] : v.t) d = std::max(d, m.degree());
        return d > v.lm().degree() ? d - v.lm().degree() : 0;
    }

    /// Gebauer-Moeller update for new element t.
    void update_pairs(size_t t) {
        struct Cand {
            size_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (size_t i = 0; i < t; ++i) {
            if (!alive_[i]) continue;
            cands.push_back({i, lcm(lm_[i], lm_[t]), coprime(lm_[i], lm_[t])});
        }
        std::vector<bool> drop(cands.size(), false);
        if (opts_.chain_criterion) {
            // M rule: drop (i,t) if some (j,t) lcm properly divides it
            for (size_t a = 0; a < cands.size(); ++a) {
                for (size_t b = 0; b < cands.size(); ++b) {
                    if (a == b || drop[b]) continue;
                    if (cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(cands[a].lcm)) {
                        drop[a] = true;
                        break;
                    }
                }
            }
            // F rule: among equal lcms keep the first; B(product) handled below
            for (size_t a = 0; a < cands.size(); ++a) {
                if (drop[a]) continue;
                for (size_t b = a + 1; b < cands.size(); ++b) {
                    if (!drop[b] && cands[b].lcm == cands[a].lcm) {
                        if (cands[b].coprime) cands[a].coprime = true;
                        drop[b] = true;
                    }
                }
            }
            // old-pair B rule
            for (auto it = pairs_.begin(); it != pairs_.end();) {
                const Pair& p = *it;
                if (lm_[t].divides(p.lcm) && lcm(lm_[p.i], lm_[t]) != p.lcm &&
                    lcm(lm_[p.j], lm_[t]) != p.lcm) {
                    it = pairs_.erase(it);
                } else {
                    ++it;
                }
            }
        }
        for (size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            if (opts_.product_criterion && cands[a].coprime) continue;
            size_t i = cands[a].i;
            Monomial L = cands[a].lcm;
            unsigned sug = std::max(sugar_[i] + L.quotient(lm_[i]).degree(),
                                    sugar_[t] + L.quotient(lm_[t]).degree());
            pairs_.insert(Pair{i, t, std::move(L), sug});
        }
    }

    /// One inter-reduction sweep over the input elements before pairing.
    void presimplify() {
        bool changed = true;
        size_t rounds = 0;
        while (changed && rounds++ < 8) {
            changed = false;
            for (size_t i = 0; i < basis_.size(); ++i) {
                if (!alive_[i]) continue;
                gbdetail::VPoly f = basis_[i];
                Rep rep = reps_[i];
                unsigned sug = sugar_[i];
                alive_[i] = false;  // reduce against the others only
                bool ok = reduce_full(f, rep, sug);
                if (!ok) {
                    aborted_ = false;  // presimplify overruns are not fatal
                    abort_reason_.clear();
                    alive_[i] = true;
                    continue;
                }
                if (f.is_zero()) {
                    changed = true;  // stays dead
                    continue;
                }
                GaussianRational scale;
                gbdetail::make_monic(f, scale);
                if (f.lm().is_one()) {
                    if (opts_.track_cofactors && !scale.is_one()) rep_scale(rep, scale);
                    unit_found_ = true;
                    unit_rep_ = std::move(rep);
                    return;
                }
                if (!(f.t == basis_[i].t)) changed = true;
                if (opts_.track_cofactors && !scale.is_one()) rep_scale(rep, scale);
                basis_[i] = std::move(f);
                lm_[i] = basis_[i].lm();
                sugar_[i] = sug;
                reps_[i] = std::move(rep);
                alive_[i] = true;
            }
        }
        // pairs were created before simplification; rebuild them cleanly
        pairs_.clear();
        std::vector<size_t> live;
        for (size_t i = 0; i < basis_.size(); ++i)
            if (alive_[i]) live.push_back(i);
        for (size_t a = 0; a < live.size(); ++a) {
            // replay Gebauer-Moeller incrementally
            size_t t = live[a];
            std::vector<bool> save_alive = alive_;
            for (size_t b = a; b < live.size(); ++b) alive_[live[b]] = false;
            alive_[t] = false;
            update_pairs_among(t, live, a);
            alive_ = std::move(save_alive);
        }
    }

    void update_pairs_among(size_t t, const std::vector<size_t>& live, size_t upto) {
        // same rules as update_pairs but over live[0..upto)
        struct Cand {
            size_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (size_t b = 0; b < upto; ++b) {
            size_t i = live[b];
            cands.push_back({i, lcm(lm_[i], lm_[t]), coprime(lm_[i], lm_[t])});
        }
        std::vector<bool> drop(cands.size(), false);
        if (opts_.chain_criterion) {
            for (size_t a = 0; a < cands.size(); ++a)
                for (size_t b = 0; b < cands.size(); ++b) {
                    if (a == b || drop[b]) continue;
                    if (cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(cands[a].lcm)) {
                        drop[a] = true;
                        break;
                    }
                }
            for (size_t a = 0; a < cands.size(); ++a) {
                if (drop[a]) continue;
                for (size_t b = a + 1; b < cands.size(); ++b)
                    if (!drop[b] && cands[b].lcm == cands[a].lcm) {
                        if (cands[b].coprime) cands[a].coprime = true;
                        drop[b] = true;
                    }
            }
            for (auto it = pairs_.begin(); it != pairs_.end();) {
                const Pair& p = *it;
                if (lm_[t].divides(p.lcm) && lcm(lm_[p.i], lm_[t]) != p.lcm &&
                    lcm(lm_[p.j], lm_[t]) != p.lcm)
                    it = pairs_.erase(it);
                else
                    ++it;
            }
        }
        for (size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            if (opts_.product_criterion && cands[a].coprime) continue;
            size_t i = cands[a].i;
            Monomial L = cands[a].lcm;
            unsigned sug = std::max(sugar_[i] + L.quotient(lm_[i]).degree(),
                                    sugar_[t] + L.quotient(lm_[t]).degree());
            pairs_.insert(Pair{i, t, std::move(L), sug});
        }
    }

    // ---- output ---------------------------------------------------------

    void build_reduced_basis(GroebnerResult& res) {
        if (unit_found_) {
            res.basis = {MultiPoly::constant(u_, GaussianRational(1))};
            if (opts_.track_cofactors) res.cofactors = {unit_rep_};
            return;
        }
        // minimal generating leads
        std::vector<size_t> keep;
        for (size_t i = 0; i < basis_.size(); ++i) {
            if (!alive_[i]) continue;
            bool redundant = false;
            for (size_t j = 0; j < basis_.size(); ++j) {
                if (i == j || !alive_[j]) continue;
                if (lm_[j].divides(lm_[i]) && (lm_[j] != lm_[i] || j < i)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) keep.push_back(i);
        }
        std::sort(keep.begin(), keep.end(),
                  [&](size_t a, size_t b) { return ord_.compare(lm_[a], lm_[b]) < 0; });
        // tail-reduce each kept element against the others
        std::vector<gbdetail::VPoly> red;
        std::vector<Rep> redrep;
        std::vector<bool> save_alive = alive_;
        for (size_t idx : keep) {
            gbdetail::VPoly f = basis_[idx];
            Rep rep = reps_[idx];
            unsigned sug = sugar_[idx];
            alive_.assign(alive_.size(), false);
            for (size_t other : keep)
                if (other != idx) alive_[other] = true;
            if (!reduce_full(f, rep, sug)) {
                alive_ = save_alive;
                return;  // aborted_
            }
            alive_ = save_alive;
            GaussianRational scale;
            gbdetail::make_monic(f, scale);
            if (opts_.track_cofactors && !scale.is_one()) rep_scale(rep, scale);
            red.push_back(std::move(f));
            redrep.push_back(std::move(rep));
        }
        for (size_t k = 0; k < red.size(); ++k) {
            res.basis.push_back(gbdetail::from_vpoly(red[k], u_));
            if (opts_.track_cofactors) res.cofactors.push_back(redrep[k]);
        }
    }

    UniversePtr u_;
    MonomialOrder ord_;
    ResourceBudget budget_;
    BuchbergerOptions opts_;

    size_t ngens_ = 0;
    std::vector<gbdetail::VPoly> basis_;
    std::vector<Monomial> lm_;
    std::vector<unsigned> sugar_;
    std::vector<bool> alive_;
    std::vector<Rep> reps_;
    std::set<Pair, PairCmp> pairs_{PairCmp{&ord_}};

    bool unit_found_ = false;
    Rep unit_rep_;
    bool aborted_ = false;
    std::string abort_reason_;
    GroebnerStats stats_;
    Clock::time_point start_;
};

inline GroebnerResult buchberger(const PolySystem& system, const MonomialOrder& order,
                                 const ResourceBudget& budget = {},
                                 const BuchbergerOptions& opts = {}) {
    GroebnerEngine eng(system.universe(), order, budget, opts);
    return eng.run(system.generators());
}

/// Remainder of p under the division algorithm modulo result.basis.
inline MultiPoly normal_form(const MultiPoly& p, const GroebnerResult& result) {
    if (!same_universe(p.universe(), result.universe))
        throw structural_error("normal_form universe mismatch");
    const MonomialOrder& ord = result.order;
    std::vector<gbdetail::VPoly> basis;
    for (auto& b : result.basis) basis.push_back(gbdetail::to_vpoly(b, ord));
    gbdetail::Geobucket gb(ord);
    gb.add_descending(std::move(gbdetail::to_vpoly(p, ord).t));
    std::vector<gbdetail::Term> out;
    gbdetail::Term t;
    while (gb.pop_max(t)) {
        size_t red = SIZE_MAX;
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k].lm().divides(t.first)) {
                red = k;
                break;
            }
        if (red == SIZE_MAX) {
            out.push_back(std::move(t));
            continue;
        }
        Monomial q = t.first.quotient(basis[red].lm());
        GaussianRational c = t.second / basis[red].lc();
        const auto& g = basis[red].t;
        std::vector<gbdetail::Term> sub;
        sub.reserve(g.size() - 1);
        for (size_t idx = g.size(); idx-- > 1;)
            sub.emplace_back(g[idx].first * q, -(c * g[idx].second));
        gb.add(std::move(sub));
    }
    MultiPoly r(result.universe);
    for (auto& [m, c] : out) r.add_term(m, c);
    return r;
}

inline bool ideal_contains_one(const GroebnerResult& result) {
    return result.completed && result.basis.size() == 1 && result.basis[0].is_constant() &&
           result.basis[0].constant_value().is_one();
}

enum class Tri { True, False, Unknown };

/// p in radical(I)?  Decided via 1 in I + (1 - w*p) over the universe
/// extended with a fresh variable.
inline Tri radical_membership(const MultiPoly& p, const PolySystem& system,
                              const ResourceBudget& budget = {},
                              const MonomialOrder& order = MonomialOrder::grevlex()) {
    if (p.is_zero()) throw std::invalid_argument("radical_membership requires p != 0");
    const UniversePtr& u = system.universe();
    std::vector<std::string> names = u->names();
    std::string wname = "w@rad";
    while (u->contains(wname)) wname += "'";
    names.push_back(wname);
    UniversePtr ext = make_universe(std::move(names));

    PolySystem extended(ext);
    for (size_t i = 0; i < system.size(); ++i)
        extended.push(system.generators()[i].substitute({}, ext), system.provenance()[i]);
    MultiPoly w = MultiPoly::variable(ext, ext->size() - 1);
    MultiPoly rab = MultiPoly::constant(ext, GaussianRational(1)) - w * p.substitute({}, ext);
    extended.push(std::move(rab), Provenance::aux());

    GroebnerResult gb = buchberger(extended, order, budget);
    if (!gb.completed) return Tri::Unknown;
    return ideal_contains_one(gb) ? Tri::True : Tri::False;
}

struct ExpressOneResult {
    Tri status = Tri::Unknown;         // True: 1 in ideal, certificate below
    std::vector<MultiPoly> cofactors;  // sum_j cofactors[j]*gen[j] == 1
    GroebnerResult gb;
};

/// Writes 1 as an exact combination of the generators, verified before return.
inline ExpressOneResult express_one(const PolySystem& system, const MonomialOrder& order,
                                    const ResourceBudget& budget = {}) {
    BuchbergerOptions opts;
    opts.track_cofactors = true;
    ExpressOneResult out;
    out.gb = buchberger(system, order, budget, opts);
    if (!out.gb.completed) {
        out.status = Tri::Unknown;
        return out;
    }
    if (!ideal_contains_one(out.gb)) {
        out.status = Tri::False;
        return out;
    }
    out.cofactors = out.gb.cofactors.at(0);
    MultiPoly check(system.universe());
    for (size_t j = 0; j < system.size(); ++j)
        check += out.cofactors[j] * system.generators()[j];
    if (!(check == MultiPoly::constant(system.universe(), GaussianRational(1))))
        throw arithmetic_error("express_one certificate failed exact verification");
    out.status = Tri::True;
    return out;
}

struct EliminateResult {
    bool completed = false;
    PolySystem projected;  // generators of I  intersect  k[keep_vars]
    GroebnerResult gb;
};

/// Elimination ideal via a block order with the dropped variables dominant.
inline EliminateResult eliminate(const PolySystem& system,
                                 const std::set<std::string>& keep_vars,
                                 const ResourceBudget& budget = {}) {
    const UniversePtr& u = system.universe();
    for (auto& v : keep_vars)
        if (!u->contains(v)) throw structural_error("keep variable not in universe: " + v);
    std::vector<std::string> dropped, kept;
    for (auto& n : u->names())
        (keep_vars.count(n) ? kept : dropped).push_back(n);
    std::vector<std::string> reordered = dropped;
    reordered.insert(reordered.end(), kept.begin(), kept.end());
    UniversePtr perm = make_universe(reordered);

    PolySystem permuted(perm);
    for (size_t i = 0; i < system.size(); ++i)
        permuted.push(system.generators()[i].substitute({}, perm), system.provenance()[i]);

    MonomialOrder ord = MonomialOrder::block(dropped.size(), MonomialOrder::grevlex(),
                                             MonomialOrder::grevlex());
    EliminateResult out;
    out.gb = buchberger(permuted, ord, budget);
    out.projected = PolySystem(u);
    if (!out.gb.completed) return out;
    for (auto& b : out.gb.basis) {
        bool pure = true;
        for (auto& [m, c] : b.terms()) {
            for (size_t i = 0; i < dropped.size() && pure; ++i)
                if (m[i] != 0) pure = false;
            if (!pure) break;
        }
        if (pure) out.projected.push(b.substitute({}, u), Provenance::aux());
    }
    out.completed = true;
    return out;
}

/// Exact post-hoc verification of the GroebnerResult invariants.
/// Returns an empty string on success, else a description of the violation.
inline std::string verify_groebner_result(const GroebnerResult& r) {
    if (!r.completed) return "result incomplete";
    for (size_t i = 0; i < r.generators.size(); ++i)
        if (!normal_form(r.generators[i], r).is_zero())
            return "generator " + std::to_string(i) + " has nonzero normal form";
    // reducedness: monic, and no term of any element divisible by another lead
    for (size_t i = 0; i < r.basis.size(); ++i) {
        auto [lmi, lci] = r.basis[i].leading_term(r.order);
        if (!lci.is_one()) return "basis element " + std::to_string(i) + " not monic";
        for (size_t j = 0; j < r.basis.size(); ++j) {
            if (i == j) continue;
            auto [lmj, lcj] = r.basis[j].leading_term(r.order);
            for (auto& [m, c] : r.basis[i].terms())
                if (lmj.divides(m))
                    return "basis not reduced: term of element " + std::to_string(i) +
                           " divisible by lead of " + std::to_string(j);
        }
    }
    // S-polynomials reduce to zero
    for (size_t i = 0; i < r.basis.size(); ++i)
        for (size_t j = i + 1; j < r.basis.size(); ++j) {
            auto [lmi, lci] = r.basis[i].leading_term(r.order);
            auto [lmj, lcj] = r.basis[j].leading_term(r.order);
            Monomial L = lcm(lmi, lmj);
            MultiPoly s =
                MultiPoly::term(r.universe, L.quotient(lmi), GaussianRational(1)) * r.basis[i] -
                MultiPoly::term(r.universe, L.quotient(lmj), GaussianRational(1)) * r.basis[j];
            if (!normal_form(s, r).is_zero())
                return "S-polynomial (" + std::to_string(i) + "," + std::to_string(j) +
                       ") does not reduce to zero";
        }
    // cofactor identity
    if (!r.cofactors.empty()) {
        if (r.cofactors.size() != r.basis.size()) return "cofactor row count mismatch";
        for (size_t i = 0; i < r.basis.size(); ++i) {
            MultiPoly acc(r.universe);
            for (size_t j = 0; j < r.generators.size(); ++j)
                acc += r.cofactors[i][j] * r.generators[j];
            if (!(acc == r.basis[i]))
                return "cofactor identity fails for basis element " + std::to_string(i);
        }
    }
    return "";
}

}  // namespace cubiclin

#endif
