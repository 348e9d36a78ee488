#ifndef CUBICLIN_CHECKER_HPP
#define CUBICLIN_CHECKER_HPP

#include <chrono>
#include <map>
#include <stdexcept>

#include "groebner.hpp"
#include "system_builders.hpp"
#include "transform.hpp"
#include "verdict.hpp"

namespace cubiclin {

/// Shared configuration for the top-level decision procedures. The budget
/// applies to each Groebner run individually; a pipeline reports UNKNOWN if
/// any sub-run exhausts it, never an optimistic verdict.
struct CheckOptions {
    ResourceBudget budget;
    MonomialOrder order = MonomialOrder::grevlex();
    bool fast_paths = true;       // structural shortcuts before any GB run
    bool cofactors = false;       // track express-one certificates on HOLDS
    DruzkowskiOptions druzkowski; // used where a Keller pre-check is needed
};

/// Thrown when an operation's precondition fails; carries the verdict of the
/// pre-check that rejected the input.
struct precondition_error : std::runtime_error {
    Verdict pre_verdict;
    precondition_error(const std::string& what, Verdict v)
        : std::runtime_error(what), pre_verdict(std::move(v)) {}
};

namespace checker_detail {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

/// radical_membership with the backing Groebner run exposed, so verdicts can
/// attach it as a certificate.
struct RadicalRun {
    Tri status = Tri::Unknown;
    GroebnerResult gb;
};

inline RadicalRun radical_run(const MultiPoly& p, const PolySystem& system,
                              const CheckOptions& opts) {
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

    RadicalRun out;
    out.gb = buchberger(extended, opts.order, opts.budget);
    if (!out.gb.completed)
        out.status = Tri::Unknown;
    else
        out.status = ideal_contains_one(out.gb) ? Tri::True : Tri::False;
    return out;
}

inline bool is_triangular(const ExactMatrix& a) {
    bool upper = true, lower = true;
    for (size_t i = 0; i < a.n(); ++i)
        for (size_t j = 0; j < a.n(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            if (i > j) upper = false;
            if (i < j) lower = false;
        }
    return upper || lower;
}

/// All 2^n - 1 principal minors nonzero? Guarded by a size cap; the 1x1
/// minors (diagonal entries) are checked first as a cheap early exit.
inline bool all_principal_minors_nonzero(const ExactMatrix& a, size_t cap = 12) {
    if (a.n() > cap) return false;
    for (size_t i = 0; i < a.n(); ++i)
        if (a.at(i, i).is_zero()) return false;
    bool all = true;
    a.for_each_principal_subset(a.n(), [&](const std::vector<size_t>& s) {
        if (a.principal_minor(s).is_zero()) {
            all = false;
            return false;
        }
        return true;
    });
    return all;
}

/// HOLDS iff every z_i lies in the radical of the given system's ideal.
/// Variables z_1..z_n are assumed to occupy indices 0..n-1 of the universe.
inline Verdict all_z_in_radical(const ExactMatrix& a, const PolySystem& sys,
                                const CheckOptions& opts, const Timer& timer) {
    size_t n = a.n();
    Verdict v;
    bool any_unknown = false;
    std::string unknown_note;
    for (size_t i = 0; i < n; ++i) {
        MultiPoly zi = MultiPoly::variable(sys.universe(), i);
        RadicalRun run = radical_run(zi, sys, opts);
        if (run.status == Tri::False) {
            Verdict f = Verdict::make_fails(
                "z" + std::to_string(i + 1) + " is not in the radical of the system ideal");
            f.certificates.push_back(std::move(run.gb));
            f.elapsed_seconds = timer.seconds();
            return f;
        }
        if (run.status == Tri::Unknown) {
            any_unknown = true;
            unknown_note = "radical membership of z" + std::to_string(i + 1) +
                           " undecided: " + run.gb.abort_reason;
        }
        if (opts.cofactors && run.status == Tri::True)
            v.certificates.push_back(std::move(run.gb));
    }
    if (any_unknown) {
        Verdict u = Verdict::make_unknown(unknown_note);
        u.elapsed_seconds = timer.seconds();
        return u;
    }
    v.status = Verdict::Status::Holds;
    v.note = "all z_i in the radical of the system ideal";
    v.elapsed_seconds = timer.seconds();
    return v;
}

}  // namespace checker_detail

/// Condition C1: every point of the V-variety of A has z = 0.
inline Verdict check_c1(const ExactMatrix& a, const CheckOptions& opts = {}) {
    checker_detail::Timer timer;
    if (opts.fast_paths) {
        if (a.rank() <= 1) {
            Verdict v = Verdict::make_holds("rank<=1");
            v.elapsed_seconds = timer.seconds();
            return v;
        }
        if (checker_detail::is_triangular(a)) {
            Verdict v = Verdict::make_holds("triangular");
            v.elapsed_seconds = timer.seconds();
            return v;
        }
        if (checker_detail::all_principal_minors_nonzero(a)) {
            Verdict v = Verdict::make_holds("all-principal-minors-nonzero");
            v.elapsed_seconds = timer.seconds();
            return v;
        }
        if (a.n() <= 3 && a.det().is_zero()) {
            Verdict v = Verdict::make_holds("low-dimension-singular");
            v.elapsed_seconds = timer.seconds();
            return v;
        }
    }
    return checker_detail::all_z_in_radical(a, c1_system(a), opts, timer);
}

/// Condition C2: every point of the W-variety of A has z = 0. Whether the
/// matrix is Keller is auto-detected (exactly when symbolically feasible,
/// randomized otherwise); for a non-Keller matrix the pencil constraints are
/// kept in the system, since they are then not implied by the rows.
inline Verdict check_c2(const ExactMatrix& a, const CheckOptions& opts = {}) {
    checker_detail::Timer timer;
    DruzkowskiOptions dopts = opts.druzkowski;
    if (a.n() <= dopts.symbolic_limit) dopts.mode = DruzkowskiOptions::Mode::Exact;
    Verdict dru = is_druzkowski(a, dopts);
    bool assume = dru.holds();
    Verdict v = checker_detail::all_z_in_radical(a, c2_system(a, assume), opts, timer);
    if (!assume && !v.note.empty())
        v.note += "; pencil constraints included (matrix not Keller: " + dru.note + ")";
    v.elapsed_seconds = timer.seconds();
    return v;
}

/// Automorphism test for the cubic-linear map of a Keller matrix: the
/// transformed system's solutions must be exactly z = 0. Rejects non-Keller
/// input, for which the question is ill-posed in this pipeline.
inline Verdict check_jc(const ExactMatrix& a, const CheckOptions& opts = {}) {
    checker_detail::Timer timer;
    DruzkowskiOptions dopts = opts.druzkowski;
    if (a.n() <= dopts.symbolic_limit) dopts.mode = DruzkowskiOptions::Mode::Exact;
    Verdict dru = is_druzkowski(a, dopts);
    if (!dru.holds())
        throw precondition_error(
            "check_jc requires a Keller matrix; pre-check returned " + to_string(dru.status) +
                (dru.note.empty() ? "" : " (" + dru.note + ")"),
            std::move(dru));
    Verdict v = checker_detail::all_z_in_radical(a, c2_system(a, true), opts, timer);
    if (v.holds() && v.fast_path.empty())
        v.note = "map is an automorphism: " + v.note;
    return v;
}

/// Z_k criterion for one or more k: HOLDS iff the Z_k system is infeasible
/// (its ideal contains 1). The image/nilpotency prefilter decides without a
/// Groebner run where it applies.
inline std::map<size_t, Verdict> check_zk(const ExactMatrix& a, size_t k_lo, size_t k_hi,
                                          ZkVariant variant, const CheckOptions& opts = {}) {
    if (k_lo < 3 || k_hi > a.n() || k_lo > k_hi)
        throw std::invalid_argument("check_zk requires 3 <= k_lo <= k_hi <= n");
    std::map<size_t, Verdict> out;
    for (size_t k = k_lo; k <= k_hi; ++k) {
        checker_detail::Timer timer;
        if (opts.fast_paths) {
            ZkObstruction obs = zk_image_prefilter(a, k);
            if (obs != ZkObstruction::NoObstruction) {
                Verdict v = Verdict::make_holds("prefilter:" + to_string(obs),
                                                "necessary condition fails, no witness");
                v.elapsed_seconds = timer.seconds();
                out.emplace(k, std::move(v));
                continue;
            }
        }
        PolySystem sys = zk_system(a, k, variant);
        Verdict v;
        if (opts.cofactors) {
            ExpressOneResult one = express_one(sys, opts.order, opts.budget);
            if (one.status == Tri::True) {
                v = Verdict::make_holds("", "ideal contains 1 (verified cofactor certificate)");
                v.one_cofactors = std::move(one.cofactors);
            } else if (one.status == Tri::False) {
                v = Verdict::make_fails("ideal does not contain 1: system is feasible over C");
            } else {
                v = Verdict::make_unknown(one.gb.abort_reason);
            }
            v.certificates.push_back(std::move(one.gb));
        } else {
            GroebnerResult gb = buchberger(sys, opts.order, opts.budget);
            if (!gb.completed)
                v = Verdict::make_unknown(gb.abort_reason);
            else if (ideal_contains_one(gb))
                v = Verdict::make_holds("", "ideal contains 1");
            else
                v = Verdict::make_fails("ideal does not contain 1: system is feasible over C");
            v.certificates.push_back(std::move(gb));
        }
        v.elapsed_seconds = timer.seconds();
        out.emplace(k, std::move(v));
    }
    return out;
}

enum class Feasibility { Infeasible, Feasible, Unknown };

inline std::string to_string(Feasibility f) {
    switch (f) {
        case Feasibility::Infeasible: return "INFEASIBLE";
        case Feasibility::Feasible: return "FEASIBLE";
        case Feasibility::Unknown: return "UNKNOWN";
    }
    return "?";
}

struct SliceReport {
    Feasibility feasibility = Feasibility::Unknown;
    GroebnerResult gb;
    double elapsed_seconds = 0.0;
};

/// Does the V-variety slice at z = Z_k admit a rank-r matrix? Decided by a
/// Groebner basis of the symbolic slice system: basis {1} means infeasible.
inline SliceReport explore_slice(size_t n, size_t k, size_t r,
                                 const CheckOptions& opts = {}, size_t n_limit = 4) {
    if (n > n_limit)
        throw std::invalid_argument("explore_slice: n=" + std::to_string(n) +
                                    " exceeds configured limit " + std::to_string(n_limit));
    checker_detail::Timer timer;
    SliceReport out;
    out.gb = buchberger(vn_slice_system(n, k, r), opts.order, opts.budget);
    if (!out.gb.completed)
        out.feasibility = Feasibility::Unknown;
    else
        out.feasibility =
            ideal_contains_one(out.gb) ? Feasibility::Infeasible : Feasibility::Feasible;
    out.elapsed_seconds = timer.seconds();
    return out;
}

}  // namespace cubiclin

#endif
