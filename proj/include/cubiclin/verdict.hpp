#ifndef CUBICLIN_VERDICT_HPP
#define CUBICLIN_VERDICT_HPP

#include <optional>
#include <string>
#include <vector>

#include "exact_matrix.hpp"
#include "groebner.hpp"

namespace cubiclin {

/// Outcome of a top-level decision procedure. FAILS always carries evidence
/// (a witness point or a GB certificate); UNKNOWN carries the reason the
/// budget ran out; HOLDS carries either a fast-path name or a certificate.
struct Verdict {
    enum class Status { Holds, Fails, Unknown };
    Status status = Status::Unknown;

    std::string fast_path;  // structural rule that decided without a GB run
    std::string note;       // free-form detail (abort reason, sub-verdicts)

    std::optional<ExactVector> witness;              // failing point, if any
    std::optional<double> sz_log2_failure_bound;     // randomized mode only
    std::vector<GroebnerResult> certificates;        // backing GB runs
    std::vector<MultiPoly> one_cofactors;            // express-one certificate

    double elapsed_seconds = 0.0;

    bool holds() const { return status == Status::Holds; }
    bool fails() const { return status == Status::Fails; }
    bool unknown() const { return status == Status::Unknown; }

    static Verdict make_holds(std::string fast_path = "", std::string note = "") {
        Verdict v;
        v.status = Status::Holds;
        v.fast_path = std::move(fast_path);
        v.note = std::move(note);
        return v;
    }
    static Verdict make_fails(std::string note = "") {
        Verdict v;
        v.status = Status::Fails;
        v.note = std::move(note);
        return v;
    }
    static Verdict make_unknown(std::string note) {
        Verdict v;
        v.status = Status::Unknown;
        v.note = std::move(note);
        return v;
    }
};

inline std::string to_string(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Holds: return "HOLDS";
        case Verdict::Status::Fails: return "FAILS";
        case Verdict::Status::Unknown: return "UNKNOWN";
    }
    return "?";
}

}  // namespace cubiclin

#endif
