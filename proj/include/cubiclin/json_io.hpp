#ifndef CUBICLIN_JSON_IO_HPP
#define CUBICLIN_JSON_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "corpus.hpp"
#include "groebner.hpp"
#include "verdict.hpp"

namespace cubiclin {

using nlohmann::json;

inline constexpr const char* tool_version = "cubiclin 1.0.0";

// ---------------------------------------------------------------- matrices

/// {"n": int, "entries": [["scalar", ...], ...]} with scalars in the exact
/// Gaussian-rational grammar ("3", "-1/2", "i", "1+2*i", ...).
inline json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"entries", std::move(rows)}};
}

inline ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw parse_error("matrix JSON needs fields \"n\" and \"entries\"");
    size_t n = j.at("n").get<size_t>();
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n)
        throw parse_error("matrix JSON: expected " + std::to_string(n) + " rows");
    ExactMatrix m(n);
    for (size_t i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != n)
            throw parse_error("matrix JSON: row " + std::to_string(i + 1) + " must have " +
                              std::to_string(n) + " entries");
        for (size_t j2 = 0; j2 < n; ++j2)
            m.at(i, j2) = parse_scalar(row.at(j2).get<std::string>());
    }
    return m;
}

inline ExactMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error("matrix file " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

inline void write_matrix_file(const std::string& path, const ExactMatrix& m) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write matrix file: " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

/// Digest of the canonical serialization: whitespace or formatting changes in
/// the source file never change the hash, entry changes always do.
inline std::string input_hash_hex(const ExactMatrix& m) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(matrix_checksum(m)));
    return buf;
}

// ------------------------------------------------------------- polynomials

namespace json_detail {

/// Parses one monomial factor chain "z1^2*y3*..." over the given universe.
inline Monomial parse_monomial(const std::string& text, const UniversePtr& u) {
    Monomial m(u->size());
    size_t pos = 0;
    while (pos < text.size()) {
        size_t star = text.find('*', pos);
        std::string factor =
            star == std::string::npos ? text.substr(pos) : text.substr(pos, star - pos);
        pos = star == std::string::npos ? text.size() : star + 1;
        size_t caret = factor.find('^');
        std::string var = caret == std::string::npos ? factor : factor.substr(0, caret);
        unsigned long exp = 1;
        if (caret != std::string::npos) exp = std::stoul(factor.substr(caret + 1));
        if (!u->contains(var)) throw parse_error("unknown variable: " + var);
        size_t idx = u->index_of(var);
        m.set(idx, static_cast<Monomial::Exp>(m[idx] + exp));
    }
    return m;
}

}  // namespace json_detail

/// Parses the canonical polynomial text form (the output of
/// MultiPoly::to_string) back into a polynomial over the given universe.
inline MultiPoly parse_polynomial(const std::string& text, const UniversePtr& u) {
    MultiPoly p(u);
    if (text.empty() || text == "0") return p;
    size_t pos = 0;
    bool negative = false;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    }
    while (pos < text.size()) {
        // terms are joined by " + " / " - "; scalars contain no spaces
        size_t next = std::string::npos;
        bool next_neg = false;
        for (size_t k = pos; k + 2 < text.size(); ++k) {
            if (text[k] == ' ' && (text[k + 1] == '+' || text[k + 1] == '-') &&
                text[k + 2] == ' ') {
                next = k;
                next_neg = text[k + 1] == '-';
                break;
            }
        }
        std::string term =
            next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;

        GaussianRational coeff(1);
        std::string mono_text;
        if (!term.empty() && term[0] == '(') {
            size_t close = term.find(')');
            if (close == std::string::npos) throw parse_error("unbalanced '(' in " + term);
            coeff = parse_scalar(term.substr(1, close - 1));
            mono_text = close + 1 < term.size() && term[close + 1] == '*'
                            ? term.substr(close + 2)
                            : term.substr(close + 1);
        } else if (!term.empty() && std::isdigit(static_cast<unsigned char>(term[0]))) {
            size_t end = 0;
            while (end < term.size() &&
                   (std::isdigit(static_cast<unsigned char>(term[end])) || term[end] == '/'))
                ++end;
            coeff = parse_scalar(term.substr(0, end));
            mono_text = end < term.size() && term[end] == '*' ? term.substr(end + 1)
                                                             : term.substr(end);
            if (!mono_text.empty() && mono_text[0] == '*') mono_text = mono_text.substr(1);
        } else {
            mono_text = term;
        }
        if (negative) coeff = -coeff;
        Monomial m = mono_text.empty() || mono_text == "1"
                         ? Monomial(u->size())
                         : json_detail::parse_monomial(mono_text, u);
        p.add_term(m, coeff);
        negative = next_neg;
    }
    return p;
}

// ------------------------------------------------------ orders and certificates

inline json order_to_json(const MonomialOrder& o) { return o.to_string(); }

/// Accepts "lex", "grevlex", and "block(split,inner,inner)" with lex/grevlex
/// inner orders — the only forms the toolkit emits.
inline MonomialOrder order_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "lex") return MonomialOrder::lex();
    if (s == "grevlex") return MonomialOrder::grevlex();
    if (s.rfind("block(", 0) == 0 && s.back() == ')') {
        std::string body = s.substr(6, s.size() - 7);
        size_t c1 = body.find(',');
        size_t c2 = body.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw parse_error("malformed block order: " + s);
        auto inner = [](const std::string& t) {
            if (t == "lex") return MonomialOrder::lex();
            if (t == "grevlex") return MonomialOrder::grevlex();
            throw parse_error("unsupported inner order: " + t);
        };
        return MonomialOrder::block(std::stoul(body.substr(0, c1)),
                                    inner(body.substr(c1 + 1, c2 - c1 - 1)),
                                    inner(body.substr(c2 + 1)));
    }
    throw parse_error("unsupported monomial order: " + s);
}

inline json certificate_to_json(const GroebnerResult& r) {
    json polys = json::array();
    for (auto& b : r.basis) polys.push_back(b.to_string());
    json gens = json::array();
    for (auto& g : r.generators) gens.push_back(g.to_string());
    json j{{"completed", r.completed},
           {"order", order_to_json(r.order)},
           {"variables", r.universe->names()},
           {"basis", std::move(polys)},
           {"generators", std::move(gens)},
           {"stats",
            {{"pairs_considered", r.stats.pairs_considered},
             {"pairs_reduced", r.stats.pairs_reduced},
             {"reduction_steps", r.stats.reduction_steps},
             {"basis_size", r.stats.basis_size},
             {"elapsed_seconds", r.stats.elapsed_seconds}}}};
    if (!r.completed) j["abort_reason"] = r.abort_reason;
    if (!r.cofactors.empty()) {
        json cof = json::array();
        for (auto& row : r.cofactors) {
            json jr = json::array();
            for (auto& c : row) jr.push_back(c.to_string());
            cof.push_back(std::move(jr));
        }
        j["cofactors"] = std::move(cof);
    }
    return j;
}

inline GroebnerResult certificate_from_json(const json& j) {
    GroebnerResult r;
    r.completed = j.at("completed").get<bool>();
    if (j.contains("abort_reason")) r.abort_reason = j.at("abort_reason").get<std::string>();
    r.order = order_from_json(j.at("order"));
    r.universe = make_universe(j.at("variables").get<std::vector<std::string>>());
    for (auto& s : j.at("basis"))
        r.basis.push_back(parse_polynomial(s.get<std::string>(), r.universe));
    for (auto& s : j.at("generators"))
        r.generators.push_back(parse_polynomial(s.get<std::string>(), r.universe));
    if (j.contains("cofactors"))
        for (auto& row : j.at("cofactors")) {
            std::vector<MultiPoly> cr;
            for (auto& s : row)
                cr.push_back(parse_polynomial(s.get<std::string>(), r.universe));
            r.cofactors.push_back(std::move(cr));
        }
    if (j.contains("stats")) {
        const json& s = j.at("stats");
        r.stats.pairs_considered = s.value("pairs_considered", size_t{0});
        r.stats.pairs_reduced = s.value("pairs_reduced", size_t{0});
        r.stats.reduction_steps = s.value("reduction_steps", size_t{0});
        r.stats.basis_size = s.value("basis_size", size_t{0});
        r.stats.elapsed_seconds = s.value("elapsed_seconds", 0.0);
    }
    return r;
}

/// Standalone replay of a serialized certificate: re-checks every Groebner
/// invariant and, when cofactors are present, the exact cofactor identity.
/// Returns "" on success, else a description of the first violation.
inline std::string verify_certificate_json(const json& j) {
    GroebnerResult r = certificate_from_json(j);
    std::string err = verify_groebner_result(r);
    if (!err.empty()) return err;
    if (!r.cofactors.empty()) {
        if (r.cofactors.size() != r.basis.size()) return "cofactor row count mismatch";
        for (size_t i = 0; i < r.basis.size(); ++i) {
            if (r.cofactors[i].size() != r.generators.size())
                return "cofactor column count mismatch in row " + std::to_string(i);
            MultiPoly acc(r.universe);
            for (size_t k = 0; k < r.generators.size(); ++k)
                acc += r.cofactors[i][k] * r.generators[k];
            if (!(acc == r.basis[i]))
                return "cofactor identity fails for basis element " + std::to_string(i);
        }
    }
    return "";
}

// ---------------------------------------------------------------- verdicts

inline json verdict_to_json(const Verdict& v, bool include_certificates = false) {
    json j{{"status", to_string(v.status)}, {"elapsed_seconds", v.elapsed_seconds}};
    if (!v.fast_path.empty()) j["fast_path"] = v.fast_path;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) {
        json w = json::array();
        for (auto& c : *v.witness) w.push_back(c.to_string());
        j["witness"] = std::move(w);
    }
    if (v.sz_log2_failure_bound) j["sz_log2_failure_bound"] = *v.sz_log2_failure_bound;
    if (!v.one_cofactors.empty()) {
        json c = json::array();
        for (auto& p : v.one_cofactors) c.push_back(p.to_string());
        j["one_cofactors"] = std::move(c);
    }
    if (!v.certificates.empty()) {
        if (include_certificates) {
            json certs = json::array();
            for (auto& g : v.certificates) certs.push_back(certificate_to_json(g));
            j["certificates"] = std::move(certs);
        } else {
            json sizes = json::array();
            for (auto& g : v.certificates) sizes.push_back(g.basis.size());
            j["certificate_basis_sizes"] = std::move(sizes);
        }
    }
    return j;
}

// --------------------------------------------------------------- run reports

/// One appendable record of a CLI invocation: what ran, on which input (by
/// canonical hash), with which engine configuration, and the verdicts.
struct RunReport {
    std::string command;
    std::vector<std::string> arguments;
    std::string input_hash;
    json config;    // order, budgets, seeds, trials, ...
    json verdicts;  // single verdict object or map keyed by sub-item
    std::vector<std::string> certificate_paths;

    json to_json() const {
        return json{{"tool", tool_version},          {"command", command},
                    {"arguments", arguments},        {"input_hash", input_hash},
                    {"config", config},              {"verdicts", verdicts},
                    {"certificates", certificate_paths}};
    }
};

/// Appends one report as a single JSON line (reports are append-only).
inline void append_report(const std::string& path, const RunReport& r) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw parse_error("cannot open report file: " + path);
    out << r.to_json().dump() << "\n";
}

}  // namespace cubiclin

#endif
