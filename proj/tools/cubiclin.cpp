// Command-line surface of the cubic-linear toolkit: exact verdicts for the
// C1/C2/injectivity/Z_k criteria with machine-checkable certificates.
//
// Exit codes: 0 HOLDS / verified, 1 FAILS / mismatch, 2 UNKNOWN (budget),
// >2 usage or input errors.

#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "cubiclin/checker.hpp"
#include "cubiclin/corpus.hpp"
#include "cubiclin/json_io.hpp"
#include "cubiclin/oracle.hpp"
#include "cubiclin/randgen.hpp"

namespace cl = cubiclin;
using cl::json;

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_unknown = 2;
constexpr int exit_usage = 3;
constexpr int exit_input = 4;

int status_exit(cl::Verdict::Status s) {
    switch (s) {
        case cl::Verdict::Status::Holds: return exit_holds;
        case cl::Verdict::Status::Fails: return exit_fails;
        case cl::Verdict::Status::Unknown: return exit_unknown;
    }
    return exit_usage;
}

/// "corpus:example3" or a matrix JSON file path.
cl::ExactMatrix load_matrix(const std::string& ref) {
    if (ref.rfind("corpus:", 0) == 0) return cl::load_example(ref.substr(7)).matrix;
    return cl::read_matrix_file(ref);
}

double env_budget_default() {
    if (const char* v = std::getenv("CUBICLIN_BUDGET_SECONDS")) {
        char* end = nullptr;
        double d = std::strtod(v, &end);
        if (end != v && d > 0) return d;
    }
    return 300.0;
}

cl::ExactVector parse_vector(const std::string& csv) {
    cl::ExactVector out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string piece =
            comma == std::string::npos ? csv.substr(pos) : csv.substr(pos, comma - pos);
        out.push_back(cl::parse_scalar(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string nilclass_name(cl::NilClass c) {
    switch (c) {
        case cl::NilClass::Square: return "A^2=0";
        case cl::NilClass::Cube: return "A^3=0";
        case cl::NilClass::None: return "none";
    }
    return "?";
}

void emit(const json& j, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(json_path);
        out << j.dump(2) << "\n";
    }
}

struct CommonFlags {
    std::string matrix_ref;
    std::string order = "grevlex";
    double timeout = env_budget_default();
    bool no_fast_paths = false;
    bool cofactors = false;
    std::string json_path;
    std::string report_path;

    cl::CheckOptions options() const {
        cl::CheckOptions o;
        o.budget.wall_seconds = timeout;
        o.order = order == "lex" ? cl::MonomialOrder::lex() : cl::MonomialOrder::grevlex();
        o.fast_paths = !no_fast_paths;
        o.cofactors = cofactors;
        return o;
    }

    json config_json() const {
        return json{{"order", order},
                    {"timeout_seconds", timeout},
                    {"fast_paths", !no_fast_paths},
                    {"cofactors", cofactors}};
    }

    void attach(CLI::App* cmd, bool needs_matrix = true) {
        if (needs_matrix)
            cmd->add_option("--matrix", matrix_ref,
                            "matrix JSON file or corpus:<id> reference")
                ->required();
        cmd->add_option("--order", order, "monomial order")
            ->check(CLI::IsMember({"lex", "grevlex"}));
        cmd->add_option("--timeout", timeout, "wall-clock budget per basis run (seconds)");
        cmd->add_flag("--no-fast-paths", no_fast_paths, "disable structural shortcuts");
        cmd->add_flag("--cofactors", cofactors, "track and emit cofactor certificates");
        cmd->add_option("--json", json_path, "write the verdict JSON to this file");
        cmd->add_option("--report", report_path, "append a run report line to this file");
    }
};

void maybe_report(const CommonFlags& f, const std::string& command,
                  const std::vector<std::string>& args, const std::string& input_hash,
                  json verdicts) {
    if (f.report_path.empty()) return;
    cl::RunReport r;
    r.command = command;
    r.arguments = args;
    r.input_hash = input_hash;
    r.config = f.config_json();
    r.verdicts = std::move(verdicts);
    cl::append_report(f.report_path, r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for cubic-linear (Keller) matrix criteria"};
    app.require_subcommand(1);

    // ---- check c1|c2|jc|zk
    CLI::App* check = app.add_subcommand("check", "decide a criterion for one matrix");
    check->require_subcommand(1);
    CommonFlags c1f, c2f, jcf, zkf;
    CLI::App* c1 = check->add_subcommand("c1", "every V-variety point has z = 0");
    c1f.attach(c1);
    CLI::App* c2 = check->add_subcommand("c2", "every W-variety point has z = 0");
    c2f.attach(c2);
    CLI::App* jc = check->add_subcommand("jc", "automorphism test (Keller input only)");
    jcf.attach(jc);
    CLI::App* zk = check->add_subcommand("zk", "Z_k infeasibility criteria");
    zkf.attach(zk);
    size_t zk_k = 0, zk_k_to = 0;
    std::string zk_variant = "thm19";
    zk->add_option("--k", zk_k, "single k, or range start with --k-to")->required();
    zk->add_option("--k-to", zk_k_to, "range end (inclusive)");
    zk->add_option("--variant", zk_variant, "system variant")
        ->check(CLI::IsMember({"thm18", "thm19"}));

    // ---- is-druzkowski
    CLI::App* dru = app.add_subcommand("is-druzkowski", "Keller-identity test");
    CommonFlags druf;
    druf.attach(dru);
    size_t dru_trials = 64;
    uint64_t dru_seed = 1;
    bool dru_exact = false;
    dru->add_option("--trials", dru_trials, "randomized trials");
    dru->add_option("--seed", dru_seed, "randomized seed");
    dru->add_flag("--exact", dru_exact, "symbolic decision (small dimensions)");

    // ---- conjugate / normalize
    CLI::App* conj = app.add_subcommand("conjugate", "diagonal action D A D^-3");
    std::string conj_matrix, conj_diag, conj_out;
    conj->add_option("--matrix", conj_matrix, "matrix JSON file or corpus:<id>")->required();
    conj->add_option("--diagonal", conj_diag, "comma-separated nonzero scalars")->required();
    conj->add_option("--out", conj_out, "output matrix file (default stdout)");

    CLI::App* norm = app.add_subcommand("normalize", "scale a witness z to 0/1 entries");
    std::string norm_witness;
    norm->add_option("--witness", norm_witness, "comma-separated scalars")->required();

    // ---- random
    CLI::App* rnd = app.add_subcommand("random", "seeded random matrix families");
    std::string rnd_family = "rank_r", rnd_out;
    size_t rnd_n = 4, rnd_r = 3;
    long long rnd_bound = 25;
    uint64_t rnd_seed = 1;
    rnd->add_option("--family", rnd_family, "matrix family")
        ->check(CLI::IsMember({"rank_r", "triangular", "diagonal_invertible",
                               "block_zero_bottom", "rank1_druzkowski"}));
    rnd->add_option("--n", rnd_n, "dimension");
    rnd->add_option("--r", rnd_r, "rank / top-block size");
    rnd->add_option("--bound", rnd_bound, "entry bound");
    rnd->add_option("--seed", rnd_seed, "seed");
    rnd->add_option("--out", rnd_out, "output matrix file (default stdout)");

    // ---- corpus
    CLI::App* corpus = app.add_subcommand("corpus", "embedded published examples");
    corpus->require_subcommand(1);
    CLI::App* corpus_list = corpus->add_subcommand("list", "list entries with metadata");
    CLI::App* corpus_run =
        corpus->add_subcommand("run", "re-verify structural metadata and Keller status");
    std::string corpus_only, corpus_dir;
    corpus_run->add_option("--only", corpus_only, "restrict to one entry id");
    corpus_run->add_option("--dir", corpus_dir,
                           "verify exported matrix files in this directory instead of "
                           "the embedded copies");
    CLI::App* corpus_export = corpus->add_subcommand("export", "write matrix JSON files");
    std::string export_dir;
    corpus_export->add_option("dir", export_dir, "output directory")->required();

    // ---- explore-slice
    CLI::App* slice = app.add_subcommand("explore-slice",
                                         "feasibility of the rank-r slice at z = Z_k");
    size_t sl_n = 2, sl_k = 2, sl_r = 1;
    double sl_timeout = env_budget_default();
    slice->add_option("--n", sl_n, "dimension")->required();
    slice->add_option("--k", sl_k, "number of leading ones in z")->required();
    slice->add_option("--r", sl_r, "matrix rank")->required();
    slice->add_option("--timeout", sl_timeout, "budget (seconds)");

    // ---- oracle
    CLI::App* oracle = app.add_subcommand("oracle", "derivation-based invertibility check");
    std::string oracle_matrix;
    double oracle_timeout = env_budget_default();
    oracle->add_option("--matrix", oracle_matrix, "matrix JSON file or corpus:<id>")
        ->required();
    oracle->add_option("--timeout", oracle_timeout, "budget (seconds)");

    // ---- verify-cert
    CLI::App* vcert = app.add_subcommand("verify-cert", "replay a certificate file");
    std::string cert_path;
    vcert->add_option("file", cert_path, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // normalize CLI11's internal codes onto the documented usage code
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    std::vector<std::string> argvec(argv + 1, argv + argc);
    try {
        if (c1->parsed() || c2->parsed() || jc->parsed()) {
            CommonFlags& f = c1->parsed() ? c1f : c2->parsed() ? c2f : jcf;
            const char* kind = c1->parsed() ? "c1" : c2->parsed() ? "c2" : "jc";
            cl::ExactMatrix m = load_matrix(f.matrix_ref);
            cl::Verdict v;
            try {
                v = c1->parsed()   ? cl::check_c1(m, f.options())
                    : c2->parsed() ? cl::check_c2(m, f.options())
                                   : cl::check_jc(m, f.options());
            } catch (const cl::precondition_error& e) {
                std::cerr << "precondition: " << e.what() << "\n";
                return exit_input;
            }
            json vj = cl::verdict_to_json(v, f.cofactors);
            emit(vj, f.json_path);
            maybe_report(f, std::string("check ") + kind, argvec, cl::input_hash_hex(m), vj);
            return status_exit(v.status);
        }

        if (zk->parsed()) {
            cl::ExactMatrix m = load_matrix(zkf.matrix_ref);
            size_t hi = zk_k_to == 0 ? zk_k : zk_k_to;
            cl::ZkVariant var =
                zk_variant == "thm18" ? cl::ZkVariant::Thm18 : cl::ZkVariant::Thm19;
            auto verdicts = cl::check_zk(m, zk_k, hi, var, zkf.options());
            json all = json::object();
            cl::Verdict::Status worst = cl::Verdict::Status::Holds;
            for (auto& [k, v] : verdicts) {
                all["k" + std::to_string(k)] = cl::verdict_to_json(v, zkf.cofactors);
                if (v.fails()) worst = cl::Verdict::Status::Fails;
                if (v.unknown() && worst == cl::Verdict::Status::Holds)
                    worst = cl::Verdict::Status::Unknown;
            }
            emit(all, zkf.json_path);
            maybe_report(zkf, "check zk", argvec, cl::input_hash_hex(m), all);
            return status_exit(worst);
        }

        if (dru->parsed()) {
            cl::ExactMatrix m = load_matrix(druf.matrix_ref);
            cl::DruzkowskiOptions o;
            o.mode = dru_exact ? cl::DruzkowskiOptions::Mode::Exact
                               : cl::DruzkowskiOptions::Mode::Randomized;
            o.trials = dru_trials;
            o.seed = dru_seed;
            cl::Verdict v = cl::is_druzkowski(m, o);
            json vj = cl::verdict_to_json(v);
            emit(vj, druf.json_path);
            maybe_report(druf, "is-druzkowski", argvec, cl::input_hash_hex(m), vj);
            return status_exit(v.status);
        }

        if (conj->parsed()) {
            cl::ExactMatrix m = load_matrix(conj_matrix);
            cl::DiagonalAction d(parse_vector(conj_diag));
            cl::ExactMatrix out = cl::diagonal_conjugate(m, d);
            emit(cl::matrix_to_json(out), conj_out);
            return exit_holds;
        }

        if (norm->parsed()) {
            auto [action, zn] = cl::normalize_witness(parse_vector(norm_witness));
            json jd = json::array(), jz = json::array();
            for (auto& e : action.d) jd.push_back(e.to_string());
            for (auto& e : zn) jz.push_back(e.to_string());
            std::cout << json{{"diagonal", jd}, {"normalized", jz}}.dump(2) << "\n";
            return exit_holds;
        }

        if (rnd->parsed()) {
            cl::GenSpec spec;
            spec.n = rnd_n;
            spec.r = rnd_r;
            spec.bound = rnd_bound;
            spec.seed = rnd_seed;
            cl::ExactMatrix m(1);
            if (rnd_family == "rank1_druzkowski") {
                m = cl::random_rank1_druzkowski(rnd_n, rnd_bound, rnd_seed);
            } else {
                spec.family = rnd_family == "triangular" ? cl::GenSpec::Family::Triangular
                              : rnd_family == "diagonal_invertible"
                                  ? cl::GenSpec::Family::DiagonalInvertible
                              : rnd_family == "block_zero_bottom"
                                  ? cl::GenSpec::Family::BlockZeroBottom
                                  : cl::GenSpec::Family::RankR;
                m = cl::random_structured(spec);
            }
            emit(cl::matrix_to_json(m), rnd_out);
            return exit_holds;
        }

        if (corpus_list->parsed()) {
            for (auto& id : cl::corpus_ids()) {
                cl::CorpusEntry e = cl::load_example(id);
                std::cout << id << ": n=" << e.matrix.n() << " rank=" << e.expected_rank
                          << " nilpotency=" << nilclass_name(e.nilclass)
                          << " keller=" << (e.druzkowski ? "yes" : "no")
                          << " checksum=" << cl::input_hash_hex(e.matrix) << "\n";
            }
            return exit_holds;
        }

        if (corpus_run->parsed()) {
            std::vector<std::string> ids = cl::corpus_ids();
            if (!corpus_only.empty()) ids = {corpus_only};
            std::vector<std::future<std::string>> jobs;
            for (const auto& id : ids)
                jobs.push_back(std::async(std::launch::async, [id, &corpus_dir]() {
                    cl::CorpusEntry e = cl::load_example(id);
                    if (!corpus_dir.empty()) {
                        std::string path = corpus_dir + "/" + id + ".json";
                        cl::ExactMatrix disk = cl::read_matrix_file(path);
                        if (cl::matrix_checksum(disk) != cl::matrix_checksum(e.matrix))
                            return id + ": matrix file " + path +
                                   " differs from the embedded copy";
                        e.matrix = disk;
                    }
                    std::string err = cl::verify_entry_metadata(e);
                    if (!err.empty()) return err;
                    cl::Verdict dru_v = cl::is_druzkowski(e.matrix);
                    if (dru_v.holds() != e.druzkowski)
                        return id + ": Keller test returned " + to_string(dru_v.status) +
                               ", expected " + (e.druzkowski ? "HOLDS" : "FAILS");
                    return std::string();
                }));
            int bad = 0;
            for (size_t i = 0; i < ids.size(); ++i) {
                std::string err = jobs[i].get();
                if (err.empty()) {
                    std::cout << ids[i] << ": ok\n";
                } else {
                    std::cout << err << "\n";
                    ++bad;
                }
            }
            return bad == 0 ? exit_holds : exit_fails;
        }

        if (corpus_export->parsed()) {
            std::filesystem::create_directories(export_dir);
            json expected = json::object();
            for (auto& id : cl::corpus_ids()) {
                cl::CorpusEntry e = cl::load_example(id);
                cl::write_matrix_file(export_dir + "/" + id + ".json", e.matrix);
                expected[id] = json{{"rank", e.expected_rank},
                                    {"nilpotency", nilclass_name(e.nilclass)},
                                    {"keller", e.druzkowski},
                                    {"checksum", cl::input_hash_hex(e.matrix)}};
            }
            std::ofstream out(export_dir + "/expected.json");
            out << expected.dump(2) << "\n";
            std::cout << "wrote " << cl::corpus_ids().size() << " matrices to " << export_dir
                      << "\n";
            return exit_holds;
        }

        if (slice->parsed()) {
            cl::CheckOptions o;
            o.budget.wall_seconds = sl_timeout;
            cl::SliceReport r = cl::explore_slice(sl_n, sl_k, sl_r, o);
            std::cout << to_string(r.feasibility) << " (basis size "
                      << r.gb.basis.size() << ", " << r.elapsed_seconds << "s)\n";
            switch (r.feasibility) {
                case cl::Feasibility::Infeasible: return exit_holds;
                case cl::Feasibility::Feasible: return exit_fails;
                case cl::Feasibility::Unknown: return exit_unknown;
            }
        }

        if (oracle->parsed()) {
            cl::ExactMatrix m = load_matrix(oracle_matrix);
            cl::CheckOptions o;
            o.budget.wall_seconds = oracle_timeout;
            try {
                cl::Tri t = cl::derivation_check(m, o);
                std::cout << (t == cl::Tri::True    ? "invertible"
                              : t == cl::Tri::False ? "not invertible"
                                                    : "unknown")
                          << "\n";
                return t == cl::Tri::True    ? exit_holds
                       : t == cl::Tri::False ? exit_fails
                                             : exit_unknown;
            } catch (const cl::precondition_error& e) {
                std::cerr << "precondition: " << e.what() << "\n";
                return exit_input;
            }
        }

        if (vcert->parsed()) {
            std::ifstream in(cert_path);
            if (!in) {
                std::cerr << "cannot open " << cert_path << "\n";
                return exit_input;
            }
            json j = json::parse(in);
            std::string err = cl::verify_certificate_json(j);
            if (err.empty()) {
                std::cout << "certificate ok\n";
                return exit_holds;
            }
            std::cout << "certificate INVALID: " << err << "\n";
            return exit_fails;
        }
    } catch (const cl::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_usage;
}
