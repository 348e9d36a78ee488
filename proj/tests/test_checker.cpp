#include <doctest.h>

#include <random>

#include "cubiclin/checker.hpp"
#include "cubiclin/corpus.hpp"
#include "cubiclin/randgen.hpp"

using namespace cubiclin;

namespace {

ExactMatrix a0_matrix() {
    return ExactMatrix(2, {GaussianRational(1), GaussianRational(-1), GaussianRational(1),
                           GaussianRational(-1)});
}

CheckOptions no_fast_paths(double seconds = 120) {
    CheckOptions o;
    o.fast_paths = false;
    o.budget.wall_seconds = seconds;
    return o;
}

ExactMatrix permuted(const ExactMatrix& a, const std::vector<size_t>& p) {
    ExactMatrix r(a.n());
    for (size_t i = 0; i < a.n(); ++i)
        for (size_t j = 0; j < a.n(); ++j) r.at(i, j) = a.at(p[i], p[j]);
    return r;
}

}  // namespace

TEST_CASE("fast paths fire on the structural families") {
    CHECK(check_c1(ExactMatrix(3)).fast_path == "rank<=1");  // zero matrix
    CHECK(check_c1(a0_matrix()).fast_path == "rank<=1");
    ExactMatrix tri(3);
    tri.at(0, 1) = GaussianRational(2);
    tri.at(1, 2) = GaussianRational(3);
    tri.at(0, 0) = GaussianRational(1);
    tri.at(1, 1) = GaussianRational(1);
    tri.at(2, 2) = GaussianRational(1);
    CHECK(check_c1(tri).fast_path == "triangular");
    ExactMatrix diag = ExactMatrix::identity(3);
    diag.at(0, 1) = GaussianRational(0);
    CHECK(check_c1(diag).fast_path == "triangular");  // identity is triangular too
    // non-triangular with all principal minors nonzero
    ExactMatrix minors(2, {GaussianRational(2), GaussianRational(1), GaussianRational(1),
                           GaussianRational(1)});
    CHECK(check_c1(minors).fast_path == "all-principal-minors-nonzero");
    // low-dimension singular, not triangular, zero diagonal
    ExactMatrix sing(3);
    sing.at(0, 1) = GaussianRational(1);
    sing.at(1, 0) = GaussianRational(1);
    sing.at(0, 2) = GaussianRational(1);
    sing.at(2, 0) = GaussianRational(1);
    REQUIRE(sing.det().is_zero());
    CHECK(check_c1(sing).fast_path == "low-dimension-singular");
}

TEST_CASE("fast-path verdicts agree with the Groebner pipeline") {
    std::vector<ExactMatrix> cases;
    cases.push_back(a0_matrix());
    cases.push_back(ExactMatrix(2));
    for (uint64_t s = 1; s <= 3; ++s) {
        GenSpec g;
        g.n = 3;
        g.family = GenSpec::Family::Triangular;
        g.seed = s;
        g.bound = 4;
        cases.push_back(random_structured(g));
        GenSpec d = g;
        d.family = GenSpec::Family::DiagonalInvertible;
        cases.push_back(random_structured(d));
        GenSpec r1;
        r1.n = 4;
        r1.r = 1;
        r1.seed = s;
        cases.push_back(random_rank_r(r1));
    }
    for (const ExactMatrix& m : cases) {
        Verdict fast = check_c1(m);
        REQUIRE_FALSE(fast.fast_path.empty());
        Verdict slow = check_c1(m, no_fast_paths());
        CHECK(slow.fast_path.empty());
        CHECK(fast.status == slow.status);
    }
}

TEST_CASE("identity matrix satisfies the membership condition both ways") {
    // triangular fires first; the Groebner pipeline must agree
    Verdict fast = check_c1(ExactMatrix::identity(2));
    CHECK(fast.fast_path == "triangular");
    Verdict slow = check_c1(ExactMatrix::identity(2), no_fast_paths());
    CHECK(slow.holds());
}

TEST_CASE("zk failure is certified by a feasible system") {
    // the identity is outside the Keller precondition, which makes the raw
    // Z_k rows 2 + y_i^2 = 0 solvable over C: the ideal does not contain 1
    // and the verdict is FAILS with the completed basis as certificate
    auto vs = check_zk(ExactMatrix::identity(3), 3, 3, ZkVariant::Thm18, no_fast_paths());
    const Verdict& v = vs.at(3);
    CHECK(v.fails());
    REQUIRE_FALSE(v.certificates.empty());
    CHECK(v.certificates.back().completed);
    CHECK_FALSE(ideal_contains_one(v.certificates.back()));
}

TEST_CASE("c1 implies c2 on small matrices") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> e(-3, 3);
    int checked = 0;
    for (int t = 0; t < 12; ++t) {
        ExactMatrix m(2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) m.at(i, j) = GaussianRational(e(rng));
        Verdict c1 = check_c1(m, no_fast_paths());
        Verdict c2 = check_c2(m, no_fast_paths());
        if (c1.holds()) {
            CHECK(c2.holds());
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("jc requires a Keller matrix") {
    CHECK_THROWS_AS(check_jc(ExactMatrix::identity(2)), precondition_error);
    try {
        check_jc(ExactMatrix::identity(2));
    } catch (const precondition_error& e) {
        CHECK(e.pre_verdict.fails());
        CHECK(std::string(e.what()).find("FAILS") != std::string::npos);
    }
    CHECK(check_jc(a0_matrix()).holds());
    CHECK(check_jc(ExactMatrix(3)).holds());  // zero matrix: F = identity
}

TEST_CASE("c2 auto-detects the Keller property") {
    // a0 is Keller: rows only; identity is not: pencil constraints included
    Verdict keller = check_c2(a0_matrix(), no_fast_paths());
    CHECK(keller.holds());
    Verdict nonkeller = check_c2(ExactMatrix::identity(2), no_fast_paths());
    CHECK(nonkeller.note.find("pencil constraints included") != std::string::npos);
}

TEST_CASE("permutation invariance of verdicts") {
    std::vector<std::vector<size_t>> perms{{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> e(-2, 2);
    for (int t = 0; t < 4; ++t) {
        ExactMatrix m(3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) m.at(i, j) = GaussianRational(e(rng));
        Verdict base = check_c1(m, no_fast_paths());
        for (auto& p : perms) {
            Verdict v = check_c1(permuted(m, p), no_fast_paths());
            CHECK(v.status == base.status);
        }
    }
}

TEST_CASE("block embedding preserves the c1 verdict") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> e(-3, 3);
    for (int t = 0; t < 6; ++t) {
        ExactMatrix a11(2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) a11.at(i, j) = GaussianRational(e(rng));
        std::vector<ExactVector> a12{{GaussianRational(e(rng))},
                                     {GaussianRational(e(rng))}};
        Verdict small = check_c1(a11, no_fast_paths());
        Verdict big = check_c1(block_embed(a11, a12), no_fast_paths());
        CHECK(small.status == big.status);
    }
}

TEST_CASE("zk: prefilter fast path and full verdicts") {
    auto vs = check_zk(load_example("example5").matrix, 3, 4, ZkVariant::Thm19);
    for (auto& [k, v] : vs) {
        CHECK(v.holds());
        CHECK(v.fast_path == "prefilter:ObstructionNilpotency");
    }
    // disabling fast paths must not change the verdict
    auto slow = check_zk(load_example("example5").matrix, 3, 4, ZkVariant::Thm19,
                         no_fast_paths());
    for (auto& [k, v] : slow) {
        CHECK(v.holds());
        CHECK(v.fast_path.empty());
        REQUIRE_FALSE(v.certificates.empty());
        CHECK(ideal_contains_one(v.certificates.back()));
    }
    CHECK_THROWS_AS(check_zk(a0_matrix(), 3, 3, ZkVariant::Thm19), std::invalid_argument);
}

TEST_CASE("zk cofactor certificates verify exactly") {
    CheckOptions o = no_fast_paths();
    o.cofactors = true;
    ExactMatrix m = load_example("example5").matrix;
    auto vs = check_zk(m, 4, 4, ZkVariant::Thm19, o);
    const Verdict& v = vs.at(4);
    REQUIRE(v.holds());
    PolySystem sys = zk_system(m, 4, ZkVariant::Thm19);
    REQUIRE(v.one_cofactors.size() == sys.size());
    MultiPoly acc(sys.universe());
    for (size_t j = 0; j < sys.size(); ++j)
        acc += v.one_cofactors[j] * sys.generators()[j];
    CHECK(acc == MultiPoly::constant(sys.universe(), GaussianRational(1)));
}

TEST_CASE("slice exploration frozen outcomes") {
    CHECK(explore_slice(2, 2, 1).feasibility == Feasibility::Infeasible);
    CHECK(explore_slice(3, 3, 1).feasibility == Feasibility::Infeasible);
    CHECK_THROWS_AS(explore_slice(5, 3, 2), std::invalid_argument);
}

TEST_CASE("budget exhaustion surfaces as UNKNOWN") {
    CheckOptions tiny = no_fast_paths(0.0);
    tiny.budget.max_pairs = 0;
    Verdict v = check_c1(load_example("example5").matrix, tiny);
    CHECK(v.unknown());
    CHECK_FALSE(v.note.empty());
}
