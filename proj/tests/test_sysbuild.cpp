#include <doctest.h>

#include "cubiclin/corpus.hpp"
#include "cubiclin/system_builders.hpp"

using namespace cubiclin;

namespace {

ExactMatrix a0_matrix() {
    return ExactMatrix(2, {GaussianRational(1), GaussianRational(-1), GaussianRational(1),
                           GaussianRational(-1)});
}

bool contains_generator(const PolySystem& sys, const MultiPoly& p) {
    for (auto& g : sys.generators())
        if (g == p) return true;
    return false;
}

}  // namespace

TEST_CASE("pencil system of A0 matches the hand expansion") {
    // det(Id + Delta[(sz+ty)^2] A0) - 1 = (sz1+ty1)^2 - (sz2+ty2)^2, so the
    // (s,t)-coefficients are z1^2-z2^2, 2(z1y1-z2y2), y1^2-y2^2.
    PolySystem sys = pencil_system(a0_matrix());
    REQUIRE(sys.size() == 3);
    const UniversePtr& u = sys.universe();
    MultiPoly z1 = MultiPoly::variable(u, 0), z2 = MultiPoly::variable(u, 1);
    MultiPoly y1 = MultiPoly::variable(u, 2), y2 = MultiPoly::variable(u, 3);
    CHECK(contains_generator(sys, z1 * z1 - z2 * z2));
    CHECK(contains_generator(sys, GaussianRational(2) * (z1 * y1 - z2 * y2)));
    CHECK(contains_generator(sys, y1 * y1 - y2 * y2));
}

TEST_CASE("keller polynomial vanishes exactly for Keller matrices") {
    CHECK(keller_polynomial(a0_matrix()).is_zero());
    ExactMatrix id = ExactMatrix::identity(2);
    CHECK_FALSE(keller_polynomial(id).is_zero());
    // dimension guard: symbolic mode refuses large matrices
    CHECK_THROWS_AS(keller_polynomial(load_example("example1").matrix), structural_error);
}

TEST_CASE("keller polynomial agrees with a brute-force determinant (n <= 3)") {
    std::vector<ExactMatrix> cases;
    cases.push_back(a0_matrix());
    cases.push_back(ExactMatrix::identity(3));
    ExactMatrix u3(3);
    u3.at(0, 1) = GaussianRational(2);
    u3.at(1, 2) = GaussianRational(-1);
    cases.push_back(u3);
    for (const ExactMatrix& a : cases) {
        size_t n = a.n();
        auto univ = make_universe(VarUniverse::indexed("x", n));
        std::vector<MultiPoly> x, ax(n, MultiPoly(univ));
        for (size_t i = 0; i < n; ++i) x.push_back(MultiPoly::variable(univ, i));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!a.at(i, j).is_zero()) ax[i] += a.at(i, j) * x[j];
        PolyMatrix m = PolyMatrix::identity(n, univ);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!a.at(i, j).is_zero()) m.at(i, j) += (ax[i] * ax[i]) * a.at(i, j);
        MultiPoly brute = m.det() - MultiPoly::constant(univ, GaussianRational(1));
        CHECK(keller_polynomial(a, univ) == brute);
    }
}

TEST_CASE("randomized Keller test: verdict shape and witness") {
    Verdict ok = is_druzkowski(a0_matrix());
    CHECK(ok.holds());
    REQUIRE(ok.sz_log2_failure_bound.has_value());
    CHECK(*ok.sz_log2_failure_bound < -40.0);

    Verdict bad = is_druzkowski(ExactMatrix::identity(2));
    CHECK(bad.fails());
    REQUIRE(bad.witness.has_value());

    DruzkowskiOptions exact;
    exact.mode = DruzkowskiOptions::Mode::Exact;
    Verdict bad2 = is_druzkowski(ExactMatrix::identity(2), exact);
    CHECK(bad2.fails());
    REQUIRE(bad2.witness.has_value());
}

TEST_CASE("system shapes: generator counts and provenance") {
    PolySystem c1 = c1_system(a0_matrix());
    // 2 cubic rows + 3 pencil coefficients
    CHECK(c1.size() == 5);
    size_t rows = 0, pencil = 0;
    for (auto& p : c1.provenance()) {
        if (p.kind == Provenance::Kind::CubicRow) ++rows;
        if (p.kind == Provenance::Kind::PencilCoefficient) ++pencil;
    }
    CHECK(rows == 2);
    CHECK(pencil == 3);

    PolySystem c2_keller = c2_system(a0_matrix(), true);
    CHECK(c2_keller.size() == 2);  // rows only
    PolySystem c2_full = c2_system(a0_matrix(), false);
    CHECK(c2_full.size() > c2_keller.size());

    PolySystem direct = injective_direct_system(a0_matrix());
    CHECK(direct.size() == 2);
}

TEST_CASE("row generators vanish at z = 0") {
    for (const std::string& id : {"example3", "example5", "a0"}) {
        ExactMatrix a = load_example(id).matrix;
        PolySystem sys = c2_system(a, true);
        size_t n = a.n();
        ExactVector pt(2 * n, GaussianRational(0));
        for (size_t i = n; i < 2 * n; ++i) pt[i] = GaussianRational(static_cast<long>(i));
        for (auto& g : sys.generators()) CHECK(g.evaluate(pt).is_zero());
    }
}

TEST_CASE("zk system: shape and the Z_k substitution") {
    ExactMatrix a = a0_matrix();
    CHECK_THROWS_AS(zk_system(a, 2, ZkVariant::Thm19), std::invalid_argument);
    ExactMatrix e5 = load_example("example5").matrix;
    PolySystem s18 = zk_system(e5, 3, ZkVariant::Thm18);
    CHECK(s18.size() <= e5.n());  // zero rows are dropped
    PolySystem s19 = zk_system(e5, 3, ZkVariant::Thm19);
    CHECK(s19.size() >= s18.size());
    // thm19 includes pencil coefficients
    bool has_pencil = false;
    for (auto& p : s19.provenance())
        if (p.kind == Provenance::Kind::PencilCoefficient) has_pencil = true;
    CHECK(has_pencil);
}

TEST_CASE("slice system validation") {
    CHECK_THROWS_AS(vn_slice_system(3, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(vn_slice_system(3, 3, 3), std::invalid_argument);
    PolySystem s = vn_slice_system(2, 2, 1);
    // unknowns: y1,y2 + 1x2 free rows + 1x1 combination coefficients
    CHECK(s.universe()->size() == 2 + 2 + 1);
}
