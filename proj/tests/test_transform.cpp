#include <doctest.h>

#include "cubiclin/randgen.hpp"
#include "cubiclin/system_builders.hpp"
#include "cubiclin/transform.hpp"

using namespace cubiclin;

namespace {

ExactMatrix a0_matrix() {
    return ExactMatrix(2, {GaussianRational(1), GaussianRational(-1), GaussianRational(1),
                           GaussianRational(-1)});
}

ExactMatrix cube_inverse(const DiagonalAction& d) {
    ExactMatrix m(d.n());
    for (size_t i = 0; i < d.n(); ++i) {
        GaussianRational e = d.d[i];
        m.at(i, i) = (e * e * e).inv();
    }
    return m;
}

}  // namespace

TEST_CASE("diagonal conjugation: frozen value and group laws") {
    DiagonalAction d({GaussianRational(2), GaussianRational(1)});
    ExactMatrix c = diagonal_conjugate(a0_matrix(), d);
    CHECK(c.at(0, 0) == parse_scalar("1/4"));
    CHECK(c.at(0, 1) == parse_scalar("-2"));
    CHECK(c.at(1, 0) == parse_scalar("1/8"));
    CHECK(c.at(1, 1) == parse_scalar("-1"));

    // identity acts trivially; inverse action undoes the conjugation
    CHECK(diagonal_conjugate(a0_matrix(), DiagonalAction::identity(2)) == a0_matrix());
    ExactVector inv(2);
    for (size_t i = 0; i < 2; ++i) inv[i] = d.d[i].inv();
    CHECK(diagonal_conjugate(c, DiagonalAction(inv)) == a0_matrix());

    CHECK_THROWS_AS(DiagonalAction({GaussianRational(0)}), structural_error);
}

TEST_CASE("diagonal action preserves the Keller property") {
    std::vector<uint64_t> seeds{1, 2, 3, 4, 5};
    for (uint64_t s : seeds) {
        DiagonalAction d = random_diagonal(2, 7, s);
        ExactMatrix c = diagonal_conjugate(a0_matrix(), d);
        CHECK(keller_polynomial(c).is_zero());
    }
}

TEST_CASE("diagonal action maps the variety membership system into itself") {
    // If the c1 generators of A vanish at (z, y), the generators of D A D^-3
    // vanish at (Dz, Dy): check as a polynomial identity via substitution.
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> val(1, 6);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a(2);
        std::uniform_int_distribution<long> entry(-4, 4);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) a.at(i, j) = GaussianRational(entry(rng));
        DiagonalAction d({GaussianRational(val(rng)), GaussianRational(-val(rng))});
        ExactMatrix ad = diagonal_conjugate(a, d);

        PolySystem sa = c1_system(a), sad = c1_system(ad);
        const UniversePtr& u = sa.universe();
        // substitution z -> D z, y -> D y applied to the transformed system
        std::map<std::string, MultiPoly> sub;
        for (size_t i = 0; i < 2; ++i) {
            sub["z" + std::to_string(i + 1)] =
                d.d[i] * MultiPoly::variable(u, i);
            sub["y" + std::to_string(i + 1)] =
                d.d[i] * MultiPoly::variable(u, 2 + i);
        }
        // every substituted generator of the transformed system must lie in
        // the ideal of the original system (combination of its generators)
        auto gb = buchberger(sa, MonomialOrder::grevlex());
        REQUIRE(gb.completed);
        for (auto& g : sad.generators())
            CHECK(normal_form(g.substitute(sub), gb).is_zero());
    }
}

TEST_CASE("witness normalization produces an idempotent vector") {
    auto [action, zn] = normalize_witness(
        {GaussianRational(3), GaussianRational(0), GaussianRational(-2)});
    CHECK(action.d[0] == parse_scalar("1/3"));
    CHECK(action.d[1] == parse_scalar("1"));
    CHECK(action.d[2] == parse_scalar("-1/2"));
    CHECK(zn == ExactVector{GaussianRational(1), GaussianRational(0), GaussianRational(1)});
    for (auto& e : zn) CHECK(e * e == e);
    // normalization is the diagonal action applied to the witness
    CHECK(action.apply({GaussianRational(3), GaussianRational(0), GaussianRational(-2)}) ==
          zn);
}

TEST_CASE("cubed action on the y component") {
    DiagonalAction d({GaussianRational(2), GaussianRational(-3)});
    ExactVector v{GaussianRational(1), GaussianRational(1)};
    ExactVector c = d.apply_cubed(v);
    CHECK(c[0] == GaussianRational(8));
    CHECK(c[1] == GaussianRational(-27));
}

TEST_CASE("cubic similarity identity") {
    DiagonalAction d({GaussianRational(2), GaussianRational(1)});
    ExactMatrix b = diagonal_conjugate(a0_matrix(), d);
    CHECK(verify_cubic_similar(a0_matrix(), b, cube_inverse(d)));
    CHECK_FALSE(verify_cubic_similar(a0_matrix(), b, ExactMatrix::identity(2)));
    CHECK_THROWS_AS(verify_cubic_similar(a0_matrix(), b, ExactMatrix(2)), structural_error);
}

TEST_CASE("block embedding") {
    ExactMatrix a11 = a0_matrix();
    std::vector<ExactVector> a12{{GaussianRational(5)}, {GaussianRational(-7)}};
    ExactMatrix m = block_embed(a11, a12);
    REQUIRE(m.n() == 3);
    CHECK(m.at(0, 2) == GaussianRational(5));
    CHECK(m.at(1, 2) == GaussianRational(-7));
    for (size_t j = 0; j < 3; ++j) CHECK(m.at(2, j).is_zero());
    // rank of [a11 | a12] with a zero bottom block: here the extra column is
    // outside the column space of a11, so the rank goes up by one
    CHECK(m.rank() == 2);
}

TEST_CASE("Z_k prefilter obstructions") {
    // leading block of the identity is not nilpotent
    CHECK(zk_image_prefilter(ExactMatrix::identity(3), 3) ==
          ZkObstruction::ObstructionNilpotency);
    // nilpotent block whose image misses (1,...,1): strictly upper triangular
    ExactMatrix u(2);
    u.at(0, 1) = GaussianRational(1);
    CHECK(zk_image_prefilter(u, 2) == ZkObstruction::ObstructionImage);
    // A0 block passes both necessary conditions
    CHECK(zk_image_prefilter(a0_matrix(), 2) == ZkObstruction::NoObstruction);
    CHECK_THROWS_AS(zk_image_prefilter(a0_matrix(), 5), structural_error);
}
