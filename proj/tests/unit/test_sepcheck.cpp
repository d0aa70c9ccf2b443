#include <doctest.h>

#include "semisep/errors.hpp"
#include "semisep/hopf/hopf.hpp"
#include "semisep/sepcheck/sepcheck.hpp"
#include "semisep/sepcheck/verify.hpp"
#include "../support/algebra_fixtures.hpp"

using namespace semisep;
using namespace semisep::sepcheck;
using namespace fixtures;
using verify::Kind;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

void check_ring_report(const AlgebraMap& phi, const RingExtReport& rep) {
    if (rep.separable.holds() || rep.naturally_full.holds()) CHECK(rep.semiseparable.holds());
    if (rep.semiseparable.holds()) {
        REQUIRE(rep.E);
        CHECK(all_hold(verify::ring_ext(phi, *rep.E, Kind::semiseparable)));
        CHECK(all_hold(rep.certificates));
        CHECK(rep.z_unique);
    } else {
        CHECK(rep.semiseparable.rank < rep.semiseparable.rank_augmented);
    }
    if (rep.separable.holds()) CHECK(all_hold(verify::ring_ext(phi, *rep.E_separable, Kind::separable)));
    if (rep.naturally_full.holds())
        CHECK(all_hold(verify::ring_ext(phi, *rep.E_naturally_full, Kind::naturally_full)));
}

}  // namespace

TEST_CASE("ring extension: scalars into dual numbers") {
    auto phi = dual_inclusion(Q);
    auto rep = ring_ext_analyze(phi);
    CHECK(rep.semiseparable.holds());
    CHECK(rep.separable.holds());
    CHECK(!rep.naturally_full.holds());
    // E(a + bx) = a is a separable witness; it is also the canonical one.
    CHECK(all_hold(verify::ring_ext(phi, mat({{1, 0}}, Q), Kind::separable)));
    CHECK(*rep.E_separable == mat({{1, 0}}, Q));
    CHECK(*rep.z == vec({1}, Q));
    check_ring_report(phi, rep);
}

TEST_CASE("ring extension: dual numbers onto scalars") {
    auto phi = dual_augmentation(Q);
    auto rep = ring_ext_analyze(phi);
    CHECK(!rep.semiseparable.holds());
    CHECK(!rep.separable.holds());
    CHECK(!rep.naturally_full.holds());
    CHECK(!rep.z);
    check_ring_report(phi, rep);
}

TEST_CASE("ring extension: projection of a product") {
    auto phi = first_projection(Q);
    auto rep = ring_ext_analyze(phi);
    CHECK(rep.semiseparable.holds());
    CHECK(!rep.separable.holds());
    CHECK(rep.naturally_full.holds());
    CHECK(*rep.E_naturally_full == mat({{1}, {0}}, Q));
    CHECK(*rep.z == vec({1, 0}, Q));
    check_ring_report(phi, rep);
}

TEST_CASE("ring extension: composite through the scalars") {
    auto phi = compose(dual_inclusion(Q), first_projection(Q));
    auto rep = ring_ext_analyze(phi);
    CHECK(rep.semiseparable.holds());
    CHECK(!rep.separable.holds());
    CHECK(!rep.naturally_full.holds());
    CHECK(*rep.z == vec({1, 0}, Q));
    check_ring_report(phi, rep);
}

TEST_CASE("ring extension catalogue") {
    for (auto f : {Q, F5, Field::prime(2)})
        for (const auto& [name, phi] : ring_map_catalogue(f)) {
            CAPTURE(name);
            CAPTURE(f.tag());
            check_ring_report(phi, ring_ext_analyze(phi));
        }
    // Over a field every extension of 𝕜 splits; M₂(𝕜) has a separability
    // idempotent in every characteristic.
    for (auto f : {Q, Field::prime(2), Field::prime(3)}) CHECK(ring_ext_analyze(scalar_matrices(f, 2)).separable.holds());
    CHECK(sweedler_coring(scalar_matrices(Field::prime(2), 2)).separability_idempotent.holds());
}

TEST_CASE("ring extension rejects non-unital maps") {
    AlgebraMap bad{k(Q), kxk(Q), mat({{1}, {0}}, Q)};
    CHECK_THROWS_AS(ring_ext_analyze(bad), InputError);
}

TEST_CASE("coalgebra maps") {
    auto ab = hopf::grouplike_coalgebra(Q, {"a", "b"});
    auto x = hopf::grouplike_coalgebra(Q, {"x"});
    auto xy = hopf::grouplike_coalgebra(Q, {"x", "y"});
    auto a = hopf::grouplike_coalgebra(Q, {"a"});

    CoalgebraMap id{ab, ab, Matrix::identity(2, Q)};
    auto r0 = coalg_map_analyze(id);
    CHECK(r0.semiseparable.holds());
    CHECK(r0.separable.holds());
    CHECK(r0.naturally_full.holds());
    CHECK(*r0.chi_separable == Matrix::identity(2, Q));

    CoalgebraMap collapse{ab, x, mat({{1, 1}}, Q)};
    auto r1 = coalg_map_analyze(collapse);
    CHECK(r1.semiseparable.holds());
    CHECK(!r1.naturally_full.holds());
    CHECK(all_hold(verify::coalg_map(collapse, mat({{1}, {0}}, Q), Kind::semiseparable)));
    CHECK(all_hold(verify::coalg_map(collapse, *r1.chi, Kind::semiseparable)));

    CoalgebraMap pick{a, xy, mat({{1}, {0}}, Q)};
    auto r2 = coalg_map_analyze(pick);
    CHECK(r2.semiseparable.holds());
    CHECK(!r2.separable.holds());
    CHECK(*r2.chi == mat({{1, 0}}, Q));
    CHECK(all_hold(verify::coalg_map(pick, *r2.chi, Kind::semiseparable)));
    // A split mono, so χ∘ψ = Id as well.
    CHECK(r2.naturally_full.holds());

    CoalgebraMap bad{ab, x, mat({{1, 2}}, Q)};
    CHECK_THROWS_AS(coalg_map_analyze(bad), InputError);
}

TEST_CASE("coalgebra maps out of the Sweedler algebra") {
    auto h = hopf::sweedler_h4(Q).coalgebra;
    auto kg = hopf::grouplike_coalgebra(Q, {"1", "g"});
    for (long long k = 0; k <= 2; ++k) {
        CoalgebraMap fk{h, kg, mat({{1, 0, k, k}, {0, 1, -k, -k}}, Q)};
        auto rep = coalg_map_analyze(fk);
        if (rep.semiseparable.holds()) CHECK(all_hold(verify::coalg_map(fk, *rep.chi, Kind::semiseparable)));
        if (rep.separable.holds()) CHECK(all_hold(verify::coalg_map(fk, *rep.chi_separable, Kind::separable)));
        CHECK(!rep.naturally_full.holds());
    }
}

TEST_CASE("trivial corings are cosplit") {
    for (const auto& r : {k(Q), kxk(Q), dual_numbers(Q), matrix_algebra(Q, 2)}) {
        auto c = algstruct::trivial_coring(r);
        auto rep = coring_analyze(c);
        CHECK(rep.cosplit.holds());
        CHECK(rep.semicosplit.holds());
        CHECK(rep.natfull_G.holds());
        CHECK(rep.coseparable.holds());
        CHECK(*rep.z_cosplit == r.unit);
        CHECK(rep.equivalent_form_agrees);
        CHECK(rep.regularity_agrees);
        CHECK(all_hold(verify::coring(c, *rep.z_cosplit, Kind::separable)));
        auto fac = coring_factorize(c, rep);
        CHECK(all_hold(fac.certificates));
        CHECK(fac.ideal.C.dim == r.dim);
    }
}

namespace {

// R = 𝕜×𝕜, C = 𝕜 through the first projection, ε(s) = (s,0), Δ(s) = s⊗1.
algstruct::Coring ideal_coring(Field f) {
    auto c = restrict(vector_bimodule(f, 1), first_projection(f), first_projection(f));
    return {c, mat({{1}}, f), mat({{1}, {0}}, f)};
}

}  // namespace

TEST_CASE("the ideal coring of a product") {
    auto c = ideal_coring(Q);
    CHECK(algstruct::validate(c).empty());
    auto rep = coring_analyze(c);
    CHECK(rep.semicosplit.holds());
    CHECK(!rep.cosplit.holds());
    CHECK(c.eps.apply(*rep.z) == vec({1, 0}, Q));
    CHECK(rep.equivalent_form_agrees);
    CHECK(rep.regularity_agrees);
    CHECK(all_hold(verify::coring(c, *rep.z, Kind::semiseparable)));
    auto fac = coring_factorize(c, rep);
    CHECK(all_hold(fac.certificates));
    CHECK(fac.ideal.C.dim == 1);
    CHECK(fac.psi == Matrix::identity(1, Q));
    CHECK(fac.inclusion.col(0) == vec({1, 0}, Q));
}

TEST_CASE("factorization needs a semicosplit coring") {
    auto s = sweedler_coring(dual_inclusion(Q));
    CHECK_THROWS_AS(coring_factorize(s.coring, s.report), PreconditionError);
}

TEST_CASE("Sweedler corings") {
    auto id = sweedler_coring(identity_map(dual_numbers(Q)));
    CHECK(id.report.semicosplit.holds());
    CHECK(id.coring.C.dim == 2);
    // 1⊗1 is the unit of S⊗_S S ≅ S.
    CHECK(id.coring.eps.apply(*id.idempotent) == dual_numbers(Q).unit);

    auto diag = sweedler_coring(diagonal_inclusion(Q));
    CHECK(diag.report.semicosplit.holds());
    CHECK(diag.separability_idempotent.holds());
    // e₁⊗e₁ + e₂⊗e₂ in flat coordinates.
    CHECK(diag.coring.C.dim == 4);
    CHECK(diag.idempotent == vec({1, 0, 0, 1}, Q));

    auto dual = sweedler_coring(dual_inclusion(Q));
    CHECK(!dual.report.semicosplit.holds());
    CHECK(!dual.separability_idempotent.holds());

    for (auto f : {Q, F5})
        for (const auto& [name, phi] : ring_map_catalogue(f)) {
            if (phi.target.dim > 3) continue;
            CAPTURE(name);
            auto s = sweedler_coring(phi);
            CHECK(s.sweed1_agrees);
            CHECK(s.sweed2_agrees);
            CHECK(s.report.equivalent_form_agrees);
            CHECK(s.report.regularity_agrees);
            if (s.report.semicosplit.holds()) CHECK(all_hold(verify::coring(s.coring, *s.report.z, Kind::semiseparable)));
        }
}

TEST_CASE("bimodule criteria on pinned modules") {
    auto s = regular_bimodule(dual_numbers(Q));
    auto r1 = bimodule_analyze(s);
    CHECK(r1.M_sep.holds());
    CHECK(r1.M_semisep.holds());
    CHECK(r1.thm_agrees);
    CHECK(r1.cor_agrees);

    for (std::size_t n = 1; n <= 3; ++n) {
        auto v = vector_bimodule(Q, n);
        auto rep = bimodule_analyze(v);
        CHECK(rep.M_sep.holds());
        CHECK(rep.thm_agrees);
        CHECK(rep.cor_agrees);
        // (1/n) Σ eᵢ*⊗eᵢ; M* has the coordinate functionals as its basis.
        Vector avg = semisep::linalg::zero_vector(n * n, Q);
        for (std::size_t i = 0; i < n; ++i) avg[i * n + i] = Scalar(semisep::linalg::Rational(1, static_cast<long>(n)));
        CHECK(all_hold(verify::bimodule(v, rep.dual_maps, avg, true)));
        CHECK(all_hold(verify::bimodule(v, rep.dual_maps, *rep.central_tensor_flat, false)));
    }

    auto l = line_over_product(Q);
    auto rep = bimodule_analyze(l);
    CHECK(rep.M_semisep.holds());
    CHECK(!rep.M_sep.holds());
    CHECK(*rep.z == vec({1, 0}, Q));
    CHECK(!rep.generator.holds());
    CHECK(rep.fgp.holds());
    CHECK(rep.thm_agrees);
    CHECK(rep.cor_agrees);
    CHECK(all_hold(rep.certificates));
    CHECK(all_hold(verify::bimodule(l, rep.dual_maps, *rep.central_tensor_flat, false)));
}

TEST_CASE("bimodule criteria on random modules over F5") {
    std::mt19937 rng(2024);
    int fgp = 0;
    for (int i = 0; i < 40; ++i) {
        auto m = random_bimodule(rng, F5);
        auto rep = bimodule_analyze(m);
        CHECK(rep.thm_agrees);
        CHECK(rep.cor_agrees);
        CHECK(all_hold(rep.certificates));
        if (rep.M_semisep.holds())
            CHECK(all_hold(verify::bimodule(m, rep.dual_maps, *rep.central_tensor_flat, false)));
        if (!rep.fgp.holds()) continue;
        ++fgp;
        auto c = comatrix_coring(m);
        CHECK(coring_analyze(c).semicosplit.holds() == rep.M_semisep.holds());
        CHECK(endo_ring_analyze(m).agrees);
    }
    CHECK(fgp >= 10);
}

TEST_CASE("comatrix corings") {
    auto s = regular_bimodule(dual_numbers(Q));
    CHECK(comatrix_coring(s).C.dim == 2);
    auto v = vector_bimodule(Q, 2);
    auto cv = comatrix_coring(v);
    CHECK(cv.C.dim == 4);
    CHECK(coring_analyze(cv).semicosplit.holds());
    auto l = line_over_product(Q);
    auto cl = comatrix_coring(l);
    CHECK(cl.C.dim == 1);
    CHECK(coring_analyze(cl).semicosplit.holds());
    CHECK(bimodule_analyze(l).M_semisep.holds());

    auto aug = dual_augmentation(Q);
    auto nonproj = restrict(vector_bimodule(Q, 1), identity_map(k(Q)), aug);
    CHECK_THROWS_AS(comatrix_coring(nonproj), PreconditionError);
}

TEST_CASE("comatrix comultiplication does not depend on the dual basis") {
    std::mt19937 rng(99);
    int tested = 0;
    for (int i = 0; i < 40 && tested < 10; ++i) {
        auto m = random_bimodule(rng, F5);
        auto tr = algstruct::trace_ideal_and_fgp(m);
        if (!tr.fgp || tr.dual_basis_directions.empty()) continue;
        ++tested;
        const std::size_t nd = tr.dual.maps.size();
        std::vector<Vector> alt = tr.dual_basis_functionals;
        std::uniform_int_distribution<long long> coef(1, 4);
        for (const auto& dir : tr.dual_basis_directions) {
            Scalar c(coef(rng), F5);
            for (std::size_t e = 0; e < alt.size(); ++e)
                for (std::size_t a = 0; a < nd; ++a) alt[e][a] += c * dir[e * nd + a];
        }
        auto c1 = comatrix_coring(m, tr.dual_basis_elements, tr.dual_basis_functionals);
        auto c2 = comatrix_coring(m, tr.dual_basis_elements, alt);
        auto t = algstruct::balanced_tensor(c1.C, c1.C);
        CHECK(t.quotient.projection * c1.delta == t.quotient.projection * c2.delta);
    }
    CHECK(tested >= 3);
}

TEST_CASE("endomorphism rings") {
    auto s = regular_bimodule(dual_numbers(Q));
    auto e1 = endo_ring_analyze(s);
    CHECK(e1.endo.dim == 2);
    CHECK(e1.agrees);

    auto v = vector_bimodule(Q, 2);
    auto e2 = endo_ring_analyze(v);
    CHECK(e2.endo.dim == 4);
    CHECK(e2.report.separable.holds());
    CHECK(e2.agrees);

    auto e3 = endo_ring_analyze(line_over_product(Q));
    CHECK(e3.endo.dim == 1);
    CHECK(e3.report.separable.holds());
    CHECK(e3.agrees);
}
