#include <doctest.h>

#include "semisep/algstruct/constructions.hpp"
#include "semisep/errors.hpp"
#include "../support/algebra_fixtures.hpp"

using namespace semisep::algstruct;
using namespace fixtures;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

bool contains(const std::vector<std::string>& v, const std::string& needle) {
    for (const auto& s : v)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

// Evaluates the bimodule-map laws for f: M → N directly on basis elements.
bool is_bimodule_map(const Bimodule& m, const Bimodule& n, const Matrix& f) {
    for (std::size_t j = 0; j < m.dim; ++j) {
        auto e = semisep::linalg::unit_vector(m.dim, j, m.field());
        for (std::size_t i = 0; i < m.left.size(); ++i)
            if (f.apply(m.left[i].apply(e)) != n.left[i].apply(f.apply(e))) return false;
        for (std::size_t i = 0; i < m.right.size(); ++i)
            if (f.apply(m.right[i].apply(e)) != n.right[i].apply(f.apply(e))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("algebra validation") {
    CHECK(validate(k(Q)).empty());
    CHECK(validate(dual_numbers(Q)).empty());
    CHECK(validate(matrix_algebra(Q, 2)).empty());
    CHECK(validate(product(dual_numbers(Q), k(Q))).empty());
    CHECK(validate(truncated_polynomial(F5, 3)).empty());

    // (x·1)·x = x but x·(1·x) = 0.
    auto broken = dual_numbers(Q);
    broken.mult[3] = vec({0, 1}, Q);  // x·x = x, fine so far
    broken.mult[1] = vec({0, 0}, Q);  // 1·x = 0 breaks the unit and associativity
    auto v = validate(broken);
    CHECK(contains(v, "associativity fails at (1,0,1)"));
    CHECK(contains(v, "left unit law fails at (1)"));
}

TEST_CASE("hand-expanded dual number constants") {
    auto a = dual_numbers(Q);
    CHECK(a.mult[0] == vec({1, 0}, Q));
    CHECK(a.mult[1] == vec({0, 1}, Q));
    CHECK(a.mult[2] == vec({0, 1}, Q));
    CHECK(a.mult[3] == vec({0, 0}, Q));
}

TEST_CASE("bimodule validation") {
    CHECK(validate(regular_bimodule(dual_numbers(Q))).empty());
    CHECK(validate(line_over_product(Q)).empty());
    auto m = regular_bimodule(matrix_algebra(Q, 2));
    CHECK(validate(m).empty());
    // Left action by a non-central element on the right breaks commutation.
    auto bad = m;
    bad.right = m.left;
    CHECK(!validate(bad).empty());
    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i) CHECK(validate(random_bimodule(rng, F5)).empty());
}

TEST_CASE("balanced tensor") {
    auto v2 = vector_bimodule(Q, 2), v3 = vector_bimodule(Q, 3);
    CHECK(balanced_tensor(v2, v3).bimodule.dim == 6);

    auto a = regular_bimodule(dual_numbers(Q));
    auto t = balanced_tensor(a, a);
    CHECK(t.bimodule.dim == 2);
    // A⊗_A A ≅ A via multiplication: the projection kills exactly the kernel of mult.
    auto mult = semisep::linalg::matrix_of(4, 2, Q, [&](const Vector& x) {
        Vector out = semisep::linalg::zero_vector(2, Q);
        for (std::size_t p = 0; p < 4; ++p)
            semisep::linalg::axpy(out, x[p], dual_numbers(Q).mult[p]);
        return out;
    });
    CHECK(semisep::linalg::rank(mult) == 2);

    auto kk = regular_bimodule(kxk(Q));
    auto line = restrict(vector_bimodule(Q, 1), first_projection(Q), identity_map(k(Q)));
    CHECK(balanced_tensor(kk, line).bimodule.dim == 1);

    CHECK_THROWS_AS(balanced_tensor(a, kk), semisep::InputError);
}

TEST_CASE("bimodule map spaces") {
    auto kb = regular_bimodule(k(Q));
    CHECK(bimodule_map_space(kb, kb).size() == 1);
    CHECK(bimodule_map_space(vector_bimodule(Q, 2), vector_bimodule(Q, 1)).size() == 2);

    // _RHom_R(𝕜, R) for R = 𝕜[x]/(x²), 𝕜 via x ↦ 0.
    auto r = dual_numbers(Q);
    auto aug = dual_augmentation(Q);
    auto kr = restrict(regular_bimodule(k(Q)), aug, aug);
    auto maps = bimodule_map_space(kr, regular_bimodule(r));
    REQUIRE(maps.size() == 1);
    CHECK(maps[0](0, 0).is_zero());
    CHECK(!maps[0](1, 0).is_zero());

    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto m = random_bimodule(rng, F5);
        for (const auto& f : bimodule_map_space(m, m)) CHECK(is_bimodule_map(m, m, f));
        CHECK(bimodule_map_space(m, m).size() >= 1);
    }
}

TEST_CASE("invariants") {
    CHECK(invariants(vector_bimodule(Q, 3)).size() == 3);
    CHECK(invariants(regular_bimodule(kxk(Q))).size() == 2);
    auto m2 = invariants(regular_bimodule(matrix_algebra(Q, 2)));
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == vec({1, 0, 0, 1}, Q));

    std::mt19937 rng(3);
    int square = 0;
    while (square < 20) {
        auto m = random_bimodule(rng, F5);
        if (!(m.left_algebra == m.right_algebra)) continue;
        ++square;
        CHECK(invariants(m) == invariants_by_intersection(m));
    }
}

TEST_CASE("dual modules") {
    CHECK(dual_module(regular_bimodule(k(Q))).bimodule.dim == 1);

    auto d = dual_module(line_over_product(Q));
    REQUIRE(d.maps.size() == 1);
    CHECK(d.maps[0].col(0) == vec({1, 0}, Q));

    auto s = regular_bimodule(dual_numbers(Q));
    CHECK(dual_module(s).bimodule.dim == 2);
}

TEST_CASE("center and idempotents") {
    auto a = dual_numbers(Q);
    auto r1 = center_and_idempotent(a, a.unit);
    CHECK(r1.central);
    CHECK(r1.idempotent);
    CHECK(r1.endomorphism_central_idempotent);

    auto r2 = center_and_idempotent(kxk(Q), vec({1, 0}, Q));
    CHECK(r2.central);
    CHECK(r2.idempotent);
    CHECK(r2.endomorphism_central_idempotent);

    auto r3 = center_and_idempotent(a, vec({0, 1}, Q));
    CHECK(r3.central);
    CHECK(!r3.idempotent);
    CHECK(r3.consistent());

    auto m = matrix_algebra(Q, 2);
    CHECK(center_and_idempotent(m).center.size() == 1);
    auto r4 = center_and_idempotent(m, vec({1, 0, 0, 0}, Q));
    CHECK(!r4.central);
    CHECK(r4.idempotent);
    CHECK(r4.consistent());
}

TEST_CASE("trace ideals and finite generation") {
    auto s = trace_ideal_and_fgp(regular_bimodule(dual_numbers(Q)));
    CHECK(s.generator);
    CHECK(s.fgp);

    auto l = trace_ideal_and_fgp(line_over_product(Q));
    CHECK(l.fgp);
    CHECK(!l.generator);
    REQUIRE(l.trace_ideal.size() == 1);
    CHECK(l.trace_ideal[0] == vec({1, 0}, Q));

    auto v = trace_ideal_and_fgp(vector_bimodule(Q, 3));
    CHECK(v.generator);
    CHECK(v.fgp);
    CHECK(v.dual_basis_elements.size() == 3);

    // 𝕜 over 𝕜[x]/(x²) via x ↦ 0 is not projective.
    auto aug = dual_augmentation(Q);
    auto nonproj = restrict(vector_bimodule(Q, 1), identity_map(k(Q)), aug);
    CHECK(!trace_ideal_and_fgp(nonproj).fgp);
}

TEST_CASE("dual of the dual at fgp instances") {
    std::mt19937 rng(19);
    int fgp = 0;
    for (int i = 0; i < 40; ++i) {
        auto m = random_bimodule(rng, F5);
        auto t = trace_ideal_and_fgp(m);
        if (!t.fgp) continue;
        ++fgp;
        // M** needs M* viewed as a right module over R: dualize the (S,R)-bimodule.
        CHECK(dual_module(t.dual.bimodule).bimodule.dim == m.dim);
        // Dual basis identity evaluated directly.
        for (std::size_t j = 0; j < m.dim; ++j) {
            auto e = semisep::linalg::unit_vector(m.dim, j, F5);
            Vector acc = semisep::linalg::zero_vector(m.dim, F5);
            for (std::size_t i2 = 0; i2 < m.dim; ++i2) {
                auto val = t.dual.functional(t.dual_basis_functionals[i2]).apply(e);
                semisep::linalg::axpy(acc, Scalar::one(F5), m.right_action(val).apply(t.dual_basis_elements[i2]));
            }
            CHECK(acc == e);
        }
    }
    CHECK(fgp > 5);
}

TEST_CASE("corners and subalgebras") {
    auto c = corner_algebra(kxk(Q), vec({1, 0}, Q));
    CHECK(c.algebra.dim == 1);
    CHECK(validate(c.algebra).empty());
    auto s = subalgebra(dual_numbers(Q), {vec({1, 0}, Q)});
    CHECK(s.algebra.dim == 1);
    CHECK_THROWS_AS(subalgebra(dual_numbers(Q), {vec({0, 1}, Q)}), semisep::PreconditionError);
}

TEST_CASE("coring validation") {
    CHECK(validate(trivial_coring(dual_numbers(Q))).empty());
    CHECK(validate(trivial_coring(kxk(Q))).empty());
    auto bad = trivial_coring(kxk(Q));
    bad.eps = Matrix::identity(2, Q) + Matrix::identity(2, Q);
    CHECK(contains(validate(bad), "counit law fails"));
}

TEST_CASE("algebra maps") {
    CHECK(validate(first_projection(Q)).empty());
    CHECK(validate(dual_inclusion(Q)).empty());
    CHECK(validate(dual_augmentation(Q)).empty());
    CHECK(validate(compose(dual_inclusion(Q), first_projection(Q))).empty());
    AlgebraMap bad{k(Q), kxk(Q), mat({{1}, {0}}, Q)};
    CHECK(contains(validate(bad), "not unital"));
}
