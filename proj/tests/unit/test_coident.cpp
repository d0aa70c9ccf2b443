#include <doctest.h>

#include "semisep/coident/coidentifier.hpp"
#include "semisep/corpus.hpp"
#include "semisep/errors.hpp"

using namespace semisep;
using namespace semisep::fincat;
using namespace semisep::coident;
namespace cp = semisep::corpus;

namespace {

Mor mor(const CategoryPtr& c, const std::string& name) { return c->find_morphism(name).value(); }

IdempotentNat identity_nat(const CategoryPtr& c) {
    IdempotentNat e{c, {}};
    for (Obj x = 0; x < static_cast<Obj>(c->num_objects()); ++x) e.components.push_back(c->identity(x));
    return e;
}

const FinFunctor& corpus_functor(const std::string& name) {
    static const auto all = cp::functors();
    for (const auto& nf : all)
        if (nf.name == name) return nf.functor;
    throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("coidentifier of the identity changes nothing") {
    for (auto c : {cp::parallel_pair(), cp::split_idempotent(), cp::monoid_idempotent()}) {
        auto q = build_coidentifier(identity_nat(c));
        CHECK(all_hold(q.certificates));
        CHECK(q.quotient->num_morphisms() == c->num_morphisms());
        for (Mor f = 0; f < static_cast<Mor>(c->num_morphisms()); ++f) CHECK(q.representative[q.class_of(f)] == f);
    }
}

TEST_CASE("coidentifier of the monoid idempotent is a point") {
    auto Me = cp::monoid_idempotent();
    auto q = build_coidentifier({Me, {mor(Me, "e")}});
    CHECK(all_hold(q.certificates));
    CHECK(q.quotient->num_morphisms() == 1);
    CHECK(q.class_of(mor(Me, "1")) == q.class_of(mor(Me, "e")));
    CHECK(q.representative == std::vector<Mor>{mor(Me, "1")});
}

TEST_CASE("coidentifier rejects non-idempotents") {
    auto C2 = cp::group_c2();
    CHECK_THROWS_AS(build_coidentifier({C2, {mor(C2, "t")}}), PreconditionError);
    auto LZ = cp::left_zero_monoid();
    // a is idempotent but not central
    CHECK_THROWS_AS(build_coidentifier({LZ, {mor(LZ, "a")}}), PreconditionError);
}

TEST_CASE("induce_through") {
    auto Me = cp::monoid_idempotent();
    auto q = build_coidentifier({Me, {mor(Me, "e")}});
    auto self = induce_through(q, q.H);
    CHECK(self == FinFunctor::identity(q.quotient));

    const auto& f = corpus_functor("monoid_e_to_terminal");
    auto fe = induce_through(q, f);
    CHECK(fe.source->num_morphisms() == 1);
    CHECK(fe.mor_map == std::vector<Mor>{0});

    CHECK_THROWS_AS(induce_through(q, corpus_functor("id_monoid_e")), PreconditionError);

    auto S = corpus_functor("terminal_into_monoid_e");
    auto G = compose(S, fe);
    auto fe2 = induce_through(q, f, S, G);
    CHECK(fe2 == fe);
    CHECK_THROWS_AS(induce_through(q, f, corpus_functor("monoid_e_to_terminal"), G), PreconditionError);
}

TEST_CASE("factorize_semiseparable") {
    const auto& me = corpus_functor("monoid_e_to_terminal");
    auto fz = factorize_semiseparable(me);
    CHECK(fz.ok());
    CHECK(fz.coidentifier.quotient->num_morphisms() == 1);
    CHECK(is_natural_iso(NatTrans::identity(fz.Fe)));
    CHECK(functor_property(fz.Fe, FunctorProperty::fully_faithful).holds);

    for (const char* name : {"id_parallel", "monoid_e_into_split", "id_terminal"}) {
        auto s = factorize_semiseparable(corpus_functor(name));
        CHECK(s.ok());
        CHECK(s.coidentifier.e.is_identity());
        CHECK(s.coidentifier.quotient->num_morphisms() == corpus_functor(name).source->num_morphisms());
    }
    CHECK_THROWS_AS(factorize_semiseparable(corpus_functor("collapse")), PreconditionError);
}

TEST_CASE("split_idempotent") {
    for (auto c : {cp::terminal(), cp::interval(), cp::monoid_idempotent()}) {
        auto w = split_idempotent(identity_nat(c));
        REQUIRE(w);
        for (Obj x = 0; x < static_cast<Obj>(c->num_objects()); ++x) {
            CHECK(w->through[x] == x);
            CHECK(w->pi[x] == c->identity(x));
            CHECK(w->iota[x] == c->identity(x));
        }
    }
    auto Me = cp::monoid_idempotent();
    CHECK_FALSE(split_idempotent({Me, {mor(Me, "e")}}));

    auto S = cp::split_idempotent();
    IdempotentNat e{S, {mor(S, "e"), mor(S, "idB")}};
    auto w = split_idempotent(e);
    REQUIRE(w);
    CHECK(w->through == std::vector<Obj>{1, 1});
    CHECK(w->pi == std::vector<Mor>{mor(S, "r"), mor(S, "idB")});
    CHECK(w->iota == std::vector<Mor>{mor(S, "s"), mor(S, "idB")});
    CHECK(validate(e, *w).empty());

    SplitWitness bad = *w;
    bad.pi[0] = mor(S, "e");
    CHECK_FALSE(validate(e, bad).empty());
}

TEST_CASE("bireflection_from_split") {
    auto P = cp::parallel_pair();
    auto id = identity_nat(P);
    auto qi = build_coidentifier(id);
    auto bi = bireflection_from_split(qi, *split_idempotent(id));
    CHECK(bi.ok());
    CHECK(functor_property(bi.Pe, FunctorProperty::fully_faithful).holds);

    auto S = cp::split_idempotent();
    IdempotentNat e{S, {mor(S, "e"), mor(S, "idB")}};
    auto q = build_coidentifier(e);
    CHECK(q.quotient->num_morphisms() == 1 + 1 + 1 + 1);  // idA~e, r, s, idB
    auto w = split_idempotent(e);
    auto b = bireflection_from_split(q, *w);
    for (const auto& c : b.certificates) {
        INFO(c.law << " " << c.detail);
        CHECK(c.holds);
    }
    SplitWitness bad = *w;
    bad.iota[0] = mor(S, "e");
    CHECK_THROWS_AS(bireflection_from_split(q, bad), PreconditionError);
}

TEST_CASE("factorization theorems on the corpus") {
    const auto all = cp::functors();
    std::size_t nontrivial_split = 0;
    for (const auto& nf : all) {
        INFO(nf.name);
        bool ss = decide_retraction(nf.functor, Mode::semiseparable).holds();
        if (!ss) {
            CHECK_THROWS_AS(factorize_semiseparable(nf.functor), PreconditionError);
            continue;
        }
        auto fz = factorize_semiseparable(nf.functor);
        CHECK(fz.ok());
        CHECK(decide_retraction(fz.coidentifier.H, Mode::naturally_full).holds());
        CHECK(compose(fz.Fe, fz.coidentifier.H) == nf.functor);
        // S∘N with S separable, N naturally full gives back a semiseparable functor
        CHECK(decide_retraction(compose(fz.Fe, fz.coidentifier.H), Mode::semiseparable).holds());

        auto w = split_idempotent(fz.coidentifier.e);
        if (w) {
            auto b = bireflection_from_split(fz.coidentifier, *w);
            CHECK(b.ok());
            if (!fz.coidentifier.e.is_identity()) ++nontrivial_split;
        }
    }
    CHECK(nontrivial_split >= 1);

    std::size_t checked = 0;
    for (const auto& n : all)
        for (const auto& s : all) {
            if (!(*n.functor.target == *s.functor.source)) continue;
            if (!decide_retraction(n.functor, Mode::naturally_full).holds()) continue;
            if (!decide_retraction(s.functor, Mode::separable).holds()) continue;
            INFO(s.name << " o " << n.name);
            auto f = compose(s.functor, n.functor);
            auto fz = factorize_semiseparable(f);
            auto ne = induce_through(fz.coidentifier, n.functor, s.functor, fz.Fe);
            CHECK(functor_property(ne, FunctorProperty::fully_faithful).holds);
            auto pn = decide_retraction(n.functor, Mode::semiseparable);
            CHECK(associated_idempotent(n.functor, *pn.witness).e.components == fz.coidentifier.e.components);
            ++checked;
        }
    CHECK(checked >= 10);
}
