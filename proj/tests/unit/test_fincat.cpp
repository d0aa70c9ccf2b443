#include <doctest.h>

#include "../support/fincat_oracle.hpp"
#include "semisep/corpus.hpp"
#include "semisep/errors.hpp"
#include "semisep/fincat/retraction.hpp"

using namespace semisep;
using namespace semisep::fincat;
namespace cp = semisep::corpus;

namespace {

Mor mor(const CategoryPtr& c, const std::string& name) { return c->find_morphism(name).value(); }

const FinFunctor& corpus_functor(const std::string& name) {
    static const auto all = cp::functors();
    for (const auto& nf : all)
        if (nf.name == name) return nf.functor;
    throw std::out_of_range(name);
}

bool holds(const FinFunctor& f, Mode m) { return decide_retraction(f, m).holds(); }

bool prop(const FinFunctor& f, FunctorProperty p) { return functor_property(f, p).holds; }

}  // namespace

TEST_CASE("corpus categories validate") {
    for (const auto& [name, c] : cp::categories()) {
        INFO(name);
        CHECK(validate(*c).empty());
    }
    CHECK(cp::functors().size() >= 15);
    for (const auto& nf : cp::functors()) {
        INFO(nf.name);
        CHECK(validate(nf.functor).empty());
    }
}

TEST_CASE("validate reports missing composite and bad laws") {
    CHECK(validate(*cp::terminal()).empty());
    CHECK(cp::terminal()->num_morphisms() == 1);

    CategoryBuilder b;
    b.object("*");
    b.identity("*", "1");
    b.morphism("f", "*", "*");
    auto c = b.build_unchecked();
    auto v = validate(*c);
    REQUIRE(!v.empty());
    CHECK(v.front().find("missing composite") != std::string::npos);
    CHECK_THROWS_AS(b.build(), InputError);

    CategoryBuilder nonassoc;
    nonassoc.object("*");
    nonassoc.identity("*", "1");
    nonassoc.morphism("a", "*", "*");
    nonassoc.morphism("b", "*", "*");
    // a∘a = b, a∘b = 1, b∘a = a, b∘b = a
    nonassoc.compose("a", "a", "b").compose("a", "b", "1").compose("b", "a", "a").compose("b", "b", "a");
    auto bad = validate(*nonassoc.build_unchecked());
    REQUIRE(!bad.empty());
    bool assoc = false;
    for (const auto& s : bad) assoc = assoc || s.find("associativity") != std::string::npos;
    CHECK(assoc);

    CHECK(validate(*cp::parallel_pair()).empty());
    CHECK(validate(*cp::empty()).empty());
}

TEST_CASE("functor validation rejects broken tables") {
    auto I = cp::interval();
    auto P = cp::parallel_pair();
    FinFunctor f{I, P, {1, 0}, {0, 0, 0}};
    CHECK(!validate(f).empty());
    CHECK_THROWS_AS(FinFunctor::from_names(I, P, {{"A", "Z"}}, {}), InputError);
}

TEST_CASE("morphism_class") {
    auto one = cp::terminal();
    auto r = morphism_class(*one, 0, MorphismClass::iso);
    CHECK(r.holds);
    CHECK(r.witness == std::vector<Mor>{0});

    auto P = cp::parallel_pair();
    CHECK_FALSE(morphism_class(*P, mor(P, "f"), MorphismClass::split_mono).holds);
    CHECK_FALSE(morphism_class(*P, mor(P, "f"), MorphismClass::split_epi).holds);

    auto Me = cp::monoid_idempotent();
    Mor e = mor(Me, "e");
    CHECK(morphism_class(*Me, e, MorphismClass::idempotent).holds);
    CHECK_FALSE(morphism_class(*Me, e, MorphismClass::split_idempotent).holds);
    CHECK_FALSE(morphism_class(*Me, e, MorphismClass::split_mono).holds);
    CHECK(morphism_class(*Me, e, MorphismClass::constant).holds);
    CHECK_FALSE(morphism_class(*Me, mor(Me, "1"), MorphismClass::constant).holds);

    auto S = cp::split_idempotent();
    auto se = morphism_class(*S, mor(S, "e"), MorphismClass::split_idempotent);
    CHECK(se.holds);
    REQUIRE(se.witness.size() == 2);
    CHECK(S->compose(se.witness[1], se.witness[0]) == mor(S, "e"));
    CHECK(S->compose(se.witness[0], se.witness[1]) == S->identity(S->source(se.witness[0]) == 0 ? 1 : 0));
    auto sm = morphism_class(*S, mor(S, "s"), MorphismClass::split_mono);
    CHECK(sm.holds);
    CHECK(sm.witness == std::vector<Mor>{mor(S, "r")});

    auto C2 = cp::group_c2();
    auto inv = morphism_class(*C2, mor(C2, "t"), MorphismClass::iso);
    CHECK(inv.holds);
    CHECK(inv.witness == std::vector<Mor>{mor(C2, "t")});
}

TEST_CASE("functor properties") {
    for (auto p : {FunctorProperty::faithful, FunctorProperty::full, FunctorProperty::fully_faithful,
                   FunctorProperty::conservative, FunctorProperty::maschke, FunctorProperty::dual_maschke}) {
        CHECK(prop(corpus_functor("id_parallel"), p));
        CHECK(prop(corpus_functor("empty_to_terminal"), p));
        CHECK(parse_functor_property(to_string(p)) == p);
    }
    auto faithful = functor_property(corpus_functor("collapse"), FunctorProperty::faithful);
    CHECK_FALSE(faithful.holds);
    CHECK(faithful.counterexample == std::vector<std::string>{"f", "g"});

    const auto& me = corpus_functor("monoid_e_to_terminal");
    CHECK(prop(me, FunctorProperty::full));
    CHECK_FALSE(prop(me, FunctorProperty::faithful));
    CHECK_FALSE(prop(me, FunctorProperty::conservative));
    CHECK(prop(corpus_functor("c2_to_terminal"), FunctorProperty::conservative));
}

TEST_CASE("decide_retraction examples") {
    for (auto m : {Mode::semiseparable, Mode::separable, Mode::naturally_full}) {
        auto r = decide_retraction(corpus_functor("id_parallel"), m);
        REQUIRE(r.holds());
        const auto& w = *r.witness;
        for (std::size_t i = 0; i < w.values.size(); ++i) CHECK(w.values[i] == w.F.target->hom(i / 2, i % 2));
        CHECK(parse_mode(to_string(m)) == m);
    }
    CHECK_FALSE(holds(corpus_functor("collapse"), Mode::semiseparable));

    const auto& me = corpus_functor("monoid_e_to_terminal");
    CHECK(holds(me, Mode::semiseparable));
    CHECK(holds(me, Mode::naturally_full));
    CHECK_FALSE(holds(me, Mode::separable));

    // P(1) = P(t) = e: semiseparable but neither separable nor naturally full
    const auto& mc = corpus_functor("monoid_e_to_c2");
    CHECK(holds(mc, Mode::semiseparable));
    CHECK_FALSE(holds(mc, Mode::separable));
    CHECK_FALSE(holds(mc, Mode::naturally_full));

    CHECK_FALSE(holds(corpus_functor("interval_to_terminal"), Mode::semiseparable));
    CHECK_FALSE(holds(corpus_functor("c2_to_terminal"), Mode::semiseparable));
    CHECK(holds(corpus_functor("split_to_terminal"), Mode::naturally_full));
    CHECK(holds(corpus_functor("monoid_e_into_split"), Mode::separable));
}

TEST_CASE("search bound is enforced") {
    std::vector<std::string> objs;
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < 12; ++i) {
        objs.push_back("p" + std::to_string(i));
        if (i > 0) order.emplace_back(i - 1, i);
    }
    auto big = cp::poset(objs, order);  // 78 morphisms
    auto f = FinFunctor::identity(big);
    CHECK_THROWS_AS(decide_retraction(f, Mode::semiseparable), BoundExceeded);
    CHECK(decide_retraction(f, Mode::semiseparable, SearchOptions{100}).holds());
}

TEST_CASE("associated idempotent") {
    const auto& me = corpus_functor("monoid_e_to_terminal");
    auto r = decide_retraction(me, Mode::semiseparable);
    REQUIRE(r.holds());
    auto rep = associated_idempotent(me, *r.witness);
    CHECK(rep.ok());
    CHECK(rep.e.components == std::vector<Mor>{mor(me.source, "e")});
    CHECK_FALSE(rep.e.is_identity());

    for (const char* name : {"id_parallel", "monoid_e_into_split", "id_c2"}) {
        const auto& f = corpus_functor(name);
        auto w = decide_retraction(f, Mode::separable);
        REQUIRE(w.holds());
        auto ri = associated_idempotent(f, *w.witness);
        CHECK(ri.ok());
        CHECK(ri.e.is_identity());
    }

    auto bad = *decide_retraction(corpus_functor("id_monoid_e"), Mode::separable).witness;
    bad.values[0] = {mor(bad.F.source, "e"), mor(bad.F.source, "e")};
    CHECK_THROWS_AS(associated_idempotent(bad.F, bad), PreconditionError);
}

TEST_CASE("relative separability") {
    const auto& id = corpus_functor("id_parallel");
    CHECK(relative_separable(id, id).holds());
    const auto& col = corpus_functor("collapse");
    CHECK_FALSE(relative_separable(col, FinFunctor::identity(col.source)).holds());
    CHECK_THROWS_AS(relative_separable(col, corpus_functor("id_terminal")), PreconditionError);
    for (const auto& nf : cp::functors()) {
        if (!prop(nf.functor, FunctorProperty::faithful)) continue;
        INFO(nf.name);
        CHECK(relative_separable(nf.functor, FinFunctor::identity(nf.functor.source)).holds() ==
              holds(nf.functor, Mode::separable));
    }
}

TEST_CASE("retract transfer") {
    const auto& h = corpus_functor("monoid_e_to_terminal");
    auto idh = NatTrans::identity(h);
    auto same = retract_transfer(h, h, idh, idh);
    CHECK(same.outcome == TransferOutcome::transferred);
    REQUIRE(same.witness);
    CHECK(validate(*same.witness).empty());

    // two isomorphic objects; H constant at *, F constant at the copy
    CategoryBuilder b;
    b.object("*");
    b.object("*'");
    b.identity("*", "1");
    b.identity("*'", "1'");
    b.morphism("a", "*", "*'");
    b.morphism("b", "*'", "*");
    b.compose("b", "a", "1").compose("a", "b", "1'");
    auto iso = b.build();
    auto Me = cp::monoid_idempotent();
    auto H = cp::constant_functor(Me, iso, "*");
    auto F = cp::constant_functor(Me, iso, "*'");
    NatTrans phi{F, H, {mor(iso, "b")}};
    NatTrans psi{H, F, {mor(iso, "a")}};
    REQUIRE(validate(phi).empty());
    REQUIRE(validate(psi).empty());
    auto t = retract_transfer(H, F, phi, psi);
    CHECK(t.outcome == TransferOutcome::transferred);
    REQUIRE(t.witness);
    CHECK(check_mode(*t.witness, Mode::semiseparable).empty());
    CHECK(holds(F, Mode::semiseparable));

    // renamed copy agrees with the search
    auto Me2 = rename_objects(*Me, {{"*", "o"}});
    CHECK(holds(cp::constant_functor(Me2, cp::terminal(), "*"), Mode::semiseparable));

    auto S = cp::split_idempotent();
    auto Hs = cp::constant_functor(Me, S, "B");
    const auto& Fs = corpus_functor("monoid_e_into_split");
    NatTrans phis{Fs, Hs, {mor(S, "r")}};
    NatTrans psis{Hs, Fs, {mor(S, "s")}};
    REQUIRE(validate(phis).empty());
    REQUIRE(validate(psis).empty());
    auto na = retract_transfer(Hs, Fs, phis, psis);
    CHECK(na.outcome == TransferOutcome::not_applicable);
    CHECK_FALSE(na.witness);

    CHECK_THROWS_AS(retract_transfer(Fs, Hs, psis, phis), PreconditionError);
}

TEST_CASE("natural endomorphisms of the identity") {
    CHECK(nat_endo_monoid(*cp::terminal()) == std::vector<std::vector<Mor>>{{0}});
    auto Me = cp::monoid_idempotent();
    CHECK(nat_endo_monoid(*Me) == std::vector<std::vector<Mor>>{{mor(Me, "1")}, {mor(Me, "e")}});
    CHECK(nat_endo_monoid(*cp::interval()).size() == 1);
    CHECK(nat_endo_monoid(*cp::group_c2()).size() == 2);
    // left-zero elements are not central
    CHECK(nat_endo_monoid(*cp::left_zero_monoid()).size() == 1);
}

TEST_CASE("constant generated") {
    CHECK(constant_generated(*cp::terminal()).holds);
    auto me = constant_generated(*cp::monoid_idempotent());
    CHECK_FALSE(me.holds);
    CHECK(me.counterexample.has_value());
    CHECK(constant_generated(*cp::discrete(2)).holds);
    CHECK(constant_generated(*cp::interval()).holds);
    CHECK_FALSE(constant_generated(*cp::group_c2()).holds);
}

TEST_CASE("dualize") {
    for (const auto& [name, c] : cp::categories()) {
        INFO(name);
        CHECK(*dualize(*dualize(*c)) == *c);
        CHECK(validate(*dualize(*c)).empty());
    }
    auto I = cp::interval();
    auto Iop = dualize(*I);
    Mor u = mor(Iop, "u");
    CHECK(Iop->object_name(Iop->source(u)) == "B");
    CHECK(Iop->object_name(Iop->target(u)) == "A");

    for (const auto& nf : cp::functors()) {
        INFO(nf.name);
        auto op = dualize(nf.functor);
        CHECK(validate(op).empty());
        CHECK(dualize(op) == nf.functor);
        for (auto m : {Mode::semiseparable, Mode::separable, Mode::naturally_full})
            CHECK(holds(op, m) == holds(nf.functor, m));
    }
}

TEST_CASE("decider agrees with blind enumeration") {
    std::size_t compared = 0;
    for (const auto& nf : cp::functors()) {
        const auto& f = nf.functor;
        if (f.source->num_morphisms() + f.target->num_morphisms() > 12) continue;
        for (auto m : {Mode::semiseparable, Mode::separable, Mode::naturally_full}) {
            INFO(nf.name << " " << to_string(m));
            auto blind = oracle::blind_retractions(f, m);
            if (!blind.enumerated) continue;
            auto r = decide_retraction(f, m);
            CHECK(r.holds() == (blind.witnesses > 0));
            if (r.holds() && blind.first) CHECK(r.witness->values == *blind.first);
            ++compared;
        }
    }
    CHECK(compared >= 45);
}

TEST_CASE("structural theorems on the corpus") {
    const auto all = cp::functors();
    for (const auto& nf : all) {
        INFO(nf.name);
        const auto& f = nf.functor;
        bool ss = holds(f, Mode::semiseparable);
        bool sep = holds(f, Mode::separable);
        bool nf_ = holds(f, Mode::naturally_full);
        CHECK(sep == (ss && prop(f, FunctorProperty::faithful)));
        CHECK(nf_ == (ss && prop(f, FunctorProperty::full)));
        CHECK(sep == (ss && prop(f, FunctorProperty::maschke)));
        CHECK(sep == (ss && prop(f, FunctorProperty::dual_maschke)));
        CHECK(sep == (ss && prop(f, FunctorProperty::conservative)));
        if (ss) {
            auto rep = associated_idempotent(f, *decide_retraction(f, Mode::semiseparable).witness);
            CHECK(rep.ok());
            CHECK(sep == rep.e.is_identity());
        }
        if (constant_generated(*f.source).holds) {
            CHECK(nat_endo_monoid(*f.source).size() == 1);
            CHECK(ss == sep);
        }
    }

    std::size_t pairs = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            if (!(*a.functor.target == *b.functor.source)) continue;
            INFO(b.name << " o " << a.name);
            auto gf = compose(b.functor, a.functor);
            bool gf_ss = holds(gf, Mode::semiseparable);
            if (holds(a.functor, Mode::semiseparable) && holds(b.functor, Mode::separable)) CHECK(gf_ss);
            if (holds(a.functor, Mode::naturally_full) && holds(b.functor, Mode::semiseparable)) CHECK(gf_ss);
            if (gf_ss && prop(b.functor, FunctorProperty::faithful)) CHECK(holds(a.functor, Mode::semiseparable));
            ++pairs;
        }
    CHECK(pairs >= 20);
}
