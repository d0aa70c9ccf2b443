#include "semisep/adjunction/corpus.hpp"

#include "semisep/coident/coidentifier.hpp"
#include "semisep/corpus.hpp"

#include <stdexcept>

namespace semisep::corpus {

using adjunction::Adjunction;
using adjunction::AdjointTriple;

namespace {

const FinFunctor& named(const std::string& name) {
    static const auto all = functors();
    for (const auto& nf : all)
        if (nf.name == name) return nf.functor;
    throw std::out_of_range("no corpus functor " + name);
}

Adjunction adjoint(const FinFunctor& f, const FinFunctor& g) {
    auto found = adjunction::find_adjunctions(f, g);
    if (found.empty()) throw std::logic_error("corpus pair is not adjoint");
    return found.front();
}

Adjunction identity(const CategoryPtr& c) {
    auto id = FinFunctor::identity(c);
    return {id, id, fincat::NatTrans::identity(id), fincat::NatTrans::identity(id)};
}

struct SplitQuotient {
    Adjunction pe_h;  // P_e ⊣ H
    Adjunction h_pe;  // H ⊣ P_e
};

SplitQuotient split_quotient() {
    auto s = split_idempotent();
    fincat::IdempotentNat e{s, {*s->find_morphism("e"), *s->find_morphism("idB")}};
    auto q = coident::build_coidentifier(e);
    auto b = coident::bireflection_from_split(q, *coident::split_idempotent(e));
    return {{b.Pe, q.H, b.left_unit, b.left_counit}, {q.H, b.Pe, b.right_unit, b.right_counit}};
}

}  // namespace

std::vector<NamedAdjunction> adjunctions() {
    auto c3 = chain(3);
    auto t = terminal();
    auto split = split_idempotent();
    auto interval_to_point = named("interval_to_terminal");
    auto split_to_point = named("split_to_terminal");
    auto split_pick_B = constant_functor(t, split, "B");
    auto top = constant_functor(t, c3, "2");
    auto q = split_quotient();
    return {
        {"identity_terminal", identity(t)},
        {"identity_monoid_e", identity(monoid_idempotent())},
        {"identity_parallel", identity(parallel_pair())},
        {"identity_c2", identity(group_c2())},
        {"galois_chain2_chain3", adjoint(named("chain2_into_chain3"), named("chain3_to_chain2"))},
        {"reflect_chain3_chain2", adjoint(monotone(c3, chain(2), {0, 1, 1}), named("chain2_into_chain3"))},
        {"closure_top_chain3", adjoint(named("chain3_to_terminal"), top)},
        {"interval_to_point", adjoint(interval_to_point, named("terminal_pick_B"))},
        {"point_initial_interval", adjoint(named("terminal_pick_A"), interval_to_point)},
        {"split_to_point", adjoint(split_to_point, split_pick_B)},
        {"point_initial_split", adjoint(split_pick_B, split_to_point)},
        {"split_section_quotient", q.pe_h},
        {"split_quotient_section", q.h_pe},
    };
}

std::vector<NamedTriple> triples() {
    auto t = terminal();
    auto split = split_idempotent();
    auto c3 = chain(3);
    auto interval_to_point = named("interval_to_terminal");
    auto split_to_point = named("split_to_terminal");
    auto split_pick_B = constant_functor(t, split, "B");
    auto embed = named("chain2_into_chain3");
    auto q = split_quotient();
    auto id = identity(t);
    return {
        {"identity_terminal", {id, id}},
        {"interval_ends",
         {adjoint(named("terminal_pick_A"), interval_to_point), adjoint(interval_to_point, named("terminal_pick_B"))}},
        {"split_point_frobenius", {adjoint(split_pick_B, split_to_point), adjoint(split_to_point, split_pick_B)}},
        {"split_point_embedding", {adjoint(split_to_point, split_pick_B), adjoint(split_pick_B, split_to_point)}},
        {"chain_retract", {adjoint(monotone(c3, chain(2), {0, 1, 1}), embed), adjoint(embed, named("chain3_to_chain2"))}},
        {"split_quotient", {q.pe_h, q.h_pe}},
        {"split_section", {q.h_pe, q.pe_h}},
    };
}

}  // namespace semisep::corpus
