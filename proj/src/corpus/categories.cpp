#include "semisep/corpus.hpp"

#include "semisep/errors.hpp"

namespace semisep::corpus {

using fincat::CategoryBuilder;
using fincat::Mor;
using fincat::Obj;

CategoryPtr terminal() {
    CategoryBuilder b;
    b.object("*");
    b.identity("*", "1");
    return b.build();
}

CategoryPtr empty() { return CategoryBuilder{}.build(); }

CategoryPtr interval() {
    CategoryBuilder b;
    b.object("A");
    b.object("B");
    b.identity("A", "idA");
    b.identity("B", "idB");
    b.morphism("u", "A", "B");
    return b.build();
}

CategoryPtr parallel_pair() {
    CategoryBuilder b;
    b.object("A");
    b.object("B");
    b.identity("A", "idA");
    b.identity("B", "idB");
    b.morphism("f", "A", "B");
    b.morphism("g", "A", "B");
    return b.build();
}

CategoryPtr discrete(int n) {
    CategoryBuilder b;
    for (int i = 0; i < n; ++i) {
        b.object("X" + std::to_string(i));
        b.identity("X" + std::to_string(i), "id" + std::to_string(i));
    }
    return b.build();
}

CategoryPtr monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table) {
    CategoryBuilder b;
    b.object("*");
    b.identity("*", elements.at(0));
    for (std::size_t i = 1; i < elements.size(); ++i) b.morphism(elements[i], "*", "*");
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            b.compose(elements[i], elements[j], elements.at(table.at(i).at(j)));
    return b.build();
}

CategoryPtr monoid_idempotent() { return monoid({"1", "e"}, {{0, 1}, {1, 1}}); }

CategoryPtr group_c2() { return monoid({"1", "t"}, {{0, 1}, {1, 0}}); }

CategoryPtr left_zero_monoid() { return monoid({"1", "a", "b"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}); }

CategoryPtr poset(const std::vector<std::string>& objects, const std::vector<std::pair<int, int>>& order) {
    const int n = static_cast<int>(objects.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (auto [a, b] : order) leq.at(a).at(b) = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq[i][j] && leq[j][i]) throw InputError("poset: order is not antisymmetric");
    auto name = [&](int i, int j) { return objects[i] + "<=" + objects[j]; };
    CategoryBuilder b;
    for (const auto& o : objects) b.object(o);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!leq[i][j]) continue;
            if (i == j) b.identity(objects[i], name(i, i));
            else b.morphism(name(i, j), objects[i], objects[j]);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (leq[i][j] && leq[j][k]) b.compose(name(j, k), name(i, j), name(i, k));
    return b.build();
}

CategoryPtr chain(int n) {
    std::vector<std::string> objs;
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < n; ++i) {
        objs.push_back(std::to_string(i));
        if (i + 1 < n) order.emplace_back(i, i + 1);
    }
    return poset(objs, order);
}

CategoryPtr split_idempotent() {
    CategoryBuilder b;
    b.object("A");
    b.object("B");
    b.identity("A", "idA");
    b.identity("B", "idB");
    b.morphism("e", "A", "A");
    b.morphism("r", "A", "B");
    b.morphism("s", "B", "A");
    b.compose("r", "s", "idB");
    b.compose("s", "r", "e");
    b.compose("e", "e", "e");
    b.compose("r", "e", "r");
    b.compose("e", "s", "s");
    return b.build();
}

FinFunctor functor(const CategoryPtr& source, const CategoryPtr& target,
                   const std::map<std::string, std::string>& objects,
                   const std::map<std::string, std::string>& morphisms) {
    auto f = FinFunctor::from_names(source, target, objects, morphisms);
    auto v = fincat::validate(f);
    if (!v.empty()) throw InputError("invalid functor: " + v.front());
    return f;
}

FinFunctor constant_functor(const CategoryPtr& source, const CategoryPtr& target, const std::string& object) {
    auto y = target->find_object(object);
    if (!y) throw InputError("unknown object '" + object + "'");
    FinFunctor f{source, target, std::vector<Obj>(source->num_objects(), *y),
                 std::vector<Mor>(source->num_morphisms(), target->identity(*y))};
    return f;
}

FinFunctor monotone(const CategoryPtr& source, const CategoryPtr& target, const std::vector<int>& map) {
    FinFunctor f{source, target, {}, {}};
    for (int x : map) f.obj_map.push_back(x);
    for (Mor m = 0; m < static_cast<Mor>(source->num_morphisms()); ++m) {
        Obj a = f(source->source(m)), b = f(source->target(m));
        const auto& hs = target->hom(a, b);
        if (hs.size() != 1) throw InputError("monotone: map is not order preserving");
        f.mor_map.push_back(hs[0]);
    }
    auto v = fincat::validate(f);
    if (!v.empty()) throw InputError("invalid monotone map: " + v.front());
    return f;
}

std::vector<std::pair<std::string, CategoryPtr>> categories() {
    return {{"terminal", terminal()},
            {"empty", empty()},
            {"interval", interval()},
            {"parallel_pair", parallel_pair()},
            {"discrete2", discrete(2)},
            {"monoid_e", monoid_idempotent()},
            {"group_c2", group_c2()},
            {"left_zero", left_zero_monoid()},
            {"chain2", chain(2)},
            {"chain3", chain(3)},
            {"split", split_idempotent()}};
}

std::vector<NamedFunctor> functors() {
    auto one = terminal();
    auto zero = empty();
    auto I = interval();
    auto P = parallel_pair();
    auto D2 = discrete(2);
    auto Me = monoid_idempotent();
    auto C2 = group_c2();
    auto LZ = left_zero_monoid();
    auto ch2 = chain(2);
    auto ch3 = chain(3);
    auto S = split_idempotent();
    return {
        {"id_terminal", FinFunctor::identity(one)},
        {"empty_to_terminal", FinFunctor{zero, one, {}, {}}},
        {"id_parallel", FinFunctor::identity(P)},
        {"collapse", functor(P, I, {{"A", "A"}, {"B", "B"}}, {{"f", "u"}, {"g", "u"}})},
        {"monoid_e_to_terminal", constant_functor(Me, one, "*")},
        {"interval_to_terminal", constant_functor(I, one, "*")},
        {"terminal_pick_A", constant_functor(one, I, "A")},
        {"terminal_pick_B", constant_functor(one, I, "B")},
        {"discrete2_to_terminal", constant_functor(D2, one, "*")},
        {"c2_to_terminal", constant_functor(C2, one, "*")},
        {"id_monoid_e", FinFunctor::identity(Me)},
        {"monoid_e_to_c2", constant_functor(Me, C2, "*")},
        {"c2_to_monoid_e", constant_functor(C2, Me, "*")},
        {"split_to_terminal", constant_functor(S, one, "*")},
        {"split_to_monoid_e", constant_functor(S, Me, "*")},
        {"monoid_e_into_split", functor(Me, S, {{"*", "A"}}, {{"e", "e"}})},
        {"terminal_into_monoid_e", constant_functor(one, Me, "*")},
        {"monoid_e_trivialize", constant_functor(Me, Me, "*")},
        {"left_zero_to_terminal", constant_functor(LZ, one, "*")},
        {"left_zero_to_monoid_e", functor(LZ, Me, {{"*", "*"}}, {{"a", "e"}, {"b", "e"}})},
        {"interval_into_parallel", functor(I, P, {{"A", "A"}, {"B", "B"}}, {{"u", "f"}})},
        {"chain3_to_chain2", monotone(ch3, ch2, {0, 0, 1})},
        {"chain2_into_chain3", monotone(ch2, ch3, {0, 2})},
        {"chain3_to_terminal", constant_functor(ch3, one, "*")},
        {"id_c2", FinFunctor::identity(C2)},
    };
}

}  // namespace semisep::corpus
