#pragma once

#include "semisep/fincat/functor.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace semisep::corpus {

using fincat::CategoryPtr;
using fincat::FinFunctor;

// Named finite categories.
CategoryPtr terminal();
CategoryPtr empty();
CategoryPtr interval();        // A → B
CategoryPtr parallel_pair();   // A ⇉ B (f, g)
CategoryPtr discrete(int n);   // objects X0..X{n-1}
CategoryPtr monoid_idempotent();  // one object, {1, e}, ee = e
CategoryPtr group_c2();           // one object, {1, t}, tt = 1
CategoryPtr left_zero_monoid();   // one object, {1, a, b}, xy = x for x, y ∈ {a, b}
CategoryPtr chain(int n);         // 0 < 1 < ... < n-1
CategoryPtr split_idempotent();   // r: A → B, s: B → A, r∘s = idB, s∘r = e

/// One-object category of a finite monoid; `table[i][j]` is the index of
/// elements[i]·elements[j] (composition g∘f = g·f). elements[0] is the unit.
CategoryPtr monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table);
/// Poset on `objects` with x ≤ y iff `leq(x, y)`; morphisms named "x<=y".
CategoryPtr poset(const std::vector<std::string>& objects, const std::vector<std::pair<int, int>>& order);

/// Functor given by name maps; identities are filled in.
FinFunctor functor(const CategoryPtr& source, const CategoryPtr& target,
                   const std::map<std::string, std::string>& objects,
                   const std::map<std::string, std::string>& morphisms);
/// Functor that is constant at the identity of `object`.
FinFunctor constant_functor(const CategoryPtr& source, const CategoryPtr& target, const std::string& object);
/// Monotone map between posets built by `poset`/`chain`.
FinFunctor monotone(const CategoryPtr& source, const CategoryPtr& target, const std::vector<int>& map);

struct NamedFunctor {
    std::string name;
    FinFunctor functor;
};

/// The bundled functor corpus in a fixed order.
std::vector<NamedFunctor> functors();
/// Named categories used by the corpus, in a fixed order.
std::vector<std::pair<std::string, CategoryPtr>> categories();

}  // namespace semisep::corpus
