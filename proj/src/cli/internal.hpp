#pragma once

#include "semisep/cli/cli.hpp"
#include "semisep/fincat/retraction.hpp"

#include <optional>
#include <string>

namespace semisep::cli::detail {

using fincat::FinFunctor;
using fincat::HomFamily;
using fincat::Mode;
using fincat::NatTrans;

io::LoadOptions load_options(const Json& params);
std::size_t bound_or(const Json& params, std::size_t fallback);
Mode mode_of(const Json& params);

/// P as [{"source","target","images":{k: P(k)}}] over the nonempty hom-sets.
Json family_json(const HomFamily& p);
/// Inverse of family_json for a retraction candidate of F (H = Id).
HomFamily family_from(const io::Node& n, const FinFunctor& f);
/// Components of an idempotent by object name.
Json components_json(const fincat::FinCategory& c, const std::vector<fincat::Mor>& comps);
std::vector<fincat::Mor> components_from(const io::Node& n, const fincat::FinCategory& c);

/// ν: GF → Id on the left, γ: Id → FG on the right, checked against the
/// unit or counit for the given mode, componentwise.
Certificates check_regularity(const adjunction::Adjunction& a, adjunction::Side side, const NatTrans& w, Mode mode);
NatTrans regularity_from(const io::Node& n, const adjunction::Adjunction& a, adjunction::Side side);
Json adjunction_json(const adjunction::Adjunction& a);
/// Rebuilds F ⊣ G from names; throws InputError if the triangles fail.
adjunction::Adjunction adjunction_from(const io::Node& n, const FinFunctor& f, const FinFunctor& g);

Json verification(const Certificates& cs);

}  // namespace semisep::cli::detail
