#pragma once

#include "semisep/adjunction/adjunction.hpp"

#include <string>
#include <vector>

namespace semisep::corpus {

struct NamedAdjunction {
    std::string name;
    adjunction::Adjunction adjunction;
};

struct NamedTriple {
    std::string name;
    adjunction::AdjointTriple triple;
};

/// Bundled adjunctions: identities, poset Galois connections, the closure
/// operator on the 3-chain, (co)reflections onto a point and the split
/// idempotent quotient with its section.
std::vector<NamedAdjunction> adjunctions();
std::vector<NamedTriple> triples();

}  // namespace semisep::corpus
