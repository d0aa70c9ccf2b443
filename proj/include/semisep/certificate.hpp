#pragma once

#include <string>
#include <vector>

namespace semisep {

/// One machine-checked law: its name, whether it held, and an optional note.
struct Certificate {
    std::string law;
    bool holds = false;
    std::string detail;
};

using Certificates = std::vector<Certificate>;

inline bool all_hold(const Certificates& cs) {
    for (const auto& c : cs)
        if (!c.holds) return false;
    return true;
}

}  // namespace semisep
