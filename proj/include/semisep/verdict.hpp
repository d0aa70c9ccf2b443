#pragma once

#include "semisep/linalg/solve.hpp"

#include <string>

namespace semisep {

enum class Status { holds, fails, indeterminate, error };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        case Status::indeterminate: return "indeterminate";
        case Status::error: return "error";
    }
    return "error";
}

/// Outcome of one criterion. Affine systems record their rank data so a
/// "fails" verdict carries its infeasibility certificate.
struct Verdict {
    Status status = Status::fails;
    std::string detail;
    std::size_t rank = 0;
    std::size_t rank_augmented = 0;
    bool holds() const { return status == Status::holds; }

    static Verdict of(bool b, std::string detail = "") { return {b ? Status::holds : Status::fails, std::move(detail), 0, 0}; }
    static Verdict of(const linalg::AffineSolution& s) {
        Verdict v{s.feasible ? Status::holds : Status::fails, "", s.rank_a, s.rank_augmented};
        if (!s.feasible)
            v.detail = "inconsistent system: rank " + std::to_string(s.rank_a) + " < augmented rank " +
                       std::to_string(s.rank_augmented);
        return v;
    }
};

}  // namespace semisep
