#pragma once

#include <optional>
#include <string>

#include "symtopo/ints.hpp"

namespace symtopo {

enum class Status {
    exact_equal,
    exact_contained,
    verified_up_to_degree,
    counterexample,
    inconclusive,
};

inline const char* status_name(Status s) {
    switch (s) {
        case Status::exact_equal: return "ExactEqual";
        case Status::exact_contained: return "ExactContained";
        case Status::verified_up_to_degree: return "VerifiedUpToDegree";
        case Status::counterexample: return "Counterexample";
        case Status::inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

/// Outcome of one containment / equality check. A counterexample witness is
/// always re-checkable: it belongs to the symbolic side and not the ordinary
/// side of the query it answers.
struct Verdict {
    Status status = Status::inconclusive;
    std::string target;          // query echo
    int a = -1;                  // symbolic exponent (-1: not applicable)
    int r = -1;                  // ordinary exponent
    long long d = -1;            // degree window (-1: exact, no window)
    std::optional<Vec> witness;  // counterexample exponent vector
    std::string witness_text;    // formatted witness
    std::string note;            // cap reason etc.

    bool holds() const {
        return status == Status::exact_equal || status == Status::exact_contained ||
               status == Status::verified_up_to_degree;
    }
};

}  // namespace symtopo
