#pragma once

#include <optional>
#include <string>

#include "cclab/families.hpp"
#include "cclab/search.hpp"
#include "cclab/types.hpp"

namespace cclab {

struct Verdict {
    enum class Status { Finite, Infinite };
    Status status = Status::Finite;
    std::optional<Integer> bound;        // present iff Finite
    std::optional<FamilySpec> witness;   // present iff Infinite
    std::string theorem_tag;
};

// Infinitude of integer solutions (all x_i != 0) of
// r*sum(1/x_i) - s/prod(x_i) = m: infinite exactly when r = 1 and
// (i) |m| <= n-2, or (ii) m = n-1 and s = 1, or (iii) m = -(n-1) and
// s = (-1)^(n-1); otherwise finite with the sharp signed bound.
Verdict classify_diophantine(const Integer& r, const Integer& s, const Integer& m, int n);

// Same region for the cleared-denominator form where zero coordinates are
// legal; the finite bound additionally covers zero-coordinate solutions.
Verdict classify_hypersurface(const Integer& r, const Integer& s, const Integer& m, int n);

// Finiteness of the congruence system's solution set: positive tuples are
// always finite; signed tuples are infinite iff r = 1.
Verdict classify_congruence(const Integer& r, const Integer& s, int n, Positivity positivity);

}  // namespace cclab
