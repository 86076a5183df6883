#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cclab/types.hpp"

namespace cclab {

enum class Positivity { PositiveOnly, Signed };

struct MFilter {
    enum class Kind { Any, Fixed, NonZero };
    Kind kind = Kind::Any;
    Integer value = 0;

    static MFilter any() { return {}; }
    static MFilter fixed(Integer m) { return {Kind::Fixed, std::move(m)}; }
    static MFilter nonzero() { return {Kind::NonZero, 0}; }
};

struct SearchOptions {
    Positivity positivity = Positivity::PositiveOnly;
    Integer min_abs = 1;
    bool require_gcd_condition = false;
    bool require_nontrivial = false;
    MFilter m_filter = MFilter::any();
    std::optional<Integer> hard_cap;  // overrides the theorem bound when smaller
    int jobs = 1;
};

struct SearchReport {
    std::vector<std::pair<SolutionTuple, Integer>> solutions;  // canonical order
    std::uint64_t nodes_visited = 0;
    std::uint64_t nodes_pruned = 0;
    // Prefixes hitting the critical equality r*q_1*...*q_{n-1} = s (positive
    // search) or a vanishing last-variable system (signed search), where the
    // last coordinate is unconstrained. Counted, never enumerated.
    std::uint64_t degenerate_prefixes = 0;
    Integer bound_used = 0;
    bool complete = true;
    double elapsed_ms = 0.0;
};

// Complete set of positive congruence solutions 1 <= q_1 <= ... <= q_n, found
// through the Diophantine form with exact-rational prefix pruning and an
// exact solve of the last variable.
SearchReport enumerate_positive(const CyclicSystem& sys, const SearchOptions& opts);

// Complete set of signed tuples with integral nonzero residual m and
// |x_i| >= opts.min_abs (>= 2), within signed_sharp_bound(r, s, n).
SearchReport enumerate_signed(const Integer& r, const Integer& s, int n,
                              const SearchOptions& opts);

// Complete set of signed congruence solutions with gcd(prod q_i, s) = 1 for
// r >= 2, with coordinates |q_i| = 1 allowed: cores with all |x_i| >= 2 are
// solved by enumerate_signed (plus the one-variable divisor case), then
// re-expanded with +-1 padding up to length n.
SearchReport enumerate_signed_congruence(const CyclicSystem& sys,
                                         const SearchOptions& opts = {});

struct KelloggCheck {
    Rational alpha;
    bool hypothesis_ok = false;  // sum(1/p_i) < 1/r and alpha >= max p_i
    bool bounds_ok = false;      // alpha <= u_{k+1}(r)-1 and product bound
};

// Defines alpha by sum(1/p_i) + 1/alpha = 1/r and checks the two bounds
//   alpha <= u_{k+1}(r) - 1,
//   p_1*...*p_k*(alpha+1) <= u_1(r)*...*u_{k+1}(r).
KelloggCheck verify_kellogg_bounds(const Integer& r, const std::vector<Integer>& p);

struct OracleBox {
    Integer min_abs = 1;
    Integer max_abs = 0;  // empty when max_abs < min_abs
    bool allow_negative = false;
};

struct OracleFilter {
    bool require_congruence = false;
    bool require_integral_residual = false;
    bool require_gcd_condition = false;
    bool require_nontrivial = false;
    MFilter m_filter = MFilter::any();
};

// Unpruned brute force over every canonical tuple in the box; the ground
// truth the pruned enumerators are validated against.
std::vector<std::pair<SolutionTuple, Rational>> oracle_enumerate(
    const Integer& r, const Integer& s, const OracleBox& box, int n,
    const OracleFilter& filter);

}  // namespace cclab
