#pragma once

#include <optional>

#include "cclab/types.hpp"

namespace cclab {

// Exact value of sum(1/t_i).
Rational reciprocal_sum(const SolutionTuple& t);

// Exact value of r*sum(1/t_i) - s/prod(t_i). Integrality of the result
// signals a solution of the Diophantine equation.
Rational residual_m(const Integer& r, const Integer& s, const SolutionTuple& t);

// True iff every coordinate satisfies r*(prod_k q_k / q_i) == s (mod |q_i|).
// A modulus of 1 is vacuously satisfied. Throws on length mismatch.
bool check_cyclic(const CyclicSystem& sys, const SolutionTuple& q);

// True iff gcd(|prod q_i|, |s|) = 1.
bool gcd_condition(const SolutionTuple& q, const Integer& s);

// True iff gcd(|q_i|, |q_j|) = 1 for all i != j.
bool pairwise_coprime(const SolutionTuple& q);

// True iff at least two entries have absolute value >= 2.
bool is_nontrivial(const SolutionTuple& q);

// For a congruence solution satisfying the gcd side condition, returns the
// integer m with residual_m(r, s, q) = m. Absent when the residual is not an
// integer, which can only happen if the preconditions are violated.
std::optional<Integer> to_diophantine(const CyclicSystem& sys, const SolutionTuple& q);

// Every Diophantine solution is a congruence solution; checks the residual
// precondition and then verifies the congruences. Throws when the residual
// does not equal inst.m.
bool to_congruence(const DioInstance& inst, const SolutionTuple& x);

// Cleared-denominator hypersurface r*sum_i(prod_{j!=i} x_j) + s = m*prod x_j.
// Zero coordinates are legal here.
bool check_hypersurface(const Integer& r, const Integer& s, const Integer& m,
                        const std::vector<Integer>& x);

}  // namespace cclab
