#pragma once

#include "cclab/types.hpp"

namespace cclab {

// Length-n tuple (-v_1(k), v_2(k), ..., v_{n-1}(k), v_n(k)+s-1) with residual
// m = 0 under r = 1 and min|x_i| >= 2. Requires n >= 3 and k > |s|+1.
SolutionTuple family_m0(int n, const Integer& s, const Integer& k);

// (-k, k+s) with residual 0 under r = 1. Requires k >= |s|+2.
SolutionTuple family_pair(const Integer& s, const Integer& k);

// (-k, k+1, k(k+1)+s) with residual 0 under r = 1. Requires s odd (for even s
// the length-3 equation has no solutions at all) and k >= |s|+2.
SolutionTuple family_triple(const Integer& s, const Integer& k);

// (u_1(r), ..., u_{n-1}(r), u_n(r)-s-1) with residual 1 under (r, s); the
// last coordinate attains the positive-solution bound. Requires
// u_n(r)-s-1 >= 2.
SolutionTuple family_extremal_positive(const Integer& r, const Integer& s, int n);

// Length-n tuple with residual m under r = 1, built by padding an m = 0 base
// family with sign-carrying +-1 coordinates. Defined exactly on the infinite
// region: |m| <= n-2, or (m = n-1 and s = 1), or (m = -(n-1) and
// s = (-1)^(n-1)). k ranges over the base family's domain (k >= |s|+2).
SolutionTuple family_nonzero_m(const Integer& s, const Integer& m, int n, const Integer& k);

enum class FamilyKind { M0General, Pair, Triple, ExtremalPositive, PaddedNonzeroM };

// A family plus an arithmetic progression k = k0 + j*k_step of valid
// parameters, so a single spec names infinitely many tuples.
struct FamilySpec {
    FamilyKind kind;
    Integer r = 1;
    Integer s = 1;
    Integer m = 0;
    int n = 2;
    Integer k0 = 0;
    Integer k_step = 1;
};

// The j-th member of the family (j >= 0).
SolutionTuple materialize(const FamilySpec& spec, const Integer& j);

}  // namespace cclab
