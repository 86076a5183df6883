#pragma once

#include <optional>
#include <vector>

#include "cclab/types.hpp"

namespace cclab {

// u_1(r) = r+1, u_{n+1}(r) = r*(u_1(r)*...*u_n(r)) + 1. The classical
// sequence 2, 3, 7, 43, 1807, ... is r = 1.
Integer sylvester_u(const Integer& r, int n);

// u_1(r) .. u_upto(r) in one pass.
std::vector<Integer> sylvester_series(const Integer& r, int upto);

// v_1(m) = m, v_k(m) = v_1(m)*...*v_{k-1}(m) + 1, giving (m, m+1, m(m+1)+1, ...).
Integer v_seq(const Integer& m, int k);

std::vector<Integer> v_series(const Integer& m, int upto);

// An allowable modulus for the min|x_i| >= 2 infinite families: u_1*...*u_n
// over the r = 1 sequence.
Integer modulus_M_star(int n);

// Known-minimal moduli: 1 for n = 2, 2 for n = 3; unknown beyond that.
std::optional<Integer> minimal_M_known(int n);

// Upper bound on max q_i for positive congruence solutions under the side
// conditions: max{u_n(r)-s-1, s^2} for s > 0, max{u_n(r)-s-1, |s|} for s < 0.
Integer positive_bound(const Integer& r, const Integer& s, int n);

// r^(2^(n-1)) * prod_{j=1}^{n-1} (n+2-j)^(2^(n-1-j)) + |s|.
Integer signed_sharp_bound(const Integer& r, const Integer& s, int n);

// (r*(n+1))^(2^(n-1)) + |s|.
Integer signed_coarse_bound(const Integer& r, const Integer& s, int n);

}  // namespace cclab
