#include "cclab/families.hpp"

#include "cclab/sequences.hpp"

namespace cclab {

SolutionTuple family_m0(int n, const Integer& s, const Integer& k) {
    if (n < 3) throw std::invalid_argument("family_m0: n must be >= 3 (length 2 is family_pair)");
    if (s == 0) throw std::invalid_argument("family_m0: s must be nonzero");
    if (k < 2) throw std::invalid_argument("family_m0: k must be >= 2");
    std::vector<Integer> vs = v_series(k, n);
    vs.back() += s - 1;
    if (vs.back() < 2)
        throw std::invalid_argument("family_m0: k too small for this s (last coordinate < 2)");
    vs.front() = -vs.front();
    return SolutionTuple(std::move(vs));
}

SolutionTuple family_pair(const Integer& s, const Integer& k) {
    if (s == 0) throw std::invalid_argument("family_pair: s must be nonzero");
    if (k < int_abs(s) + 2) throw std::invalid_argument("family_pair: k must be >= |s|+2");
    return SolutionTuple(std::vector<Integer>{-k, k + s});
}

SolutionTuple family_triple(const Integer& s, const Integer& k) {
    if (s == 0) throw std::invalid_argument("family_triple: s must be nonzero");
    if (s % 2 == 0)
        throw std::invalid_argument(
            "family_triple: s must be odd (no length-3 solutions exist for even s)");
    if (k < 2 || k * (k + 1) + s < 2)
        throw std::invalid_argument("family_triple: k too small for this s");
    return SolutionTuple(std::vector<Integer>{-k, k + 1, k * (k + 1) + s});
}

SolutionTuple family_extremal_positive(const Integer& r, const Integer& s, int n) {
    if (r < 1 || s == 0 || n < 2)
        throw std::invalid_argument("family_extremal_positive: need r >= 1, s != 0, n >= 2");
    std::vector<Integer> us = sylvester_series(r, n);
    us.back() -= s + 1;
    if (us.back() < 2)
        throw std::invalid_argument("family_extremal_positive: u_n(r)-s-1 must be >= 2");
    return SolutionTuple(std::move(us));
}

namespace {

bool in_infinite_region(const Integer& s, const Integer& m, int n) {
    if (int_abs(m) <= n - 2) return true;
    if (m == n - 1 && s == 1) return true;
    if (m == -(n - 1) && s == ((n - 1) % 2 == 0 ? 1 : -1)) return true;
    return false;
}

}  // namespace

SolutionTuple family_nonzero_m(const Integer& s, const Integer& m, int n, const Integer& k) {
    if (s == 0 || n < 2) throw std::invalid_argument("family_nonzero_m: need s != 0, n >= 2");
    if (!in_infinite_region(s, m, n))
        throw std::invalid_argument("family_nonzero_m: (s, m, n) outside the infinite region");

    if (int_abs(m) == n - 1) {
        // m = +-(n-1): n-1 coordinates sgn(m)*1 plus one free coordinate; the
        // region condition on s makes the s/prod term cancel the 1/x_n term.
        if (k < 2) throw std::invalid_argument("family_nonzero_m: k must be >= 2");
        const Integer unit = m > 0 ? 1 : -1;
        std::vector<Integer> entries(static_cast<std::size_t>(n - 1), unit);
        entries.push_back(unit * k);
        return SolutionTuple(std::move(entries));
    }

    // |m| <= n-2: |m| pads of sgn(m)*1 raise the residual from 0 to m; each
    // pad of -1 also flips the sign of s seen by the core. The remaining
    // length-L core carries s' and m = 0; (+1,-1) pairs (which flip s and
    // preserve m) shrink it to a length-2 or length-3 base family.
    const int abs_m = static_cast<int>(int_abs(m));
    const int core_len = n - abs_m;
    const Integer s_core = (m < 0 && abs_m % 2 == 1) ? Integer(-s) : s;
    const int base_len = core_len % 2 == 0 ? 2 : 3;
    const int pairs = (core_len - base_len) / 2;
    const Integer s_base = pairs % 2 == 1 ? Integer(-s_core) : s_core;

    SolutionTuple base = base_len == 2 ? family_pair(s_base, k)
                         : s_base % 2 != 0 ? family_triple(s_base, k)
                                           : family_m0(3, s_base, k);
    std::vector<Integer> entries = base.entries();
    for (int i = 0; i < pairs; ++i) {
        entries.emplace_back(1);
        entries.emplace_back(-1);
    }
    const Integer unit = m >= 0 ? 1 : -1;
    for (int i = 0; i < abs_m; ++i) entries.push_back(unit);
    return SolutionTuple(std::move(entries)).canonical();
}

SolutionTuple materialize(const FamilySpec& spec, const Integer& j) {
    if (j < 0) throw std::invalid_argument("materialize: j must be >= 0");
    const Integer k = spec.k0 + j * spec.k_step;
    switch (spec.kind) {
        case FamilyKind::M0General:
            return family_m0(spec.n, spec.s, k);
        case FamilyKind::Pair:
            return family_pair(spec.s, k);
        case FamilyKind::Triple:
            return family_triple(spec.s, k);
        case FamilyKind::ExtremalPositive:
            return family_extremal_positive(spec.r, spec.s, spec.n);
        case FamilyKind::PaddedNonzeroM:
            return family_nonzero_m(spec.s, spec.m, spec.n, k);
    }
    throw std::invalid_argument("materialize: unknown family kind");
}

}  // namespace cclab
