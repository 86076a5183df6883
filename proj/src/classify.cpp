#include "cclab/classify.hpp"

#include "cclab/sequences.hpp"

namespace cclab {

namespace {

void validate(const Integer& r, const Integer& s, int n) {
    if (r < 1 || s == 0 || n < 2 || int_gcd(r, int_abs(s)) != 1)
        throw std::invalid_argument("classify: need r >= 1, s != 0, n >= 2, gcd(r,s)=1");
}

// The three sub-regions where r = 1 admits infinitely many solutions.
// Returns 0 when none applies.
int infinite_condition(const Integer& s, const Integer& m, int n) {
    if (int_abs(m) <= n - 2) return 1;
    if (m == n - 1 && s == 1) return 2;
    if (m == -(n - 1) && s == ((n - 1) % 2 == 0 ? 1 : -1)) return 3;
    return 0;
}

FamilySpec padded_witness(const Integer& s, const Integer& m, int n) {
    FamilySpec spec;
    spec.kind = FamilyKind::PaddedNonzeroM;
    spec.r = 1;
    spec.s = s;
    spec.m = m;
    spec.n = n;
    spec.k0 = int_abs(s) + 2;
    spec.k_step = 1;
    return spec;
}

std::string condition_tag(int cond, int n) {
    switch (cond) {
        case 1:
            return "infinite: condition (i) |m| <= n-2";
        case 2:
            return "infinite: condition (ii) m = n-1 and s = 1";
        case 3:
            return "infinite: condition (iii) m = -(n-1) and s = (-1)^(n-1)";
    }
    (void)n;
    return "";
}

}  // namespace

Verdict classify_diophantine(const Integer& r, const Integer& s, const Integer& m, int n) {
    validate(r, s, n);
    Verdict v;
    const int cond = r == 1 ? infinite_condition(s, m, n) : 0;
    if (cond != 0) {
        v.status = Verdict::Status::Infinite;
        v.witness = padded_witness(s, m, n);
        v.theorem_tag = condition_tag(cond, n);
    } else {
        v.status = Verdict::Status::Finite;
        v.bound = signed_sharp_bound(r, s, n);
        v.theorem_tag = r >= 2 ? "finite: r >= 2, sharp signed bound"
                               : "finite: (s, m) outside the infinite region";
    }
    return v;
}

Verdict classify_hypersurface(const Integer& r, const Integer& s, const Integer& m, int n) {
    Verdict v = classify_diophantine(r, s, m, n);
    if (v.status == Verdict::Status::Finite) {
        // Tuples with zero coordinates satisfy r*(partial cofactor sum) = s,
        // so every coordinate divides a value bounded by |s|.
        const Integer zero_bound = int_abs(s);
        if (*v.bound < zero_bound) v.bound = zero_bound;
        v.theorem_tag += " (zero-coordinate solutions bounded by |s|)";
    }
    return v;
}

Verdict classify_congruence(const Integer& r, const Integer& s, int n, Positivity positivity) {
    validate(r, s, n);
    Verdict v;
    if (positivity == Positivity::PositiveOnly) {
        v.status = Verdict::Status::Finite;
        v.bound = positive_bound(r, s, n);
        v.theorem_tag = "finite: positive tuples are bounded";
        return v;
    }
    if (r >= 2) {
        v.status = Verdict::Status::Finite;
        v.bound = signed_coarse_bound(r, s, n);
        v.theorem_tag = "finite: r >= 2 signed congruences";
        return v;
    }
    v.status = Verdict::Status::Infinite;
    const Integer abs_s = int_abs(s);
    if (int_gcd(abs_s, modulus_M_star(n)) == 1) {
        // An m = 0 family with min|q_i| >= 2; stepping k by |s| through
        // k == 1 (mod |s|) keeps gcd(prod q_i, s) = 1.
        FamilySpec spec;
        spec.kind = n == 2 ? FamilyKind::Pair : FamilyKind::M0General;
        spec.r = 1;
        spec.s = s;
        spec.m = 0;
        spec.n = n;
        spec.k_step = abs_s;
        spec.k0 = abs_s + 2;
        while (spec.k0 % abs_s != 1 % abs_s) ++spec.k0;
        v.witness = spec;
        v.theorem_tag = "infinite: r = 1 signed congruences, min |q_i| >= 2 witness";
    } else {
        // Fall back to a +-1-padded family when the min |q_i| >= 2 variant's
        // gcd hypothesis fails.
        const Integer m = n % 2 == 1 ? 1 : 0;
        v.witness = padded_witness(s, m, n);
        v.theorem_tag = "infinite: r = 1 signed congruences, padded witness";
    }
    return v;
}

}  // namespace cclab
