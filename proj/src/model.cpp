#include "cclab/model.hpp"

namespace cclab {

Rational reciprocal_sum(const SolutionTuple& t) {
    Rational sum = 0;
    for (const Integer& e : t.entries()) sum += make_rational(1, e);
    return sum;
}

Rational residual_m(const Integer& r, const Integer& s, const SolutionTuple& t) {
    // r*sum(1/t_i) - s/prod = (r*sum_i(prod/t_i) - s) / prod, kept exact.
    const Integer prod = t.product();
    Integer cofactor_sum = 0;
    for (const Integer& e : t.entries()) cofactor_sum += prod / e;
    return make_rational(r * cofactor_sum - s, prod);
}

bool check_cyclic(const CyclicSystem& sys, const SolutionTuple& q) {
    if (static_cast<int>(q.size()) != sys.n)
        throw std::invalid_argument("check_cyclic: tuple length does not match system");
    const Integer prod = q.product();
    for (const Integer& e : q.entries()) {
        const Integer mod = int_abs(e);
        if (mod == 1) continue;
        if ((sys.r * (prod / e) - sys.s) % mod != 0) return false;
    }
    return true;
}

bool gcd_condition(const SolutionTuple& q, const Integer& s) {
    return int_gcd(int_abs(q.product()), int_abs(s)) == 1;
}

bool pairwise_coprime(const SolutionTuple& q) {
    const auto& es = q.entries();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (int_gcd(int_abs(es[i]), int_abs(es[j])) != 1) return false;
    return true;
}

bool is_nontrivial(const SolutionTuple& q) {
    int count = 0;
    for (const Integer& e : q.entries())
        if (int_abs(e) >= 2 && ++count == 2) return true;
    return false;
}

std::optional<Integer> to_diophantine(const CyclicSystem& sys, const SolutionTuple& q) {
    const Rational res = residual_m(sys.r, sys.s, q);
    if (denominator(res) != 1) return std::nullopt;
    return Integer(numerator(res));
}

bool to_congruence(const DioInstance& inst, const SolutionTuple& x) {
    if (residual_m(inst.r, inst.s, x) != Rational(inst.m))
        throw std::invalid_argument("to_congruence: residual does not equal m");
    return check_cyclic(CyclicSystem(inst.r, inst.s, inst.n), x);
}

bool check_hypersurface(const Integer& r, const Integer& s, const Integer& m,
                        const std::vector<Integer>& x) {
    Integer prod = 1;
    for (const Integer& v : x) prod *= v;
    Integer cofactor_sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Integer c = 1;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) c *= x[j];
        cofactor_sum += c;
    }
    return r * cofactor_sum - s == m * prod;
}

}  // namespace cclab
