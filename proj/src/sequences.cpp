#include "cclab/sequences.hpp"

namespace cclab {

namespace {

// Exponents 2^(n-1) in the signed bounds; n beyond ~30 is far outside desk
// scale and would produce terms too large to be useful.
unsigned pow2_exponent(int e) {
    if (e < 0 || e > 62) throw std::invalid_argument("bound exponent out of supported range");
    return 1u << e;
}

Integer ipow(const Integer& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace

std::vector<Integer> sylvester_series(const Integer& r, int upto) {
    if (r < 1) throw std::invalid_argument("sylvester_u: r must be >= 1");
    if (upto < 1) throw std::invalid_argument("sylvester_u: index must be >= 1");
    std::vector<Integer> us;
    us.reserve(static_cast<std::size_t>(upto));
    Integer prod = 1;
    for (int i = 1; i <= upto; ++i) {
        const Integer u = r * prod + 1;
        us.push_back(u);
        prod *= u;
    }
    return us;
}

Integer sylvester_u(const Integer& r, int n) { return sylvester_series(r, n).back(); }

std::vector<Integer> v_series(const Integer& m, int upto) {
    if (m < 1) throw std::invalid_argument("v_seq: m must be >= 1");
    if (upto < 1) throw std::invalid_argument("v_seq: index must be >= 1");
    std::vector<Integer> vs;
    vs.reserve(static_cast<std::size_t>(upto));
    Integer prod = 1;
    for (int k = 1; k <= upto; ++k) {
        const Integer v = k == 1 ? m : Integer(prod + 1);
        vs.push_back(v);
        prod *= v;
    }
    return vs;
}

Integer v_seq(const Integer& m, int k) { return v_series(m, k).back(); }

Integer modulus_M_star(int n) {
    if (n < 2) throw std::invalid_argument("modulus_M_star: n must be >= 2");
    Integer prod = 1;
    for (const Integer& u : sylvester_series(1, n)) prod *= u;
    return prod;
}

std::optional<Integer> minimal_M_known(int n) {
    if (n < 2) throw std::invalid_argument("minimal_M_known: n must be >= 2");
    if (n == 2) return Integer(1);
    if (n == 3) return Integer(2);
    return std::nullopt;
}

Integer positive_bound(const Integer& r, const Integer& s, int n) {
    if (r < 1 || s == 0 || n < 2 || int_gcd(r, int_abs(s)) != 1)
        throw std::invalid_argument("positive_bound: need r >= 1, s != 0, n >= 2, gcd(r,s)=1");
    const Integer main = sylvester_u(r, n) - s - 1;
    const Integer alt = s > 0 ? Integer(s * s) : int_abs(s);
    return main > alt ? main : alt;
}

Integer signed_sharp_bound(const Integer& r, const Integer& s, int n) {
    if (r < 1 || s == 0 || n < 2)
        throw std::invalid_argument("signed_sharp_bound: need r >= 1, s != 0, n >= 2");
    Integer value = ipow(r, pow2_exponent(n - 1));
    for (int j = 1; j <= n - 1; ++j)
        value *= ipow(Integer(n + 2 - j), pow2_exponent(n - 1 - j));
    return value + int_abs(s);
}

Integer signed_coarse_bound(const Integer& r, const Integer& s, int n) {
    if (r < 1 || s == 0 || n < 2)
        throw std::invalid_argument("signed_coarse_bound: need r >= 1, s != 0, n >= 2");
    return ipow(r * (n + 1), pow2_exponent(n - 1)) + int_abs(s);
}

}  // namespace cclab
