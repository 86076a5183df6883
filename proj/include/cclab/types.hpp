#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace cclab {

// All arithmetic is exact. Integer is unbounded; Rational is kept reduced
// with a positive denominator by the underlying representation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline Integer int_abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer int_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

// Canonical coordinate order: by |value|, positive before negative on ties.
inline bool canonical_less(const Integer& a, const Integer& b) {
    const Integer aa = int_abs(a);
    const Integer bb = int_abs(b);
    if (aa != bb) return aa < bb;
    return a > b;  // +k precedes -k
}

// Ordered list of nonzero integers. Canonical form is non-decreasing under
// canonical_less, shared by the positive and signed enumerations.
class SolutionTuple {
  public:
    SolutionTuple() = default;

    explicit SolutionTuple(std::vector<Integer> entries) : entries_(std::move(entries)) {
        for (const Integer& e : entries_) {
            if (e == 0) throw std::invalid_argument("SolutionTuple entry must be nonzero");
        }
    }

    static SolutionTuple of(std::initializer_list<long long> values) {
        std::vector<Integer> es;
        es.reserve(values.size());
        for (long long v : values) es.emplace_back(v);
        return SolutionTuple(std::move(es));
    }

    const std::vector<Integer>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    SolutionTuple canonical() const {
        std::vector<Integer> es = entries_;
        std::sort(es.begin(), es.end(), canonical_less);
        SolutionTuple t;
        t.entries_ = std::move(es);
        return t;
    }

    Integer product() const {
        Integer p = 1;
        for (const Integer& e : entries_) p *= e;
        return p;
    }

    bool operator==(const SolutionTuple& other) const { return entries_ == other.entries_; }

    // Lexicographic under the canonical coordinate order; used for dedup sets
    // and for deterministic report ordering.
    bool operator<(const SolutionTuple& other) const {
        const auto& a = entries_;
        const auto& b = other.entries_;
        const std::size_t m = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < m; ++i) {
            if (a[i] != b[i]) return canonical_less(a[i], b[i]);
        }
        return a.size() < b.size();
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ",";
            out += entries_[i].str();
        }
        out += ")";
        return out;
    }

  private:
    std::vector<Integer> entries_;
};

// Parameters (r, s, n) of the cyclic congruence system
//   r * (prod_k q_k / q_i) == s  (mod |q_i|),  1 <= i <= n.
struct CyclicSystem {
    Integer r;
    Integer s;
    int n;

    CyclicSystem(Integer r_, Integer s_, int n_) : r(std::move(r_)), s(std::move(s_)), n(n_) {
        if (r < 1) throw std::invalid_argument("CyclicSystem: r must be >= 1");
        if (s == 0) throw std::invalid_argument("CyclicSystem: s must be nonzero");
        if (n < 2) throw std::invalid_argument("CyclicSystem: n must be >= 2");
        if (int_gcd(r, int_abs(s)) != 1) throw std::invalid_argument("CyclicSystem: gcd(r,s) must be 1");
    }
};

// Parameters (r, s, m, n) of the Diophantine equation
//   r*(1/x_1 + ... + 1/x_n) - s/(x_1*...*x_n) = m.
struct DioInstance {
    Integer r;
    Integer s;
    Integer m;
    int n;

    DioInstance(Integer r_, Integer s_, Integer m_, int n_)
        : r(std::move(r_)), s(std::move(s_)), m(std::move(m_)), n(n_) {
        if (r < 1) throw std::invalid_argument("DioInstance: r must be >= 1");
        if (s == 0) throw std::invalid_argument("DioInstance: s must be nonzero");
        if (n < 2) throw std::invalid_argument("DioInstance: n must be >= 2");
        if (int_gcd(r, int_abs(s)) != 1) throw std::invalid_argument("DioInstance: gcd(r,s) must be 1");
    }
};

}  // namespace cclab
