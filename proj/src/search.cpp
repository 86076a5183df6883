#include "cclab/search.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "cclab/model.hpp"
#include "cclab/sequences.hpp"

namespace cclab {

namespace {

using Clock = std::chrono::steady_clock;
using Solution = std::pair<SolutionTuple, Integer>;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Integer floor_rational(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);  // > 0
    Integer quot = num / den;
    if (num % den != 0 && num < 0) --quot;
    return quot;
}

// Largest q >= 0 with q^e <= v (v >= 0, e >= 1).
Integer nth_root_floor(const Integer& v, int e) {
    if (v < 0) return -1;
    if (e == 1 || v <= 1) return v;
    Integer lo = 0, hi = v + 1;
    while (hi - lo > 1) {
        const Integer mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(e)) <= v)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

struct Accum {
    std::vector<Solution> solutions;
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    std::uint64_t degenerate = 0;
    bool truncated = false;
};

void merge_into(SearchReport& report, std::vector<Accum>& accums) {
    std::set<Solution> dedup;
    for (Accum& a : accums) {
        report.nodes_visited += a.nodes;
        report.nodes_pruned += a.pruned;
        report.degenerate_prefixes += a.degenerate;
        if (a.truncated) report.complete = false;
        for (Solution& sol : a.solutions) dedup.insert(std::move(sol));
    }
    report.solutions.assign(dedup.begin(), dedup.end());
}

template <typename Task, typename Fn>
std::vector<Accum> run_tasks(const std::vector<Task>& tasks, int jobs, Fn fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        std::vector<Accum> accums(1);
        for (const Task& t : tasks) fn(t, accums[0]);
        return accums;
    }
    const int workers = std::min<int>(jobs, static_cast<int>(tasks.size()));
    std::vector<Accum> accums(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                fn(tasks[i], accums[static_cast<std::size_t>(w)]);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return accums;
}

// ---------------------------------------------------------------------------
// Positive enumeration through the Diophantine form. A prefix carries its
// product P and cofactor sum C = sum_j P/q_j; the last variable solves
// q_n * (m*P - r*C) = r*P - s exactly.
// ---------------------------------------------------------------------------

class PositiveSearcher {
  public:
    PositiveSearcher(const CyclicSystem& sys, const SearchOptions& opts, Integer cap)
        : r_(sys.r), s_(sys.s), n_(sys.n), opts_(opts), cap_(std::move(cap)) {}

    // Upper limit for the next coordinate given the residual target
    // T = m - r*C/P and k unchosen coordinates (the last included).
    // Returns a value < lo to signal an infeasible subtree.
    Integer next_cap(const Integer& m, const Integer& P, const Integer& C, int k,
                     const Integer& lo) const {
        const Integer t_num = m * P - r_ * C;  // T = t_num / P, P > 0
        Integer hi;
        if (t_num > 0) {
            hi = floor_rational(make_rational((r_ * k + int_abs(s_)) * P, t_num));
        } else if (t_num < 0) {
            // Needs s/prod to outweigh the positive reciprocal terms.
            if (s_ <= 0) return lo - 1;
            hi = floor_rational(make_rational(s_, -t_num));
        } else {
            // Exact balance r*sum_rest = s/prod: forces s >= r*P*q^(k-1).
            if (s_ <= 0) return lo - 1;
            if (k >= 2)
                hi = nth_root_floor(s_ / (r_ * P), k - 1);
            else
                hi = cap_;
        }
        return hi < cap_ ? hi : cap_;
    }

    void solve_last(const Integer& m, const std::vector<Integer>& prefix, const Integer& P,
                    const Integer& C, Accum& acc) const {
        const Integer D = m * P - r_ * C;
        const Integer N = r_ * P - s_;
        if (D == 0) {
            if (N == 0)
                ++acc.degenerate;  // critical equality: q_n unconstrained
            else
                ++acc.pruned;
            return;
        }
        if (N % D != 0) {
            ++acc.pruned;
            return;
        }
        const Integer qn = N / D;
        if (qn < prefix.back() || qn < opts_.min_abs || qn > cap_) {
            ++acc.pruned;
            return;
        }
        std::vector<Integer> entries = prefix;
        entries.push_back(qn);
        SolutionTuple tuple(std::move(entries));
        if (opts_.require_gcd_condition && !gcd_condition(tuple, s_)) return;
        if (opts_.require_nontrivial && !is_nontrivial(tuple)) return;
        acc.solutions.emplace_back(std::move(tuple), m);
    }

    void dfs(const Integer& m, std::vector<Integer>& prefix, const Integer& P,
             const Integer& C, Accum& acc) const {
        ++acc.nodes;
        if (static_cast<int>(prefix.size()) == n_ - 1) {
            solve_last(m, prefix, P, C, acc);
            return;
        }
        const int k = n_ - static_cast<int>(prefix.size());
        const Integer lo = prefix.empty() ? opts_.min_abs
                                          : std::max(prefix.back(), opts_.min_abs);
        const Integer hi = next_cap(m, P, C, k, lo);
        if (hi < lo) {
            ++acc.pruned;
            return;
        }
        for (Integer q = lo; q <= hi; ++q) {
            prefix.push_back(q);
            dfs(m, prefix, P * q, C * q + P, acc);
            prefix.pop_back();
        }
    }

  private:
    Integer r_, s_;
    int n_;
    const SearchOptions& opts_;
    Integer cap_;
};

// ---------------------------------------------------------------------------
// Signed enumeration: prefixes ascend by |x_i| with both signs tried, ties
// keep + before - so each prefix multiset is generated once.
// ---------------------------------------------------------------------------

class SignedSearcher {
  public:
    SignedSearcher(Integer r, Integer s, int n, const SearchOptions& opts, Integer cap)
        : r_(std::move(r)), s_(std::move(s)), n_(n), opts_(opts), cap_(std::move(cap)) {}

    Integer next_abs_cap(const Integer& m, const Integer& P, const Integer& C, int k,
                         const Integer& lo) const {
        const Rational t = Rational(m) - make_rational(r_ * C, P);
        if (t == 0) return cap_;  // rare balanced branch, bounded by the theorem cap
        const Integer hi = floor_rational((r_ * k + int_abs(s_)) / abs(t));
        (void)lo;
        return hi < cap_ ? hi : cap_;
    }

    void solve_last(const Integer& m, const std::vector<Integer>& prefix, const Integer& P,
                    const Integer& C, Accum& acc) const {
        const Integer D = m * P - r_ * C;
        const Integer N = r_ * P - s_;
        if (D == 0) {
            if (N == 0) {
                // x_n unconstrained: an infinite family passes through this
                // prefix, so the emitted set cannot be complete.
                ++acc.degenerate;
                acc.truncated = true;
            } else {
                ++acc.pruned;
            }
            return;
        }
        if (N == 0 || N % D != 0) {
            ++acc.pruned;
            return;
        }
        const Integer xn = N / D;
        const Integer last_abs = prefix.empty() ? Integer(0) : int_abs(prefix.back());
        if (int_abs(xn) < opts_.min_abs || int_abs(xn) < last_abs) {
            ++acc.pruned;
            return;
        }
        std::vector<Integer> entries = prefix;
        entries.push_back(xn);
        SolutionTuple tuple = SolutionTuple(std::move(entries)).canonical();
        if (opts_.require_gcd_condition && !gcd_condition(tuple, s_)) return;
        if (opts_.require_nontrivial && !is_nontrivial(tuple)) return;
        acc.solutions.emplace_back(std::move(tuple), m);
    }

    void dfs(const Integer& m, std::vector<Integer>& prefix, const Integer& P,
             const Integer& C, Accum& acc) const {
        ++acc.nodes;
        if (static_cast<int>(prefix.size()) == n_ - 1) {
            solve_last(m, prefix, P, C, acc);
            return;
        }
        const int k = n_ - static_cast<int>(prefix.size());
        const Integer last_abs = prefix.empty() ? Integer(0) : int_abs(prefix.back());
        const bool last_neg = !prefix.empty() && prefix.back() < 0;
        const Integer lo = std::max(last_abs, opts_.min_abs);
        const Integer hi = next_abs_cap(m, P, C, k, lo);
        if (hi < lo) {
            ++acc.pruned;
            return;
        }
        for (Integer a = lo; a <= hi; ++a) {
            for (int sign = 0; sign < 2; ++sign) {
                if (sign == 0 && a == last_abs && last_neg) continue;  // keep + before -
                const Integer v = sign == 0 ? a : Integer(-a);
                prefix.push_back(v);
                dfs(m, prefix, P * v, C * v + P, acc);
                prefix.pop_back();
            }
        }
    }

  private:
    Integer r_, s_;
    int n_;
    const SearchOptions& opts_;
    Integer cap_;
};

Integer positive_m_upper(const Integer& r, const Integer& s, int n, const Integer& min_abs) {
    return floor_rational(make_rational(r * n, min_abs) +
                          make_rational(int_abs(s), boost::multiprecision::pow(
                                                        min_abs, static_cast<unsigned>(n))));
}

std::vector<Integer> divisors_at_least_two(const Integer& v) {
    std::vector<Integer> ds;
    const Integer a = int_abs(v);
    for (Integer d = 2; d <= a; ++d)
        if (a % d == 0) ds.push_back(d);
    return ds;
}

}  // namespace

SearchReport enumerate_positive(const CyclicSystem& sys, const SearchOptions& opts) {
    if (opts.positivity != Positivity::PositiveOnly)
        throw std::invalid_argument("enumerate_positive: positivity must be PositiveOnly");
    if (opts.min_abs < 1) throw std::invalid_argument("enumerate_positive: min_abs must be >= 1");
    const auto t0 = Clock::now();

    SearchReport report;
    const Integer theorem_bound = positive_bound(sys.r, sys.s, sys.n);
    Integer cap = theorem_bound;
    if (opts.hard_cap && *opts.hard_cap < theorem_bound) {
        cap = *opts.hard_cap;
        report.complete = false;
    }
    report.bound_used = cap;

    // All positive solutions have m >= 1 under the side conditions; below
    // them (r*q_1*...*q_{n-1} < s) m can drop as far as 1-s.
    Integer m_lo = sys.s > 0 ? Integer(1 - sys.s) : Integer(1);
    Integer m_hi = positive_m_upper(sys.r, sys.s, sys.n, opts.min_abs);
    std::vector<Integer> ms;
    if (opts.m_filter.kind == MFilter::Kind::Fixed) {
        if (opts.m_filter.value >= m_lo && opts.m_filter.value <= m_hi)
            ms.push_back(opts.m_filter.value);
    } else {
        for (Integer m = m_lo; m <= m_hi; ++m) {
            if (opts.m_filter.kind == MFilter::Kind::NonZero && m == 0) continue;
            ms.push_back(m);
        }
    }

    PositiveSearcher searcher(sys, opts, cap);
    // Split at the first coordinate for deterministic parallel exploration.
    std::vector<std::pair<Integer, Integer>> tasks;  // (m, q_1)
    for (const Integer& m : ms) {
        const Integer hi = searcher.next_cap(m, 1, 0, sys.n, opts.min_abs);
        for (Integer q1 = opts.min_abs; q1 <= hi; ++q1) tasks.emplace_back(m, q1);
    }
    auto accums = run_tasks(tasks, opts.jobs, [&](const std::pair<Integer, Integer>& task,
                                                  Accum& acc) {
        std::vector<Integer> prefix{task.second};
        searcher.dfs(task.first, prefix, task.second, 1, acc);
    });
    merge_into(report, accums);
    report.elapsed_ms = ms_since(t0);
    return report;
}

SearchReport enumerate_signed(const Integer& r, const Integer& s, int n,
                              const SearchOptions& opts) {
    if (opts.positivity != Positivity::Signed)
        throw std::invalid_argument("enumerate_signed: positivity must be Signed");
    if (opts.min_abs < 2) throw std::invalid_argument("enumerate_signed: min_abs must be >= 2");
    if (opts.m_filter.kind == MFilter::Kind::Any ||
        (opts.m_filter.kind == MFilter::Kind::Fixed && opts.m_filter.value == 0))
        throw std::invalid_argument("enumerate_signed: m filter must exclude zero");
    if (r < 1 || s == 0 || n < 2)
        throw std::invalid_argument("enumerate_signed: need r >= 1, s != 0, n >= 2");
    const auto t0 = Clock::now();

    SearchReport report;
    const Integer theorem_bound = signed_sharp_bound(r, s, n);
    Integer cap = theorem_bound;
    if (opts.hard_cap && *opts.hard_cap < theorem_bound) {
        cap = *opts.hard_cap;
        report.complete = false;
    }
    report.bound_used = cap;

    std::vector<Integer> ms;
    if (opts.m_filter.kind == MFilter::Kind::Fixed) {
        ms.push_back(opts.m_filter.value);
    } else {
        const Integer m_cap = positive_m_upper(r, s, n, opts.min_abs);
        for (Integer m = -m_cap; m <= m_cap; ++m)
            if (m != 0) ms.push_back(m);
    }

    SignedSearcher searcher(r, s, n, opts, cap);
    std::vector<std::pair<Integer, Integer>> tasks;  // (m, x_1)
    for (const Integer& m : ms) {
        const Integer hi = searcher.next_abs_cap(m, 1, 0, n, opts.min_abs);
        for (Integer a = opts.min_abs; a <= hi; ++a) {
            tasks.emplace_back(m, a);
            tasks.emplace_back(m, -a);
        }
    }
    auto accums = run_tasks(tasks, opts.jobs, [&](const std::pair<Integer, Integer>& task,
                                                  Accum& acc) {
        std::vector<Integer> prefix{task.second};
        searcher.dfs(task.first, prefix, task.second, 1, acc);
    });
    merge_into(report, accums);
    report.elapsed_ms = ms_since(t0);
    return report;
}

SearchReport enumerate_signed_congruence(const CyclicSystem& sys, const SearchOptions& opts) {
    if (sys.r < 2) throw std::invalid_argument("enumerate_signed_congruence: requires r >= 2");
    const auto t0 = Clock::now();

    SearchReport report;
    report.bound_used = signed_coarse_bound(sys.r, sys.s, sys.n);

    // Core solutions (all |x_i| >= 2) per sign-adjusted s'; lengths 0 and 1
    // are handled directly, longer cores by the bounded signed search.
    std::map<std::pair<Integer, int>, std::vector<SolutionTuple>> core_cache;
    auto cores_for = [&](const Integer& s_adj, int c) -> const std::vector<SolutionTuple>& {
        auto key = std::make_pair(s_adj, c);
        auto it = core_cache.find(key);
        if (it != core_cache.end()) return it->second;
        std::vector<SolutionTuple> cores;
        if (c == 1) {
            // r/x - s'/x = m needs x | (r - s').
            for (const Integer& d : divisors_at_least_two(sys.r - s_adj)) {
                cores.push_back(SolutionTuple(std::vector<Integer>{d}));
                cores.push_back(SolutionTuple(std::vector<Integer>{-d}));
            }
        } else if (c >= 2) {
            SearchOptions core_opts;
            core_opts.positivity = Positivity::Signed;
            core_opts.min_abs = 2;
            core_opts.m_filter = MFilter::nonzero();  // m' = 0 impossible for r >= 2
            core_opts.jobs = opts.jobs;
            SearchReport sub = enumerate_signed(sys.r, s_adj, c, core_opts);
            report.nodes_visited += sub.nodes_visited;
            report.nodes_pruned += sub.nodes_pruned;
            report.degenerate_prefixes += sub.degenerate_prefixes;
            if (!sub.complete) report.complete = false;
            for (auto& [tuple, m] : sub.solutions) cores.push_back(tuple);
        }
        return core_cache.emplace(std::move(key), std::move(cores)).first->second;
    };

    std::set<Solution> out;
    for (int c = 0; c <= sys.n; ++c) {
        const int pad = sys.n - c;
        for (int neg = 0; neg <= pad; ++neg) {
            const Integer s_adj = (neg % 2 == 1) ? Integer(-sys.s) : sys.s;
            auto expand = [&](const std::vector<Integer>& core_entries) {
                std::vector<Integer> entries = core_entries;
                for (int i = 0; i < pad - neg; ++i) entries.emplace_back(1);
                for (int i = 0; i < neg; ++i) entries.emplace_back(-1);
                SolutionTuple tuple = SolutionTuple(std::move(entries)).canonical();
                if (!gcd_condition(tuple, sys.s)) return;
                if (opts.require_nontrivial && !is_nontrivial(tuple)) return;
                const Rational res = residual_m(sys.r, sys.s, tuple);
                if (denominator(res) != 1) return;  // cannot happen for these cores
                const Integer m = Integer(numerator(res));
                if (opts.m_filter.kind == MFilter::Kind::Fixed && m != opts.m_filter.value)
                    return;
                if (opts.m_filter.kind == MFilter::Kind::NonZero && m == 0) return;
                out.emplace(std::move(tuple), m);
            };
            if (c == 0) {
                expand({});
            } else {
                for (const SolutionTuple& core : cores_for(s_adj, c)) expand(core.entries());
            }
        }
    }
    report.solutions.assign(out.begin(), out.end());
    report.elapsed_ms = ms_since(t0);
    return report;
}

KelloggCheck verify_kellogg_bounds(const Integer& r, const std::vector<Integer>& p) {
    if (r < 1) throw std::invalid_argument("verify_kellogg_bounds: r must be >= 1");
    if (p.empty()) throw std::invalid_argument("verify_kellogg_bounds: p must be nonempty");
    KelloggCheck result;
    Rational sum = 0;
    Integer max_p = 0;
    Integer prod_p = 1;
    for (const Integer& pi : p) {
        if (pi < 1) throw std::invalid_argument("verify_kellogg_bounds: p_i must be positive");
        sum += make_rational(1, pi);
        if (pi > max_p) max_p = pi;
        prod_p *= pi;
    }
    const Rational gap = make_rational(1, r) - sum;
    if (gap <= 0) return result;  // hypothesis sum(1/p_i) < 1/r fails
    result.alpha = 1 / gap;
    if (result.alpha < Rational(max_p)) return result;
    result.hypothesis_ok = true;

    const int k = static_cast<int>(p.size());
    const std::vector<Integer> us = sylvester_series(r, k + 1);
    Integer u_prod = 1;
    for (const Integer& u : us) u_prod *= u;
    result.bounds_ok = result.alpha <= Rational(us.back() - 1) &&
                       Rational(prod_p) * (result.alpha + 1) <= Rational(u_prod);
    return result;
}

std::vector<std::pair<SolutionTuple, Rational>> oracle_enumerate(
    const Integer& r, const Integer& s, const OracleBox& box, int n,
    const OracleFilter& filter) {
    if (box.min_abs < 1) throw std::invalid_argument("oracle_enumerate: min_abs must be >= 1");
    if (n < 1) throw std::invalid_argument("oracle_enumerate: n must be >= 1");
    std::vector<std::pair<SolutionTuple, Rational>> out;
    if (box.max_abs < box.min_abs) return out;

    std::vector<Integer> values;
    for (Integer a = box.min_abs; a <= box.max_abs; ++a) {
        values.push_back(a);
        if (box.allow_negative) values.push_back(-a);
    }
    std::sort(values.begin(), values.end(), canonical_less);

    const CyclicSystem sys(r, s, std::max(n, 2));
    std::vector<Integer> tuple;
    auto leaf = [&]() {
        SolutionTuple t(tuple);
        if (filter.require_gcd_condition && !gcd_condition(t, s)) return;
        if (filter.require_nontrivial && !is_nontrivial(t)) return;
        if (filter.require_congruence) {
            if (static_cast<int>(t.size()) != sys.n) throw std::invalid_argument(
                "oracle_enumerate: congruence filter needs n >= 2");
            if (!check_cyclic(sys, t)) return;
        }
        const Rational res = residual_m(r, s, t);
        if (filter.require_integral_residual && denominator(res) != 1) return;
        switch (filter.m_filter.kind) {
            case MFilter::Kind::Any:
                break;
            case MFilter::Kind::Fixed:
                if (res != Rational(filter.m_filter.value)) return;
                break;
            case MFilter::Kind::NonZero:
                if (denominator(res) != 1 || res == 0) return;
                break;
        }
        out.emplace_back(std::move(t), res);
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(tuple.size()) == n) {
            leaf();
            return;
        }
        for (std::size_t i = start; i < values.size(); ++i) {
            tuple.push_back(values[i]);
            self(self, i);  // non-decreasing in canonical order
            tuple.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace cclab
