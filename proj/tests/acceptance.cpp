// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cclab/classify.hpp"
#include "cclab/families.hpp"
#include "cclab/model.hpp"
#include "cclab/search.hpp"
#include "cclab/sequences.hpp"

using namespace cclab;
using json = nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, double ms) {
    std::printf("criterion %2d: %s — %s (%.0f ms)\n", criterion, ok ? "PASS" : "FAIL",
                what.c_str(), ms);
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& what, Fn fn) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    report(number, ok, detail.empty() ? what : what + " [" + detail + "]", ms);
}

// Giuga-style search: entries >= 2 per the Giuga-sequence definition.
SearchOptions positive_opts() {
    SearchOptions o;
    o.min_abs = 2;
    o.require_gcd_condition = true;
    o.require_nontrivial = true;
    return o;
}

std::vector<SolutionTuple> tuples_of(const SearchReport& rep) {
    std::vector<SolutionTuple> out;
    for (const auto& [t, m] : rep.solutions) out.push_back(t);
    return out;
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(CCLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// Exhaustive last-variable-solve search over int64 prefixes, used to confirm
// Finite verdicts: every solution with its smaller coordinates inside the box
// is produced, with no pruning.
struct ExhaustResult {
    bool degenerate = false;
    long long max_abs = 0;
    std::size_t count = 0;
};

ExhaustResult exhaust_n2(long long r, long long s, long long m, long long box) {
    ExhaustResult res;
    std::set<std::pair<long long, long long>> seen;
    for (long long x1 = -box; x1 <= box; ++x1) {
        if (x1 == 0) continue;
        const long long den = r - m * x1;
        const long long num = s - r * x1;
        if (den == 0) {
            if (num == 0) res.degenerate = true;
            continue;
        }
        if (num % den != 0) continue;
        const long long x2 = num / den;
        if (x2 == 0) continue;
        seen.insert(std::minmax(x1, x2));
        res.max_abs = std::max({res.max_abs, std::abs(x1), std::abs(x2)});
    }
    res.count = seen.size();
    return res;
}

ExhaustResult exhaust_n3(long long r, long long s, long long m, long long box) {
    ExhaustResult res;
    std::set<std::array<long long, 3>> seen;
    for (long long a1 = 1; a1 <= box; ++a1) {
        for (long long a2 = a1; a2 <= box; ++a2) {
            for (int sg = 0; sg < 4; ++sg) {
                const long long x1 = sg & 1 ? -a1 : a1;
                const long long x2 = sg & 2 ? -a2 : a2;
                const long long p = x1 * x2;
                const long long den = m * p - r * (x1 + x2);
                const long long num = r * p - s;
                if (den == 0) {
                    if (num == 0) res.degenerate = true;
                    continue;
                }
                if (num % den != 0) continue;
                const long long x3 = num / den;
                if (x3 == 0) continue;
                std::array<long long, 3> t{x1, x2, x3};
                std::sort(t.begin(), t.end());
                seen.insert(t);
                res.max_abs = std::max({res.max_abs, a2, std::abs(x3)});
            }
        }
    }
    res.count = seen.size();
    return res;
}

}  // namespace

int main() {
    criterion(1, "n=2 positive search is empty", [](std::string&) {
        return enumerate_positive(CyclicSystem(1, 1, 2), positive_opts()).solutions.empty();
    });

    criterion(2, "n=3 positive search finds exactly (2,3,5)", [](std::string&) {
        const auto ts = tuples_of(enumerate_positive(CyclicSystem(1, 1, 3), positive_opts()));
        return ts == std::vector<SolutionTuple>{SolutionTuple::of({2, 3, 5})};
    });

    criterion(3, "n=4 positive search matches oracle, max element 41", [](std::string& d) {
        const SearchReport rep = enumerate_positive(CyclicSystem(1, 1, 4), positive_opts());
        const auto ts = tuples_of(rep);
        const bool has_extremal =
            std::find(ts.begin(), ts.end(), SolutionTuple::of({2, 3, 7, 41})) != ts.end();
        Integer max_elem = 0;
        for (const auto& t : ts)
            for (const Integer& e : t.entries()) max_elem = std::max(max_elem, e);
        OracleBox box;
        box.min_abs = 2;
        box.max_abs = positive_bound(1, 1, 4);
        OracleFilter f;
        f.require_congruence = true;
        f.require_gcd_condition = true;
        f.require_nontrivial = true;
        std::vector<SolutionTuple> oracle;
        for (const auto& [t, res] : oracle_enumerate(1, 1, box, 4, f)) oracle.push_back(t);
        std::sort(oracle.begin(), oracle.end());
        if (!has_extremal) d = "extremal tuple missing";
        else if (max_elem != 41) d = "max element is not 41";
        else if (ts != oracle) d = "oracle mismatch";
        return has_extremal && max_elem == 41 && ts == oracle;
    });

    criterion(4, "extremal family attains the positive bound", [](std::string& d) {
        for (Integer r = 1; r <= 2; ++r) {
            for (int s : {1, -1, 3, -3}) {
                if (int_gcd(r, int_abs(Integer(s))) != 1) continue;
                for (int n = 2; n <= 6; ++n) {
                    if (sylvester_u(r, n) <= Integer(s) * s) continue;
                    if (sylvester_u(r, n) - s - 1 < 2) continue;
                    const SolutionTuple t = family_extremal_positive(r, s, n);
                    if (residual_m(r, s, t) != Rational(1) ||
                        t.entries().back() != positive_bound(r, s, n)) {
                        d = "failed at r=" + r.str() + " s=" + std::to_string(s) +
                            " n=" + std::to_string(n);
                        return false;
                    }
                }
            }
        }
        return true;
    });

    criterion(5, "congruence/Diophantine equivalence audit, box 30", [](std::string& d) {
        bool witness_seen = false;
        for (int n = 2; n <= 3; ++n) {
            for (int r = 1; r <= 3; ++r) {
                for (int s : {1, -1, 2, -2, 3, -3, -20}) {
                    if (int_gcd(Integer(r), int_abs(Integer(s))) != 1) continue;
                    const CyclicSystem sys(r, s, n);
                    OracleBox box;
                    box.min_abs = 1;
                    box.max_abs = 30;
                    box.allow_negative = true;
                    for (const auto& [t, res] : oracle_enumerate(r, s, box, n, {})) {
                        const bool cyc = check_cyclic(sys, t);
                        const bool gcd = gcd_condition(t, s);
                        const bool integral = denominator(res) == 1;
                        if ((cyc && gcd) != (integral && gcd)) {
                            d = "violation at " + t.str();
                            return false;
                        }
                        if (r == 1 && s == -20 && cyc && !integral &&
                            t == SolutionTuple::of({5, 25}))
                            witness_seen = true;
                    }
                }
            }
        }
        if (!witness_seen) d = "(5,25) witness not reported";
        return witness_seen;
    });

    criterion(6, "Kellogg-type bound audit, k<=3, p_i<=50, r<=3", [](std::string& d) {
        for (Integer r = 1; r <= 3; ++r) {
            std::vector<std::vector<Integer>> lists;
            for (int p1 = 2; p1 <= 50; ++p1) {
                lists.push_back({Integer(p1)});
                for (int p2 = p1; p2 <= 50; ++p2) {
                    lists.push_back({Integer(p1), Integer(p2)});
                    for (int p3 = p2; p3 <= 50; ++p3)
                        lists.push_back({Integer(p1), Integer(p2), Integer(p3)});
                }
            }
            for (const auto& p : lists) {
                const KelloggCheck k = verify_kellogg_bounds(r, p);
                if (k.hypothesis_ok && !k.bounds_ok) {
                    d = "bound failure at r=" + r.str();
                    return false;
                }
            }
            // Tightness at prefixes of the doubly exponential sequence.
            const auto us = sylvester_series(r, 4);
            for (int k = 1; k <= 3; ++k) {
                if (us[static_cast<std::size_t>(k) - 1] > 50) break;
                std::vector<Integer> p(us.begin(), us.begin() + k);
                const KelloggCheck kc = verify_kellogg_bounds(r, p);
                if (!kc.hypothesis_ok || !kc.bounds_ok ||
                    kc.alpha != Rational(us[static_cast<std::size_t>(k)] - 1)) {
                    d = "tight case failed at r=" + r.str();
                    return false;
                }
            }
        }
        return true;
    });

    criterion(7, "m=0 family sweeps and parity impossibility", [](std::string& d) {
        for (int s = -7; s <= 7; ++s) {
            if (s == 0) continue;
            std::set<SolutionTuple> seen_pair, seen_triple, seen_m0;
            for (Integer k = std::abs(s) + 2; k <= 1000; ++k) {
                const SolutionTuple p = family_pair(s, k);
                if (residual_m(1, s, p) != Rational(0) || !seen_pair.insert(p).second) {
                    d = "pair sweep failed";
                    return false;
                }
                if (s % 2 != 0) {
                    const SolutionTuple t = family_triple(s, k);
                    if (residual_m(1, s, t) != Rational(0) || !seen_triple.insert(t).second) {
                        d = "triple sweep failed";
                        return false;
                    }
                }
                for (int n = 3; n <= 6; ++n) {
                    const SolutionTuple g = family_m0(n, s, k);
                    if (residual_m(1, s, g) != Rational(0) || !seen_m0.insert(g).second) {
                        d = "m0 sweep failed";
                        return false;
                    }
                }
            }
        }
        // Odd n, even s: no gcd-condition m=0 solutions in the box at all.
        for (int s : {2, 4}) {
            OracleBox box;
            box.min_abs = 1;
            box.max_abs = 25;
            box.allow_negative = true;
            OracleFilter f;
            f.require_gcd_condition = true;
            f.m_filter = MFilter::fixed(0);
            if (!oracle_enumerate(1, s, box, 3, f).empty()) {
                d = "parity impossibility violated for s=" + std::to_string(s);
                return false;
            }
        }
        return true;
    });

    criterion(8, "signed finiteness at r=2, s=1, n=2", [](std::string& d) {
        SearchOptions o;
        o.positivity = Positivity::Signed;
        o.min_abs = 2;
        o.m_filter = MFilter::nonzero();
        const SearchReport rep = enumerate_signed(2, 1, 2, o);
        const Integer bound = signed_sharp_bound(2, 1, 2);
        for (const auto& [t, m] : rep.solutions)
            for (const Integer& e : t.entries())
                if (int_abs(e) > bound) {
                    d = "solution exceeds the sharp bound";
                    return false;
                }
        OracleBox box;
        box.min_abs = 2;
        box.max_abs = 2 * bound;
        box.allow_negative = true;
        OracleFilter f;
        f.require_integral_residual = true;
        f.m_filter = MFilter::nonzero();
        std::set<SolutionTuple> oracle;
        for (const auto& [t, res] : oracle_enumerate(2, 1, box, 2, f)) oracle.insert(t);
        std::set<SolutionTuple> got;
        for (const auto& [t, m] : rep.solutions) got.insert(t);
        if (got != oracle) {
            d = "oracle mismatch to twice the bound";
            return false;
        }
        return true;
    });

    criterion(9, "classifier truth table with witnesses and exhaustion", [](std::string& d) {
        struct FiniteTask {
            int r, s, m, n;
            long long bound;
        };
        std::vector<FiniteTask> finite_tasks;
        for (int r = 1; r <= 3; ++r) {
            for (int s = -5; s <= 5; ++s) {
                if (s == 0 || int_gcd(Integer(r), int_abs(Integer(s))) != 1) continue;
                for (int n = 2; n <= 4; ++n) {
                    for (int m = -(n + 1); m <= n + 1; ++m) {
                        const Verdict v = classify_diophantine(r, s, m, n);
                        const bool region =
                            r == 1 && (std::abs(m) <= n - 2 || (m == n - 1 && s == 1) ||
                                       (m == -(n - 1) &&
                                        s == ((n - 1) % 2 == 0 ? 1 : -1)));
                        if ((v.status == Verdict::Status::Infinite) != region) {
                            d = "region mismatch";
                            return false;
                        }
                        if (v.status == Verdict::Status::Infinite) {
                            std::set<SolutionTuple> seen;
                            for (int j = 0; j < 100; ++j) {
                                const SolutionTuple t = materialize(*v.witness, j);
                                if (t.size() != static_cast<std::size_t>(n) ||
                                    residual_m(1, s, t) != Rational(m) ||
                                    !seen.insert(t).second) {
                                    d = "witness failure";
                                    return false;
                                }
                            }
                        } else if (n <= 3) {
                            finite_tasks.push_back(
                                {r, s, m, n, v.bound->convert_to<long long>()});
                        }
                    }
                }
            }
        }
        std::atomic<std::size_t> next{0};
        std::atomic<bool> ok{true};
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= finite_tasks.size() || !ok.load()) break;
                    const FiniteTask& t = finite_tasks[i];
                    const ExhaustResult res =
                        t.n == 2 ? exhaust_n2(t.r, t.s, t.m, t.bound)
                                 : exhaust_n3(t.r, t.s, t.m, t.bound);
                    if (res.degenerate || res.max_abs > t.bound) ok.store(false);
                }
            });
        }
        for (auto& th : pool) th.join();
        if (!ok.load()) {
            d = "finite verdict contradicted by exhaustion";
            return false;
        }
        return true;
    });

    criterion(10, "byte-identical solution lists across --jobs 1 and 4", [](std::string& d) {
        const std::vector<std::string> cmds = {
            "enumerate --positive -r 1 -s 1 -n 4 --gcd-condition --nontrivial",
            "enumerate --signed -r 2 -s 1 -n 2"};
        for (const std::string& base : cmds) {
            int code1 = 0, code4 = 0;
            const std::string out1 = run_cli(base + " --jobs 1", code1);
            const std::string out4 = run_cli(base + " --jobs 4", code4);
            if (code1 != 0 || code4 != 0) {
                d = "CLI run failed";
                return false;
            }
            const json a = json::parse(out1);
            const json b = json::parse(out4);
            if (a["solutions"].dump() != b["solutions"].dump()) {
                d = "solution lists differ for: " + base;
                return false;
            }
        }
        return true;
    });

    if (failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
