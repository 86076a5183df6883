// cclab: exact-arithmetic toolkit for cyclic congruence systems
//   r * (prod_k q_k / q_i) == s (mod |q_i|)
// and the associated Diophantine family r*sum(1/x_i) - s/prod(x_i) = m.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cclab/classify.hpp"
#include "cclab/families.hpp"
#include "cclab/model.hpp"
#include "cclab/search.hpp"
#include "cclab/sequences.hpp"
#include "cclab/types.hpp"

using cclab::Integer;
using cclab::Rational;
using json = nlohmann::ordered_json;

namespace {

Integer to_int(const std::string& text) {
    try {
        return Integer(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
}

std::string rat_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

json tuple_json(const cclab::SolutionTuple& t) {
    json arr = json::array();
    for (const Integer& e : t.entries()) arr.push_back(e.str());
    return arr;
}

std::vector<Integer> parse_tuple(const std::string& csv) {
    std::vector<Integer> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string part = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (part.empty()) throw std::invalid_argument("malformed tuple list: '" + csv + "'");
        out.push_back(to_int(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

json record_base(const std::string& command, json params) {
    json rec;
    rec["schema_version"] = "1";
    rec["command"] = command;
    rec["params"] = std::move(params);
    return rec;
}

json report_json(const cclab::SearchReport& report) {
    json solutions = json::array();
    for (const auto& [tuple, m] : report.solutions)
        solutions.push_back({{"tuple", tuple_json(tuple)}, {"m", m.str()}});
    json stats = {{"nodes", report.nodes_visited},
                  {"pruned", report.nodes_pruned},
                  {"degenerate", report.degenerate_prefixes},
                  {"bound", report.bound_used.str()},
                  {"complete", report.complete},
                  {"elapsed_ms", report.elapsed_ms}};
    return {{"solutions", std::move(solutions)}, {"stats", std::move(stats)}};
}

void emit_csv(const cclab::SearchReport& report, int n) {
    for (int i = 1; i <= n; ++i) std::cout << "x" << i << ",";
    std::cout << "m\n";
    for (const auto& [tuple, m] : report.solutions) {
        for (const Integer& e : tuple.entries()) std::cout << e.str() << ",";
        std::cout << m.str() << "\n";
    }
}

int default_jobs() {
    if (const char* env = std::getenv("CCLAB_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

json family_spec_json(const cclab::FamilySpec& spec) {
    static const char* kind_names[] = {"m0", "pair", "triple", "extremal", "padded"};
    return {{"kind", kind_names[static_cast<int>(spec.kind)]},
            {"r", spec.r.str()},
            {"s", spec.s.str()},
            {"m", spec.m.str()},
            {"n", spec.n},
            {"k0", spec.k0.str()},
            {"k_step", spec.k_step.str()}};
}

json verdict_json(const cclab::Verdict& v) {
    json out;
    out["status"] = v.status == cclab::Verdict::Status::Finite ? "Finite" : "Infinite";
    if (v.bound) out["bound"] = v.bound->str();
    if (v.witness) out["witness_family"] = family_spec_json(*v.witness);
    out["theorem_tag"] = v.theorem_tag;
    return out;
}

struct Args {
    std::string r = "1", s = "1", m, k, cap, box;
    int n = 2, count = 1, upto = 1, jobs = default_jobs();
    std::string q, kind, format = "json", seq_u, seq_v;
    bool positive = false, signed_ = false, m_nonzero = false;
    bool gcd_condition = false, nontrivial = false;
    std::string min_abs;
    bool congruence = false, diophantine = false, hypersurface = false;
};

int run_check(const Args& a) {
    const std::vector<Integer> entries = parse_tuple(a.q);
    const cclab::SolutionTuple tuple(entries);
    const Integer r = to_int(a.r), s = to_int(a.s);
    const cclab::CyclicSystem sys(r, s, static_cast<int>(entries.size()));
    const Rational residual = cclab::residual_m(r, s, tuple);
    const bool integral = denominator(residual) == 1;

    json rec = record_base("check", {{"r", r.str()}, {"s", s.str()}});
    rec["tuple"] = tuple_json(tuple);
    rec["congruence"] = cclab::check_cyclic(sys, tuple);
    rec["residual"] = rat_str(residual);
    rec["diophantine"] = integral;
    if (integral) rec["m"] = Integer(numerator(residual)).str();
    rec["gcd_condition"] = cclab::gcd_condition(tuple, s);
    rec["pairwise_coprime"] = cclab::pairwise_coprime(tuple);
    rec["nontrivial"] = cclab::is_nontrivial(tuple);
    std::cout << rec.dump() << "\n";
    return 0;
}

int run_enumerate(const Args& a) {
    const Integer r = to_int(a.r), s = to_int(a.s);
    const bool signed_mode = a.signed_;
    cclab::SearchOptions opts;
    opts.positivity = signed_mode ? cclab::Positivity::Signed : cclab::Positivity::PositiveOnly;
    opts.min_abs = a.min_abs.empty() ? Integer(signed_mode ? 2 : 1) : to_int(a.min_abs);
    opts.require_gcd_condition = a.gcd_condition;
    opts.require_nontrivial = a.nontrivial;
    if (!a.m.empty())
        opts.m_filter = cclab::MFilter::fixed(to_int(a.m));
    else if (a.m_nonzero || signed_mode)
        opts.m_filter = cclab::MFilter::nonzero();
    if (!a.cap.empty()) opts.hard_cap = to_int(a.cap);
    opts.jobs = a.jobs;

    cclab::SearchReport report;
    if (signed_mode) {
        report = cclab::enumerate_signed(r, s, a.n, opts);
    } else {
        report = cclab::enumerate_positive(cclab::CyclicSystem(r, s, a.n), opts);
    }
    if (a.format == "csv") {
        emit_csv(report, a.n);
        return 0;
    }
    json rec = record_base("enumerate", {{"r", r.str()},
                                         {"s", s.str()},
                                         {"n", a.n},
                                         {"mode", signed_mode ? "signed" : "positive"},
                                         {"min_abs", opts.min_abs.str()},
                                         {"jobs", a.jobs}});
    rec.update(report_json(report));
    std::cout << rec.dump() << "\n";
    return 0;
}

int run_classify(const Args& a) {
    const Integer r = to_int(a.r), s = to_int(a.s);
    cclab::Verdict verdict;
    std::string which;
    if (a.diophantine || a.hypersurface) {
        if (a.m.empty()) throw std::invalid_argument("classify: -m is required for this mode");
        const Integer m = to_int(a.m);
        which = a.diophantine ? "diophantine" : "hypersurface";
        verdict = a.diophantine ? cclab::classify_diophantine(r, s, m, a.n)
                                : cclab::classify_hypersurface(r, s, m, a.n);
    } else {
        which = "congruence";
        const auto positivity =
            a.positive ? cclab::Positivity::PositiveOnly : cclab::Positivity::Signed;
        verdict = cclab::classify_congruence(r, s, a.n, positivity);
    }
    json rec = record_base("classify",
                           {{"mode", which}, {"r", r.str()}, {"s", s.str()}, {"n", a.n}});
    if (!a.m.empty()) rec["params"]["m"] = to_int(a.m).str();
    rec.update(verdict_json(verdict));
    std::cout << rec.dump() << "\n";
    return 0;
}

int run_family(const Args& a) {
    const Integer r = to_int(a.r), s = to_int(a.s);
    const Integer k = a.k.empty() ? Integer(cclab::int_abs(s) + 2) : to_int(a.k);
    const Integer m = a.m.empty() ? Integer(0) : to_int(a.m);

    cclab::FamilySpec spec;
    spec.r = r;
    spec.s = s;
    spec.m = m;
    spec.n = a.n;
    spec.k0 = k;
    spec.k_step = 1;
    int count = a.count;
    if (a.kind == "m0") {
        spec.kind = cclab::FamilyKind::M0General;
    } else if (a.kind == "pair") {
        spec.kind = cclab::FamilyKind::Pair;
    } else if (a.kind == "triple") {
        spec.kind = cclab::FamilyKind::Triple;
    } else if (a.kind == "extremal") {
        spec.kind = cclab::FamilyKind::ExtremalPositive;
        count = 1;  // no free parameter
    } else if (a.kind == "padded") {
        spec.kind = cclab::FamilyKind::PaddedNonzeroM;
    } else {
        throw std::invalid_argument("family: unknown kind '" + a.kind + "'");
    }
    if (spec.kind != cclab::FamilyKind::ExtremalPositive) spec.r = 1;  // r = 1 families

    json solutions = json::array();
    for (int j = 0; j < count; ++j) {
        const cclab::SolutionTuple tuple = cclab::materialize(spec, j);
        const Rational residual = cclab::residual_m(spec.r, spec.s, tuple);
        if (denominator(residual) != 1)
            throw std::logic_error("family produced a non-integral residual");
        solutions.push_back(
            {{"tuple", tuple_json(tuple)}, {"m", Integer(numerator(residual)).str()}});
    }
    json rec = record_base("family", {{"kind", a.kind},
                                      {"r", r.str()},
                                      {"s", s.str()},
                                      {"m", m.str()},
                                      {"n", a.n},
                                      {"k", k.str()},
                                      {"count", count}});
    rec["solutions"] = std::move(solutions);
    std::cout << rec.dump() << "\n";
    return 0;
}

int run_bounds(const Args& a) {
    const Integer r = to_int(a.r), s = to_int(a.s);
    json rec = record_base("bounds", {{"r", r.str()}, {"s", s.str()}, {"n", a.n}});
    rec["positive_bound"] = cclab::positive_bound(r, s, a.n).str();
    rec["signed_sharp_bound"] = cclab::signed_sharp_bound(r, s, a.n).str();
    rec["signed_coarse_bound"] = cclab::signed_coarse_bound(r, s, a.n).str();
    json us = json::array();
    for (const Integer& u : cclab::sylvester_series(r, a.n)) us.push_back(u.str());
    rec["u"] = std::move(us);
    std::cout << rec.dump() << "\n";
    return 0;
}

// Exhaustive audit of the congruence/Diophantine equivalence over all
// canonical signed tuples with |q_i| <= box: under the gcd side condition the
// two solution notions must coincide; without it, congruence-only tuples
// (non-integral residual) are collected as witnesses.
int run_lemma_audit(const Args& a) {
    const Integer r = to_int(a.r), s = to_int(a.s);
    const Integer box = to_int(a.box);
    const cclab::CyclicSystem sys(r, s, a.n);

    cclab::OracleBox obox;
    obox.min_abs = 1;
    obox.max_abs = box;
    obox.allow_negative = true;
    const auto all = cclab::oracle_enumerate(r, s, obox, a.n, {});

    std::uint64_t checked = 0, violations = 0;
    json congruence_only = json::array();
    for (const auto& [tuple, residual] : all) {
        ++checked;
        const bool cyc = cclab::check_cyclic(sys, tuple);
        const bool gcd = cclab::gcd_condition(tuple, s);
        const bool integral = denominator(residual) == 1;
        if ((cyc && gcd) != (integral && gcd)) ++violations;
        if (cyc && !integral && congruence_only.size() < 100)
            congruence_only.push_back(
                {{"tuple", tuple_json(tuple)}, {"residual", rat_str(residual)}});
    }
    json rec = record_base("verify-lemma21", {{"r", r.str()},
                                              {"s", s.str()},
                                              {"n", a.n},
                                              {"box", box.str()}});
    rec["checked"] = checked;
    rec["equivalence_violations"] = violations;
    rec["congruence_only"] = std::move(congruence_only);
    rec["pass"] = violations == 0;
    std::cout << rec.dump() << "\n";
    return violations == 0 ? 0 : 1;
}

int run_seq(const Args& a) {
    json rec;
    json values = json::array();
    if (!a.seq_u.empty()) {
        for (const Integer& u : cclab::sylvester_series(to_int(a.seq_u), a.upto))
            values.push_back(u.str());
        rec = record_base("seq", {{"u", a.seq_u}, {"upto", a.upto}});
    } else if (!a.seq_v.empty()) {
        for (const Integer& v : cclab::v_series(to_int(a.seq_v), a.upto))
            values.push_back(v.str());
        rec = record_base("seq", {{"v", a.seq_v}, {"upto", a.upto}});
    } else {
        throw std::invalid_argument("seq: one of --u or --v is required");
    }
    rec["values"] = std::move(values);
    std::cout << rec.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and classifier for cyclic congruence systems"};
    app.require_subcommand(1);
    Args a;

    CLI::App* check = app.add_subcommand("check", "Verify a tuple against the system");
    check->add_option("-r", a.r)->required();
    check->add_option("-s", a.s)->required();
    check->add_option("-q", a.q, "Comma-separated tuple")->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate all solutions");
    enumerate->add_flag("--positive", a.positive);
    enumerate->add_flag("--signed", a.signed_);
    enumerate->add_option("-r", a.r)->required();
    enumerate->add_option("-s", a.s)->required();
    enumerate->add_option("-n", a.n)->required();
    enumerate->add_option("--m", a.m);
    enumerate->add_flag("--m-nonzero", a.m_nonzero);
    enumerate->add_option("--min-abs", a.min_abs);
    enumerate->add_flag("--gcd-condition", a.gcd_condition);
    enumerate->add_flag("--nontrivial", a.nontrivial);
    enumerate->add_option("--cap", a.cap);
    enumerate->add_option("--jobs", a.jobs);
    enumerate->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv"}));

    CLI::App* classify = app.add_subcommand("classify", "Finite/infinite classification");
    classify->add_flag("--congruence", a.congruence);
    classify->add_flag("--diophantine", a.diophantine);
    classify->add_flag("--hypersurface", a.hypersurface);
    classify->add_flag("--positive", a.positive);
    classify->add_flag("--signed", a.signed_);
    classify->add_option("-r", a.r)->required();
    classify->add_option("-s", a.s)->required();
    classify->add_option("-m", a.m);
    classify->add_option("-n", a.n)->required();

    CLI::App* family = app.add_subcommand("family", "Generate family instances");
    family->add_option("--kind", a.kind)
        ->required()
        ->check(CLI::IsMember({"m0", "pair", "triple", "extremal", "padded"}));
    family->add_option("-r", a.r);
    family->add_option("-s", a.s)->required();
    family->add_option("-m", a.m);
    family->add_option("-n", a.n);
    family->add_option("-k", a.k);
    family->add_option("--count", a.count)->check(CLI::PositiveNumber);

    CLI::App* bounds = app.add_subcommand("bounds", "Print the finiteness bounds");
    bounds->add_option("-r", a.r)->required();
    bounds->add_option("-s", a.s)->required();
    bounds->add_option("-n", a.n)->required();

    CLI::App* lemma = app.add_subcommand("verify-lemma21", "Equivalence audit by exhaustion");
    lemma->add_option("-r", a.r)->required();
    lemma->add_option("-s", a.s)->required();
    lemma->add_option("-n", a.n)->required();
    lemma->add_option("--box", a.box)->required();

    CLI::App* seq = app.add_subcommand("seq", "Print the doubly exponential sequences");
    seq->add_option("--u", a.seq_u);
    seq->add_option("--v", a.seq_v);
    seq->add_option("--upto", a.upto)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version vs usage error
    }

    try {
        if (check->parsed()) return run_check(a);
        if (enumerate->parsed()) return run_enumerate(a);
        if (classify->parsed()) return run_classify(a);
        if (family->parsed()) return run_family(a);
        if (bounds->parsed()) return run_bounds(a);
        if (lemma->parsed()) return run_lemma_audit(a);
        if (seq->parsed()) return run_seq(a);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
