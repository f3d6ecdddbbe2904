// aqci: command-line front end for special data.
//
// Exit codes: 0 success, 1 invalid datum or failed check, 2 usage error.

#include "aqci/aqci.hpp"
#include "aqci/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using aqci::ordered_json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (!std::filesystem::exists(path)) throw UsageError("file not found: " + path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

aqci::SpecialDatum load(const std::string& path) { return aqci::parse_datum(read_file(path)); }

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_validate(const std::string& path, bool json) {
    auto cand = aqci::from_json(read_file(path));
    auto rep = aqci::validate(cand);
    if (json) {
        ordered_json j;
        j["valid"] = rep.ok();
        ordered_json vs = ordered_json::array();
        for (const auto& v : rep.violations)
            vs.push_back({{"kind", aqci::kind_name(v.kind)}, {"sets", v.sets}, {"message", v.message}});
        j["violations"] = vs;
        print_json(j);
    } else if (rep.ok()) {
        std::cout << "valid\n";
    } else {
        std::cout << "invalid\n";
    }
    for (const auto& v : rep.violations)
        std::cerr << "axiom violation [" << aqci::kind_name(v.kind) << "]: " << v.message << '\n';
    return rep.ok() ? kOk : kFail;
}

int cmd_info(const std::string& path, bool json) {
    auto d = load(path);
    auto s = aqci::summarize(d);
    auto m = aqci::mult_exact(d);
    auto q = aqci::find_closure_power(d);
    if (json) {
        ordered_json j;
        j["datum"] = ordered_json::parse(aqci::to_json(d));
        j["invariants"] = aqci::summary_json(s);
        j["bounds"] = {{"lower", aqci::to_string(aqci::mult_lower(d))},
                       {"upper", aqci::to_string(aqci::mult_upper(d))},
                       {"lct_power", aqci::to_string(aqci::lct_power_bound(d))}};
        j["multiplicity"] = aqci::multiplicity_json(m);
        j["closure_power"] = q ? ordered_json(aqci::to_string(*q)) : ordered_json(nullptr);
        print_json(j);
        return kOk;
    }
    std::cout << "n: " << s.n << '\n'
              << "emb: " << s.emb << '\n'
              << "m(D): " << s.m_of_D << '\n'
              << "|G| (recursion): " << s.group_order << '\n'
              << "|G| (lattice): " << s.group_order_oracle << '\n'
              << "lct (recursion): " << aqci::to_string(s.lct) << '\n'
              << "lct (LP): " << aqci::to_string(s.lct_lp) << '\n'
              << "ceil lct: " << s.ceil_lct << '\n';
    for (const auto& [k, v] : s.alpha)
        std::cout << "alpha/beta " << aqci::set_key(k) << ": " << aqci::to_string(v) << " / "
                  << aqci::to_string(s.beta.at(k)) << '\n';
    std::cout << "alpha product: " << aqci::to_string(s.alpha_product) << '\n'
              << "volume bound: " << aqci::to_string(s.volume_bound) << '\n'
              << "2^(n-ceil lct): " << aqci::lct_power_bound(d) << '\n'
              << "bounds: [" << aqci::to_string(aqci::mult_lower(d)) << ", "
              << aqci::to_string(aqci::mult_upper(d)) << "]\n";
    if (m.exact())
        std::cout << "e: " << m.value << " (exact)\n";
    else
        std::cout << "e: [" << aqci::to_string(m.lower) << ", " << aqci::to_string(m.upper) << "] (interval)\n";
    std::cout << "closure power: " << (q ? q->get_str() : std::string("none")) << '\n';
    return kOk;
}

int cmd_lct(const std::string& path, const std::string& method, bool json) {
    auto d = load(path);
    ordered_json j;
    if (method == "recursion" || method == "both") j["recursion"] = aqci::to_string(aqci::lct_datum(d));
    if (method == "lp" || method == "both") {
        auto cert = aqci::lct_lp_certified(aqci::monomial_ideal(d));
        j["lp"] = aqci::to_string(cert.value);
        if (json) {
            ordered_json c = ordered_json::object();
            for (const auto& [i, lam] : cert.coefficients) c[std::to_string(i)] = aqci::to_string(lam);
            j["lp_certificate"] = c;
        }
    }
    bool agree = method != "both" || j["recursion"] == j["lp"];
    if (method == "both") j["agree"] = agree;
    if (json) {
        print_json(j);
    } else {
        if (j.contains("recursion")) std::cout << "recursion: " << j["recursion"].get<std::string>() << '\n';
        if (j.contains("lp")) std::cout << "lp: " << j["lp"].get<std::string>() << '\n';
    }
    if (!agree) std::cerr << "lct mismatch between recursion and LP\n";
    return agree ? kOk : kFail;
}

int cmd_mult(const std::string& path, const std::string& method, const aqci::OracleBudget& budget, bool json) {
    auto d = load(path);
    ordered_json j;
    if (method == "auto") j["result"] = aqci::multiplicity_json(aqci::mult_exact(d));
    if (method == "bounds") {
        j["lower"] = aqci::to_string(aqci::mult_lower(d));
        j["upper"] = aqci::to_string(aqci::mult_upper(d));
    }
    if (method == "oracle") j["oracle"] = aqci::oracle_json(aqci::mult_oracle(d, budget));
    if (json) {
        print_json(j);
        return kOk;
    }
    if (method == "auto") {
        const auto& r = j["result"];
        if (r["status"] == "exact")
            std::cout << "e: " << r["value"].get<std::string>() << " (exact)\n";
        else
            std::cout << "e: [" << r["lower"].get<std::string>() << ", " << r["upper"].get<std::string>()
                      << "] (interval)\n";
        for (const auto& t : r["trace"]) std::cout << "  " << t["rule"].get<std::string>() << ": " << t["formula"].get<std::string>() << '\n';
    } else if (method == "bounds") {
        std::cout << "lower: " << j["lower"].get<std::string>() << "\nupper: " << j["upper"].get<std::string>() << '\n';
    } else {
        const auto& o = j["oracle"];
        if (o["stabilized"].get<bool>())
            std::cout << "e: " << o["e"].get<std::string>() << " (oracle)\n";
        else
            std::cout << "e: unknown (oracle did not stabilise" << (o["budget_exhausted"].get<bool>() ? ", budget exhausted" : "")
                      << ")\n";
        std::cout << "lengths:";
        for (const auto& v : o["lengths"]) std::cout << ' ' << v.get<std::string>();
        std::cout << '\n';
    }
    return kOk;
}

int cmd_closure(const std::string& path, bool json) {
    auto d = load(path);
    auto q = aqci::find_closure_power(d);
    if (json)
        print_json({{"closure_power", q ? ordered_json(aqci::to_string(*q)) : ordered_json(nullptr)}});
    else
        std::cout << (q ? "closure is m^" + q->get_str() : std::string("closure is not a power of m")) << '\n';
    return kOk;
}

int cmd_dot(const std::string& path) {
    std::cout << aqci::to_dot(load(path));
    return kOk;
}

int cmd_enumerate(int n, long max_ratio, bool up_to, bool jsonl, bool json) {
    std::vector<aqci::SpecialDatum> data;
    if (up_to) {
        aqci::EnumerationBudget b;
        b.n_max = n;
        b.max_ratio = max_ratio;
        data = aqci::enumerate(b);
    } else {
        data = aqci::enumerate_dimension(n, max_ratio);
    }
    if (jsonl) {
        for (const auto& d : data) std::cout << aqci::to_json(d) << '\n';
    } else if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& d : data) arr.push_back(ordered_json::parse(aqci::to_json(d)));
        print_json({{"count", data.size()}, {"data", arr}});
    } else {
        std::cout << data.size() << " isomorphism classes\n";
        for (const auto& d : data) std::cout << aqci::to_json(d) << '\n';
    }
    return kOk;
}

int cmd_verify(const aqci::EnumerationBudget& budget, const std::string& report, unsigned jobs,
               const std::string& datum_path, bool json) {
    aqci::VerificationReport rep;
    if (!datum_path.empty()) {
        auto d = load(datum_path);
        aqci::OracleStore store(budget.oracle);
        rep.budget = budget;
        rep.records.push_back(aqci::check_datum(d, store));
        rep.ceiling_lemma = aqci::ceiling_lemma_grid();
        rep.concavity_lemma = aqci::concavity_lemma_grid();
        aqci::tally(rep);
    } else {
        rep = aqci::run_suite(budget, jobs);
    }
    if (!report.empty()) aqci::write_report(rep, report);
    if (json) {
        print_json(aqci::report_summary_json(rep));
    } else {
        std::cout << "data: " << rep.records.size() << '\n'
                  << "failed data: " << rep.failed_data << '\n'
                  << "oracle unstabilised: " << rep.oracle_unstabilized << '\n'
                  << "exact / interval: " << rep.exact_results << " / " << rep.interval_results << '\n'
                  << "e = alpha product without alpha = beta: " << rep.equality_without_alpha_beta << '\n';
        for (const auto& [id, name] : aqci::check_catalog()) {
            const auto& t = rep.tallies.at(id);
            std::cout << id << " pass=" << t.pass << " fail=" << t.fail << " skip=" << t.skip << " na=" << t.na
                      << "  " << name << '\n';
        }
        std::cout << "ceiling lemma: " << rep.ceiling_lemma.points << " points, "
                  << rep.ceiling_lemma.failures.size() << " failures\n"
                  << "concavity lemma: " << rep.concavity_lemma.points << " points, "
                  << rep.concavity_lemma.failures.size() << " failures\n";
    }
    for (const auto& r : rep.records)
        for (const auto& c : r.checks)
            if (c.outcome == aqci::Outcome::Fail)
                std::cerr << "FAIL " << c.id << ' ' << aqci::to_json(r.datum) << ' ' << c.witness.dump() << '\n';
    return rep.all_pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of abelian quotient complete intersections given by special data"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    std::string file;
    auto* validate = app.add_subcommand("validate", "Check the datum axioms");
    validate->add_option("file", file, "Datum JSON file")->required();

    auto* info = app.add_subcommand("info", "Print the invariant summary");
    info->add_option("file", file, "Datum JSON file")->required();

    std::string lct_method = "both";
    auto* lct = app.add_subcommand("lct", "Log canonical threshold of the maximal ideal");
    lct->add_option("file", file, "Datum JSON file")->required();
    lct->add_option("--method", lct_method, "recursion, lp or both")
        ->check(CLI::IsMember({"recursion", "lp", "both"}));

    std::string mult_method = "auto";
    aqci::OracleBudget oracle;
    auto* mult = app.add_subcommand("mult", "Hilbert-Samuel multiplicity");
    mult->add_option("file", file, "Datum JSON file")->required();
    mult->add_option("--method", mult_method, "auto, oracle or bounds")
        ->check(CLI::IsMember({"auto", "oracle", "bounds"}));
    mult->add_option("--k-max", oracle.k_max, "Oracle: largest power of m tabulated")->check(CLI::Range(1L, 1000L));
    mult->add_option("--point-ceiling", oracle.point_ceiling, "Oracle: semigroup point budget")
        ->check(CLI::PositiveNumber);

    auto* closure = app.add_subcommand("closure", "Is the closure of a_D a power of the maximal ideal");
    closure->add_option("file", file, "Datum JSON file")->required();

    auto* dot = app.add_subcommand("dot", "Graphviz rendering of the forest");
    dot->add_option("file", file, "Datum JSON file")->required();

    int en_n = 0;
    long en_ratio = 3;
    bool en_jsonl = false, en_up_to = false;
    auto* enumerate = app.add_subcommand("enumerate", "List special data up to isomorphism");
    enumerate->add_option("--n", en_n, "Dimension")->required()->check(CLI::Range(1, 8));
    enumerate->add_option("--max-ratio", en_ratio, "Largest parent/child weight ratio")->check(CLI::Range(2L, 64L));
    enumerate->add_flag("--jsonl", en_jsonl, "One datum per line");
    enumerate->add_flag("--up-to", en_up_to, "Include every dimension from 1 to N");

    aqci::EnumerationBudget budget;
    std::string report, datum_path;
    unsigned jobs = 1;
    auto* verify = app.add_subcommand("verify", "Run the theorem checklist");
    verify->add_option("--n-max", budget.n_max, "Largest dimension")->check(CLI::Range(1, 8));
    verify->add_option("--max-ratio", budget.max_ratio, "Largest parent/child weight ratio")->check(CLI::Range(2L, 64L));
    verify->add_option("--k-max", budget.oracle.k_max, "Oracle: largest power of m tabulated")->check(CLI::Range(1L, 1000L));
    verify->add_option("--point-ceiling", budget.oracle.point_ceiling, "Oracle: semigroup point budget")
        ->check(CLI::PositiveNumber);
    verify->add_option("--report", report, "Write the summary JSON here and per-datum records beside it (.jsonl)");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    verify->add_option("--datum", datum_path, "Check a single datum file instead of the enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(file, json);
        if (*info) return cmd_info(file, json);
        if (*lct) return cmd_lct(file, lct_method, json);
        if (*mult) return cmd_mult(file, mult_method, oracle, json);
        if (*closure) return cmd_closure(file, json);
        if (*dot) return cmd_dot(file);
        if (*enumerate) return cmd_enumerate(en_n, en_ratio, en_up_to, en_jsonl, json);
        if (*verify) return cmd_verify(budget, report, jobs, datum_path, json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const aqci::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    } catch (const aqci::InvalidDatum& e) {
        for (const auto& v : e.report().violations)
            std::cerr << "axiom violation [" << aqci::kind_name(v.kind) << "]: " << v.message << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
