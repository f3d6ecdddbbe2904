#ifndef AQCI_REPORT_HPP
#define AQCI_REPORT_HPP

// JSON views of invariant summaries, multiplicity results and verification
// reports. Key order is fixed by nlohmann::ordered_json so reports built from
// the same budget are byte-identical.

#include "aqci/verify.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace aqci {

using ordered_json = nlohmann::ordered_json;

inline std::string set_key(const std::vector<int>& s) { return detail::set_text(s); }

inline ordered_json summary_json(const InvariantSummary& s) {
    ordered_json j;
    j["n"] = s.n;
    j["emb"] = s.emb;
    ordered_json delta = ordered_json::object();
    for (const auto& [k, v] : s.delta) delta[set_key(k)] = v;
    j["delta"] = delta;
    j["m_of_D"] = to_string(s.m_of_D);
    ordered_json alpha = ordered_json::object(), beta = ordered_json::object();
    for (const auto& [k, v] : s.alpha) alpha[set_key(k)] = to_string(v);
    for (const auto& [k, v] : s.beta) beta[set_key(k)] = to_string(v);
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["group_order"] = to_string(s.group_order);
    j["group_order_lattice"] = to_string(s.group_order_oracle);
    j["lct"] = to_string(s.lct);
    j["lct_lp"] = to_string(s.lct_lp);
    j["ceil_lct"] = to_string(s.ceil_lct);
    j["alpha_product"] = to_string(s.alpha_product);
    j["volume_bound"] = to_string(s.volume_bound);
    return j;
}

inline ordered_json multiplicity_json(const MultiplicityResult& m) {
    ordered_json j;
    j["status"] = m.exact() ? "exact" : "interval";
    if (m.exact()) j["value"] = to_string(m.value);
    j["lower"] = to_string(m.lower);
    j["upper"] = to_string(m.upper);
    ordered_json trace = ordered_json::array();
    for (const auto& t : m.trace) {
        ordered_json step;
        step["rule"] = t.rule;
        step["member"] = t.member;
        step["formula"] = t.formula;
        trace.push_back(step);
    }
    j["trace"] = trace;
    return j;
}

inline ordered_json oracle_json(const HilbertSamuelTable& t) {
    ordered_json j;
    j["stabilized"] = t.stabilized;
    j["e"] = t.e ? ordered_json(to_string(*t.e)) : ordered_json(nullptr);
    j["budget_exhausted"] = t.budget_exhausted;
    j["points"] = t.points;
    ordered_json values = ordered_json::array(), diffs = ordered_json::array();
    for (const auto& v : t.values) values.push_back(to_string(v));
    for (const auto& v : t.differences) diffs.push_back(to_string(v));
    j["lengths"] = values;
    j["differences"] = diffs;
    return j;
}

inline ordered_json check_json(const CheckOutcome& c) {
    ordered_json j;
    j["id"] = c.id;
    j["name"] = c.name;
    j["outcome"] = outcome_name(c.outcome);
    j["witness"] = ordered_json::parse(c.witness.dump());
    return j;
}

inline ordered_json record_json(const DatumRecord& r) {
    ordered_json j;
    j["datum"] = ordered_json::parse(to_json(r.datum));
    j["invariants"] = summary_json(r.summary);
    j["multiplicity"] = multiplicity_json(r.mult);
    j["oracle"] = oracle_json(r.table);
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    j["checks"] = checks;
    j["failed"] = r.failed();
    return j;
}

inline ordered_json lemma_json(const LemmaGridResult& g) {
    ordered_json j;
    j["points"] = g.points;
    j["equality_points"] = g.equality_points;
    j["failures"] = ordered_json::parse(nlohmann::json(g.failures).dump());
    return j;
}

inline ordered_json report_summary_json(const VerificationReport& rep) {
    ordered_json j;
    j["budget"] = {{"n_max", rep.budget.n_max},
                   {"max_ratio", rep.budget.max_ratio},
                   {"k_max", rep.budget.oracle.k_max},
                   {"point_ceiling", rep.budget.oracle.point_ceiling}};
    j["data"] = rep.records.size();
    j["failed_data"] = rep.failed_data;
    j["oracle_unstabilized"] = rep.oracle_unstabilized;
    j["skip_rate"] = rep.records.empty()
                         ? std::string("0")
                         : to_string(make_rational(static_cast<long>(rep.oracle_unstabilized),
                                                   static_cast<long>(rep.records.size())));
    j["exact_results"] = rep.exact_results;
    j["interval_results"] = rep.interval_results;
    j["equality_without_alpha_beta"] = rep.equality_without_alpha_beta;
    ordered_json tallies = ordered_json::object();
    for (const auto& [id, name] : check_catalog()) {
        const auto& t = rep.tallies.at(id);
        tallies[id] = {{"name", name}, {"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}, {"na", t.na}};
    }
    j["checks"] = tallies;
    j["ceiling_lemma"] = lemma_json(rep.ceiling_lemma);
    j["concavity_lemma"] = lemma_json(rep.concavity_lemma);
    j["all_pass"] = rep.all_pass();
    return j;
}

/// One JSON object per line, in enumeration order.
inline std::string report_jsonl(const VerificationReport& rep) {
    std::string out;
    for (const auto& r : rep.records) {
        out += record_json(r).dump();
        out += '\n';
    }
    return out;
}

/// Path of the per-datum JSONL file that accompanies a summary at `path`.
inline std::string jsonl_path(const std::string& path) {
    auto dot = path.rfind('.');
    auto slash = path.rfind('/');
    std::string stem = (dot == std::string::npos || (slash != std::string::npos && dot < slash)) ? path : path.substr(0, dot);
    return stem + ".jsonl";
}

inline void write_report(const VerificationReport& rep, const std::string& path) {
    std::ofstream summary(path, std::ios::binary);
    if (!summary) throw std::runtime_error("cannot write " + path);
    summary << report_summary_json(rep).dump(2) << '\n';
    std::ofstream lines(jsonl_path(path), std::ios::binary);
    if (!lines) throw std::runtime_error("cannot write " + jsonl_path(path));
    lines << report_jsonl(rep);
}

}  // namespace aqci

#endif  // AQCI_REPORT_HPP
