#ifndef AQCI_SERIALIZE_HPP
#define AQCI_SERIALIZE_HPP

// Datum file format:
//   {"n": <int>, "sets": [{"elements": [<int>...ascending], "weight": <int>}, ...]}
// Sets may appear in any order on input and are written sorted by
// (min element, size). Weights too large for uint64 are written as decimal
// strings; both forms are accepted on input.

#include "aqci/datum.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace aqci {

/// Malformed JSON or a document that does not have the datum shape.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline nlohmann::json weight_to_json(const BigInt& w) {
    if (w >= 0 && mpz_fits_ulong_p(w.get_mpz_t())) return nlohmann::json(w.get_ui());
    return nlohmann::json(w.get_str());
}

inline nlohmann::json datum_to_json_value(const SpecialDatum& d) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& e : d.sets()) sets.push_back({{"elements", e.elements}, {"weight", weight_to_json(e.weight)}});
    return {{"n", d.dimension()}, {"sets", std::move(sets)}};
}

inline std::string to_json(const SpecialDatum& d) { return datum_to_json_value(d).dump(); }

inline DatumCandidate candidate_from_json_value(const nlohmann::json& j) {
    if (!j.is_object()) throw FormatError("datum must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw FormatError("datum needs an integer field \"n\"");
    if (!j.contains("sets") || !j["sets"].is_array()) throw FormatError("datum needs an array field \"sets\"");
    DatumCandidate c;
    c.n = j["n"].get<long>();
    for (const auto& s : j["sets"]) {
        if (!s.is_object() || !s.contains("elements") || !s.contains("weight"))
            throw FormatError("each set needs \"elements\" and \"weight\"");
        if (!s["elements"].is_array()) throw FormatError("\"elements\" must be an array");
        SetEntry e;
        for (const auto& x : s["elements"]) {
            if (!x.is_number_integer()) throw FormatError("set elements must be integers");
            e.elements.push_back(x.get<int>());
        }
        const auto& w = s["weight"];
        if (w.is_number_unsigned()) {
            e.weight = BigInt(std::to_string(w.get<unsigned long long>()));
        } else if (w.is_number_integer()) {
            e.weight = BigInt(std::to_string(w.get<long long>()));
        } else if (w.is_string()) {
            const auto& txt = w.get_ref<const std::string&>();
            if (txt.empty() || txt.find_first_not_of("-0123456789") != std::string::npos)
                throw FormatError("weight string is not an integer: " + txt);
            e.weight = BigInt(txt);
        } else {
            throw FormatError("weight must be an integer");
        }
        c.sets.push_back(std::move(e));
    }
    return c;
}

/// Parses text into an unvalidated candidate. Throws FormatError.
inline DatumCandidate from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    return candidate_from_json_value(j);
}

/// Parses and validates. Throws FormatError or InvalidDatum.
inline SpecialDatum parse_datum(const std::string& text) { return SpecialDatum::from_candidate(from_json(text)); }

/// Graphviz text: one node per member labelled with its weight, one edge per
/// parent -> child relation, parents ranked above children.
inline std::string to_dot(const SpecialDatum& d) {
    std::map<std::size_t, std::vector<std::size_t>> by_depth;
    for (NodeRef j : d.nodes()) {
        std::size_t depth = 0;
        for (auto p = d.parent(j); p; p = d.parent(*p)) ++depth;
        by_depth[depth].push_back(j.index);
    }
    std::ostringstream out;
    out << "digraph special_datum {\n";
    out << "  node [shape=circle];\n";
    for (NodeRef j : d.nodes()) {
        out << "  J" << j.index << " [label=\"" << d.weight(j).get_str() << "\", tooltip=\"{";
        const auto& el = d.elements(j);
        for (std::size_t i = 0; i < el.size(); ++i) out << (i ? "," : "") << el[i];
        out << "}\"];\n";
    }
    for (const auto& [depth, ids] : by_depth) {
        out << "  { rank=same;";
        for (auto i : ids) out << " J" << i << ";";
        out << " }\n";
    }
    for (NodeRef j : d.nodes())
        for (NodeRef c : d.children(j)) out << "  J" << j.index << " -> J" << c.index << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace aqci

#endif  // AQCI_SERIALIZE_HPP
