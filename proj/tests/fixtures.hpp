#pragma once

#include "aqci/aqci.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using Sets = std::vector<std::pair<std::vector<int>, long>>;

inline aqci::DatumCandidate candidate(long n, const Sets& sets) {
    aqci::DatumCandidate c;
    c.n = n;
    for (const auto& [el, w] : sets) c.sets.push_back({el, aqci::BigInt(w)});
    return c;
}

inline aqci::SpecialDatum datum(long n, const Sets& sets) {
    return aqci::SpecialDatum::from_candidate(candidate(n, sets));
}

inline std::string read(const std::string& name) {
    std::ifstream in(std::string(AQCI_DATA_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline aqci::SpecialDatum load(const std::string& name) { return aqci::parse_datum(read(name)); }

// Root {1..n} over n singletons of weight a.
inline aqci::SpecialDatum cyclic(int n, long a) {
    Sets s;
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    s.push_back({all, 1});
    for (int i = 1; i <= n; ++i) s.push_back({{i}, a});
    return datum(n, s);
}

// Two components {1,2} and {3,4}, singleton weights a and b.
inline aqci::SpecialDatum two_pairs(long a, long b) {
    return datum(4, {{{1, 2}, 1}, {{1}, a}, {{2}, a}, {{3, 4}, 1}, {{3}, b}, {{4}, b}});
}

// {1,2,3,4} over {1,2},{3,4} (weight 2) over singletons (weight 4).
inline aqci::SpecialDatum nested4() {
    return datum(4, {{{1, 2, 3, 4}, 1}, {{1, 2}, 2}, {{3, 4}, 2}, {{1}, 4}, {{2}, 4}, {{3}, 4}, {{4}, 4}});
}

inline aqci::SpecialDatum point() { return datum(1, {{{1}, 1}}); }

inline std::vector<std::vector<int>> members(const aqci::SpecialDatum& d, const std::vector<aqci::NodeRef>& refs) {
    std::vector<std::vector<int>> out;
    for (auto r : refs) out.push_back(d.elements(r));
    return out;
}

inline std::vector<long> weights(const aqci::SpecialDatum& d) {
    std::vector<long> out;
    for (const auto& e : d.sets()) out.push_back(e.weight.get_si());
    return out;
}

}  // namespace fixtures
