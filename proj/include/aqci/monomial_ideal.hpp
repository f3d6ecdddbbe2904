#ifndef AQCI_MONOMIAL_IDEAL_HPP
#define AQCI_MONOMIAL_IDEAL_HPP

#include "aqci/datum.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace aqci {

using ExponentVector = std::vector<BigInt>;

/// A monomial ideal of C[x_1..x_n] given by exponent vectors of its generators.
/// Its Newton polyhedron is conv(generators) + the nonnegative orthant.
class MonomialIdeal {
public:
    MonomialIdeal(int n, std::vector<ExponentVector> generators) : n_(n), gens_(std::move(generators)) {
        if (n_ < 1) throw std::invalid_argument("monomial ideal: dimension must be >= 1");
        if (gens_.empty()) throw std::invalid_argument("monomial ideal: no generators");
        for (const auto& g : gens_) {
            if (static_cast<int>(g.size()) != n_)
                throw std::invalid_argument("monomial ideal: generator length differs from dimension");
            if (std::any_of(g.begin(), g.end(), [](const BigInt& x) { return x < 0; }))
                throw std::invalid_argument("monomial ideal: negative exponent");
            if (std::all_of(g.begin(), g.end(), [](const BigInt& x) { return x == 0; }))
                throw std::invalid_argument("monomial ideal: zero generator (unit ideal)");
        }
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    }

    int dimension() const { return n_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_;
    std::vector<ExponentVector> gens_;
};

/// Convenience for tests and callers with small exponents.
inline MonomialIdeal make_ideal(int n, std::initializer_list<std::initializer_list<long>> gens) {
    std::vector<ExponentVector> v;
    for (const auto& g : gens) {
        ExponentVector e;
        for (long x : g) e.emplace_back(x);
        v.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(v));
}

/// The ideal a_D generated by x_J^{w(J)} for J in D.
inline MonomialIdeal monomial_ideal(const SpecialDatum& d) {
    std::vector<ExponentVector> gens;
    for (const auto& e : d.sets()) {
        ExponentVector g(d.dimension(), BigInt(0));
        for (int x : e.elements) g[x - 1] = e.weight;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(d.dimension(), std::move(gens));
}

}  // namespace aqci

#endif  // AQCI_MONOMIAL_IDEAL_HPP
