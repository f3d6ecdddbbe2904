#ifndef AQCI_SIMPLEX_HPP
#define AQCI_SIMPLEX_HPP

// Dense two-phase tableau simplex for small exact linear programs.
//
//   minimize  c.x   subject to  A x = b,  x >= 0
//
// Field must be an exact ordered field (aqci::Rational in practice). Entering
// and leaving variables follow Bland's rule, so the method terminates without
// any tolerance handling.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace aqci {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Field>
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Field objective{};
    std::vector<Field> x;
};

template <class Field>
class Simplex {
public:
    using Row = std::vector<Field>;

    Simplex(std::vector<Row> a, Row b, Row c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (a_.size() != b_.size()) throw std::invalid_argument("simplex: row count mismatch");
        for (const auto& r : a_)
            if (r.size() != c_.size()) throw std::invalid_argument("simplex: column count mismatch");
    }

    LpSolution<Field> solve() const {
        const std::size_t m = a_.size();
        const std::size_t n = c_.size();
        // Tableau columns: n structural, m artificial, then the right-hand side.
        const std::size_t cols = n + m + 1;
        std::vector<Row> t(m, Row(cols, Field(0)));
        std::vector<std::size_t> basis(m);
        for (std::size_t i = 0; i < m; ++i) {
            bool flip = b_[i] < 0;
            for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Field(-a_[i][j]) : a_[i][j];
            t[i][n + i] = 1;
            t[i][cols - 1] = flip ? Field(-b_[i]) : b_[i];
            basis[i] = n + i;
        }

        // Phase I: minimise the sum of artificials.
        Row phase1(cols, Field(0));
        for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
        if (!run(t, basis, phase1, n + m)) throw std::logic_error("simplex: phase I unbounded");
        if (objective_value(t, basis, phase1) != 0) return {LpStatus::Infeasible, Field(0), {}};

        // Drive remaining artificials out of the basis where possible; rows
        // that cannot pivot are redundant equalities and are dropped.
        for (std::size_t i = 0; i < t.size();) {
            if (basis[i] < n) { ++i; continue; }
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j)
                if (t[i][j] != 0) { enter = j; break; }
            if (enter == n) {
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(t, basis, i, enter);
            ++i;
        }

        // Phase II over structural columns only.
        Row phase2(cols, Field(0));
        for (std::size_t j = 0; j < n; ++j) phase2[j] = c_[j];
        if (!run(t, basis, phase2, n)) return {LpStatus::Unbounded, Field(0), {}};

        LpSolution<Field> sol;
        sol.status = LpStatus::Optimal;
        sol.x.assign(n, Field(0));
        for (std::size_t i = 0; i < t.size(); ++i)
            if (basis[i] < n) sol.x[basis[i]] = t[i][cols - 1];
        sol.objective = Field(0);
        for (std::size_t j = 0; j < n; ++j) sol.objective += c_[j] * sol.x[j];
        return sol;
    }

private:
    static Field objective_value(const std::vector<Row>& t, const std::vector<std::size_t>& basis, const Row& cost) {
        Field v(0);
        for (std::size_t i = 0; i < t.size(); ++i) v += cost[basis[i]] * t[i].back();
        return v;
    }

    static void pivot(std::vector<Row>& t, std::vector<std::size_t>& basis, std::size_t r, std::size_t col) {
        Field p = t[r][col];
        for (auto& x : t[r]) x /= p;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == r || t[i][col] == 0) continue;
            Field f = t[i][col];
            for (std::size_t j = 0; j < t[i].size(); ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
        }
        basis[r] = col;
    }

    // Minimises `cost` using columns [0, usable). Returns false if unbounded.
    static bool run(std::vector<Row>& t, std::vector<std::size_t>& basis, const Row& cost, std::size_t usable) {
        for (;;) {
            // Bland: lowest-index column with negative reduced cost.
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < usable && !enter; ++j) {
                Field reduced = cost[j];
                for (std::size_t i = 0; i < t.size(); ++i) reduced -= cost[basis[i]] * t[i][j];
                if (reduced < 0) enter = j;
            }
            if (!enter) return true;
            // Ratio test, ties broken by lowest basic variable index.
            std::optional<std::size_t> leave;
            Field best(0);
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][*enter] <= 0) continue;
                Field ratio = t[i].back() / t[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(t, basis, *leave, *enter);
        }
    }

    std::vector<Row> a_;
    Row b_;
    Row c_;
};

}  // namespace aqci

#endif  // AQCI_SIMPLEX_HPP
