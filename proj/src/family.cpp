#include "qfa/family.hpp"

#include <stdexcept>
#include <string>

#include "qfa/errors.hpp"
#include "qfa/oracle.hpp"
#include "qfa/promise.hpp"

namespace qfa {

std::uint64_t FamilyParams::period() const {
    if (k > 40 || l > (std::uint32_t{1} << 20)) {
        throw std::invalid_argument("family parameters out of range: k <= 40, l <= 2^20");
    }
    return (std::uint64_t{1} << k) * (2 * std::uint64_t{l} + 1);
}

FamilyMcqfa build_mcqfa(const FamilyParams& params) {
    const RotationMachine rotation{2 * params.period()};
    return {to_mcqfa(rotation), rotation};
}

UnaryDfa build_min_dfa(const FamilyParams& params) {
    const std::uint64_t period = params.period();
    if (period > (std::uint64_t{1} << 22)) {
        throw std::invalid_argument("period too large for explicit DFA construction");
    }
    UnaryDfa machine;
    machine.tail_len = 0;
    machine.cycle_len = std::uint32_t{2} << params.k;  // 2^(k+1) states, all on the cycle
    machine.accepting = {0};
    if (!dfa_solves_exactly(machine, PromiseSpec{period})) {
        throw InvariantError("constructed DFA fails on period " + std::to_string(period));
    }
    return machine;
}

const char* to_string(Provenance provenance) {
    return provenance == Provenance::BruteForce ? "brute-force" : "analytic";
}

std::vector<FamilyRow> family_table(std::uint32_t k_max) {
    if (k_max == 0) throw std::invalid_argument("k_max must be at least 1");
    std::vector<FamilyRow> rows;
    rows.reserve(k_max);
    for (std::uint32_t k = 1; k <= k_max; ++k) {
        const FamilyParams params{k, 0};
        const std::uint64_t period = params.period();
        const std::uint64_t expected = analytic_min_states(period);
        FamilyRow row;
        row.k = k;
        row.n = period;
        // Sizes up to 16 states are cheap to confirm exhaustively; beyond
        // that the closed form takes over.
        if (expected <= 16) {
            const SearchReport report = min_dfa_search(period, static_cast<std::uint32_t>(expected));
            if (!report.minimal_states || *report.minimal_states != expected) {
                throw InvariantError("search disagrees with closed form at k=" + std::to_string(k));
            }
            row.dfa_states = *report.minimal_states;
            row.provenance = Provenance::BruteForce;
        } else {
            row.dfa_states = expected;
            row.provenance = Provenance::Analytic;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qfa
