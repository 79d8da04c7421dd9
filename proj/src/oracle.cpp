#include "qfa/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qfa {

CycleVerdict cycle_solvable(std::uint64_t cycle_len, std::uint64_t period) {
    if (cycle_len == 0 || period == 0) throw std::invalid_argument("cycle_len and period must be positive");
    const std::uint64_t d = std::gcd(2 * period, cycle_len);
    return {cycle_len, period, d, period % d != 0};
}

bool cycle_solvable_by_residues(std::uint64_t cycle_len, std::uint64_t period) {
    if (cycle_len == 0 || period == 0) throw std::invalid_argument("cycle_len and period must be positive");
    std::vector<bool> even_hits(cycle_len, false);
    std::vector<bool> odd_hits(cycle_len, false);
    const std::uint64_t step = (2 * period) % cycle_len;
    std::uint64_t r = 0;
    do {
        even_hits[r] = true;
        r = (r + step) % cycle_len;
    } while (r != 0);
    const std::uint64_t start = period % cycle_len;
    r = start;
    do {
        odd_hits[r] = true;
        r = (r + step) % cycle_len;
    } while (r != start);
    for (std::uint64_t i = 0; i < cycle_len; ++i) {
        if (even_hits[i] && odd_hits[i]) return false;
    }
    return true;
}

std::uint64_t analytic_min_states(std::uint64_t period) {
    if (period == 0) throw std::invalid_argument("period must be positive");
    return std::uint64_t{2} << std::countr_zero(period);
}

namespace {

// One candidate of total size tail+cycle with accepting set given as a
// bitmask. Exactness needs checking only on the constrained lengths, the
// multiples of the period: block i must be accepted for even i and rejected
// for odd i, up to the joint period bound tail + lcm(cycle, 2n).
bool candidate_solves(std::uint32_t tail, std::uint32_t cycle, std::uint64_t mask, std::uint64_t period) {
    const std::uint64_t bound = tail + std::lcm<std::uint64_t>(cycle, 2 * period);
    bool expect_accept = true;
    for (std::uint64_t len = 0; len < bound; len += period) {
        const std::uint32_t state =
            len < tail ? static_cast<std::uint32_t>(len)
                       : tail + static_cast<std::uint32_t>((len - tail) % cycle);
        if (((mask >> state) & 1) != (expect_accept ? 1u : 0u)) return false;
        expect_accept = !expect_accept;
    }
    return true;
}

// Scans candidate indices [begin, end) at a fixed total size. The index
// encodes (tail, mask) as tail * 2^size + mask, so ascending index order is
// the witness tie-break order. Every index in the range is tested (no early
// break), which keeps the covered-candidate count exact.
std::optional<std::uint64_t> scan_range(std::uint32_t size, std::uint64_t period,
                                        std::uint64_t begin, std::uint64_t end) {
    const std::uint64_t mask_mod = (std::uint64_t{1} << size) - 1;
    std::optional<std::uint64_t> best;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const auto tail = static_cast<std::uint32_t>(idx >> size);
        const std::uint64_t mask = idx & mask_mod;
        if (!best && candidate_solves(tail, size - tail, mask, period)) best = idx;
    }
    return best;
}

}  // namespace

SearchReport min_dfa_search(std::uint64_t period, std::uint32_t max_states, unsigned num_threads) {
    if (period == 0) throw std::invalid_argument("period must be positive");
    if (max_states == 0 || max_states > kMaxSearchStates) {
        throw std::invalid_argument("max_states must be in [1, " + std::to_string(kMaxSearchStates) + "]");
    }
    if (num_threads == 0) {
        num_threads = std::thread::hardware_concurrency();
        if (num_threads == 0) num_threads = 1;
        num_threads = std::min(num_threads, 8u);
    }

    SearchReport report;
    report.period = period;
    report.max_states = max_states;
    for (std::uint32_t size = 1; size <= max_states; ++size) {
        const auto started = std::chrono::steady_clock::now();
        const std::uint64_t total = std::uint64_t{size} << size;  // size * 2^size candidates
        std::optional<std::uint64_t> best;
        if (num_threads == 1 || total < 4096) {
            best = scan_range(size, period, 0, total);
        } else {
            const std::uint64_t chunk = (total + num_threads - 1) / num_threads;
            std::vector<std::optional<std::uint64_t>> hits(num_threads);
            std::vector<std::thread> workers;
            workers.reserve(num_threads);
            for (unsigned w = 0; w < num_threads; ++w) {
                const std::uint64_t begin = std::min<std::uint64_t>(std::uint64_t{w} * chunk, total);
                const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
                workers.emplace_back(
                    [&hits, w, size, period, begin, end] { hits[w] = scan_range(size, period, begin, end); });
            }
            for (auto& worker : workers) worker.join();
            for (const auto& hit : hits) {
                if (hit && (!best || *hit < *best)) best = hit;
            }
        }
        report.machines_checked += total;
        report.ms_per_size[size] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        if (best) {
            const auto tail = static_cast<std::uint32_t>(*best >> size);
            const std::uint64_t mask = *best & ((std::uint64_t{1} << size) - 1);
            UnaryDfa witness;
            witness.tail_len = tail;
            witness.cycle_len = size - tail;
            for (std::uint32_t s = 0; s < size; ++s) {
                if ((mask >> s) & 1) witness.accepting.insert(s);
            }
            report.minimal_states = size;
            report.witness = std::move(witness);
            break;
        }
    }
    return report;
}

std::optional<std::uint64_t> oracle_analytic_mismatch(std::uint64_t n_max, std::uint32_t max_states) {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (analytic_min_states(n) > max_states) {
            throw std::invalid_argument("max_states=" + std::to_string(max_states) +
                                        " cannot cover n=" + std::to_string(n));
        }
        const SearchReport report = min_dfa_search(n, max_states);
        if (!report.minimal_states || *report.minimal_states != analytic_min_states(n)) return n;
    }
    return std::nullopt;
}

bool oracle_vs_analytic(std::uint64_t n_max, std::uint32_t max_states) {
    return !oracle_analytic_mismatch(n_max, max_states).has_value();
}

}  // namespace qfa
