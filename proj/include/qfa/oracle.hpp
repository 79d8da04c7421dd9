#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qfa/unary_dfa.hpp"

namespace qfa {

/// Hard cap on min_dfa_search's size bound: each size m costs a scan of
/// m * 2^m candidates.
inline constexpr std::uint32_t kMaxSearchStates = 20;

/// Whether a pure cycle of t states can classify the promise with period n.
///
/// With d = gcd(2n, t), the even multiples of n land exactly on the subgroup
/// of residues generated by d and the odd multiples on that subgroup shifted
/// by n. An accepting set separating them exists iff the shift leaves the
/// subgroup, i.e. iff n is not a multiple of d; equivalently iff 2^(v2(n)+1)
/// divides t, where v2 is the 2-adic valuation.
struct CycleVerdict {
    std::uint64_t cycle_len = 0;  // t
    std::uint64_t period = 0;     // n
    std::uint64_t divisor = 0;    // d = gcd(2n, t)
    bool solvable = false;
};

CycleVerdict cycle_solvable(std::uint64_t cycle_len, std::uint64_t period);

/// Independent route to the same answer: enumerate the residues reached by
/// even and by odd multiples of the period around the cycle and test the two
/// sets for disjointness. Kept separate from cycle_solvable so the gcd
/// formula has something to be checked against.
bool cycle_solvable_by_residues(std::uint64_t cycle_len, std::uint64_t period);

/// Minimal DFA size for the promise with period n: 2^(v2(n)+1), the smallest
/// solvable cycle length. No tail is ever needed. Requires n >= 1.
std::uint64_t analytic_min_states(std::uint64_t period);

struct SearchReport {
    std::uint64_t period = 0;                     // n
    std::uint32_t max_states = 0;                 // search bound used
    std::optional<std::uint32_t> minimal_states;  // empty: nothing found within the bound
    std::optional<UnaryDfa> witness;              // present iff minimal_states is
    std::uint64_t machines_checked = 0;           // candidates tested across all scanned sizes
    std::map<std::uint32_t, double> ms_per_size;  // wall-clock milliseconds per size
};

/// Exhaustive search for the smallest unary DFA solving the promise with
/// period n. For each total size m = 1..max_states it tests every tail/cycle
/// split and every accepting subset; every candidate of a size is tested
/// before the size is settled, so a hit at size m proves all smaller sizes
/// unsolvable and machines_checked counts exactly the candidates covered.
///
/// The result is deterministic regardless of num_threads: the witness is the
/// candidate with the smallest (tail_len, accepting-mask) pair at the minimal
/// size. num_threads == 0 picks a hardware default.
/// Throws std::invalid_argument when max_states exceeds kMaxSearchStates.
SearchReport min_dfa_search(std::uint64_t period, std::uint32_t max_states, unsigned num_threads = 0);

/// First n in [1, n_max] where min_dfa_search disagrees with
/// analytic_min_states (finding nothing within max_states counts as a
/// disagreement), or nullopt when they match everywhere. Throws
/// std::invalid_argument if max_states cannot cover some n <= n_max.
std::optional<std::uint64_t> oracle_analytic_mismatch(std::uint64_t n_max, std::uint32_t max_states);

bool oracle_vs_analytic(std::uint64_t n_max, std::uint32_t max_states);

}  // namespace qfa
