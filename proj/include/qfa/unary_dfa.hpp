#pragma once

#include <cstdint>
#include <set>

namespace qfa {

/// Unary DFA in canonical tail+cycle form: states 0..p+t-1 where state i
/// steps to i+1 except the last state p+t-1, which steps back to p. State 0
/// is initial. The reachable part of every unary DFA is isomorphic to a
/// machine of this shape, so nothing else is representable on purpose.
struct UnaryDfa {
    std::uint32_t tail_len = 0;   // p
    std::uint32_t cycle_len = 1;  // t, must stay positive
    std::set<std::uint32_t> accepting;
};

std::uint32_t total_states(const UnaryDfa& machine);

/// Throws InvariantError on an empty cycle or an accepting index out of range.
void validate(const UnaryDfa& machine);

/// State reached after reading a^m, in O(1): m while still on the tail,
/// otherwise tail_len + (m - tail_len) mod cycle_len.
std::uint32_t state_after(const UnaryDfa& machine, std::uint64_t input_length);

bool run_unary_dfa(const UnaryDfa& machine, std::uint64_t input_length);

}  // namespace qfa
