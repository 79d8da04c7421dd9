#include "qfa/unary_dfa.hpp"

#include "qfa/errors.hpp"

namespace qfa {

std::uint32_t total_states(const UnaryDfa& machine) {
    return machine.tail_len + machine.cycle_len;
}

void validate(const UnaryDfa& machine) {
    if (machine.cycle_len == 0) throw InvariantError("cycle length must be positive");
    for (std::uint32_t s : machine.accepting) {
        if (s >= total_states(machine)) throw InvariantError("accepting state out of range");
    }
}

std::uint32_t state_after(const UnaryDfa& machine, std::uint64_t input_length) {
    if (input_length < machine.tail_len) return static_cast<std::uint32_t>(input_length);
    return machine.tail_len + static_cast<std::uint32_t>((input_length - machine.tail_len) % machine.cycle_len);
}

bool run_unary_dfa(const UnaryDfa& machine, std::uint64_t input_length) {
    return machine.accepting.count(state_after(machine, input_length)) != 0;
}

}  // namespace qfa
