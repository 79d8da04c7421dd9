#include "qfa/promise.hpp"

#include <numeric>
#include <vector>

namespace qfa {

Classification classify(const PromiseSpec& spec, std::uint64_t input_length) {
    const std::uint64_t r = input_length % (2 * spec.period);
    if (r == 0) return Classification::Yes;
    if (r == spec.period) return Classification::No;
    return Classification::OutsidePromise;
}

std::optional<std::uint64_t> dfa_counterexample(const UnaryDfa& machine, const PromiseSpec& spec) {
    const std::uint64_t bound =
        machine.tail_len + std::lcm<std::uint64_t>(machine.cycle_len, 2 * spec.period);
    std::vector<bool> accepts(total_states(machine), false);
    for (std::uint32_t s : machine.accepting) accepts[s] = true;
    for (std::uint64_t m = 0; m < bound; ++m) {
        const Classification c = classify(spec, m);
        if (c == Classification::OutsidePromise) continue;
        const bool accepted = accepts[state_after(machine, m)];
        if (c == Classification::Yes ? !accepted : accepted) return m;
    }
    return std::nullopt;
}

bool dfa_solves_exactly(const UnaryDfa& machine, const PromiseSpec& spec) {
    return !dfa_counterexample(machine, spec).has_value();
}

std::optional<std::uint64_t> mcqfa_counterexample(const Mcqfa& machine, const PromiseSpec& spec,
                                                  std::uint64_t max_length, double tolerance) {
    // Extends the letter evolution one step per length; the operation
    // sequence per length is identical to a fresh run_mcqfa call.
    std::vector<double> v(machine.num_states, 0.0);
    v[machine.initial_state] = 1.0;
    v = machine.unitaries.left_marker.apply(v);
    for (std::uint64_t m = 0;; ++m) {
        const Classification c = classify(spec, m);
        if (c != Classification::OutsidePromise) {
            const std::vector<double> w = machine.unitaries.right_marker.apply(v);
            double p = 0.0;
            for (std::size_t q : machine.accepting) p += w[q] * w[q];
            if (c == Classification::Yes ? p < 1.0 - tolerance : p > tolerance) return m;
        }
        if (m == max_length) break;
        v = machine.unitaries.letter.apply(v);
    }
    return std::nullopt;
}

}  // namespace qfa
