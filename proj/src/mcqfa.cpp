#include "qfa/mcqfa.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qfa/errors.hpp"

namespace qfa {

namespace {

void require_unitary(const Matrix& m, std::size_t num_states, const char* which) {
    if (m.rows() != num_states || m.cols() != num_states) {
        throw InvariantError(std::string(which) + " operator must be " + std::to_string(num_states) +
                             "x" + std::to_string(num_states));
    }
    if (!check_unitary(m, kUnitaryTolerance)) {
        throw InvariantError(std::string(which) + " operator is not unitary within tolerance");
    }
}

}  // namespace

void validate(const Mcqfa& machine) {
    if (machine.num_states == 0) throw InvariantError("machine needs at least one state");
    require_unitary(machine.unitaries.left_marker, machine.num_states, "left-marker");
    require_unitary(machine.unitaries.letter, machine.num_states, "letter");
    require_unitary(machine.unitaries.right_marker, machine.num_states, "right-marker");
    if (machine.initial_state >= machine.num_states) throw InvariantError("initial state out of range");
    for (std::size_t q : machine.accepting) {
        if (q >= machine.num_states) throw InvariantError("accepting state out of range");
    }
}

QuantumRunResult run_mcqfa(const Mcqfa& machine, std::uint64_t input_length) {
    std::vector<double> v(machine.num_states, 0.0);
    v[machine.initial_state] = 1.0;
    v = machine.unitaries.left_marker.apply(v);
    for (std::uint64_t i = 0; i < input_length; ++i) v = machine.unitaries.letter.apply(v);
    v = machine.unitaries.right_marker.apply(v);
    double p = 0.0;
    for (std::size_t q : machine.accepting) p += v[q] * v[q];
    return {std::move(v), std::min(p, 1.0)};
}

}  // namespace qfa
