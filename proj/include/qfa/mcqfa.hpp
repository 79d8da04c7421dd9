#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qfa/matrix.hpp"

namespace qfa {

/// Tolerance for the unitarity invariant on machine operators.
inline constexpr double kUnitaryTolerance = 1e-9;

/// Per-symbol evolution operators over the framed unary alphabet:
/// left end marker, the letter 'a', right end marker.
struct Unitaries {
    Matrix left_marker;
    Matrix letter;
    Matrix right_marker;
};

/// Measure-once quantum finite automaton over the unary alphabet {a}.
///
/// The machine reads the framed input (left marker, a^m, right marker),
/// applying one unitary per symbol to a real state vector that starts as the
/// basis vector at `initial_state`. A single measurement at the end accepts
/// with probability equal to the squared norm of the projection onto
/// `accepting`.
struct Mcqfa {
    std::size_t num_states = 0;
    Unitaries unitaries;
    std::size_t initial_state = 0;
    std::set<std::size_t> accepting;
};

/// Checks the structural invariants: all three operators are
/// num_states x num_states and unitary within kUnitaryTolerance, and the
/// initial state and every accepting state are in range.
/// Throws InvariantError. Machines built or loaded through this library are
/// validated at construction; run_mcqfa assumes a valid machine.
void validate(const Mcqfa& machine);

struct QuantumRunResult {
    std::vector<double> final_vector;
    double accept_probability = 0.0;  // in [0, 1]
};

/// Runs the machine on a^m: applies the left-marker operator, the letter
/// operator m times, then the right-marker operator. O(m * num_states^2).
QuantumRunResult run_mcqfa(const Mcqfa& machine, std::uint64_t input_length);

}  // namespace qfa
