#include "qfa/exact_rotation.hpp"

#include <cmath>
#include <numbers>

#include "qfa/promise.hpp"

namespace qfa {

ExactOutcome exact_run(const RotationMachine& machine, std::uint64_t input_length) {
    const std::uint64_t two_d = 2 * machine.denominator;
    const std::uint64_t j = input_length % two_d;
    ExactOutcome out;
    out.angle = AngleState{j};
    if (j % machine.denominator == 0) {
        // The vector is +-(1, 0): projection onto the accepting state is all of it.
        out.kind = ExactKind::ExactlyAccept;
        out.probability = 1.0;
    } else if ((2 * j) % two_d == machine.denominator) {
        // j*theta is an odd multiple of pi/2, so the cosine vanishes identically.
        out.kind = ExactKind::ExactlyReject;
        out.probability = 0.0;
    } else {
        out.kind = ExactKind::Intermediate;
        const double c = std::cos(static_cast<double>(j) * std::numbers::pi /
                                  static_cast<double>(machine.denominator));
        out.probability = c * c;
    }
    return out;
}

Mcqfa to_mcqfa(const RotationMachine& machine) {
    Mcqfa m;
    m.num_states = 2;
    m.unitaries.left_marker = Matrix::identity(2);
    m.unitaries.letter =
        Matrix::rotation2d(std::numbers::pi / static_cast<double>(machine.denominator));
    m.unitaries.right_marker = Matrix::identity(2);
    m.initial_state = 0;
    m.accepting = {0};
    return m;
}

bool cross_check_float(const RotationMachine& machine, std::uint64_t input_length, double tolerance) {
    const std::uint64_t j = input_length % (2 * machine.denominator);
    const double c = std::cos(static_cast<double>(j) * std::numbers::pi /
                              static_cast<double>(machine.denominator));
    const double via_index = c * c;
    const double via_float = run_mcqfa(to_mcqfa(machine), input_length).accept_probability;
    return std::abs(via_index - via_float) <= tolerance;
}

std::optional<std::uint64_t> family_counterexample(std::uint64_t period, std::uint64_t max_blocks) {
    const RotationMachine machine{2 * period};
    // Constrained lengths in [0, max_blocks*2N] are exactly the multiples of
    // N; block i is a Yes length for even i and a No length for odd i.
    for (std::uint64_t block = 0; block <= 2 * max_blocks; ++block) {
        const std::uint64_t m = block * period;
        const ExactKind kind = exact_run(machine, m).kind;
        const ExactKind wanted =
            block % 2 == 0 ? ExactKind::ExactlyAccept : ExactKind::ExactlyReject;
        if (kind != wanted) return m;
    }
    return std::nullopt;
}

bool verify_family_exactness(std::uint64_t period, std::uint64_t max_blocks) {
    return !family_counterexample(period, max_blocks).has_value();
}

}  // namespace qfa
