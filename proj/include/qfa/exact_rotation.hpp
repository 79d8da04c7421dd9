#pragma once

#include <cstdint>
#include <optional>

#include "qfa/mcqfa.hpp"

namespace qfa {

/// Two-state MCQFA whose letter operator is a planar rotation by
/// pi/denominator, with identity end markers, initial state 0 and accepting
/// set {0}. Its whole configuration space is one integer: after m letters the
/// state vector is (cos(m*theta), sin(m*theta)), so "accepts with probability
/// exactly 1 / exactly 0" becomes decidable integer arithmetic instead of a
/// floating-point comparison.
struct RotationMachine {
    std::uint64_t denominator = 1;  // D >= 1, letter angle = pi/D
};

/// Configuration as an angle index j in [0, 2D): the state vector is
/// (cos(j*pi/D), sin(j*pi/D)), unit-norm identically.
struct AngleState {
    std::uint64_t index = 0;
};

enum class ExactKind { ExactlyAccept, ExactlyReject, Intermediate };

struct ExactOutcome {
    ExactKind kind = ExactKind::Intermediate;
    AngleState angle;          // final configuration
    double probability = 0.0;  // cos^2(j*pi/D); informational on Intermediate
};

/// Runs on a^m by index arithmetic alone: j = m mod 2D. ExactlyAccept iff
/// j = 0 (mod D), where the vector is +-(1,0); ExactlyReject iff 2j = D
/// (mod 2D), where the cosine vanishes identically (only possible for even
/// D). No floating point participates in the decision.
ExactOutcome exact_run(const RotationMachine& machine, std::uint64_t input_length);

/// The same machine as a floating-point Mcqfa, for cross-checks and display.
Mcqfa to_mcqfa(const RotationMachine& machine);

/// |cos^2(j*theta) - float accept probability| <= tolerance, the two sides
/// computed along fully independent paths.
bool cross_check_float(const RotationMachine& machine, std::uint64_t input_length, double tolerance);

/// Checks the rotation machine with D = 2N against the promise with period N
/// over all constrained lengths in [0, max_blocks * 2N]: Yes lengths must
/// come out ExactlyAccept and No lengths ExactlyReject. Returns the first
/// violating length, or nullopt. Any positive period is allowed, not just
/// powers of two.
std::optional<std::uint64_t> family_counterexample(std::uint64_t period, std::uint64_t max_blocks);

bool verify_family_exactness(std::uint64_t period, std::uint64_t max_blocks);

}  // namespace qfa
