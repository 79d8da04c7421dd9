#pragma once

#include <cstdint>
#include <optional>

#include "qfa/mcqfa.hpp"
#include "qfa/unary_dfa.hpp"

namespace qfa {

/// The promise family with period N over lengths of a^m: even multiples of N
/// must be accepted, odd multiples rejected, every other length is
/// unconstrained.
struct PromiseSpec {
    std::uint64_t period = 1;  // N >= 1
};

enum class Classification { Yes, No, OutsidePromise };

/// Yes iff m = 0 (mod 2N), No iff m = N (mod 2N), OutsidePromise otherwise.
Classification classify(const PromiseSpec& spec, std::uint64_t input_length);

/// Smallest length in [0, p + lcm(t, 2N)) on which the DFA violates the
/// promise, or nullopt when it solves it exactly. The bound is sound: from
/// length p on the DFA is periodic with period t and the promise with period
/// 2N, so one joint period after the tail decides every longer input.
std::optional<std::uint64_t> dfa_counterexample(const UnaryDfa& machine, const PromiseSpec& spec);

bool dfa_solves_exactly(const UnaryDfa& machine, const PromiseSpec& spec);

/// Floating-point exactness check for a general MCQFA: scans every length in
/// [0, max_length] and requires accept probability within `tolerance` of 1 on
/// Yes lengths and of 0 on No lengths. Returns the first violating length.
/// Floats can refute exactness but not certify it; the rotation engine in
/// exact_rotation.hpp is the authoritative path for the machine family.
std::optional<std::uint64_t> mcqfa_counterexample(const Mcqfa& machine, const PromiseSpec& spec,
                                                  std::uint64_t max_length, double tolerance);

}  // namespace qfa
