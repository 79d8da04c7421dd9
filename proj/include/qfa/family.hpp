#pragma once

#include <cstdint>
#include <vector>

#include "qfa/exact_rotation.hpp"
#include "qfa/mcqfa.hpp"
#include "qfa/unary_dfa.hpp"

namespace qfa {

/// Parameters of the promise family: period N = 2^k * (2l + 1). l = 0 gives
/// the power-of-two core family; an odd factor changes nothing on the quantum
/// side and only the power-of-two part matters on the classical side.
struct FamilyParams {
    std::uint32_t k = 0;
    std::uint32_t l = 0;

    std::uint64_t period() const;  // N
};

/// The two-state machine for the family in both guises: the floating-point
/// MCQFA (letter rotates by pi/2N, identity markers, accepting {0}) and the
/// exact rotation engine driving the same machine.
struct FamilyMcqfa {
    Mcqfa machine;
    RotationMachine rotation;  // denominator = 2N
};

FamilyMcqfa build_mcqfa(const FamilyParams& params);

/// The minimal DFA for the family: a pure cycle of 2^(k+1) states accepting
/// {0}. Even multiples of N land on state 0 and odd multiples on state 2^k.
/// The construction is checked against dfa_solves_exactly before returning;
/// supported for periods up to 2^22 (the check scans one joint period).
UnaryDfa build_min_dfa(const FamilyParams& params);

enum class Provenance { BruteForce, Analytic };

/// Stable token for table output: "brute-force" or "analytic".
const char* to_string(Provenance provenance);

struct FamilyRow {
    std::uint32_t k = 0;
    std::uint64_t n = 0;
    std::uint32_t qfa_states = 2;
    std::uint64_t dfa_states = 0;
    Provenance provenance = Provenance::Analytic;
};

/// One row per k in [1, k_max] with N = 2^k. The DFA column is brute-force
/// verified by min_dfa_search while the minimal size stays within the
/// search's feasibility cutoff (cycles up to 16, i.e. k <= 3) and analytic
/// beyond it; the provenance flag records which route produced each row.
std::vector<FamilyRow> family_table(std::uint32_t k_max);

}  // namespace qfa
