#pragma once

#include <optional>

#include "stanley/core.hpp"

namespace stanley {

enum class Certification {
    CertifiedIndependent,    // finite certificate passed: a mathematical proof
    VerifiedRegularToDepth,  // block equations verified to the reported depth
    NotFoundToDepth,
};

/// Certified local structure of a sequence: character, shift index, core.
/// adequate_k is the minimal adequate block index; certified_k the level at
/// which the finite check first passed; depth the highest level verified.
struct RegularityReport {
    Certification certification = Certification::NotFoundToDepth;
    Int lambda = 0;
    Int sigma = 0;
    std::optional<NucleatingSet> core;
    int adequate_k = 0;
    int certified_k = 0;
    int depth = 0;

    bool found() const { return certification != Certification::NotFoundToDepth; }
    bool independent() const { return certification == Certification::CertifiedIndependent; }
};

struct GrowthConstants {
    Rational alpha;
    Rational beta;
    friend bool operator==(const GrowthConstants&, const GrowthConstants&) = default;
};

struct Type1Window {
    double c = 0;  // smallest c with a_n <= c * n^(log2 3) over the octave
    std::size_t n_lo = 0, n_hi = 0;
    bool holds = false;  // lower bound c/2 * n^(log2 3) <= a_n also holds
};

struct Type2Fit {
    double c_prime = 0;  // fit of a_n * ln(n) / n^2 over the tail
    double residual = 0;  // RMS deviation of the samples from c_prime
    std::size_t n_lo = 0, n_hi = 0;
};

/// Advisory growth classification; type2_fit never proves irregularity.
struct GrowthReport {
    std::optional<GrowthConstants> constants;
    std::optional<Type1Window> type1_window;
    std::optional<Type2Fit> type2_fit;
};

/// Finite independence certificate at level k with character lambda:
///   (a) a_{2^k-1} >= lambda + omega   (vacuous when O is empty)
///   (b) a_{2^k}   == 2 a_{2^k-1} - lambda + 1
///   (c) a_{2^k+i} == a_{2^k} + a_i for all 0 <= i < 2^k
/// A true return is a proof of independence.
bool verify_independence_certificate(const SequencePrefix& prefix, Int lambda, int k);

/// Derive the candidate character at each level and return the first
/// certified report, or NONE.  k_max is clamped to the available terms.
std::optional<RegularityReport> detect_independence(const SequencePrefix& prefix, int k_max);

/// Search shift indices 0..sigma_max and block levels up to k_max for the
/// regular structure (lambda, sigma, core).  sigma_max < 0 selects the
/// default 2^(k_max-2).  Dependent detections are verified to depth, not
/// proven; NOT_FOUND_TO_DEPTH is a valid outcome.
RegularityReport detect_regularity(const SequencePrefix& prefix, Int sigma_max, int k_max);

/// Exact rational (alpha, beta) with a_{2^k - sigma} = alpha 3^k + beta 2^k,
/// solved from two consecutive adequate levels and verified exactly at every
/// further available level.  Throws std::runtime_error on inconsistency.
GrowthConstants growth_constants(const SequencePrefix& prefix, const RegularityReport& report);

/// True iff every core term below omega(core) appears among prefix terms.
bool check_faithful(const SequencePrefix& prefix, const SequencePrefix& core_prefix);

/// Advisory classification: Type-1 window for detected-regular sequences,
/// otherwise a Type-2 fit with residual.
GrowthReport classify_growth(const SequencePrefix& prefix, const RegularityReport& report);

}  // namespace stanley
