#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "stanley/common.hpp"

namespace stanley {

/// Witness pair (s, t) with s < t and 2t - s = x.  Both members of a
/// witness are necessarily smaller than the integer they cover.
using CoverWitness = std::pair<Int, Int>;

/// An arithmetic-progression triple (a, b, c) with a + c = 2b.
struct ApTriple {
    Int a, b, c;
};

/// True iff no three elements of `sorted` form an arithmetic progression.
/// Input must be strictly increasing and non-negative, else std::invalid_argument.
/// Reference method: for each pair s < t, test membership of 2t - s.
bool is_3_free(std::span<const Int> sorted);

/// First AP triple in canonical order (smallest c, then smallest a), if any.
std::optional<ApTriple> find_ap_triple(std::span<const Int> sorted);

/// Lexicographically smallest witness (smallest t, then smallest s) with
/// s, t in `terms`, s < t, 2t - s = x.  NONE if x is not covered.
std::optional<CoverWitness> covered_by(Int x, std::span<const Int> terms);

/// Witness with s in S, t in T, s < t, 2t - s = x (smallest t, then s).
std::optional<CoverWitness> jointly_covered(Int x, std::span<const Int> S,
                                            std::span<const Int> T);

/// A finite 3-free set of non-negative integers in root position (0 is the
/// first element).  Construction validates the invariants.
class NucleatingSet {
  public:
    explicit NucleatingSet(std::vector<Int> elements);

    const std::vector<Int>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    Int max() const { return elements_.back(); }
    Int operator[](std::size_t i) const { return elements_[i]; }

    friend bool operator==(const NucleatingSet&, const NucleatingSet&) = default;

  private:
    std::vector<Int> elements_;
};

/// Dense bit array marking integers covered by the current terms.
/// Bits are never cleared; capacity grows geometrically.
class CoverSieve {
  public:
    explicit CoverSieve(Int initial_capacity = 1024);

    bool test(Int x) const {
        if (x < 0 || x >= capacity_) return false;
        return words_[static_cast<std::size_t>(x >> 6)] >> (x & 63) & 1;
    }
    void set(Int x) {
        words_[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63);
    }
    void ensure(Int min_capacity);
    Int capacity() const { return capacity_; }

  private:
    std::vector<std::uint64_t> words_;
    Int capacity_ = 0;
};

/// The omitted set O: non-negative integers neither in the sequence nor
/// covered by it.  omega is its maximum, NONE when empty.
struct OmittedSet {
    std::vector<Int> elements;

    std::optional<Int> omega() const {
        if (elements.empty()) return std::nullopt;
        return elements.back();
    }
    bool contains(Int x) const;

    friend bool operator==(const OmittedSet&, const OmittedSet&) = default;
};

/// One block of a sequence: the 2^k terms at indices [2^k - sigma, 2^(k+1) - sigma).
struct BlockView {
    int k = 0;
    Int shift_sigma = 0;
    std::vector<Int> values;
};

/// Raw greedy extension: start from a sorted strictly increasing 3-free
/// list (root position not required) and append the smallest admissible
/// integers until n_terms terms exist.  This is the engine behind
/// extend_greedy; transforms and translation tests use it directly.
std::vector<Int> greedy_extend(std::vector<Int> start, std::size_t n_terms);

/// A generated prefix of a Stanley sequence together with its cover sieve
/// and (exact) omitted set.  Single-owner: only extend_to mutates; all
/// queries are read-only.
class SequencePrefix {
  public:
    SequencePrefix(NucleatingSet nucleus, std::size_t n_terms);

    void extend_to(std::size_t n_terms);

    const std::vector<Int>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Int operator[](std::size_t i) const { return terms_[i]; }
    const NucleatingSet& nucleus() const { return nucleus_; }
    const CoverSieve& sieve() const { return sieve_; }
    const OmittedSet& omitted() const { return omitted_; }

    BlockView block(int k, Int sigma) const;

  private:
    void append_term(Int x);

    std::vector<Int> terms_;
    NucleatingSet nucleus_;
    CoverSieve sieve_;
    OmittedSet omitted_;
};

/// Deterministic greedy generation of S(nucleus) with n_terms terms.
SequencePrefix extend_greedy(const NucleatingSet& nucleus, std::size_t n_terms);

/// Exact omitted set of the sequence.  Coverage of x < max(nucleus) depends
/// only on terms below x, so O is exact as soon as the prefix exists.
OmittedSet omitted_set(const SequencePrefix& prefix);

}  // namespace stanley
