#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "stanley/core.hpp"
#include "stanley/structure.hpp"

namespace stanley {

/// Outcome of a bounded character search.
struct CharacterWitness {
    Int lambda = 0;
    std::optional<NucleatingSet> nucleus;  // absent on a negative result
    int adequate_k = 0;
    bool search_exhausted = false;  // true: every candidate below the bound was tried
    std::uint64_t candidates_tried = 0;
};

struct SearchBudget {
    double seconds = 60.0;
    std::uint64_t max_candidates = 2'000'000;
    int k_max = 8;  // certificate depth per candidate
    unsigned threads = 0;  // 0: STANLEY_THREADS or hardware concurrency
};

/// Streams every 3-free set containing 0 with maximum <= max(2*lambda - 1, 0)
/// in canonical order: by maximum element, then lexicographic.
class CandidateEnumerator {
  public:
    explicit CandidateEnumerator(Int lambda);
    std::optional<std::vector<Int>> next();

  private:
    Int bound_;
    Int current_max_ = 0;
    std::vector<Int> stack_;   // current set, always 3-free
    std::vector<Int> resume_;  // next element to try at each depth
    bool done_ = false;
    bool emitted_root_ = false;
};

/// First certified witness of character exactly lambda, in canonical
/// candidate order, or an exhausted/budget-limited negative result.
CharacterWitness find_character_witness(Int lambda, const SearchBudget& budget = {});

/// True iff S(nucleus) is certified independent with character exactly lambda.
bool verify_appendix_row(Int lambda, const NucleatingSet& nucleus, int k_max = 12,
                         std::size_t term_budget = 8192);

/// Shortest prefix of the terms whose greedy extension reproduces the whole
/// prefix; the unique minimal nucleating set once candidates stabilize.
NucleatingSet minimal_nucleating_set(const SequencePrefix& prefix);

/// Largest x in (a_0, a_last) that is neither a term nor covered by the
/// terms below it, or -1 if none.  Any nucleating set must reach past it.
Int last_greedy_violation(const SequencePrefix& prefix);

/// The populated appendix rows: characters 0..76 with a known witness.
const std::vector<std::pair<Int, std::vector<Int>>>& known_character_table();

/// Characters with no known witness (1 and 3 are provably impossible).
const std::vector<Int>& characters_without_witness();

}  // namespace stanley
