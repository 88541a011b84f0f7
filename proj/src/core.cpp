#include "stanley/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

namespace {

void check_sorted_strict(std::span<const Int> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0)
            throw std::invalid_argument("elements must be non-negative");
        if (i > 0 && v[i] <= v[i - 1])
            throw std::invalid_argument("elements must be strictly increasing");
    }
}

bool contains(std::span<const Int> sorted, Int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

bool is_3_free(std::span<const Int> sorted) {
    return !find_ap_triple(sorted).has_value();
}

std::optional<ApTriple> find_ap_triple(std::span<const Int> sorted) {
    check_sorted_strict(sorted);
    // Scan middles ascending so the first hit has the smallest endpoint c.
    for (std::size_t j = 1; j + 1 <= sorted.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Int c = checked_sub(checked_mul(2, sorted[j]), sorted[i]);
            if (contains(sorted.subspan(j + 1), c))
                return ApTriple{sorted[i], sorted[j], c};
        }
    }
    return std::nullopt;
}

std::optional<CoverWitness> covered_by(Int x, std::span<const Int> terms) {
    // s = 2t - x, so t ranges over [ceil(x/2), x).  Smallest t wins.
    auto lo = std::lower_bound(terms.begin(), terms.end(), (x + 1) / 2);
    for (auto it = lo; it != terms.end() && *it < x; ++it) {
        Int s = checked_sub(checked_mul(2, *it), x);
        if (s >= 0 && s < *it && contains(terms, s)) return CoverWitness{s, *it};
    }
    return std::nullopt;
}

std::optional<CoverWitness> jointly_covered(Int x, std::span<const Int> S,
                                            std::span<const Int> T) {
    for (Int t : T) {
        Int s = checked_sub(checked_mul(2, t), x);
        if (s >= t) break;  // t sorted ascending; larger t only raises s
        if (s >= 0 && std::binary_search(S.begin(), S.end(), s))
            return CoverWitness{s, t};
    }
    return std::nullopt;
}

NucleatingSet::NucleatingSet(std::vector<Int> elements) : elements_(std::move(elements)) {
    if (elements_.empty() || elements_.front() != 0)
        throw std::invalid_argument("nucleating set must be in root position (contain 0)");
    if (auto ap = find_ap_triple(elements_)) {
        throw std::invalid_argument(
            "nucleating set is not 3-free: (" + std::to_string(ap->a) + ", " +
            std::to_string(ap->b) + ", " + std::to_string(ap->c) +
            ") is an arithmetic progression");
    }
}

CoverSieve::CoverSieve(Int initial_capacity) { ensure(initial_capacity); }

void CoverSieve::ensure(Int min_capacity) {
    if (min_capacity <= capacity_) return;
    Int next = capacity_ > 0 ? capacity_ : Int{1024};
    while (next < min_capacity) next = checked_mul(next, 2);
    words_.resize(static_cast<std::size_t>((next + 63) / 64), 0);
    capacity_ = next;
}

bool OmittedSet::contains(Int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

std::vector<Int> greedy_extend(std::vector<Int> start, std::size_t n_terms) {
    check_sorted_strict(start);
    if (auto ap = find_ap_triple(start))
        throw std::invalid_argument("start set is not 3-free");
    if (start.empty()) throw std::invalid_argument("start set must be non-empty");

    CoverSieve sieve;
    std::vector<Int> terms;
    terms.reserve(n_terms > start.size() ? n_terms : start.size());
    for (Int x : start) {
        sieve.ensure(checked_add(checked_mul(2, x), 1));
        for (Int s : terms) sieve.set(2 * x - s);
        terms.push_back(x);
    }
    while (terms.size() < n_terms) {
        Int x = terms.back() + 1;
        while (sieve.test(x)) ++x;
        sieve.ensure(checked_add(checked_mul(2, x), 1));
        for (Int s : terms) sieve.set(2 * x - s);
        terms.push_back(x);
    }
    return terms;
}

SequencePrefix::SequencePrefix(NucleatingSet nucleus, std::size_t n_terms)
    : nucleus_(std::move(nucleus)) {
    terms_.reserve(n_terms);
    for (Int x : nucleus_.elements()) append_term(x);
    // O is exact already: a cover witness for x uses only terms below x,
    // and the terms below max(nucleus) are exactly the nucleus elements.
    for (Int x = 0; x < nucleus_.max(); ++x) {
        if (contains(std::span<const Int>(nucleus_.elements()), x)) continue;
        if (!sieve_.test(x)) omitted_.elements.push_back(x);
    }
    extend_to(n_terms);
}

void SequencePrefix::append_term(Int x) {
    sieve_.ensure(checked_add(checked_mul(2, x), 1));
    for (Int s : terms_) sieve_.set(2 * x - s);
    terms_.push_back(x);
}

void SequencePrefix::extend_to(std::size_t n_terms) {
    while (terms_.size() < n_terms) {
        Int x = terms_.back() + 1;
        while (sieve_.test(x)) ++x;
        append_term(x);
    }
}

BlockView SequencePrefix::block(int k, Int sigma) const {
    Int begin = checked_sub(pow2(k), sigma);
    Int end = checked_sub(pow2(k + 1), sigma);
    if (begin < 0 || static_cast<std::size_t>(end) > terms_.size())
        throw std::out_of_range("block [2^k - sigma, 2^(k+1) - sigma) out of range");
    BlockView view{k, sigma, {}};
    view.values.assign(terms_.begin() + begin, terms_.begin() + end);
    return view;
}

SequencePrefix extend_greedy(const NucleatingSet& nucleus, std::size_t n_terms) {
    if (n_terms < nucleus.size())
        throw std::invalid_argument("term budget smaller than the nucleating set");
    return SequencePrefix(nucleus, n_terms);
}

OmittedSet omitted_set(const SequencePrefix& prefix) { return prefix.omitted(); }

}  // namespace stanley
