#include "stanley/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stanley/char_search.hpp"

namespace stanley {

namespace {

// Highest level j whose block [2^j - sigma, 2^(j+1) - sigma) fits in N terms.
int max_level(std::size_t n_terms, Int sigma) {
    int j = 0;
    while (pow2(j + 2) - sigma <= static_cast<Int>(n_terms)) ++j;
    return j + 1;
}

// Equations (one)/(two) at a single level j, against explicit core values.
bool level_holds(const std::vector<Int>& a, const std::vector<Int>& core, Int lambda,
                 Int sigma, int j) {
    Int start = pow2(j) - sigma;
    Int end = pow2(j + 1) - sigma;
    if (start < 1 || end > static_cast<Int>(a.size())) return false;
    if (a[start] != 2 * a[start - 1] - lambda + 1) return false;
    for (Int i = 0; i < pow2(j); ++i)
        if (a[start + i] != a[start] + core[i]) return false;
    return true;
}

// Walk the verified level downward as far as the defining equations and the
// minimal-nucleus condition allow; the result is the minimal adequate index.
int minimal_adequate(const SequencePrefix& prefix, const std::vector<Int>& core, Int lambda,
                     Int sigma, int from_k) {
    std::size_t m = minimal_nucleating_set(prefix).size();
    int ell = from_k;
    while (ell > 0) {
        int j = ell - 1;
        Int start = pow2(j) - sigma;
        if (start < 1 || start < static_cast<Int>(m)) break;
        if (pow2(j) > static_cast<Int>(core.size())) break;
        if (!level_holds(prefix.terms(), core, lambda, sigma, j)) break;
        ell = j;
    }
    return ell;
}

}  // namespace

bool verify_independence_certificate(const SequencePrefix& prefix, Int lambda, int k) {
    const auto& a = prefix.terms();
    if (pow2(k + 1) > static_cast<Int>(a.size()))
        throw std::invalid_argument("prefix too short for certificate level k");
    Int half = pow2(k);
    if (auto omega = prefix.omitted().omega())
        if (a[half - 1] < lambda + *omega) return false;
    if (a[half] != 2 * a[half - 1] - lambda + 1) return false;
    for (Int i = 0; i < half; ++i)
        if (a[half + i] != a[half] + a[i]) return false;
    return true;
}

std::optional<RegularityReport> detect_independence(const SequencePrefix& prefix, int k_max) {
    const auto& a = prefix.terms();
    for (int k = 1; k <= k_max && pow2(k + 1) <= static_cast<Int>(a.size()); ++k) {
        Int lambda = 2 * a[pow2(k) - 1] - a[pow2(k)] + 1;
        if (!verify_independence_certificate(prefix, lambda, k)) continue;

        RegularityReport report;
        report.certification = Certification::CertifiedIndependent;
        report.lambda = lambda;
        report.sigma = 0;
        report.core = minimal_nucleating_set(prefix);
        report.certified_k = k;
        report.adequate_k = minimal_adequate(prefix, a, lambda, 0, k);
        report.depth = max_level(a.size(), 0);
        return report;
    }
    return std::nullopt;
}

RegularityReport detect_regularity(const SequencePrefix& prefix, Int sigma_max, int k_max) {
    const auto& a = prefix.terms();
    if (sigma_max < 0) sigma_max = pow2(std::max(k_max - 2, 0));

    if (auto independent = detect_independence(prefix, k_max)) return *independent;

    for (Int sigma = 0; sigma <= sigma_max; ++sigma) {
        for (int k = 1; k + 1 <= k_max; ++k) {
            Int start = pow2(k) - sigma;
            if (start < 1) continue;
            if (pow2(k + 2) - sigma > static_cast<Int>(a.size())) break;

            // Cheap pre-check: the inferred core values must repeat at the
            // next level before anything is regenerated.
            Int next = pow2(k + 1) - sigma;
            bool repeats = true;
            for (Int i = 0; i < pow2(k) && repeats; ++i)
                repeats = a[next + i] - a[next] == a[start + i] - a[start];
            if (!repeats) continue;

            std::vector<Int> inferred(a.begin() + start, a.begin() + next);
            for (Int& v : inferred) v -= a[start];
            if (!is_3_free(inferred)) continue;

            int depth = max_level(a.size(), sigma);
            std::size_t core_terms = static_cast<std::size_t>(pow2(depth));
            SequencePrefix core_seq(NucleatingSet(inferred),
                                    std::max(core_terms, inferred.size()));
            auto core_report = detect_independence(core_seq, depth);
            if (!core_report) continue;
            Int lambda = core_report->lambda;

            bool all_levels = true;
            for (int j = k; j <= depth && all_levels; ++j)
                all_levels = level_holds(a, core_seq.terms(), lambda, sigma, j);
            if (!all_levels) continue;

            RegularityReport report;
            report.certification = Certification::VerifiedRegularToDepth;
            report.lambda = lambda;
            report.sigma = sigma;
            report.core = minimal_nucleating_set(core_seq);
            report.certified_k = k;
            report.adequate_k = minimal_adequate(prefix, core_seq.terms(), lambda, sigma, k);
            report.depth = depth;
            return report;
        }
    }

    RegularityReport not_found;
    not_found.certification = Certification::NotFoundToDepth;
    not_found.depth = k_max;
    return not_found;
}

GrowthConstants growth_constants(const SequencePrefix& prefix, const RegularityReport& report) {
    if (!report.found())
        throw std::invalid_argument("growth constants require detected structure");
    const auto& a = prefix.terms();
    int k0 = report.adequate_k;
    Int sigma = report.sigma;
    if (pow2(k0) - sigma < 1) ++k0;
    if (pow2(k0 + 1) - sigma > static_cast<Int>(a.size()))
        throw std::invalid_argument("prefix spans fewer than two adequate block boundaries");

    // a_{2^k - sigma} = alpha 3^k + beta 2^k at k0 and k0+1 solves to:
    Int A = a[pow2(k0) - sigma];
    Int B = a[pow2(k0 + 1) - sigma];
    GrowthConstants c{Rational(B - 2 * A, pow3(k0)), Rational(3 * A - B, pow2(k0))};

    for (int k = k0; pow2(k) - sigma < static_cast<Int>(a.size()); ++k) {
        Rational predicted = c.alpha * Rational(pow3(k)) + c.beta * Rational(pow2(k));
        if (!(predicted == a[pow2(k) - sigma]))
            throw std::runtime_error("growth formula inconsistent at level " +
                                     std::to_string(k) + ": regularity was mis-detected");
    }
    return c;
}

bool check_faithful(const SequencePrefix& prefix, const SequencePrefix& core_prefix) {
    auto omega = core_prefix.omitted().omega();
    if (!omega) return true;
    const auto& a = prefix.terms();
    for (Int t : core_prefix.terms()) {
        if (t >= *omega) break;
        if (!std::binary_search(a.begin(), a.end(), t)) return false;
    }
    return true;
}

GrowthReport classify_growth(const SequencePrefix& prefix, const RegularityReport& report) {
    GrowthReport out;
    const auto& a = prefix.terms();
    const double expo = std::log2(3.0);

    if (report.found()) {
        out.constants = growth_constants(prefix, report);
        Type1Window window;
        window.n_lo = a.size() / 2;
        window.n_hi = a.size();
        double lo_ratio = 0, hi_ratio = 0;
        bool first = true;
        for (std::size_t n = window.n_lo; n < window.n_hi; ++n) {
            double r = static_cast<double>(a[n]) / std::pow(static_cast<double>(n), expo);
            if (first || r > hi_ratio) hi_ratio = r;
            if (first || r < lo_ratio) lo_ratio = r;
            first = false;
        }
        window.c = hi_ratio;
        window.holds = lo_ratio >= hi_ratio / 2;
        out.type1_window = window;
    } else {
        Type2Fit fit;
        fit.n_lo = std::max<std::size_t>(a.size() / 2, 2);
        fit.n_hi = a.size();
        double sum = 0;
        std::size_t count = 0;
        for (std::size_t n = fit.n_lo; n < fit.n_hi; ++n, ++count)
            sum += static_cast<double>(a[n]) * std::log(static_cast<double>(n)) /
                   (static_cast<double>(n) * static_cast<double>(n));
        fit.c_prime = count ? sum / static_cast<double>(count) : 0;
        double sq = 0;
        for (std::size_t n = fit.n_lo; n < fit.n_hi; ++n) {
            double y = static_cast<double>(a[n]) * std::log(static_cast<double>(n)) /
                       (static_cast<double>(n) * static_cast<double>(n));
            sq += (y - fit.c_prime) * (y - fit.c_prime);
        }
        fit.residual = count ? std::sqrt(sq / static_cast<double>(count)) : 0;
        out.type2_fit = fit;
    }
    return out;
}

}  // namespace stanley
