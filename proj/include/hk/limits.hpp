#pragma once

// Branch-wise limits at X -> 0 of the roots of q(X, T) over K = Q((t)), and
// the affine relation between v(x) and v(f(x)) along each branch.

#include <vector>

#include "hk/laurent.hpp"
#include "hk/puiseux.hpp"
#include "hk/series_poly.hpp"

namespace hk::limits {

struct LimitBranch {
    puiseux::PuiseuxSeries<LaurentSeries> branch;
    int multiplicity = 1;
    bool vertical = false;  // branch identically zero
    bool infinite = false;  // limit is the point at infinity
    LaurentSeries limit;    // finite limit
    long p = 0, q = 1;      // least exponent p/q in lowest terms
    Rational beta;          // v(leading coefficient)
};

struct BranchPartition {
    SeriesPoly<LaurentSeries> q{1};
    std::vector<LimitBranch> branches;
};

BranchPartition branch_limits(const SeriesPoly<LaurentSeries>& q, int order = 12,
                              int tprec = LaurentSeries::kDefaultPrecision);

struct SlopeSample {
    int k = 0;
    bool admissible = false;  // k is a multiple of the ramification
    bool infinite = false;    // f(t^k) = 0 on a vertical branch
    int valuation = 0;        // v(f(t^k))
    bool on_line = false;
    int agreement = 0;        // v(f(t^k) - branch(t^k))
    LaurentSeries value;
};

struct SlopeReport {
    LimitBranch branch;
    std::vector<SlopeSample> samples;
    bool pass = false;
};

/// Samples f(t^k) on branch j by Newton's lemma seeded with the branch.
SlopeReport slope_line_check(const SeriesPoly<LaurentSeries>& q, int j, const std::vector<int>& ks, int order = 12,
                             int tprec = LaurentSeries::kDefaultPrecision);

}  // namespace hk::limits
