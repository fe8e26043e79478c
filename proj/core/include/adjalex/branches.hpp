#pragma once

#include <string>
#include <vector>

#include "adjalex/newton.hpp"

namespace adjalex {

// One branch u = alpha t^N, v = v_series(t), or a family of `count`
// conjugate branches u = alpha t^N, v = v_series(t) + lambda t^M w with
// w^p = z t^q for the roots z of `block` (uniformiser s, t = s^p).
struct BranchParam {
    bool axis = false;  // the branch u = 0, v = t
    Rational alpha = 1;
    long N = 1;
    TruncSeries v_series;
    int count = 1;
    bool family = false;
    Rational lambda = 1;
    long M = 0;
    WeightVector face{1, 1};
    UniPoly block;

    long ramification() const { return family ? N * face.p : N; }
    std::string describe() const;
};

std::vector<BranchParam> puiseux_branches(const TruncBiPoly& f, int order);
std::vector<BranchParam> puiseux_branches(const BiPoly& f, int order);

// ord of g along one branch of the record (per branch, not multiplied by count)
long branch_order(const BiPoly& g, const BranchParam& br);

// I(f, g; O), growing the branch precision as needed
long intersection_multiplicity(const BiPoly& f, const BiPoly& g, int order = 16);

// certifies that f has no repeated factor; throws Precondition otherwise
void certify_squarefree(const BiPoly& f);

}  // namespace adjalex
