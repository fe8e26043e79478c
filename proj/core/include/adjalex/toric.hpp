#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adjalex/newton.hpp"

namespace adjalex {

struct DivisorEntry {
    WeightVector vector;
    int stage = 1;
    int parent = -1;  // stage 2: ledger index of the stage-1 face vector
    int point = -1;   // stage 2: index of the intersection point
    long epsilon = 0;
    long m = 0;
    long k = 0;
    std::string label;
};

// Intersection point of the strict transform with the divisor of a face
// vector P. Chart coordinates (u1, v1) of Cone(P, next) satisfy
// u = u1^P.p v1^next.p, v = u1^P.q v1^next.q; translated coordinates are
// v1 = gamma + w + translation(u1).
struct ChartChange {
    std::size_t face = 0;      // face index in the Newton data
    WeightVector P;
    WeightVector next;
    Rational gamma;
    int multiplicity = 1;
    UniPoly translation;        // H(u1), H(0) = 0
    bool singular = false;
    WeightVector S{0, 0};       // weight of the unique face of the translated germ
    TruncBiPoly germ;           // strict transform in (u1, w), singular points only
    int entry_P = -1;
    int entry_S = -1;
};

struct ResolutionData {
    TruncBiPoly germ;
    NewtonData newton;
    Fan fan;
    std::vector<DivisorEntry> entries;
    std::vector<ChartChange> points;  // intersection points with rational coordinate

    bool degenerate() const { return !newton.nondegenerate(); }
    const DivisorEntry& entry(int i) const { return entries.at(static_cast<std::size_t>(i)); }
    std::string display_f() const;
    std::string display_k() const;
};

long weighted_degree(const BiPoly& g, const WeightVector& Q);
long canonical_multiplicity(const WeightVector& Q);

// Strict transform at (face, gamma) in translated coordinates, known for
// u1-degree below the returned bound. w_max limits the w-degree kept.
TruncBiPoly strict_transform_at(const TruncBiPoly& f, const Fan& fan, const NewtonData& nd, std::size_t face_index,
                                const Rational& gamma, const UniPoly& translation, int trunc, int w_max);

std::vector<DivisorEntry> stage2_multiplicities(const DivisorEntry& parent, const Fan& subfan,
                                                const TruncBiPoly& f_tilde);

ResolutionData resolve(const TruncBiPoly& germ, int trunc = 40);

// Full pull-back of phi to the translated chart at cc, keeping terms of
// S-weight below limit.
std::vector<BiPoly> chart_pullbacks(const std::vector<BiPoly>& phis, const ChartChange& cc, long limit);
// m(phi, S) for a singular intersection point
long valuation_at(const BiPoly& phi, const ChartChange& cc);

}  // namespace adjalex
