#pragma once

#include <string>
#include <vector>

#include "adjalex/branches.hpp"
#include "adjalex/linalg.hpp"
#include "adjalex/toric.hpp"

namespace adjalex {

// m(phi, E) >= threshold along a face divisor (point < 0) or along the
// divisor S of a singular intersection point.
struct ValuationCondition {
    WeightVector weight;
    int point = -1;
    long threshold = 0;
    std::string label;
};

struct Candidate {
    std::string name;  // h1, r1, ...
    BiPoly poly;
};

struct ExtraGenerator {
    std::string base;
    int r = 0;
    int s = 0;
    BiPoly poly;  // u^r v^s * base
    std::string label() const;
};

struct AdjunctionIdeal {
    long d = 0;
    long k = 0;
    int D = 0;  // every monomial of total degree >= D is a member
    std::vector<Exp> monomial_generators;  // staircase, decreasing u-exponent
    std::vector<ExtraGenerator> extra_generators;
    std::vector<Candidate> bases;  // polynomials named by the extra generators
    std::vector<Exp> basis;        // monomials of degree < D
    Matrix constraints;            // J / m^D is the kernel; independent rows
    long rho = 0;                  // codimension, rank of constraints
    bool complete = true;          // generators span J modulo m^D

    std::string to_string() const;
    std::vector<BiPoly> generators() const;
    bool is_monomial() const { return extra_generators.empty(); }
};

std::vector<ValuationCondition> adjunction_conditions(const ResolutionData& rd, long d, long k);

bool membership(const BiPoly& phi, const ResolutionData& rd, long d, long k);

AdjunctionIdeal ideal_nondegenerate(const NewtonData& nd, long d, long k);
// uses correction_family(rd) when candidates is null
AdjunctionIdeal ideal_degenerate(const ResolutionData& rd, long d, long k,
                                 const std::vector<Candidate>* candidates = nullptr);
AdjunctionIdeal adjunction_ideal(const ResolutionData& rd, long d, long k);

// h = v^p - gamma u^q for each singular point, followed by corrections that
// remove the lowest w-free term of the pull-back.
std::vector<Candidate> correction_family(const ResolutionData& rd, int levels = 2);

long rho_staircase(const AdjunctionIdeal& J);
long rho_linear(const AdjunctionIdeal& J);

// image of g in O/J in the coordinates given by J.constraints
std::vector<Rational> quotient_image(const AdjunctionIdeal& J, const BiPoly& g);
bool contains(const AdjunctionIdeal& J, const BiPoly& g);

long iota(const AdjunctionIdeal& J, const std::vector<BranchParam>& branches);
// expands the branches of germ, growing the precision as needed
long iota(const AdjunctionIdeal& J, const TruncBiPoly& germ, int order = 16);
// min over `rounds` seeded random combinations of ord_u Res(germ, g)
long iota_oracle(const AdjunctionIdeal& J, const BiPoly& germ, unsigned seed, int rounds = 3);

std::string monomial_string(const Exp& e, const VarNames& names = kUV);

}  // namespace adjalex
