#pragma once

#include <string>
#include <vector>

#include "adjalex/exactpoly.hpp"

namespace adjalex {

struct WeightVector {
    long p = 1;
    long q = 0;
    long norm() const { return p + q; }
    bool operator==(const WeightVector&) const = default;
};

inline const WeightVector kE1{1, 0};
inline const WeightVector kE2{0, 1};

inline long det(const WeightVector& a, const WeightVector& b) { return a.p * b.q - a.q * b.p; }
WeightVector primitive_vector(long p, long q);
std::string to_string(const WeightVector& w);

// Rational root gamma of the face polynomial in z = v^p / u^q.
struct FaceRoot {
    Rational gamma;
    int multiplicity = 1;
};

// Square-free product of the irrational irreducible factors of the face
// polynomial that share one multiplicity.
struct IrrationalBlock {
    UniPoly poly;
    int multiplicity = 1;
};

struct NewtonFace {
    Exp upper;  // endpoint with the larger second exponent
    Exp lower;
    WeightVector weight;
    long degree = 0;  // weighted degree of the face
    int length = 0;   // number of lattice steps
    BiPoly face_poly;
    UniPoly z_poly;   // face polynomial in z, degree = length
    Rational leading; // coefficient at the upper vertex
    std::vector<FaceRoot> roots;
    std::vector<IrrationalBlock> irrational;
    bool degenerate = false;
};

struct NewtonData {
    std::vector<NewtonFace> faces;  // ordered by increasing q/p
    std::vector<Exp> vertices;
    bool nondegenerate() const;
    std::vector<WeightVector> weights() const;
};

struct Fan {
    std::vector<WeightVector> vectors;  // E1 ... E2
    std::vector<std::size_t> face_markers;
    std::size_t index_of(const WeightVector& w) const;
};

NewtonData newton_boundary(const BiPoly& f);
NewtonData newton_boundary(const TruncBiPoly& f);
// Factor a face polynomial in z into rational roots and irrational blocks.
void factor_face(NewtonFace& face);
Fan canonical_subdivision(const std::vector<WeightVector>& raw);
Fan face_fan(const NewtonData& nd);
long newton_number(const BiPoly& f);
long brieskorn_mu(long p, long q);
std::string fan_to_dot(const Fan& fan);

}  // namespace adjalex
