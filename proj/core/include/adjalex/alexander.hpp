#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjalex/adjunction.hpp"
#include "adjalex/curves.hpp"

namespace adjalex {

// x = x0 + u, y = y0 + v + phi(u)
struct SingularPoint {
    std::string label;
    Rational x0 = 0;
    Rational y0 = 0;
    UniPoly phi;
    TruncBiPoly germ;
    ResolutionData resolution;
};

struct GlobalCurve {
    std::optional<BiPoly> f;  // absent for germ-only configurations
    long d = 0;
    std::vector<SingularPoint> points;
    long r = 0;                       // component count, 0 when unknown
    bool irreducible_asserted = false;
};

SingularPoint make_point(const BiPoly& f, const Rational& x0, const Rational& y0, const UniPoly& phi,
                         int trunc = 40, const std::string& label = "O");
// phi found by the maximal-contact search
SingularPoint make_point_auto(const BiPoly& f, const Rational& x0, const Rational& y0, int phi_order = 40,
                              int trunc = 40, const std::string& label = "O");
SingularPoint germ_point(const BiPoly& germ, int trunc = 40, const std::string& label = "O");

// the line at infinity meets C transversally iff the top form is square-free
bool line_at_infinity_generic(const BiPoly& f);

struct SigmaMatrix {
    long k = 0;
    std::vector<Exp> columns;  // x^i y^j, i + j <= k - 3
    Matrix m;                  // rows: quotient coordinates of every point
    std::vector<long> rho;     // per point
};

struct PointData {
    std::vector<AdjunctionIdeal> ideals;  // index k - 1
    std::vector<long> iota;
};

PointData point_data(const SingularPoint& P, long d);

SigmaMatrix sigma_matrix(const GlobalCurve& C, const std::vector<PointData>& data, long k);

enum class EllMode { Auto, Shortcut, Matrix, AssertInjective };

struct EllRow {
    long k = 0;
    long sum_rho = 0;
    long sum_iota = 0;
    long columns = 0;
    bool hypothesis = false;  // sum iota > d (k - 3)
    std::string path;         // matrix | shortcut | asserted
    long rank = -1;
    long kernel_dim = -1;
    std::vector<BiPoly> kernel;  // content-normalised generators
    long ell = 0;
};

struct EllResult {
    std::vector<EllRow> rows;  // k = 1 .. d-1
    std::vector<std::string> warnings;
    std::map<long, long> ell() const;
};

EllResult ell_values(const GlobalCurve& C, const std::vector<PointData>& data, EllMode mode, bool parallel = false);

struct AlexanderPolynomial {
    long d = 0;
    long r = 0;
    std::map<long, long> ell;
    std::vector<std::pair<long, long>> factors;  // (n, e): Phi_n^e, n = 1 first
    UniPoly reduced;
    UniPoly full;  // empty when r is unknown
    std::string factored() const;
};

UniPoly cyclotomic(long n);
AlexanderPolynomial assemble(const std::map<long, long>& ell, long d, long r);
UniPoly generic_delta(long p, long q);

// clears denominators and divides by the content; leading coefficient positive
BiPoly normalize_content(const BiPoly& g);

}  // namespace adjalex
