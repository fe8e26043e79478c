#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adjalex/alexander.hpp"
#include "adjalex/branches.hpp"
#include "adjalex/pluecker.hpp"
#include "adjalex_cli/pipeline.hpp"

using namespace adjalex;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

struct TableRow {
    long k;
    const char* ideal;
    long rho;
    long iota;
};

void check_table(Outcome& o, const char* germ, const std::vector<TableRow>& rows) {
    BiPoly f = parse_poly(germ, kUV);
    ResolutionData rd = resolve(TruncBiPoly{f, kExact});
    for (const auto& r : rows) {
        AdjunctionIdeal J = adjunction_ideal(rd, 10, r.k);
        std::string k = "k=" + std::to_string(r.k);
        o.check(J.to_string() == r.ideal, k + " ideal " + J.to_string());
        o.check(J.rho == r.rho, k + " rho " + std::to_string(J.rho));
        long i = iota(J, TruncBiPoly{f, kExact});
        o.check(i == r.iota, k + " iota " + std::to_string(i));
    }
}

const std::vector<TableRow> kTableA{{3, "<u, v>", 1, 5},
                                    {4, "<u^3, v>", 3, 15},
                                    {5, "<u^5, u*v, v^2>", 6, 23},
                                    {6, "<u^7, u^3*v, v^2>", 10, 33},
                                    {7, "<u^10, u^5*v, u*v^2, v^3>", 16, 43},
                                    {8, "<u^12, u^6*v, u^3*v^2, v^3>", 21, 52},
                                    {9, "<u^15, u^8*v, u^5*v^2, u*v^3, v^4>", 29, 63}};
const std::vector<TableRow> kTableB{{3, "<u, v>", 1, 4},
                                    {4, "<u^3, v>", 3, 12},
                                    {5, "<u^6, v>", 6, 24},
                                    {6, "<u^8, u^2*v, v^2>", 10, 32},
                                    {7, "<u^11, u^5*v, v^2>", 16, 44},
                                    {8, "<u^13, u^7*v, u*v^2, v^3>", 21, 52},
                                    {9, "<u^16, u^10*v, u^3*v^2, v^3>", 29, 62}};
const std::vector<TableRow> kTableC{{3, "<u^2, v>", 2, 10},
                                    {4, "<u^4, v>", 4, 20},
                                    {5, "<u^6, u^2*v, v^2>", 8, 30},
                                    {6, "<u^8, u^4*v, v^2>", 12, 40},
                                    {7, "<u^10, u^6*v, u^2*v^2, v^3>", 18, 50},
                                    {8, "<u^12, u^8*v, u^4*v^2, v^3>", 24, 60},
                                    {9, "<u^14, u^10*v, u^6*v^2, u^2*v^3, v^4>", 32, 70}};

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

GlobalCurve five_conics() {
    BiPoly f = BiPoly::constant(1);
    for (int l = 1; l <= 5; ++l) f = f * parse_poly("y+x^2+" + std::to_string(l) + "*y^2");
    GlobalCurve C;
    C.f = f;
    C.d = 10;
    C.r = 5;
    C.points.push_back(make_point_auto(f, 0, 0));
    return C;
}

GlobalCurve family_curve(const std::string& fam) {
    TorusCurveSpec spec = family_instance(fam, {});
    GlobalCurve C;
    C.f = spec.f();
    C.d = 10;
    C.r = 1;
    C.irreducible_asserted = true;
    C.points.push_back(make_point_auto(*C.f, 0, 0));
    return C;
}

std::vector<PointData> data_of(const GlobalCurve& C) {
    std::vector<PointData> out;
    for (const auto& P : C.points) out.push_back(point_data(P, C.d));
    return out;
}

std::vector<long> ell_range(const EllResult& er, long lo, long hi) {
    auto m = er.ell();
    std::vector<long> out;
    for (long k = lo; k <= hi; ++k) out.push_back(m[k]);
    return out;
}

bool rank_nullity(const EllResult& er) {
    for (const auto& row : er.rows)
        if (row.path == "matrix" && row.rank + row.kernel_dim != row.columns) return false;
    return true;
}

std::vector<long> ms(const ResolutionData& rd) {
    std::vector<long> out;
    for (const auto& e : rd.entries) out.push_back(e.m);
    return out;
}

std::vector<long> ks(const ResolutionData& rd) {
    std::vector<long> out;
    for (const auto& e : rd.entries) out.push_back(e.k);
    return out;
}

void c1(Outcome& o) { check_table(o, "u^25+u^10*v^2+v^5", kTableA); }
void c2(Outcome& o) { check_table(o, "u^25+v^4", kTableB); }

void c3(Outcome& o) {
    check_table(o, "u^20+v^5", kTableC);
    GlobalCurve C = five_conics();
    EllResult er = ell_values(C, data_of(C), EllMode::Matrix);
    std::vector<long> l = ell_range(er, 3, 9);
    o.check(l == std::vector<long>{1, 1, 2, 2, 3, 3, 4}, "ell " + join(l));
}

void c4(Outcome& o) {
    for (const char* g : {"u^25+u^10*v^2+v^5", "u^25+v^4"}) {
        GlobalCurve C;
        C.d = 10;
        C.r = 1;
        C.irreducible_asserted = true;
        C.points.push_back(germ_point(parse_poly(g, kUV)));
        EllResult er = ell_values(C, data_of(C), EllMode::Shortcut);
        AlexanderPolynomial A = assemble(er.ell(), 10, 1);
        o.check(A.full == UniPoly({1, -1, 1, -1, 1}), std::string(g) + " gives " + A.full.to_string());
    }
}

void c5(Outcome& o) {
    std::map<long, long> ell{{3, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 3}, {8, 3}, {9, 4}};
    AlexanderPolynomial A = assemble(ell, 10, 5);
    o.check(A.factored() == "(t-1)^4 (t+1)^4 (Φ10)^4 (Φ5)^3", "factored " + A.factored());
    UniPoly want = UniPoly::constant(1);
    for (int i = 0; i < 4; ++i) want = want * UniPoly({-1, 1}) * UniPoly({1, 1}) * UniPoly({1, -1, 1, -1, 1});
    for (int i = 0; i < 3; ++i) want = want * UniPoly({1, 1, 1, 1, 1});
    o.check(A.full == want, "expanded coefficients");
    for (const auto& c : A.full.coeffs()) o.check(c.get_den() == 1, "integer coefficients");
}

void c6(Outcome& o) {
    GlobalCurve C = family_curve("B9sq_B52_B21");
    const ResolutionData& rd = C.points[0].resolution;
    const char* want[] = {"<u, v>",
                          "<u^3, v>",
                          "<u^5, u*v, v^2>",
                          "<u^7, u^3*v, v^2>",
                          "<u^10, u^5*v, u*v^2, v^3>",
                          "<u^12, u^7*v, u^3*v^2, v^3, h2^(2,0)>",
                          "<u^14, u^10*v, u^5*v^2, u*v^3, v^4, r2^(4,0)>"};
    for (long k = 3; k <= 9; ++k) {
        AdjunctionIdeal J = adjunction_ideal(rd, 10, k);
        std::string tag = "k=" + std::to_string(k);
        o.check(J.to_string() == want[k - 3], tag + " ideal " + J.to_string());
        long i = iota(J, C.points[0].germ);
        o.check(i > 10 * (k - 3), tag + " iota " + std::to_string(i));
        if (k == 8) o.check(J.rho == 21, "rho8 " + std::to_string(J.rho));
        if (k == 9) o.check(J.rho == 29, "rho9 " + std::to_string(J.rho));
    }
}

void c7(Outcome& o) {
    GlobalCurve C = family_curve("B292_B21_B52");
    const ResolutionData& rd = C.points[0].resolution;
    const char* want[] = {"<u, v>",
                          "<u^2, v>",
                          "<u^3, u*v, v^2>",
                          "<u^6, u^2*v, v^2>",
                          "<u^10, u^4*v, u^2*v^2, v^3, h1^(1,1)>",
                          "<u^13, u^5*v, u^3*v^2, u*v^3, v^4, h1^(2,1), h1^(0,2)>",
                          "<u^17, u^7*v, u^5*v^2, u^3*v^3, u*v^4, v^5, r1^(3,1), r1^(1,2), h1^(0,3)>"};
    const long rho[] = {0, 0, 0, 0, 15, 20, 28};
    for (long k = 3; k <= 9; ++k) {
        AdjunctionIdeal J = adjunction_ideal(rd, 10, k);
        std::string tag = "k=" + std::to_string(k);
        o.check(J.to_string() == want[k - 3], tag + " ideal " + J.to_string());
        if (rho[k - 3]) o.check(J.rho == rho[k - 3], tag + " rho " + std::to_string(J.rho));
    }
}

void c8(Outcome& o) {
    GlobalCurve C = family_curve("B292_B21_B52");
    EllResult er = ell_values(C, data_of(C), EllMode::Matrix);
    std::vector<long> dims;
    const EllRow* k9 = nullptr;
    for (const auto& row : er.rows) {
        if (row.k >= 3) dims.push_back(row.kernel_dim);
        if (row.k == 9) k9 = &row;
    }
    o.check(dims == std::vector<long>{0, 1, 2, 2, 1, 1, 1}, "kernel dims " + join(dims));
    std::vector<long> l = ell_range(er, 1, 9);
    o.check(l == std::vector<long>{0, 0, 0, 0, 0, 0, 1, 0, 1}, "ell " + join(l));
    AlexanderPolynomial A = assemble(er.ell(), 10, 1);
    o.check(A.reduced == UniPoly({1, -1, 1, -1, 1}), "reduced " + A.reduced.to_string());
    BiPoly want = normalize_content(parse_poly(
        "y*(675*y^5-(990*x+1458)*y^4-(1251*x^2+522*x+729)*y^3+(154*x^2-522*x+468)*x*y^2+(415*x^4+1144*x^3)*y+676*x^5)"));
    bool gen = k9 && k9->kernel.size() == 1 && normalize_content(k9->kernel[0]) == want;
    o.check(gen, "k=9 generator " + (k9 && !k9->kernel.empty() ? normalize_content(k9->kernel[0]).to_string() : "none"));
}

void c9(Outcome& o) {
    const ResolutionData& a = family_curve("B9sq_B52_B21").points[0].resolution;
    o.check(ms(a) == std::vector<long>{5, 10, 14, 18, 40, 20, 42, 44, 90, 45}, "m " + join(ms(a)));
    o.check(ks(a) == std::vector<long>{1, 2, 3, 4, 10, 5, 11, 12, 26, 13}, "k " + join(ks(a)));
    GlobalCurve C = family_curve("B292_B21_B52");
    const ResolutionData& b = C.points[0].resolution;
    std::vector<long> m{5}, k{1};
    for (long i = 10; i <= 34; i += 2) m.push_back(i);
    for (long i = 2; i <= 14; ++i) k.push_back(i);
    m.insert(m.end(), {70, 35, 12, 14, 30, 15});
    k.insert(k.end(), {30, 15, 3, 4, 10, 5});
    o.check(ms(b) == m, "m " + join(ms(b)));
    o.check(ks(b) == k, "k " + join(ks(b)));
}

void c10(Outcome& o) {
    Fan a = canonical_subdivision({kE1, {1, 2}, {2, 9}, kE2});
    std::vector<WeightVector> wa{kE1, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 9}, {1, 5}, kE2};
    o.check(a.vectors == wa, "first fixture");
    Fan b = canonical_subdivision({kE1, {2, 5}, kE2});
    std::vector<WeightVector> wb{kE1, {1, 1}, {1, 2}, {2, 5}, {1, 3}, kE2};
    o.check(b.vectors == wb, "second fixture");
}

void c11(Outcome& o) {
    const long cases[][3] = {{15, 2, 14}, {10, 3, 18}, {29, 2, 28}, {20, 5, 76}, {6, 3, 10}};
    for (const auto& c : cases) {
        BiPoly f = BiPoly::monomial(1, static_cast<int>(c[0]), 0) + BiPoly::monomial(1, 0, static_cast<int>(c[1]));
        std::string tag = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
        o.check(brieskorn_mu(c[0], c[1]) == c[2], tag + " closed form");
        o.check(newton_number(f) == c[2], tag + " Newton number");
    }
}

std::vector<std::string> survivors(const char* type) {
    std::vector<std::string> out;
    for (const auto& v : enumerate_splittings(10, {record_from_profile("O", parse_profile(type))}))
        if (v.feasible()) out.push_back(partition_string(v.degrees));
    return out;
}

void c12(Outcome& o) {
    auto a = survivors("B29,2oB6,3");
    o.check(a == std::vector<std::string>{"{10}", "{9,1}"}, "B29,2oB6,3");
    auto b = survivors("B20,5");
    o.check(b == std::vector<std::string>{"{2,2,2,2,2}"}, "B20,5");
}

void c13(Outcome& o) {
    o.check(generic_delta(5, 2) == UniPoly({1, -1, 1, -1, 1}), "(5,2)");
    o.check(generic_delta(3, 2) == UniPoly({1, -1, 1}), "(3,2)");
}

void c14(Outcome& o) {
    std::mt19937 rng(cli::kDefaultSeed);
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_int_distribution<int> e(1, 7);
    int pairs = 0, tries = 0;
    while (pairs < 120 && tries < 5000) {
        ++tries;
        BiPoly f = BiPoly::monomial(1, 0, e(rng)) + BiPoly::monomial(c(rng) == 0 ? 1 : c(rng), e(rng) + 1, 0) +
                   BiPoly::monomial(c(rng), e(rng), 1) + BiPoly::monomial(c(rng), e(rng), e(rng));
        BiPoly g = BiPoly::monomial(c(rng) == 0 ? 1 : c(rng), 0, e(rng)) + BiPoly::monomial(c(rng), e(rng), 0) +
                   BiPoly::monomial(c(rng), e(rng), 1);
        if (sgn(f.coeff(0, 0)) != 0 || sgn(g.coeff(0, 0)) != 0 || f.is_zero() || g.is_zero()) continue;
        try {
            long r = resultant_order(f, g);
            long i = intersection_multiplicity(f, g);
            o.check(i == r, "pair " + f.to_string() + " / " + g.to_string());
            ++pairs;
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::Precondition && err.kind() != ErrorKind::Unsupported) throw;
        }
    }
    o.check(pairs >= 100, "only " + std::to_string(pairs) + " valid pairs");

    for (const char* g : {"u^25+u^10*v^2+v^5", "u^25+v^4", "u^20+v^5"}) {
        ResolutionData rd = resolve(TruncBiPoly{parse_poly(g, kUV), kExact});
        for (long k = 1; k <= 9; ++k) {
            AdjunctionIdeal J = adjunction_ideal(rd, 10, k);
            o.check(rho_staircase(J) == rho_linear(J), std::string(g) + " staircase k=" + std::to_string(k));
        }
    }

    for (const GlobalCurve& C : {five_conics(), family_curve("B292_B21_B52"), family_curve("B9sq_B52_B21")}) {
        EllResult er = ell_values(C, data_of(C), EllMode::Matrix);
        o.check(rank_nullity(er), "rank-nullity");
    }

    for (const char* fam : {"B292_B21_B52", "B9sq_B52_B21"}) {
        cli::JobConfig a;
        a.command = "analyze";
        a.input = cli::Json{{"curve", {{"family", fam}}}, {"components", 1}};
        cli::JobConfig b = a;
        b.parallel = true;
        o.check(cli::render(cli::run(a), "json") == cli::render(cli::run(b), "json"), std::string("determinism ") + fam);
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known_red;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--known-red" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) known_red.insert(std::stoi(tok));
        }
    }
    const std::vector<std::function<void(Outcome&)>> criteria{c1, c2, c3, c4, c5, c6, c7,
                                                              c8, c9, c10, c11, c12, c13, c14};
    int unexpected = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        Outcome o;
        try {
            criteria[n](o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        int id = static_cast<int>(n + 1);
        std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << o.detail.str() << std::endl;
        if (!o.ok && !known_red.count(id)) ++unexpected;
    }
    return unexpected == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
