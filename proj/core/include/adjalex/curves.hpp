#pragma once

#include <map>
#include <string>
#include <vector>

#include "adjalex/newton.hpp"

namespace adjalex {

struct FamilyPredicate {
    std::string text;
    bool holds = true;
    bool fatal = true;  // violation is an error; otherwise it selects a stratum
    std::string consequence;
};

struct TorusCurveSpec {
    std::string family;  // empty for inline curves
    std::map<std::string, Rational> params;
    BiPoly f2;
    BiPoly f5;
    std::vector<FamilyPredicate> predicates;
    std::vector<std::string> flags;
    BiPoly f() const;
};

BiPoly torus_compose(const BiPoly& f2, const BiPoly& f5, std::vector<std::string>* flags = nullptr);

std::vector<std::string> family_names();
std::vector<std::string> family_parameters(const std::string& family);
TorusCurveSpec family_instance(const std::string& family, const std::map<std::string, Rational>& params);

struct LocalModel {
    TruncBiPoly germ;
    TruncSeries phi;
    TruncSeries psi;  // f2(u, phi(u)) when f2 is known
    NewtonData newton;
    std::map<std::string, Rational> constants;
};

// Maximal-contact coordinate change y = v + phi(u): depth-first search over
// integer-slope faces with a multiple rational root.
UniPoly auto_phi(const BiPoly& f, int order);

LocalModel local_model(const BiPoly& f, const UniPoly& phi, const BiPoly* f2 = nullptr);
LocalModel local_model_auto(const BiPoly& f, int order, const BiPoly* f2 = nullptr);

}  // namespace adjalex
