#include "adjalex_cli/pipeline.hpp"

namespace adjalex::cli {

namespace {

const char* kFixtures = R"JSON(
{
  "tables": [
    {
      "name": "B15,2oB10,3",
      "germ": "u^25+u^10*v^2+v^5",
      "degree": 10,
      "rows": [
        {"k": 3, "ideal": "<u, v>", "rho": 1, "iota": 5},
        {"k": 4, "ideal": "<u^3, v>", "rho": 3, "iota": 15},
        {"k": 5, "ideal": "<u^5, u*v, v^2>", "rho": 6, "iota": 23},
        {"k": 6, "ideal": "<u^7, u^3*v, v^2>", "rho": 10, "iota": 33},
        {"k": 7, "ideal": "<u^10, u^5*v, u*v^2, v^3>", "rho": 16, "iota": 43},
        {"k": 8, "ideal": "<u^12, u^6*v, u^3*v^2, v^3>", "rho": 21, "iota": 52},
        {"k": 9, "ideal": "<u^15, u^8*v, u^5*v^2, u*v^3, v^4>", "rho": 29, "iota": 63}
      ]
    },
    {
      "name": "B25,4",
      "germ": "u^25+v^4",
      "degree": 10,
      "rows": [
        {"k": 3, "ideal": "<u, v>", "rho": 1, "iota": 4},
        {"k": 4, "ideal": "<u^3, v>", "rho": 3, "iota": 12},
        {"k": 5, "ideal": "<u^6, v>", "rho": 6, "iota": 24},
        {"k": 6, "ideal": "<u^8, u^2*v, v^2>", "rho": 10, "iota": 32},
        {"k": 7, "ideal": "<u^11, u^5*v, v^2>", "rho": 16, "iota": 44},
        {"k": 8, "ideal": "<u^13, u^7*v, u*v^2, v^3>", "rho": 21, "iota": 52},
        {"k": 9, "ideal": "<u^16, u^10*v, u^3*v^2, v^3>", "rho": 29, "iota": 62}
      ]
    },
    {
      "name": "B20,5",
      "germ": "u^20+v^5",
      "degree": 10,
      "rows": [
        {"k": 3, "ideal": "<u^2, v>", "rho": 2, "iota": 10},
        {"k": 4, "ideal": "<u^4, v>", "rho": 4, "iota": 20},
        {"k": 5, "ideal": "<u^6, u^2*v, v^2>", "rho": 8, "iota": 30},
        {"k": 6, "ideal": "<u^8, u^4*v, v^2>", "rho": 12, "iota": 40},
        {"k": 7, "ideal": "<u^10, u^6*v, u^2*v^2, v^3>", "rho": 18, "iota": 50},
        {"k": 8, "ideal": "<u^12, u^8*v, u^4*v^2, v^3>", "rho": 24, "iota": 60},
        {"k": 9, "ideal": "<u^14, u^10*v, u^6*v^2, u^2*v^3, v^4>", "rho": 32, "iota": 70}
      ]
    }
  ],
  "ideal_lists": [
    {
      "name": "B9sq_B52_B21",
      "family": "B9sq_B52_B21",
      "degree": 10,
      "rows": [
        {"k": 3, "ideal": "<u, v>"},
        {"k": 4, "ideal": "<u^3, v>"},
        {"k": 5, "ideal": "<u^5, u*v, v^2>"},
        {"k": 6, "ideal": "<u^7, u^3*v, v^2>"},
        {"k": 7, "ideal": "<u^10, u^5*v, u*v^2, v^3>"},
        {"k": 8, "ideal": "<u^12, u^7*v, u^3*v^2, v^3, h2^(2,0)>", "rho": 21},
        {"k": 9, "ideal": "<u^14, u^10*v, u^5*v^2, u*v^3, v^4, r2^(4,0)>", "rho": 29}
      ]
    },
    {
      "name": "B292_B21_B52",
      "family": "B292_B21_B52",
      "degree": 10,
      "rows": [
        {"k": 3, "ideal": "<u, v>"},
        {"k": 4, "ideal": "<u^2, v>"},
        {"k": 5, "ideal": "<u^3, u*v, v^2>"},
        {"k": 6, "ideal": "<u^6, u^2*v, v^2>"},
        {"k": 7, "ideal": "<u^10, u^4*v, u^2*v^2, v^3, h1^(1,1)>", "rho": 15},
        {"k": 8, "ideal": "<u^13, u^5*v, u^3*v^2, u*v^3, v^4, h1^(2,1), h1^(0,2)>", "rho": 20},
        {"k": 9, "ideal": "<u^17, u^7*v, u^5*v^2, u^3*v^3, u*v^4, v^5, r1^(3,1), r1^(1,2), h1^(0,3)>", "rho": 28}
      ]
    }
  ]
}
)JSON";

}  // namespace

const Json& embedded_fixtures() {
    static const Json fixtures = Json::parse(kFixtures);
    return fixtures;
}

}  // namespace adjalex::cli
