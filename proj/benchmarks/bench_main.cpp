#include <benchmark/benchmark.h>

#include "adjalex/alexander.hpp"
#include "adjalex/branches.hpp"

using namespace adjalex;

namespace {

const BiPoly& two_face_germ() {
    static const BiPoly g = parse_poly("u^25+u^10*v^2+v^5", kUV);
    return g;
}

void BM_Resolve(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(resolve(TruncBiPoly{two_face_germ(), kExact}));
}
BENCHMARK(BM_Resolve);

void BM_AdjunctionIdeal(benchmark::State& st) {
    ResolutionData rd = resolve(TruncBiPoly{two_face_germ(), kExact});
    for (auto _ : st) benchmark::DoNotOptimize(adjunction_ideal(rd, 10, st.range(0)));
}
BENCHMARK(BM_AdjunctionIdeal)->DenseRange(3, 9, 3);

void BM_Puiseux(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(puiseux_branches(two_face_germ(), static_cast<int>(st.range(0))));
}
BENCHMARK(BM_Puiseux)->Arg(8)->Arg(16);

void BM_FamilyPoint(benchmark::State& st) {
    BiPoly f = family_instance("B292_B21_B52", {}).f();
    for (auto _ : st) benchmark::DoNotOptimize(make_point_auto(f, 0, 0));
}
BENCHMARK(BM_FamilyPoint)->Unit(benchmark::kMillisecond);

void BM_EllMatrix(benchmark::State& st) {
    BiPoly f = BiPoly::constant(1);
    for (int l = 1; l <= 5; ++l) f = f * parse_poly("y+x^2+" + std::to_string(l) + "*y^2");
    GlobalCurve C;
    C.f = f;
    C.d = 10;
    C.r = 5;
    C.points.push_back(make_point_auto(f, 0, 0));
    std::vector<PointData> data{point_data(C.points[0], C.d)};
    for (auto _ : st) benchmark::DoNotOptimize(ell_values(C, data, EllMode::Matrix));
}
BENCHMARK(BM_EllMatrix)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
