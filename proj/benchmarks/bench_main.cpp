#include <benchmark/benchmark.h>

#include "dgcap/beam_fem.hpp"
#include "dgcap/design_io.hpp"
#include "dgcap/device.hpp"
#include "dgcap/electromech.hpp"
#include "dgcap/reflow.hpp"
#include "dgcap/units.hpp"

namespace {

using namespace dgcap;

const LumpedActuator kActuator{1.511, units::from_um(4.5), 3.2e-8, 8.854e-12};
const BeamGeometry kBeam{units::from_um(800), units::from_um(80), units::from_um(2)};
const Material kMaterial{"membrane", 70e9, 0.0, -1.9149e13, 1.0};

void EquilibriumSolve(benchmark::State& state) {
    const double v = 0.9 * pull_in_voltage(kActuator);
    for (auto _ : state) {
        auto eq = solve_equilibrium(kActuator, v);
        benchmark::DoNotOptimize(eq);
    }
}
BENCHMARK(EquilibriumSolve);

void CvCurveTrace(benchmark::State& state) {
    const DualGapDesign design = paper_device_preset().design;
    for (auto _ : state) {
        auto curve = trace_cv_curve(design, 12.0, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(curve);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(CvCurveTrace)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void FemAssembleSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BeamMesh mesh = build_mesh(kBeam, kMaterial, n);
    LoadCase load;
    load.distributed_load = {{0.0, -1e-3}, {kBeam.length, -1e-3}};
    for (auto _ : state) {
        auto field = assemble_and_solve(mesh, load);
        benchmark::DoNotOptimize(field);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(FemAssembleSolve)->RangeMultiplier(2)->Range(32, 2048)->Complexity();

void ReleaseCalibration(benchmark::State& state) {
    const BeamMesh mesh = build_mesh(kBeam, kMaterial, 64);
    for (auto _ : state) {
        auto gradient =
            calibrate_stress_gradient(mesh, kMaterial, units::from_um(-4.5));
        benchmark::DoNotOptimize(gradient);
    }
}
BENCHMARK(ReleaseCalibration);

void TriLayerSurface(benchmark::State& state) {
    TriLayerSpec spec;
    spec.motif_width = units::from_um(800);
    spec.cavity_depth = units::from_um(4.5);
    spec.layers[0] = {units::from_um(4.5), {350.0}};
    spec.layers[1] = {units::from_um(1.0), {350.0}};
    spec.layers[2] = {units::from_um(0.5), {350.0}};
    spec.n_samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto surface = tri_layer_process(spec);
        benchmark::DoNotOptimize(surface);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(TriLayerSurface)->RangeMultiplier(4)->Range(257, 16448)->Complexity();

void CoupledElectrostatic(benchmark::State& state) {
    const BeamMesh mesh = build_mesh(kBeam, {"m", 70e9, 0.0, 0.0, 1.0}, 32);
    HeightProfile gap;
    gap.x_step = kBeam.length / 256.0;
    gap.heights.assign(257, units::from_um(4.5));
    const std::vector<std::pair<double, double>> spans = {
        {0.375 * kBeam.length, 0.625 * kBeam.length}};
    for (auto _ : state) {
        auto field = coupled_electrostatic_solve(mesh, gap, 5.0, spans, kBeam.width);
        benchmark::DoNotOptimize(field);
    }
}
BENCHMARK(CoupledElectrostatic);

}  // namespace

BENCHMARK_MAIN();
