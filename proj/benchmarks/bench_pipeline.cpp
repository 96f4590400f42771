#include <benchmark/benchmark.h>

#include "quartjac/curvefam.hpp"
#include "quartjac/latticecert.hpp"

using namespace quartjac;

static void JEval(benchmark::State& state) {
  OrderSpec order = OrderSpec::create(30);
  Precision prec = state.range(0);
  ComplexBall tau = tau_of_form({1, 0, 30}, order, prec + 64);
  for (auto _ : state) {
    ComplexBall j = j_eval(tau, prec);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(JEval)->Arg(64)->Arg(256)->Arg(1024);

static void ClassPolynomial(benchmark::State& state) {
  OrderSpec order = OrderSpec::create(state.range(0));
  for (auto _ : state) {
    ClassPolyResult r = class_polynomial(order);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ClassPolynomial)->Arg(6)->Arg(30)->Arg(210);

static void AlphaPipelineBench(benchmark::State& state) {
  for (auto _ : state) {
    AlphaTable t = build_alpha_table(state.range(0));
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(AlphaPipelineBench)->Arg(6)->Arg(30)->Unit(benchmark::kMillisecond);

static void LatticeCertificate(benchmark::State& state) {
  for (auto _ : state) {
    IsoCertificate c = build_certificate(30, 15);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(LatticeCertificate);

BENCHMARK_MAIN();
