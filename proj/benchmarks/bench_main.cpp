#include <benchmark/benchmark.h>

#include <random>

#include "folcalc/polynomial.hpp"

using namespace folcalc;

static Polynomial dense_homog(int nvars, int deg, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<Term> ts;
    // all monomials of total degree `deg` in nvars variables
    Monomial m(nvars);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == nvars - 1) {
            m.exp[static_cast<std::size_t>(i)] = rem;
            int c = coef(rng);
            if (c) ts.push_back(Term{Rational(c), m});
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            m.exp[static_cast<std::size_t>(i)] = e;
            self(self, i + 1, rem - e);
        }
    };
    rec(rec, 0, deg);
    return Polynomial::from_terms(nvars, std::move(ts));
}

static void BM_poly_multiply(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    Polynomial a = dense_homog(4, deg, 1), b = dense_homog(4, deg, 2);
    for (auto _ : state) {
        Polynomial c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_poly_multiply)->Arg(3)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
