// Serial reference kernels against their OpenMP versions on the larger
// desk-scale monoids. Each benchmark first checks the two agree.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <deque>
#include <iostream>
#include <map>

#include "munn/kernels.hpp"
#include "munn/lattice.hpp"
#include "munn/monoid.hpp"
#include "munn/representation.hpp"

using namespace munn;

namespace {

  struct Input {
    MonoidPtr           monoid;
    kernels::CayleyTree tree;
    std::vector<Matrix> mats;  // a representation, when there is one
  };

  // Breadth-first Cayley tree over the monoid's own generators.
  kernels::CayleyTree cayley_tree(FiniteMonoid const& m) {
    kernels::CayleyTree t;
    t.size       = m.size();
    t.generators = m.generators().size();
    t.right.resize(t.size * t.generators);
    t.parent.assign(t.size, 0);
    t.via.assign(t.size, 0);
    for (index_t x = 0; x < t.size; ++x) {
      for (std::size_t g = 0; g < t.generators; ++g) {
        t.right[x * t.generators + g] = m.multiply(x, m.generators()[g]);
      }
    }
    std::vector<char>   seen(t.size, 0);
    std::deque<index_t> queue{m.identity()};
    seen[m.identity()] = 1;
    while (!queue.empty()) {
      auto const x = queue.front();
      queue.pop_front();
      t.order.push_back(x);
      for (std::size_t g = 0; g < t.generators; ++g) {
        auto const y = t.right[x * t.generators + g];
        if (!seen[y]) {
          seen[y]     = 1;
          t.parent[y] = x;
          t.via[y]    = static_cast<index_t>(g);
          queue.push_back(y);
        }
      }
    }
    return t;
  }

  Input const& input(std::string const& name) {
    static std::map<std::string, Input> cache;
    auto it = cache.find(name);
    if (it != cache.end()) {
      return it->second;
    }
    Input in;
    if (name == "I5") {
      auto const e = symmetric_inverse_monoid(5);
      in.monoid    = e.monoid;
      in.mats      = mapping_rep(e).matrices();
    } else if (name == "T4") {
      auto const e = full_transformation_monoid(4);
      in.monoid    = e.monoid;
      in.mats      = mapping_rep(e).matrices();
    } else {
      SGLMonoid const sgl(std::make_shared<LatticeInstance const>(
          make_lattice(LatticeKind::ordered_partitions_zero, 4)));
      in.monoid = sgl.enumerate().monoid;
    }
    in.tree = cayley_tree(*in.monoid);
    if (kernels::fill_table(in.tree) != in.monoid->table()
        || kernels::serial::fill_table(in.tree) != in.monoid->table()) {
      std::cerr << "fill_table disagrees with the enumerated table for " << name << "\n";
      std::abort();
    }
    return cache.emplace(name, std::move(in)).first->second;
  }

  void bm_fill_table(benchmark::State& state, std::string const& name, bool parallel) {
    auto const& in = input(name);
    for (auto _ : state) {
      benchmark::DoNotOptimize(parallel ? kernels::fill_table(in.tree)
                                        : kernels::serial::fill_table(in.tree));
    }
  }

  void bm_principal_ideals(benchmark::State& state, std::string const& name, bool parallel) {
    auto const& in = input(name);
    auto const& t  = in.monoid->table();
    auto const  n  = in.monoid->size();
    if (!(kernels::principal_ideals(t, n).two_sided == kernels::serial::principal_ideals(t, n).two_sided)) {
      state.SkipWithError("principal_ideals: serial and parallel differ");
      return;
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(parallel ? kernels::principal_ideals(t, n)
                                        : kernels::serial::principal_ideals(t, n));
    }
  }

  void bm_count_inverses(benchmark::State& state, std::string const& name, bool parallel) {
    auto const& in = input(name);
    auto const& t  = in.monoid->table();
    auto const  n  = in.monoid->size();
    if (kernels::count_inverses(t, n) != kernels::serial::count_inverses(t, n)) {
      state.SkipWithError("count_inverses: serial and parallel differ");
      return;
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(parallel ? kernels::count_inverses(t, n)
                                        : kernels::serial::count_inverses(t, n));
    }
  }

  void bm_homomorphism(benchmark::State& state, std::string const& name, bool parallel) {
    auto const& in = input(name);
    auto const& t  = in.monoid->table();
    auto const  n  = in.monoid->size();
    for (auto _ : state) {
      auto const r = parallel ? kernels::homomorphism_failure(t, n, in.mats)
                              : kernels::serial::homomorphism_failure(t, n, in.mats);
      if (r) {
        state.SkipWithError("mapping representation failed the homomorphism check");
        return;
      }
    }
  }

}  // namespace

BENCHMARK_CAPTURE(bm_fill_table, renner4_serial, std::string("R4"), false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_fill_table, renner4_omp, std::string("R4"), true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_principal_ideals, renner4_serial, std::string("R4"), false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_principal_ideals, renner4_omp, std::string("R4"), true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_principal_ideals, i5_serial, std::string("I5"), false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_principal_ideals, i5_omp, std::string("I5"), true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_count_inverses, renner4_serial, std::string("R4"), false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_count_inverses, renner4_omp, std::string("R4"), true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_homomorphism, t4_serial, std::string("T4"), false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_homomorphism, t4_omp, std::string("T4"), true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
