// Kernel timings: serial reference, the OpenMP kernels pinned to one thread,
// and the OpenMP kernels with the default thread count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "ftspan/faults.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/reference.hpp"
#include "ftspan/shortest_paths.hpp"
#include "ftspan/spanner_general.hpp"
#include "ftspan/stretch.hpp"

namespace {

using namespace ftspan;

struct Instance {
  Metric metric;
  WeightedGraph graph;
  FaultSet fault;
};

Instance make_instance(std::size_t n) {
  Instance inst;
  inst.metric = euclidean_metric(generate_points(PointKind::kUniform, n, 2, 42));
  inst.graph = fortify(inst.metric, greedy_spanner(inst.metric, 1.5), 1);
  inst.fault = sample_fault_set(inst.graph, 1, 7);
  return inst;
}

// Thread count for the OpenMP variants: 0 keeps the runtime default.
class ThreadScope {
 public:
  explicit ThreadScope(int threads) : saved_(omp_get_max_threads()) {
    if (threads > 0) omp_set_num_threads(threads);
  }
  ~ThreadScope() { omp_set_num_threads(saved_); }

 private:
  int saved_;
};

void BM_ApspReference(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::spanner_distances(inst.graph, {}));
}

void BM_ApspOpenMP(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<std::size_t>(state.range(0)));
  ThreadScope threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(inst.graph));
}

void BM_StretchReference(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::stretch(inst.graph, inst.fault, inst.metric));
  }
}

void BM_StretchOpenMP(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<std::size_t>(state.range(0)));
  ThreadScope threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(stretch(inst.graph, inst.fault, inst.metric));
}

void BM_VerifyReference(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<std::size_t>(state.range(0)));
  std::vector<FaultSet> sets;
  for (std::uint64_t s = 0; s < 64; ++s) sets.push_back(sample_fault_set(inst.graph, 1, s));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::verify(inst.graph, inst.metric, 4.5, sets));
  }
}

void BM_VerifyOpenMP(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<std::size_t>(state.range(0)));
  ThreadScope threads(static_cast<int>(state.range(1)));
  FaultEnumeration e;
  e.mode = EnumerationMode::kSampled;
  e.budget = 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_faulty_degree_spanner(inst.graph, inst.metric, 1, 4.5, e));
  }
}

// Second argument: 1 = serial run of the OpenMP kernel, 0 = default threads.
void omp_args(benchmark::internal::Benchmark* b) {
  for (int n : {32, 64, 128}) {
    b->Args({n, 1});
    b->Args({n, 0});
  }
}

}  // namespace

BENCHMARK(BM_ApspReference)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApspOpenMP)->Apply(omp_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StretchReference)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StretchOpenMP)->Apply(omp_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_VerifyReference)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyOpenMP)->Apply(omp_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
