#include "ftspan/faults.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include "ftspan/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ftspan {
namespace {

class Enumerator {
 public:
  Enumerator(const WeightedGraph& g, int f, const FaultVisitor& visit)
      : g_(g), f_(f), visit_(visit), degree_(g.vertex_count(), 0) {}

  std::uint64_t run() {
    if (f_ < 0) throw Error(ErrorCode::kFOutOfRange, "f must be >= 0");
    descend(0);
    return visited_;
  }

 private:
  bool descend(EdgeId from) {
    ++visited_;
    if (!visit_(current_)) return false;
    for (EdgeId id = from; id < g_.edge_count(); ++id) {
      const Edge& e = g_.edge(id);
      if (degree_[e.u] >= f_ || degree_[e.v] >= f_) continue;
      ++degree_[e.u];
      ++degree_[e.v];
      current_.push_back(id);
      const bool go_on = descend(id + 1);
      current_.pop_back();
      --degree_[e.u];
      --degree_[e.v];
      if (!go_on) return false;
    }
    return true;
  }

  const WeightedGraph& g_;
  int f_;
  const FaultVisitor& visit_;
  std::vector<int> degree_;
  std::vector<EdgeId> current_;
  std::uint64_t visited_ = 0;
};

// Best (ratio, index) so far; larger ratio wins, ties go to the smaller index.
struct Best {
  double ratio = -1.0;
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  FaultStretch detail;
  std::vector<EdgeId> fault;

  void offer(const FaultStretch& s, std::uint64_t i, std::span<const EdgeId> ids) {
    if (s.max_ratio > ratio || (s.max_ratio == ratio && i < index)) {
      ratio = s.max_ratio;
      index = i;
      detail = s;
      fault.assign(ids.begin(), ids.end());
    }
  }
  void absorb(const Best& other) {
    if (other.index == std::numeric_limits<std::uint64_t>::max()) return;
    offer(other.detail, other.index, other.fault);
  }
};

// Flattened batch of fault sets with their global enumeration indices.
struct Batch {
  std::vector<EdgeId> ids;
  std::vector<std::size_t> offsets{0};
  std::uint64_t first_index = 0;

  std::size_t size() const { return offsets.size() - 1; }
  std::span<const EdgeId> at(std::size_t i) const {
    return {ids.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
  void push(std::span<const EdgeId> set) {
    ids.insert(ids.end(), set.begin(), set.end());
    offsets.push_back(ids.size());
  }
  void clear(std::uint64_t next_index) {
    ids.clear();
    offsets.assign(1, 0);
    first_index = next_index;
  }
};

class ParallelHarness {
 public:
  ParallelHarness(const WeightedGraph& g, const Metric& m) : g_(g), m_(m) {}

  void process(const Batch& batch) {
    const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel
    {
      StretchEvaluator evaluator(g_, m_);
      Best local;
      std::size_t local_pairs = 0;
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < count; ++i) {
        const auto set = batch.at(static_cast<std::size_t>(i));
        const FaultStretch s = evaluator.evaluate(set);
        local_pairs += s.pairs;
        local.offer(s, batch.first_index + static_cast<std::uint64_t>(i), set);
      }
#pragma omp critical(ftspan_harness_merge)
      {
        best_.absorb(local);
        pairs_ += local_pairs;
      }
    }
    faults_ += batch.size();
  }

  const Best& best() const { return best_; }
  std::size_t pairs() const { return pairs_; }
  std::uint64_t faults() const { return faults_; }

 private:
  const WeightedGraph& g_;
  const Metric& m_;
  Best best_;
  std::size_t pairs_ = 0;
  std::uint64_t faults_ = 0;
};

constexpr std::size_t kBatchSize = 4096;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 step so consecutive sample seeds are decorrelated.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void run_enumeration(ParallelHarness& harness, const WeightedGraph& g, int f) {
  Batch batch;
  std::uint64_t index = 0;
  for_each_fault_set(g, f, [&](std::span<const EdgeId> set) {
    batch.push(set);
    ++index;
    if (batch.size() == kBatchSize) {
      harness.process(batch);
      batch.clear(index);
    }
    return true;
  });
  if (batch.size() > 0) harness.process(batch);
}

void run_samples(ParallelHarness& harness, const WeightedGraph& g, int f,
                 const FaultEnumeration& e, std::uint64_t first_index) {
  Batch batch;
  batch.first_index = first_index;
  for (std::size_t i = 0; i < e.budget; ++i) {
    batch.push(sample_fault_ids(g, f, mix_seed(e.seed, i)));
    if (batch.size() == kBatchSize) {
      harness.process(batch);
      batch.clear(first_index + i + 1);
    }
  }
  if (batch.size() > 0) harness.process(batch);
}

void run_adversary(ParallelHarness& harness, const WeightedGraph& g, const Metric& m, int f,
                   const FaultEnumeration& e, std::uint64_t index) {
  const FaultSet adv = adversarial_fault_set(g, f, m, e.rounds);
  const auto mask = fault_mask(g, adv);
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < mask.size(); ++id) {
    if (mask[id]) ids.push_back(id);
  }
  Batch batch;
  batch.first_index = index;
  batch.push(ids);
  harness.process(batch);
}

}  // namespace

std::uint64_t for_each_fault_set(const WeightedGraph& g, int f, const FaultVisitor& visit) {
  return Enumerator(g, f, visit).run();
}

std::uint64_t for_each_matching(const WeightedGraph& g, const FaultVisitor& visit) {
  return for_each_fault_set(g, 1, visit);
}

std::vector<FaultSet> enumerate_fault_sets(const WeightedGraph& g, int f) {
  std::vector<FaultSet> out;
  for_each_fault_set(g, f, [&](std::span<const EdgeId> ids) {
    out.push_back(fault_set_from_ids(g, ids, f));
    return true;
  });
  return out;
}

std::vector<FaultSet> enumerate_matchings(const WeightedGraph& g) {
  return enumerate_fault_sets(g, 1);
}

std::uint64_t count_fault_sets(const WeightedGraph& g, int f, std::uint64_t cap) {
  std::uint64_t count = 0;
  for_each_fault_set(g, f, [&](std::span<const EdgeId>) { return ++count <= cap; });
  return count;
}

std::vector<EdgeId> sample_fault_ids(const WeightedGraph& g, int f, std::uint64_t seed) {
  if (f < 0) throw Error(ErrorCode::kFOutOfRange, "f must be >= 0");
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId id = 0; id < order.size(); ++id) order[id] = id;
  // Fisher-Yates with a fixed generator and plain modulo reduction, so the
  // result is identical across standard libraries.
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<EdgeId> chosen;
  if (f == 0) return chosen;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    if (degree[e.u] < f && degree[e.v] < f) {
      ++degree[e.u];
      ++degree[e.v];
      chosen.push_back(id);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

FaultSet sample_fault_set(const WeightedGraph& g, int f, std::uint64_t seed) {
  return fault_set_from_ids(g, sample_fault_ids(g, f, seed), f);
}

FaultSet adversarial_fault_set(const WeightedGraph& g, int f, const Metric& m, int rounds) {
  if (f < 0) throw Error(ErrorCode::kFOutOfRange, "f must be >= 0");
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<EdgeId> current;
  StretchEvaluator base(g, m);
  FaultStretch score = base.evaluate(current);
  std::vector<EdgeId> best = current;
  double best_ratio = score.max_ratio;

  for (int round = 0; round < rounds; ++round) {
    std::vector<EdgeId> candidates;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      if (degree[e.u] < f && degree[e.v] < f &&
          std::find(current.begin(), current.end(), id) == current.end()) {
        candidates.push_back(id);
      }
    }
    if (candidates.empty()) break;
    std::vector<FaultStretch> scores(candidates.size());
    const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel
    {
      StretchEvaluator evaluator(g, m);
      std::vector<EdgeId> trial;
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t i = 0; i < count; ++i) {
        trial = current;
        trial.push_back(candidates[static_cast<std::size_t>(i)]);
        scores[static_cast<std::size_t>(i)] = evaluator.evaluate(trial);
      }
    }
    std::size_t pick = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
      if (std::tie(scores[i].max_ratio, scores[i].ratio_sum) >
          std::tie(scores[pick].max_ratio, scores[pick].ratio_sum)) {
        pick = i;
      }
    }
    if (std::tie(scores[pick].max_ratio, scores[pick].ratio_sum) <
        std::tie(score.max_ratio, score.ratio_sum)) {
      break;
    }
    const Edge& e = g.edge(candidates[pick]);
    ++degree[e.u];
    ++degree[e.v];
    current.push_back(candidates[pick]);
    score = scores[pick];
    if (score.max_ratio > best_ratio) {
      best_ratio = score.max_ratio;
      best = current;
    }
  }
  std::sort(best.begin(), best.end());
  return fault_set_from_ids(g, best, f);
}

FaultEnumeration parse_enumeration(const std::string& text) {
  FaultEnumeration e;
  if (text == "exhaustive") {
    e.mode = EnumerationMode::kExhaustive;
  } else if (text == "matchings") {
    e.mode = EnumerationMode::kMatchings;
  } else if (text == "adversarial") {
    e.mode = EnumerationMode::kAdversarial;
  } else if (text.rfind("sample:", 0) == 0) {
    e.mode = EnumerationMode::kSampled;
    try {
      std::size_t used = 0;
      const auto k = std::stoull(text.substr(7), &used);
      if (used != text.size() - 7 || k == 0) throw std::invalid_argument("count");
      e.budget = static_cast<std::size_t>(k);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadParams, "bad sample count in mode '" + text + "'");
    }
  } else {
    throw Error(ErrorCode::kBadParams, "unknown verification mode '" + text + "'");
  }
  return e;
}

VerificationReport verify_faulty_degree_spanner(const WeightedGraph& g, const Metric& m, int f,
                                                double claimed_t,
                                                const FaultEnumeration& enumeration) {
  if (f < 0) throw Error(ErrorCode::kFOutOfRange, "f must be >= 0");
  if (g.vertex_count() != m.size()) {
    throw Error(ErrorCode::kBadParams, "graph and metric sizes differ");
  }
  ParallelHarness harness(g, m);
  VerificationReport report;
  report.claimed_t = claimed_t;

  int degree = f;
  bool exhaustive = false;
  switch (enumeration.mode) {
    case EnumerationMode::kMatchings:
      degree = std::min(f, 1);
      [[fallthrough]];
    case EnumerationMode::kExhaustive:
      exhaustive = enumeration.allow_large ||
                   count_fault_sets(g, degree, enumeration.max_exhaustive) <=
                       enumeration.max_exhaustive;
      report.mode = enumeration.mode == EnumerationMode::kMatchings ? "matchings" : "exhaustive";
      if (exhaustive) {
        run_enumeration(harness, g, degree);
      } else {
        // Too many sets: fall back to sampling plus the adversary.
        report.mode += "->sampled+adversarial";
        run_samples(harness, g, f, enumeration, 0);
        run_adversary(harness, g, m, f, enumeration, enumeration.budget);
      }
      break;
    case EnumerationMode::kSampled:
      report.mode = "sample:" + std::to_string(enumeration.budget);
      run_samples(harness, g, f, enumeration, 0);
      break;
    case EnumerationMode::kAdversarial:
      report.mode = "adversarial";
      run_adversary(harness, g, m, f, enumeration, 0);
      break;
  }

  const Best& best = harness.best();
  StretchReport& obs = report.observed;
  obs.max_ratio = best.detail.max_ratio;
  obs.witness_p = best.detail.p;
  obs.witness_q = best.detail.q;
  obs.witness_fault = fault_set_from_ids(g, best.fault, f);
  obs.pairs_checked = harness.pairs();
  obs.faults_checked = harness.faults();
  obs.unreachable = std::isinf(obs.max_ratio);
  obs.mode = exhaustive ? Coverage::kExhaustive : Coverage::kSampled;
  report.coverage = obs.mode;
  report.coverage_count = harness.faults();
  report.pass = within_claim(obs.max_ratio, claimed_t);
  return report;
}

}  // namespace ftspan
