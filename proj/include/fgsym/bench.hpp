#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgsym/decor.hpp"
#include "fgsym/factor_graph.hpp"

namespace fgsym {

struct BenchConfig {
    std::vector<int> nList;
    std::vector<std::string> kSpec; // tokens: "0", "2", "half", "log2", "n-1", "n"
    int rangeSize = 2;
    int reps = 1;
    long long timeoutMs = 300000;
    std::uint64_t seed = 0;
    int parallel = 1; // instances may run across worker threads; 1 preserves timing fidelity
};

struct Measurement {
    std::string algorithm;
    int n = 0;
    int k = 0;
    int rangeSize = 0;
    std::uint64_t seed = 0;
    int rep = 0;
    RunStatus status = RunStatus::Ok;
    std::int64_t elapsedMicros = 0;
    std::size_t resultSize = 0;
};

// A factor with n arguments over a shared range of rangeSize values whose
// maximum commutative subset is exactly the first k positions (none for
// k = 0): one fresh distinct potential per (bucket over the first k
// positions, assignment of the rest), drawn deterministically from the seed.
// k = 1 is rejected.
Factor generate_factor(std::size_t n, std::size_t k, std::size_t rangeSize, std::uint64_t seed);

// Runs one algorithm ("decor" or "naive") against a cooperative deadline and
// reports wall-clock micros, status and the size of the maximal set found.
// Identity columns (n, k, ...) are left for the caller.
Measurement run_instance(std::string_view algorithm, const Factor& f, long long timeoutMs);

// Resolves a k token against n; nothing if the resolved value is invalid
// (k = 1 or out of range).
std::optional<int> resolve_k(std::string_view token, int n);

// The derived per-instance seed used by bench_suite for cell (n, k, rep).
std::uint64_t instance_seed(std::uint64_t configSeed, int n, int k, int rep);

// One measurement per (algorithm x n x resolved-k x rep), deterministic given
// the config. Duplicate resolved k values per n collapse to one cell.
std::vector<Measurement> bench_suite(const BenchConfig& config);

std::string csv_header();
std::string to_csv_row(const Measurement& m);
std::string to_csv(const std::vector<Measurement>& measurements);

// Per-cell aggregate across reps: one line per (algorithm, n, k) with the
// count of completed and timed-out runs plus the mean and median run time of
// the completed ones (medians damp scheduler noise).
std::string bench_summary(const std::vector<Measurement>& measurements);

} // namespace fgsym
