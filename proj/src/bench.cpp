#include "fgsym/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "fgsym/buckets.hpp"
#include "fgsym/naive.hpp"

namespace fgsym {

namespace {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

std::vector<RandomVariable> bench_arguments(std::size_t n, std::size_t rangeSize) {
    std::vector<std::string> range;
    if (rangeSize == 2) {
        range = {"true", "false"};
    } else {
        range.reserve(rangeSize);
        for (std::size_t v = 0; v < rangeSize; ++v) range.push_back("v" + std::to_string(v));
    }
    std::vector<RandomVariable> args;
    args.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) args.push_back({"X" + std::to_string(i), range, {}});
    return args;
}

} // namespace

Factor generate_factor(std::size_t n, std::size_t k, std::size_t rangeSize, std::uint64_t seed) {
    if (k == 1 || k > n)
        throw FgError(Errc::InvalidK, "k must be 0 or in [2, n]");
    if (n < 1 || rangeSize < 2)
        throw FgError(Errc::BadInput, "need n >= 1 and rangeSize >= 2");

    auto args = bench_arguments(n, rangeSize);
    std::size_t tableSize = 1;
    for (std::size_t i = 0; i < n; ++i) tableSize *= rangeSize;

    const std::size_t buckets = k == 0 ? 0 : weak_composition_count(k, rangeSize);
    std::size_t complementCount = 1;
    for (std::size_t i = k; i < n; ++i) complementCount *= rangeSize;
    const std::size_t classCount = k == 0 ? tableSize : buckets * complementCount;

    std::vector<std::uint32_t> valueOf(classCount);
    std::iota(valueOf.begin(), valueOf.end(), 0u);
    SplitMix64 rng{seed ^ 0xD1B54A32D192ED03ULL};
    for (std::size_t i = classCount; i-- > 1;) {
        const std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
        std::swap(valueOf[i], valueOf[j]);
    }

    std::vector<std::string> table;
    table.reserve(tableSize);
    Assignment a(n, 0);
    std::vector<int> counts(rangeSize);
    for (std::size_t row = 0; row < tableSize; ++row) {
        std::size_t cls;
        if (k == 0) {
            cls = row;
        } else {
            counts.assign(rangeSize, 0);
            for (std::size_t p = 0; p < k; ++p) ++counts[static_cast<std::size_t>(a[p])];
            std::size_t complementIdx = 0;
            for (std::size_t p = k; p < n; ++p)
                complementIdx = complementIdx * rangeSize + static_cast<std::size_t>(a[p]);
            cls = bucket_rank(Bucket{counts}) * complementCount + complementIdx;
        }
        table.push_back(std::to_string(valueOf[cls] + 1));
        for (std::size_t i = n; i-- > 0;) {
            if (static_cast<std::size_t>(++a[i]) < rangeSize) break;
            a[i] = 0;
        }
    }
    return build_factor("phi", std::move(args), table);
}

Measurement run_instance(std::string_view algorithm, const Factor& f, long long timeoutMs) {
    Measurement m;
    m.algorithm = std::string(algorithm);

    Deadline deadline;
    if (timeoutMs > 0)
        deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeoutMs);

    const auto start = std::chrono::steady_clock::now();
    if (algorithm == "decor") {
        const DecorResult r = decor(f, deadline);
        m.status = r.status;
        if (r.status == RunStatus::Ok)
            if (const auto best = max_candidate(r.candidates)) m.resultSize = best->size();
    } else if (algorithm == "naive") {
        const NaiveResult r = naive_max_commutative(f, deadline);
        m.status = r.status;
        if (r.status == RunStatus::Ok && r.set) m.resultSize = r.set->size();
    } else {
        throw FgError(Errc::BadInput, "unknown algorithm '" + std::string(algorithm) + "'");
    }
    m.elapsedMicros = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return m;
}

std::optional<int> resolve_k(std::string_view token, int n) {
    int k = -1;
    if (token == "half") {
        k = n / 2;
    } else if (token == "log2") {
        k = static_cast<int>(std::floor(std::log2(static_cast<double>(n))));
    } else if (token == "n-1") {
        k = n - 1;
    } else if (token == "n") {
        k = n;
    } else {
        const auto result = std::from_chars(token.data(), token.data() + token.size(), k);
        if (result.ec != std::errc{} || result.ptr != token.data() + token.size())
            throw FgError(Errc::BadInput, "unknown k token '" + std::string(token) + "'");
    }
    if (k == 1 || k < 0 || k > n) return std::nullopt;
    return k;
}

std::uint64_t instance_seed(std::uint64_t configSeed, int n, int k, int rep) {
    SplitMix64 rng{configSeed ^
                   (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ULL) ^
                   (static_cast<std::uint64_t>(k) * 0xBF58476D1CE4E5B9ULL) ^
                   (static_cast<std::uint64_t>(rep) * 0x94D049BB133111EBULL)};
    return rng.next();
}

std::vector<Measurement> bench_suite(const BenchConfig& config) {
    if (config.reps < 1 || config.rangeSize < 2 || config.parallel < 1)
        throw FgError(Errc::BadInput, "invalid bench configuration");
    for (const int n : config.nList)
        if (n < 2)
            throw FgError(Errc::BadInput, "bench needs n >= 2");

    struct Task {
        std::string algorithm;
        int n;
        int k;
        int rep;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const int n : config.nList) {
        std::vector<int> ks;
        for (const auto& token : config.kSpec)
            if (const auto k = resolve_k(token, n))
                if (std::find(ks.begin(), ks.end(), *k) == ks.end()) ks.push_back(*k);
        std::sort(ks.begin(), ks.end());
        for (const int k : ks)
            for (int rep = 0; rep < config.reps; ++rep) {
                const std::uint64_t seed = instance_seed(config.seed, n, k, rep);
                tasks.push_back({"decor", n, k, rep, seed});
                tasks.push_back({"naive", n, k, rep, seed});
            }
    }

    std::vector<Measurement> results(tasks.size());
    auto runTask = [&](std::size_t i) {
        const Task& t = tasks[i];
        const Factor f = generate_factor(static_cast<std::size_t>(t.n),
                                         static_cast<std::size_t>(t.k),
                                         static_cast<std::size_t>(config.rangeSize), t.seed);
        Measurement m = run_instance(t.algorithm, f, config.timeoutMs);
        m.n = t.n;
        m.k = t.k;
        m.rangeSize = config.rangeSize;
        m.seed = t.seed;
        m.rep = t.rep;
        results[i] = std::move(m);
    };

    if (config.parallel <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) runTask(i);
    } else {
        std::atomic<std::size_t> nextTask{0};
        std::vector<std::thread> workers;
        const std::size_t workerCount =
            std::min<std::size_t>(static_cast<std::size_t>(config.parallel), tasks.size());
        workers.reserve(workerCount);
        for (std::size_t w = 0; w < workerCount; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = nextTask.fetch_add(1);
                    if (i >= tasks.size()) return;
                    runTask(i);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }
    return results;
}

std::string csv_header() {
    return "algorithm,n,k,range,seed,rep,status,elapsed_us,result_size";
}

std::string to_csv_row(const Measurement& m) {
    std::ostringstream out;
    out << m.algorithm << ',' << m.n << ',' << m.k << ',' << m.rangeSize << ',' << m.seed << ','
        << m.rep << ',' << (m.status == RunStatus::Ok ? "ok" : "timeout") << ','
        << m.elapsedMicros << ',' << m.resultSize;
    return out.str();
}

std::string to_csv(const std::vector<Measurement>& measurements) {
    std::string out = csv_header() + "\n";
    for (const auto& m : measurements) out += to_csv_row(m) + "\n";
    return out;
}

std::string bench_summary(const std::vector<Measurement>& measurements) {
    struct Cell {
        std::vector<std::int64_t> okMicros;
        int timeouts = 0;
    };
    std::vector<std::tuple<std::string, int, int>> order;
    std::map<std::tuple<std::string, int, int>, Cell> cells;
    for (const auto& m : measurements) {
        const auto key = std::make_tuple(m.algorithm, m.n, m.k);
        if (!cells.count(key)) order.push_back(key);
        Cell& cell = cells[key];
        if (m.status == RunStatus::Ok)
            cell.okMicros.push_back(m.elapsedMicros);
        else
            ++cell.timeouts;
    }

    std::ostringstream out;
    out << "algorithm,n,k,ok,timeouts,mean_us,median_us\n";
    for (const auto& key : order) {
        Cell& cell = cells[key];
        out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ','
            << cell.okMicros.size() << ',' << cell.timeouts << ',';
        if (cell.okMicros.empty()) {
            out << ",\n";
            continue;
        }
        std::sort(cell.okMicros.begin(), cell.okMicros.end());
        std::int64_t sum = 0;
        for (const std::int64_t t : cell.okMicros) sum += t;
        const std::size_t mid = cell.okMicros.size() / 2;
        const std::int64_t median = cell.okMicros.size() % 2
                                        ? cell.okMicros[mid]
                                        : (cell.okMicros[mid - 1] + cell.okMicros[mid]) / 2;
        out << sum / static_cast<std::int64_t>(cell.okMicros.size()) << ',' << median << '\n';
    }
    return out.str();
}

} // namespace fgsym
