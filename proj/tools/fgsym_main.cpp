#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fgsym/bench.hpp"
#include "fgsym/colour_passing.hpp"
#include "fgsym/commutative.hpp"
#include "fgsym/json_io.hpp"
#include "fgsym/naive.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitTimeout = 3;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::string> subset_names(const fgsym::Factor& f, const fgsym::CandidateSet& s) {
    std::vector<std::string> names;
    names.reserve(s.size());
    for (const std::size_t p : s) names.push_back(f.args()[p].name);
    return names;
}

int run_detect(const std::string& inputPath, const std::string& factorName,
               const std::string& algorithm, long long timeoutMs, bool verify) {
    const fgsym::FactorGraph graph = fgsym::load_factor_graph(inputPath);
    const fgsym::Factor* factor = fgsym::find_factor(graph, factorName);
    if (!factor)
        throw fgsym::FgError(fgsym::Errc::BadInput, "no factor named '" + factorName + "'");

    fgsym::Deadline deadline;
    if (timeoutMs > 0)
        deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeoutMs);

    const auto start = std::chrono::steady_clock::now();
    fgsym::RunStatus status;
    std::vector<fgsym::CandidateSet> found;
    if (algorithm == "decor") {
        const fgsym::DecorResult r = fgsym::decor(*factor, deadline);
        status = r.status;
        found.assign(r.candidates.sets().begin(), r.candidates.sets().end());
    } else {
        const fgsym::NaiveResult r = fgsym::naive_max_commutative(*factor, deadline);
        status = r.status;
        if (r.set) found.push_back(*r.set);
    }
    const auto elapsedUs = std::chrono::duration_cast<std::chrono::microseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();

    nlohmann::json out;
    out["factor"] = factorName;
    out["algorithm"] = algorithm;
    out["status"] = status == fgsym::RunStatus::Ok ? "ok" : "timeout";
    out["elapsed_us"] = elapsedUs;
    out["subsets"] = nlohmann::json::array();
    out["max_subset"] = nlohmann::json(nullptr);

    if (status == fgsym::RunStatus::Ok) {
        for (const auto& s : found) out["subsets"].push_back(subset_names(*factor, s));
        fgsym::CandidateAntichain antichain;
        for (const auto& s : found) antichain.insert(s);
        if (const auto best = fgsym::max_candidate(antichain))
            out["max_subset"] = subset_names(*factor, *best);
        if (verify) {
            bool allCommutative = true;
            for (const auto& s : found) allCommutative &= fgsym::is_commutative(*factor, s);
            out["verified"] = allCommutative;
        }
    }

    std::cout << out.dump(2) << '\n';
    return status == fgsym::RunStatus::Ok ? kExitOk : kExitTimeout;
}

int run_bench(const fgsym::BenchConfig& config, const std::string& outPath) {
    const auto measurements = fgsym::bench_suite(config);
    const std::string csv = fgsym::to_csv(measurements);
    if (outPath.empty() || outPath == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(outPath);
        if (!out)
            throw fgsym::FgError(fgsym::Errc::BadInput, "cannot write '" + outPath + "'");
        out << csv;
        std::cerr << "wrote " << measurements.size() << " rows to " << outPath << '\n';
    }
    std::cerr << fgsym::bench_summary(measurements);
    return kExitOk;
}

int run_lift(const std::string& inputPath, const std::string& outPath) {
    const fgsym::FactorGraph graph = fgsym::load_factor_graph(inputPath);
    const fgsym::Grouping grouping = fgsym::run_cpr(graph);
    const std::string text = fgsym::grouping_to_json(grouping);
    if (outPath.empty() || outPath == "-") {
        std::cout << text << '\n';
    } else {
        std::ofstream out(outPath);
        if (!out)
            throw fgsym::FgError(fgsym::Errc::BadInput, "cannot write '" + outPath + "'");
        out << text << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"factor graph symmetry toolkit: commutative-argument detection, "
                 "counting-representation compression and colour-passing groupings"};
    app.require_subcommand(1);

    auto* detect = app.add_subcommand("detect", "find commutative argument subsets of a factor");
    std::string detectInput;
    std::string detectFactor;
    std::string detectAlgorithm = "decor";
    long long detectTimeoutMs = 0;
    bool detectVerify = false;
    detect->add_option("--input", detectInput, "factor graph JSON file")->required();
    detect->add_option("--factor", detectFactor, "factor name")->required();
    detect->add_option("--algorithm", detectAlgorithm, "decor|naive")
        ->check(CLI::IsMember({"decor", "naive"}));
    detect->add_option("--timeout-ms", detectTimeoutMs, "cooperative deadline (0 = none)");
    detect->add_flag("--verify", detectVerify, "re-check each reported subset");

    auto* bench = app.add_subcommand("bench", "generate factors over an (n, k) grid and time both algorithms");
    std::string benchN = "2,4,6,8,10,12,14,16";
    std::string benchK = "0,2,half,log2,n-1,n";
    std::string benchOut = "results.csv";
    fgsym::BenchConfig config;
    config.reps = 3;
    config.seed = 42;
    bench->add_option("--n", benchN, "comma-separated argument counts");
    bench->add_option("--k", benchK, "comma-separated k tokens (0,2,half,log2,n-1,n)");
    bench->add_option("--range", config.rangeSize, "shared range size");
    bench->add_option("--reps", config.reps, "repetitions per cell");
    bench->add_option("--timeout-ms", config.timeoutMs, "per-instance timeout");
    bench->add_option("--seed", config.seed, "base seed");
    bench->add_option("--parallel", config.parallel, "worker threads (1 for timing fidelity)");
    bench->add_option("--out", benchOut, "CSV output path ('-' for stdout)");

    auto* lift = app.add_subcommand("lift", "group symmetric nodes via colour passing");
    std::string liftInput;
    std::string liftOut;
    lift->add_option("--input", liftInput, "factor graph JSON file")->required();
    lift->add_option("--out", liftOut, "groupings JSON path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError; // help/version exit cleanly
    }

    try {
        if (detect->parsed())
            return run_detect(detectInput, detectFactor, detectAlgorithm, detectTimeoutMs,
                              detectVerify);
        if (bench->parsed()) {
            for (const auto& token : split_list(benchN)) config.nList.push_back(std::stoi(token));
            config.kSpec = split_list(benchK);
            return run_bench(config, benchOut);
        }
        if (lift->parsed()) return run_lift(liftInput, liftOut);
    } catch (const fgsym::FgError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
