#pragma once

#include <cstdint>
#include <optional>

#include "fgsym/decor.hpp"
#include "fgsym/factor_graph.hpp"

namespace fgsym {

// Streams all 2^n position subsets in strictly non-increasing size, the full
// set first and the empty set last; within one size, subsets come out in
// lexicographic order.
class SubsetsDescending {
public:
    explicit SubsetsDescending(std::size_t n);
    std::optional<PositionSet> next();

private:
    std::size_t n_;
    std::size_t size_;
    PositionSet current_;
    bool exhausted_ = false;
};

// Convenience materialization for small n.
std::vector<PositionSet> subsets_descending(std::size_t n);

struct NaiveResult {
    RunStatus status = RunStatus::Ok;
    std::optional<CandidateSet> set;
    std::uint64_t subsetsTested = 0; // subsets actually scanned (table passes)
};

// The exhaustive baseline: tests subsets in descending size with the
// bucket-class commutativity check (one full table pass per subset), returns
// the first hit of size >= 2, which the iteration order makes maximum-sized.
// Mixed-range subsets are rejected without a scan. The optional deadline is
// checked between subsets.
NaiveResult naive_max_commutative(const Factor& f, Deadline deadline = {});

} // namespace fgsym
