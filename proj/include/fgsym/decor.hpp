#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "fgsym/buckets.hpp"
#include "fgsym/commutative.hpp"
#include "fgsym/factor_graph.hpp"

namespace fgsym {

// A hypothesised (or confirmed) set of exchangeable argument positions,
// sorted, with at least two members.
using CandidateSet = PositionSet;

// A collection of candidate sets in which no member is a subset of another.
// Insertion drops sets subsumed by an existing member and evicts existing
// members that the new set strictly contains.
class CandidateAntichain {
public:
    bool insert(CandidateSet s);
    const std::vector<CandidateSet>& sets() const noexcept { return sets_; }
    bool empty() const noexcept { return sets_.empty(); }
    std::size_t size() const noexcept { return sets_.size(); }

    friend bool operator==(const CandidateAntichain&, const CandidateAntichain&) = default;

private:
    std::vector<CandidateSet> sets_;
};

struct DecorStats {
    std::uint64_t bucketsVisited = 0;
    std::uint64_t bucketsSkipped = 0;
    std::uint64_t groupsFormed = 0;
    std::uint64_t intersectionsComputed = 0;
    std::uint64_t candidatePeak = 0;
};

enum class RunStatus { Ok, Timeout };

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct DecorResult {
    RunStatus status = RunStatus::Ok;
    CandidateAntichain candidates;
    DecorStats stats;
};

// Maximal groups of rows sharing one exact potential within a bucket class;
// groups of size one are dropped. Groups come back ordered by first row.
std::vector<std::vector<std::size_t>> partition_identical_groups(const Factor& f,
                                                                 const BucketClass& cls);

// Per-position intersection: position i holds the common value if every
// assignment agrees there, and is empty (nullopt) otherwise.
std::vector<std::optional<int>> elementwise_intersection(
    const std::vector<Assignment>& assignments);

// The set of positions whose element-wise intersection over the group's
// assignments is empty; nothing if fewer than two such positions.
std::optional<CandidateSet> candidate_from_group(const Factor& f,
                                                 const std::vector<std::size_t>& groupRows);

// All pairwise intersections of size >= 2, reduced to an antichain.
CandidateAntichain intersect_antichains(const CandidateAntichain& a,
                                        const CandidateAntichain& b);

// Bucket-guided detection of all maximal commutative argument subsets.
// Arguments are grouped by range and processed independently; buckets with
// fewer than two rows are skipped; an all-unique bucket or an emptied
// candidate collection short-circuits a group to no result. Every surviving
// candidate is re-verified with is_commutative before being returned. The
// optional deadline is checked once per bucket.
DecorResult decor(const Factor& f, Deadline deadline = {});

// Upper bound on |S| for any commutative S within the range group: the
// minimum over buckets with more than one row of the largest multiplicity of
// a potential in that bucket; the group size if every bucket has one row.
std::size_t commutative_upper_bound(const Factor& f, const PositionSet& rangeGroup);

// A largest member of the antichain; ties break to the lexicographically
// smallest position set. Nothing if the antichain is empty.
std::optional<CandidateSet> max_candidate(const CandidateAntichain& antichain);

} // namespace fgsym
