#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fgsym/factor_graph.hpp"

namespace fgsym {

// A histogram over a shared range: counts[i] is how many of the subset's
// positions take range value i. The canonical ordering of buckets of a given
// total is lexicographically descending on counts, so [n,0,...] comes first.
struct Bucket {
    std::vector<int> counts;

    int sum() const;
    friend bool operator==(const Bucket&, const Bucket&) = default;
};

// One cell of a table partition: the bucket plus the row-major indices of all
// table rows whose subset restriction falls into it. Rows are kept in
// ascending order, so the multiset of potentials reads in table order.
struct BucketClass {
    Bucket bucket;
    std::vector<std::size_t> rows;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Number of weak compositions of `total` into `parts` parts,
// C(total + parts - 1, parts - 1).
std::uint64_t weak_composition_count(std::uint64_t total, std::uint64_t parts);

// Histogram of the subset's values in `a`; counts[i] counts positions whose
// value index is i. `rangeSize` fixes the histogram width.
Bucket bucket_of(const Assignment& a, const PositionSet& subset, std::size_t rangeSize);

// Same, validating against the factor that the subset shares one range
// (throws MixedRanges / InvalidSubset).
Bucket bucket_of(const Factor& f, const Assignment& a, const PositionSet& subset);

// All weak compositions of subsetSize into rangeSize parts, in canonical
// (lexicographically descending) order.
std::vector<Bucket> enumerate_buckets(std::size_t subsetSize, std::size_t rangeSize);

// Index of a bucket within the canonical order of its (sum, parts) family.
std::size_t bucket_rank(const Bucket& b);

// Partitions every table row by its bucket over `subset`; classes come back
// in canonical bucket order and cover each row exactly once. An empty subset
// yields a single class holding the whole table.
std::vector<BucketClass> bucket_partition(const Factor& f, const PositionSet& subset);

} // namespace fgsym
