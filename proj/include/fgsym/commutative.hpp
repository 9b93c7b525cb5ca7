#pragma once

#include <cstddef>
#include <vector>

#include "fgsym/buckets.hpp"
#include "fgsym/factor_graph.hpp"

namespace fgsym {

// Decides whether the factor's potential is invariant under every permutation
// of the given argument positions. Empty and singleton subsets are vacuously
// commutative; positions with differing ranges are never commutative.
//
// The check is the bucket-class formulation: one pass over the whole table,
// requiring every (complement assignment, bucket over subset) class to carry
// a single potential value. The pass always visits every row, so the cost is
// one full table scan independent of the outcome.
bool is_commutative(const Factor& f, const PositionSet& subset);

// A factor with a set of exchangeable arguments collapsed into a counting
// representation: the counted arguments are replaced by a histogram over
// their shared range, one row per (fixed assignment, bucket) pair.
struct CompressedFactor {
    std::string name;
    std::vector<RandomVariable> fixedArgs;     // original relative order
    std::vector<std::size_t> fixedPositions;   // positions in the source factor
    std::vector<RandomVariable> countedArgs;
    std::vector<std::size_t> countedPositions;
    // Dense: fixed assignment row-major (last fixed argument fastest), then
    // buckets in canonical descending order.
    std::vector<Potential> rows;

    std::size_t bucket_count() const;
    std::size_t fixed_count() const;
    const Potential& row(const Assignment& fixedAssignment, const Bucket& bucket) const;
};

// Requires is_commutative(f, subset) and |subset| >= 2; one row per
// (fixed assignment, bucket), with the potential taken from the source class.
CompressedFactor compress_to_crv(const Factor& f, const PositionSet& subset);

// Inverse of compress_to_crv: rebuilds the dense factor, original argument
// order included, so expand_crv(compress_to_crv(f, S)) == f exactly.
Factor expand_crv(const CompressedFactor& c);

} // namespace fgsym
