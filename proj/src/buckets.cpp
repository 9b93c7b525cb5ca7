#include "fgsym/buckets.hpp"

#include <numeric>

namespace fgsym {

int Bucket::sum() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

std::uint64_t weak_composition_count(std::uint64_t total, std::uint64_t parts) {
    if (parts == 0) return total == 0 ? 1 : 0;
    return binomial(total + parts - 1, parts - 1);
}

Bucket bucket_of(const Assignment& a, const PositionSet& subset, std::size_t rangeSize) {
    Bucket b;
    b.counts.assign(rangeSize, 0);
    for (const std::size_t p : subset) ++b.counts[static_cast<std::size_t>(a[p])];
    return b;
}

Bucket bucket_of(const Factor& f, const Assignment& a, const PositionSet& subset) {
    require_shared_range(f, subset);
    if (a.size() != f.arity())
        throw FgError(Errc::InvalidAssignment, "assignment arity mismatch");
    for (std::size_t p = 0; p < a.size(); ++p)
        if (a[p] < 0 || static_cast<std::size_t>(a[p]) >= f.args()[p].range.size())
            throw FgError(Errc::InvalidAssignment,
                          "value index out of range at position " + std::to_string(p));
    const std::size_t rangeSize =
        subset.empty() ? 0 : f.args()[subset.front()].range.size();
    return bucket_of(a, subset, rangeSize);
}

namespace {

void enumerate_rec(std::size_t remaining, std::size_t part, Bucket& scratch,
                   std::vector<Bucket>& out) {
    if (part + 1 == scratch.counts.size()) {
        scratch.counts[part] = static_cast<int>(remaining);
        out.push_back(scratch);
        return;
    }
    for (std::size_t v = remaining + 1; v-- > 0;) {
        scratch.counts[part] = static_cast<int>(v);
        enumerate_rec(remaining - v, part + 1, scratch, out);
    }
}

} // namespace

std::vector<Bucket> enumerate_buckets(std::size_t subsetSize, std::size_t rangeSize) {
    if (rangeSize == 0)
        throw FgError(Errc::BadInput, "rangeSize must be >= 1");
    std::vector<Bucket> out;
    out.reserve(weak_composition_count(subsetSize, rangeSize));
    Bucket scratch;
    scratch.counts.assign(rangeSize, 0);
    enumerate_rec(subsetSize, 0, scratch, out);
    return out;
}

std::size_t bucket_rank(const Bucket& b) {
    const std::size_t parts = b.counts.size();
    std::size_t remaining = static_cast<std::size_t>(b.sum());
    std::size_t rank = 0;
    for (std::size_t i = 0; i + 1 < parts; ++i) {
        for (std::size_t v = remaining; v > static_cast<std::size_t>(b.counts[i]); --v)
            rank += weak_composition_count(remaining - v, parts - 1 - i);
        remaining -= static_cast<std::size_t>(b.counts[i]);
    }
    return rank;
}

std::vector<BucketClass> bucket_partition(const Factor& f, const PositionSet& subset) {
    require_shared_range(f, subset);

    if (subset.empty()) {
        BucketClass all;
        all.rows.resize(f.table_size());
        std::iota(all.rows.begin(), all.rows.end(), std::size_t{0});
        return {std::move(all)};
    }

    const std::size_t rangeSize = f.args()[subset.front()].range.size();
    std::vector<BucketClass> classes;
    {
        auto buckets = enumerate_buckets(subset.size(), rangeSize);
        classes.resize(buckets.size());
        for (std::size_t i = 0; i < buckets.size(); ++i)
            classes[i].bucket = std::move(buckets[i]);
    }

    Assignment a(f.arity(), 0);
    std::vector<int> counts(rangeSize);
    for (std::size_t row = 0; row < f.table_size(); ++row) {
        counts.assign(rangeSize, 0);
        for (const std::size_t p : subset) ++counts[static_cast<std::size_t>(a[p])];
        Bucket b{counts};
        classes[bucket_rank(b)].rows.push_back(row);
        f.advance(a);
    }
    return classes;
}

} // namespace fgsym
