#include "fgsym/commutative.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace fgsym {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::int32_t>& key) const noexcept {
        std::uint64_t h = 0x9E3779B97F4A7C15ULL;
        for (const std::int32_t v : key) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9E3779B97F4A7C15ULL +
                 (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

PositionSet normalized_positions(const Factor& f, const PositionSet& subset) {
    PositionSet s = subset;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const std::size_t p : s)
        if (p >= f.arity())
            throw FgError(Errc::InvalidSubset,
                          "argument position " + std::to_string(p) + " out of range");
    return s;
}

} // namespace

bool is_commutative(const Factor& f, const PositionSet& subset) {
    const PositionSet s = normalized_positions(f, subset);
    if (s.size() <= 1) return true;
    if (!shares_range(f, s)) return false;

    const std::size_t n = f.arity();
    const std::size_t rangeSize = f.args()[s.front()].range.size();

    std::vector<char> inSubset(n, 0);
    for (const std::size_t p : s) inSubset[p] = 1;
    std::vector<std::size_t> complement;
    complement.reserve(n - s.size());
    for (std::size_t p = 0; p < n; ++p)
        if (!inSubset[p]) complement.push_back(p);

    std::size_t classCount = weak_composition_count(s.size(), rangeSize);
    for (const std::size_t p : complement) classCount *= f.args()[p].range.size();

    // Class key: the complement values followed by the subset's histogram.
    std::unordered_map<std::vector<std::int32_t>, std::size_t, KeyHash> firstRow;
    firstRow.reserve(classCount);
    std::vector<std::int32_t> key(complement.size() + rangeSize);

    Assignment a(n, 0);
    bool valid = true;
    for (std::size_t row = 0; row < f.table_size(); ++row) {
        std::size_t ki = 0;
        for (const std::size_t p : complement) key[ki++] = a[p];
        std::fill(key.begin() + static_cast<std::ptrdiff_t>(ki), key.end(), 0);
        for (const std::size_t p : s) ++key[ki + static_cast<std::size_t>(a[p])];

        const auto it = firstRow.find(key);
        if (it == firstRow.end())
            firstRow.emplace(key, row);
        else if (!(f.at(row) == f.at(it->second)))
            valid = false;
        f.advance(a);
    }
    return valid;
}

std::size_t CompressedFactor::bucket_count() const {
    return countedPositions.empty()
               ? 1
               : weak_composition_count(countedPositions.size(),
                                        countedArgs.front().range.size());
}

std::size_t CompressedFactor::fixed_count() const {
    std::size_t count = 1;
    for (const auto& arg : fixedArgs) count *= arg.range.size();
    return count;
}

const Potential& CompressedFactor::row(const Assignment& fixedAssignment,
                                       const Bucket& bucket) const {
    if (fixedAssignment.size() != fixedArgs.size())
        throw FgError(Errc::InvalidAssignment, "fixed assignment arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < fixedArgs.size(); ++i) {
        if (fixedAssignment[i] < 0 ||
            static_cast<std::size_t>(fixedAssignment[i]) >= fixedArgs[i].range.size())
            throw FgError(Errc::InvalidAssignment, "fixed assignment value out of range");
        idx = idx * fixedArgs[i].range.size() + static_cast<std::size_t>(fixedAssignment[i]);
    }
    if (static_cast<std::size_t>(bucket.sum()) != countedPositions.size() ||
        bucket.counts.size() != countedArgs.front().range.size())
        throw FgError(Errc::BadInput, "bucket does not fit the counted arguments");
    return rows[idx * bucket_count() + bucket_rank(bucket)];
}

CompressedFactor compress_to_crv(const Factor& f, const PositionSet& subset) {
    const PositionSet s = normalized_positions(f, subset);
    if (s.size() < 2)
        throw FgError(Errc::SubsetTooSmall, "counting representation needs |subset| >= 2");
    if (!is_commutative(f, s))
        throw FgError(Errc::NotCommutative,
                      "factor '" + f.name() + "' is not commutative w.r.t. the subset");

    CompressedFactor c;
    c.name = f.name();
    std::vector<char> counted(f.arity(), 0);
    for (const std::size_t p : s) counted[p] = 1;
    for (std::size_t p = 0; p < f.arity(); ++p) {
        if (counted[p]) {
            c.countedArgs.push_back(f.args()[p]);
            c.countedPositions.push_back(p);
        } else {
            c.fixedArgs.push_back(f.args()[p]);
            c.fixedPositions.push_back(p);
        }
    }

    const std::size_t rangeSize = c.countedArgs.front().range.size();
    const std::size_t buckets = weak_composition_count(s.size(), rangeSize);
    std::size_t fixedCount = 1;
    for (const auto& arg : c.fixedArgs) fixedCount *= arg.range.size();

    std::vector<const Potential*> slots(fixedCount * buckets, nullptr);
    Assignment a(f.arity(), 0);
    std::vector<int> counts(rangeSize);
    for (std::size_t row = 0; row < f.table_size(); ++row) {
        std::size_t fixedIdx = 0;
        for (const std::size_t p : c.fixedPositions)
            fixedIdx = fixedIdx * f.args()[p].range.size() + static_cast<std::size_t>(a[p]);
        counts.assign(rangeSize, 0);
        for (const std::size_t p : c.countedPositions) ++counts[static_cast<std::size_t>(a[p])];
        const std::size_t slot = fixedIdx * buckets + bucket_rank(Bucket{counts});
        if (!slots[slot]) slots[slot] = &f.at(row);
        f.advance(a);
    }

    c.rows.reserve(slots.size());
    for (const Potential* p : slots) c.rows.push_back(*p);
    return c;
}

Factor expand_crv(const CompressedFactor& c) {
    const std::size_t n = c.fixedPositions.size() + c.countedPositions.size();
    std::vector<RandomVariable> args(n);
    for (std::size_t i = 0; i < c.fixedPositions.size(); ++i)
        args[c.fixedPositions[i]] = c.fixedArgs[i];
    for (std::size_t i = 0; i < c.countedPositions.size(); ++i)
        args[c.countedPositions[i]] = c.countedArgs[i];

    const std::size_t rangeSize = c.countedArgs.front().range.size();
    const std::size_t buckets = c.bucket_count();

    std::size_t tableSize = 1;
    for (const auto& arg : args) tableSize *= arg.range.size();

    std::vector<Potential> table;
    table.reserve(tableSize);
    Assignment a(n, 0);
    std::vector<int> counts(rangeSize);
    for (std::size_t row = 0; row < tableSize; ++row) {
        std::size_t fixedIdx = 0;
        for (const std::size_t p : c.fixedPositions)
            fixedIdx = fixedIdx * args[p].range.size() + static_cast<std::size_t>(a[p]);
        counts.assign(rangeSize, 0);
        for (const std::size_t p : c.countedPositions) ++counts[static_cast<std::size_t>(a[p])];
        table.push_back(c.rows[fixedIdx * buckets + bucket_rank(Bucket{counts})]);
        for (std::size_t i = n; i-- > 0;) {
            if (static_cast<std::size_t>(++a[i]) < args[i].range.size()) break;
            a[i] = 0;
        }
    }
    return build_factor(c.name, std::move(args), std::move(table));
}

} // namespace fgsym
