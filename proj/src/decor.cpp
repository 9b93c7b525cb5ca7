#include "fgsym/decor.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

namespace fgsym {

namespace {

bool subset_of(const CandidateSet& a, const CandidateSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

CandidateSet intersect(const CandidateSet& a, const CandidateSet& b) {
    CandidateSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CandidateAntichain intersect_antichains_counted(const CandidateAntichain& a,
                                                const CandidateAntichain& b,
                                                std::uint64_t* counter) {
    CandidateAntichain out;
    for (const auto& ca : a.sets()) {
        for (const auto& cb : b.sets()) {
            if (counter) ++*counter;
            CandidateSet common = intersect(ca, cb);
            if (common.size() >= 2) out.insert(std::move(common));
        }
    }
    return out;
}

// A candidate produced by group intersections always covers the true
// commutative sets it witnessed, but coincidental potential equalities can
// fatten it with extra positions until the whole set fails the definition
// check. A set is commutative exactly when all of its position pairs are
// (transpositions generate every permutation of the set), so a failed
// candidate is refined into the maximal cliques of its pairwise-commutation
// graph. Pair checks are memoized across candidates.
class PairwiseRefiner {
public:
    explicit PairwiseRefiner(const Factor& f)
        : f_(f), n_(f.arity()), memo_(n_ * n_, Unknown) {}

    std::vector<CandidateSet> maximal_cliques(const CandidateSet& positions) {
        std::vector<CandidateSet> cliques;
        CandidateSet current;
        CandidateSet candidates = positions;
        CandidateSet excluded;
        extend(current, candidates, excluded, cliques);
        std::erase_if(cliques, [](const CandidateSet& q) { return q.size() < 2; });
        return cliques;
    }

private:
    enum PairState : char { Unknown, Commutes, Separated };

    bool commutes(std::size_t a, std::size_t b) {
        char& state = memo_[a * n_ + b];
        if (state == Unknown) {
            state = is_commutative(f_, {a, b}) ? Commutes : Separated;
            memo_[b * n_ + a] = state;
        }
        return state == Commutes;
    }

    void extend(CandidateSet& current, CandidateSet candidates, CandidateSet excluded,
                std::vector<CandidateSet>& cliques) {
        if (candidates.empty() && excluded.empty()) {
            cliques.push_back(current);
            return;
        }
        const CandidateSet snapshot = candidates;
        for (const std::size_t v : snapshot) {
            if (std::find(candidates.begin(), candidates.end(), v) == candidates.end())
                continue;
            CandidateSet nextCandidates, nextExcluded;
            for (const std::size_t u : candidates)
                if (u != v && commutes(u, v)) nextCandidates.push_back(u);
            for (const std::size_t u : excluded)
                if (commutes(u, v)) nextExcluded.push_back(u);
            current.push_back(v);
            extend(current, std::move(nextCandidates), std::move(nextExcluded), cliques);
            current.pop_back();
            std::erase(candidates, v);
            excluded.push_back(v);
        }
    }

    const Factor& f_;
    std::size_t n_;
    std::vector<char> memo_;
};

std::vector<std::vector<std::size_t>> identical_groups(const Factor& f,
                                                        const std::vector<std::size_t>& rows) {
    std::unordered_map<std::string_view, std::size_t> slotByValue;
    std::vector<std::vector<std::size_t>> groups;
    for (const std::size_t row : rows) {
        const std::string_view value = f.at(row).text();
        const auto [it, inserted] = slotByValue.try_emplace(value, groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(row);
    }
    std::erase_if(groups, [](const auto& g) { return g.size() < 2; });
    return groups;
}

// Candidate generation over one range group. Rows are classed by (assignment
// of every position outside the group, bucket over the group); for a single-range
// factor the complement is empty and the classes are exactly the buckets.
// Keeping the complement fixed is what makes the short-circuits sound for
// mixed ranges: any class with two or more rows whose potentials are all
// unique rules out every commutative subset of this group, and candidates
// never leak positions of another range group.
//
// The table is touched twice: once to class every row, once to form the
// identical-value groups (on pre-interned potential ids, so grouping is
// integer work).
RunStatus run_group(const Factor& f, const PositionSet& group,
                    const std::vector<std::int32_t>& potId, std::size_t potCount,
                    const Deadline& deadline, DecorStats& stats,
                    std::vector<CandidateSet>& out) {
    const std::size_t n = f.arity();
    const std::size_t rangeSize = f.args()[group.front()].range.size();
    const std::size_t tableSize = f.table_size();

    std::vector<char> inGroup(n, 0);
    for (const std::size_t p : group) inGroup[p] = 1;
    std::vector<std::size_t> complement;
    for (std::size_t p = 0; p < n; ++p)
        if (!inGroup[p]) complement.push_back(p);

    std::size_t complementCount = 1;
    for (const std::size_t p : complement) complementCount *= f.args()[p].range.size();
    const std::size_t bucketCount = weak_composition_count(group.size(), rangeSize);
    const std::size_t classCount = bucketCount * complementCount;

    // comp[m * (rangeSize + 1) + p]: weak compositions of m into p parts.
    std::vector<std::uint64_t> comp((group.size() + 1) * (rangeSize + 1));
    for (std::size_t m = 0; m <= group.size(); ++m)
        for (std::size_t p = 0; p <= rangeSize; ++p)
            comp[m * (rangeSize + 1) + p] = weak_composition_count(m, p);

    // Class index: bucket rank major, complement assignment minor, so the
    // iteration below visits buckets in canonical descending order.
    std::vector<std::uint32_t> classOf(tableSize);
    std::vector<std::uint32_t> classSize(classCount, 0);
    {
        Assignment a(n, 0);
        std::vector<int> counts(rangeSize);
        for (std::size_t row = 0; row < tableSize; ++row) {
            std::fill(counts.begin(), counts.end(), 0);
            for (const std::size_t p : group) ++counts[static_cast<std::size_t>(a[p])];

            std::size_t rank = 0;
            std::size_t remaining = group.size();
            for (std::size_t i = 0; i + 1 < rangeSize; ++i) {
                const std::size_t ci = static_cast<std::size_t>(counts[i]);
                for (std::size_t v = remaining; v > ci; --v)
                    rank += comp[(remaining - v) * (rangeSize + 1) + (rangeSize - 1 - i)];
                remaining -= ci;
            }

            std::size_t complementIdx = 0;
            for (const std::size_t p : complement)
                complementIdx = complementIdx * f.args()[p].range.size() +
                                static_cast<std::size_t>(a[p]);

            const std::size_t cls = rank * complementCount + complementIdx;
            classOf[row] = static_cast<std::uint32_t>(cls);
            ++classSize[cls];
            f.advance(a);
        }
    }

    std::vector<std::uint32_t> offset(classCount + 1, 0);
    for (std::size_t c = 0; c < classCount; ++c) offset[c + 1] = offset[c] + classSize[c];
    std::vector<std::uint32_t> rowsFlat(tableSize);
    {
        std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
        for (std::size_t row = 0; row < tableSize; ++row)
            rowsFlat[cursor[classOf[row]]++] = static_cast<std::uint32_t>(row);
    }

    CandidateAntichain candidates;
    candidates.insert(group);
    stats.candidatePeak = std::max<std::uint64_t>(stats.candidatePeak, candidates.size());

    std::vector<std::int32_t> slotOfId(potCount, -1);
    std::vector<std::int32_t> touched;
    std::vector<std::vector<std::size_t>> groupRows;
    for (std::size_t cls = 0; cls < classCount; ++cls) {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            return RunStatus::Timeout;
        const std::size_t classEntries = offset[cls + 1] - offset[cls];
        if (classEntries < 2) {
            ++stats.bucketsSkipped;
            continue;
        }
        ++stats.bucketsVisited;

        for (const std::int32_t id : touched) slotOfId[static_cast<std::size_t>(id)] = -1;
        touched.clear();
        std::size_t usedGroups = 0;
        for (std::size_t i = offset[cls]; i < offset[cls + 1]; ++i) {
            const std::uint32_t row = rowsFlat[i];
            const std::int32_t id = potId[row];
            std::int32_t slot = slotOfId[static_cast<std::size_t>(id)];
            if (slot < 0) {
                slot = static_cast<std::int32_t>(usedGroups++);
                slotOfId[static_cast<std::size_t>(id)] = slot;
                touched.push_back(id);
                if (static_cast<std::size_t>(slot) == groupRows.size())
                    groupRows.emplace_back();
                else
                    groupRows[static_cast<std::size_t>(slot)].clear();
            }
            groupRows[static_cast<std::size_t>(slot)].push_back(row);
        }

        CandidateAntichain classCandidates;
        std::size_t groupsHere = 0;
        for (std::size_t slot = 0; slot < usedGroups; ++slot) {
            if (groupRows[slot].size() < 2) continue;
            ++groupsHere;
            if (auto candidate = candidate_from_group(f, groupRows[slot]))
                classCandidates.insert(std::move(*candidate));
        }
        stats.groupsFormed += groupsHere;
        if (groupsHere == 0) return RunStatus::Ok; // no duplicates: nothing commutative here

        candidates = intersect_antichains_counted(candidates, classCandidates,
                                                  &stats.intersectionsComputed);
        stats.candidatePeak = std::max<std::uint64_t>(stats.candidatePeak, candidates.size());
        if (candidates.empty()) return RunStatus::Ok;
    }

    for (const auto& s : candidates.sets()) out.push_back(s);
    return RunStatus::Ok;
}

} // namespace

bool CandidateAntichain::insert(CandidateSet s) {
    for (const auto& existing : sets_)
        if (subset_of(s, existing)) return false;
    std::erase_if(sets_, [&](const CandidateSet& existing) { return subset_of(existing, s); });
    sets_.push_back(std::move(s));
    return true;
}

std::vector<std::vector<std::size_t>> partition_identical_groups(const Factor& f,
                                                                 const BucketClass& cls) {
    return identical_groups(f, cls.rows);
}

std::vector<std::optional<int>> elementwise_intersection(
    const std::vector<Assignment>& assignments) {
    if (assignments.size() < 2)
        throw FgError(Errc::BadInput, "element-wise intersection needs >= 2 assignments");
    const std::size_t n = assignments.front().size();
    for (const auto& a : assignments)
        if (a.size() != n)
            throw FgError(Errc::LengthMismatch, "assignments differ in length");

    std::vector<std::optional<int>> out(assignments.front().begin(), assignments.front().end());
    for (std::size_t i = 1; i < assignments.size(); ++i)
        for (std::size_t p = 0; p < n; ++p)
            if (out[p] && *out[p] != assignments[i][p]) out[p].reset();
    return out;
}

std::optional<CandidateSet> candidate_from_group(const Factor& f,
                                                 const std::vector<std::size_t>& groupRows) {
    if (groupRows.size() < 2)
        throw FgError(Errc::BadInput, "a group needs >= 2 rows");
    const std::size_t n = f.arity();
    Assignment first(n);
    f.decode_row(groupRows.front(), first);
    std::vector<char> differs(n, 0);
    std::size_t differCount = 0;

    Assignment a(n);
    for (std::size_t i = 1; i < groupRows.size() && differCount < n; ++i) {
        f.decode_row(groupRows[i], a);
        for (std::size_t p = 0; p < n; ++p) {
            if (!differs[p] && a[p] != first[p]) {
                differs[p] = 1;
                ++differCount;
            }
        }
    }
    if (differCount < 2) return std::nullopt;
    CandidateSet s;
    s.reserve(differCount);
    for (std::size_t p = 0; p < n; ++p)
        if (differs[p]) s.push_back(p);
    return s;
}

CandidateAntichain intersect_antichains(const CandidateAntichain& a,
                                        const CandidateAntichain& b) {
    return intersect_antichains_counted(a, b, nullptr);
}

DecorResult decor(const Factor& f, Deadline deadline) {
    DecorResult result;

    const auto groups = range_groups(f);
    bool anyWork = false;
    for (const auto& group : groups) anyWork |= group.size() >= 2;
    if (!anyWork) return result;

    std::vector<std::int32_t> potId(f.table_size());
    std::size_t potCount = 0;
    {
        std::unordered_map<std::string_view, std::int32_t> ids;
        ids.reserve(f.table_size());
        for (std::size_t row = 0; row < f.table_size(); ++row) {
            const auto [it, inserted] =
                ids.try_emplace(f.at(row).text(), static_cast<std::int32_t>(ids.size()));
            potId[row] = it->second;
        }
        potCount = ids.size();
    }

    std::vector<CandidateSet> found;
    for (const auto& group : groups) {
        if (group.size() < 2) continue;
        if (run_group(f, group, potId, potCount, deadline, result.stats, found) ==
            RunStatus::Timeout) {
            result.status = RunStatus::Timeout;
            result.candidates = {};
            return result;
        }
    }

    // Post-verification: candidates that pass the definition check are
    // returned as-is; a failing candidate is an over-approximation of the
    // commutative sets it covered and is refined pairwise instead of being
    // dropped, so the true maximal sets inside it survive.
    PairwiseRefiner refiner(f);
    for (const auto& s : found) {
        if (is_commutative(f, s)) {
            result.candidates.insert(s);
            continue;
        }
        for (auto& clique : refiner.maximal_cliques(s)) result.candidates.insert(std::move(clique));
    }
    return result;
}

std::size_t commutative_upper_bound(const Factor& f, const PositionSet& rangeGroup) {
    require_shared_range(f, rangeGroup);
    if (rangeGroup.empty())
        throw FgError(Errc::InvalidSubset, "range group must be non-empty");

    std::size_t best = rangeGroup.size();
    bool anyMultiRow = false;
    for (const auto& cls : bucket_partition(f, rangeGroup)) {
        if (cls.rows.size() < 2) continue;
        anyMultiRow = true;
        std::unordered_map<std::string_view, std::size_t> counts;
        std::size_t maxCount = 0;
        for (const std::size_t row : cls.rows)
            maxCount = std::max(maxCount, ++counts[f.at(row).text()]);
        best = std::min(best, maxCount);
    }
    return anyMultiRow ? best : rangeGroup.size();
}

std::optional<CandidateSet> max_candidate(const CandidateAntichain& antichain) {
    const CandidateSet* best = nullptr;
    for (const auto& s : antichain.sets()) {
        if (!best || s.size() > best->size() ||
            (s.size() == best->size() &&
             std::lexicographical_compare(s.begin(), s.end(), best->begin(), best->end())))
            best = &s;
    }
    if (!best) return std::nullopt;
    return *best;
}

} // namespace fgsym
