#include "fgsym/naive.hpp"

#include <numeric>

#include "fgsym/commutative.hpp"

namespace fgsym {

SubsetsDescending::SubsetsDescending(std::size_t n) : n_(n), size_(n) {
    if (n == 0)
        throw FgError(Errc::BadInput, "subset enumeration needs n >= 1");
    current_.resize(n);
    std::iota(current_.begin(), current_.end(), std::size_t{0});
}

std::optional<PositionSet> SubsetsDescending::next() {
    if (exhausted_) return std::nullopt;
    PositionSet out = current_;

    // Advance to the lexicographically next size_-combination of {0..n-1};
    // when the size is exhausted, restart one size smaller.
    bool advanced = false;
    for (std::size_t i = size_; i-- > 0;) {
        if (current_[i] < n_ - (size_ - i)) {
            ++current_[i];
            for (std::size_t j = i + 1; j < size_; ++j) current_[j] = current_[j - 1] + 1;
            advanced = true;
            break;
        }
    }
    if (!advanced) {
        if (size_ == 0) {
            exhausted_ = true;
        } else {
            --size_;
            current_.resize(size_);
            std::iota(current_.begin(), current_.end(), std::size_t{0});
        }
    }
    return out;
}

std::vector<PositionSet> subsets_descending(std::size_t n) {
    std::vector<PositionSet> out;
    SubsetsDescending gen(n);
    while (auto s = gen.next()) out.push_back(std::move(*s));
    return out;
}

NaiveResult naive_max_commutative(const Factor& f, Deadline deadline) {
    NaiveResult result;
    SubsetsDescending gen(f.arity());
    while (auto s = gen.next()) {
        if (s->size() < 2) break; // sizes only shrink; no useful subsets remain
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
            result.status = RunStatus::Timeout;
            return result;
        }
        if (!shares_range(f, *s)) continue;
        ++result.subsetsTested;
        if (is_commutative(f, *s)) {
            result.set = std::move(*s);
            return result;
        }
    }
    return result;
}

} // namespace fgsym
