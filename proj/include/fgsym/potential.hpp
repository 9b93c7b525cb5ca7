#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace fgsym {

// An exact, strictly positive potential value stored as a normalized decimal
// string ("1.50" and "1.5" collapse to the same value). Equality is exact
// string identity of the normalized form; there is no tolerance and no
// floating point anywhere in the comparison path.
class Potential {
public:
    explicit Potential(std::string_view decimal);

    const std::string& text() const noexcept { return text_; }

    friend bool operator==(const Potential& a, const Potential& b) noexcept {
        return a.text_ == b.text_;
    }
    friend std::strong_ordering operator<=>(const Potential& a, const Potential& b) noexcept {
        return a.text_ <=> b.text_;
    }

private:
    std::string text_;
};

struct PotentialHash {
    std::size_t operator()(const Potential& p) const noexcept {
        return std::hash<std::string>{}(p.text());
    }
};

} // namespace fgsym
