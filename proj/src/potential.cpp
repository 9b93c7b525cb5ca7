#include "fgsym/potential.hpp"

#include "fgsym/errors.hpp"

namespace fgsym {

Potential::Potential(std::string_view decimal) {
    std::size_t i = 0;
    if (i < decimal.size() && decimal[i] == '+') ++i;
    if (i < decimal.size() && decimal[i] == '-')
        throw FgError(Errc::NonPositivePotential,
                      "potential must be strictly positive: '" + std::string(decimal) + "'");

    std::string intPart;
    std::string fracPart;
    bool seenDot = false;
    bool seenDigit = false;
    for (; i < decimal.size(); ++i) {
        const char c = decimal[i];
        if (c == '.') {
            if (seenDot)
                throw FgError(Errc::BadInput, "malformed decimal: '" + std::string(decimal) + "'");
            seenDot = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw FgError(Errc::BadInput, "malformed decimal: '" + std::string(decimal) + "'");
        (seenDot ? fracPart : intPart).push_back(c);
        seenDigit = true;
    }
    if (!seenDigit)
        throw FgError(Errc::BadInput, "malformed decimal: '" + std::string(decimal) + "'");

    const std::size_t firstNonZero = intPart.find_first_not_of('0');
    intPart.erase(0, firstNonZero == std::string::npos ? intPart.size() : firstNonZero);
    while (!fracPart.empty() && fracPart.back() == '0') fracPart.pop_back();

    if (intPart.empty() && fracPart.empty())
        throw FgError(Errc::NonPositivePotential,
                      "potential must be strictly positive: '" + std::string(decimal) + "'");
    if (intPart.empty()) intPart = "0";

    text_ = fracPart.empty() ? std::move(intPart) : intPart + "." + fracPart;
}

} // namespace fgsym
