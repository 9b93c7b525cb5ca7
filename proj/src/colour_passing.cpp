#include "fgsym/colour_passing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace fgsym {

namespace {

// True iff permuting f's arguments by perm yields rep exactly (positionally
// equal ranges, row-by-row equal tables). Walks rep's rows without
// materializing the permuted factor.
bool matches_under(const Factor& f, const std::vector<std::size_t>& perm, const Factor& rep) {
    const std::size_t n = f.arity();
    for (std::size_t i = 0; i < n; ++i)
        if (!f.args()[perm[i]].same_range(rep.args()[i])) return false;

    Assignment a(n, 0);
    Assignment b(n, 0);
    for (std::size_t row = 0; row < rep.table_size(); ++row) {
        for (std::size_t i = 0; i < n; ++i) b[perm[i]] = a[i];
        if (!(rep.at(row) == f.at(f.index_of(b)))) return false;
        rep.advance(a);
    }
    return true;
}

// Order-independent equality: finds a permutation of f's arguments making
// its table equal to rep's, or nothing. Identity is tried first.
std::optional<std::vector<std::size_t>> find_matching_permutation(const Factor& f,
                                                                  const Factor& rep,
                                                                  std::size_t arityLimit) {
    if (f.arity() != rep.arity() || f.table_size() != rep.table_size()) return std::nullopt;
    const std::size_t n = f.arity();

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    if (matches_under(f, perm, rep)) return perm;

    // The multiset of table values is permutation-invariant; a mismatch rules
    // out every permutation without searching.
    {
        std::vector<std::string_view> fa, ra;
        fa.reserve(f.table_size());
        ra.reserve(rep.table_size());
        for (const auto& p : f.table()) fa.push_back(p.text());
        for (const auto& p : rep.table()) ra.push_back(p.text());
        std::sort(fa.begin(), fa.end());
        std::sort(ra.begin(), ra.end());
        if (fa != ra) return std::nullopt;
    }

    if (n > arityLimit)
        throw FgError(Errc::ArityLimitExceeded,
                      "factor '" + f.name() + "' exceeds the canonicalization arity limit");

    while (std::next_permutation(perm.begin(), perm.end()))
        if (matches_under(f, perm, rep)) return perm;
    return std::nullopt;
}

std::vector<Colour> dense_ids(const std::vector<std::vector<int>>& signatures) {
    std::map<std::vector<int>, Colour> ids;
    std::vector<Colour> out;
    out.reserve(signatures.size());
    for (const auto& sig : signatures) {
        const auto [it, inserted] = ids.try_emplace(sig, static_cast<Colour>(ids.size()));
        out.push_back(it->second);
    }
    return out;
}

} // namespace

std::vector<Colour> initial_variable_colours(const FactorGraph& g) {
    std::map<std::pair<std::vector<std::string>, std::optional<std::string>>, Colour> ids;
    std::vector<Colour> out;
    out.reserve(g.variables.size());
    for (const auto& v : g.variables) {
        const auto [it, inserted] =
            ids.try_emplace({v.range, v.evidence}, static_cast<Colour>(ids.size()));
        out.push_back(it->second);
    }
    return out;
}

std::vector<Colour> initial_factor_colours(FactorGraph& g, const CprOptions& opts) {
    std::vector<Colour> out(g.factors.size(), 0);
    std::vector<std::size_t> representatives; // factor index per colour class
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        bool matched = false;
        for (std::size_t c = 0; c < representatives.size() && !matched; ++c) {
            const Factor& rep = g.factors[representatives[c]];
            if (auto perm = find_matching_permutation(g.factors[i], rep, opts.arityLimit)) {
                bool isIdentity = true;
                for (std::size_t p = 0; p < perm->size(); ++p)
                    if ((*perm)[p] != p) isIdentity = false;
                if (!isIdentity)
                    g.factors[i] = apply_argument_permutation(g.factors[i], *perm);
                out[i] = static_cast<Colour>(c);
                matched = true;
            }
        }
        if (!matched) {
            out[i] = static_cast<Colour>(representatives.size());
            representatives.push_back(i);
        }
    }
    return out;
}

Colouring pass_round(const FactorGraph& g, const Colouring& colouring,
                     const std::vector<CandidateSet>& commutativeSets) {
    if (colouring.variableColours.size() != g.variables.size() ||
        colouring.factorColours.size() != g.factors.size() ||
        commutativeSets.size() != g.factors.size())
        throw FgError(Errc::BadInput, "colouring does not cover the graph");

    std::unordered_map<std::string_view, std::size_t> varIndex;
    for (std::size_t i = 0; i < g.variables.size(); ++i) varIndex[g.variables[i].name] = i;

    // Factor pass: argument colours in argument order, then own colour.
    std::vector<std::vector<int>> factorSignatures;
    factorSignatures.reserve(g.factors.size());
    for (std::size_t fi = 0; fi < g.factors.size(); ++fi) {
        std::vector<int> sig;
        sig.reserve(g.factors[fi].arity() + 1);
        for (const auto& arg : g.factors[fi].args())
            sig.push_back(colouring.variableColours[varIndex.at(arg.name)]);
        sig.push_back(colouring.factorColours[fi]);
        factorSignatures.push_back(std::move(sig));
    }
    std::vector<Colour> newFactorColours = dense_ids(factorSignatures);

    // Variable pass, seeing the freshly assigned factor colours. A factor
    // commutative w.r.t. S reports position 0 for its arguments in S;
    // positions are 1-based otherwise.
    std::vector<std::vector<std::pair<int, int>>> incoming(g.variables.size());
    for (std::size_t fi = 0; fi < g.factors.size(); ++fi) {
        const auto& comm = commutativeSets[fi];
        for (std::size_t p = 0; p < g.factors[fi].arity(); ++p) {
            const std::size_t vi = varIndex.at(g.factors[fi].args()[p].name);
            const bool suppressed = std::binary_search(comm.begin(), comm.end(), p);
            incoming[vi].emplace_back(newFactorColours[fi],
                                      suppressed ? 0 : static_cast<int>(p) + 1);
        }
    }
    std::vector<std::vector<int>> variableSignatures;
    variableSignatures.reserve(g.variables.size());
    for (std::size_t vi = 0; vi < g.variables.size(); ++vi) {
        std::sort(incoming[vi].begin(), incoming[vi].end());
        std::vector<int> sig;
        sig.reserve(incoming[vi].size() * 2 + 1);
        for (const auto& [colour, pos] : incoming[vi]) {
            sig.push_back(colour);
            sig.push_back(pos);
        }
        sig.push_back(colouring.variableColours[vi]);
        variableSignatures.push_back(std::move(sig));
    }

    Colouring next;
    next.variableColours = dense_ids(variableSignatures);
    next.factorColours = std::move(newFactorColours);
    next.round = colouring.round + 1;
    return next;
}

namespace {

std::vector<std::vector<std::string>> groups_of(const std::vector<Colour>& colours,
                                                const std::vector<std::string>& names) {
    std::map<Colour, std::vector<std::string>> byColour;
    for (std::size_t i = 0; i < colours.size(); ++i) byColour[colours[i]].push_back(names[i]);
    std::vector<std::vector<std::string>> groups;
    groups.reserve(byColour.size());
    for (auto& [colour, members] : byColour) {
        std::sort(members.begin(), members.end());
        groups.push_back(std::move(members));
    }
    std::sort(groups.begin(), groups.end());
    return groups;
}

} // namespace

Grouping run_cpr(FactorGraph graph, const CprOptions& opts) {
    validate_graph(graph);

    Colouring colouring;
    colouring.variableColours = initial_variable_colours(graph);
    colouring.factorColours = initial_factor_colours(graph, opts);

    // Detection runs after canonical rearrangement so the suppressed
    // positions refer to the final argument order.
    std::vector<CandidateSet> commutativeSets;
    commutativeSets.reserve(graph.factors.size());
    for (const auto& f : graph.factors) {
        const DecorResult r = decor(f);
        auto best = max_candidate(r.candidates);
        commutativeSets.push_back(best.value_or(CandidateSet{}));
    }

    const std::size_t maxRounds = graph.variables.size() + graph.factors.size() + 1;
    for (std::size_t round = 0; round < maxRounds; ++round) {
        Colouring next = pass_round(graph, colouring, commutativeSets);
        const bool stable = next.variableColours == colouring.variableColours &&
                            next.factorColours == colouring.factorColours;
        colouring = std::move(next);
        if (stable) break;
    }

    std::vector<std::string> variableNames;
    variableNames.reserve(graph.variables.size());
    for (const auto& v : graph.variables) variableNames.push_back(v.name);
    std::vector<std::string> factorNames;
    factorNames.reserve(graph.factors.size());
    for (const auto& f : graph.factors) factorNames.push_back(f.name());

    Grouping grouping;
    grouping.variableGroups = groups_of(colouring.variableColours, variableNames);
    grouping.factorGroups = groups_of(colouring.factorColours, factorNames);
    return grouping;
}

} // namespace fgsym
