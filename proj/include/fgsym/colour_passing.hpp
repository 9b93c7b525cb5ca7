#pragma once

#include <string>
#include <vector>

#include "fgsym/decor.hpp"
#include "fgsym/factor_graph.hpp"

namespace fgsym {

using Colour = int;

// Per-node colours, indexed by declaration order. Ids are allocated densely
// (first appearance first) on every reassignment, so two colourings describe
// the same partition iff their vectors are equal.
struct Colouring {
    std::vector<Colour> variableColours;
    std::vector<Colour> factorColours;
    int round = 0;
};

struct Grouping {
    std::vector<std::vector<std::string>> variableGroups;
    std::vector<std::vector<std::string>> factorGroups;

    friend bool operator==(const Grouping&, const Grouping&) = default;
};

struct CprOptions {
    // Order-independent factor matching is a brute-force permutation search;
    // factors above this arity throw ArityLimitExceeded when a search would
    // be required.
    std::size_t arityLimit = 8;
};

// Two variables share an initial colour iff their ordered ranges are
// identical and their evidence state (absent, or present with equal value)
// is identical.
std::vector<Colour> initial_variable_colours(const FactorGraph& g);

// Two factors share an initial colour iff some argument permutation of one
// yields exactly the other's table (with positionally matching ranges); a
// matched factor's arguments are rearranged in the graph to the
// representative's canonical order.
std::vector<Colour> initial_factor_colours(FactorGraph& g, const CprOptions& opts = {});

// One refinement round: factors are recoloured by (argument colours in
// argument order, own colour), then variables by the sorted list of
// (factor colour, position-or-0) pairs plus own colour. A factor commutative
// w.r.t. S sends position 0 to every argument in S.
Colouring pass_round(const FactorGraph& g, const Colouring& colouring,
                     const std::vector<CandidateSet>& commutativeSets);

// Runs detection per factor, initializes colours, and iterates pass_round to
// a fixpoint; returns the node groupings (groups and members sorted
// lexicographically).
Grouping run_cpr(FactorGraph graph, const CprOptions& opts = {});

} // namespace fgsym
