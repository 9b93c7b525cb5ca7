#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgsym/errors.hpp"
#include "fgsym/potential.hpp"

namespace fgsym {

// A named discrete variable with an ordered range of at least two distinct
// labels and an optional observed value (which must be a member of the range).
struct RandomVariable {
    std::string name;
    std::vector<std::string> range;
    std::optional<std::string> evidence;

    bool same_range(const RandomVariable& other) const { return range == other.range; }
    friend bool operator==(const RandomVariable&, const RandomVariable&) = default;
};

void validate_variable(const RandomVariable& v);

// One value index per argument position (index into that argument's range).
using Assignment = std::vector<int>;

// Sorted, duplicate-free argument positions (0-based).
using PositionSet = std::vector<std::size_t>;

// A factor over an ordered, duplicate-free argument list. The table is dense
// and row-major with the LAST argument varying fastest, so the rows appear in
// the same order as a truth table printed with the first argument outermost.
class Factor {
public:
    const std::string& name() const noexcept { return name_; }
    const std::vector<RandomVariable>& args() const noexcept { return args_; }
    std::size_t arity() const noexcept { return args_.size(); }
    std::size_t table_size() const noexcept { return table_.size(); }
    const std::vector<Potential>& table() const noexcept { return table_; }
    const Potential& at(std::size_t row) const { return table_[row]; }

    std::size_t index_of(const Assignment& a) const;
    Assignment assignment_of(std::size_t row) const;
    void decode_row(std::size_t row, Assignment& out) const;

    // Advances `a` to the next row-major assignment; false once it wraps to
    // all zeros again.
    bool advance(Assignment& a) const;

    Assignment assignment_from_labels(const std::vector<std::string>& labels) const;

    friend bool operator==(const Factor&, const Factor&) = default;

private:
    friend Factor build_factor(std::string name, std::vector<RandomVariable> args,
                               std::vector<Potential> table);

    std::string name_;
    std::vector<RandomVariable> args_;
    std::vector<std::size_t> strides_;
    std::vector<Potential> table_;
};

Factor build_factor(std::string name, std::vector<RandomVariable> args,
                    std::vector<Potential> table);
Factor build_factor(std::string name, std::vector<RandomVariable> args,
                    const std::vector<std::string>& decimals);

const Potential& potential_of(const Factor& f, const Assignment& a);

// Returns a factor whose argument i is f's argument perm[i], with the table
// rewritten so semantics are preserved: g(r_{perm[0]}, ..., r_{perm[n-1]})
// equals f(r_0, ..., r_{n-1}) for every assignment.
Factor apply_argument_permutation(const Factor& f, const std::vector<std::size_t>& perm);

struct FactorGraph {
    std::vector<RandomVariable> variables;
    std::vector<Factor> factors;
};

// Checks name uniqueness and that every factor argument resolves to a declared
// variable with an identical range and evidence state.
void validate_graph(const FactorGraph& g);

const RandomVariable* find_variable(const FactorGraph& g, std::string_view name);
const Factor* find_factor(const FactorGraph& g, std::string_view name);

// Validates that every position is in range and that all of them carry the
// same ordered range labels; throws InvalidSubset / MixedRanges.
void require_shared_range(const Factor& f, const PositionSet& positions);

// True iff all positions carry identical ranges (no throw on mismatch).
bool shares_range(const Factor& f, const PositionSet& positions);

// Argument positions grouped by identical range, in order of first occurrence.
std::vector<PositionSet> range_groups(const Factor& f);

} // namespace fgsym
