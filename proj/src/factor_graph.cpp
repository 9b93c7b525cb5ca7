#include "fgsym/factor_graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace fgsym {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 28;

} // namespace

void validate_variable(const RandomVariable& v) {
    if (v.name.empty())
        throw FgError(Errc::BadInput, "variable with empty name");
    if (v.range.size() < 2)
        throw FgError(Errc::BadInput, "variable '" + v.name + "' needs a range of size >= 2");
    std::unordered_set<std::string_view> seen;
    for (const auto& label : v.range) {
        if (label.empty())
            throw FgError(Errc::BadInput, "variable '" + v.name + "' has an empty range label");
        if (!seen.insert(label).second)
            throw FgError(Errc::BadInput,
                          "variable '" + v.name + "' has duplicate range label '" + label + "'");
    }
    if (v.evidence &&
        std::find(v.range.begin(), v.range.end(), *v.evidence) == v.range.end())
        throw FgError(Errc::BadInput, "evidence '" + *v.evidence + "' not in range of '" +
                                          v.name + "'");
}

Factor build_factor(std::string name, std::vector<RandomVariable> args,
                    std::vector<Potential> table) {
    if (name.empty())
        throw FgError(Errc::BadInput, "factor with empty name");
    if (args.empty())
        throw FgError(Errc::BadInput, "factor '" + name + "' needs at least one argument");

    std::unordered_set<std::string_view> argNames;
    for (const auto& arg : args) {
        validate_variable(arg);
        if (!argNames.insert(arg.name).second)
            throw FgError(Errc::DuplicateArgument,
                          "factor '" + name + "' repeats argument '" + arg.name + "'");
    }

    std::size_t expected = 1;
    for (const auto& arg : args) {
        if (expected > kMaxTableSize / arg.range.size())
            throw FgError(Errc::TableTooLarge, "factor '" + name + "' table too large");
        expected *= arg.range.size();
    }
    if (table.size() != expected)
        throw FgError(Errc::LengthMismatch,
                      "factor '" + name + "' expects " + std::to_string(expected) +
                          " potentials, got " + std::to_string(table.size()));

    Factor f;
    f.name_ = std::move(name);
    f.args_ = std::move(args);
    f.table_ = std::move(table);
    f.strides_.assign(f.args_.size(), 1);
    for (std::size_t i = f.args_.size(); i-- > 1;)
        f.strides_[i - 1] = f.strides_[i] * f.args_[i].range.size();
    return f;
}

Factor build_factor(std::string name, std::vector<RandomVariable> args,
                    const std::vector<std::string>& decimals) {
    std::vector<Potential> table;
    table.reserve(decimals.size());
    for (const auto& d : decimals) table.emplace_back(d);
    return build_factor(std::move(name), std::move(args), std::move(table));
}

std::size_t Factor::index_of(const Assignment& a) const {
    if (a.size() != args_.size())
        throw FgError(Errc::InvalidAssignment, "assignment arity mismatch for '" + name_ + "'");
    std::size_t row = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || static_cast<std::size_t>(a[i]) >= args_[i].range.size())
            throw FgError(Errc::InvalidAssignment,
                          "value index out of range at position " + std::to_string(i));
        row += static_cast<std::size_t>(a[i]) * strides_[i];
    }
    return row;
}

Assignment Factor::assignment_of(std::size_t row) const {
    Assignment a(args_.size());
    decode_row(row, a);
    return a;
}

void Factor::decode_row(std::size_t row, Assignment& out) const {
    out.resize(args_.size());
    for (std::size_t i = 0; i < args_.size(); ++i) {
        out[i] = static_cast<int>(row / strides_[i]);
        row %= strides_[i];
    }
}

bool Factor::advance(Assignment& a) const {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (static_cast<std::size_t>(++a[i]) < args_[i].range.size()) return true;
        a[i] = 0;
    }
    return false;
}

Assignment Factor::assignment_from_labels(const std::vector<std::string>& labels) const {
    if (labels.size() != args_.size())
        throw FgError(Errc::InvalidAssignment, "assignment arity mismatch for '" + name_ + "'");
    Assignment a(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& range = args_[i].range;
        const auto it = std::find(range.begin(), range.end(), labels[i]);
        if (it == range.end())
            throw FgError(Errc::InvalidAssignment,
                          "label '" + labels[i] + "' not in range of argument " +
                              std::to_string(i));
        a[i] = static_cast<int>(it - range.begin());
    }
    return a;
}

const Potential& potential_of(const Factor& f, const Assignment& a) {
    return f.at(f.index_of(a));
}

Factor apply_argument_permutation(const Factor& f, const std::vector<std::size_t>& perm) {
    const std::size_t n = f.arity();
    if (perm.size() != n)
        throw FgError(Errc::InvalidPermutation, "permutation arity mismatch");
    std::vector<char> seen(n, 0);
    for (const std::size_t p : perm) {
        if (p >= n || seen[p])
            throw FgError(Errc::InvalidPermutation, "not a permutation of argument positions");
        seen[p] = 1;
    }

    std::vector<RandomVariable> newArgs;
    newArgs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) newArgs.push_back(f.args()[perm[i]]);

    // The new row (a_0, ..., a_{n-1}) reads f at the assignment b with
    // b[perm[i]] = a[i]; iterate the new factor's rows in row-major order.
    std::vector<Potential> table;
    table.reserve(f.table_size());
    Assignment a(n, 0);
    Assignment b(n, 0);
    for (std::size_t row = 0; row < f.table_size(); ++row) {
        for (std::size_t i = 0; i < n; ++i) b[perm[i]] = a[i];
        table.push_back(f.at(f.index_of(b)));
        for (std::size_t i = n; i-- > 0;) {
            if (static_cast<std::size_t>(++a[i]) < newArgs[i].range.size()) break;
            a[i] = 0;
        }
    }
    return build_factor(f.name(), std::move(newArgs), std::move(table));
}

void validate_graph(const FactorGraph& g) {
    std::unordered_set<std::string_view> varNames;
    for (const auto& v : g.variables) {
        validate_variable(v);
        if (!varNames.insert(v.name).second)
            throw FgError(Errc::BadInput, "duplicate variable name '" + v.name + "'");
    }
    std::unordered_set<std::string_view> factorNames;
    for (const auto& f : g.factors) {
        if (!factorNames.insert(f.name()).second)
            throw FgError(Errc::BadInput, "duplicate factor name '" + f.name() + "'");
        for (const auto& arg : f.args()) {
            const RandomVariable* v = find_variable(g, arg.name);
            if (!v)
                throw FgError(Errc::BadInput, "factor '" + f.name() + "' references unknown variable '" +
                                                  arg.name + "'");
            if (!(*v == arg))
                throw FgError(Errc::BadInput, "factor '" + f.name() + "' disagrees with variable '" +
                                                  arg.name + "' on range or evidence");
        }
    }
}

const RandomVariable* find_variable(const FactorGraph& g, std::string_view name) {
    for (const auto& v : g.variables)
        if (v.name == name) return &v;
    return nullptr;
}

const Factor* find_factor(const FactorGraph& g, std::string_view name) {
    for (const auto& f : g.factors)
        if (f.name() == name) return &f;
    return nullptr;
}

void require_shared_range(const Factor& f, const PositionSet& positions) {
    for (const std::size_t p : positions)
        if (p >= f.arity())
            throw FgError(Errc::InvalidSubset,
                          "argument position " + std::to_string(p) + " out of range");
    for (std::size_t i = 1; i < positions.size(); ++i)
        if (!f.args()[positions[i]].same_range(f.args()[positions[0]]))
            throw FgError(Errc::MixedRanges, "argument positions do not share one range");
}

bool shares_range(const Factor& f, const PositionSet& positions) {
    for (const std::size_t p : positions)
        if (p >= f.arity())
            throw FgError(Errc::InvalidSubset,
                          "argument position " + std::to_string(p) + " out of range");
    for (std::size_t i = 1; i < positions.size(); ++i)
        if (!f.args()[positions[i]].same_range(f.args()[positions[0]])) return false;
    return true;
}

std::vector<PositionSet> range_groups(const Factor& f) {
    std::vector<PositionSet> groups;
    std::vector<const std::vector<std::string>*> ranges;
    for (std::size_t p = 0; p < f.arity(); ++p) {
        const auto& range = f.args()[p].range;
        bool placed = false;
        for (std::size_t gi = 0; gi < ranges.size(); ++gi) {
            if (*ranges[gi] == range) {
                groups[gi].push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) {
            ranges.push_back(&range);
            groups.push_back({p});
        }
    }
    return groups;
}

} // namespace fgsym
