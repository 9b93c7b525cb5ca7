#include "fgsym/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fgsym {

namespace {

using nlohmann::json;

RandomVariable variable_from_json(const json& jv) {
    RandomVariable v;
    v.name = jv.at("name").get<std::string>();
    for (const auto& label : jv.at("range")) v.range.push_back(label.get<std::string>());
    if (jv.contains("evidence") && !jv.at("evidence").is_null())
        v.evidence = jv.at("evidence").get<std::string>();
    validate_variable(v);
    return v;
}

} // namespace

FactorGraph factor_graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FgError(Errc::BadInput, std::string("invalid JSON: ") + e.what());
    }

    try {
        FactorGraph g;
        for (const auto& jv : j.at("variables")) g.variables.push_back(variable_from_json(jv));
        for (const auto& jf : j.at("factors")) {
            const auto name = jf.at("name").get<std::string>();
            std::vector<RandomVariable> args;
            for (const auto& argName : jf.at("args")) {
                const RandomVariable* v = find_variable(g, argName.get<std::string>());
                if (!v)
                    throw FgError(Errc::BadInput, "factor '" + name + "' references unknown variable '" +
                                                      argName.get<std::string>() + "'");
                args.push_back(*v);
            }
            std::vector<std::string> table;
            for (const auto& cell : jf.at("table")) table.push_back(cell.get<std::string>());
            g.factors.push_back(build_factor(name, std::move(args), table));
        }
        validate_graph(g);
        return g;
    } catch (const json::exception& e) {
        throw FgError(Errc::BadInput, std::string("malformed factor graph: ") + e.what());
    }
}

FactorGraph load_factor_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FgError(Errc::BadInput, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return factor_graph_from_json(buffer.str());
}

std::string factor_graph_to_json(const FactorGraph& g) {
    json j;
    j["variables"] = json::array();
    for (const auto& v : g.variables) {
        json jv;
        jv["name"] = v.name;
        jv["range"] = v.range;
        jv["evidence"] = v.evidence ? json(*v.evidence) : json(nullptr);
        j["variables"].push_back(std::move(jv));
    }
    j["factors"] = json::array();
    for (const auto& f : g.factors) {
        json jf;
        jf["name"] = f.name();
        jf["args"] = json::array();
        for (const auto& arg : f.args()) jf["args"].push_back(arg.name);
        jf["table"] = json::array();
        for (const auto& p : f.table()) jf["table"].push_back(p.text());
        j["factors"].push_back(std::move(jf));
    }
    return j.dump(2);
}

void save_factor_graph(const FactorGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw FgError(Errc::BadInput, "cannot write '" + path + "'");
    out << factor_graph_to_json(g) << '\n';
}

std::string grouping_to_json(const Grouping& g) {
    auto sorted = [](std::vector<std::vector<std::string>> groups) {
        for (auto& members : groups) std::sort(members.begin(), members.end());
        std::sort(groups.begin(), groups.end());
        return groups;
    };
    json j;
    j["variable_groups"] = sorted(g.variableGroups);
    j["factor_groups"] = sorted(g.factorGroups);
    return j.dump(2);
}

} // namespace fgsym
