#include "jetpva/ringio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace jetpva {

using nlohmann::json;

RingPresentation parse_ring_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("ring JSON: ") + e.what());
    }

    RingPresentation R;
    if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
        throw ParseError("ring JSON: missing or empty \"vars\" array");
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) throw ParseError("ring JSON: \"vars\" entries must be strings");
        R.vars.push_back(VarId{v.get<std::string>(), 0});
    }

    auto parse_field = [](const std::string& field, const std::string& text) {
        try {
            return parse_polynomial(text);
        } catch (const ParseError& e) {
            throw ParseError("ring JSON field \"" + field + "\", polynomial \"" + text +
                             "\": " + e.what());
        }
    };

    if (j.contains("relations")) {
        for (const auto& r : j["relations"])
            R.relations.push_back(parse_field("relations", r.get<std::string>()));
    }

    if (j.contains("poisson")) {
        const auto& ps = j["poisson"];
        if (!ps.is_array() || ps.size() != R.vars.size())
            throw ParseError("ring JSON: \"poisson\" must be a " +
                             std::to_string(R.vars.size()) + "-row matrix");
        for (const auto& row : ps) {
            if (!row.is_array() || row.size() != R.vars.size())
                throw ParseError("ring JSON: \"poisson\" rows must have " +
                                 std::to_string(R.vars.size()) + " entries");
            std::vector<Polynomial> prow;
            for (const auto& entry : row)
                prow.push_back(parse_field("poisson", entry.get<std::string>()));
            R.poisson.push_back(std::move(prow));
        }
    }

    if (j.contains("weights")) {
        for (const auto& [name, w] : j["weights"].items()) {
            if (!w.is_number_integer() || w.get<long>() < 0)
                throw ParseError("ring JSON: weight of \"" + name +
                                 "\" must be a non-negative integer");
            R.weights[VarId{name, 0}] = w.get<long>();
        }
        for (const auto& v : R.vars)
            if (!R.weights.count(v))
                throw ParseError("ring JSON: \"weights\" misses variable \"" + v.base + "\"");
    }
    return R;
}

RingPresentation load_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ring file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ring_json(buf.str());
}

std::string ring_to_json(const RingPresentation& R) {
    json j;
    j["vars"] = json::array();
    for (const auto& v : R.vars) j["vars"].push_back(v.base);
    if (!R.relations.empty()) {
        j["relations"] = json::array();
        for (const auto& r : R.relations) j["relations"].push_back(r.str());
    }
    if (R.has_poisson()) {
        j["poisson"] = json::array();
        for (const auto& row : R.poisson) {
            json jrow = json::array();
            for (const auto& entry : row) jrow.push_back(entry.str());
            j["poisson"].push_back(jrow);
        }
    }
    if (R.has_weights()) {
        j["weights"] = json::object();
        for (const auto& [v, w] : R.weights) j["weights"][v.base] = w;
    }
    return j.dump(2) + "\n";
}

} // namespace jetpva
