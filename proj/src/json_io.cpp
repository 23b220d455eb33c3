#include "json_io.hpp"

#include "mzvreg/error.hpp"

namespace mzvreg::jsonio {

json to_json(const SetPartition& pi) {
    json out = json::array();
    for (const auto& b : pi.blocks())
        out.push_back(b);
    return out;
}

SetPartition partition_from_json(const json& j) {
    try {
        return SetPartition::from_blocks(j.get<std::vector<std::vector<int>>>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
}

json to_json(const IndexCombination& c) {
    json out = json::array();
    for (const auto& [k, q] : c.terms())
        out.push_back({{"term", k.to_string()}, {"coefficient", to_string(q)}});
    return out;
}

json to_json(const WordCombination& c) {
    json out = json::array();
    for (const auto& [w, q] : c.terms())
        out.push_back({{"term", w.letters()}, {"coefficient", to_string(q)}});
    return out;
}

json to_json(const Approx& a) { return {{"value", a.value.to_string()}, {"bound", a.bound.to_string(6)}}; }

json to_json(const MzvSymbolPoly& p) {
    json out = json::array();
    for (const auto& c : p.coefficients())
        out.push_back(to_string(c));
    return out;
}

json to_json(const TPoly<Approx>& p) {
    json out = json::array();
    for (const auto& c : p.coefficients())
        out.push_back(to_json(c));
    return out;
}

}  // namespace mzvreg::jsonio
