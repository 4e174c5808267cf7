#include "famc/table_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace famc {

namespace {

GroupPtr from_json(const nlohmann::json& j, std::size_t max_order) {
    if (!j.is_object()) throw NotAGroupError("top-level JSON must be an object");
    if (!j.contains("order") || !j["order"].is_number_unsigned()) {
        throw NotAGroupError("missing or invalid \"order\"");
    }
    if (!j.contains("table") || !j["table"].is_array()) {
        throw NotAGroupError("missing or invalid \"table\"");
    }
    const std::size_t n = j["order"].get<std::size_t>();
    const auto& rows = j["table"];
    if (rows.size() != n) {
        throw NotAGroupError("\"table\" row count does not match \"order\"");
    }
    std::vector<std::vector<Elem>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) {
            throw NotAGroupError("row " + std::to_string(i) +
                                 " is not an array of length " +
                                 std::to_string(n));
        }
        table[i].reserve(n);
        for (const auto& cell : rows[i]) {
            if (!cell.is_number_unsigned()) {
                throw NotAGroupError("row " + std::to_string(i) +
                                     " contains a non-index entry");
            }
            const auto v = cell.get<std::uint64_t>();
            if (v >= n) {
                throw NotAGroupError("row " + std::to_string(i) +
                                     " contains out-of-range entry " +
                                     std::to_string(v));
            }
            table[i].push_back(Elem(v));
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != n) {
            throw NotAGroupError("\"labels\" must be an array of length " +
                                 std::to_string(n));
        }
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw NotAGroupError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return build_group(table, std::move(labels), max_order);
}

}  // namespace

GroupPtr load_group_json(std::istream& in, std::size_t max_order) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw NotAGroupError(std::string("invalid JSON: ") + e.what());
    }
    return from_json(j, max_order);
}

GroupPtr load_group_file(const std::string& path, std::size_t max_order) {
    std::ifstream in(path);
    if (!in) throw NotAGroupError("cannot open file: " + path);
    return load_group_json(in, max_order);
}

GroupPtr load_group_string(const std::string& text, std::size_t max_order) {
    std::istringstream in(text);
    return load_group_json(in, max_order);
}

std::string group_to_json(const FiniteGroup& g) {
    nlohmann::json j;
    const std::size_t n = g.order();
    j["order"] = n;
    auto rows = nlohmann::json::array();
    for (Elem a = 0; a < n; ++a) {
        auto row = nlohmann::json::array();
        for (Elem b = 0; b < n; ++b) row.push_back(g.mul(a, b));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    if (g.has_labels()) {
        auto labels = nlohmann::json::array();
        for (Elem a = 0; a < n; ++a) labels.push_back(g.label(a));
        j["labels"] = std::move(labels);
    }
    return j.dump(2);
}

}  // namespace famc
