#include "afcs/table.hpp"

#include <stdexcept>

#include <json.hpp>

#include "afcs/config_io.hpp"

namespace afcs {

void OutputTable::add_row(std::vector<Cell> row) {
    if (row.size() != schema.size())
        throw std::invalid_argument("OutputTable: row width != schema width");
    rows.push_back(std::move(row));
}

namespace {

std::string cell_text(const Cell& c) {
    if (std::holds_alternative<double>(c)) return fmt17(std::get<double>(c));
    return std::get<std::string>(c);
}

}  // namespace

void write_csv(const OutputTable& table, std::ostream& out) {
    for (const auto& [k, v] : table.metadata) out << "# " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < table.schema.size(); ++i)
        out << (i ? "," : "") << table.schema[i];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << cell_text(row[i]);
        out << "\n";
    }
}

void write_json(const OutputTable& table, std::ostream& out) {
    nlohmann::ordered_json doc;
    auto& meta = doc["metadata"];
    for (const auto& [k, v] : table.metadata) meta[k] = v;
    doc["schema"] = table.schema;
    auto& rows = doc["rows"];
    rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            // Doubles go through the same 17-digit formatting as CSV so
            // the two formats agree digit for digit.
            if (std::holds_alternative<double>(c))
                jrow.push_back(fmt17(std::get<double>(c)));
            else
                jrow.push_back(std::get<std::string>(c));
        }
        rows.push_back(std::move(jrow));
    }
    out << doc.dump(2) << "\n";
}

}  // namespace afcs
