#ifndef AFCS_TABLE_HPP
#define AFCS_TABLE_HPP

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace afcs {

using Cell = std::variant<double, std::string>;

/// Self-describing numeric table: ordered schema, rows, and enough
/// metadata (config echo, seed, version) to reproduce it exactly.
struct OutputTable {
    std::vector<std::string> schema;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_meta(const std::string& key, const std::string& value) {
        metadata.emplace_back(key, value);
    }
    void add_row(std::vector<Cell> row);
};

/// CSV with `#`-prefixed metadata header lines; doubles at 17
/// significant digits, byte-stable for fixed inputs.
void write_csv(const OutputTable& table, std::ostream& out);

/// Single JSON document: {"metadata": {...}, "schema": [...], "rows": [[...]]}.
void write_json(const OutputTable& table, std::ostream& out);

}  // namespace afcs

#endif
