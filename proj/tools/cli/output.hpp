#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qwalk::cli {

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Shortest text that round-trips the double; "nan"/"inf" for non-finite.
std::string format_real(double v);

// Optional '#' metadata line, then one header row, then data.
void write_csv(std::ostream& out, const Table& table, const std::string& metadata_line = {});

// Rows as an array of objects keyed by column name.
nlohmann::ordered_json rows_to_json(const Table& table);

// ISO-8601 UTC, seconds resolution.
std::string utc_timestamp();

}  // namespace qwalk::cli
