#include "cli/output.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>

namespace qwalk::cli {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
    return std::get<std::string>(c);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table, const std::string& metadata_line) {
    if (!metadata_line.empty()) out << "# " << metadata_line << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
}

nlohmann::ordered_json rows_to_json(const Table& table) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        // JSON has no NaN; emit null
                        obj[table.columns[i]] = std::isfinite(v) ? nlohmann::ordered_json(v) : nullptr;
                    } else {
                        obj[table.columns[i]] = v;
                    }
                },
                row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace qwalk::cli
