// SPDX-License-Identifier: Apache-2.0
#include "archivelink/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "archivelink/errors.hpp"

namespace archivelink {

using nlohmann::ordered_json;

std::vector<YearlyStats> aggregate_yearly(std::span<const LinkResult> results) {
    std::map<int, YearlyStats> by_year;
    for (const LinkResult& lr : results) {
        YearlyStats& row = by_year[lr.top_year];
        row.year = lr.top_year;
        row.total += 1;
        if (lr.status != LinkStatus::not_archived) row.archived += 1;
        if (lr.status == LinkStatus::past_archived) {
            row.past_archived += 1;
            if (lr.changed) row.past_changed += 1;
        }
    }
    std::vector<YearlyStats> out;
    out.reserve(by_year.size());
    for (auto& [year, row] : by_year) out.push_back(row);
    return out;
}

std::vector<CategoryStats> aggregate_categories(std::span<const ProfileRecord> profiles,
                                                std::span<const LinkResult> results) {
    const long denom_all = static_cast<long>(results.size());
    const long denom_profiled = static_cast<long>(profiles.size());

    std::vector<CategoryStats> out;
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        Category category = static_cast<Category>(i);
        CategoryStats row;
        row.category = category;
        row.denom_all = denom_all;
        row.denom_profiled = denom_profiled;
        for (const ProfileRecord& record : profiles) {
            if (record.profile.get(category)) row.count += 1;
        }
        row.fraction_all =
            denom_all > 0 ? static_cast<double>(row.count) / static_cast<double>(denom_all)
                          : 0.0;
        row.fraction_profiled =
            denom_profiled > 0
                ? static_cast<double>(row.count) / static_cast<double>(denom_profiled)
                : 0.0;
        out.push_back(row);
    }
    return out;
}

std::string format_fraction(double value) {
    // nearbyint under the default FE_TONEAREST mode rounds half to even
    long long scaled = static_cast<long long>(std::nearbyint(value * 10000.0));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld.%04lld", scaled / 10000, scaled % 10000);
    return buf;
}

std::string emit_yearly_csv(std::span<const YearlyStats> stats) {
    std::ostringstream out;
    out << "year,total,archived,past_archived,past_changed\n";
    for (const YearlyStats& row : stats) {
        out << row.year << ',' << row.total << ',' << row.archived << ','
            << row.past_archived << ',' << row.past_changed << '\n';
    }
    return out.str();
}

std::string emit_categories_csv(std::span<const CategoryStats> stats) {
    std::ostringstream out;
    out << "category,count,denom_all,denom_profiled,fraction_all,fraction_profiled\n";
    for (const CategoryStats& row : stats) {
        out << to_string(row.category) << ',' << row.count << ',' << row.denom_all << ','
            << row.denom_profiled << ',' << format_fraction(row.fraction_all) << ','
            << format_fraction(row.fraction_profiled) << '\n';
    }
    return out.str();
}

std::string emit_plotdata_csv(std::span<const YearlyStats> stats) {
    std::ostringstream out;
    out << "year,frac_archived,frac_past_archived,frac_past_changed\n";
    for (const YearlyStats& row : stats) {
        double total = row.total > 0 ? static_cast<double>(row.total) : 1.0;
        out << row.year << ',' << format_fraction(row.archived / total) << ','
            << format_fraction(row.past_archived / total) << ','
            << format_fraction(row.past_changed / total) << '\n';
    }
    return out.str();
}

std::string emit_yearly_json(std::span<const YearlyStats> stats) {
    ordered_json rows = ordered_json::array();
    for (const YearlyStats& row : stats) {
        ordered_json obj;
        obj["year"] = row.year;
        obj["total"] = row.total;
        obj["archived"] = row.archived;
        obj["past_archived"] = row.past_archived;
        obj["past_changed"] = row.past_changed;
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

std::string emit_categories_json(std::span<const CategoryStats> stats) {
    ordered_json rows = ordered_json::array();
    for (const CategoryStats& row : stats) {
        ordered_json obj;
        obj["category"] = std::string(to_string(row.category));
        obj["count"] = row.count;
        obj["denom_all"] = row.denom_all;
        obj["denom_profiled"] = row.denom_profiled;
        obj["fraction_all"] = format_fraction(row.fraction_all);
        obj["fraction_profiled"] = format_fraction(row.fraction_profiled);
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

long parse_long(const std::string& cell) {
    try {
        std::size_t used = 0;
        long value = std::stol(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        return value;
    } catch (const std::exception&) {
        throw ParseError("bad integer cell '" + cell + "'");
    }
}

double parse_real(const std::string& cell) {
    try {
        std::size_t used = 0;
        double value = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        return value;
    } catch (const std::exception&) {
        throw ParseError("bad numeric cell '" + cell + "'");
    }
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text,
                                                const std::string& expected_header,
                                                std::size_t columns) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != expected_header) {
        throw ParseError("csv header mismatch, expected '" + expected_header + "'");
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != columns) {
            throw ParseError("csv row has " + std::to_string(cells.size()) +
                             " columns, expected " + std::to_string(columns));
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

std::vector<YearlyStats> parse_yearly_csv(const std::string& text) {
    std::vector<YearlyStats> out;
    for (const auto& cells :
         parse_csv(text, "year,total,archived,past_archived,past_changed", 5)) {
        YearlyStats row;
        row.year = static_cast<int>(parse_long(cells[0]));
        row.total = parse_long(cells[1]);
        row.archived = parse_long(cells[2]);
        row.past_archived = parse_long(cells[3]);
        row.past_changed = parse_long(cells[4]);
        out.push_back(row);
    }
    return out;
}

std::vector<CategoryStats> parse_categories_csv(const std::string& text) {
    std::vector<CategoryStats> out;
    for (const auto& cells : parse_csv(
             text, "category,count,denom_all,denom_profiled,fraction_all,fraction_profiled",
             6)) {
        CategoryStats row;
        row.category = category_from_string(cells[0]);
        row.count = parse_long(cells[1]);
        row.denom_all = parse_long(cells[2]);
        row.denom_profiled = parse_long(cells[3]);
        row.fraction_all = parse_real(cells[4]);
        row.fraction_profiled = parse_real(cells[5]);
        out.push_back(row);
    }
    return out;
}

}  // namespace archivelink
