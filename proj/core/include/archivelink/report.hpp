// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "archivelink/content_classifier.hpp"
#include "archivelink/temporal_linker.hpp"

namespace archivelink {

/// One row of the per-year table. Counts are nested:
/// past_changed <= past_archived <= archived <= total.
struct YearlyStats {
    int year = 0;
    long total = 0;          // softwares whose top publication is in `year`
    long archived = 0;       // status archived or past_archived
    long past_archived = 0;  // status past_archived
    long past_changed = 0;   // past_archived and changed

    bool operator==(const YearlyStats&) const = default;
};

/// One row of the category table, with both denominators: all linked
/// softwares and only those that produced a profile.
struct CategoryStats {
    Category category = Category::documentation;
    long count = 0;
    long denom_all = 0;
    long denom_profiled = 0;
    double fraction_all = 0.0;
    double fraction_profiled = 0.0;

    bool operator==(const CategoryStats&) const = default;
};

/// A profile paired with the software it was taken from, as read back from
/// the classify stage output.
struct ProfileRecord {
    std::string software_id;
    ContentProfile profile;

    bool operator==(const ProfileRecord&) const = default;
};

/// One YearlyStats per distinct top_year, ascending, years without
/// softwares omitted.
std::vector<YearlyStats> aggregate_yearly(std::span<const LinkResult> results);

/// Five rows in fixed category order. Fractions are count/denominator with
/// a zero denominator yielding 0.
std::vector<CategoryStats> aggregate_categories(std::span<const ProfileRecord> profiles,
                                                std::span<const LinkResult> results);

/// Rounds half-to-even at four decimals and formats with exactly four
/// decimal places, the serialization applied to every emitted fraction.
std::string format_fraction(double value);

/// Byte-deterministic table serializations. Headers:
///   yearly csv:     year,total,archived,past_archived,past_changed
///   categories csv: category,count,denom_all,denom_profiled,fraction_all,fraction_profiled
///   plotdata csv:   year,frac_archived,frac_past_archived,frac_past_changed
/// Plotdata rows are the per-year counts normalized by that year's total.
std::string emit_yearly_csv(std::span<const YearlyStats> stats);
std::string emit_categories_csv(std::span<const CategoryStats> stats);
std::string emit_plotdata_csv(std::span<const YearlyStats> stats);
std::string emit_yearly_json(std::span<const YearlyStats> stats);
std::string emit_categories_json(std::span<const CategoryStats> stats);

/// Parsers for the csv forms above (strict: exact headers, exact column
/// counts). Round-trip with the emitters.
std::vector<YearlyStats> parse_yearly_csv(const std::string& text);
std::vector<CategoryStats> parse_categories_csv(const std::string& text);

}  // namespace archivelink
