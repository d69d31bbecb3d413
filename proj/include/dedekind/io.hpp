#pragma once

/**
 * @file io.hpp
 * @brief CSV / JSON / table rendering for reports, census rows, level-set
 *        tables and benchmark records.
 *
 * CSV headers are stable interface:
 *   theorem reports: b,a1,a2,s1,s2,sums_equal,divisible,verdict
 *   census:          b,r,phi,num_classes,min_class,max_class
 *   level sets:      b,value,size,members        (members space-separated)
 *   bench:           method,b_bits,trials,mean_time_ns,checksum,skipped
 * JSON mirrors the same fields field-for-field. All output is byte-
 * deterministic for a given input.
 */

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bench.hpp"
#include "rational.hpp"
#include "theorems.hpp"

namespace dedekind {

enum class Format { table, csv, json };

inline const char* bool_word(bool v) { return v ? "true" : "false"; }

/// Checked narrowing for JSON number emission.
inline std::int64_t to_int64(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("to_int64: value exceeds 64-bit range");
    return v.convert_to<std::int64_t>();
}

namespace detail {

inline std::string json_dump(const nlohmann::ordered_json& j) {
    return j.dump(2) + "\n";
}

// left-justified cell padded to `width`, always ending in at least one space
inline void cell(std::ostream& os, const std::string& text, std::size_t width) {
    os << text;
    os << std::string(text.size() < width ? width - text.size() : 1, ' ');
}

}  // namespace detail

inline std::string render_reports(const std::vector<TheoremReport>& reports,
                                  Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::csv:
        os << "b,a1,a2,s1,s2,sums_equal,divisible,verdict\n";
        for (const auto& r : reports)
            os << r.b << ',' << r.a1 << ',' << r.a2 << ',' << r.s1 << ','
               << r.s2 << ',' << bool_word(r.sums_equal) << ','
               << bool_word(r.divisibility_holds) << ',' << to_string(r.verdict)
               << '\n';
        return os.str();
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            arr.push_back({{"b", to_int64(r.b)},
                           {"a1", to_int64(r.a1)},
                           {"a2", to_int64(r.a2)},
                           {"s1", r.s1.to_string()},
                           {"s2", r.s2.to_string()},
                           {"sums_equal", r.sums_equal},
                           {"divisible", r.divisibility_holds},
                           {"verdict", to_string(r.verdict)}});
        return detail::json_dump(arr);
    }
    case Format::table:
        detail::cell(os, "b", 6);
        detail::cell(os, "a1", 8);
        detail::cell(os, "a2", 8);
        detail::cell(os, "s1", 14);
        detail::cell(os, "s2", 14);
        detail::cell(os, "sums_equal", 11);
        detail::cell(os, "divisible", 10);
        os << "verdict\n";
        for (const auto& r : reports) {
            detail::cell(os, r.b.str(), 6);
            detail::cell(os, r.a1.str(), 8);
            detail::cell(os, r.a2.str(), 8);
            detail::cell(os, r.s1.to_string(), 14);
            detail::cell(os, r.s2.to_string(), 14);
            detail::cell(os, bool_word(r.sums_equal), 11);
            detail::cell(os, bool_word(r.divisibility_holds), 10);
            os << to_string(r.verdict) << '\n';
        }
        return os.str();
    }
    return {};
}

inline std::string render_census(const std::vector<CensusRow>& rows, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::csv:
        os << "b,r,phi,num_classes,min_class,max_class\n";
        for (const auto& row : rows)
            os << row.b << ',' << row.r << ',' << row.unit_count << ','
               << row.num_classes << ',' << row.min_class_size << ','
               << row.max_class_size << '\n';
        return os.str();
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows)
            arr.push_back({{"b", to_int64(row.b)},
                           {"r", row.r},
                           {"phi", row.unit_count},
                           {"num_classes", row.num_classes},
                           {"min_class", row.min_class_size},
                           {"max_class", row.max_class_size}});
        return detail::json_dump(arr);
    }
    case Format::table:
        detail::cell(os, "b", 8);
        detail::cell(os, "r", 3);
        detail::cell(os, "phi", 8);
        detail::cell(os, "num_classes", 12);
        detail::cell(os, "min_class", 10);
        os << "max_class\n";
        for (const auto& row : rows) {
            detail::cell(os, row.b.str(), 8);
            detail::cell(os, std::to_string(row.r), 3);
            detail::cell(os, std::to_string(row.unit_count), 8);
            detail::cell(os, std::to_string(row.num_classes), 12);
            detail::cell(os, std::to_string(row.min_class_size), 10);
            os << row.max_class_size << '\n';
        }
        return os.str();
    }
    return {};
}

namespace detail {

inline std::string join_members(const std::vector<Int>& members) {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ' ';
        out += members[i].str();
    }
    return out;
}

}  // namespace detail

inline std::string render_level_sets(const LevelSetTable& table, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::csv:
        os << "b,value,size,members\n";
        for (const auto& [value, members] : table.entries)
            os << table.b << ',' << value << ',' << members.size() << ','
               << detail::join_members(members) << '\n';
        return os.str();
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [value, members] : table.entries) {
            nlohmann::ordered_json ms = nlohmann::ordered_json::array();
            for (const Int& m : members) ms.push_back(to_int64(m));
            arr.push_back({{"b", to_int64(table.b)},
                           {"value", value.to_string()},
                           {"size", members.size()},
                           {"members", ms}});
        }
        return detail::json_dump(arr);
    }
    case Format::table:
        detail::cell(os, "b", 8);
        detail::cell(os, "value", 14);
        detail::cell(os, "size", 5);
        os << "members\n";
        for (const auto& [value, members] : table.entries) {
            detail::cell(os, table.b.str(), 8);
            detail::cell(os, value.to_string(), 14);
            detail::cell(os, std::to_string(members.size()), 5);
            os << detail::join_members(members) << '\n';
        }
        return os.str();
    }
    return {};
}

inline std::string render_bench(const std::vector<BenchRecord>& records,
                                Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::csv:
        os << "method,b_bits,trials,mean_time_ns,checksum,skipped\n";
        for (const auto& rec : records)
            os << rec.method << ',' << rec.b_bits << ',' << rec.trials << ','
               << rec.mean_time_ns << ',' << rec.checksum << ','
               << bool_word(rec.skipped) << '\n';
        return os.str();
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& rec : records)
            arr.push_back({{"method", rec.method},
                           {"b_bits", rec.b_bits},
                           {"trials", rec.trials},
                           {"mean_time_ns", rec.mean_time_ns},
                           {"checksum", rec.checksum.to_string()},
                           {"skipped", rec.skipped}});
        return detail::json_dump(arr);
    }
    case Format::table:
        detail::cell(os, "method", 8);
        detail::cell(os, "b_bits", 8);
        detail::cell(os, "trials", 8);
        detail::cell(os, "mean_time_ns", 13);
        detail::cell(os, "checksum", 20);
        os << "skipped\n";
        for (const auto& rec : records) {
            detail::cell(os, rec.method, 8);
            detail::cell(os, std::to_string(rec.b_bits), 8);
            detail::cell(os, std::to_string(rec.trials), 8);
            detail::cell(os, std::to_string(rec.mean_time_ns), 13);
            detail::cell(os, rec.checksum.to_string(), 20);
            os << bool_word(rec.skipped) << '\n';
        }
        return os.str();
    }
    return {};
}

}  // namespace dedekind
