#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relaycrit::text {

/// One data line: an ordered list of key=value tokens.
struct Record {
    int line = 0;
    std::vector<std::pair<std::string, std::string>> fields;

    bool has(std::string_view key) const;
    const std::string* find(std::string_view key) const;

    std::string get(std::string_view key) const;  // throws ParseError when missing
    std::string get_or(std::string_view key, std::string fallback) const;
    double get_double(std::string_view key) const;
    double get_double_or(std::string_view key, double fallback) const;
    long long get_int(std::string_view key) const;
    long long get_int_or(std::string_view key, long long fallback) const;
    bool get_bool_or(std::string_view key, bool fallback) const;
    /// Comma-separated list value; empty value -> empty list.
    std::vector<std::string> get_list_or(std::string_view key) const;
};

struct Section {
    std::string name;
    int line = 0;
    std::vector<Record> records;
};

/// Parses the line-oriented section format shared by all relaycrit input
/// files:
///   - `[name]` opens a section,
///   - every other non-blank line is a record of whitespace-separated
///     key=value tokens (values must not contain whitespace),
///   - `#` starts a comment.
std::vector<Section> parse_sections(const std::string& text);

/// Throws ParseError naming the first field of `rec` outside `allowed`.
void reject_unknown_fields(const Record& rec,
                           std::initializer_list<std::string_view> allowed,
                           std::string_view section);

double parse_double(const std::string& value, int line, std::string_view key);
long long parse_int(const std::string& value, int line, std::string_view key);

}  // namespace relaycrit::text
