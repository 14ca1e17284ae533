#include "relaycrit/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "relaycrit/errors.hpp"

namespace relaycrit::text {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

bool Record::has(std::string_view key) const { return find(key) != nullptr; }

const std::string* Record::find(std::string_view key) const {
    for (const auto& [k, v] : fields) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string Record::get(std::string_view key) const {
    if (const std::string* v = find(key)) return *v;
    throw ParseError("missing required field '" + std::string(key) + "'", line);
}

std::string Record::get_or(std::string_view key, std::string fallback) const {
    if (const std::string* v = find(key)) return *v;
    return fallback;
}

double Record::get_double(std::string_view key) const {
    return parse_double(get(key), line, key);
}

double Record::get_double_or(std::string_view key, double fallback) const {
    if (const std::string* v = find(key)) return parse_double(*v, line, key);
    return fallback;
}

long long Record::get_int(std::string_view key) const {
    return parse_int(get(key), line, key);
}

long long Record::get_int_or(std::string_view key, long long fallback) const {
    if (const std::string* v = find(key)) return parse_int(*v, line, key);
    return fallback;
}

bool Record::get_bool_or(std::string_view key, bool fallback) const {
    const std::string* v = find(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw ParseError("field '" + std::string(key) + "' expects a boolean, got '" + *v + "'", line);
}

std::vector<std::string> Record::get_list_or(std::string_view key) const {
    std::vector<std::string> out;
    const std::string* v = find(key);
    if (!v || v->empty()) return out;
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& value, int line, std::string_view key) {
    const char* begin = value.c_str();
    char* end = nullptr;
    double d = std::strtod(begin, &end);
    if (end != begin + value.size() || value.empty()) {
        throw ParseError("field '" + std::string(key) + "' expects a number, got '" + value + "'",
                         line);
    }
    return d;
}

long long parse_int(const std::string& value, int line, std::string_view key) {
    const char* begin = value.c_str();
    char* end = nullptr;
    long long i = std::strtoll(begin, &end, 10);
    if (end != begin + value.size() || value.empty()) {
        throw ParseError("field '" + std::string(key) + "' expects an integer, got '" + value + "'",
                         line);
    }
    return i;
}

std::vector<Section> parse_sections(const std::string& textdata) {
    std::vector<Section> sections;
    std::istringstream in(textdata);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ParseError("malformed section header '" + std::string(line) + "'", lineno);
            }
            Section s;
            s.name = std::string(trim(line.substr(1, line.size() - 2)));
            s.line = lineno;
            sections.push_back(std::move(s));
            continue;
        }
        if (sections.empty()) {
            throw ParseError("data before the first [section] header", lineno);
        }

        Record rec;
        rec.line = lineno;
        size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
            std::string_view token = line.substr(pos, end - pos);
            pos = end;

            auto eq = token.find('=');
            if (eq == std::string_view::npos || eq == 0) {
                throw ParseError("expected key=value token, got '" + std::string(token) + "'",
                                 lineno);
            }
            std::string key(token.substr(0, eq));
            std::string value(token.substr(eq + 1));
            if (rec.has(key)) {
                throw ParseError("duplicate field '" + key + "'", lineno);
            }
            rec.fields.emplace_back(std::move(key), std::move(value));
        }
        sections.back().records.push_back(std::move(rec));
    }
    return sections;
}

void reject_unknown_fields(const Record& rec,
                           std::initializer_list<std::string_view> allowed,
                           std::string_view section) {
    for (const auto& [k, v] : rec.fields) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
            throw ParseError("unknown field '" + k + "' in [" + std::string(section) + "]",
                             rec.line);
        }
    }
}

}  // namespace relaycrit::text
