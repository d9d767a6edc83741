#pragma once

// Tabular command output with CSV and JSON serializations that parse back to
// identical values. Doubles are written in shortest round-trip form.
//
// CSV layout:
//   # schema_version: 1
//   # command: moments
//   # param.n: 5
//   # meta.seed: 42
//   m,value
//   1,0.7936981950337536
//
// Strings are double-quoted (embedded quotes doubled); an empty field is a
// missing value.

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace polymoments {

inline constexpr const char* kSchemaVersion = "1";

using Cell = std::variant<std::monostate, double, std::string>;
using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct OutputRecord {
    std::string schema_version = kSchemaVersion;
    std::string command;
    KeyValues params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    KeyValues metadata;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size())
            throw std::logic_error("row width does not match the column count");
        rows.push_back(std::move(row));
    }
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ParseError("not a number: '" + std::string(text) + "'");
    return v;
}

namespace detail {

inline std::string quote_csv(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string cell_to_csv(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<std::string>(c)) return quote_csv(std::get<std::string>(c));
    return {};
}

/// Splits one CSV line into raw fields, keeping quotes so strings stay distinguishable.
inline std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            cur += c;
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            }
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            if (c == '"') quoted = true;
            cur += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

inline std::string unquote_csv(std::string_view f) {
    if (f.size() < 2 || f.front() != '"' || f.back() != '"')
        throw ParseError("malformed quoted field");
    std::string out;
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        out += f[i];
        if (f[i] == '"') ++i;
    }
    return out;
}

inline Cell cell_from_csv(const std::string& f) {
    if (f.empty()) return std::monostate{};
    if (f.front() == '"') return unquote_csv(f);
    return parse_double(f);
}

}  // namespace detail

inline std::string to_csv(const OutputRecord& rec) {
    std::ostringstream os;
    os << "# schema_version: " << rec.schema_version << '\n';
    os << "# command: " << rec.command << '\n';
    for (const auto& [k, v] : rec.params) os << "# param." << k << ": " << v << '\n';
    for (const auto& [k, v] : rec.metadata) os << "# meta." << k << ": " << v << '\n';
    for (std::size_t i = 0; i < rec.columns.size(); ++i)
        os << (i ? "," : "") << rec.columns[i];
    os << '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::cell_to_csv(row[i]);
        os << '\n';
    }
    return os.str();
}

inline OutputRecord parse_csv(const std::string& text) {
    OutputRecord rec;
    rec.schema_version.clear();
    std::istringstream is(text);
    std::string line;
    bool have_columns = false;
    while (std::getline(is, line)) {
        if (line.rfind("# ", 0) == 0) {
            if (have_columns) throw ParseError("header line after the column row");
            const auto colon = line.find(": ", 2);
            if (colon == std::string::npos) throw ParseError("header line without ': '");
            const std::string key = line.substr(2, colon - 2);
            std::string value = line.substr(colon + 2);
            if (key == "schema_version") rec.schema_version = std::move(value);
            else if (key == "command") rec.command = std::move(value);
            else if (key.rfind("param.", 0) == 0) rec.params.emplace_back(key.substr(6), std::move(value));
            else if (key.rfind("meta.", 0) == 0) rec.metadata.emplace_back(key.substr(5), std::move(value));
            else throw ParseError("unknown header key '" + key + "'");
            continue;
        }
        if (!have_columns) {
            rec.columns = line.empty() ? std::vector<std::string>{} : detail::split_csv(line);
            have_columns = true;
            continue;
        }
        std::vector<Cell> row;
        for (const auto& f : detail::split_csv(line)) row.push_back(detail::cell_from_csv(f));
        if (row.size() != rec.columns.size()) throw ParseError("row width differs from header");
        rec.rows.push_back(std::move(row));
    }
    if (!have_columns) throw ParseError("missing column row");
    return rec;
}

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson key_values_to_json(const KeyValues& kv) {
    ojson out = ojson::object();
    for (const auto& [k, v] : kv) out[k] = v;
    return out;
}

inline KeyValues key_values_from_json(const ojson& j) {
    KeyValues out;
    for (const auto& [k, v] : j.items()) out.emplace_back(k, v.get<std::string>());
    return out;
}

}  // namespace detail

inline std::string to_json(const OutputRecord& rec) {
    using detail::ojson;
    ojson j;
    j["schema_version"] = rec.schema_version;
    j["command"] = rec.command;
    j["params"] = detail::key_values_to_json(rec.params);
    j["columns"] = rec.columns;
    ojson rows = ojson::array();
    for (const auto& row : rec.rows) {
        ojson r = ojson::array();
        for (const Cell& c : row) {
            if (std::holds_alternative<double>(c)) r.push_back(std::get<double>(c));
            else if (std::holds_alternative<std::string>(c)) r.push_back(std::get<std::string>(c));
            else r.push_back(nullptr);
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["metadata"] = detail::key_values_to_json(rec.metadata);
    return j.dump(2) + "\n";
}

inline OutputRecord parse_json(const std::string& text) {
    using detail::ojson;
    ojson j;
    try {
        j = ojson::parse(text);
        OutputRecord rec;
        rec.schema_version = j.at("schema_version").get<std::string>();
        rec.command = j.at("command").get<std::string>();
        rec.params = detail::key_values_from_json(j.at("params"));
        rec.columns = j.at("columns").get<std::vector<std::string>>();
        for (const auto& r : j.at("rows")) {
            std::vector<Cell> row;
            for (const auto& c : r) {
                if (c.is_null()) row.emplace_back(std::monostate{});
                else if (c.is_string()) row.emplace_back(c.get<std::string>());
                else row.emplace_back(c.get<double>());
            }
            if (row.size() != rec.columns.size()) throw ParseError("row width differs from columns");
            rec.rows.push_back(std::move(row));
        }
        rec.metadata = detail::key_values_from_json(j.at("metadata"));
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid record JSON: ") + e.what());
    }
}

}  // namespace polymoments
