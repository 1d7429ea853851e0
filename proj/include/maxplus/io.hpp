#pragma once

/// File formats for the CLI: marginal/table problems and tropical matrices,
/// in CSV or JSON, in either numeric mode.
///
/// Exact mode parses every number from its decimal text, so "0.1" really is
/// 1/10, and emits decimal strings back; float mode uses doubles both ways.
/// JSON numbers that arrive as doubles are re-read from their shortest
/// round-trip decimal form, which recovers the literal the user typed for
/// anything a double represents faithfully.  Tropical matrix entries admit
/// the two infinite tokens "-inf" and "+inf".

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "maxplus/dense.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/frechet.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/rational.hpp"
#include "maxplus/tropical.hpp"

namespace maxplus::io {

using Json = nlohmann::ordered_json;

enum class Format { csv, json };

struct NumericMode {
    enum class Kind { exact, floating };
    Kind kind = Kind::exact;
    double epsilon = 1e-9;
};

// ---------------------------------------------------------------------------
// Scalar conversions
// ---------------------------------------------------------------------------

inline double double_from_string(std::string_view text) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     out);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("bad number: '" + std::string(text) + "'");
    return out;
}

template <class T>
T value_from_string(std::string_view text) {
    if constexpr (std::is_same_v<T, double>)
        return double_from_string(text);
    else
        return T::from_string(text);
}

template <class T>
T value_from_json(const Json& v) {
    if (v.is_string()) return value_from_string<T>(v.get<std::string>());
    if constexpr (std::is_same_v<T, double>) {
        if (v.is_number()) return v.get<double>();
    } else {
        if (v.is_number_integer()) return T(v.get<std::int64_t>());
        if (v.is_number_float())
            return T::from_string(value_string(v.get<double>()));
    }
    throw ParseError("expected a number, got " + v.dump());
}

template <class T>
Json value_to_json(const T& v) {
    if constexpr (std::is_same_v<T, double>)
        return v;
    else
        return v.to_string();
}

// ---------------------------------------------------------------------------
// Vectors and tables
// ---------------------------------------------------------------------------

template <class T>
std::vector<T> vector_from_json(const Json& v, const char* what) {
    if (!v.is_array() || v.empty())
        throw ParseError(std::string(what) + " must be a nonempty array");
    std::vector<T> out;
    out.reserve(v.size());
    for (const Json& e : v) out.push_back(value_from_json<T>(e));
    return out;
}

template <class T>
Dense<T> table_from_json(const Json& v, const char* what) {
    if (!v.is_array() || v.empty() || !v[0].is_array() || v[0].empty())
        throw ParseError(std::string(what) +
                         " must be a nonempty array of rows");
    Dense<T> out(v.size(), v[0].size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Json& row = v[i];
        if (!row.is_array() || row.size() != out.cols())
            throw ParseError(std::string(what) + " has ragged rows");
        for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(i, j) = value_from_json<T>(row[j]);
    }
    return out;
}

template <class T>
Json vector_to_json(const std::vector<T>& v) {
    Json out = Json::array();
    for (const T& e : v) out.push_back(value_to_json(e));
    return out;
}

template <class T>
Json table_to_json(const Dense<T>& t) {
    Json out = Json::array();
    for (std::size_t i = 0; i < t.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < t.cols(); ++j)
            row.push_back(value_to_json(t.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV primitives
// ---------------------------------------------------------------------------

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                          s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

/// Non-blank, non-comment lines of a CSV document.
inline std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.emplace_back(t);
    }
    return out;
}

inline std::vector<std::string> csv_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string_view field = comma == std::string_view::npos
                                     ? line.substr(start)
                                     : line.substr(start, comma - start);
        out.emplace_back(trim(field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <class T>
std::vector<T> vector_from_csv_line(std::string_view line) {
    std::vector<T> out;
    for (const std::string& f : csv_fields(line))
        out.push_back(value_from_string<T>(f));
    return out;
}

template <class T>
std::string vector_to_csv_line(const std::vector<T>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += value_string(v[i]);
    }
    return out;
}

template <class T>
void table_to_csv(std::string& out, const Dense<T>& t) {
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
            if (j) out += ',';
            out += value_string(t.at(i, j));
        }
        out += '\n';
    }
}

// ---------------------------------------------------------------------------
// Problem inputs: marginals plus optional candidate table
// ---------------------------------------------------------------------------

template <class T>
struct ProblemInput {
    Marginals<T> marginals;
    std::optional<Dense<T>> table;
    /// lcm of the denominators seen while parsing (exact mode); the unit of
    /// the input grid is 1/scale.
    std::int64_t scale = 1;
};

namespace detail {

inline void fold_scale(std::int64_t& scale, const Rational& r) {
    scale = checked_lcm(scale, r.denominator());
}
inline void fold_scale(std::int64_t&, double) {}

template <class T>
void require_nonnegative(const std::vector<T>& v, const char* what) {
    for (const T& e : v)
        if (e < T{})
            throw ParseError(std::string(what) + " has a negative entry");
}

template <class T>
void require_nonnegative(const Dense<T>& t, const char* what) {
    for (const T& e : t.cells())
        if (e < T{})
            throw ParseError(std::string(what) + " has a negative entry");
}

}  // namespace detail

template <class T>
ProblemInput<T> problem_from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("q"))
        throw ParseError("expected a JSON object with \"p\" and \"q\"");
    ProblemInput<T> out;
    out.marginals.p = vector_from_json<T>(doc["p"], "p");
    out.marginals.q = vector_from_json<T>(doc["q"], "q");
    if (doc.contains("table") && !doc["table"].is_null())
        out.table = table_from_json<T>(doc["table"], "table");
    detail::require_nonnegative(out.marginals.p, "p");
    detail::require_nonnegative(out.marginals.q, "q");
    if (out.table) {
        detail::require_nonnegative(*out.table, "table");
        if (out.table->rows() != out.marginals.n() ||
            out.table->cols() != out.marginals.m())
            throw ShapeError("table shape does not match marginals (" +
                             std::to_string(out.table->rows()) + "x" +
                             std::to_string(out.table->cols()) + " vs " +
                             std::to_string(out.marginals.n()) + "x" +
                             std::to_string(out.marginals.m()) + ")");
    }
    for (const T& e : out.marginals.p) detail::fold_scale(out.scale, e);
    for (const T& e : out.marginals.q) detail::fold_scale(out.scale, e);
    if (out.table)
        for (const T& e : out.table->cells()) detail::fold_scale(out.scale, e);
    return out;
}

/// CSV problem layout: first line p, second line q, then (optionally) n more
/// lines holding the candidate table.
template <class T>
ProblemInput<T> problem_from_csv_text(const std::string& text) {
    std::vector<std::string> lines = csv_lines(text);
    if (lines.size() < 2)
        throw ParseError("CSV input needs at least two marginal lines");
    ProblemInput<T> out;
    out.marginals.p = vector_from_csv_line<T>(lines[0]);
    out.marginals.q = vector_from_csv_line<T>(lines[1]);
    if (lines.size() > 2) {
        if (lines.size() - 2 != out.marginals.n())
            throw ParseError("CSV table has " +
                             std::to_string(lines.size() - 2) +
                             " rows, marginals say " +
                             std::to_string(out.marginals.n()));
        Dense<T> table(out.marginals.n(), out.marginals.m());
        for (std::size_t i = 0; i + 2 < lines.size(); ++i) {
            std::vector<T> row = vector_from_csv_line<T>(lines[i + 2]);
            if (row.size() != out.marginals.m())
                throw ParseError("CSV table row " + std::to_string(i) +
                                 " has " + std::to_string(row.size()) +
                                 " cells, marginals say " +
                                 std::to_string(out.marginals.m()));
            for (std::size_t j = 0; j < row.size(); ++j)
                table.at(i, j) = row[j];
        }
        out.table = std::move(table);
    }
    detail::require_nonnegative(out.marginals.p, "p");
    detail::require_nonnegative(out.marginals.q, "q");
    if (out.table) detail::require_nonnegative(*out.table, "table");
    for (const T& e : out.marginals.p) detail::fold_scale(out.scale, e);
    for (const T& e : out.marginals.q) detail::fold_scale(out.scale, e);
    if (out.table)
        for (const T& e : out.table->cells()) detail::fold_scale(out.scale, e);
    return out;
}

template <class T>
ProblemInput<T> parse_problem(const std::string& text, Format format) {
    return format == Format::json ? problem_from_json_text<T>(text)
                                  : problem_from_csv_text<T>(text);
}

// ---------------------------------------------------------------------------
// Tropical matrices (residuate command)
// ---------------------------------------------------------------------------

template <class T>
Tropical<T> tropical_from_string(std::string_view text) {
    std::string_view t = trim(text);
    if (t == "-inf") return Tropical<T>::bottom();
    if (t == "+inf" || t == "inf") return Tropical<T>::top();
    return Tropical<T>(value_from_string<T>(t));
}

template <class T>
Tropical<T> tropical_from_json(const Json& v) {
    if (v.is_string()) return tropical_from_string<T>(v.get<std::string>());
    return Tropical<T>(value_from_json<T>(v));
}

template <class T>
Json tropical_to_json(const Tropical<T>& v) {
    if (!v.is_finite()) return to_string(v);
    return value_to_json(v.value());
}

template <class T>
TropMatrix<T> trop_matrix_from_json(const Json& v, const char* what) {
    if (!v.is_array() || v.empty() || !v[0].is_array() || v[0].empty())
        throw ParseError(std::string(what) +
                         " must be a nonempty array of rows");
    TropMatrix<T> out(v.size(), v[0].size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_array() || v[i].size() != out.cols())
            throw ParseError(std::string(what) + " has ragged rows");
        for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(i, j) = tropical_from_json<T>(v[i][j]);
    }
    return out;
}

template <class T>
Json trop_matrix_to_json(const TropMatrix<T>& a) {
    Json out = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j)
            row.push_back(tropical_to_json(a.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

/// JSON matrix pair {"A": rows, "B": rows}.
template <class T>
std::pair<TropMatrix<T>, TropMatrix<T>> matrix_pair_from_json_text(
    const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("A") || !doc.contains("B"))
        throw ParseError("expected a JSON object with \"A\" and \"B\"");
    return {trop_matrix_from_json<T>(doc["A"], "A"),
            trop_matrix_from_json<T>(doc["B"], "B")};
}

/// CSV matrix pair: rows of A, one blank (or "--") separator line handled by
/// a comment, then rows of B.  Since csv_lines drops blanks, the separator is
/// a line containing just "--".
template <class T>
std::pair<TropMatrix<T>, TropMatrix<T>> matrix_pair_from_csv_text(
    const std::string& text) {
    std::vector<std::string> lines = csv_lines(text);
    std::size_t sep = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (trim(lines[i]) == "--") {
            sep = i;
            break;
        }
    if (sep == 0 || sep + 1 >= lines.size())
        throw ParseError("CSV matrix pair needs rows, a '--' line, more rows");
    auto build = [](const std::vector<std::string>& ls, std::size_t from,
                    std::size_t to) {
        std::vector<std::vector<Tropical<T>>> rows;
        for (std::size_t i = from; i < to; ++i) {
            std::vector<Tropical<T>> row;
            for (const std::string& f : csv_fields(ls[i]))
                row.push_back(tropical_from_string<T>(f));
            rows.push_back(std::move(row));
        }
        TropMatrix<T> out(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != out.cols())
                throw ParseError("ragged CSV matrix");
            for (std::size_t j = 0; j < out.cols(); ++j)
                out.at(i, j) = rows[i][j];
        }
        return out;
    };
    return {build(lines, 0, sep), build(lines, sep + 1, lines.size())};
}

template <class T>
std::pair<TropMatrix<T>, TropMatrix<T>> parse_matrix_pair(
    const std::string& text, Format format) {
    return format == Format::json ? matrix_pair_from_json_text<T>(text)
                                  : matrix_pair_from_csv_text<T>(text);
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

template <class T>
Json bounds_to_json(const Marginals<T>& inst, const BoundsResult<T>& b) {
    Json out = Json::object();
    out["n"] = inst.n();
    out["m"] = inst.m();
    out["sigma"] = value_to_json(inst.sigma());
    out["upper_cumulative"] = table_to_json(b.upper_cumulative);
    out["lower_cumulative"] = table_to_json(b.lower_cumulative);
    out["upper_table"] = table_to_json(b.upper_table);
    out["lower_table"] = table_to_json(b.lower_table);
    return out;
}

template <class T>
std::string bounds_to_csv(const Marginals<T>& inst, const BoundsResult<T>& b) {
    std::string out;
    out += "# n,m,sigma\n";
    out += std::to_string(inst.n()) + "," + std::to_string(inst.m()) + "," +
           value_string(inst.sigma()) + "\n";
    out += "# upper_cumulative\n";
    table_to_csv(out, b.upper_cumulative);
    out += "# lower_cumulative\n";
    table_to_csv(out, b.lower_cumulative);
    out += "# upper_table\n";
    table_to_csv(out, b.upper_table);
    out += "# lower_table\n";
    table_to_csv(out, b.lower_table);
    return out;
}

}  // namespace maxplus::io
