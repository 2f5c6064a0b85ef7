/*
   Copyright 2026 The mvsurf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Matrix dumps: labelled templates as JSON, specialized matrices as JSON,
// plain numeric CSV or text; coefficient assignments from JSON.

#ifndef MVSURF_MATRIX_IO_HPP
#define MVSURF_MATRIX_IO_HPP

#include <regex>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "builders.hpp"
#include "exactalg.hpp"

namespace mvsurf {

inline std::string entry_string(const std::optional<CoefficientIndex>& e) { return e ? to_string(*e) : "0"; }

inline std::string entry_string(const std::vector<QuadTerm>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += "+";
        s += to_string(t.lhs) + "*" + to_string(t.rhs);
    }
    return s;
}

template <class Tmpl>
nlohmann::json template_json(const Tmpl& t) {
    nlohmann::json j;
    j["rows"] = t.rows();
    j["cols"] = t.cols();
    j["row_labels"] = nlohmann::json::array();
    for (const auto& r : t.row_labels) j["row_labels"].push_back(to_string(r));
    j["col_labels"] = nlohmann::json::array();
    for (const auto& c : t.col_labels) j["col_labels"].push_back(monomial_label(c));
    j["entries"] = nlohmann::json::array();
    for (std::size_t r = 0; r < t.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < t.cols(); ++c) row.push_back(entry_string(t.entry(r, c)));
        j["entries"].push_back(std::move(row));
    }
    return j;
}

inline nlohmann::json matrix_json(const FieldMatrix& M, u64 prime) {
    nlohmann::json j;
    j["rows"] = M.rows;
    j["cols"] = M.cols;
    j["prime"] = prime;
    j["row_labels"] = M.row_labels;
    j["col_labels"] = M.col_labels;
    j["entries"] = nlohmann::json::array();
    for (std::size_t r = 0; r < M.rows; ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < M.cols; ++c) row.push_back(M.at(r, c));
        j["entries"].push_back(std::move(row));
    }
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

}  // namespace detail

// Header row of column labels; each line starts with its row label.
inline std::string matrix_csv(const FieldMatrix& M) {
    std::ostringstream os;
    os << "row";
    for (const auto& c : M.col_labels) os << "," << detail::csv_field(c);
    os << "\n";
    for (std::size_t r = 0; r < M.rows; ++r) {
        os << detail::csv_field(M.row_labels[r]);
        for (std::size_t c = 0; c < M.cols; ++c) os << "," << M.at(r, c);
        os << "\n";
    }
    return os.str();
}

template <class Tmpl>
std::string template_csv(const Tmpl& t) {
    std::ostringstream os;
    os << "row";
    for (const auto& c : t.col_labels) os << "," << detail::csv_field(monomial_label(c));
    os << "\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
        os << detail::csv_field(to_string(t.row_labels[r]));
        for (std::size_t c = 0; c < t.cols(); ++c) os << "," << detail::csv_field(entry_string(t.entry(r, c)));
        os << "\n";
    }
    return os.str();
}

// Row label, then the row's entries separated by tabs.
template <class Tmpl>
std::string template_text(const Tmpl& t) {
    std::ostringstream os;
    os << "rows\\cols";
    for (const auto& c : t.col_labels) os << "\t" << monomial_label(c);
    os << "\n";
    for (std::size_t r = 0; r < t.rows(); ++r) {
        os << to_string(t.row_labels[r]);
        for (std::size_t c = 0; c < t.cols(); ++c) os << "\t" << entry_string(t.entry(r, c));
        os << "\n";
    }
    return os.str();
}

inline std::string matrix_text(const FieldMatrix& M) {
    std::ostringstream os;
    os << "rows\\cols";
    for (const auto& c : M.col_labels) os << "\t" << c;
    os << "\n";
    for (std::size_t r = 0; r < M.rows; ++r) {
        os << M.row_labels[r];
        for (std::size_t c = 0; c < M.cols; ++c) os << "\t" << M.at(r, c);
        os << "\n";
    }
    return os.str();
}

// {"c[1][0,0]": 5, "c[2][1,0]": -3, ...}; values are reduced mod p. Keys
// outside the support are rejected; missing keys stay unassigned.
inline CoefficientAssignment<u64> parse_assignment_json(const std::string& text, const std::vector<LatticePoint>& support,
                                                        const PrimeField& F) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("assignment JSON: " + detail::line_col(text, e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError("assignment JSON: expected an object of \"c[i][a1,a2]\": value");
    static const std::regex key(R"(c\[(\d)\]\[(-?\d+),(-?\d+)\])");
    CoefficientAssignment<u64> a(support);
    for (const auto& [k, v] : j.items()) {
        std::smatch m;
        if (!std::regex_match(k, m, key)) throw ParseError("assignment JSON: bad key '" + k + "'");
        if (!v.is_number_integer()) throw ParseError("assignment JSON: value of '" + k + "' is not an integer");
        const CoefficientIndex c{std::stoi(m[1]), {std::stoll(m[2]), std::stoll(m[3])}};
        a.set(c, v.is_number_unsigned() ? F.from_uint(v.get<std::uint64_t>()) : F.from_int(v.get<std::int64_t>()));
    }
    return a;
}

}  // namespace mvsurf

#endif  // MVSURF_MATRIX_IO_HPP
