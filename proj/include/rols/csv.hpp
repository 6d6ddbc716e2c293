#ifndef ROLS_CSV_HPP
#define ROLS_CSV_HPP

#include <Eigen/Dense>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "rols/errors.hpp"

namespace rols {

// Shortest decimal representation that round-trips the double exactly.
inline std::string format_full(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Fixed-precision table formatting (tables print 5 decimals).
inline std::string format_fixed(double v, int decimals = 5) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(decimals);
    os << v;
    return os.str();
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;  // column-major

    Eigen::Index rows() const {
        return columns.empty() ? 0 : static_cast<Eigen::Index>(columns.front().size());
    }
    Eigen::Index cols() const { return static_cast<Eigen::Index>(columns.size()); }

    Eigen::Index find(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return static_cast<Eigen::Index>(i);
        }
        return -1;
    }

    Eigen::VectorXd column(Eigen::Index i) const {
        return Eigen::Map<const Eigen::VectorXd>(columns[static_cast<std::size_t>(i)].data(),
                                                 rows());
    }
};

namespace detail {

inline bool parse_double(const std::string& tok, double& out) {
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    while (b < e && (*b == ' ' || *b == '\t')) ++b;
    while (e > b && (*(e - 1) == ' ' || *(e - 1) == '\t' || *(e - 1) == '\r')) --e;
    auto res = std::from_chars(b, e, out);
    return res.ec == std::errc{} && res.ptr == e && b != e;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream is(line);
    while (std::getline(is, tok, ',')) out.push_back(tok);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace detail

// Rectangular numeric CSV with a header row. Parse failures report the
// 1-based line number.
inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DimensionError("read_csv: cannot open '" + path + "'");
    CsvTable table;
    std::string line;
    Eigen::Index lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto toks = detail::split_csv_line(line);
        if (table.header.empty()) {
            table.header = toks;
            table.columns.resize(toks.size());
            continue;
        }
        if (toks.size() != table.header.size()) {
            throw DimensionError("read_csv: ragged row at line " + std::to_string(lineno) +
                                 " of '" + path + "'");
        }
        for (std::size_t i = 0; i < toks.size(); ++i) {
            double v;
            if (!detail::parse_double(toks[i], v)) {
                throw DimensionError("read_csv: non-numeric value '" + toks[i] +
                                     "' at line " + std::to_string(lineno) + " of '" + path +
                                     "'");
            }
            table.columns[i].push_back(v);
        }
    }
    if (table.header.empty()) throw DimensionError("read_csv: empty file '" + path + "'");
    return table;
}

// Single series: one numeric column, optional header, optional leading
// non-numeric column (dates) which is ignored.
inline Eigen::VectorXd read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DimensionError("read_series: cannot open '" + path + "'");
    std::vector<double> vals;
    std::string line;
    Eigen::Index lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto toks = detail::split_csv_line(line);
        double v;
        if (!detail::parse_double(toks.back(), v)) {
            if (first) {  // header row
                first = false;
                continue;
            }
            throw DimensionError("read_series: non-numeric value at line " +
                                 std::to_string(lineno) + " of '" + path + "'");
        }
        first = false;
        vals.push_back(v);
    }
    if (vals.empty()) throw DimensionError("read_series: no numeric rows in '" + path + "'");
    return Eigen::Map<const Eigen::VectorXd>(vals.data(),
                                             static_cast<Eigen::Index>(vals.size()));
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw DimensionError("CsvWriter: cannot open '" + path + "'");
    }

    void header(const std::vector<std::string>& names) { row_strings(names); }

    void row(const std::vector<double>& values) {
        bool sep = false;
        for (double v : values) {
            if (sep) out_ << ',';
            out_ << format_full(v);
            sep = true;
        }
        out_ << '\n';
    }

    void row_strings(const std::vector<std::string>& values) {
        bool sep = false;
        for (const auto& v : values) {
            if (sep) out_ << ',';
            out_ << v;
            sep = true;
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

}  // namespace rols

#endif
