#include "leapp/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace leapp::io {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& field, const std::string& path, size_t lineno) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    while (last > first && (*(last - 1) == ' ' || *(last - 1) == '\t' || *(last - 1) == '\r')) {
        --last;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw Error(ErrorCode::ParseFailure, path + ": malformed value '" + field + "' on line " +
                                                 std::to_string(lineno));
    }
    return value;
}

std::vector<std::vector<double>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseFailure, "cannot open " + path);
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    size_t lineno = 0;
    size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse_double(f, path, lineno));
        if (rows.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            throw Error(ErrorCode::ParseFailure,
                        path + ": row on line " + std::to_string(lineno) + " has " +
                            std::to_string(row.size()) + " fields, expected " +
                            std::to_string(width));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw Error(ErrorCode::ParseFailure, path + ": no data rows");
    }
    return rows;
}

}  // namespace

Matrix read_matrix(const std::string& path) {
    const auto rows = read_rows(path);
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
        }
    }
    return m;
}

Vector read_vector(const std::string& path) {
    const Matrix m = read_matrix(path);
    if (m.cols() == 1) return m.col(0);
    if (m.rows() == 1) return m.row(0).transpose();
    throw Error(ErrorCode::ParseFailure, path + ": expected a single column or row");
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_matrix(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::ParseFailure, "cannot write " + path);
    }
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_gene_result(const std::string& path, const GeneResult& result) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::ParseFailure, "cannot write " + path);
    }
    out << "gene_index,t_stat,p_value,rank,gamma_hat\n";
    const bool have_gamma = result.gamma_hat.size() == result.t_stat.size();
    for (Index i = 0; i < result.t_stat.size(); ++i) {
        out << i << ',' << format_double(result.t_stat[i]) << ','
            << format_double(result.p_value[i]) << ',' << result.rank[static_cast<size_t>(i)]
            << ',';
        if (have_gamma) out << format_double(result.gamma_hat[i]);
        out << '\n';
    }
}

GeneResult read_gene_result(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseFailure, "cannot open " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::ParseFailure, path + ": empty file");
    }
    std::vector<double> t, p, gamma;
    std::vector<int> rank;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 5) {
            throw Error(ErrorCode::ParseFailure,
                        path + ": expected 5 fields on line " + std::to_string(lineno));
        }
        t.push_back(parse_double(fields[1], path, lineno));
        p.push_back(parse_double(fields[2], path, lineno));
        rank.push_back(static_cast<int>(parse_double(fields[3], path, lineno)));
        if (!fields[4].empty()) gamma.push_back(parse_double(fields[4], path, lineno));
    }
    GeneResult out;
    out.t_stat = Eigen::Map<Vector>(t.data(), static_cast<Index>(t.size()));
    out.p_value = Eigen::Map<Vector>(p.data(), static_cast<Index>(p.size()));
    if (gamma.size() == t.size()) {
        out.gamma_hat = Eigen::Map<Vector>(gamma.data(), static_cast<Index>(gamma.size()));
    } else {
        out.gamma_hat = Vector(0);
    }
    out.rank = std::move(rank);
    return out;
}

}  // namespace leapp::io
