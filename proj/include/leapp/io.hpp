#ifndef LEAPP_IO_HPP
#define LEAPP_IO_HPP

#include "leapp/types.hpp"

#include <string>

namespace leapp::io {

/// Headerless numeric CSV, one row per line. Parse failures name the
/// offending 1-based line.
Matrix read_matrix(const std::string& path);

/// Single-column (or single-row) numeric CSV as a vector.
Vector read_vector(const std::string& path);

void write_matrix(const std::string& path, const Matrix& m);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double x);

/// Result table with header gene_index,t_stat,p_value,rank,gamma_hat.
/// gamma_hat cells are left empty when the result carries none.
void write_gene_result(const std::string& path, const GeneResult& result);

GeneResult read_gene_result(const std::string& path);

}  // namespace leapp::io

#endif
