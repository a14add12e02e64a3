#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "polarprior/stiefel.hpp"

namespace polarprior {

enum class MatrixKind { Numeric, Adjacency };

using BoolArray = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Parsed CSV matrix. Missing cells ("NA" or empty) hold NaN in `values`
/// and true in `missing`. A first row containing any non-numeric token is
/// taken as a header. Fields may be double-quoted.
struct CsvMatrix {
    Matrix values;
    BoolArray missing;
    std::vector<std::string> header;
};

/// Adjacency matrices must be square, with observed entries in {0, 1} and
/// y_ij = y_ji wherever both are observed. Diagonal entries are not checked.
CsvMatrix read_matrix_csv(std::istream& in, MatrixKind kind);
CsvMatrix load_matrix_csv(const std::filesystem::path& path, MatrixKind kind);

/// Full-precision ("%.17g") CSV; NaN written as NA.
void write_matrix_csv(std::ostream& out, const Matrix& m, const std::vector<std::string>& header = {});
void save_matrix_csv(const std::filesystem::path& path, const Matrix& m, const std::vector<std::string>& header = {});

std::string format_double(double x);
/// Text as one CSV field, double-quoted when it holds a comma, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace polarprior
