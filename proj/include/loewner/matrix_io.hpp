#pragma once

// Plain-text matrix format:
//
//   dim
//   a11 a12 ... a1n
//   ...
//   an1 an2 ... ann
//
// Entries are decimal floats separated by whitespace; the matrix is
// symmetrized on load. Writers emit %.17g so a write/read cycle is exact.
// A pair is two matrices separated by one blank line.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "loewner/genpairs.hpp"
#include "loewner/matrix.hpp"

namespace loewner {

class MatrixFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] std::string format_double(double value);

[[nodiscard]] HermitianMatrix read_matrix(std::istream& in);
[[nodiscard]] HermitianMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const HermitianMatrix& m);
[[nodiscard]] std::string matrix_to_text(const HermitianMatrix& m);

[[nodiscard]] MatrixPair read_pair(std::istream& in);
void write_pair(std::ostream& out, const MatrixPair& pair);

}  // namespace loewner
