#include "loewner/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace loewner {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

HermitianMatrix read_matrix(std::istream& in) {
    long long dim = 0;
    if (!(in >> dim)) throw MatrixFormatError("matrix text: missing dimension line");
    if (dim < 1 || dim > 4096) {
        throw MatrixFormatError("matrix text: invalid dimension " + std::to_string(dim));
    }
    const auto n = static_cast<std::size_t>(dim);
    std::vector<double> values(n * n);
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::string token;
        if (!(in >> token)) {
            throw MatrixFormatError("matrix text: expected " + std::to_string(n * n) +
                                    " entries, got " + std::to_string(k));
        }
        try {
            std::size_t used = 0;
            values[k] = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw MatrixFormatError("matrix text: bad entry '" + token + "'");
        }
    }
    return HermitianMatrix(Matrix(n, std::move(values)));
}

HermitianMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MatrixFormatError("cannot open matrix file '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const HermitianMatrix& m) {
    out << m.dim() << '\n';
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

std::string matrix_to_text(const HermitianMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

MatrixPair read_pair(std::istream& in) {
    HermitianMatrix a = read_matrix(in);
    HermitianMatrix b = read_matrix(in);
    if (a.dim() != b.dim()) throw MatrixFormatError("matrix pair: dimension mismatch");
    return MatrixPair{std::move(a), std::move(b)};
}

void write_pair(std::ostream& out, const MatrixPair& pair) {
    write_matrix(out, pair.a);
    out << '\n';
    write_matrix(out, pair.b);
}

}  // namespace loewner
