#include "lkh/statefile.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lkh/errors.hpp"

namespace lkh {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_state(std::ostream& os, const MultiSystem& sys, const ComplexMatrix& mat) {
    if (!mat.is_square() || mat.rows() != sys.total_dim()) {
        throw ShapeError("write_state: matrix dimension does not match subsystem dimensions");
    }
    os << "dims";
    for (auto d : sys.dims()) os << ' ' << d;
    os << "\ndata\n";
    for (const auto& e : mat.entries()) {
        os << format_double(e.real()) << ' ' << format_double(e.imag()) << '\n';
    }
}

std::pair<MultiSystem, ComplexMatrix> read_state(std::istream& is) {
    std::string tag;
    if (!(is >> tag) || tag != "dims") throw IoError("read_state: expected 'dims' header");
    std::vector<std::size_t> dims;
    std::string line;
    std::getline(is, line);
    {
        std::istringstream ls(line);
        std::size_t d;
        while (ls >> d) dims.push_back(d);
    }
    if (dims.empty()) throw IoError("read_state: no dimensions listed");
    MultiSystem sys(std::move(dims));

    if (!(is >> tag) || tag != "data") throw IoError("read_state: expected 'data' section");
    const std::size_t n = sys.total_dim();
    std::vector<Complex> entries;
    entries.reserve(n * n);
    double re = 0.0, im = 0.0;
    while (entries.size() < n * n && (is >> re >> im)) entries.emplace_back(re, im);
    if (entries.size() != n * n) throw IoError("read_state: entry count does not match dimensions");

    ComplexMatrix mat(n, n, std::move(entries));
    if (!mat.all_finite()) throw IoError("read_state: non-finite entries");
    return {std::move(sys), std::move(mat)};
}

void write_state_file(const std::string& path, const MultiSystem& sys, const ComplexMatrix& mat) {
    std::ofstream os(path);
    if (!os) throw IoError("write_state_file: cannot open " + path);
    write_state(os, sys, mat);
    if (!os) throw IoError("write_state_file: write failed for " + path);
}

std::pair<MultiSystem, ComplexMatrix> read_state_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("read_state_file: cannot open " + path);
    return read_state(is);
}

}  // namespace lkh
