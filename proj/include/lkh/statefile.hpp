#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "lkh/matrix.hpp"
#include "lkh/tensor.hpp"

namespace lkh {

// Text serialization of a tagged square matrix:
//
//   dims <d1> <d2> ...
//   data
//   <re> <im>          (one row-major entry per line)
//
// Doubles are printed with 17 significant digits, so write -> read -> write
// is byte-identical and read -> write -> read is bit-exact.
void write_state(std::ostream& os, const MultiSystem& sys, const ComplexMatrix& mat);
std::pair<MultiSystem, ComplexMatrix> read_state(std::istream& is);

void write_state_file(const std::string& path, const MultiSystem& sys, const ComplexMatrix& mat);
std::pair<MultiSystem, ComplexMatrix> read_state_file(const std::string& path);

// Round-trip-safe decimal rendering of a double (17 significant digits).
std::string format_double(double value);

}  // namespace lkh
