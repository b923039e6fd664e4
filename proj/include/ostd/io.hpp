#pragma once

#include <filesystem>
#include <iosfwd>

#include "ostd/tensor.hpp"

namespace ostd {

// Text formats. Values are printed with 17 significant digits so a
// write/read round trip reproduces every double bit-exactly.
//
// symtensor v1          factors v1
// order m               rank p
// dim n                 dim n
// <n^m values>          <p lambda values>
//                       <p lines of n values, column k of X per line>

void write_tensor(std::ostream& out, const SymmetricTensor& t);
SymmetricTensor read_tensor(std::istream& in);  // validates symmetry

void write_tensor(const std::filesystem::path& path, const SymmetricTensor& t);
SymmetricTensor read_tensor(const std::filesystem::path& path);

void write_factors(std::ostream& out, const FactorDecomposition& d);
FactorDecomposition read_factors(std::istream& in);

void write_factors(const std::filesystem::path& path,
                   const FactorDecomposition& d);
FactorDecomposition read_factors(const std::filesystem::path& path);

}  // namespace ostd
