#ifndef PGLCENSUS_MATRIX_IO_HPP
#define PGLCENSUS_MATRIX_IO_HPP

#include <iosfwd>
#include <string>

#include "pglcensus/gale.hpp"

namespace pglcensus {

// Matrix file format: JSON with header fields rows / cols /
// cyclotomic_order and a row-major "entries" grid whose cells are
//   {"exp": e}            the monomial zeta^e
//   {"int": m}            an integer
//   {"rat": [num, den]}   a rational (numbers, or strings when large)
//   {"coeffs": [...]}     a general element by coefficient vector
//   {"zero": true}        the zero coordinate
// An "exp_grid" of plain integers may replace "entries" for orbit
// sets, with the string "z" marking a zero coordinate.
CoordMatrix read_coord_matrix(std::istream& in);
CoordMatrix read_coord_matrix_file(const std::string& path);

void write_coord_matrix(std::ostream& out, const CoordMatrix& m);
void write_coord_matrix_file(const std::string& path, const CoordMatrix& m);

// A diagonal witness stored as a 1 x n matrix file.
AssociationWitness read_witness_file(const std::string& path, const CoordMatrix& reference);

}  // namespace pglcensus

#endif
