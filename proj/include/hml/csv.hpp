#pragma once

#include <iosfwd>
#include <string>

#include "hml/grid.hpp"
#include "hml/transforms.hpp"

namespace hml {

// Round-trip decimal formatting (shortest digits that recover the double).
std::string format_double(double v);

// header t,re,im (time side on (0,inf)), x,re,im (real line) or beta,re,im
// (frequency side); one row per node
void write_csv(std::ostream& os, const SampledFunction& f);
void write_csv_file(const std::string& path, const SampledFunction& f);

// rows beta,re,im; values are matched to the grid's dual nodes by linear
// interpolation in beta
HalfPlaneSymbol load_symbol_csv(std::istream& is, const GridPtr& grid, SymbolClass tag);
HalfPlaneSymbol load_symbol_csv_file(const std::string& path, const GridPtr& grid, SymbolClass tag);

} // namespace hml
