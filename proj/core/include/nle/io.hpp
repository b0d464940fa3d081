#pragma once

#include <string>
#include <vector>

#include "nle/grid.hpp"

namespace nle {

/// Binary grid-function dump. Layout (little endian):
///   magic "NLGF", u32 version = 1, u32 d, u64 n, f64 length,
///   u8 domain (0 = space, 1 = frequency), then n^d complex128 values
///   in row-major order.
void write_nlgf(const std::string& path, const GridFunction& u);
GridFunction read_nlgf(const std::string& path);

/// CSV with a header row; each row formatted with %.17g.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// 1-d slice of a grid function along axis 0 (d=2: the row through x2 = x(row)),
/// written as CSV (x, re, im).
void write_slice_csv(const std::string& path, const GridFunction& u, int row = 0);

} // namespace nle
