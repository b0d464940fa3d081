#include "nle/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "nle/errors.hpp"

namespace nle {

namespace {

template <typename T>
void put(std::ofstream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
  return v;
}

} // namespace

void write_nlgf(const std::string& path, const GridFunction& u) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(errc::io_error, "cannot open " + path + " for writing");
  os.write("NLGF", 4);
  put<std::uint32_t>(os, 1);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(u.grid.d));
  put<std::uint64_t>(os, static_cast<std::uint64_t>(u.grid.n));
  put<double>(os, u.grid.length);
  put<std::uint8_t>(os, u.domain == Domain::space ? 0 : 1);
  for (const auto& v : u.values) {
    put<double>(os, v.real());
    put<double>(os, v.imag());
  }
  if (!os) fail(errc::io_error, "short write to " + path);
}

GridFunction read_nlgf(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(errc::io_error, "cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "NLGF", 4) != 0) fail(errc::io_error, "bad magic in " + path);
  const auto version = get<std::uint32_t>(is);
  if (version != 1) fail(errc::io_error, "unsupported NLGF version in " + path);
  const auto d = get<std::uint32_t>(is);
  const auto n = get<std::uint64_t>(is);
  const auto length = get<double>(is);
  const auto dom = get<std::uint8_t>(is);
  SpectralGrid g(static_cast<int>(d), static_cast<int>(n), length);
  GridFunction u(g, dom == 0 ? Domain::space : Domain::frequency);
  for (auto& v : u.values) {
    const double re = get<double>(is);
    const double im = get<double>(is);
    v = {re, im};
  }
  if (!is) fail(errc::io_error, "truncated NLGF file " + path);
  return u;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream os(path);
  if (!os) fail(errc::io_error, "cannot open " + path + " for writing");
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "");
  os << "\n";
  char buf[32];
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      os << buf << (i + 1 < row.size() ? "," : "");
    }
    os << "\n";
  }
  if (!os) fail(errc::io_error, "short write to " + path);
}

void write_slice_csv(const std::string& path, const GridFunction& u, int row) {
  std::vector<std::vector<double>> rows;
  const auto& g = u.grid;
  if (g.d == 1) {
    for (int i = 0; i < g.n; ++i)
      rows.push_back({g.x(i), u.values[i].real(), u.values[i].imag()});
  } else {
    for (int i = 0; i < g.n; ++i) {
      const auto& v = u.values[static_cast<std::size_t>(row) * g.n + i];
      rows.push_back({g.x(i), v.real(), v.imag()});
    }
  }
  write_csv(path, {"x", "re", "im"}, rows);
}

} // namespace nle
