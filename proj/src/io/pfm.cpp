#include "scene123/io/pfm.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace scene123::io {

void write_pfm(const std::string& path, const Plane<float>& plane) {
  if (plane.empty()) throw DomainError("write_pfm: empty plane");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_pfm: cannot open " + path);
  out << "Pf\n" << plane.width() << " " << plane.height() << "\n-1.0\n";
  // PFM rows run bottom-to-top.
  for (int y = plane.height() - 1; y >= 0; --y) {
    out.write(reinterpret_cast<const char*>(&plane.at(y, 0)),
              static_cast<std::streamsize>(plane.width()) * sizeof(float));
  }
  if (!out) throw IoError("write_pfm: write failed for " + path);
}

namespace {

std::string next_token(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw IoError("read_pfm: truncated header");
  return tok;
}

}  // namespace

Plane<float> read_pfm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_pfm: cannot open " + path);
  std::string magic = next_token(in);
  if (magic != "Pf") throw IoError("read_pfm: not a single-channel PFM: " + path);
  int w = std::stoi(next_token(in));
  int h = std::stoi(next_token(in));
  double scale = std::stod(next_token(in));
  if (w <= 0 || h <= 0) throw IoError("read_pfm: bad dimensions in " + path);
  in.get();  // single whitespace byte after the scale line
  Plane<float> plane(h, w);
  std::vector<float> row(static_cast<size_t>(w));
  for (int y = h - 1; y >= 0; --y) {
    in.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(w) * sizeof(float));
    if (!in) throw IoError("read_pfm: truncated data in " + path);
    if (scale > 0) {
      // big-endian payload: byte-swap each float
      for (int x = 0; x < w; ++x) {
        unsigned char* b = reinterpret_cast<unsigned char*>(&row[x]);
        std::swap(b[0], b[3]);
        std::swap(b[1], b[2]);
      }
    }
    std::memcpy(&plane.at(y, 0), row.data(), static_cast<size_t>(w) * sizeof(float));
  }
  return plane;
}

}  // namespace scene123::io
