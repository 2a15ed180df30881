#include "spikenet/pgm.hpp"

#include <cctype>
#include <fstream>

#include "spikenet/errors.hpp"

namespace spikenet {

void write_pgm(const std::string& path, const std::uint8_t* pixels, int width, int height) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels),
            static_cast<std::streamsize>(width) * height);
  if (!out) throw IoFailure("short write to " + path);
}

namespace {

int next_pgm_int(std::istream& in, const std::string& path) {
  // Skips whitespace and '#' comment lines between header tokens.
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else if (!std::isspace(ch)) {
      break;
    }
    ch = in.get();
  }
  if (ch == EOF) throw ParseError("truncated PGM header in " + path);
  int value = 0;
  bool any = false;
  while (ch != EOF && std::isdigit(ch)) {
    value = value * 10 + (ch - '0');
    any = true;
    ch = in.get();
  }
  if (!any) throw ParseError("malformed PGM header in " + path);
  return value;
}

}  // namespace

std::vector<std::uint8_t> read_pgm(const std::string& path, int& width, int& height) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  char p, five;
  in.get(p);
  in.get(five);
  if (!in || p != 'P' || five != '5') throw ParseError("not a P5 PGM: " + path);
  width = next_pgm_int(in, path);
  height = next_pgm_int(in, path);
  const int maxval = next_pgm_int(in, path);
  if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 255)
    throw ParseError("unsupported PGM geometry in " + path);
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
  in.read(reinterpret_cast<char*>(pixels.data()),
          static_cast<std::streamsize>(pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(pixels.size()))
    throw ParseError("truncated PGM body in " + path);
  return pixels;
}

}  // namespace spikenet
