#include "graphon/pgm.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace graphon {

namespace {

std::uint8_t gray_of(double v) {
    // round(255 (1 - v)), half-up.
    const double scaled = 255.0 * (1.0 - v);
    return static_cast<std::uint8_t>(std::floor(scaled + 0.5));
}

void write_header(std::size_t width, std::size_t height, std::ostream& out) {
    out << "P5\n" << width << " " << height << "\n255\n";
}

template <typename PixelAt>
void write_payload(std::size_t width, std::size_t height, std::ostream& out, PixelAt pixel) {
    std::vector<char> row(width);
    for (std::size_t a = 0; a < height; ++a) {
        for (std::size_t b = 0; b < width; ++b) row[b] = static_cast<char>(pixel(a, b));
        out.write(row.data(), static_cast<std::streamsize>(width));
    }
}

}  // namespace

void render_pgm(const Graphon& w, std::size_t resolution, std::ostream& out) {
    if (resolution == 0) throw std::invalid_argument("render_pgm: resolution must be positive");
    const double r = static_cast<double>(resolution);
    write_header(resolution, resolution, out);
    write_payload(resolution, resolution, out, [&](std::size_t a, std::size_t b) {
        const double x = (static_cast<double>(b) + 0.5) / r;
        const double y = (static_cast<double>(a) + 0.5) / r;
        return gray_of(eval(w, x, y));
    });
    if (!out) throw std::runtime_error("render_pgm: write failed");
}

void render_pgm(const Matrix& m, std::ostream& out) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("render_pgm: empty matrix");
    write_header(m.cols(), m.rows(), out);
    write_payload(m.cols(), m.rows(), out,
                  [&](std::size_t a, std::size_t b) { return gray_of(m(a, b)); });
    if (!out) throw std::runtime_error("render_pgm: write failed");
}

namespace {

std::ofstream open_binary(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

void render_pgm_file(const Graphon& w, std::size_t resolution, const std::string& path) {
    auto out = open_binary(path);
    render_pgm(w, resolution, out);
}

void render_pgm_file(const Matrix& m, const std::string& path) {
    auto out = open_binary(path);
    render_pgm(m, out);
}

PgmImage read_pgm(std::istream& in) {
    std::string magic;
    in >> magic;
    if (magic != "P5") throw std::runtime_error("read_pgm: not a binary PGM");
    std::size_t width = 0, height = 0, maxval = 0;
    in >> width >> height >> maxval;
    if (!in || maxval == 0 || maxval > 255) throw std::runtime_error("read_pgm: bad header");
    in.get();  // single whitespace byte after maxval
    PgmImage img{width, height, std::vector<std::uint8_t>(width * height)};
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != img.pixels.size())
        throw std::runtime_error("read_pgm: truncated payload");
    return img;
}

}  // namespace graphon
