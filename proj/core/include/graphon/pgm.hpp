#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphon/graphon.hpp"
#include "graphon/matrix.hpp"

namespace graphon {

/// Renders a graphon as a binary PGM (magic P5, maxval 255): pixel (row a,
/// col b) holds round(255 * (1 - v)) with v evaluated at the cell midpoint
/// ((b + 0.5)/r, (a + 0.5)/r), so darker means closer to 1. Rounds half-up.
void render_pgm(const Graphon& w, std::size_t resolution, std::ostream& out);

/// Renders a matrix one pixel per entry, same gray mapping.
void render_pgm(const Matrix& m, std::ostream& out);

void render_pgm_file(const Graphon& w, std::size_t resolution, const std::string& path);
void render_pgm_file(const Matrix& m, const std::string& path);

struct PgmImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;  // row-major
};

/// Parses a binary P5 image with maxval <= 255.
PgmImage read_pgm(std::istream& in);

}  // namespace graphon
