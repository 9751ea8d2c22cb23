#pragma once

#include <string>

#include "diagram.hpp"
#include "mosaic.hpp"

namespace hexmosaic {

struct RenderOptions {
    int tile_size = 40;          // pixels per lattice unit quarter; must be positive
    bool show_grid = true;
    bool show_complement = false;
    bool label_tiles = false;
};

std::string svg_mosaic(const Mosaic& m, const RenderOptions& opts = {});
std::string svg_diagram(const LinkDiagram& d, const RenderOptions& opts = {});

struct RenderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hexmosaic
