#pragma once

#include "tomo/grid.hpp"

#include <string>

namespace tomo {

enum class RenderFormat
{
    ASCII,
    PGM
};

/// ASCII: '#' for 1, '.' for 0, top row first. PGM: binary P5, maxval 255,
/// ones black (0) and zeros white (255), top row first. The PGM result is a
/// byte string.
std::string render(const BinaryImage& x, RenderFormat format);

} // namespace tomo
