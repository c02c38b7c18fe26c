#include "tomo/render.hpp"

namespace tomo {

std::string render(const BinaryImage& x, RenderFormat format)
{
    std::string out;
    if (format == RenderFormat::ASCII) {
        out.reserve(static_cast<std::size_t>(x.width() + 1) * x.height());
        for (int q = x.height(); q >= 1; --q) {
            for (int p = 1; p <= x.width(); ++p)
                out += x.at(p, q) ? '#' : '.';
            out += '\n';
        }
        return out;
    }
    out = "P5\n" + std::to_string(x.width()) + " " + std::to_string(x.height()) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(x.width()) * x.height());
    for (int q = x.height(); q >= 1; --q)
        for (int p = 1; p <= x.width(); ++p)
            out += x.at(p, q) ? static_cast<char>(0) : static_cast<char>(255);
    return out;
}

} // namespace tomo
