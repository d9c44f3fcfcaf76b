#include "symtri/io.hpp"

#include <algorithm>
#include <sstream>

namespace symtri {

std::string render_svg(const PointConfiguration& config, const Triangulation& t, const SvgOptions& options) {
    const int d = config.region().d;
    const int u = options.unit;
    const int margin = u / 2;
    const int size = d * u + 2 * margin;
    auto px = [&](const LatticePoint& p) { return margin + p.x * u; };
    auto py = [&](const LatticePoint& p) { return margin + (d - p.y) * u; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (options.axis) {
        const LatticePoint a{0, 0};
        const LatticePoint b{d, d};
        os << "<line class=\"axis\" x1=\"" << px(a) << "\" y1=\"" << py(a) << "\" x2=\"" << px(b) << "\" y2=\"" << py(b)
           << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (const auto& e : distinct_edges(config, t)) {
        const auto& p = config[e.v[0]];
        const auto& q = config[e.v[1]];
        os << "<line class=\"edge\" x1=\"" << px(p) << "\" y1=\"" << py(p) << "\" x2=\"" << px(q) << "\" y2=\"" << py(q)
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (const auto& p : config.points()) {
        os << "<circle class=\"point\" cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"3\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace symtri
