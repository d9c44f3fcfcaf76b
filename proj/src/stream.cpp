#include "symtri/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace symtri {

std::string stream_header_line(const StreamHeader& header) {
    const auto config = lattice_points(header.region);
    nlohmann::ordered_json j;
    j["format"] = kStreamFormat;
    j["d"] = header.region.d;
    j["region"] = header.region.kind == RegionKind::FullTriangle ? "full" : "half";
    j["mode"] = to_string(header.mode);
    j["symmetric"] = header.symmetric;
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : config.points()) pts.push_back({p.x, p.y});
    j["points"] = std::move(pts);
    return j.dump();
}

std::string stream_line(const Triangulation& t) {
    std::vector<Simplex> s = t.simplices;
    std::sort(s.begin(), s.end());
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i].v[0]) + ',' + std::to_string(s[i].v[1]) + ',' + std::to_string(s[i].v[2]);
    }
    return out;
}

void write_stream_header(std::ostream& os, const StreamHeader& header) { os << stream_header_line(header) << '\n'; }

void write_stream_line(std::ostream& os, const Triangulation& t) { os << stream_line(t) << '\n'; }

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw StreamParseError("line " + std::to_string(line) + ": " + what);
}

StreamHeader parse_header(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(1, std::string("header is not JSON: ") + e.what());
    }
    StreamHeader h;
    try {
        if (j.at("format").get<std::string>() != kStreamFormat) fail(1, "unsupported format");
        const int d = j.at("d").get<int>();
        if (d < 1) fail(1, "d must be >= 1");
        h.region = {parse_region_kind(j.at("region").get<std::string>()), d};
        h.mode = parse_mode(j.at("mode").get<std::string>());
        h.symmetric = j.at("symmetric").get<bool>();
        const auto config = lattice_points(h.region);
        const auto& pts = j.at("points");
        if (pts.size() != config.size()) fail(1, "point map does not match the region");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const LatticePoint p{pts[i].at(0).get<int>(), pts[i].at(1).get<int>()};
            if (p != config[static_cast<PointIndex>(i)]) fail(1, "point map does not match the region");
        }
    } catch (const nlohmann::json::exception& e) {
        fail(1, std::string("bad header: ") + e.what());
    } catch (const std::invalid_argument& e) {
        fail(1, std::string("bad header: ") + e.what());
    }
    return h;
}

Simplex parse_triple(const std::string& tok, std::size_t line, std::size_t n) {
    std::array<long, 3> v{};
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        std::size_t used = 0;
        try {
            v[static_cast<std::size_t>(k)] = std::stol(tok.substr(pos), &used);
        } catch (const std::exception&) {
            fail(line, "malformed triple '" + tok + "'");
        }
        if (tok[pos] == '-' || tok[pos] == '+' || tok[pos] == ' ') fail(line, "malformed triple '" + tok + "'");
        pos += used;
        if (k < 2) {
            if (pos >= tok.size() || tok[pos] != ',') fail(line, "malformed triple '" + tok + "'");
            ++pos;
        }
    }
    if (pos != tok.size()) fail(line, "malformed triple '" + tok + "'");
    if (!(v[0] < v[1] && v[1] < v[2])) fail(line, "triple '" + tok + "' is not strictly ascending");
    if (v[2] >= static_cast<long>(n)) fail(line, "index out of range in '" + tok + "'");
    return Simplex{{static_cast<PointIndex>(v[0]), static_cast<PointIndex>(v[1]), static_cast<PointIndex>(v[2])}};
}

}  // namespace

StreamData read_stream(std::istream& is) {
    std::string text;
    if (!std::getline(is, text)) throw StreamParseError("line 1: missing header");
    StreamData out;
    out.header = parse_header(text);
    const std::size_t n = lattice_points(out.header.region).size();
    std::size_t line = 1;
    while (std::getline(is, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        Triangulation t{out.header.region, {}};
        std::istringstream ss(text);
        std::string tok;
        while (ss >> tok) t.simplices.push_back(parse_triple(tok, line, n));
        if (!std::is_sorted(t.simplices.begin(), t.simplices.end()) ||
            std::adjacent_find(t.simplices.begin(), t.simplices.end()) != t.simplices.end()) {
            fail(line, "triples are not in strictly ascending order");
        }
        if (t.simplices.empty() && lattice_points(out.header.region).normalized_area() != 0) {
            fail(line, "empty triangulation");
        }
        out.triangulations.push_back(std::move(t));
    }
    return out;
}

}  // namespace symtri
