#include "rcr/params.hpp"

#include <stdexcept>

namespace rcr {

std::string variant_name(Variant v) {
    return v == Variant::Rcr ? "rcr" : "rcr2";
}

NetworkParams::NetworkParams(Variant variant_, int k_, int r_, int j_)
    : variant(variant_), k(k_), r(r_), j(j_) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (j < 0) throw std::invalid_argument("j must be >= 0");
    if (k + j > 31) throw std::invalid_argument("k+j too large for 32-bit cube coordinates");
}

NodeId coord_to_id(const NodeCoord& c, const NetworkParams& p) {
    if (c.ring_pos < 0 || c.ring_pos >= p.r)
        throw std::invalid_argument("ring position out of range");
    if (c.cube_value >> p.bit_width())
        throw std::invalid_argument("cube value out of range");
    return NodeId(std::uint64_t(c.cube_value) * p.r + c.ring_pos);
}

NodeCoord id_to_coord(NodeId id, const NetworkParams& p) {
    if (id >= p.node_count()) throw std::invalid_argument("node id out of range");
    return NodeCoord{std::uint32_t(id / p.r), int(id % p.r)};
}

std::string format_coord(const NodeCoord& c, const NetworkParams& p) {
    std::string out;
    for (int i = p.bit_width() - 1; i >= 0; --i)
        out += (c.cube_value >> i & 1) ? '1' : '0';
    out += ';';
    out += std::to_string(c.ring_pos);
    return out;
}

NodeCoord parse_coord(const std::string& text, const NetworkParams& p) {
    const auto sep = text.find(';');
    if (sep == std::string::npos)
        throw std::invalid_argument("coordinate must be \"<bits;b>\"");
    if (int(sep) != p.bit_width())
        throw std::invalid_argument("expected " + std::to_string(p.bit_width()) +
                                    " cube bits, got " + std::to_string(sep));
    NodeCoord c;
    for (std::size_t i = 0; i < sep; ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("cube bits must be 0 or 1");
        c.cube_value = c.cube_value << 1 | (ch == '1');
    }
    const std::string tail = text.substr(sep + 1);
    std::size_t used = 0;
    int b;
    try {
        b = std::stoi(tail, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("ring position must be a decimal integer");
    }
    if (used != tail.size() || b < 0)
        throw std::invalid_argument("ring position must be a decimal integer");
    if (b >= p.r)
        throw std::invalid_argument("ring position " + std::to_string(b) +
                                    " out of range [0, " + std::to_string(p.r - 1) + "]");
    c.ring_pos = b;
    return c;
}

}  // namespace rcr
