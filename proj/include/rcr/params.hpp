#pragma once

#include <cstdint>
#include <string>

namespace rcr {

enum class Variant { Rcr, RcrII };

std::string variant_name(Variant v);

using NodeId = std::uint32_t;

/// Parameter triple (k, r, j) plus the variant tag.
/// k: cube dimension, r: ring dimension, j: expansion level.
/// The cube coordinate is k+j bits wide and the network has r * 2^(k+j) nodes.
struct NetworkParams {
    Variant variant;
    int k;
    int r;
    int j;

    /// Throws std::invalid_argument unless k >= 1, r >= 1, j >= 0.
    NetworkParams(Variant variant, int k, int r, int j);

    int bit_width() const { return k + j; }
    std::uint64_t node_count() const { return std::uint64_t(r) << bit_width(); }

    bool operator==(const NetworkParams&) const = default;
};

/// A node coordinate: cube bits a_{k+j-1}..a_0 (bit i of cube_value is a_i)
/// and ring position b in [0, r-1].
struct NodeCoord {
    std::uint32_t cube_value = 0;
    int ring_pos = 0;

    bool operator==(const NodeCoord&) const = default;
};

/// id = cube_value * r + ring_pos; keeps each ring contiguous.
NodeId coord_to_id(const NodeCoord& c, const NetworkParams& p);
NodeCoord id_to_coord(NodeId id, const NetworkParams& p);

/// Text form "<bits;b>": k+j binary digits most-significant-first, ';',
/// then decimal ring position. Example: "110001100;3".
std::string format_coord(const NodeCoord& c, const NetworkParams& p);

/// Inverse of format_coord. Throws std::invalid_argument on wrong bit width,
/// non-binary digit, or ring position >= r.
NodeCoord parse_coord(const std::string& text, const NetworkParams& p);

}  // namespace rcr
