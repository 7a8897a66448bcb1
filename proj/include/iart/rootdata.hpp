#pragma once

// Dynkin combinatorics: valued quivers, Cartan data, Weyl group, roots.
// Vertices are 0-based internally; labelling follows LiE (Bourbaki numbering).
// Weights are row vectors in the fundamental-weight basis and the simple root
// alpha_i is row i of the Cartan matrix, so a root r in simple-root
// coordinates has weight coordinates r * C.

#include <string>
#include <utility>
#include <vector>

#include "iart/common.hpp"

namespace iart {

// Arrow src -> dst carrying the valuation (c_{src,dst}, c_{dst,src}).
struct QArrow {
    int src = 0, dst = 0;
    i64 c_sd = 1, c_ds = 1;
};

struct ValuedQuiver {
    char type = 'A';
    int rank = 0;
    int n = 0;
    std::vector<QArrow> arrows;
    IVec d;  // symmetrizer: d_i c_ij = c_ji d_j

    bool simply_laced() const;
    std::string name() const { return std::string(1, type) + std::to_string(rank); }
    // Canonical orientation string, 1-based, e.g. "1>2,3>2".
    std::string orientation_string() const;
};

struct CartanData {
    IMat El, Er;  // El(i,j) = -c_ji, Er(i,j) = -c_ij for an arrow i->j; identity diagonal
    IMat D;       // diag(d)
    IMat euler;   // E = El D = D Er
    IMat cartan;  // C = El + Er^T
};

struct WeylGroup {
    std::vector<IMat> elements;  // act on row weight vectors from the right
    std::vector<int> lengths;
    int w0 = 0;
    std::vector<int> star;
};

struct RootSystem {
    std::vector<IVec> simple_coords;  // sorted by height then lexicographically
    std::vector<IVec> weight_coords;  // simple_coords[k] * C
};

bool valid_dynkin(char type, int rank);
IMat lie_cartan(char type, int rank);
// Unordered diagram edges (0-based, i < j).
std::vector<std::pair<int, int>> diagram_edges(char type, int rank);
// Linear for A/B/C/F/G; legs toward the branch vertex for D/E (0-based arrows).
std::vector<std::pair<int, int>> default_orientation(char type, int rank);
// Parses "1>2,3>2" (1-based) into 0-based arrows.
std::vector<std::pair<int, int>> parse_orientation(const std::string& s);
// Parses "D4" or ("D", 4).
std::pair<char, int> parse_type(const std::string& s);

ValuedQuiver build_dynkin(char type, int rank, const std::vector<std::pair<int, int>>& arrows);
ValuedQuiver build_dynkin(char type, int rank);
// All 2^(#edges) orientations in a fixed order.
std::vector<ValuedQuiver> all_orientations(char type, int rank);

CartanData cartan_data(const ValuedQuiver& q);

WeylGroup weyl_group(const IMat& cartan, size_t cap = 1000000);
// i -> i* from w0(alpha_i) = -alpha_{i*}; works without enumerating W.
std::vector<int> star_permutation(const IMat& cartan);

RootSystem positive_roots(const IMat& cartan);

// Simple reflection s_i on a weight (fundamental-weight coordinates).
IVec reflect_weight(const IMat& cartan, const IVec& w, int i);

}  // namespace iart
