#ifndef ORDSPEED_GEN_HPP
#define ORDSPEED_GEN_HPP

#include <array>
#include <string>
#include <vector>

#include "ordspeed/graph.hpp"

namespace ordspeed {

// The named graphs of the J-family plus the two 3-vertex permutation
// obstructions:
//   K  : complete graph K_n              E  : edgeless graph E_n
//   J1 : K_n                             J2 : single edge {1,n}   (n >= 2)
//   J3 : left star {1i : 2 <= i <= n}    J4 : right star {in : i <= n-1}
//   L  : path {i(i+1)}                   Q1 : {13,24}   Q2 : {14,23}
//   H1 : {12,23} on [3]                  H2 : {13} on [3]
// Q1/Q2/H1/H2 have fixed orders (4,4,3,3); n is ignored for them.
enum class BasicKind { K, E, J1, J2, J3, J4, L, Q1, Q2, H1, H2 };

BasicKind parse_basic_kind(const std::string& name);
std::string basic_kind_name(BasicKind kind);

OrderedGraph gen_basic(BasicKind kind, int n);

enum class Orientation { Less, Greater };  // "<" keeps y increasing, ">" reverses Y

// M^<_I(X,Y) / M^>_I(X,Y) on [2m]: X = first m vertices, Y = last m.
// I = (I1,I2,I3,I4) controls X-X, X-below-Y, X-above-Y and Y-Y adjacency;
// x_i y_i is an edge iff i is odd.
OrderedGraph gen_m(const std::array<bool, 4>& I, int m, Orientation orient);

// G(pi): ij an edge (i < j) iff pi inverts the pair.
OrderedGraph gen_permutation_graph(const Permutation& pi);

// Induced prefix G[1,N] of the infinite graph of the T_n-recurrence
// construction. The first a(k) vertices form the header A (edgeless among
// themselves); past A the graph is H + H + ... with
// H = K_{k+1}^{a(0)} + K_k^{a(1)-a(0)} + ... + K_1^{a(k)-a(k-1)}.
// Header vertex i joins body vertex j iff the 1-based residue of j - a(k)
// mod d = |H| lies in [d(i)+1, d], where d(i) is the offset of the i-th
// irreducible block of H.
OrderedGraph gen_somebases_prefix(const std::vector<int>& a, int N);

}  // namespace ordspeed

#endif
