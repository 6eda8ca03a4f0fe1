#ifndef ORDSPEED_IO_HPP
#define ORDSPEED_IO_HPP

#include <iosfwd>
#include <string>

#include "ordspeed/graph.hpp"

namespace ordspeed {

// Text graph format:
//   ordgraph <n>
//   <u> <v>        one line per edge, u < v, sorted lexicographically
// Blank lines and lines starting with '#' are ignored. Looped graphs add
// one "loop <i>" line per loop, after the edges, sorted.

std::string format_graph(const OrderedGraph& g);
std::string format_graph(const LoopedOrderedGraph& g);

OrderedGraph parse_graph(const std::string& text);
LoopedOrderedGraph parse_looped_graph(const std::string& text);

OrderedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const OrderedGraph& g);

}  // namespace ordspeed

#endif
