#ifndef HESSCOH_GRAPH_HPP
#define HESSCOH_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hesscoh/hessenberg.hpp"
#include "hesscoh/permutation.hpp"

namespace hesscoh {

// Vertices are permutations identified by their lexicographic rank in S_n.
// An edge joins w and w(i,j) for j < i <= h(j); its label is the linear form
// t_{w(i)} - t_{w(j)}, stored as the value pair {a, b} with a < b (the sign
// is immaterial). Positions are kept alongside for the minor correspondence.
struct GraphEdge {
  std::uint32_t u = 0, v = 0;  // lex ranks, u < v
  std::uint8_t pos_j = 0, pos_i = 0;  // j < i, transposed positions
  std::uint8_t label_a = 0, label_b = 0;  // {w(i), w(j)} sorted ascending
};

class LabeledGraph {
 public:
  int n = 0;
  std::vector<std::uint32_t> vertices;  // sorted lex ranks
  std::vector<GraphEdge> edges;         // sorted by (u, v, pos_j, pos_i)

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  bool has_vertex(std::uint32_t r) const;
  std::vector<std::size_t> degree_sequence() const;
  bool is_regular(std::size_t deg) const;
  bool is_cycle() const;  // connected and 2-regular
};

// Configured ceiling for full graphs; n! vertices above this refuse to build.
inline constexpr int kDefaultGraphMaxN = 8;

LabeledGraph build_graph(const HessenbergFunction& h, int max_n = kDefaultGraphMaxN);

// Connected components of the induced subgraph on S_n^r = { w : w(r) = n },
// ordered by their smallest vertex.
std::vector<LabeledGraph> fixed_level_components(const HessenbergFunction& h, int r,
                                                 int max_n = kDefaultGraphMaxN);

// Verifies that w -> w c_r, restricted to the first n-1 positions, is a
// label-preserving isomorphism from the component onto a connected component
// of the graph of h^r.
bool phi_r_check(const HessenbergFunction& h, int r, const LabeledGraph& component);

std::string export_dot(const LabeledGraph& g);
std::string export_json(const LabeledGraph& g);

}  // namespace hesscoh

#endif
