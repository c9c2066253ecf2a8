#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

// A graph together with the named pieces it was built from. Vertex roles
// name vertex sets (for example "G1", "G2", "shared", "apex"); edge roles name
// vertex pairs (for example the deleted edges "e", "f", "g").
struct LabeledConstruction {
  Graph graph;
  std::map<std::string, std::vector<Vertex>> vertex_roles;
  std::map<std::string, Edge> edge_roles;
};

// B_{d,t}: two copies of K_{d+2} glued along K_t with one shared edge
// deleted. G1 is 0..d+1, the shared clique is the top t labels of G1, G2
// adds fresh labels d+2.., and e is the least shared pair.
LabeledConstruction build_B(int d, int t);

// Every member of the B+_{d,d-1} family up to isomorphism: K_{d+3} on
// 0..d+2 and K_{d+2} glued along K_{d-1} (labels 4..d+2), minus e, f, g.
std::vector<LabeledConstruction> enumerate_Bplus(int d);

// New vertex n joined to the d given vertices.
Graph zero_extension(const Graph& g, int d, std::span<const Vertex> neighbors);

// Delete `removed` (an edge between two of the neighbours) and add vertex n
// joined to the d+1 given vertices.
Graph one_extension(const Graph& g, int d, std::span<const Vertex> neighbors,
                    Edge removed);

// Split v into v1 (keeps label v) and v2 (label n). Both are joined to each
// other and to the d-1 hinge vertices; v1 takes part1, v2 takes the rest of
// N(v) outside the hinge.
Graph vertex_split(const Graph& g, int d, Vertex v, std::span<const Vertex> hinge,
                   std::span<const Vertex> part1);

// Apex n joined to every vertex.
Graph cone(const Graph& g);

// 2-sum gluing edge e1 of g1 to edge e2 of g2 (e1.u to e2.u, e1.v to e2.v)
// and deleting the glued edge. g1 keeps its labels; the other vertices of g2
// get n1, n1+1, ... in increasing order. Role "g2_map" lists the new label of
// each g2 vertex.
LabeledConstruction two_sum(const Graph& g1, const Graph& g2, Edge e1, Edge e2);
// Both summands use the same labels u, v for the glued edge.
LabeledConstruction two_sum(const Graph& g1, const Graph& g2, Vertex u, Vertex v);

// t-sum: shared1[i] in g1 is identified with shared2[i] in g2. Both lists
// must induce cliques; e (in g1 labels) must lie inside the shared clique and
// is deleted. Relabelling of g2 follows two_sum.
LabeledConstruction t_sum(const Graph& g1, const Graph& g2,
                          std::span<const Vertex> shared1,
                          std::span<const Vertex> shared2, Edge e);
// Both summands use the same labels for the shared clique.
LabeledConstruction t_sum(const Graph& g1, const Graph& g2,
                          std::span<const Vertex> shared, Edge e);

}  // namespace rigikit
