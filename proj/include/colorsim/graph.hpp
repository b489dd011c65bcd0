#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace colorsim
{

using VertexId = std::uint32_t;

struct Edge
{
  VertexId u;
  VertexId v;

  friend bool operator==( const Edge&, const Edge& ) = default;
};

struct GraphStats
{
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;

  friend bool operator==( const GraphStats&, const GraphStats& ) = default;
};

/// Old label -> new label.
using LabelMap = std::unordered_map<std::string, std::string>;

/// What `absorb` does with labels of the absorbed graph that the rename map does not mention.
enum class unmapped_labels
{
  keep, ///< carried over, identified with equal labels already present
  drop  ///< the vertex arrives unlabeled
};

/*! \brief Simple undirected graph with an injective labeling of some vertices.
 *
 * Vertex ids are dense and never reused. Edges are kept in creation order,
 * which is the canonical scan order used by the propagation engine.
 * Every mutation preserves simplicity: self-loops throw, parallel edges collapse.
 */
class MarkedGraph
{
public:
  MarkedGraph() = default;

  VertexId add_vertex();
  VertexId add_vertex( std::string_view label );

  /// Returns false when the edge was already present.
  bool add_edge( VertexId a, VertexId b );
  bool has_edge( VertexId a, VertexId b ) const;

  void mark( VertexId v, std::string_view label );
  void unmark( VertexId v );
  void clear_marks();

  std::optional<VertexId> find( std::string_view label ) const;
  VertexId at( std::string_view label ) const;
  std::optional<std::string_view> label_of( VertexId v ) const;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const VertexId> neighbors( VertexId v ) const { return adjacency_.at( v ); }
  std::size_t degree( VertexId v ) const { return adjacency_.at( v ).size(); }

  /// (label, vertex) pairs ordered by vertex id.
  std::vector<std::pair<std::string, VertexId>> marks() const;
  std::size_t mark_count() const { return marks_.size(); }

  /*! \brief In-place amalgam: appends a disjoint copy of `other` and identifies equally labeled vertices.
   *
   * Labels of `other` are first passed through `rename`; labels it does not mention
   * are kept or dropped according to `policy`. Returns the image of every vertex of `other`.
   */
  std::vector<VertexId> absorb( const MarkedGraph& other, const LabelMap& rename = {},
                                unmapped_labels policy = unmapped_labels::keep );

  void reserve( std::size_t vertices, std::size_t edges );

private:
  bool link( VertexId a, VertexId b, bool check_duplicate );

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> marks_;
  std::unordered_map<VertexId, std::string> labels_;
};

/// Isolated vertices, one per label.
MarkedGraph make_graph( std::span<const std::string> labels );

/// K_k with every vertex marked by its label.
MarkedGraph clique( std::span<const std::string> labels );

/// Single edge e[a,b].
MarkedGraph edge_graph( std::string_view a, std::string_view b );

/// G + H: disjoint union, then identification of equal labels. Marks of the result are the union.
MarkedGraph amalgam( const MarkedGraph& g, const MarkedGraph& h );

/// Identifies vertices whose labels map to the same new label; unmentioned labels map to themselves.
MarkedGraph merge_marks( const MarkedGraph& g, const LabelMap& relabeling );

GraphStats graph_stats( const MarkedGraph& g );

/// Label-keyed adjacency: sorted list of (label, label) pairs for edges between labeled vertices.
/// Used to compare amalgams independently of vertex numbering.
std::vector<std::pair<std::string, std::string>> labeled_edges( const MarkedGraph& g );

} // namespace colorsim
