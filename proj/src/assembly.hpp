#pragma once

#include <colorsim/sim_graph.hpp>

#include <span>
#include <string>
#include <vector>

namespace colorsim::detail
{

/*! \brief Incremental amalgam of gadgets around one shared reference clique K_n[R].
 *
 * Vertices that later gadgets attach to receive machine labels "#<id>"; `finish`
 * strips them so that only X, Y and R stay marked.
 */
class Assembly
{
public:
  Assembly( int n, int m, std::string name );

  VertexId vertex();
  VertexId ref( int k ) const { return reference_.at( k ); }

  void edge( VertexId a, VertexId b );
  /// e[v, ~k] for from <= k < to.
  void exclude( VertexId v, int from, int to );

  /// Amalgamates `part` with its inputs identified with `inputs`; returns the images of its outputs.
  std::vector<VertexId> place( const SimGraph& part, std::span<const VertexId> inputs );
  /// As `place`, additionally identifying the outputs of `part` with `outputs`.
  void place_onto( const SimGraph& part, std::span<const VertexId> inputs, std::span<const VertexId> outputs );

  void note( std::string term ) { trace_.push_back( std::move( term ) ); }

  SimGraph finish( std::vector<VertexId> inputs, std::vector<VertexId> outputs );

  int n() const { return n_; }
  int m() const { return m_; }

private:
  std::string handle( VertexId v );
  std::vector<VertexId> attach( const SimGraph& part, std::span<const VertexId> inputs,
                                std::span<const VertexId> outputs );

  int n_;
  int m_;
  std::string name_;
  MarkedGraph graph_;
  std::vector<VertexId> reference_;
  std::vector<std::string> trace_;
};

std::string bracket( const std::string& name, std::span<const std::string> in, std::span<const std::string> out );

} // namespace colorsim::detail
