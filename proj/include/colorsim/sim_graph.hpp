#pragma once

#include <colorsim/graph.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace colorsim
{

using Color = int;
using Symbol = int;
using Tuple = std::vector<Symbol>;

/// Label of reference vertex `~i`.
std::string reference_label( int i );
std::string input_label( int i );
std::string output_label( int j );

/*! \brief A marked graph that simulates a partial function S^p -> S^q through n-colorings.
 *
 * `inputs`, `outputs` and `reference` hold vertex ids; the graph marks them
 * "x<i>", "y<j>" and "~<k>" (a vertex that is both input and output keeps its input label).
 * `trace` lists the top-level amalgam terms the gadget was assembled from.
 */
struct SimGraph
{
  MarkedGraph graph;
  std::vector<VertexId> inputs;
  std::vector<VertexId> outputs;
  std::vector<VertexId> reference;
  int n = 0;
  int m = 0;
  std::string name;
  std::vector<std::string> trace;

  int p() const { return static_cast<int>( inputs.size() ); }
  int q() const { return static_cast<int>( outputs.size() ); }

  /// Throws gadget_error when a structural invariant is broken (R not a K_n, X meets R, bad n/m...).
  void validate() const;

  /// Strips every label, then marks X, Y and R with their canonical labels.
  void relabel_interface();

  /// The construction as a bracketed amalgam expression.
  std::string trace_expression() const;
};

/*! \brief Writes the .sg format: the edge list followed by role annotations.
 *
 * \verbatim
 * params n m p q
 * X i <label>
 * Y j <label>
 * R k <label>
 * \endverbatim
 */
void write_sim_graph( std::ostream& os, const SimGraph& g );
SimGraph read_sim_graph( std::istream& is );

/// DOT export with inputs, outputs and reference vertices highlighted.
void write_sim_dot( std::ostream& os, const SimGraph& g );

} // namespace colorsim
