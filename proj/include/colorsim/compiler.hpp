#pragma once

#include <colorsim/errors.hpp>
#include <colorsim/extend.hpp>
#include <colorsim/function.hpp>
#include <colorsim/sim_graph.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace colorsim
{

struct Totalized
{
  PartialFunction function;
  std::optional<Symbol> star;
};

/*! \brief Makes phi total by sending undefined rows to (star, ..., star).
 *
 * star is the smallest symbol missing from the first output coordinate of phi;
 * when every symbol occurs there, star = m and the alphabet grows to m + 1.
 */
Totalized totalize( const PartialFunction& phi );

/// Result of replacing every vertex by an r-tuple and every edge by an edge gadget.
struct BlowUp
{
  MarkedGraph graph;
  /// coordinates[w][t] is coordinate t of the tuple standing for vertex w.
  std::vector<std::vector<VertexId>> coordinates;
  std::vector<VertexId> reference;
  std::size_t gadget_count = 0;
};

/// `g` is a graph meant for n_tilde = n^r colors; every edge (a, b) becomes an E_{r,n}[a, b; b; R] instance.
BlowUp blow_up( const MarkedGraph& g, std::uint64_t n_tilde, int r, int n );

/// Vertex and edge counts of blow_up without building it.
GraphStats predict_blow_up( const GraphStats& g, int r, int n );

struct CompileOptions
{
  /// compile refuses to build when the predicted vertex count exceeds this.
  std::size_t max_vertices = 20'000'000;
};

/// Everything before the blow-up: the totalized function, its extension and the n^r-color simulator.
struct CompilePlan
{
  PartialFunction source;
  Totalized total;
  ExtensionSpec spec;
  BigPermutation extension;
  /// The extension on {0..n^r-1}, fixing every index outside the embedded copy.
  Permutation color_permutation{ std::vector<int>{ 0 } };
  SimGraph wide;
  int n = 0;
  int r = 0;
  std::uint64_t n_tilde = 0;
  int theta = 0;
  GraphStats predicted;
};

/// Throws size_limit_error when the predicted final graph exceeds `options.max_vertices`.
CompilePlan plan_compile( const PartialFunction& phi, int n, const CompileOptions& options = {} );

/// Index of the color of the wide simulator that encodes (x, s0, ..., s0).
std::uint64_t wide_input_color( const CompilePlan& plan, const Tuple& x );

struct CompileReport
{
  int theta = 0;
  int r = 0;
  std::uint64_t n_tilde = 0;
  GraphStats stats;
  std::optional<Symbol> star_used;
  GraphStats wide_stats;
  std::size_t edge_gadgets = 0;
};

struct CompileResult
{
  SimGraph graph;
  CompileReport report;
  /// coordinates[w][t] for every vertex w of the wide simulator.
  std::vector<std::vector<VertexId>> coordinates;
};

/// Thrown when the predicted graph exceeds CompileOptions::max_vertices.
struct size_limit_error : compile_error
{
  size_limit_error( const std::string& what, GraphStats predicted ) : compile_error( what ), predicted( predicted ) {}

  GraphStats predicted;
};

CompileResult compile( const PartialFunction& phi, int n, const CompileOptions& options = {} );
CompileResult compile( const CompilePlan& plan, const CompileOptions& options = {} );

void write_compile_report( std::ostream& os, const CompileReport& report );

} // namespace colorsim
