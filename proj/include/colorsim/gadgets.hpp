#pragma once

#include <colorsim/permutation.hpp>
#include <colorsim/sim_graph.hpp>

#include <vector>

namespace colorsim
{

/*! \brief L_{k,n}[x,y;R]: in every n-coloring x = k iff y = k, other color pairs are free.
 *
 * Built as eta_k + T_zeta with T the path u_{i1} - u_{i2} - ... over C \ {k} in ascending order.
 * Exactly 4n-3 vertices and n(7n-11)/2 edges.
 */
SimGraph build_L( int k, int n );

/// Simulates the transposition (i j) on S = {0..m-1}; colors >= m are excluded at x and y.
SimGraph build_transposition( int i, int j, int m, int n );

/// Chain of transposition gadgets, one per entry of perm_to_transpositions(pi); m = pi.size().
/// The identity yields a single wire vertex (input = output).
SimGraph build_permutation( const Permutation& pi, int n );

/// cs+ (shift = +1) or cs- (shift = -1) on {0..m-1}.
SimGraph build_cyclic_shift( int shift, int m, int n );

enum class coder_kind
{
  ch, ///< i -> 1_m^i
  ps, ///< 1_m^i -> i, undefined elsewhere
  xp  ///< 0 -> 0_m, 1 -> 1_m, undefined elsewhere
};

SimGraph build_coder( coder_kind kind, int m, int n );

enum class boolean_kind
{
  not_,
  and_,
  or_,
  vand, ///< r-ary and, balanced tree of binary and gates
  vor   ///< r-ary or, balanced tree of binary or gates
};

/// Extended Boolean partial operations: defined only on {0,1} inputs. `r` is used by vand/vor only.
SimGraph build_bool( boolean_kind kind, int m, int n, int r = 2 );

enum class select_kind
{
  dot, ///< (i, j) -> 0 if j = 0, i if j = 1
  xt,  ///< u -> k if every u_i is in {0,k}
  mux  ///< (v, 1_m^i) -> v_i
};

SimGraph build_select( select_kind kind, int m, int n );

enum class arith_kind
{
  add,
  sub
};

/// Modular add/sub: inputs (x, y), output x +- y mod m.
SimGraph build_arith( arith_kind kind, int m, int n );

/// E_{r,n}[u,v;v;R]: simulates Edg_r. Inputs u_0..u_{r-1}, v_0..v_{r-1}; outputs are the v vertices.
SimGraph build_edge_gadget( int r, int m, int n );

/// Source of a stage input: an outer input or an output of an earlier stage.
struct WireSource
{
  static WireSource outer( int index ) { return { -1, index }; }
  static WireSource stage_output( int stage, int index ) { return { stage, index }; }

  bool is_outer() const { return stage < 0; }

  int stage = -1;
  int index = 0;
};

struct WiringStage
{
  SimGraph gadget;
  std::vector<WireSource> inputs;
};

/// A feed-forward circuit of simulators sharing one reference clique.
struct WiringSpec
{
  int input_count = 0;
  std::vector<WiringStage> stages;
  /// Defaults to every output of the last stage when empty.
  std::vector<WireSource> outputs;
  std::string name = "compose";
};

/// Amalgam of all stages with consumed outputs identified with consumer inputs.
SimGraph compose( const WiringSpec& spec );

/// Exchanges inputs and outputs; requires p = q.
SimGraph swap_io( const SimGraph& g );

} // namespace colorsim
