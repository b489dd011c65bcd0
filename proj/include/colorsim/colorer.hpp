#pragma once

#include <colorsim/function.hpp>
#include <colorsim/sim_graph.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace colorsim
{

/// Subset of C = {0..n-1} as a bit mask; the engine supports n <= 64.
using ColorMask = std::uint64_t;

constexpr int max_colors = 64;

ColorMask full_mask( int n );
constexpr ColorMask color_bit( Color c ) { return ColorMask{ 1 } << c; }

/// Per-vertex candidate lists.
struct ListAssignment
{
  int n = 0;
  std::vector<ColorMask> lists;

  static ListAssignment full( std::size_t vertices, int n );

  /// Sum of list sizes.
  std::size_t total_size() const;
  bool all_singleton() const;
  bool any_empty() const;
  /// Only meaningful when all_singleton().
  std::vector<Color> coloring() const;

  friend bool operator==( const ListAssignment&, const ListAssignment& ) = default;
};

std::string format_list( ColorMask list );

/// One effective rewrite u -> v that removed `removed` from L_v.
struct ForcingStep
{
  VertexId from;
  VertexId to;
  ColorMask removed;
};

/*! \brief The direct forcing rule along the arc u -> v.
 *
 * If |L_u| = 1 then L_v := L_v - L_u; if L_u is empty then L_v := {}.
 * Returns the removed colors (0 when the rule does not change anything).
 */
ColorMask apply_direct_forcing( ListAssignment& lists, VertexId u, VertexId v );

struct NormalFormResult
{
  ListAssignment lists;
  /// Number of rule applications that changed a list.
  std::size_t rewrites = 0;
};

/// Irreducible normal form, computed with a work list of vertices whose list has at most one color.
NormalFormResult normal_form( const MarkedGraph& g, ListAssignment lists, std::vector<ForcingStep>* transcript = nullptr );

/*! \brief Normal form by repeated rounds over a fixed arc order until a round changes nothing.
 *
 * `arcs` lists directed edges; when empty, every edge in creation order is used in both directions.
 */
NormalFormResult normal_form_scan( const MarkedGraph& g, ListAssignment lists, const std::vector<Edge>& arcs = {},
                                   std::vector<ForcingStep>* transcript = nullptr );

void write_transcript( std::ostream& os, const std::vector<ForcingStep>& steps );

/// Lists with ~i pinned to i, inputs pinned to `input`, everything else full.
ListAssignment pinned_lists( const SimGraph& g, const std::vector<Color>& input );

enum class outcome_kind
{
  unique,
  infeasible,
  unresolved
};

std::string to_string( outcome_kind kind );

struct ColoringOutcome
{
  outcome_kind kind = outcome_kind::unresolved;
  /// Set when unique.
  std::vector<Color> coloring;
  Tuple output;
  /// The normal form reached, kept for every outcome.
  ListAssignment normal_form;
  std::size_t rewrites = 0;
  std::size_t initial_size = 0;
};

/// Propagation-only evaluation; input entries must be symbols below m.
ColoringOutcome evaluate( const SimGraph& g, const Tuple& input );

/// As evaluate, accepting any input colors below n.
ColoringOutcome evaluate_colors( const SimGraph& g, const std::vector<Color>& input );

struct ExtensionCount
{
  std::uint64_t count = 0;
  bool capped = false;
  /// The first proper coloring found, if any.
  std::vector<Color> first;
  std::uint64_t branches = 0;
};

/// Number of proper colorings inside `lists`, by fail-first backtracking with propagation. Stops at `cap`.
ExtensionCount count_extensions( const MarkedGraph& g, const ListAssignment& lists, std::uint64_t cap = 2 );

struct VerifyOptions
{
  /// Input color tuples to check; all of C^p when empty.
  std::vector<std::vector<Color>> points;
  std::uint64_t cap = 2;
};

struct VerifyFailure
{
  std::vector<Color> input;
  std::string expected;
  std::string observed;
};

struct VerifyReport
{
  bool colorable = false;
  bool reference_clique = false;
  std::size_t points_checked = 0;
  std::size_t defined_points = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return colorable && reference_clique && failures.empty(); }
};

/// Checks the simulation contract of `g` for `phi` with the brute-force oracle.
VerifyReport verify_simulates( const SimGraph& g, const PartialFunction& phi, const VerifyOptions& options = {} );

void write_report( std::ostream& os, const VerifyReport& report );

} // namespace colorsim
