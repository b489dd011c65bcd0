#include <colorsim/colorer.hpp>

#include <colorsim/errors.hpp>

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

namespace colorsim
{

namespace
{

bool at_most_one( ColorMask list )
{
  return ( list & ( list - 1 ) ) == 0;
}

void require_colors( int n )
{
  if ( n < 1 || n > max_colors )
  {
    throw colorsim_error( "the list engine supports 1 <= n <= " + std::to_string( max_colors ) + ", got " + std::to_string( n ) );
  }
}

std::string format_colors( const std::vector<Color>& colors )
{
  std::string result;
  for ( std::size_t i = 0; i < colors.size(); ++i )
  {
    result += ( i ? " " : "" ) + std::to_string( colors[i] );
  }
  return result;
}

/// Work-list propagation; `queue` holds vertices whose list has at most one color.
std::size_t propagate( const MarkedGraph& g, ListAssignment& lists, std::vector<VertexId>& queue,
                       std::vector<ForcingStep>* transcript, bool stop_on_empty )
{
  std::size_t rewrites = 0;
  while ( !queue.empty() )
  {
    auto const u = queue.back();
    queue.pop_back();
    for ( auto v : g.neighbors( u ) )
    {
      auto const removed = apply_direct_forcing( lists, u, v );
      if ( removed == 0 )
      {
        continue;
      }
      ++rewrites;
      if ( transcript )
      {
        transcript->push_back( { u, v, removed } );
      }
      if ( at_most_one( lists.lists[v] ) )
      {
        if ( stop_on_empty && lists.lists[v] == 0 )
        {
          queue.clear();
          return rewrites;
        }
        queue.push_back( v );
      }
    }
  }
  return rewrites;
}

} // namespace

ColorMask full_mask( int n )
{
  require_colors( n );
  return n == 64 ? ~ColorMask{ 0 } : ( ColorMask{ 1 } << n ) - 1;
}

ListAssignment ListAssignment::full( std::size_t vertices, int n )
{
  return { n, std::vector<ColorMask>( vertices, full_mask( n ) ) };
}

std::size_t ListAssignment::total_size() const
{
  std::size_t total = 0;
  for ( auto list : lists )
  {
    total += std::popcount( list );
  }
  return total;
}

bool ListAssignment::all_singleton() const
{
  return std::all_of( lists.begin(), lists.end(), []( ColorMask l ) { return std::popcount( l ) == 1; } );
}

bool ListAssignment::any_empty() const
{
  return std::any_of( lists.begin(), lists.end(), []( ColorMask l ) { return l == 0; } );
}

std::vector<Color> ListAssignment::coloring() const
{
  std::vector<Color> result( lists.size() );
  for ( std::size_t v = 0; v < lists.size(); ++v )
  {
    result[v] = std::countr_zero( lists[v] );
  }
  return result;
}

std::string format_list( ColorMask list )
{
  std::string result = "{";
  bool first = true;
  for ( ; list; list &= list - 1 )
  {
    result += ( first ? "" : "," ) + std::to_string( std::countr_zero( list ) );
    first = false;
  }
  return result + "}";
}

ColorMask apply_direct_forcing( ListAssignment& lists, VertexId u, VertexId v )
{
  auto const lu = lists.lists[u];
  auto& lv = lists.lists[v];
  ColorMask removed = 0;
  if ( lu == 0 )
  {
    removed = lv;
  }
  else if ( at_most_one( lu ) )
  {
    removed = lv & lu;
  }
  lv &= ~removed;
  return removed;
}

NormalFormResult normal_form( const MarkedGraph& g, ListAssignment lists, std::vector<ForcingStep>* transcript )
{
  std::vector<VertexId> queue;
  for ( VertexId v = 0; v < lists.lists.size(); ++v )
  {
    if ( at_most_one( lists.lists[v] ) )
    {
      queue.push_back( v );
    }
  }
  // vertex 0 is processed first
  std::reverse( queue.begin(), queue.end() );
  auto const rewrites = propagate( g, lists, queue, transcript, false );
  return { std::move( lists ), rewrites };
}

NormalFormResult normal_form_scan( const MarkedGraph& g, ListAssignment lists, const std::vector<Edge>& arcs,
                                   std::vector<ForcingStep>* transcript )
{
  std::vector<Edge> order = arcs;
  if ( order.empty() )
  {
    for ( auto const& e : g.edges() )
    {
      order.push_back( e );
      order.push_back( { e.v, e.u } );
    }
  }
  NormalFormResult result{ std::move( lists ), 0 };
  for ( bool changed = true; changed; )
  {
    changed = false;
    for ( auto const& [u, v] : order )
    {
      if ( auto removed = apply_direct_forcing( result.lists, u, v ) )
      {
        changed = true;
        ++result.rewrites;
        if ( transcript )
        {
          transcript->push_back( { u, v, removed } );
        }
      }
    }
  }
  return result;
}

void write_transcript( std::ostream& os, const std::vector<ForcingStep>& steps )
{
  for ( auto const& step : steps )
  {
    os << step.from << " -> " << step.to << " remove " << format_list( step.removed ) << '\n';
  }
}

ListAssignment pinned_lists( const SimGraph& g, const std::vector<Color>& input )
{
  require_colors( g.n );
  if ( static_cast<int>( input.size() ) != g.p() )
  {
    throw colorsim_error( g.name + ": expected " + std::to_string( g.p() ) + " input values, got " + std::to_string( input.size() ) );
  }
  auto lists = ListAssignment::full( g.graph.vertex_count(), g.n );
  for ( int i = 0; i < g.n; ++i )
  {
    lists.lists[g.reference[i]] = color_bit( i );
  }
  for ( std::size_t i = 0; i < input.size(); ++i )
  {
    if ( input[i] < 0 || input[i] >= g.n )
    {
      throw colorsim_error( g.name + ": input color " + std::to_string( input[i] ) + " outside C" );
    }
    lists.lists[g.inputs[i]] &= color_bit( input[i] );
  }
  return lists;
}

std::string to_string( outcome_kind kind )
{
  switch ( kind )
  {
  case outcome_kind::unique:
    return "unique";
  case outcome_kind::infeasible:
    return "infeasible";
  case outcome_kind::unresolved:
    return "unresolved";
  }
  return "?";
}

ColoringOutcome evaluate_colors( const SimGraph& g, const std::vector<Color>& input )
{
  auto initial = pinned_lists( g, input );
  ColoringOutcome outcome;
  outcome.initial_size = initial.total_size();
  auto nf = normal_form( g.graph, std::move( initial ) );
  outcome.rewrites = nf.rewrites;
  outcome.normal_form = std::move( nf.lists );
  auto const& lists = outcome.normal_form;
  if ( lists.any_empty() )
  {
    outcome.kind = outcome_kind::infeasible;
  }
  else if ( lists.all_singleton() )
  {
    // an irreducible all-singleton assignment is a proper coloring
    outcome.kind = outcome_kind::unique;
    outcome.coloring = lists.coloring();
    for ( auto y : g.outputs )
    {
      outcome.output.push_back( outcome.coloring[y] );
    }
  }
  else
  {
    outcome.kind = outcome_kind::unresolved;
  }
  return outcome;
}

ColoringOutcome evaluate( const SimGraph& g, const Tuple& input )
{
  for ( auto s : input )
  {
    if ( s < 0 || s >= g.m )
    {
      throw colorsim_error( g.name + ": input symbol " + std::to_string( s ) + " outside {0.." + std::to_string( g.m - 1 ) + "}" );
    }
  }
  return evaluate_colors( g, input );
}

namespace
{

struct Counter
{
  const MarkedGraph& g;
  std::uint64_t cap;
  ExtensionCount result;

  void search( ListAssignment& lists )
  {
    ++result.branches;
    std::size_t best = lists.lists.size();
    int best_size = max_colors + 1;
    for ( std::size_t v = 0; v < lists.lists.size(); ++v )
    {
      auto const size = std::popcount( lists.lists[v] );
      if ( size == 0 )
      {
        return;
      }
      if ( size > 1 && size < best_size )
      {
        best = v;
        best_size = size;
        if ( size == 2 )
        {
          break;
        }
      }
    }
    if ( best == lists.lists.size() )
    {
      if ( result.count == 0 )
      {
        result.first = lists.coloring();
      }
      ++result.count;
      return;
    }
    for ( auto choices = lists.lists[best]; choices; choices &= choices - 1 )
    {
      if ( result.count >= cap )
      {
        result.capped = true;
        return;
      }
      auto branch = lists;
      branch.lists[best] = choices & ( ~choices + 1 );
      std::vector<VertexId> queue{ static_cast<VertexId>( best ) };
      propagate( g, branch, queue, nullptr, true );
      search( branch );
    }
  }
};

} // namespace

ExtensionCount count_extensions( const MarkedGraph& g, const ListAssignment& lists, std::uint64_t cap )
{
  if ( cap < 1 )
  {
    throw colorsim_error( "extension count cap must be at least 1" );
  }
  if ( lists.lists.size() != g.vertex_count() )
  {
    throw colorsim_error( "list assignment does not match the graph" );
  }
  Counter counter{ g, cap, {} };
  auto start = normal_form( g, lists ).lists;
  counter.search( start );
  return counter.result;
}

VerifyReport verify_simulates( const SimGraph& g, const PartialFunction& phi, const VerifyOptions& options )
{
  VerifyReport report;
  if ( phi.p != g.p() || phi.q != g.q() )
  {
    report.failures.push_back( { {}, "arity " + std::to_string( phi.p ) + "->" + std::to_string( phi.q ),
                                 "arity " + std::to_string( g.p() ) + "->" + std::to_string( g.q() ) } );
    return report;
  }

  report.reference_clique = true;
  for ( int a = 0; a < g.n; ++a )
  {
    for ( int b = a + 1; b < g.n; ++b )
    {
      report.reference_clique = report.reference_clique && g.graph.has_edge( g.reference[a], g.reference[b] );
    }
  }

  auto points = options.points;
  if ( points.empty() )
  {
    auto const total = checked_power( g.n, g.p() );
    for ( std::uint64_t i = 0; i < total; ++i )
    {
      points.push_back( digits( i, g.n, g.p() ) );
    }
  }

  for ( auto const& x : points )
  {
    ++report.points_checked;
    auto const expected = phi( x );
    auto const count = count_extensions( g.graph, pinned_lists( g, x ), options.cap );
    std::string observed;
    Tuple output;
    if ( count.count == 1 && !count.capped )
    {
      for ( auto y : g.outputs )
      {
        output.push_back( count.first[y] );
      }
      observed = "unique " + format_colors( output );
    }
    else
    {
      observed = count.count == 0 ? "no extension" : ( count.capped ? "at least " : "" ) + std::to_string( count.count ) + " extensions";
    }
    if ( count.count > 0 )
    {
      report.colorable = true;
    }
    if ( expected )
    {
      ++report.defined_points;
      if ( count.count != 1 || count.capped || output != *expected )
      {
        report.failures.push_back( { x, "unique " + format_colors( *expected ), observed } );
      }
    }
    else if ( count.count != 0 )
    {
      report.failures.push_back( { x, "no extension", observed } );
    }
  }

  if ( !report.colorable )
  {
    auto lists = ListAssignment::full( g.graph.vertex_count(), g.n );
    for ( int i = 0; i < g.n; ++i )
    {
      lists.lists[g.reference[i]] = color_bit( i );
    }
    report.colorable = count_extensions( g.graph, lists, 1 ).count > 0;
  }
  return report;
}

void write_report( std::ostream& os, const VerifyReport& report )
{
  os << "colorable " << ( report.colorable ? "yes" : "no" ) << '\n';
  os << "reference_clique " << ( report.reference_clique ? "yes" : "no" ) << '\n';
  os << "points_checked " << report.points_checked << '\n';
  os << "defined_points " << report.defined_points << '\n';
  os << "failures " << report.failures.size() << '\n';
  for ( auto const& f : report.failures )
  {
    os << "  input (" << format_colors( f.input ) << "): expected " << f.expected << ", observed " << f.observed << '\n';
  }
  os << ( report.passed() ? "PASS" : "FAIL" ) << '\n';
}

} // namespace colorsim
