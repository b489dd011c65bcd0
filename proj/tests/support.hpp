#pragma once

#include <colorsim/colorer.hpp>
#include <colorsim/graph.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace colorsim::testing
{

struct ListGraph
{
  MarkedGraph graph;
  ListAssignment lists;
};

/// Random graph with random nonempty-or-empty lists over n colors.
inline ListGraph random_list_graph( std::mt19937& rng, int max_vertices, int max_colors, double empty_chance = 0.02 )
{
  std::uniform_int_distribution<int> vertex_count( 1, max_vertices );
  std::uniform_int_distribution<int> color_count( 1, max_colors );
  std::uniform_real_distribution<double> unit( 0.0, 1.0 );
  ListGraph lg;
  auto const v = vertex_count( rng );
  auto const n = color_count( rng );
  for ( int i = 0; i < v; ++i )
  {
    lg.graph.add_vertex();
  }
  auto const density = unit( rng );
  for ( VertexId a = 0; a < static_cast<VertexId>( v ); ++a )
  {
    for ( VertexId b = a + 1; b < static_cast<VertexId>( v ); ++b )
    {
      if ( unit( rng ) < density )
      {
        lg.graph.add_edge( a, b );
      }
    }
  }
  lg.lists.n = n;
  std::uniform_int_distribution<ColorMask> mask( 1, full_mask( n ) );
  for ( int i = 0; i < v; ++i )
  {
    auto list = mask( rng );
    if ( unit( rng ) < 0.35 )
    {
      // singletons drive the forcing rule
      list &= ~( list - 1 );
    }
    lg.lists.lists.push_back( unit( rng ) < empty_chance ? 0 : list );
  }
  return lg;
}

/// Every proper coloring inside the lists, by exhaustive enumeration of C^V.
inline std::set<std::vector<Color>> brute_force_solutions( const MarkedGraph& g, const ListAssignment& lists )
{
  std::set<std::vector<Color>> solutions;
  auto const v = g.vertex_count();
  std::vector<Color> colors( v, 0 );
  while ( true )
  {
    bool ok = true;
    for ( std::size_t i = 0; i < v && ok; ++i )
    {
      ok = ( lists.lists[i] >> colors[i] ) & 1;
    }
    for ( auto const& e : g.edges() )
    {
      ok = ok && colors[e.u] != colors[e.v];
    }
    if ( ok )
    {
      solutions.insert( colors );
    }
    std::size_t i = 0;
    while ( i < v && ++colors[i] == lists.n )
    {
      colors[i++] = 0;
    }
    if ( i == v )
    {
      break;
    }
  }
  return solutions;
}

/// Proper colorings inside the lists counted by plain chronological backtracking, no propagation.
inline std::uint64_t plain_count( const MarkedGraph& g, const ListAssignment& lists, std::uint64_t cap )
{
  auto const v = g.vertex_count();
  std::vector<Color> colors( v, -1 );
  std::uint64_t count = 0;
  auto step = [&]( auto&& self, std::size_t i ) -> void {
    if ( count >= cap )
    {
      return;
    }
    if ( i == v )
    {
      ++count;
      return;
    }
    for ( Color c = 0; c < lists.n; ++c )
    {
      if ( !( ( lists.lists[i] >> c ) & 1 ) )
      {
        continue;
      }
      auto const nbrs = g.neighbors( static_cast<VertexId>( i ) );
      if ( std::any_of( nbrs.begin(), nbrs.end(), [&]( VertexId u ) { return colors[u] == c; } ) )
      {
        continue;
      }
      colors[i] = c;
      self( self, i + 1 );
      colors[i] = -1;
    }
  };
  step( step, 0 );
  return count;
}

} // namespace colorsim::testing
