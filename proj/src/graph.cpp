#include <colorsim/graph.hpp>

#include <colorsim/errors.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace colorsim
{

namespace
{

void check_label( std::string_view label )
{
  if ( label.empty() )
  {
    throw graph_error( "empty label" );
  }
  if ( std::any_of( label.begin(), label.end(), []( unsigned char c ) { return std::isspace( c ) != 0; } ) )
  {
    throw graph_error( "label contains whitespace: '" + std::string( label ) + "'" );
  }
}

} // namespace

VertexId MarkedGraph::add_vertex()
{
  adjacency_.emplace_back();
  return static_cast<VertexId>( adjacency_.size() - 1 );
}

VertexId MarkedGraph::add_vertex( std::string_view label )
{
  check_label( label );
  if ( marks_.contains( std::string( label ) ) )
  {
    throw graph_error( "duplicate label '" + std::string( label ) + "'" );
  }
  auto const v = add_vertex();
  marks_.emplace( label, v );
  labels_.emplace( v, label );
  return v;
}

bool MarkedGraph::link( VertexId a, VertexId b, bool check_duplicate )
{
  if ( a == b )
  {
    throw graph_error( "self-loop on vertex " + std::to_string( a ) );
  }
  if ( a >= adjacency_.size() || b >= adjacency_.size() )
  {
    throw graph_error( "edge endpoint out of range" );
  }
  if ( check_duplicate && has_edge( a, b ) )
  {
    return false;
  }
  adjacency_[a].push_back( b );
  adjacency_[b].push_back( a );
  edges_.push_back( { a, b } );
  return true;
}

bool MarkedGraph::add_edge( VertexId a, VertexId b )
{
  return link( a, b, true );
}

bool MarkedGraph::has_edge( VertexId a, VertexId b ) const
{
  auto const& adj_a = adjacency_.at( a );
  auto const& adj_b = adjacency_.at( b );
  // reference vertices have huge degree; scan the short side
  if ( adj_a.size() <= adj_b.size() )
  {
    return std::find( adj_a.begin(), adj_a.end(), b ) != adj_a.end();
  }
  return std::find( adj_b.begin(), adj_b.end(), a ) != adj_b.end();
}

void MarkedGraph::mark( VertexId v, std::string_view label )
{
  check_label( label );
  if ( v >= adjacency_.size() )
  {
    throw graph_error( "mark on unknown vertex " + std::to_string( v ) );
  }
  if ( auto it = marks_.find( std::string( label ) ); it != marks_.end() )
  {
    if ( it->second == v )
    {
      return;
    }
    throw graph_error( "duplicate label '" + std::string( label ) + "'" );
  }
  if ( labels_.contains( v ) )
  {
    throw graph_error( "vertex " + std::to_string( v ) + " already labeled '" + labels_.at( v ) + "'" );
  }
  marks_.emplace( label, v );
  labels_.emplace( v, label );
}

void MarkedGraph::unmark( VertexId v )
{
  if ( auto it = labels_.find( v ); it != labels_.end() )
  {
    marks_.erase( it->second );
    labels_.erase( it );
  }
}

void MarkedGraph::clear_marks()
{
  marks_.clear();
  labels_.clear();
}

std::optional<VertexId> MarkedGraph::find( std::string_view label ) const
{
  if ( auto it = marks_.find( std::string( label ) ); it != marks_.end() )
  {
    return it->second;
  }
  return std::nullopt;
}

VertexId MarkedGraph::at( std::string_view label ) const
{
  if ( auto v = find( label ) )
  {
    return *v;
  }
  throw graph_error( "no vertex labeled '" + std::string( label ) + "'" );
}

std::optional<std::string_view> MarkedGraph::label_of( VertexId v ) const
{
  if ( auto it = labels_.find( v ); it != labels_.end() )
  {
    return std::string_view( it->second );
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, VertexId>> MarkedGraph::marks() const
{
  std::vector<std::pair<std::string, VertexId>> result( marks_.begin(), marks_.end() );
  std::sort( result.begin(), result.end(), []( auto const& a, auto const& b ) { return a.second < b.second; } );
  return result;
}

void MarkedGraph::reserve( std::size_t vertices, std::size_t edges )
{
  adjacency_.reserve( vertices );
  edges_.reserve( edges );
}

std::vector<VertexId> MarkedGraph::absorb( const MarkedGraph& other, const LabelMap& rename, unmapped_labels policy )
{
  auto const n = other.vertex_count();
  std::vector<VertexId> image( n );
  // a copied vertex is "private" when it was created fresh for exactly one vertex of `other`;
  // edges between private vertices cannot duplicate anything because `other` is simple
  std::vector<std::uint8_t> is_private( n, 1 );
  std::unordered_map<VertexId, VertexId> first_claim;

  for ( VertexId v = 0; v < n; ++v )
  {
    std::optional<std::string> label;
    if ( auto own = other.label_of( v ) )
    {
      if ( auto it = rename.find( std::string( *own ) ); it != rename.end() )
      {
        label = it->second;
      }
      else if ( policy == unmapped_labels::keep )
      {
        label = std::string( *own );
      }
    }

    if ( !label )
    {
      image[v] = add_vertex();
      continue;
    }
    if ( auto existing = find( *label ) )
    {
      image[v] = *existing;
      is_private[v] = 0;
      if ( auto [it, inserted] = first_claim.emplace( *existing, v ); !inserted )
      {
        is_private[it->second] = 0;
      }
    }
    else
    {
      image[v] = add_vertex( *label );
      first_claim.emplace( image[v], v );
    }
  }

  for ( auto const& e : other.edges() )
  {
    auto const a = image[e.u];
    auto const b = image[e.v];
    if ( a == b )
    {
      throw graph_error( "identification merges adjacent vertices into a self-loop" );
    }
    link( a, b, !( is_private[e.u] && is_private[e.v] ) );
  }
  return image;
}

MarkedGraph make_graph( std::span<const std::string> labels )
{
  MarkedGraph g;
  for ( auto const& label : labels )
  {
    g.add_vertex( label );
  }
  return g;
}

MarkedGraph clique( std::span<const std::string> labels )
{
  auto g = make_graph( labels );
  auto const k = static_cast<VertexId>( labels.size() );
  for ( VertexId a = 0; a < k; ++a )
  {
    for ( VertexId b = a + 1; b < k; ++b )
    {
      g.add_edge( a, b );
    }
  }
  return g;
}

MarkedGraph edge_graph( std::string_view a, std::string_view b )
{
  std::string const labels[] = { std::string( a ), std::string( b ) };
  return clique( labels );
}

MarkedGraph amalgam( const MarkedGraph& g, const MarkedGraph& h )
{
  auto result = g;
  result.absorb( h );
  return result;
}

MarkedGraph merge_marks( const MarkedGraph& g, const LabelMap& relabeling )
{
  for ( auto const& [from, to] : relabeling )
  {
    if ( !g.find( from ) )
    {
      throw graph_error( "relabeling mentions unknown label '" + from + "'" );
    }
  }

  MarkedGraph result;
  result.reserve( g.vertex_count(), g.edge_count() );
  std::vector<VertexId> image( g.vertex_count() );
  for ( VertexId v = 0; v < g.vertex_count(); ++v )
  {
    auto const own = g.label_of( v );
    if ( !own )
    {
      image[v] = result.add_vertex();
      continue;
    }
    std::string label( *own );
    if ( auto it = relabeling.find( label ); it != relabeling.end() )
    {
      label = it->second;
    }
    if ( auto existing = result.find( label ) )
    {
      image[v] = *existing;
    }
    else
    {
      image[v] = result.add_vertex( label );
    }
  }
  for ( auto const& e : g.edges() )
  {
    if ( image[e.u] == image[e.v] )
    {
      throw graph_error( "merging adjacent vertices would create a self-loop" );
    }
    result.add_edge( image[e.u], image[e.v] );
  }
  return result;
}

GraphStats graph_stats( const MarkedGraph& g )
{
  return { g.vertex_count(), g.edge_count() };
}

std::vector<std::pair<std::string, std::string>> labeled_edges( const MarkedGraph& g )
{
  std::vector<std::pair<std::string, std::string>> result;
  for ( auto const& e : g.edges() )
  {
    auto a = g.label_of( e.u );
    auto b = g.label_of( e.v );
    if ( !a || !b )
    {
      continue;
    }
    std::string first( *a ), second( *b );
    if ( second < first )
    {
      std::swap( first, second );
    }
    result.emplace_back( std::move( first ), std::move( second ) );
  }
  std::sort( result.begin(), result.end() );
  return result;
}

} // namespace colorsim
