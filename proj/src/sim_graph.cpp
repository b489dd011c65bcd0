#include <colorsim/sim_graph.hpp>

#include <colorsim/errors.hpp>
#include <colorsim/graph_io.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <unordered_set>

namespace colorsim
{

std::string reference_label( int i )
{
  return "~" + std::to_string( i );
}

std::string input_label( int i )
{
  return "x" + std::to_string( i );
}

std::string output_label( int j )
{
  return "y" + std::to_string( j );
}

void SimGraph::validate() const
{
  if ( m < 2 )
  {
    throw gadget_error( name + ": alphabet size must be at least 2" );
  }
  if ( n < std::max( m, 3 ) )
  {
    throw gadget_error( name + ": need n >= max(m,3), got n=" + std::to_string( n ) + " m=" + std::to_string( m ) );
  }
  if ( outputs.empty() )
  {
    throw gadget_error( name + ": a simulator needs at least one output" );
  }
  if ( reference.size() != static_cast<std::size_t>( n ) )
  {
    throw gadget_error( name + ": reference set must have n vertices" );
  }
  auto const vertex_total = graph.vertex_count();
  auto in_range = [&]( VertexId v ) { return v < vertex_total; };
  if ( !std::all_of( inputs.begin(), inputs.end(), in_range ) || !std::all_of( outputs.begin(), outputs.end(), in_range ) ||
       !std::all_of( reference.begin(), reference.end(), in_range ) )
  {
    throw gadget_error( name + ": interface vertex out of range" );
  }
  std::unordered_set<VertexId> refs( reference.begin(), reference.end() );
  if ( refs.size() != reference.size() )
  {
    throw gadget_error( name + ": repeated reference vertex" );
  }
  for ( auto x : inputs )
  {
    if ( refs.contains( x ) )
    {
      throw gadget_error( name + ": input vertex is a reference vertex" );
    }
  }
  for ( std::size_t a = 0; a < reference.size(); ++a )
  {
    for ( std::size_t b = a + 1; b < reference.size(); ++b )
    {
      if ( !graph.has_edge( reference[a], reference[b] ) )
      {
        throw gadget_error( name + ": reference vertices do not induce K_n" );
      }
    }
  }
}

void SimGraph::relabel_interface()
{
  graph.clear_marks();
  for ( std::size_t k = 0; k < reference.size(); ++k )
  {
    graph.mark( reference[k], reference_label( static_cast<int>( k ) ) );
  }
  for ( std::size_t i = 0; i < inputs.size(); ++i )
  {
    if ( !graph.label_of( inputs[i] ) )
    {
      graph.mark( inputs[i], input_label( static_cast<int>( i ) ) );
    }
  }
  for ( std::size_t j = 0; j < outputs.size(); ++j )
  {
    if ( !graph.label_of( outputs[j] ) )
    {
      graph.mark( outputs[j], output_label( static_cast<int>( j ) ) );
    }
  }
}

std::string SimGraph::trace_expression() const
{
  std::string result = name + " := ";
  if ( trace.empty() )
  {
    return result + "(primitive)";
  }
  for ( std::size_t i = 0; i < trace.size(); ++i )
  {
    if ( i > 0 )
    {
      result += " + ";
    }
    result += trace[i];
  }
  return result;
}

void write_sim_graph( std::ostream& os, const SimGraph& g )
{
  write_edge_list( os, g.graph );
  os << "params " << g.n << " " << g.m << " " << g.p() << " " << g.q() << "\n";
  auto label = [&]( VertexId v ) {
    auto l = g.graph.label_of( v );
    if ( !l )
    {
      throw gadget_error( "interface vertex " + std::to_string( v ) + " is unlabeled" );
    }
    return std::string( *l );
  };
  for ( std::size_t i = 0; i < g.inputs.size(); ++i )
  {
    os << "X " << i << " " << label( g.inputs[i] ) << "\n";
  }
  for ( std::size_t j = 0; j < g.outputs.size(); ++j )
  {
    os << "Y " << j << " " << label( g.outputs[j] ) << "\n";
  }
  for ( std::size_t k = 0; k < g.reference.size(); ++k )
  {
    os << "R " << k << " " << label( g.reference[k] ) << "\n";
  }
}

namespace
{

int to_int( std::string_view field, std::size_t line )
{
  int value = 0;
  auto [ptr, ec] = std::from_chars( field.data(), field.data() + field.size(), value );
  if ( ec != std::errc{} || ptr != field.data() + field.size() || value < 0 )
  {
    throw parse_error( line, "expected a non-negative integer, got '" + std::string( field ) + "'" );
  }
  return value;
}

} // namespace

SimGraph read_sim_graph( std::istream& is )
{
  LineReader reader( std::string( std::istreambuf_iterator<char>( is ), {} ) );
  std::string_view line;
  bool has_rest = false;
  SimGraph sim;
  sim.graph = parse_edge_list( reader, line, has_rest );
  sim.name = "G";

  bool have_params = false;
  int p = 0, q = 0;
  std::vector<std::optional<VertexId>> xs, ys, rs;
  auto place = [&]( std::vector<std::optional<VertexId>>& slots, std::string_view index_field,
                    std::string_view label_field ) {
    auto const index = static_cast<std::size_t>( to_int( index_field, reader.line_number() ) );
    if ( index >= slots.size() )
    {
      throw parse_error( reader.line_number(), "role index out of range" );
    }
    if ( slots[index] )
    {
      throw parse_error( reader.line_number(), "role index listed twice" );
    }
    auto v = sim.graph.find( label_field );
    if ( !v )
    {
      throw parse_error( reader.line_number(), "unknown label '" + std::string( label_field ) + "'" );
    }
    slots[index] = *v;
  };

  while ( has_rest )
  {
    auto fields = split_fields( line );
    if ( fields[0] == "params" )
    {
      if ( fields.size() != 5 || have_params )
      {
        throw parse_error( reader.line_number(), "expected a single 'params n m p q' line" );
      }
      sim.n = to_int( fields[1], reader.line_number() );
      sim.m = to_int( fields[2], reader.line_number() );
      p = to_int( fields[3], reader.line_number() );
      q = to_int( fields[4], reader.line_number() );
      xs.resize( p );
      ys.resize( q );
      rs.resize( sim.n );
      have_params = true;
    }
    else if ( fields[0] == "X" || fields[0] == "Y" || fields[0] == "R" )
    {
      if ( !have_params )
      {
        throw parse_error( reader.line_number(), "role line before 'params'" );
      }
      if ( fields.size() != 3 )
      {
        throw parse_error( reader.line_number(), "expected '<role> <index> <label>'" );
      }
      auto& slots = fields[0] == "X" ? xs : fields[0] == "Y" ? ys : rs;
      place( slots, fields[1], fields[2] );
    }
    else
    {
      throw parse_error( reader.line_number(), "unexpected line '" + std::string( line ) + "'" );
    }
    has_rest = reader.next( line );
  }

  if ( !have_params )
  {
    throw parse_error( 0, "missing 'params' line" );
  }
  auto collect = [&]( const std::vector<std::optional<VertexId>>& slots, std::vector<VertexId>& target, char role ) {
    for ( std::size_t i = 0; i < slots.size(); ++i )
    {
      if ( !slots[i] )
      {
        throw parse_error( 0, std::string( "missing " ) + role + " " + std::to_string( i ) );
      }
      target.push_back( *slots[i] );
    }
  };
  collect( xs, sim.inputs, 'X' );
  collect( ys, sim.outputs, 'Y' );
  collect( rs, sim.reference, 'R' );
  try
  {
    sim.validate();
  }
  catch ( const gadget_error& e )
  {
    throw parse_error( 0, e.what() );
  }
  return sim;
}

void write_sim_dot( std::ostream& os, const SimGraph& g )
{
  DotAttributes roles;
  for ( auto v : g.reference )
  {
    roles[v] = "shape=box";
  }
  for ( auto v : g.inputs )
  {
    roles[v] = "style=filled, fillcolor=lightblue";
  }
  for ( auto v : g.outputs )
  {
    roles[v] = roles.contains( v ) ? "style=filled, fillcolor=plum" : "style=filled, fillcolor=palegreen";
  }
  write_dot( os, g.graph, roles );
}

} // namespace colorsim
