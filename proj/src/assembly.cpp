#include "assembly.hpp"

#include <colorsim/errors.hpp>

namespace colorsim::detail
{

Assembly::Assembly( int n, int m, std::string name ) : n_( n ), m_( m ), name_( std::move( name ) )
{
  if ( m < 2 || n < std::max( m, 3 ) )
  {
    throw gadget_error( name_ + ": need m >= 2 and n >= max(m,3), got m=" + std::to_string( m ) +
                        " n=" + std::to_string( n ) );
  }
  std::vector<std::string> labels;
  for ( int k = 0; k < n; ++k )
  {
    labels.push_back( reference_label( k ) );
  }
  graph_ = clique( labels );
  for ( int k = 0; k < n; ++k )
  {
    reference_.push_back( graph_.at( labels[k] ) );
  }
}

VertexId Assembly::vertex()
{
  return graph_.add_vertex();
}

void Assembly::edge( VertexId a, VertexId b )
{
  graph_.add_edge( a, b );
}

void Assembly::exclude( VertexId v, int from, int to )
{
  for ( int k = from; k < to; ++k )
  {
    graph_.add_edge( v, reference_[k] );
  }
}

std::string Assembly::handle( VertexId v )
{
  if ( auto label = graph_.label_of( v ) )
  {
    return std::string( *label );
  }
  auto label = "#" + std::to_string( v );
  graph_.mark( v, label );
  return label;
}

std::vector<VertexId> Assembly::attach( const SimGraph& part, std::span<const VertexId> inputs,
                                        std::span<const VertexId> outputs )
{
  if ( part.n != n_ )
  {
    throw gadget_error( name_ + ": cannot place " + part.name + " built for a different color count" );
  }
  if ( inputs.size() != part.inputs.size() )
  {
    throw gadget_error( name_ + ": " + part.name + " expects " + std::to_string( part.inputs.size() ) + " inputs" );
  }
  if ( !outputs.empty() && outputs.size() != part.outputs.size() )
  {
    throw gadget_error( name_ + ": " + part.name + " has " + std::to_string( part.outputs.size() ) + " outputs" );
  }

  LabelMap rename;
  for ( int k = 0; k < n_; ++k )
  {
    rename.emplace( reference_label( k ), reference_label( k ) );
  }
  auto bind = [&]( VertexId part_vertex, VertexId target ) {
    auto const own = std::string( part.graph.label_of( part_vertex ).value() );
    auto const wanted = handle( target );
    auto [it, inserted] = rename.emplace( own, wanted );
    if ( !inserted && it->second != wanted )
    {
      throw gadget_error( name_ + ": " + part.name + " maps one interface vertex to two targets" );
    }
    return wanted;
  };

  std::vector<std::string> in_names, out_names;
  for ( std::size_t i = 0; i < inputs.size(); ++i )
  {
    in_names.push_back( bind( part.inputs[i], inputs[i] ) );
  }
  for ( std::size_t j = 0; j < outputs.size(); ++j )
  {
    out_names.push_back( bind( part.outputs[j], outputs[j] ) );
  }

  auto const image = graph_.absorb( part.graph, rename, unmapped_labels::drop );

  std::vector<VertexId> result;
  for ( auto y : part.outputs )
  {
    result.push_back( image[y] );
  }
  if ( outputs.empty() )
  {
    for ( auto v : result )
    {
      out_names.push_back( handle( v ) );
    }
  }
  trace_.push_back( bracket( part.name, in_names, out_names ) );
  return result;
}

std::vector<VertexId> Assembly::place( const SimGraph& part, std::span<const VertexId> inputs )
{
  return attach( part, inputs, {} );
}

void Assembly::place_onto( const SimGraph& part, std::span<const VertexId> inputs, std::span<const VertexId> outputs )
{
  attach( part, inputs, outputs );
}

SimGraph Assembly::finish( std::vector<VertexId> inputs, std::vector<VertexId> outputs )
{
  SimGraph result;
  result.graph = std::move( graph_ );
  result.inputs = std::move( inputs );
  result.outputs = std::move( outputs );
  result.reference = reference_;
  result.n = n_;
  result.m = m_;
  result.name = name_;
  result.trace = std::move( trace_ );
  result.relabel_interface();
  result.validate();
  return result;
}

std::string bracket( const std::string& name, std::span<const std::string> in, std::span<const std::string> out )
{
  std::string result = name + "[";
  for ( std::size_t i = 0; i < in.size(); ++i )
  {
    result += ( i ? "," : "" ) + in[i];
  }
  result += ";";
  for ( std::size_t j = 0; j < out.size(); ++j )
  {
    result += ( j ? "," : "" ) + out[j];
  }
  return result + ";R]";
}

} // namespace colorsim::detail
