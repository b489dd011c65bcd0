#include <colorsim/compiler.hpp>

#include <colorsim/gadgets.hpp>

#include <algorithm>
#include <ostream>
#include <string>

namespace colorsim
{

namespace
{

std::string str( std::uint64_t value )
{
  return std::to_string( value );
}

std::string coordinate_label( std::size_t w, int t )
{
  return "w" + std::to_string( w ) + "_" + std::to_string( t );
}

struct EdgeGadgetShape
{
  std::size_t internal_vertices = 0;
  std::size_t own_edges = 0;
};

EdgeGadgetShape edge_gadget_shape( int r, int n )
{
  auto const e = build_edge_gadget( r, n, n );
  auto const clique_edges = static_cast<std::size_t>( n ) * ( n - 1 ) / 2;
  return { e.graph.vertex_count() - 2 * static_cast<std::size_t>( r ) - n, e.graph.edge_count() - clique_edges };
}

/// Sizes of build_permutation over `colors` colors with `theta` transpositions.
GraphStats predict_wide( std::uint64_t colors, int theta )
{
  auto const c = colors;
  auto const l_internal = 3 * c - 5;
  auto const l_edges = 3 * c * c - 5 * c;
  GraphStats stats;
  stats.vertex_count = c + 1 + theta * ( c * l_internal + 3 );
  stats.edge_count = c * ( c - 1 ) / 2 + theta * ( c * l_edges + 2 * ( c - 2 ) + 2 );
  return stats;
}

/// Edges compile adds after the blow-up: reference anchoring, pad pins, input range exclusion, star.
std::size_t pinning_edges( const CompilePlan& plan )
{
  auto const n = static_cast<std::size_t>( plan.n );
  auto const pads = static_cast<std::size_t>( plan.r - plan.source.p );
  return plan.n_tilde * plan.r * ( n - 1 ) + pads * ( n - 1 ) + plan.source.p * ( n - plan.source.m ) +
         ( plan.total.star ? 1 : 0 );
}

} // namespace

Totalized totalize( const PartialFunction& phi )
{
  phi.validate();
  if ( phi.is_total() )
  {
    return { phi, std::nullopt };
  }
  std::vector<bool> used( phi.m, false );
  for ( auto const& row : phi.rows )
  {
    if ( row )
    {
      used[row->front()] = true;
    }
  }
  auto const star = static_cast<Symbol>( std::find( used.begin(), used.end(), false ) - used.begin() );
  auto const m = std::max( phi.m, star + 1 );
  auto result = PartialFunction::undefined( m, phi.p, phi.q );
  for ( std::uint64_t row = 0; row < result.domain_size(); ++row )
  {
    auto const x = result.input_at( row );
    auto y = phi( x );
    result.define( x, y ? *y : Tuple( phi.q, star ) );
  }
  return { std::move( result ), star };
}

GraphStats predict_blow_up( const GraphStats& g, int r, int n )
{
  auto const shape = edge_gadget_shape( r, n );
  GraphStats stats;
  stats.vertex_count = r * g.vertex_count + g.edge_count * shape.internal_vertices + n;
  stats.edge_count = static_cast<std::size_t>( n ) * ( n - 1 ) / 2 + g.edge_count * shape.own_edges;
  return stats;
}

BlowUp blow_up( const MarkedGraph& g, std::uint64_t n_tilde, int r, int n )
{
  if ( r < 1 || n < 3 )
  {
    throw compile_error( "blow-up needs r >= 1 and n >= 3" );
  }
  if ( n_tilde != checked_power( n, r ) )
  {
    throw compile_error( "blow-up of a " + str( n_tilde ) + "-color graph needs n^r = " + str( n_tilde ) + ", got n=" +
                         str( n ) + " r=" + str( r ) );
  }

  auto const gadget = build_edge_gadget( r, n, n );
  auto const predicted = predict_blow_up( graph_stats( g ), r, n );

  BlowUp result;
  std::vector<std::string> reference_names;
  for ( int k = 0; k < n; ++k )
  {
    reference_names.push_back( reference_label( k ) );
  }
  result.graph = clique( reference_names );
  result.graph.reserve( predicted.vertex_count, predicted.edge_count );
  for ( int k = 0; k < n; ++k )
  {
    result.reference.push_back( result.graph.at( reference_names[k] ) );
  }

  result.coordinates.resize( g.vertex_count() );
  for ( std::size_t w = 0; w < g.vertex_count(); ++w )
  {
    for ( int t = 0; t < r; ++t )
    {
      result.coordinates[w].push_back( result.graph.add_vertex( coordinate_label( w, t ) ) );
    }
  }

  LabelMap rename;
  for ( auto const& label : reference_names )
  {
    rename.emplace( label, label );
  }
  for ( auto const& e : g.edges() )
  {
    for ( int t = 0; t < r; ++t )
    {
      rename[input_label( t )] = coordinate_label( e.u, t );
      rename[input_label( r + t )] = coordinate_label( e.v, t );
    }
    result.graph.absorb( gadget.graph, rename, unmapped_labels::drop );
    ++result.gadget_count;
  }
  return result;
}

CompilePlan plan_compile( const PartialFunction& phi, int n, const CompileOptions& options )
{
  phi.validate();
  CompilePlan plan;
  plan.source = phi;
  plan.n = n;
  plan.total = totalize( phi );
  auto const m_tilde = plan.total.function.m;
  if ( n < std::max( m_tilde, 3 ) )
  {
    throw compile_error( m_tilde > phi.m ? "n = " + str( n ) + " is too small: totalizing added a star symbol, the alphabet grew to " +
                                               str( m_tilde ) + " and needs n >= " + str( std::max( m_tilde, 3 ) )
                                         : "n = " + str( n ) + " is too small, need n >= max(m,3) = " + str( std::max( m_tilde, 3 ) ) );
  }
  plan.r = phi.p + phi.q;
  plan.spec = { m_tilde, plan.r, 0 };
  plan.extension = invertible_extension( plan.total.function, plan.spec );
  plan.n_tilde = checked_power( n, plan.r );
  if ( plan.n_tilde > ( std::uint64_t{ 1 } << 20 ) )
  {
    throw size_limit_error( "n^r = " + str( plan.n_tilde ) + " colors is beyond reach", {} );
  }

  std::vector<int> images( plan.n_tilde );
  for ( std::uint64_t i = 0; i < plan.n_tilde; ++i )
  {
    images[i] = static_cast<int>( i );
  }
  for ( std::uint64_t i = 0; i < plan.extension.size(); ++i )
  {
    auto const from = embed_index( digits( i, m_tilde, plan.r ), n );
    auto const to = embed_index( digits( plan.extension.images[i], m_tilde, plan.r ), n );
    images[from] = static_cast<int>( to );
  }
  plan.color_permutation = Permutation( std::move( images ) );
  plan.theta = plan.color_permutation.transposition_count();

  auto const wide = predict_wide( plan.n_tilde, plan.theta );
  plan.predicted = predict_blow_up( wide, plan.r, n );
  plan.predicted.edge_count += pinning_edges( plan );
  if ( plan.predicted.vertex_count > options.max_vertices )
  {
    throw size_limit_error( "predicted graph has " + str( plan.predicted.vertex_count ) + " vertices and " +
                                str( plan.predicted.edge_count ) + " edges, above the limit of " + str( options.max_vertices ) +
                                " vertices",
                            plan.predicted );
  }
  plan.wide = build_permutation( plan.color_permutation, static_cast<int>( plan.n_tilde ) );
  return plan;
}

std::uint64_t wide_input_color( const CompilePlan& plan, const Tuple& x )
{
  auto padded = x;
  padded.resize( plan.r, plan.spec.s0 );
  return embed_index( padded, plan.n );
}

CompileResult compile( const CompilePlan& plan, const CompileOptions& options )
{
  if ( plan.predicted.vertex_count > options.max_vertices )
  {
    throw size_limit_error( "predicted graph has " + str( plan.predicted.vertex_count ) + " vertices, above the limit of " +
                                str( options.max_vertices ),
                            plan.predicted );
  }
  auto const n = plan.n;
  auto const r = plan.r;
  auto const& phi = plan.source;
  auto blown = blow_up( plan.wide.graph, plan.n_tilde, r, n );
  auto& g = blown.graph;
  auto const& R = blown.reference;

  auto pin = [&]( VertexId v, int color ) {
    for ( int k = 0; k < n; ++k )
    {
      if ( k != color )
      {
        g.add_edge( v, R[k] );
      }
    }
  };

  for ( std::uint64_t j = 0; j < plan.n_tilde; ++j )
  {
    auto const digit = digits( j, n, r );
    for ( int t = 0; t < r; ++t )
    {
      pin( blown.coordinates[plan.wide.reference[j]][t], digit[t] );
    }
  }

  auto const& in = blown.coordinates[plan.wide.inputs.front()];
  auto const& out = blown.coordinates[plan.wide.outputs.front()];
  for ( int t = phi.p; t < r; ++t )
  {
    pin( in[t], plan.spec.s0 );
  }
  for ( int t = 0; t < phi.p; ++t )
  {
    for ( int k = phi.m; k < n; ++k )
    {
      g.add_edge( in[t], R[k] );
    }
  }
  if ( plan.total.star )
  {
    g.add_edge( out.front(), R[*plan.total.star] );
  }

  CompileResult result;
  result.graph.graph = std::move( g );
  result.graph.inputs.assign( in.begin(), in.begin() + phi.p );
  result.graph.outputs.assign( out.begin(), out.begin() + phi.q );
  result.graph.reference = R;
  result.graph.n = n;
  result.graph.m = phi.m;
  result.graph.name = "G_{phi," + std::to_string( n ) + "}";
  result.graph.trace = { "blow_up(" + plan.wide.name + ", r=" + std::to_string( r ) + ")",
                         std::to_string( blown.gadget_count ) + " x E_{" + std::to_string( r ) + "," + std::to_string( n ) + "}",
                         "reference anchoring + pad pins + input exclusions" + std::string( plan.total.star ? " + star edge" : "" ) };
  result.graph.relabel_interface();
  result.graph.validate();
  result.coordinates = std::move( blown.coordinates );

  result.report.theta = plan.theta;
  result.report.r = r;
  result.report.n_tilde = plan.n_tilde;
  result.report.stats = graph_stats( result.graph.graph );
  result.report.star_used = plan.total.star;
  result.report.wide_stats = graph_stats( plan.wide.graph );
  result.report.edge_gadgets = blown.gadget_count;
  return result;
}

CompileResult compile( const PartialFunction& phi, int n, const CompileOptions& options )
{
  return compile( plan_compile( phi, n, options ), options );
}

void write_compile_report( std::ostream& os, const CompileReport& report )
{
  os << "theta " << report.theta << '\n';
  os << "r " << report.r << '\n';
  os << "n_tilde " << report.n_tilde << '\n';
  os << "vertices " << report.stats.vertex_count << '\n';
  os << "edges " << report.stats.edge_count << '\n';
  os << "star " << ( report.star_used ? std::to_string( *report.star_used ) : "none" ) << '\n';
  os << "wide_vertices " << report.wide_stats.vertex_count << '\n';
  os << "wide_edges " << report.wide_stats.edge_count << '\n';
  os << "edge_gadgets " << report.edge_gadgets << '\n';
}

} // namespace colorsim
