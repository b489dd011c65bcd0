#include <colorsim/gadgets.hpp>

#include <colorsim/errors.hpp>

#include "assembly.hpp"

#include <algorithm>
#include <string>

namespace colorsim
{

using detail::Assembly;

namespace
{

std::string str( int value )
{
  return std::to_string( value );
}

void require_alphabet( const std::string& what, int m, int n )
{
  if ( m < 2 )
  {
    throw gadget_error( what + ": alphabet size m must be at least 2" );
  }
  if ( n < std::max( m, 3 ) )
  {
    throw gadget_error( what + ": need n >= max(m,3), got m=" + str( m ) + " n=" + str( n ) );
  }
}

std::vector<std::string> reference_labels( int n )
{
  std::vector<std::string> labels;
  for ( int z = 0; z < n; ++z )
  {
    labels.push_back( reference_label( z ) );
  }
  return labels;
}

std::string u_label( int i )
{
  return "u" + str( i );
}

/// eta_k[x, u_{C\{k}}, y; R]
MarkedGraph eta( int k, int n )
{
  auto g = clique( reference_labels( n ) );
  g.add_vertex( "x" );
  for ( int i = 0; i < n; ++i )
  {
    if ( i == k )
    {
      continue;
    }
    g.absorb( edge_graph( "x", u_label( i ) ) );
    g.absorb( edge_graph( u_label( i ), "y" ) );
    for ( int z = 0; z < n; ++z )
    {
      if ( z != k && z != i )
      {
        g.absorb( edge_graph( u_label( i ), reference_label( z ) ) );
      }
    }
  }
  return g;
}

/// zeta_k(i,j)[a, b; R] with internal vertices v, w.
MarkedGraph zeta( int k, int i, int j, int n )
{
  auto g = clique( reference_labels( n ) );
  for ( auto const* mid : { "v", "w" } )
  {
    g.absorb( edge_graph( "a", mid ) );
    g.absorb( edge_graph( mid, "b" ) );
  }
  for ( int z = 0; z < n; ++z )
  {
    if ( z != k && z != i )
    {
      g.absorb( edge_graph( "v", reference_label( z ) ) );
    }
    if ( z != k && z != j )
    {
      g.absorb( edge_graph( "w", reference_label( z ) ) );
    }
  }
  return g;
}

std::string gadget_name( const std::string& base, int m, int n )
{
  return "G_{" + base + "_" + str( m ) + "," + str( n ) + "}";
}

/// Balanced tree of binary gates over `leaves`.
VertexId gate_tree( Assembly& a, const SimGraph& gate, std::span<const VertexId> leaves )
{
  if ( leaves.size() == 1 )
  {
    return leaves[0];
  }
  auto const mid = leaves.size() / 2 + leaves.size() % 2;
  VertexId const operands[] = { gate_tree( a, gate, leaves.first( mid ) ), gate_tree( a, gate, leaves.subspan( mid ) ) };
  return a.place( gate, operands )[0];
}

} // namespace

SimGraph build_L( int k, int n )
{
  if ( n < 3 )
  {
    throw gadget_error( "L gadget needs n >= 3" );
  }
  if ( k < 0 || k >= n )
  {
    throw gadget_error( "L gadget color k=" + str( k ) + " outside {0.." + str( n - 1 ) + "}" );
  }

  auto g = eta( k, n );
  std::vector<std::string> trace{ "eta_" + str( k ) + "[x,u;y;R]" };

  std::vector<int> path;
  for ( int i = 0; i < n; ++i )
  {
    if ( i != k )
    {
      path.push_back( i );
    }
  }
  for ( std::size_t t = 0; t + 1 < path.size(); ++t )
  {
    auto const i = path[t];
    auto const j = path[t + 1];
    LabelMap rename{ { "a", u_label( i ) }, { "b", u_label( j ) } };
    for ( auto const& label : reference_labels( n ) )
    {
      rename.emplace( label, label );
    }
    g.absorb( zeta( k, i, j, n ), rename, unmapped_labels::drop );
    trace.push_back( "zeta_" + str( k ) + "(" + str( i ) + "," + str( j ) + ")[" + u_label( i ) + "," + u_label( j ) + ";R]" );
  }

  SimGraph result;
  result.inputs = { g.at( "x" ) };
  result.outputs = { g.at( "y" ) };
  for ( int z = 0; z < n; ++z )
  {
    result.reference.push_back( g.at( reference_label( z ) ) );
  }
  result.graph = std::move( g );
  result.n = n;
  result.m = n;
  result.name = "L_{" + str( k ) + "," + str( n ) + "}";
  result.trace = std::move( trace );
  result.relabel_interface();
  result.validate();
  return result;
}

SimGraph build_transposition( int i, int j, int m, int n )
{
  auto const name = "G_{tau(" + str( i ) + "," + str( j ) + ")_" + str( m ) + "," + str( n ) + "}";
  require_alphabet( name, m, n );
  if ( i < 0 || j >= m || i >= j )
  {
    throw gadget_error( name + ": need 0 <= i < j < m" );
  }

  Assembly a( n, m, name );
  auto const x = a.vertex();
  auto const y = a.vertex();
  auto const u = a.vertex();
  auto const v = a.vertex();
  VertexId const xs[] = { x };
  for ( int k = 0; k < n; ++k )
  {
    if ( k != i && k != j )
    {
      VertexId const ys[] = { y };
      a.place_onto( build_L( k, n ), xs, ys );
    }
  }
  for ( int z = 0; z < n; ++z )
  {
    if ( z != i && z != j )
    {
      a.edge( u, a.ref( z ) );
      a.edge( v, a.ref( z ) );
    }
  }
  a.exclude( x, m, n );
  a.exclude( y, m, n );
  VertexId const us[] = { u };
  VertexId const vs[] = { v };
  a.place_onto( build_L( i, n ), xs, us );
  a.place_onto( build_L( j, n ), xs, vs );
  a.edge( u, y );
  a.edge( v, y );
  a.note( "e[u,y] + e[v,y] + e[u|v, R-{~" + str( i ) + ",~" + str( j ) + "}] + e[x|y, ~" + str( m ) + "..~" + str( n - 1 ) + "]" );
  return a.finish( { x }, { y } );
}

SimGraph build_permutation( const Permutation& pi, int n )
{
  auto const m = pi.size();
  auto const name = "G_{pi_" + str( m ) + "," + str( n ) + "}";
  if ( m > n )
  {
    throw gadget_error( name + ": permutation on " + str( m ) + " symbols needs n >= m" );
  }
  require_alphabet( name, m, n );

  Assembly a( n, m, name );
  auto const x = a.vertex();
  auto const steps = perm_to_transpositions( pi );
  if ( steps.empty() )
  {
    a.exclude( x, m, n );
    a.note( "e[x, ~" + str( m ) + "..~" + str( n - 1 ) + "]" );
    return a.finish( { x }, { x } );
  }
  auto current = x;
  for ( auto const& [i, j] : steps )
  {
    VertexId const in[] = { current };
    current = a.place( build_transposition( i, j, m, n ), in )[0];
  }
  return a.finish( { x }, { current } );
}

SimGraph build_cyclic_shift( int shift, int m, int n )
{
  if ( shift != 1 && shift != -1 )
  {
    throw gadget_error( "cyclic shift must be +1 or -1" );
  }
  require_alphabet( "cs", m, n );
  auto g = build_permutation( Permutation::cyclic_shift( m, shift ), n );
  g.name = gadget_name( shift > 0 ? "cs+" : "cs-", m, n );
  return g;
}

SimGraph build_coder( coder_kind kind, int m, int n )
{
  auto const base = kind == coder_kind::ch ? "ch" : kind == coder_kind::ps ? "ps" : "xp";
  auto const name = gadget_name( base, m, n );
  require_alphabet( name, m, n );
  Assembly a( n, m, name );
  auto const x = a.vertex();
  VertexId const xs[] = { x };

  if ( kind == coder_kind::xp )
  {
    std::vector<VertexId> v( m );
    auto const l0 = build_L( 0, n );
    auto const l1 = build_L( 1, n );
    for ( int i = 0; i < m; ++i )
    {
      v[i] = a.vertex();
      VertexId const vi[] = { v[i] };
      a.place_onto( l0, xs, vi );
      a.place_onto( l1, xs, vi );
    }
    for ( int j = 0; j < m; ++j )
    {
      a.exclude( v[j], 2, n );
    }
    return a.finish( { x }, v );
  }

  // G'_ch core; ch and ps differ only in which side is the input
  std::vector<VertexId> w( m ), u( m );
  for ( int i = 0; i < m; ++i )
  {
    w[i] = a.vertex();
  }
  for ( int i = 0; i < m; ++i )
  {
    u[i] = a.vertex();
  }
  a.edge( w[0], u[0] );
  for ( int i = 0; i < m; ++i )
  {
    VertexId const wi[] = { w[i] };
    a.place_onto( build_L( i, n ), xs, wi );
  }
  auto const l0 = build_L( 0, n );
  for ( int i = 1; i < m; ++i )
  {
    VertexId const wi[] = { w[i] };
    VertexId const ui[] = { u[i] };
    a.place_onto( l0, wi, ui );
  }
  a.exclude( w[0], 2, n );
  for ( int j = 1; j < m; ++j )
  {
    for ( int i = 0; i < n; ++i )
    {
      if ( i != 0 && i != j )
      {
        a.edge( w[j], a.ref( i ) );
      }
    }
  }
  for ( int j = 0; j < m; ++j )
  {
    a.exclude( u[j], 2, n );
  }
  a.exclude( x, m, n );
  a.note( "e[w0,u0] + exclusion edges" );
  if ( kind == coder_kind::ch )
  {
    return a.finish( { x }, u );
  }
  return a.finish( u, { x } );
}

SimGraph build_bool( boolean_kind kind, int m, int n, int r )
{
  switch ( kind )
  {
  case boolean_kind::not_:
  {
    auto const name = gadget_name( "not", m, n );
    require_alphabet( name, m, n );
    Assembly a( n, m, name );
    auto const x = a.vertex();
    auto const y = a.vertex();
    a.edge( x, y );
    a.exclude( x, 2, n );
    a.exclude( y, 2, n );
    a.note( "e[x,y] + e[x|y, ~2..~" + str( n - 1 ) + "]" );
    return a.finish( { x }, { y } );
  }
  case boolean_kind::and_:
  {
    auto const name = gadget_name( "and", m, n );
    require_alphabet( name, m, n );
    Assembly a( n, m, name );
    auto const x = a.vertex();
    auto const y = a.vertex();
    auto const z = a.vertex();
    auto const w = a.vertex();
    VertexId const xs[] = { x };
    VertexId const ws[] = { w };
    VertexId const ys[] = { y };
    VertexId const zs[] = { z };
    a.place_onto( build_L( 0, n ), xs, ws );
    // the shift must send 1 to a color other than 0 and 1, so it runs over at least 3 symbols
    auto const v = a.place( build_cyclic_shift( +1, std::max( m, 3 ), n ), ys )[0];
    a.place_onto( build_L( 1, n ), ws, zs );
    a.edge( v, w );
    a.exclude( x, 2, n );
    a.exclude( y, 2, n );
    a.exclude( w, 3, n );
    a.exclude( z, 2, n );
    a.note( "e[v,w] + exclusion edges" );
    return a.finish( { x, y }, { z } );
  }
  case boolean_kind::or_:
  {
    require_alphabet( gadget_name( "or", m, n ), m, n );
    auto const negation = build_bool( boolean_kind::not_, m, n );
    WiringSpec spec;
    spec.name = gadget_name( "or", m, n );
    spec.input_count = 2;
    spec.stages.push_back( { negation, { WireSource::outer( 0 ) } } );
    spec.stages.push_back( { negation, { WireSource::outer( 1 ) } } );
    spec.stages.push_back( { build_bool( boolean_kind::and_, m, n ), { WireSource::stage_output( 0, 0 ), WireSource::stage_output( 1, 0 ) } } );
    spec.stages.push_back( { negation, { WireSource::stage_output( 2, 0 ) } } );
    return compose( spec );
  }
  case boolean_kind::vand:
  case boolean_kind::vor:
  {
    auto const name = gadget_name( ( kind == boolean_kind::vand ? "vand" : "vor" ) + str( r ), m, n );
    require_alphabet( name, m, n );
    if ( r < 2 )
    {
      throw gadget_error( name + ": arity r must be at least 2" );
    }
    auto const gate = build_bool( kind == boolean_kind::vand ? boolean_kind::and_ : boolean_kind::or_, m, n );
    Assembly a( n, m, name );
    std::vector<VertexId> xs( r );
    for ( auto& x : xs )
    {
      x = a.vertex();
    }
    auto const out = gate_tree( a, gate, xs );
    return a.finish( xs, { out } );
  }
  }
  throw gadget_error( "unknown Boolean gadget" );
}

SimGraph build_select( select_kind kind, int m, int n )
{
  switch ( kind )
  {
  case select_kind::dot:
  {
    auto const name = gadget_name( "dot", m, n );
    require_alphabet( name, m, n );
    Assembly a( n, m, name );
    auto const x = a.vertex();
    auto const y = a.vertex();
    VertexId const xs[] = { x };
    VertexId const ys[] = { y };
    auto const v = a.place( build_coder( coder_kind::ch, m, n ), xs );
    auto const u = a.place( build_coder( coder_kind::xp, m, n ), ys );
    VertexId const u0[] = { u[0] };
    auto const t = a.place( build_bool( boolean_kind::not_, m, n ), u0 )[0];
    std::vector<VertexId> w( m );
    VertexId const or_in[] = { v[0], t };
    w[0] = a.place( build_bool( boolean_kind::or_, m, n ), or_in )[0];
    auto const conj = build_bool( boolean_kind::and_, m, n );
    for ( int k = 1; k < m; ++k )
    {
      VertexId const in[] = { v[k], u[k] };
      w[k] = a.place( conj, in )[0];
    }
    auto const z = a.place( build_coder( coder_kind::ps, m, n ), w )[0];
    return a.finish( { x, y }, { z } );
  }
  case select_kind::xt:
  {
    auto const name = gadget_name( "xt", m, n );
    require_alphabet( name, m, n );
    Assembly a( n, m, name );
    std::vector<VertexId> xs( m );
    for ( auto& x : xs )
    {
      x = a.vertex();
    }
    auto const ch = build_coder( coder_kind::ch, m, n );
    std::vector<std::vector<VertexId>> v( m ); // v[i] = ch(x_i)
    for ( int i = 0; i < m; ++i )
    {
      VertexId const in[] = { xs[i] };
      v[i] = a.place( ch, in );
    }
    auto column = [&]( int symbol ) {
      std::vector<VertexId> col( m );
      for ( int i = 0; i < m; ++i )
      {
        col[i] = v[i][symbol];
      }
      return col;
    };
    std::vector<VertexId> w( m );
    w[0] = a.place( build_bool( boolean_kind::vand, m, n, m ), column( 0 ) )[0];
    auto const any = build_bool( boolean_kind::vor, m, n, m );
    for ( int s = 1; s < m; ++s )
    {
      w[s] = a.place( any, column( s ) )[0];
    }
    auto const t = a.place( build_coder( coder_kind::ps, m, n ), w )[0];
    return a.finish( xs, { t } );
  }
  case select_kind::mux:
  {
    auto const name = gadget_name( "Mux", m, n );
    require_alphabet( name, m, n );
    Assembly a( n, m, name );
    std::vector<VertexId> v( m ), u( m ), w( m );
    for ( auto& x : v )
    {
      x = a.vertex();
    }
    for ( auto& x : u )
    {
      x = a.vertex();
    }
    auto const dot = build_select( select_kind::dot, m, n );
    for ( int i = 0; i < m; ++i )
    {
      VertexId const in[] = { v[i], u[i] };
      w[i] = a.place( dot, in )[0];
    }
    auto const t = a.place( build_select( select_kind::xt, m, n ), w )[0];
    auto inputs = v;
    inputs.insert( inputs.end(), u.begin(), u.end() );
    return a.finish( std::move( inputs ), { t } );
  }
  }
  throw gadget_error( "unknown selection gadget" );
}

SimGraph build_arith( arith_kind kind, int m, int n )
{
  auto const name = gadget_name( kind == arith_kind::add ? "add" : "sub", m, n );
  require_alphabet( name, m, n );
  Assembly a( n, m, name );
  auto const x = a.vertex();
  auto const y = a.vertex();
  VertexId const ys[] = { y };
  auto const u = a.place( build_coder( coder_kind::ch, m, n ), ys );
  auto const shift = build_cyclic_shift( kind == arith_kind::add ? +1 : -1, m, n );
  std::vector<VertexId> v{ x };
  for ( int i = 0; i + 1 < m; ++i )
  {
    VertexId const in[] = { v.back() };
    v.push_back( a.place( shift, in )[0] );
  }
  auto inputs = v;
  inputs.insert( inputs.end(), u.begin(), u.end() );
  auto const t = a.place( build_select( select_kind::mux, m, n ), inputs )[0];
  return a.finish( { x, y }, { t } );
}

SimGraph build_edge_gadget( int r, int m, int n )
{
  auto const name = "E_{" + str( r ) + "," + str( n ) + "}";
  require_alphabet( name, m, n );
  if ( r < 1 )
  {
    throw gadget_error( name + ": tuple width must be at least 1" );
  }
  Assembly a( n, m, name );
  std::vector<VertexId> u( r ), v( r );
  for ( auto& x : u )
  {
    x = a.vertex();
  }
  for ( auto& x : v )
  {
    x = a.vertex();
  }
  auto inputs = u;
  inputs.insert( inputs.end(), v.begin(), v.end() );
  if ( r == 1 )
  {
    a.edge( u[0], v[0] );
    a.note( "e[u,v]" );
    return a.finish( std::move( inputs ), v );
  }

  auto const difference = build_arith( arith_kind::sub, m, n );
  auto const zero_test = build_L( 0, n );
  std::vector<VertexId> z( r );
  for ( int i = 0; i < r; ++i )
  {
    VertexId const in[] = { u[i], v[i] };
    auto const w = a.place( difference, in );
    z[i] = a.place( zero_test, w )[0];
  }
  auto const y = a.place( build_bool( boolean_kind::vor, m, n, r ), z )[0];
  a.edge( y, a.ref( 0 ) );
  a.note( "e[y,~0]" );
  return a.finish( std::move( inputs ), v );
}

SimGraph compose( const WiringSpec& spec )
{
  if ( spec.stages.empty() )
  {
    throw gadget_error( spec.name + ": wiring has no stages" );
  }
  auto const n = spec.stages.front().gadget.n;
  auto const m = spec.stages.front().gadget.m;
  std::vector<std::vector<VertexId>> produced;

  Assembly a( n, m, spec.name );
  std::vector<VertexId> outer( spec.input_count );
  for ( auto& x : outer )
  {
    x = a.vertex();
  }

  auto resolve = [&]( const WireSource& source, std::size_t current ) -> VertexId {
    if ( source.is_outer() )
    {
      if ( source.index < 0 || source.index >= spec.input_count )
      {
        throw gadget_error( spec.name + ": outer input " + str( source.index ) + " out of range" );
      }
      return outer[source.index];
    }
    if ( static_cast<std::size_t>( source.stage ) >= current )
    {
      throw gadget_error( spec.name + ": stage " + str( static_cast<int>( current ) ) + " consumes stage " +
                          str( source.stage ) + " which is not earlier (cyclic wiring)" );
    }
    auto const& outs = produced[source.stage];
    if ( source.index < 0 || static_cast<std::size_t>( source.index ) >= outs.size() )
    {
      throw gadget_error( spec.name + ": stage " + str( source.stage ) + " has no output " + str( source.index ) );
    }
    return outs[source.index];
  };

  for ( std::size_t s = 0; s < spec.stages.size(); ++s )
  {
    auto const& stage = spec.stages[s];
    if ( stage.gadget.n != n || stage.gadget.m != m )
    {
      throw gadget_error( spec.name + ": stage " + stage.gadget.name + " disagrees on n or m" );
    }
    std::vector<VertexId> inputs;
    for ( auto const& source : stage.inputs )
    {
      inputs.push_back( resolve( source, s ) );
    }
    produced.push_back( a.place( stage.gadget, inputs ) );
  }

  std::vector<VertexId> outputs;
  if ( spec.outputs.empty() )
  {
    outputs = produced.back();
  }
  else
  {
    for ( auto const& source : spec.outputs )
    {
      outputs.push_back( resolve( source, spec.stages.size() ) );
    }
  }
  return a.finish( std::move( outer ), std::move( outputs ) );
}

SimGraph swap_io( const SimGraph& g )
{
  if ( g.p() != g.q() )
  {
    throw gadget_error( "swap_io needs as many inputs as outputs, " + g.name + " has p=" + str( g.p() ) + " q=" + str( g.q() ) );
  }
  auto result = g;
  std::swap( result.inputs, result.outputs );
  result.name = g.name.starts_with( "swap(" ) && g.name.ends_with( ")" ) ? g.name.substr( 5, g.name.size() - 6 )
                                                                      : "swap(" + g.name + ")";
  result.relabel_interface();
  result.validate();
  return result;
}

} // namespace colorsim
