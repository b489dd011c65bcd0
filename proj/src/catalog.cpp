#include <colorsim/catalog.hpp>

#include <colorsim/errors.hpp>
#include <colorsim/gadgets.hpp>

#include <algorithm>

namespace colorsim
{

namespace
{

using Row = std::optional<Tuple>;

bool is_bit( int s )
{
  return s == 0 || s == 1;
}

Tuple one_hot( int m, int i )
{
  Tuple t( m, 0 );
  t[i] = 1;
  return t;
}

PartialFunction table( const std::string& name, const GadgetParams& a )
{
  auto const m = a.m;
  if ( name == "tau" )
  {
    return PartialFunction::tabulate( m, 1, 1, [&]( const Tuple& x ) -> Row {
      return Tuple{ x[0] == a.i ? a.j : x[0] == a.j ? a.i : x[0] };
    } );
  }
  if ( name == "cs+" || name == "cs-" )
  {
    auto const shift = name == "cs+" ? 1 : m - 1;
    return PartialFunction::tabulate( m, 1, 1, [&]( const Tuple& x ) -> Row { return Tuple{ ( x[0] + shift ) % m }; } );
  }
  if ( name == "ch" )
  {
    return PartialFunction::tabulate( m, 1, m, [&]( const Tuple& x ) -> Row { return one_hot( m, x[0] ); } );
  }
  if ( name == "ps" )
  {
    return PartialFunction::tabulate( m, m, 1, [&]( const Tuple& u ) -> Row {
      if ( std::count( u.begin(), u.end(), 1 ) == 1 && std::count( u.begin(), u.end(), 0 ) == m - 1 )
      {
        return Tuple{ static_cast<int>( std::find( u.begin(), u.end(), 1 ) - u.begin() ) };
      }
      return std::nullopt;
    } );
  }
  if ( name == "xp" )
  {
    return PartialFunction::tabulate( m, 1, m, [&]( const Tuple& x ) -> Row {
      return is_bit( x[0] ) ? Row( Tuple( m, x[0] ) ) : std::nullopt;
    } );
  }
  if ( name == "not" )
  {
    return PartialFunction::tabulate( m, 1, 1, []( const Tuple& x ) -> Row {
      return is_bit( x[0] ) ? Row( Tuple{ 1 - x[0] } ) : std::nullopt;
    } );
  }
  if ( name == "and" || name == "or" || name == "vand" || name == "vor" )
  {
    auto const arity = name == "and" || name == "or" ? 2 : a.r;
    auto const conjunction = name == "and" || name == "vand";
    return PartialFunction::tabulate( m, arity, 1, [&]( const Tuple& x ) -> Row {
      if ( !std::all_of( x.begin(), x.end(), is_bit ) )
      {
        return std::nullopt;
      }
      auto const ones = std::count( x.begin(), x.end(), 1 );
      return Tuple{ conjunction ? ones == arity : ones > 0 };
    } );
  }
  if ( name == "dot" )
  {
    return PartialFunction::tabulate( m, 2, 1, []( const Tuple& x ) -> Row {
      return is_bit( x[1] ) ? Row( Tuple{ x[1] == 0 ? 0 : x[0] } ) : std::nullopt;
    } );
  }
  if ( name == "xt" )
  {
    return PartialFunction::tabulate( m, m, 1, [&]( const Tuple& u ) -> Row {
      for ( int k = 0; k < m; ++k )
      {
        if ( std::all_of( u.begin(), u.end(), [&]( int s ) { return s == 0 || s == k; } ) )
        {
          return Tuple{ k };
        }
      }
      return std::nullopt;
    } );
  }
  if ( name == "mux" )
  {
    return PartialFunction::tabulate( m, 2 * m, 1, [&]( const Tuple& x ) -> Row {
      for ( int i = 0; i < m; ++i )
      {
        if ( std::equal( x.begin() + m, x.end(), one_hot( m, i ).begin() ) )
        {
          return Tuple{ x[i] };
        }
      }
      return std::nullopt;
    } );
  }
  if ( name == "add" || name == "sub" )
  {
    auto const sign = name == "add" ? 1 : -1;
    return PartialFunction::tabulate( m, 2, 1, [&]( const Tuple& x ) -> Row {
      return Tuple{ ( ( x[0] + sign * x[1] ) % m + m ) % m };
    } );
  }
  if ( name == "edge" )
  {
    return PartialFunction::tabulate( m, 2 * a.r, a.r, [&]( const Tuple& x ) -> Row {
      Tuple u( x.begin(), x.begin() + a.r );
      Tuple v( x.begin() + a.r, x.end() );
      return u == v ? std::nullopt : Row( v );
    } );
  }
  throw gadget_error( "unknown gadget '" + name + "'" );
}

} // namespace

const std::vector<std::string>& gadget_names()
{
  static const std::vector<std::string> names{ "L",  "tau", "cs+", "cs-", "ch",  "ps",  "xp",  "not", "and",
                                               "or", "vand", "vor", "dot", "xt", "mux", "add", "sub", "edge" };
  return names;
}

SimGraph build_named_gadget( const std::string& name, const GadgetParams& a )
{
  if ( name == "L" )
    return build_L( a.k, a.n );
  if ( name == "tau" )
    return build_transposition( a.i, a.j, a.m, a.n );
  if ( name == "cs+" )
    return build_cyclic_shift( +1, a.m, a.n );
  if ( name == "cs-" )
    return build_cyclic_shift( -1, a.m, a.n );
  if ( name == "ch" )
    return build_coder( coder_kind::ch, a.m, a.n );
  if ( name == "ps" )
    return build_coder( coder_kind::ps, a.m, a.n );
  if ( name == "xp" )
    return build_coder( coder_kind::xp, a.m, a.n );
  if ( name == "not" )
    return build_bool( boolean_kind::not_, a.m, a.n );
  if ( name == "and" )
    return build_bool( boolean_kind::and_, a.m, a.n );
  if ( name == "or" )
    return build_bool( boolean_kind::or_, a.m, a.n );
  if ( name == "vand" )
    return build_bool( boolean_kind::vand, a.m, a.n, a.r );
  if ( name == "vor" )
    return build_bool( boolean_kind::vor, a.m, a.n, a.r );
  if ( name == "dot" )
    return build_select( select_kind::dot, a.m, a.n );
  if ( name == "xt" )
    return build_select( select_kind::xt, a.m, a.n );
  if ( name == "mux" )
    return build_select( select_kind::mux, a.m, a.n );
  if ( name == "add" )
    return build_arith( arith_kind::add, a.m, a.n );
  if ( name == "sub" )
    return build_arith( arith_kind::sub, a.m, a.n );
  if ( name == "edge" )
    return build_edge_gadget( a.r, a.m, a.n );
  throw gadget_error( "unknown gadget '" + name + "'" );
}

std::optional<PartialFunction> gadget_function( const std::string& name, const GadgetParams& params )
{
  if ( name == "L" )
  {
    return std::nullopt;
  }
  return table( name, params );
}

std::vector<std::vector<Color>> gadget_points( const std::string& name, const GadgetParams& a )
{
  std::vector<std::vector<Color>> points;
  if ( name != "mux" )
  {
    return points;
  }
  // S^m x U_m
  auto const total = checked_power( a.m, a.m );
  for ( std::uint64_t v = 0; v < total; ++v )
  {
    for ( int i = 0; i < a.m; ++i )
    {
      auto x = digits( v, a.m, a.m );
      auto const u = one_hot( a.m, i );
      x.insert( x.end(), u.begin(), u.end() );
      points.push_back( std::move( x ) );
    }
  }
  return points;
}

VerifyReport verify_L( const SimGraph& g, int k, std::uint64_t cap )
{
  VerifyReport report;
  report.reference_clique = true;
  for ( int a = 0; a < g.n; ++a )
  {
    for ( int b = a + 1; b < g.n; ++b )
    {
      report.reference_clique = report.reference_clique && g.graph.has_edge( g.reference[a], g.reference[b] );
    }
  }
  for ( int x = 0; x < g.n; ++x )
  {
    for ( int y = 0; y < g.n; ++y )
    {
      ++report.points_checked;
      auto lists = pinned_lists( g, { x } );
      lists.lists[g.outputs.front()] &= color_bit( y );
      auto const count = count_extensions( g.graph, lists, cap );
      auto const allowed = ( x == k ) == ( y == k );
      report.defined_points += allowed;
      report.colorable = report.colorable || count.count > 0;
      if ( allowed ? ( count.count != 1 || count.capped ) : count.count != 0 )
      {
        report.failures.push_back( { { x, y },
                                     allowed ? "unique" : "no extension",
                                     ( count.capped ? "at least " : "" ) + std::to_string( count.count ) + " extensions" } );
      }
    }
  }
  return report;
}

VerifyReport verify_gadget( const std::string& name, const GadgetParams& params, const SimGraph& g )
{
  if ( name == "L" )
  {
    return verify_L( g, params.k );
  }
  VerifyOptions options;
  options.points = gadget_points( name, params );
  return verify_simulates( g, *gadget_function( name, params ), options );
}

} // namespace colorsim
