#include <colorsim/function.hpp>

#include <colorsim/errors.hpp>

#include <algorithm>
#include <string>

namespace colorsim
{

std::uint64_t checked_power( std::uint64_t base, int exponent )
{
  constexpr std::uint64_t limit = std::uint64_t{ 1 } << 62;
  std::uint64_t result = 1;
  for ( int i = 0; i < exponent; ++i )
  {
    if ( base != 0 && result > limit / base )
    {
      throw extension_error( std::to_string( base ) + "^" + std::to_string( exponent ) + " is too large" );
    }
    result *= base;
  }
  return result;
}

std::uint64_t embed_index( const Tuple& tuple, int n )
{
  std::uint64_t index = 0;
  std::uint64_t weight = 1;
  for ( std::size_t t = 0; t < tuple.size(); ++t )
  {
    if ( tuple[t] < 0 || tuple[t] >= n )
    {
      throw extension_error( "tuple entry " + std::to_string( tuple[t] ) + " outside {0.." + std::to_string( n - 1 ) + "}" );
    }
    index += static_cast<std::uint64_t>( tuple[t] ) * weight;
    if ( t + 1 < tuple.size() )
    {
      weight = checked_power( n, static_cast<int>( t + 1 ) );
    }
  }
  return index;
}

std::uint64_t embed_index( const Tuple& tuple, int n, int r )
{
  if ( static_cast<int>( tuple.size() ) != r )
  {
    throw extension_error( "tuple of width " + std::to_string( tuple.size() ) + " where " + std::to_string( r ) + " expected" );
  }
  return embed_index( tuple, n );
}

Tuple digits( std::uint64_t index, int n, int r )
{
  if ( n < 1 || index >= checked_power( n, r ) )
  {
    throw extension_error( "index " + std::to_string( index ) + " outside {0.." + std::to_string( n ) + "^" + std::to_string( r ) + "-1}" );
  }
  Tuple result( r );
  for ( auto& digit : result )
  {
    digit = static_cast<int>( index % n );
    index /= n;
  }
  return result;
}

PartialFunction PartialFunction::undefined( int m, int p, int q )
{
  if ( m < 2 || p < 0 || q < 1 )
  {
    throw extension_error( "function shape needs m >= 2, p >= 0, q >= 1" );
  }
  PartialFunction f;
  f.m = m;
  f.p = p;
  f.q = q;
  f.rows.resize( checked_power( m, p ) );
  return f;
}

PartialFunction PartialFunction::tabulate( int m, int p, int q, const std::function<std::optional<Tuple>( const Tuple& )>& f )
{
  auto result = undefined( m, p, q );
  for ( std::uint64_t i = 0; i < result.rows.size(); ++i )
  {
    if ( auto y = f( result.input_at( i ) ) )
    {
      result.define( result.input_at( i ), std::move( *y ) );
    }
  }
  return result;
}

std::optional<Tuple> PartialFunction::operator()( const Tuple& x ) const
{
  if ( static_cast<int>( x.size() ) != p )
  {
    throw extension_error( "input of width " + std::to_string( x.size() ) + " where " + std::to_string( p ) + " expected" );
  }
  if ( std::any_of( x.begin(), x.end(), [&]( int s ) { return s < 0 || s >= m; } ) )
  {
    return std::nullopt;
  }
  return rows[embed_index( x, m )];
}

void PartialFunction::define( const Tuple& x, Tuple y )
{
  if ( static_cast<int>( y.size() ) != q || std::any_of( y.begin(), y.end(), [&]( int s ) { return s < 0 || s >= m; } ) )
  {
    throw extension_error( "image must be a tuple of " + std::to_string( q ) + " symbols below " + std::to_string( m ) );
  }
  rows.at( embed_index( x, m, p ) ) = std::move( y );
}

void PartialFunction::undefine( const Tuple& x )
{
  rows.at( embed_index( x, m, p ) ).reset();
}

bool PartialFunction::is_total() const
{
  return std::all_of( rows.begin(), rows.end(), []( auto const& row ) { return row.has_value(); } );
}

std::size_t PartialFunction::defined_count() const
{
  return std::count_if( rows.begin(), rows.end(), []( auto const& row ) { return row.has_value(); } );
}

void PartialFunction::validate() const
{
  if ( m < 2 || p < 0 || q < 1 )
  {
    throw extension_error( "function shape needs m >= 2, p >= 0, q >= 1" );
  }
  if ( rows.size() != checked_power( m, p ) )
  {
    throw extension_error( "table has " + std::to_string( rows.size() ) + " rows, expected m^p" );
  }
  for ( auto const& row : rows )
  {
    if ( row && ( static_cast<int>( row->size() ) != q ||
                  std::any_of( row->begin(), row->end(), [&]( int s ) { return s < 0 || s >= m; } ) ) )
    {
      throw extension_error( "table row outside S^q" );
    }
  }
}

} // namespace colorsim
