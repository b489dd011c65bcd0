#include <colorsim/permutation.hpp>

#include <colorsim/errors.hpp>

#include <numeric>
#include <string>

namespace colorsim
{

Permutation::Permutation( std::vector<int> images ) : images_( std::move( images ) )
{
  std::vector<bool> seen( images_.size(), false );
  for ( auto image : images_ )
  {
    if ( image < 0 || static_cast<std::size_t>( image ) >= images_.size() || seen[image] )
    {
      throw gadget_error( "not a bijection on {0.." + std::to_string( images_.size() ) + "-1}" );
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity( int m )
{
  std::vector<int> images( m );
  std::iota( images.begin(), images.end(), 0 );
  return Permutation( std::move( images ) );
}

Permutation Permutation::transposition( int m, int i, int j )
{
  if ( i < 0 || j < 0 || i >= m || j >= m )
  {
    throw gadget_error( "transposition outside {0..m-1}" );
  }
  auto images = identity( m ).images_;
  std::swap( images[i], images[j] );
  return Permutation( std::move( images ) );
}

Permutation Permutation::cyclic_shift( int m, int shift )
{
  std::vector<int> images( m );
  for ( int i = 0; i < m; ++i )
  {
    images[i] = ( ( i + shift ) % m + m ) % m;
  }
  return Permutation( std::move( images ) );
}

Permutation Permutation::inverse() const
{
  std::vector<int> images( images_.size() );
  for ( std::size_t i = 0; i < images_.size(); ++i )
  {
    images[images_[i]] = static_cast<int>( i );
  }
  return Permutation( std::move( images ) );
}

Permutation Permutation::then( const Permutation& other ) const
{
  if ( other.size() != size() )
  {
    throw gadget_error( "composing permutations of different sizes" );
  }
  std::vector<int> images( images_.size() );
  for ( std::size_t i = 0; i < images_.size(); ++i )
  {
    images[i] = other( images_[i] );
  }
  return Permutation( std::move( images ) );
}

int Permutation::transposition_count() const
{
  return static_cast<int>( perm_to_transpositions( *this ).size() );
}

std::vector<std::pair<int, int>> perm_to_transpositions( const Permutation& pi )
{
  std::vector<std::pair<int, int>> result;
  std::vector<bool> visited( pi.size(), false );
  for ( int start = 0; start < pi.size(); ++start )
  {
    if ( visited[start] )
    {
      continue;
    }
    visited[start] = true;
    // start is the minimum of its cycle since smaller elements were visited first
    for ( int c = pi( start ); c != start; c = pi( c ) )
    {
      visited[c] = true;
      result.emplace_back( start, c );
    }
  }
  return result;
}

} // namespace colorsim
