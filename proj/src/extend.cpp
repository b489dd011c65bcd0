#include <colorsim/extend.hpp>

#include <colorsim/errors.hpp>

#include <limits>
#include <map>
#include <ostream>
#include <string>

namespace colorsim
{

namespace
{

constexpr std::uint64_t unassigned = std::numeric_limits<std::uint64_t>::max();

/// t-th element of S~^width in lexicographic order (first coordinate most significant).
Tuple lexicographic_tuple( std::uint64_t t, int base, int width )
{
  Tuple tuple( width );
  for ( int i = width - 1; i >= 0; --i )
  {
    tuple[i] = static_cast<int>( t % base );
    t /= base;
  }
  return tuple;
}

} // namespace

bool extension_feasible( const PartialFunction& phi, const ExtensionSpec& spec )
{
  if ( spec.r < phi.q || spec.r < phi.p )
  {
    return false;
  }
  return checked_power( phi.m, phi.p ) <= checked_power( spec.m_tilde, spec.r - phi.q );
}

Tuple BigPermutation::operator()( const Tuple& x ) const
{
  return digits( images.at( embed_index( x, m_tilde, r ) ), m_tilde, r );
}

bool BigPermutation::is_bijection() const
{
  std::vector<bool> hit( images.size(), false );
  for ( auto image : images )
  {
    if ( image >= images.size() || hit[image] )
    {
      return false;
    }
    hit[image] = true;
  }
  return true;
}

Permutation BigPermutation::to_permutation() const
{
  if ( images.size() > static_cast<std::uint64_t>( std::numeric_limits<int>::max() ) )
  {
    throw extension_error( "permutation on " + std::to_string( images.size() ) + " points is too large" );
  }
  std::vector<int> small( images.begin(), images.end() );
  return Permutation( std::move( small ) );
}

BigPermutation invertible_extension( const PartialFunction& phi, const ExtensionSpec& spec )
{
  phi.validate();
  if ( spec.m_tilde < phi.m )
  {
    throw extension_error( "extended alphabet " + std::to_string( spec.m_tilde ) + " is smaller than m = " + std::to_string( phi.m ) );
  }
  if ( spec.s0 < 0 || spec.s0 >= phi.m )
  {
    throw extension_error( "padding symbol " + std::to_string( spec.s0 ) + " is not a symbol of S" );
  }
  if ( spec.r < phi.p || spec.r < phi.q )
  {
    throw extension_error( "tuple width r = " + std::to_string( spec.r ) + " is below p or q" );
  }
  if ( !extension_feasible( phi, spec ) )
  {
    throw extension_error( "no invertible extension: " + std::to_string( phi.m ) + "^" + std::to_string( phi.p ) + " > " +
                           std::to_string( spec.m_tilde ) + "^" + std::to_string( spec.r - phi.q ) );
  }

  BigPermutation pi;
  pi.m_tilde = spec.m_tilde;
  pi.r = spec.r;
  auto const size = checked_power( spec.m_tilde, spec.r );
  pi.images.assign( size, unassigned );
  std::vector<bool> taken( size, false );

  std::map<Tuple, std::uint64_t> rank;
  for ( std::uint64_t row = 0; row < phi.domain_size(); ++row )
  {
    if ( !phi.rows[row] )
    {
      continue;
    }
    auto source = phi.input_at( row );
    source.resize( spec.r, spec.s0 );
    auto target = *phi.rows[row];
    auto const pad = lexicographic_tuple( rank[target]++, spec.m_tilde, spec.r - phi.q );
    target.insert( target.end(), pad.begin(), pad.end() );
    auto const to = embed_index( target, spec.m_tilde );
    pi.images[embed_index( source, spec.m_tilde )] = to;
    taken[to] = true;
  }

  std::uint64_t next = 0;
  for ( auto& image : pi.images )
  {
    if ( image != unassigned )
    {
      continue;
    }
    while ( taken[next] )
    {
      ++next;
    }
    image = next;
    taken[next] = true;
  }
  return pi;
}

void write_permutation_table( std::ostream& os, const BigPermutation& pi )
{
  for ( std::uint64_t i = 0; i < pi.size(); ++i )
  {
    os << i << ' ' << pi.images[i] << '\n';
  }
}

} // namespace colorsim
