#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <colorsim/errors.hpp>
#include <colorsim/extend.hpp>

#include <random>
#include <set>

using namespace colorsim;

namespace
{

using Row = std::optional<Tuple>;

PartialFunction random_function( std::mt19937& rng, int m, int p, int q, double defined )
{
  std::bernoulli_distribution keep( defined );
  std::uniform_int_distribution<int> symbol( 0, m - 1 );
  return PartialFunction::tabulate( m, p, q, [&]( const Tuple& ) -> Row {
    if ( !keep( rng ) )
    {
      return std::nullopt;
    }
    Tuple y( q );
    for ( auto& s : y )
    {
      s = symbol( rng );
    }
    return y;
  } );
}

void check_extension( const PartialFunction& phi, const ExtensionSpec& spec )
{
  auto const pi = invertible_extension( phi, spec );
  CHECK( pi.size() == checked_power( spec.m_tilde, spec.r ) );
  CHECK( pi.is_bijection() );
  for ( std::uint64_t row = 0; row < phi.domain_size(); ++row )
  {
    if ( !phi.rows[row] )
    {
      continue;
    }
    auto x = phi.input_at( row );
    x.resize( spec.r, spec.s0 );
    auto const image = pi( x );
    CHECK( Tuple( image.begin(), image.begin() + phi.q ) == *phi.rows[row] );
  }
}

} // namespace

TEST_CASE( "embed_index and digits" )
{
  CHECK( embed_index( { 1, 0 }, 3 ) == 1 );
  CHECK( embed_index( { 0, 1 }, 3, 2 ) == 3 );
  CHECK( digits( 5, 3, 2 ) == Tuple{ 2, 1 } );
  for ( std::uint64_t k = 0; k < 27; ++k )
  {
    CHECK( embed_index( digits( k, 3, 3 ), 3, 3 ) == k );
  }
  CHECK_THROWS_AS( embed_index( { 3 }, 3 ), extension_error );
  CHECK_THROWS_AS( embed_index( { 0, 1 }, 3, 3 ), extension_error );
  CHECK_THROWS_AS( digits( 9, 3, 2 ), extension_error );
  CHECK_THROWS_AS( checked_power( 10, 40 ), extension_error );
}

TEST_CASE( "partial function table" )
{
  auto f = PartialFunction::undefined( 3, 2, 1 );
  CHECK( f.domain_size() == 9 );
  f.define( { 2, 1 }, { 0 } );
  CHECK( f( { 2, 1 } ) == Tuple{ 0 } );
  CHECK( f( { 1, 2 } ) == std::nullopt );
  CHECK( f( { 3, 0 } ) == std::nullopt );
  CHECK( f.rows[5] == Tuple{ 0 } );
  CHECK( f.defined_count() == 1 );
  CHECK_FALSE( f.is_total() );
  CHECK_THROWS_AS( f.define( { 0, 0 }, { 3 } ), extension_error );
  CHECK_THROWS_AS( f.define( { 0, 0 }, { 1, 1 } ), extension_error );
  f.undefine( { 2, 1 } );
  CHECK( f.defined_count() == 0 );
}

TEST_CASE( "extension of not" )
{
  auto negation = PartialFunction::tabulate( 2, 1, 1, []( const Tuple& x ) -> Row { return Tuple{ 1 - x[0] }; } );
  auto const pi = invertible_extension( negation, { 2, 2, 0 } );
  CHECK( pi.is_bijection() );
  CHECK( pi( { 0, 0 } )[0] == 1 );
  CHECK( pi( { 1, 0 } )[0] == 0 );
  // class of 1 gets pad (0), class of 0 gets pad (0); leftovers fill ascending
  CHECK( pi.images == std::vector<std::uint64_t>{ 1, 0, 2, 3 } );
}

TEST_CASE( "extension of identity and and" )
{
  auto id = PartialFunction::tabulate( 2, 1, 1, []( const Tuple& x ) -> Row { return x; } );
  auto const pi = invertible_extension( id, { 2, 2, 0 } );
  CHECK( pi( { 0, 0 } )[0] == 0 );
  CHECK( pi( { 1, 0 } )[0] == 1 );

  auto conj = PartialFunction::tabulate( 2, 2, 1, []( const Tuple& x ) -> Row { return Tuple{ x[0] & x[1] }; } );
  auto const big = invertible_extension( conj, { 2, 3, 0 } );
  CHECK( big.size() == 8 );
  CHECK( big.is_bijection() );
  std::set<Tuple> images;
  for ( int a = 0; a < 2; ++a )
  {
    for ( int b = 0; b < 2; ++b )
    {
      auto const y = big( { a, b, 0 } );
      CHECK( y[0] == ( a & b ) );
      images.insert( y );
    }
  }
  CHECK( images.size() == 4 );
}

TEST_CASE( "pads follow lexicographic order within a class" )
{
  auto zero = PartialFunction::tabulate( 2, 2, 1, []( const Tuple& ) -> Row { return Tuple{ 0 }; } );
  auto const pi = invertible_extension( zero, { 2, 3, 0 } );
  CHECK( pi( { 0, 0, 0 } ) == Tuple{ 0, 0, 0 } );
  CHECK( pi( { 1, 0, 0 } ) == Tuple{ 0, 0, 1 } );
  CHECK( pi( { 0, 1, 0 } ) == Tuple{ 0, 1, 0 } );
  CHECK( pi( { 1, 1, 0 } ) == Tuple{ 0, 1, 1 } );
}

TEST_CASE( "infeasible extension shapes" )
{
  auto conj = PartialFunction::tabulate( 2, 2, 1, []( const Tuple& x ) -> Row { return Tuple{ x[0] & x[1] }; } );
  CHECK_FALSE( extension_feasible( conj, { 2, 2, 0 } ) );
  CHECK_THROWS_AS( invertible_extension( conj, { 2, 2, 0 } ), extension_error );
  CHECK( extension_feasible( conj, { 4, 2, 0 } ) );
  CHECK_THROWS_AS( invertible_extension( conj, { 1, 3, 0 } ), extension_error );
  CHECK_THROWS_AS( invertible_extension( conj, { 2, 3, 2 } ), extension_error );
}

TEST_CASE( "Hall feasibility over random partial functions" )
{
  std::mt19937 rng( 41 );
  int built = 0;
  for ( int m : { 2, 3 } )
  {
    for ( int p = 1; p <= 2; ++p )
    {
      for ( int q = 1; q <= 2; ++q )
      {
        for ( int round = 0; round < 8; ++round )
        {
          auto phi = random_function( rng, m, p, q, round % 2 ? 1.0 : 0.6 );
          for ( int extra = 0; extra <= 1; ++extra )
          {
            ExtensionSpec spec{ m + extra, p + q, 0 };
            REQUIRE( extension_feasible( phi, spec ) );
            check_extension( phi, spec );
            ++built;
          }
          // a narrower width that still satisfies the inequality through a larger alphabet
          ExtensionSpec narrow{ checked_power( m, p ) <= static_cast<std::uint64_t>( m * m ) ? m * m : m * m * m, std::max( p, q + 1 ), 0 };
          if ( extension_feasible( phi, narrow ) )
          {
            check_extension( phi, narrow );
            ++built;
          }
        }
      }
    }
  }
  CHECK( built >= 64 );
}
