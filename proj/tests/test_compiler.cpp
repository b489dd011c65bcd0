#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <colorsim/colorer.hpp>
#include <colorsim/compiler.hpp>
#include <colorsim/errors.hpp>
#include <colorsim/gadgets.hpp>

#include <sstream>

using namespace colorsim;

namespace
{

using Row = std::optional<Tuple>;

PartialFunction negation()
{
  return PartialFunction::tabulate( 2, 1, 1, []( const Tuple& x ) -> Row { return Tuple{ 1 - x[0] }; } );
}

MarkedGraph triangle()
{
  MarkedGraph g;
  for ( int i = 0; i < 3; ++i )
  {
    g.add_vertex();
  }
  g.add_edge( 0, 1 );
  g.add_edge( 1, 2 );
  g.add_edge( 0, 2 );
  return g;
}

} // namespace

TEST_CASE( "totalize" )
{
  auto total = totalize( negation() );
  CHECK_FALSE( total.star );
  CHECK( total.function == negation() );

  auto partial = PartialFunction::undefined( 2, 1, 1 );
  partial.define( { 0 }, { 1 } );
  auto t = totalize( partial );
  REQUIRE( t.star );
  CHECK( *t.star == 0 );
  CHECK( t.function.m == 2 );
  CHECK( t.function( { 1 } ) == Tuple{ 0 } );

  auto saturated = PartialFunction::undefined( 2, 2, 1 );
  saturated.define( { 0, 0 }, { 0 } );
  saturated.define( { 0, 1 }, { 1 } );
  auto grown = totalize( saturated );
  REQUIRE( grown.star );
  CHECK( *grown.star == 2 );
  CHECK( grown.function.m == 3 );
  CHECK( grown.function.is_total() );
  CHECK( grown.function( { 1, 0 } ) == Tuple{ 2 } );
  CHECK( grown.function( { 0, 1 } ) == Tuple{ 1 } );
  CHECK( grown.function( { 2, 2 } ) == Tuple{ 2 } );

  auto wide = PartialFunction::undefined( 2, 1, 2 );
  wide.define( { 0 }, { 1, 0 } );
  auto pair = totalize( wide );
  CHECK( pair.function( { 1 } ) == Tuple{ 0, 0 } );
}

TEST_CASE( "blow_up structure" )
{
  MarkedGraph edge;
  edge.add_vertex();
  edge.add_vertex();
  edge.add_edge( 0, 1 );
  auto single = blow_up( edge, 3, 1, 3 );
  CHECK( graph_stats( single.graph ) == GraphStats{ 5, 4 } );
  CHECK( single.graph.has_edge( single.coordinates[0][0], single.coordinates[1][0] ) );
  CHECK( single.gadget_count == 1 );

  auto tri = blow_up( triangle(), 9, 2, 3 );
  CHECK( tri.gadget_count == 3 );
  auto const e = build_edge_gadget( 2, 3, 3 );
  auto const internal = e.graph.vertex_count() - 4 - 3;
  CHECK( tri.graph.vertex_count() == 2 * 3 + 3 * internal + 3 );
  CHECK( graph_stats( tri.graph ) == predict_blow_up( graph_stats( triangle() ), 2, 3 ) );

  CHECK_THROWS_AS( blow_up( triangle(), 8, 2, 3 ), compile_error );
}

TEST_CASE( "blown-up triangle colorings" )
{
  // per coordinate lists cannot exclude a single tuple, so only full pinning decides
  auto tri = blow_up( triangle(), 9, 2, 3 );
  auto lists = ListAssignment::full( tri.graph.vertex_count(), 3 );
  for ( int k = 0; k < 3; ++k )
  {
    lists.lists[tri.reference[k]] = color_bit( k );
  }
  Tuple const colors[] = { { 0, 0 }, { 1, 0 }, { 0, 2 } };
  for ( int w = 0; w < 3; ++w )
  {
    for ( int t = 0; t < 2; ++t )
    {
      lists.lists[tri.coordinates[w][t]] = color_bit( colors[w][t] );
    }
  }
  CHECK( normal_form( tri.graph, lists ).lists.all_singleton() );

  lists.lists[tri.coordinates[2][0]] = color_bit( 1 );
  lists.lists[tri.coordinates[2][1]] = color_bit( 0 );
  CHECK( normal_form( tri.graph, lists ).lists.any_empty() );
}

TEST_CASE( "plan for not" )
{
  auto plan = plan_compile( negation(), 3 );
  CHECK( plan.r == 2 );
  CHECK( plan.n_tilde == 9 );
  CHECK( plan.theta == 1 );
  CHECK( plan.extension.is_bijection() );
  CHECK( plan.wide.n == 9 );
  CHECK( graph_stats( plan.wide.graph ) == GraphStats{ 211, 1834 } );
  CHECK( plan.predicted == GraphStats{ 3923351, 10334632 } );
  for ( int x = 0; x < 2; ++x )
  {
    auto const outcome = evaluate_colors( plan.wide, { static_cast<Color>( wide_input_color( plan, { x } ) ) } );
    REQUIRE( outcome.kind == outcome_kind::unique );
    CHECK( digits( outcome.output[0], 3, 2 )[0] == 1 - x );
  }
}

TEST_CASE( "color permutation fixes everything outside the embedded copy" )
{
  auto partial = PartialFunction::undefined( 2, 2, 1 );
  partial.define( { 0, 0 }, { 0 } );
  partial.define( { 0, 1 }, { 1 } );
  CompileOptions unlimited;
  unlimited.max_vertices = static_cast<std::size_t>( -1 );
  auto plan = plan_compile( partial, 3, unlimited );
  REQUIRE( plan.total.star );
  CHECK( *plan.total.star == 2 );
  CHECK( plan.spec.m_tilde == 3 );
  for ( std::uint64_t c = 0; c < plan.n_tilde; ++c )
  {
    auto const tuple = digits( c, 3, 3 );
    if ( std::any_of( tuple.begin(), tuple.end(), []( int s ) { return s >= 3; } ) )
    {
      CHECK( plan.color_permutation( static_cast<int>( c ) ) == static_cast<int>( c ) );
    }
  }
}

TEST_CASE( "compile guards" )
{
  CompileOptions tiny;
  tiny.max_vertices = 1000;
  try
  {
    compile( negation(), 3, tiny );
    FAIL( "expected a size limit" );
  }
  catch ( const size_limit_error& e )
  {
    CHECK( e.predicted.vertex_count == 3923351 );
  }

  auto partial = PartialFunction::undefined( 3, 1, 1 );
  partial.define( { 0 }, { 1 } );
  partial.define( { 1 }, { 0 } );
  auto const kept = plan_compile( partial, 3, { static_cast<std::size_t>( -1 ) } );
  REQUIRE( kept.total.star );
  CHECK( *kept.total.star == 2 );
  CHECK( kept.spec.m_tilde == 3 );

  auto grows = PartialFunction::undefined( 3, 2, 1 );
  for ( int s = 0; s < 3; ++s )
  {
    grows.define( { s, 0 }, { s } );
  }
  try
  {
    plan_compile( grows, 3 );
    FAIL( "expected the alphabet growth to be rejected" );
  }
  catch ( const compile_error& e )
  {
    CHECK( std::string( e.what() ).find( "alphabet grew to 4" ) != std::string::npos );
  }
  CHECK_THROWS_AS( plan_compile( negation(), 2 ), compile_error );
}

TEST_CASE( "compiled not" )
{
  auto plan = plan_compile( negation(), 3 );
  auto result = compile( plan );
  auto const& g = result.graph;

  CHECK( result.report.stats == graph_stats( g.graph ) );
  CHECK( result.report.stats.vertex_count == plan.predicted.vertex_count );
  CHECK( result.report.stats.edge_count == plan.predicted.edge_count );
  CHECK( result.report.r == 2 );
  CHECK( result.report.n_tilde == 9 );
  CHECK( result.report.theta == 1 );
  CHECK( result.report.edge_gadgets == 1834 );
  CHECK_FALSE( result.report.star_used );
  CHECK( g.p() == 1 );
  CHECK( g.q() == 1 );
  CHECK_NOTHROW( g.validate() );

  // reference tuples are forced to their digits with only R pinned
  auto lists = ListAssignment::full( g.graph.vertex_count(), 3 );
  for ( int k = 0; k < 3; ++k )
  {
    lists.lists[g.reference[k]] = color_bit( k );
  }
  auto const nf = normal_form( g.graph, lists ).lists;
  for ( std::uint64_t j = 0; j < plan.n_tilde; ++j )
  {
    auto const digit = digits( j, 3, 2 );
    for ( int t = 0; t < 2; ++t )
    {
      CHECK( nf.lists[result.coordinates[plan.wide.reference[j]][t]] == color_bit( digit[t] ) );
    }
  }

  // the wide coloring lifted to the tuples extends to the whole graph by propagation
  for ( int x = 0; x < 2; ++x )
  {
    auto const wide = evaluate_colors( plan.wide, { static_cast<Color>( wide_input_color( plan, { x } ) ) } );
    REQUIRE( wide.kind == outcome_kind::unique );
    auto lifted = pinned_lists( g, { x } );
    for ( std::size_t w = 0; w < result.coordinates.size(); ++w )
    {
      auto const digit = digits( wide.coloring[w], 3, 2 );
      for ( int t = 0; t < 2; ++t )
      {
        lifted.lists[result.coordinates[w][t]] &= color_bit( digit[t] );
      }
    }
    auto const done = normal_form( g.graph, lifted ).lists;
    REQUIRE( done.all_singleton() );
    CHECK( done.coloring()[g.outputs[0]] == 1 - x );
  }

  std::ostringstream report;
  write_compile_report( report, result.report );
  CHECK( report.str() == "theta 1\nr 2\nn_tilde 9\nvertices 3923351\nedges 10334632\nstar none\nwide_vertices 211\n"
                         "wide_edges 1834\nedge_gadgets 1834\n" );
}
