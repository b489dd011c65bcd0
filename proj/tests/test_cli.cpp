#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <colorsim/cli.hpp>
#include <colorsim/errors.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace colorsim;
namespace fs = std::filesystem;

namespace
{

struct Scratch
{
  Scratch() : dir( fs::temp_directory_path() / ( "colorsim_cli_" + std::to_string( std::random_device{}() ) ) )
  {
    fs::create_directories( dir );
  }
  ~Scratch() { fs::remove_all( dir ); }

  std::string file( const std::string& name, const std::string& content = {} ) const
  {
    auto path = ( dir / name ).string();
    if ( !content.empty() )
    {
      std::ofstream( path ) << content;
    }
    return path;
  }

  fs::path dir;
};

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  auto code = run_command( args, out, err );
  return { code, out.str(), err.str() };
}

std::string slurp( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  return { std::istreambuf_iterator<char>( in ), {} };
}

std::size_t error_line( std::string_view text )
{
  try
  {
    parse_function_table( text );
  }
  catch ( const parse_error& e )
  {
    return e.line;
  }
  return 0;
}

} // namespace

TEST_CASE( "parse_function_table" )
{
  auto f = parse_function_table( "m 2 p 1 q 1\n0 -> 1\n1 -> 0\n" );
  CHECK( f.m == 2 );
  CHECK( f( { 0 } ) == Tuple{ 1 } );
  CHECK( f( { 1 } ) == Tuple{ 0 } );

  auto partial = parse_function_table( "# comment\nm 2 p 1 q 1\n\n0 -> 1\n" );
  CHECK( partial( { 1 } ) == std::nullopt );

  auto pair = parse_function_table( "m 3 p 2 q 2\n2 1 -> 0 2\n" );
  CHECK( pair( { 2, 1 } ) == Tuple{ 0, 2 } );

  auto constant = parse_function_table( "m 2 p 0 q 1\n-> 1\n" );
  CHECK( constant( {} ) == Tuple{ 1 } );
}

TEST_CASE( "parse errors carry line numbers" )
{
  CHECK( error_line( "m 2 p 1 q 1\n0 -> 2\n" ) == 2 );
  CHECK( error_line( "m 2 p 1 q 1\n0 -> 1\n\n0 -> 0\n" ) == 4 );
  CHECK( error_line( "m 2 p 1\n" ) == 1 );
  CHECK( error_line( "m 2 p 1 q 1\n0 1 -> 1\n" ) == 2 );
  CHECK( error_line( "m 2 p 1 q 1\n0 1\n" ) == 2 );
  CHECK( error_line( "m 2 p 1 q 1\nx -> 1\n" ) == 2 );
  CHECK( error_line( "m 1 p 1 q 1\n" ) == 1 );
  CHECK_THROWS_AS( parse_function_table( "" ), parse_error );
}

TEST_CASE( "function tables round trip" )
{
  std::mt19937 rng( 13 );
  for ( int round = 0; round < 100; ++round )
  {
    auto const m = 2 + static_cast<int>( rng() % 3 );
    auto const p = static_cast<int>( rng() % 3 );
    auto const q = 1 + static_cast<int>( rng() % 2 );
    auto f = PartialFunction::undefined( m, p, q );
    for ( std::uint64_t row = 0; row < f.domain_size(); ++row )
    {
      if ( rng() % 3 )
      {
        Tuple y( q );
        for ( auto& s : y )
        {
          s = static_cast<int>( rng() % m );
        }
        f.define( f.input_at( row ), y );
      }
    }
    auto const text = serialize_function_table( f );
    CHECK( parse_function_table( text ) == f );
    CHECK( serialize_function_table( parse_function_table( text ) ) == text );
  }
}

TEST_CASE( "gadget, eval and stats" )
{
  Scratch s;
  auto const sg = s.file( "not.sg" );
  auto const dot = s.file( "not.dot" );
  auto built = run( { "gadget", "not", "--m", "2", "--colors", "3", "--out", sg, "--dot", dot, "--trace" } );
  CHECK( built.code == exit_code::ok );
  CHECK( built.out.find( "vertices 5" ) != std::string::npos );
  CHECK( built.out.find( "e[x,y]" ) != std::string::npos );
  CHECK( slurp( dot ).find( "graph" ) != std::string::npos );

  auto zero = run( { "eval", "--graph", sg, "--input", "0" } );
  CHECK( zero.code == exit_code::ok );
  CHECK( zero.out == "1\n" );

  auto transcript = s.file( "steps.txt" );
  CHECK( run( { "eval", "--graph", sg, "--input", "1", "--transcript", transcript } ).out == "0\n" );
  CHECK( slurp( transcript ).find( "remove" ) != std::string::npos );

  auto stats = run( { "stats", "--graph", sg } );
  CHECK( stats.out == "n 3 m 2 p 1 q 1\nvertices 5\nedges 6\n" );

  auto formula = run( { "stats", "--gadget", "L", "--k", "1", "--colors", "4" } );
  CHECK( formula.code == exit_code::ok );
  CHECK( formula.out.find( "match" ) != std::string::npos );
}

TEST_CASE( "infeasible and unresolved exits" )
{
  Scratch s;
  auto const sg = s.file( "ps.sg" );
  REQUIRE( run( { "gadget", "ps", "--m", "2", "--out", sg } ).code == exit_code::ok );
  auto infeasible = run( { "eval", "--graph", sg, "--input", "1", "1" } );
  CHECK( infeasible.code == exit_code::infeasible );
  CHECK( infeasible.out == "INFEASIBLE\n" );

  auto const loose = s.file( "loose.sg", "vertices 5 edges 3\n0 1\n0 2\n1 2\nmark ~0 0\nmark ~1 1\nmark ~2 2\nmark x0 3\nmark y0 4\n"
                                          "params 3 2 1 1\nX 0 x0\nY 0 y0\nR 0 ~0\nR 1 ~1\nR 2 ~2\n" );
  auto unresolved = run( { "eval", "--graph", loose, "--input", "0" } );
  CHECK( unresolved.code == exit_code::unresolved );
  CHECK( unresolved.out.rfind( "UNRESOLVED", 0 ) == 0 );
}

TEST_CASE( "verify" )
{
  auto gadget = run( { "verify", "--gadget", "L", "--k", "0", "--colors", "3" } );
  CHECK( gadget.code == exit_code::ok );
  CHECK( gadget.out.find( "PASS" ) != std::string::npos );

  Scratch s;
  auto const sg = s.file( "not.sg" );
  REQUIRE( run( { "gadget", "not", "--out", sg } ).code == exit_code::ok );
  auto const good = s.file( "not.fn", "m 2 p 1 q 1\n0 -> 1\n1 -> 0\n" );
  auto const bad = s.file( "id.fn", "m 2 p 1 q 1\n0 -> 0\n1 -> 1\n" );
  CHECK( run( { "verify", "--graph", sg, "--fn", good } ).code == exit_code::ok );
  auto failed = run( { "verify", "--graph", sg, "--fn", bad } );
  CHECK( failed.code == exit_code::verification_failed );
  CHECK( failed.out.find( "input (0): expected unique 0, observed unique 1" ) != std::string::npos );
}

TEST_CASE( "usage errors" )
{
  CHECK( run( {} ).code == exit_code::usage );
  CHECK( run( { "bogus" } ).code == exit_code::usage );
  CHECK( run( { "gadget", "nonsense" } ).code == exit_code::usage );
  CHECK( run( { "eval" } ).code == exit_code::usage );
  CHECK( run( { "verify" } ).code == exit_code::usage );
  CHECK( run( { "eval", "--graph", "/nonexistent/file.sg", "--input", "0" } ).code == exit_code::usage );
  CHECK( run( { "--help" } ).code == exit_code::ok );

  Scratch s;
  auto const bad = s.file( "bad.fn", "m 2 p 1 q 1\n0 -> 5\n" );
  auto parsed = run( { "compile", "--fn", bad, "--colors", "3" } );
  CHECK( parsed.code == exit_code::usage );
  CHECK( parsed.err.find( "line 2" ) != std::string::npos );
}

TEST_CASE( "compile respects the size limit and predicts sizes" )
{
  Scratch s;
  auto const fn = s.file( "and.fn", "m 2 p 2 q 1\n0 0 -> 0\n1 0 -> 0\n0 1 -> 0\n1 1 -> 1\n" );
  auto refused = run( { "compile", "--fn", fn, "--colors", "3", "--max-vertices", "1000" } );
  CHECK( refused.code == exit_code::usage );
  CHECK( refused.err.find( "predicted graph has" ) != std::string::npos );

  auto predicted = run( { "stats", "--fn", fn, "--target-colors", "3" } );
  CHECK( predicted.code == exit_code::ok );
  CHECK( predicted.out.find( "n_tilde 27" ) != std::string::npos );
}

TEST_CASE( "outputs are deterministic" )
{
  Scratch s;
  auto const a = s.file( "a.sg" );
  auto const b = s.file( "b.sg" );
  auto const da = s.file( "a.dot" );
  auto const db = s.file( "b.dot" );
  run( { "gadget", "dot", "--m", "2", "--out", a, "--dot", da } );
  run( { "gadget", "dot", "--m", "2", "--out", b, "--dot", db } );
  CHECK( slurp( a ) == slurp( b ) );
  CHECK( slurp( da ) == slurp( db ) );

  CHECK( run( { "eval", "--graph", a, "--input", "1", "1" } ).out == "1\n" );
  CHECK( run( { "stats", "--graph", a } ).out == run( { "stats", "--graph", b } ).out );
}
