#include <colorsim/cli.hpp>

#include <colorsim/catalog.hpp>
#include <colorsim/colorer.hpp>
#include <colorsim/compiler.hpp>
#include <colorsim/errors.hpp>
#include <colorsim/graph_io.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

namespace colorsim
{

namespace
{

int parse_int( std::string_view field, std::size_t line )
{
  int value = 0;
  auto const [end, ec] = std::from_chars( field.data(), field.data() + field.size(), value );
  if ( ec != std::errc{} || end != field.data() + field.size() )
  {
    throw parse_error( line, "expected an integer, got '" + std::string( field ) + "'" );
  }
  return value;
}

std::string join( const std::vector<int>& values )
{
  std::string result;
  for ( std::size_t i = 0; i < values.size(); ++i )
  {
    result += ( i ? " " : "" ) + std::to_string( values[i] );
  }
  return result;
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw colorsim_error( "cannot open '" + path + "'" );
  }
  return { std::istreambuf_iterator<char>( in ), {} };
}

std::ofstream open_output( const std::string& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw colorsim_error( "cannot write '" + path + "'" );
  }
  return out;
}

SimGraph load_graph( const std::string& path )
{
  std::istringstream in( read_file( path ) );
  return read_sim_graph( in );
}

void save_graph( const SimGraph& g, const std::string& sg_path, const std::string& dot_path )
{
  if ( !sg_path.empty() )
  {
    auto out = open_output( sg_path );
    write_sim_graph( out, g );
  }
  if ( !dot_path.empty() )
  {
    auto out = open_output( dot_path );
    write_sim_dot( out, g );
  }
}

struct Options
{
  std::string fn;
  std::string graph;
  std::string out;
  std::string dot;
  std::string report;
  std::string transcript;
  std::string gadget;
  std::vector<int> input;
  int colors = 3;
  std::size_t max_vertices = CompileOptions{}.max_vertices;
  bool trace = false;
  GadgetParams params;
};

void add_gadget_options( CLI::App* app, Options& o )
{
  app->add_option( "--m", o.params.m, "Alphabet size" );
  app->add_option( "--colors,-n", o.params.n, "Color count n" );
  app->add_option( "--k", o.params.k, "Color of an L gadget" );
  app->add_option( "--i", o.params.i, "First symbol of a transposition" );
  app->add_option( "--j", o.params.j, "Second symbol of a transposition" );
  app->add_option( "--r", o.params.r, "Arity of vand/vor, tuple width of edge" );
}

void print_stats( std::ostream& out, const GraphStats& stats )
{
  out << "vertices " << stats.vertex_count << '\n';
  out << "edges " << stats.edge_count << '\n';
}

int do_compile( const Options& o, std::ostream& out )
{
  auto const phi = parse_function_table( read_file( o.fn ) );
  CompileOptions options;
  options.max_vertices = o.max_vertices;
  auto const result = compile( phi, o.colors, options );
  save_graph( result.graph, o.out, o.dot );
  write_compile_report( out, result.report );
  if ( !o.report.empty() )
  {
    auto file = open_output( o.report );
    write_compile_report( file, result.report );
  }
  return exit_code::ok;
}

int do_eval( const Options& o, std::ostream& out )
{
  auto const g = load_graph( o.graph );
  if ( static_cast<int>( o.input.size() ) != g.p() )
  {
    throw colorsim_error( "graph expects " + std::to_string( g.p() ) + " input symbols, got " + std::to_string( o.input.size() ) );
  }
  auto const outcome = evaluate( g, o.input );
  if ( !o.transcript.empty() )
  {
    std::vector<ForcingStep> steps;
    normal_form( g.graph, pinned_lists( g, o.input ), &steps );
    auto file = open_output( o.transcript );
    write_transcript( file, steps );
  }
  switch ( outcome.kind )
  {
  case outcome_kind::unique:
    out << join( outcome.output ) << '\n';
    return exit_code::ok;
  case outcome_kind::infeasible:
    out << "INFEASIBLE\n";
    return exit_code::infeasible;
  case outcome_kind::unresolved:
    out << "UNRESOLVED (" << outcome.normal_form.total_size() << " candidate colors left)\n";
    return exit_code::unresolved;
  }
  return exit_code::unresolved;
}

int do_verify( const Options& o, std::ostream& out )
{
  VerifyReport report;
  if ( !o.gadget.empty() )
  {
    auto const g = build_named_gadget( o.gadget, o.params );
    out << g.name << '\n';
    report = verify_gadget( o.gadget, o.params, g );
  }
  else if ( !o.graph.empty() && !o.fn.empty() )
  {
    report = verify_simulates( load_graph( o.graph ), parse_function_table( read_file( o.fn ) ) );
  }
  else
  {
    throw CLI::ValidationError( "verify needs --gadget, or both --graph and --fn" );
  }
  write_report( out, report );
  return report.passed() ? exit_code::ok : exit_code::verification_failed;
}

int do_stats( const Options& o, std::ostream& out )
{
  if ( !o.gadget.empty() )
  {
    auto const g = build_named_gadget( o.gadget, o.params );
    out << g.name << '\n';
    auto const stats = graph_stats( g.graph );
    print_stats( out, stats );
    if ( o.gadget == "L" )
    {
      auto const n = static_cast<std::size_t>( o.params.n );
      auto const ok = stats.vertex_count == 4 * n - 3 && stats.edge_count == n * ( 7 * n - 11 ) / 2;
      out << "formula 4n-3=" << 4 * n - 3 << " n(7n-11)/2=" << n * ( 7 * n - 11 ) / 2 << ( ok ? " match" : " MISMATCH" ) << '\n';
      return ok ? exit_code::ok : exit_code::verification_failed;
    }
    return exit_code::ok;
  }
  if ( !o.graph.empty() )
  {
    auto const g = load_graph( o.graph );
    out << "n " << g.n << " m " << g.m << " p " << g.p() << " q " << g.q() << '\n';
    print_stats( out, graph_stats( g.graph ) );
    return exit_code::ok;
  }
  if ( !o.fn.empty() )
  {
    auto const phi = parse_function_table( read_file( o.fn ) );
    CompileOptions unlimited;
    unlimited.max_vertices = static_cast<std::size_t>( -1 );
    auto const plan = plan_compile( phi, o.colors, unlimited );
    out << "theta " << plan.theta << "\nr " << plan.r << "\nn_tilde " << plan.n_tilde << '\n';
    out << "star " << ( plan.total.star ? std::to_string( *plan.total.star ) : "none" ) << '\n';
    out << "predicted_vertices " << plan.predicted.vertex_count << '\n';
    out << "predicted_edges " << plan.predicted.edge_count << '\n';
    return exit_code::ok;
  }
  throw CLI::ValidationError( "stats needs --gadget, --graph or --fn" );
}

int do_gadget( const Options& o, std::ostream& out )
{
  auto const g = build_named_gadget( o.gadget, o.params );
  save_graph( g, o.out, o.dot );
  out << g.name << '\n';
  out << "p " << g.p() << " q " << g.q() << '\n';
  print_stats( out, graph_stats( g.graph ) );
  if ( o.trace )
  {
    out << g.trace_expression() << '\n';
  }
  return exit_code::ok;
}

} // namespace

PartialFunction parse_function_table( std::string_view text )
{
  LineReader reader{ std::string( text ) };
  std::string_view line;
  if ( !reader.next( line ) )
  {
    throw parse_error( 0, "empty function table" );
  }
  auto const header = split_fields( line );
  if ( header.size() != 6 || header[0] != "m" || header[2] != "p" || header[4] != "q" )
  {
    throw parse_error( reader.line_number(), "expected header 'm <m> p <p> q <q>'" );
  }
  auto const m = parse_int( header[1], reader.line_number() );
  auto const p = parse_int( header[3], reader.line_number() );
  auto const q = parse_int( header[5], reader.line_number() );
  if ( m < 2 || p < 0 || q < 1 )
  {
    throw parse_error( reader.line_number(), "header needs m >= 2, p >= 0, q >= 1" );
  }
  if ( checked_power( m, p ) > ( std::uint64_t{ 1 } << 24 ) )
  {
    throw parse_error( reader.line_number(), "table with m^p rows is too large" );
  }
  auto phi = PartialFunction::undefined( m, p, q );

  while ( reader.next( line ) )
  {
    auto const fields = split_fields( line );
    auto const arrow = std::find( fields.begin(), fields.end(), "->" );
    if ( arrow == fields.end() )
    {
      throw parse_error( reader.line_number(), "expected 'x1 .. xp -> y1 .. yq'" );
    }
    auto symbols = [&]( auto first, auto last, int width, const char* side ) {
      if ( last - first != width )
      {
        throw parse_error( reader.line_number(), std::string( side ) + " needs " + std::to_string( width ) + " symbols" );
      }
      Tuple t;
      for ( auto it = first; it != last; ++it )
      {
        auto const s = parse_int( *it, reader.line_number() );
        if ( s < 0 || s >= m )
        {
          throw parse_error( reader.line_number(), "symbol " + std::to_string( s ) + " outside {0.." + std::to_string( m - 1 ) + "}" );
        }
        t.push_back( s );
      }
      return t;
    };
    auto const x = symbols( fields.begin(), arrow, p, "input" );
    auto y = symbols( arrow + 1, fields.end(), q, "output" );
    if ( phi.rows[embed_index( x, m )] )
    {
      throw parse_error( reader.line_number(), "duplicate row for input (" + join( x ) + ")" );
    }
    phi.define( x, std::move( y ) );
  }
  return phi;
}

std::string serialize_function_table( const PartialFunction& phi )
{
  std::string text = "m " + std::to_string( phi.m ) + " p " + std::to_string( phi.p ) + " q " + std::to_string( phi.q ) + "\n";
  for ( std::uint64_t row = 0; row < phi.domain_size(); ++row )
  {
    if ( phi.rows[row] )
    {
      auto const x = join( phi.input_at( row ) );
      text += x + ( x.empty() ? "" : " " ) + "-> " + join( *phi.rows[row] ) + "\n";
    }
  }
  return text;
}

int run_command( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Compile partial functions into graphs whose n-colorings simulate them", "colorsim" };
  app.require_subcommand( 1 );
  Options o;

  auto* compile_cmd = app.add_subcommand( "compile", "Compile a function table into a simulating graph" );
  compile_cmd->add_option( "--fn", o.fn, "Function table (.fn)" )->required();
  compile_cmd->add_option( "--colors,-n", o.colors, "Color count n" )->required();
  compile_cmd->add_option( "--out", o.out, "Graph output (.sg)" );
  compile_cmd->add_option( "--dot", o.dot, "DOT output" );
  compile_cmd->add_option( "--report", o.report, "Also write the compile report here" );
  compile_cmd->add_option( "--max-vertices", o.max_vertices, "Refuse graphs predicted to be larger" );

  auto* eval_cmd = app.add_subcommand( "eval", "Evaluate a graph on an input by propagation" );
  eval_cmd->add_option( "--graph", o.graph, "Graph (.sg)" )->required();
  eval_cmd->add_option( "--input", o.input, "Input symbols" )->expected( 0, -1 );
  eval_cmd->add_option( "--transcript", o.transcript, "Write the forcing steps here" );

  auto* verify_cmd = app.add_subcommand( "verify", "Check a simulation with the brute-force oracle" );
  verify_cmd->add_option( "--graph", o.graph, "Graph (.sg)" );
  verify_cmd->add_option( "--fn", o.fn, "Function table (.fn) the graph should simulate" );
  verify_cmd->add_option( "--gadget", o.gadget, "Named gadget" )->check( CLI::IsMember( gadget_names() ) );
  add_gadget_options( verify_cmd, o );

  auto* stats_cmd = app.add_subcommand( "stats", "Print graph sizes" );
  stats_cmd->add_option( "--graph", o.graph, "Graph (.sg)" );
  stats_cmd->add_option( "--gadget", o.gadget, "Named gadget" )->check( CLI::IsMember( gadget_names() ) );
  stats_cmd->add_option( "--fn", o.fn, "Predict the compiled size of a function table" );
  add_gadget_options( stats_cmd, o );
  stats_cmd->add_option( "--target-colors", o.colors, "Color count for --fn" );

  auto* gadget_cmd = app.add_subcommand( "gadget", "Build a named gadget" );
  gadget_cmd->add_option( "kind", o.gadget, "Gadget name" )->required()->check( CLI::IsMember( gadget_names() ) );
  gadget_cmd->add_option( "--out", o.out, "Graph output (.sg)" );
  gadget_cmd->add_option( "--dot", o.dot, "DOT output" );
  gadget_cmd->add_flag( "--trace", o.trace, "Print the construction as an amalgam expression" );
  add_gadget_options( gadget_cmd, o );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try
  {
    if ( compile_cmd->parsed() )
      return do_compile( o, out );
    if ( eval_cmd->parsed() )
      return do_eval( o, out );
    if ( verify_cmd->parsed() )
      return do_verify( o, out );
    if ( stats_cmd->parsed() )
      return do_stats( o, out );
    return do_gadget( o, out );
  }
  catch ( const CLI::Error& e )
  {
    err << "error: " << e.what() << '\n';
  }
  catch ( const colorsim_error& e )
  {
    err << "error: " << e.what() << '\n';
  }
  return exit_code::usage;
}

} // namespace colorsim
