#include <colorsim/graph_io.hpp>

#include <colorsim/errors.hpp>

#include <algorithm>
#include <charconv>
#include <iterator>
#include <ostream>
#include <istream>
#include <sstream>

namespace colorsim
{

namespace
{

/// Buffered writer; avoids per-number stream formatting on multi-million edge graphs.
class FastWriter
{
public:
  explicit FastWriter( std::ostream& os ) : os_( os ) { buffer_.reserve( capacity ); }
  ~FastWriter() { flush(); }

  FastWriter& operator<<( std::string_view s )
  {
    buffer_.append( s );
    maybe_flush();
    return *this;
  }

  FastWriter& operator<<( std::size_t value )
  {
    char digits[24];
    auto [end, ec] = std::to_chars( digits, digits + sizeof( digits ), value );
    buffer_.append( digits, end );
    maybe_flush();
    return *this;
  }

  void flush()
  {
    os_.write( buffer_.data(), static_cast<std::streamsize>( buffer_.size() ) );
    buffer_.clear();
  }

private:
  static constexpr std::size_t capacity = 1 << 20;

  void maybe_flush()
  {
    if ( buffer_.size() >= capacity )
    {
      flush();
    }
  }

  std::ostream& os_;
  std::string buffer_;
};

std::size_t to_count( std::string_view field, std::size_t line )
{
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars( field.data(), field.data() + field.size(), value );
  if ( ec != std::errc{} || ptr != field.data() + field.size() )
  {
    throw parse_error( line, "expected a non-negative integer, got '" + std::string( field ) + "'" );
  }
  return value;
}

bool is_blank_or_comment( std::string_view line )
{
  auto const pos = line.find_first_not_of( " \t\r" );
  return pos == std::string_view::npos || line[pos] == '#';
}

} // namespace

std::vector<std::string_view> split_fields( std::string_view line )
{
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while ( pos < line.size() )
  {
    while ( pos < line.size() && ( line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' ) )
    {
      ++pos;
    }
    auto const start = pos;
    while ( pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r' )
    {
      ++pos;
    }
    if ( pos > start )
    {
      fields.push_back( line.substr( start, pos - start ) );
    }
  }
  return fields;
}

LineReader::LineReader( std::string text ) : text_( std::move( text ) ) {}

bool LineReader::next( std::string_view& line )
{
  while ( pos_ < text_.size() )
  {
    auto end = text_.find( '\n', pos_ );
    if ( end == std::string::npos )
    {
      end = text_.size();
    }
    line = std::string_view( text_ ).substr( pos_, end - pos_ );
    pos_ = end + 1;
    ++line_number_;
    if ( !is_blank_or_comment( line ) )
    {
      return true;
    }
  }
  return false;
}

void write_edge_list( std::ostream& os, const MarkedGraph& g )
{
  FastWriter out( os );
  out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << "\n";
  for ( auto const& e : g.edges() )
  {
    out << std::size_t{ e.u } << " " << std::size_t{ e.v } << "\n";
  }
  for ( auto const& [label, v] : g.marks() )
  {
    out << "mark " << label << " " << std::size_t{ v } << "\n";
  }
}

MarkedGraph parse_edge_list( LineReader& reader, std::string_view& rest, bool& has_rest )
{
  std::string_view line;
  if ( !reader.next( line ) )
  {
    throw parse_error( 0, "empty graph file" );
  }
  auto header = split_fields( line );
  if ( header.size() != 4 || header[0] != "vertices" || header[2] != "edges" )
  {
    throw parse_error( reader.line_number(), "expected header 'vertices N edges M'" );
  }
  auto const vertices = to_count( header[1], reader.line_number() );
  auto const edges = to_count( header[3], reader.line_number() );

  MarkedGraph g;
  g.reserve( vertices, edges );
  for ( std::size_t i = 0; i < vertices; ++i )
  {
    g.add_vertex();
  }
  for ( std::size_t i = 0; i < edges; ++i )
  {
    if ( !reader.next( line ) )
    {
      throw parse_error( reader.line_number(), "unexpected end of input: " + std::to_string( edges - i ) + " edges missing" );
    }
    auto fields = split_fields( line );
    if ( fields.size() != 2 )
    {
      throw parse_error( reader.line_number(), "expected 'u v'" );
    }
    auto const u = to_count( fields[0], reader.line_number() );
    auto const v = to_count( fields[1], reader.line_number() );
    if ( u >= vertices || v >= vertices )
    {
      throw parse_error( reader.line_number(), "edge endpoint out of range" );
    }
    try
    {
      if ( !g.add_edge( static_cast<VertexId>( u ), static_cast<VertexId>( v ) ) )
      {
        throw parse_error( reader.line_number(), "duplicate edge" );
      }
    }
    catch ( const graph_error& e )
    {
      throw parse_error( reader.line_number(), e.what() );
    }
  }

  has_rest = false;
  while ( reader.next( line ) )
  {
    auto fields = split_fields( line );
    if ( fields.empty() || fields[0] != "mark" )
    {
      rest = line;
      has_rest = true;
      break;
    }
    if ( fields.size() != 3 )
    {
      throw parse_error( reader.line_number(), "expected 'mark <label> <id>'" );
    }
    auto const v = to_count( fields[2], reader.line_number() );
    if ( v >= vertices )
    {
      throw parse_error( reader.line_number(), "marked vertex out of range" );
    }
    try
    {
      g.mark( static_cast<VertexId>( v ), fields[1] );
    }
    catch ( const graph_error& e )
    {
      throw parse_error( reader.line_number(), e.what() );
    }
  }
  return g;
}

MarkedGraph read_edge_list( std::istream& is )
{
  LineReader reader( std::string( std::istreambuf_iterator<char>( is ), {} ) );
  std::string_view rest;
  bool has_rest = false;
  auto g = parse_edge_list( reader, rest, has_rest );
  if ( has_rest )
  {
    throw parse_error( reader.line_number(), "unexpected line '" + std::string( rest ) + "'" );
  }
  return g;
}

void write_dot( std::ostream& os, const MarkedGraph& g, const DotAttributes& extra, std::string_view name )
{
  FastWriter out( os );
  out << "graph " << name << " {\n";
  for ( auto const& [label, v] : g.marks() )
  {
    out << "  " << std::size_t{ v } << " [label=\"" << label << "\"";
    if ( auto it = extra.find( v ); it != extra.end() )
    {
      out << ", " << it->second;
    }
    out << "];\n";
  }
  // roles on unlabeled vertices, in id order for determinism
  std::vector<VertexId> unlabeled_extra;
  for ( auto const& [v, attr] : extra )
  {
    if ( !g.label_of( v ) )
    {
      unlabeled_extra.push_back( v );
    }
  }
  std::sort( unlabeled_extra.begin(), unlabeled_extra.end() );
  for ( auto v : unlabeled_extra )
  {
    out << "  " << std::size_t{ v } << " [" << extra.at( v ) << "];\n";
  }
  for ( auto const& e : g.edges() )
  {
    out << "  " << std::size_t{ e.u } << " -- " << std::size_t{ e.v } << ";\n";
  }
  out << "}\n";
}

} // namespace colorsim
