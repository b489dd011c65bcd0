#pragma once

#include <colorsim/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace colorsim
{

/*! \brief Writes the edge-list text format.
 *
 * \verbatim
 * vertices N edges M
 * u v          (M lines, creation order)
 * mark <label> <id>   (ascending id)
 * \endverbatim
 * Output is streamed and byte-deterministic for a given graph.
 */
void write_edge_list( std::ostream& os, const MarkedGraph& g );

MarkedGraph read_edge_list( std::istream& is );

/// Line cursor over a whole text buffer; lets formats that extend the edge list keep parsing after it.
class LineReader
{
public:
  explicit LineReader( std::string text );

  bool next( std::string_view& line );
  std::size_t line_number() const { return line_number_; }

private:
  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_number_ = 0;
};

/// Parses header, edges and marks; stops at (and hands back) the first line that is not a mark.
/// Returns false in `has_rest` when the input is exhausted.
MarkedGraph parse_edge_list( LineReader& reader, std::string_view& rest, bool& has_rest );

/// Extra per-vertex DOT attributes, e.g. role highlighting.
using DotAttributes = std::unordered_map<VertexId, std::string>;

void write_dot( std::ostream& os, const MarkedGraph& g, const DotAttributes& extra = {},
                std::string_view name = "G" );

/// Splits on ASCII whitespace.
std::vector<std::string_view> split_fields( std::string_view line );

} // namespace colorsim
