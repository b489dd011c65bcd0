#pragma once

#include <stdexcept>
#include <string>

namespace colorsim
{

struct colorsim_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Violations of the marked-graph calculus: duplicate labels, self-loops from identification.
struct graph_error : colorsim_error
{
  using colorsim_error::colorsim_error;
};

/// Invalid gadget parameters or inconsistent wiring.
struct gadget_error : colorsim_error
{
  using colorsim_error::colorsim_error;
};

struct extension_error : colorsim_error
{
  using colorsim_error::colorsim_error;
};

struct compile_error : colorsim_error
{
  using colorsim_error::colorsim_error;
};

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
struct parse_error : colorsim_error
{
  parse_error( std::size_t line, const std::string& what )
      : colorsim_error( line == 0 ? what : "line " + std::to_string( line ) + ": " + what ),
        line( line )
  {
  }

  std::size_t line;
};

} // namespace colorsim
