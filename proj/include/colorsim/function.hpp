#pragma once

#include <colorsim/sim_graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace colorsim
{

/// base^exponent, throws when the result does not fit into 62 bits.
std::uint64_t checked_power( std::uint64_t base, int exponent );

/// Little-endian positional index: sum_t tuple[t] * n^t. Throws when an entry is outside {0..n-1}.
std::uint64_t embed_index( const Tuple& tuple, int n );
std::uint64_t embed_index( const Tuple& tuple, int n, int r );

/// Inverse of embed_index: the r base-n digits of `index`, least significant first.
Tuple digits( std::uint64_t index, int n, int r );

/*! \brief A partial function S^p -> S^q stored as a dense table.
 *
 * Row `i` holds the image of digits(i, m, p), or nothing where the function is undefined.
 */
struct PartialFunction
{
  int m = 2;
  int p = 1;
  int q = 1;
  std::vector<std::optional<Tuple>> rows;

  /// The nowhere-defined function.
  static PartialFunction undefined( int m, int p, int q );
  static PartialFunction tabulate( int m, int p, int q, const std::function<std::optional<Tuple>( const Tuple& )>& f );

  std::uint64_t domain_size() const { return rows.size(); }
  Tuple input_at( std::uint64_t row ) const { return digits( row, m, p ); }

  /// Image of `x`; nothing when undefined or when some entry of x is outside S.
  std::optional<Tuple> operator()( const Tuple& x ) const;
  void define( const Tuple& x, Tuple y );
  void undefine( const Tuple& x );

  bool is_total() const;
  std::size_t defined_count() const;

  /// Throws extension_error when the table shape or an entry is out of range.
  void validate() const;

  friend bool operator==( const PartialFunction&, const PartialFunction& ) = default;
};

} // namespace colorsim
