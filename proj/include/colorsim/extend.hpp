#pragma once

#include <colorsim/function.hpp>
#include <colorsim/permutation.hpp>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace colorsim
{

struct ExtensionSpec
{
  /// Extended alphabet size.
  int m_tilde = 2;
  /// Tuple width.
  int r = 2;
  /// Padding symbol.
  int s0 = 0;
};

/// m^p <= m_tilde^(r-q), evaluated exactly in integers.
bool extension_feasible( const PartialFunction& phi, const ExtensionSpec& spec );

/// A bijection on the tuple indices {0..m_tilde^r - 1} (little-endian, see embed_index).
struct BigPermutation
{
  int m_tilde = 0;
  int r = 0;
  std::vector<std::uint64_t> images;

  std::uint64_t size() const { return images.size(); }
  Tuple operator()( const Tuple& x ) const;
  bool is_bijection() const;
  /// Throws when the size does not fit a Permutation.
  Permutation to_permutation() const;
};

/*! \brief A permutation of S~^r with pi(x, s0, ..., s0) = (phi(x), pad_x) wherever phi is defined.
 *
 * Points of one image class b receive the pads of S~^(r-q) in lexicographic order
 * (ranked by input index); all remaining sources go to the remaining targets in
 * ascending index order. Undefined points of phi impose no constraint.
 */
BigPermutation invertible_extension( const PartialFunction& phi, const ExtensionSpec& spec );

/// One "index image" line per element.
void write_permutation_table( std::ostream& os, const BigPermutation& pi );

} // namespace colorsim
