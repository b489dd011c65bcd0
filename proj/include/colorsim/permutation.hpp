#pragma once

#include <utility>
#include <vector>

namespace colorsim
{

/// A bijection on {0..m-1}.
class Permutation
{
public:
  explicit Permutation( std::vector<int> images );

  static Permutation identity( int m );
  static Permutation transposition( int m, int i, int j );
  /// i -> i + shift (mod m); shift = +1 is cs+, -1 is cs-.
  static Permutation cyclic_shift( int m, int shift );

  int size() const { return static_cast<int>( images_.size() ); }
  int operator()( int i ) const { return images_.at( i ); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (this then other)(i) = other(this(i)).
  Permutation then( const Permutation& other ) const;

  /// Number of transpositions in a minimal presentation: sum over cycles of (length - 1).
  int transposition_count() const;

  friend bool operator==( const Permutation&, const Permutation& ) = default;

private:
  std::vector<int> images_;
};

/*! \brief Splits a permutation into transpositions applied left to right.
 *
 * Cycles are visited by ascending minimum element; the cycle (c0 c1 ... c_{k-1})
 * with c0 -> c1 -> ... -> c0 yields (c0,c1), (c0,c2), ..., (c0,c_{k-1}).
 */
std::vector<std::pair<int, int>> perm_to_transpositions( const Permutation& pi );

} // namespace colorsim
