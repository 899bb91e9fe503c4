#ifndef HOPFPI_PARSE_HPP
#define HOPFPI_PARSE_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "hopfpi/identities.hpp"

namespace hopfpi {

/// What names mean while parsing an expression.
///
/// Grammar: sums and differences of products (`*`), integer powers (`^`),
/// division by nonzero constants (`/`), parentheses and integers. Names:
///   q, z                   the primitive root of the active field
///   a, c, c[i], d[i,j]     structure parameters, each optionally followed by
///                          primes: c', d[1,2]''
///   t[i,<h>]               t-variables, linear in the H-expression h
///   X[i,<h>]               symbols of T(X_H), linear in h
///   E, X, Y, Y1..Yn        X[1,1], X[1,x], X[1,y], X[1,y_k] in T(X_H)
///   generator names        x, y, y1, u, u1, ...
/// In a tensor product `@` multiplies and switches name lookup to the right
/// factor until the end of the current summand.
struct ParseContext {
  unsigned order = 1;
  /// Algebra the result lives in; null parses a scalar CommPoly.
  AlgebraPtr algebra;
  /// Resolves t[i,<h>] and the basis inside X[i,<h>].
  HopfPtr hopf;
  /// Enables X[i,<h>] and the E/X/Y aliases.
  const FreeAlgebra* free = nullptr;
  /// Powers whose result would exceed this word length are rejected.
  std::size_t max_degree = 256;
};

ParseContext scalar_context(unsigned order, HopfPtr hopf = nullptr);
ParseContext algebra_context(AlgebraPtr algebra, HopfPtr hopf = nullptr);
ParseContext free_context(const FreeAlgebra& free);

/// Throws ParseError with the offending position.
AlgElement parse_element(std::string_view text, const ParseContext& context);
CommPoly parse_poly(std::string_view text, const ParseContext& context);

/// `taft:<n>`, `en:<n>`, `trivial`.
HopfPtr parse_hopf_spec(std::string_view text);

/// `taft:3;a=1;c=sym`, `en:2;a=1;c1=0;c2=sym';d12=1+z`. Parameters not
/// mentioned are symbolic. `d<i><i>` is rejected since d_ii = 2 c_i.
GaloisObjectSpec parse_object_spec(std::string_view text);

/// Resolves a catalog name against `free` and the parameters of `spec`:
///   taft_pc, en_ci:<i>, en_dij:<i>,<j>        catalog identities
///   coinv_P:<h>, coinv_Q:<h>,<h'>             the coinvariants P_h, Q_{h,h'}
///   comm_P:<h>;<z>, comm_Q:<h>,<h'>;<z>       their commutators with X_2^z
/// where <h>, <h'>, <z> are expressions in H. Returns nullopt for names that
/// are not of these forms; throws ParseError on malformed arguments.
std::optional<NamedIdentity> find_identity(std::string_view name, const FreeAlgebra& free,
                                           const GaloisObjectSpec& spec);

}  // namespace hopfpi

#endif  // HOPFPI_PARSE_HPP
