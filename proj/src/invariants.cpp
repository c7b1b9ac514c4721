#include "kirchhoff/invariants.hpp"

namespace kirchhoff {

// Explicit instantiations for the two supported scalars keep the heavy
// template work out of every consumer translation unit.
template InvariantTriple<double> compute_invariants<double>(const Graph&,
                                                            const SquareMatrix<double>&);
template InvariantTriple<Rational> compute_invariants<Rational>(const Graph&,
                                                                const SquareMatrix<Rational>&);

}  // namespace kirchhoff
