#include "kirchhoff/lifting.hpp"

namespace kirchhoff {

template LiftedResistance<double> lift_subdivision<double>(const Graph&,
                                                           const SquareMatrix<double>&,
                                                           Parallelism);
template LiftedResistance<Rational> lift_subdivision<Rational>(const Graph&,
                                                               const SquareMatrix<Rational>&,
                                                               Parallelism);
template LiftedResistance<double> lift_triangulation<double>(const Graph&,
                                                             const SquareMatrix<double>&,
                                                             Parallelism);
template LiftedResistance<Rational> lift_triangulation<Rational>(const Graph&,
                                                                 const SquareMatrix<Rational>&,
                                                                 Parallelism);
template std::array<double, 3> partial_sums_subdivision<double>(const Graph&,
                                                                const LiftedResistance<double>&);
template std::array<Rational, 3> partial_sums_subdivision<Rational>(
    const Graph&, const LiftedResistance<Rational>&);

}  // namespace kirchhoff
