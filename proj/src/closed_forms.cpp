#include "kirchhoff/closed_forms.hpp"

namespace kirchhoff {

template InvariantTriple<double> subdivision_closed_forms<double>(const ClosedFormInput<double>&);
template InvariantTriple<Rational> subdivision_closed_forms<Rational>(
    const ClosedFormInput<Rational>&);
template InvariantTriple<double> triangulation_closed_forms<double>(
    const ClosedFormInput<double>&);
template InvariantTriple<Rational> triangulation_closed_forms<Rational>(
    const ClosedFormInput<Rational>&);
template InvariantTriple<double> st_comparison<double>(const InvariantTriple<double>&,
                                                       std::int64_t, std::int64_t);
template InvariantTriple<Rational> st_comparison<Rational>(const InvariantTriple<Rational>&,
                                                           std::int64_t, std::int64_t);
template InvariantTriple<double> iterated_subdivision_closed_forms<double>(
    const ClosedFormInput<double>&, int);
template InvariantTriple<Rational> iterated_subdivision_closed_forms<Rational>(
    const ClosedFormInput<Rational>&, int);
template InvariantTriple<double> iterated_triangulation_closed_forms<double>(
    const ClosedFormInput<double>&, int);
template InvariantTriple<Rational> iterated_triangulation_closed_forms<Rational>(
    const ClosedFormInput<Rational>&, int);

}  // namespace kirchhoff
