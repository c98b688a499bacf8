#ifndef RINORM_REARRANGE_HPP
#define RINORM_REARRANGE_HPP
//
// Non-increasing rearrangements and the disjoint sum of a family of
// independent random variables.
//

#include <span>
#include <utility>
#include <vector>

#include <rinorm/distributions.hpp>
#include <rinorm/quantile_function.hpp>

namespace rinorm {

// descending step function on [0,1) with one piece of width 1/s per sample
QuantileFunction empirical_quantile ( std::span< const double >  samples );

// order statistic U^#(alpha): entry ceil(alpha*s) of the descending sort
double empirical_quantile_at ( std::span< const double >  samples, double  alpha );

//
// Y : [0,n] → [0,∞], the non-increasing function with
//
//     measure{ Y > s } = Σ_i P( |X_i| > s ).
//
// Identical members are grouped so that Σ costs one evaluation per
// distinct law.
//
class Disjunctification
{
public:
    explicit Disjunctification ( std::vector< Distribution >  members );

    std::size_t size () const { return members_.size(); }

    const std::vector< Distribution > & members () const { return members_; }

    // Σ(s) = Σ_i S_i(s)
    double total_survival ( double  s ) const;

    // Y(t) = inf{ s >= 0 : Σ(s) <= t }; throws for t <= 0
    double eval ( double  t ) const;

    // Y on (0,1] tabulated on the standard 2048-point mesh
    QuantileFunction restrict_unit () const;

    // Y on (0,n] using the unit mesh plus `per_unit` uniform points per unit
    QuantileFunction tabulate ( std::size_t  per_unit = 256 ) const;

    // (Y(1), ..., Y(n))
    std::vector< double > at_integers () const;

    // ∫_a^b Y, 0 <= a < b <= n
    double integral ( double  a, double  b ) const;

    // the 2048 mesh points of (0,1]: geometric on (0,1/64], uniform above
    static std::vector< double > unit_mesh ();

    static constexpr double  bisection_tol = 1e-10;

private:
    QuantileFunction tabulate_on ( const std::vector< double > &  mesh ) const;

    // ∫_0^x Y via x·Y(x) + ∫_{Y(x)}^∞ Σ
    double head_integral ( double  x ) const;

    std::vector< Distribution >                        members_;
    std::vector< std::pair< Distribution, double > >   groups_;
};

Disjunctification disjunctify ( std::span< const Distribution >  dists );

}// namespace rinorm

#endif // RINORM_REARRANGE_HPP
