#ifndef RINORM_DISTRIBUTIONS_HPP
#define RINORM_DISTRIBUTIONS_HPP
//
// Analytic models of a single random variable X, always consumed through |X|.
//

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <rinorm/random.hpp>

namespace rinorm {

struct Gaussian     { double sigma = 1.0; };
struct Exponential  { double rate  = 1.0; };
struct Uniform      { double b     = 1.0; };
// X = value with probability prob, 0 otherwise.
struct TwoPoint     { double value = 1.0; double prob = 1.0; };

class Distribution;

// a * |base|
struct ScaledAbsBase
{
    double                               scale = 1.0;
    std::shared_ptr< const Distribution > base;
};

///
/// Immutable value type describing the law of |X|.
///
/// survival(t) = P(|X| > t), quantile(u) = inf{ t >= 0 : survival(t) <= u }.
/// Sampling is by inverse transform so that one uniform draw from the
/// stream produces exactly one sample.
///
class Distribution
{
public:
    using kind_t = std::variant< Gaussian, Exponential, Uniform, TwoPoint, ScaledAbsBase >;

    static Distribution gaussian    ( double sigma );
    static Distribution exponential ( double rate );
    static Distribution uniform     ( double b );
    static Distribution two_point   ( double value, double prob );
    static Distribution scaled      ( double scale, const Distribution & base );

    double survival ( double t ) const;
    double quantile ( double u ) const;

    double sample ( RngStream & stream ) const { return quantile( stream.uniform() ); }
    std::vector< double > sample ( RngStream & stream, std::size_t count ) const;

    // true for kinds whose survival function has no atoms
    bool is_continuous () const;

    // E|X|, closed form
    double mean () const;

    const kind_t & kind () const { return kind_; }
    std::string    label () const;

    friend bool operator == ( const Distribution & a, const Distribution & b );

private:
    explicit Distribution ( kind_t k ) : kind_( std::move( k ) ) {}

    kind_t kind_;
};

// sum of survival functions, the measure of { Y > t } for the disjoint sum
double total_survival ( std::span< const Distribution > dists, double t );

//
// Generalized inverse of a non-increasing function S by bisection:
// returns inf{ t >= 0 : S(t) <= level } to absolute tolerance `tol`
// (relative below 1). The bracket is grown over powers of two, which
// keeps the result monotone in `level` for a fixed S.
//
template < typename survival_t >
double
invert_survival ( const survival_t &  S,
                  const double        level,
                  const double        tol = 1e-12 )
{
    if ( S( 0.0 ) <= level )
        return 0.0;

    double  lo = 0.0;
    double  hi = 1.0;

    while ( S( hi ) > level )
    {
        lo  = hi;
        hi *= 2.0;

        if ( hi > 1e300 )
            return hi;
    }// while

    while ( hi - lo > tol * std::min( 1.0, hi ) )
    {
        const double  mid = 0.5 * ( lo + hi );

        if ( mid <= lo || mid >= hi )
            break;

        if ( S( mid ) > level ) lo = mid;
        else                    hi = mid;
    }// while

    return hi;
}

}// namespace rinorm

#endif // RINORM_DISTRIBUTIONS_HPP
