#ifndef RINORM_QUADRATURE_HPP
#define RINORM_QUADRATURE_HPP

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rinorm::quad {

namespace detail
{

// one Gauss-Kronrod 7/15 rule on [a,b]; the rule runs on [-1,1] so the
// error estimate comes back in the units of the integral
template < typename func_t >
double
gk15 ( const func_t &  f,
       const double    a,
       const double    b,
       double &        err )
{
    const double  mid   = 0.5 * ( a + b );
    const double  scale = 0.5 * ( b - a );

    auto  g = [&] ( const double x ) { return scale * f( mid + scale * x ); };

    return boost::math::quadrature::gauss_kronrod< double, 15 >::integrate( g, -1.0, 1.0, 0, 0.0, &err );
}

template < typename func_t >
double
adapt ( const func_t &  f,
        const double    a,
        const double    b,
        const double    est,
        const double    err,
        const double    abs_tol,
        const unsigned  depth )
{
    if ( err <= abs_tol || depth == 0 || ! std::isfinite( est ) )
        return est;

    const double  mid = 0.5 * ( a + b );

    if ( ! ( a < mid && mid < b ) )
        return est;

    double        err_l = 0.0, err_r = 0.0;
    const double  est_l = gk15( f, a, mid, err_l );
    const double  est_r = gk15( f, mid, b, err_r );

    return adapt( f, a, mid, est_l, err_l, 0.5 * abs_tol, depth - 1 ) +
           adapt( f, mid, b, est_r, err_r, 0.5 * abs_tol, depth - 1 );
}

}// namespace detail

// adaptive Gauss-Kronrod 7/15 on a finite interval, relative tolerance
template < typename func_t >
double
integrate ( const func_t &  f,
            const double    a,
            const double    b,
            const double    rel_tol   = 1e-8,
            const unsigned  max_depth = 30 )
{
    if ( ! ( a < b ) )
        return 0.0;

    double        err = 0.0;
    const double  est = detail::gk15( f, a, b, err );

    return detail::adapt( f, a, b, est, err, rel_tol * std::abs( est ), max_depth );
}

//
// ∫_a^∞ f for a non-negative, non-increasing f, summed over windows of
// doubling width until the remaining tail is negligible
//
template < typename func_t >
double
integrate_tail ( const func_t &  f,
                 const double    a,
                 const double    rel_tol = 1e-8 )
{
    double  sum   = 0.0;
    double  lo    = a;
    double  width = 1.0;

    for ( int  k = 0; k < 200; ++k )
    {
        const double  hi   = lo + width;
        const double  f_hi = f( hi );

        if ( f_hi == 0.0 )
        {
            // support ends inside the window, locate it so no node misses it
            double  a0 = lo, b0 = hi;

            for ( int  j = 0; j < 60; ++j )
            {
                const double  m = 0.5 * ( a0 + b0 );

                if ( m <= a0 || m >= b0 )
                    break;

                if ( f( m ) > 0.0 ) a0 = m;
                else                b0 = m;
            }// for

            sum += integrate( f, lo, b0, rel_tol );
            break;
        }// if

        sum += integrate( f, lo, hi, rel_tol );

        // light tails only: the remainder is dominated by f(hi)·hi
        if ( f_hi * ( hi + 1.0 ) <= 1e-3 * rel_tol * sum )
            break;

        lo     = hi;
        width *= 2.0;
    }// for

    return sum;
}

}// namespace rinorm::quad

#endif // RINORM_QUADRATURE_HPP
