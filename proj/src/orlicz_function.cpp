#include <rinorm/orlicz_function.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rinorm {

OrliczFunction
OrliczFunction::power ( const double  p )
{
    if ( ! ( p >= 1 ) || ! std::isfinite( p ) )
        throw std::invalid_argument( "power: need p >= 1" );

    char  buf[48];

    std::snprintf( buf, sizeof( buf ), "power:%g", p );

    if ( p == 1.0 ) return OrliczFunction( [] ( const double x ) { return x; }, buf, true );
    if ( p == 2.0 ) return OrliczFunction( [] ( const double x ) { return x * x; }, buf, true );

    return OrliczFunction( [p] ( const double x ) { return std::pow( x, p ); }, buf, true );
}

OrliczFunction
OrliczFunction::exp_gauss ()
{
    // not convex near 0; only used through modular sums
    return OrliczFunction( [] ( const double x ) { return std::exp( 1.0 - 1.0 / ( x * x ) ); },
                           "exp_gauss", false );
}

}// namespace rinorm
