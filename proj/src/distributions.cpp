#include <rinorm/distributions.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/erf.hpp>

namespace rinorm {

namespace
{

template < class... Ts > struct overloaded : Ts... { using Ts::operator()...; };

void
require ( const bool  cond,
          const char * msg )
{
    if ( ! cond )
        throw std::invalid_argument( msg );
}

std::string
fmt_num ( const double  x )
{
    char  buf[32];

    std::snprintf( buf, sizeof( buf ), "%g", x );
    return buf;
}

}// namespace anonymous

Distribution
Distribution::gaussian ( const double  sigma )
{
    require( std::isfinite( sigma ) && sigma > 0, "gaussian: sigma must be > 0" );
    return Distribution( Gaussian{ sigma } );
}

Distribution
Distribution::exponential ( const double  rate )
{
    require( std::isfinite( rate ) && rate > 0, "exponential: rate must be > 0" );
    return Distribution( Exponential{ rate } );
}

Distribution
Distribution::uniform ( const double  b )
{
    require( std::isfinite( b ) && b > 0, "uniform: b must be > 0" );
    return Distribution( Uniform{ b } );
}

Distribution
Distribution::two_point ( const double  value,
                          const double  prob )
{
    require( std::isfinite( value ), "two_point: value must be finite" );
    require( prob > 0 && prob <= 1, "two_point: prob must lie in (0,1]" );
    return Distribution( TwoPoint{ std::abs( value ), prob } );
}

Distribution
Distribution::scaled ( const double          scale,
                       const Distribution &  base )
{
    require( std::isfinite( scale ), "scaled: scale must be finite" );
    return Distribution( ScaledAbsBase{ std::abs( scale ), std::make_shared< const Distribution >( base ) } );
}

double
Distribution::survival ( const double  t ) const
{
    if ( t < 0 )
        return 1.0;

    return std::visit( overloaded{
        [t] ( const Gaussian & g )      { return std::erfc( t / ( g.sigma * std::numbers::sqrt2 ) ); },
        [t] ( const Exponential & e )   { return std::exp( -e.rate * t ); },
        [t] ( const Uniform & u )       { return t < u.b ? 1.0 - t / u.b : 0.0; },
        [t] ( const TwoPoint & tp )     { return t < tp.value ? tp.prob : 0.0; },
        [t] ( const ScaledAbsBase & s ) { return s.scale > 0 ? s.base->survival( t / s.scale ) : 0.0; }
    }, kind_ );
}

double
Distribution::quantile ( const double  u ) const
{
    if ( ! ( u > 0 && u < 1 ) )
        throw std::domain_error( "quantile: u must lie in (0,1)" );

    return std::visit( overloaded{
        [u] ( const Gaussian & g )      { return g.sigma * std::numbers::sqrt2 * boost::math::erfc_inv( u ); },
        [u] ( const Exponential & e )   { return -std::log( u ) / e.rate; },
        [u] ( const Uniform & un )      { return un.b * ( 1.0 - u ); },
        [u] ( const TwoPoint & tp )     { return u >= tp.prob ? 0.0 : tp.value; },
        [u] ( const ScaledAbsBase & s ) { return s.scale > 0 ? s.scale * s.base->quantile( u ) : 0.0; }
    }, kind_ );
}

std::vector< double >
Distribution::sample ( RngStream &        stream,
                       const std::size_t  count ) const
{
    if ( count == 0 )
        throw std::invalid_argument( "sample: count must be >= 1" );

    std::vector< double >  out( count );

    for ( auto &  x : out )
        x = sample( stream );

    return out;
}

bool
Distribution::is_continuous () const
{
    return std::visit( overloaded{
        [] ( const TwoPoint & )        { return false; },
        [] ( const ScaledAbsBase & s ) { return s.scale > 0 && s.base->is_continuous(); },
        [] ( const auto & )            { return true; }
    }, kind_ );
}

double
Distribution::mean () const
{
    return std::visit( overloaded{
        [] ( const Gaussian & g )      { return g.sigma * std::sqrt( 2.0 / std::numbers::pi ); },
        [] ( const Exponential & e )   { return 1.0 / e.rate; },
        [] ( const Uniform & u )       { return 0.5 * u.b; },
        [] ( const TwoPoint & tp )     { return tp.value * tp.prob; },
        [] ( const ScaledAbsBase & s ) { return s.scale * s.base->mean(); }
    }, kind_ );
}

std::string
Distribution::label () const
{
    return std::visit( overloaded{
        [] ( const Gaussian & g )      { return "gaussian(" + fmt_num( g.sigma ) + ")"; },
        [] ( const Exponential & e )   { return "exponential(" + fmt_num( e.rate ) + ")"; },
        [] ( const Uniform & u )       { return "uniform(" + fmt_num( u.b ) + ")"; },
        [] ( const TwoPoint & tp )     { return "two_point(" + fmt_num( tp.value ) + "," + fmt_num( tp.prob ) + ")"; },
        [] ( const ScaledAbsBase & s ) { return fmt_num( s.scale ) + "*" + s.base->label(); }
    }, kind_ );
}

bool
operator == ( const Distribution &  a,
              const Distribution &  b )
{
    if ( a.kind_.index() != b.kind_.index() )
        return false;

    return std::visit( overloaded{
        [&b] ( const Gaussian & g )      { return g.sigma == std::get< Gaussian >( b.kind_ ).sigma; },
        [&b] ( const Exponential & e )   { return e.rate == std::get< Exponential >( b.kind_ ).rate; },
        [&b] ( const Uniform & u )       { return u.b == std::get< Uniform >( b.kind_ ).b; },
        [&b] ( const TwoPoint & tp )
        {
            const auto &  o = std::get< TwoPoint >( b.kind_ );
            return tp.value == o.value && tp.prob == o.prob;
        },
        [&b] ( const ScaledAbsBase & s )
        {
            const auto &  o = std::get< ScaledAbsBase >( b.kind_ );
            return s.scale == o.scale && *s.base == *o.base;
        }
    }, a.kind_ );
}

double
total_survival ( std::span< const Distribution >  dists,
                 const double                     t )
{
    double  sum = 0.0;

    for ( const auto &  d : dists )
        sum += d.survival( t );

    return sum;
}

}// namespace rinorm
