#include <rinorm/norms.hpp>

#include <array>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace rinorm {

namespace
{

template < class... Ts > struct overloaded : Ts... { using Ts::operator()...; };

// 8-point Gauss-Legendre on [-1,1]
constexpr std::array< double, 4 >  gl_x = { 0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363 };
constexpr std::array< double, 4 >  gl_w = { 0.3626837833783620, 0.3137066458778873,
                                            0.2223810344533745, 0.1012285362903763 };

template < typename func_t >
double
gauss_legendre ( const func_t &  g,
                 const double    a,
                 const double    b )
{
    const double  mid  = 0.5 * ( a + b );
    const double  half = 0.5 * ( b - a );
    double        sum  = 0.0;

    for ( std::size_t  k = 0; k < gl_x.size(); ++k )
        sum += gl_w[k] * ( g( mid - half * gl_x[k] ) + g( mid + half * gl_x[k] ) );

    return half * sum;
}

// value of an affine piece at t
double
piece_value ( const QuantileFunction::piece_t &  p,
              const double                       t )
{
    return p.v0 + ( p.v1 - p.v0 ) * ( t - p.t0 ) / p.length();
}

std::string
fmt_num ( const double  x )
{
    char  buf[32];

    std::snprintf( buf, sizeof( buf ), "%g", x );
    return buf;
}

// ∫_0^1 f^p for f already restricted to [0,1] and scaled into [0,1]
double
lp_power_integral ( const QuantileFunction &  f,
                    const double              p,
                    const double              inv_scale )
{
    double  sum = 0.0;

    for ( std::size_t  j = 0; j < f.num_pieces(); ++j )
    {
        const auto    pc = f.piece( j );
        const double  v0 = pc.v0 * inv_scale;
        const double  v1 = pc.v1 * inv_scale;

        if ( pc.is_constant() )
            sum += std::pow( v0, p ) * pc.length();
        else if ( v0 - v1 > 1e-3 * v0 )
            sum += pc.length() * ( std::pow( v0, p + 1 ) - std::pow( v1, p + 1 ) ) / ( ( p + 1 ) * ( v0 - v1 ) );
        else
            sum += gauss_legendre( [&] ( const double t ) { return std::pow( piece_value( pc, t ) * inv_scale, p ); },
                                   pc.t0, pc.t1 );
    }// for

    return sum;
}

// (q/p) ∫_0^1 t^{q/p-1} f^q dt, evaluated in s = t^{q/p}
double
lorentz_power_integral ( const QuantileFunction &  f,
                         const double              p,
                         const double              q,
                         const double              inv_scale )
{
    const double  alpha = q / p;
    double        sum   = 0.0;

    for ( std::size_t  j = 0; j < f.num_pieces(); ++j )
    {
        const auto    pc = f.piece( j );
        const double  s0 = std::pow( pc.t0, alpha );
        const double  s1 = std::pow( pc.t1, alpha );

        if ( pc.is_constant() )
            sum += std::pow( pc.v0 * inv_scale, q ) * ( s1 - s0 );
        else
            sum += gauss_legendre( [&] ( const double s )
                                   {
                                       return std::pow( piece_value( pc, std::pow( s, 1.0 / alpha ) ) * inv_scale, q );
                                   }, s0, s1 );
    }// for

    return sum;
}

double
modular_scaled ( const OrliczFunction &    phi,
                 const QuantileFunction &  f,
                 const double              inv_lambda )
{
    double  sum = 0.0;

    for ( std::size_t  j = 0; j < f.num_pieces(); ++j )
    {
        const auto  pc = f.piece( j );

        if ( pc.is_constant() )
            sum += phi( pc.v0 * inv_lambda ) * pc.length();
        else
            sum += gauss_legendre( [&] ( const double t ) { return phi( piece_value( pc, t ) * inv_lambda ); },
                                   pc.t0, pc.t1 );
    }// for

    return sum;
}

}// namespace anonymous

////////////////////////////////////////////////////////////////////////////////
//
// specs
//
////////////////////////////////////////////////////////////////////////////////

RiNormSpec
RiNormSpec::lp ( const double  p )
{
    if ( ! ( p >= 1 ) || ! std::isfinite( p ) )
        throw std::invalid_argument( "Lp: need 1 <= p < inf" );

    return RiNormSpec{ Lp{ p }, p };
}

RiNormSpec
RiNormSpec::lorentz ( const double  p,
                      const double  q )
{
    if ( ! ( p >= 1 ) || ! ( q >= 1 ) || ! std::isfinite( p ) || ! std::isfinite( q ) )
        throw std::invalid_argument( "Lorentz: need p, q >= 1" );

    return RiNormSpec{ Lorentz{ p, q }, std::max( p, q ) };
}

RiNormSpec
RiNormSpec::orlicz ( OrliczFunction  phi,
                     const double    embed_exponent )
{
    return RiNormSpec{ Orlicz{ std::move( phi ) }, embed_exponent };
}

std::string
RiNormSpec::label () const
{
    return std::visit( overloaded{
        [] ( const Lp & m )      { return "L" + fmt_num( m.p ); },
        [] ( const Lorentz & m ) { return "L(" + fmt_num( m.p ) + "," + fmt_num( m.q ) + ")"; },
        [] ( const Orlicz & m )  { return "L_{" + m.phi.label() + "}"; }
    }, variant );
}

SeqNormSpec
SeqNormSpec::lp_norm ( const double  p )
{
    if ( ! ( p >= 1 ) || ! std::isfinite( p ) )
        throw std::invalid_argument( "lp: need 1 <= p < inf" );

    return SeqNormSpec{ lp{ p } };
}

SeqNormSpec SeqNormSpec::sup () { return SeqNormSpec{ linf{} }; }

SeqNormSpec
SeqNormSpec::top_m ( const std::size_t  m )
{
    if ( m < 1 )
        throw std::invalid_argument( "top_m: need m >= 1" );

    return SeqNormSpec{ TopM{ m } };
}

SeqNormSpec
SeqNormSpec::orlicz ( OrliczFunction  psi )
{
    return SeqNormSpec{ OrliczSeq{ std::move( psi ) } };
}

std::string
SeqNormSpec::label () const
{
    return std::visit( overloaded{
        [] ( const lp & n )        { return "l" + fmt_num( n.p ); },
        [] ( const linf & )        { return std::string( "linf" ); },
        [] ( const TopM & n )      { return "k" + std::to_string( n.m ); },
        [] ( const OrliczSeq & n ) { return "l_{" + n.psi.label() + "}"; }
    }, variant );
}

////////////////////////////////////////////////////////////////////////////////
//
// Luxemburg norms
//
////////////////////////////////////////////////////////////////////////////////

double
modular ( const OrliczFunction &    phi,
          const QuantileFunction &  f )
{
    return modular_scaled( phi, f, 1.0 );
}

double
luxemburg ( const OrliczFunction &    phi,
            const QuantileFunction &  f )
{
    return luxemburg_gauge( [&] ( const double lambda ) { return modular_scaled( phi, f, 1.0 / lambda ); },
                            f( 0.0 ) );
}

double
luxemburg ( const OrliczFunction &     psi,
            std::span< const double >  x )
{
    std::vector< double >  mag;

    mag.reserve( x.size() );

    for ( const auto  v : x )
        if ( v != 0.0 )
            mag.push_back( std::abs( v ) );

    if ( mag.empty() )
        return 0.0;

    const double  scale = *std::max_element( mag.begin(), mag.end() );

    return luxemburg_gauge( [&] ( const double lambda )
                            {
                                const double  inv = 1.0 / lambda;
                                double        sum = 0.0;

                                for ( const auto  v : mag )
                                    sum += psi( v * inv );

                                return sum;
                            }, scale );
}

////////////////////////////////////////////////////////////////////////////////
//
// evaluation
//
////////////////////////////////////////////////////////////////////////////////

double
ri_eval ( const RiNormSpec &        M,
          const QuantileFunction &  f )
{
    const auto    g     = f.restricted( 1.0 );
    const double  scale = g( 0.0 );

    if ( scale == 0.0 )
        return 0.0;

    if ( std::isinf( scale ) )
        return scale;

    return std::visit( overloaded{
        [&] ( const RiNormSpec::Lp & m )
        {
            return scale * std::pow( lp_power_integral( g, m.p, 1.0 / scale ), 1.0 / m.p );
        },
        [&] ( const RiNormSpec::Lorentz & m )
        {
            return scale * std::pow( lorentz_power_integral( g, m.p, m.q, 1.0 / scale ), 1.0 / m.q );
        },
        [&] ( const RiNormSpec::Orlicz & m )
        {
            return luxemburg( m.phi, g );
        }
    }, M.variant );
}

std::vector< double >
decreasing_rearrangement ( std::span< const double >  x )
{
    std::vector< double >  v( x.size() );

    std::transform( x.begin(), x.end(), v.begin(), [] ( const double a ) { return std::abs( a ); } );
    std::sort( v.begin(), v.end(), std::greater<>() );

    return v;
}

double
seq_eval ( const SeqNormSpec &        N,
           std::span< const double >  x )
{
    if ( x.empty() )
        return 0.0;

    return std::visit( overloaded{
        [&] ( const SeqNormSpec::lp & n )
        {
            const auto  v = decreasing_rearrangement( x );

            if ( n.p == 1.0 )
                return std::accumulate( v.begin(), v.end(), 0.0 );

            const double  scale = v.front();

            if ( scale == 0.0 )
                return 0.0;

            double  sum = 0.0;

            for ( const auto  a : v )
                sum += std::pow( a / scale, n.p );

            return scale * std::pow( sum, 1.0 / n.p );
        },
        [&] ( const SeqNormSpec::linf & )
        {
            double  mx = 0.0;

            for ( const auto  a : x )
                mx = std::max( mx, std::abs( a ) );

            return mx;
        },
        [&] ( const SeqNormSpec::TopM & n )
        {
            std::vector< double >  v( x.size() );

            std::transform( x.begin(), x.end(), v.begin(), [] ( const double a ) { return std::abs( a ); } );

            const auto  m = std::min( n.m, v.size() );

            // summed in descending order, matching lp(1) on the full sort
            std::partial_sort( v.begin(), v.begin() + m, v.end(), std::greater<>() );

            return std::accumulate( v.begin(), v.begin() + m, 0.0 );
        },
        [&] ( const SeqNormSpec::OrliczSeq & n )
        {
            return luxemburg( n.psi, x );
        }
    }, N.variant );
}

namespace
{

std::size_t
sequence_length ( const PFunctional &       P,
                  const QuantileFunction &  f )
{
    return P.n > 0 ? P.n : std::size_t( std::ceil( f.domain_length() - 1e-12 ) );
}

}// namespace anonymous

double
p_eval ( const PFunctional &       P,
         const QuantileFunction &  f )
{
    const auto             n = sequence_length( P, f );
    std::vector< double >  seq( n );

    for ( std::size_t  i = 0; i < n; ++i )
        seq[i] = f( double( i + 1 ) );

    return ri_eval( P.M, f ) + seq_eval( P.N, seq );
}

double
p_prime_eval ( const PFunctional &       P,
               const QuantileFunction &  f )
{
    const auto             n = sequence_length( P, f );
    std::vector< double >  seq( n );

    for ( std::size_t  i = 0; i < n; ++i )
        seq[i] = f.integral( double( i ), double( i + 1 ) );

    return ri_eval( P.M, f ) + seq_eval( P.N, seq );
}

std::pair< double, double >
abel_expand ( std::span< const double >  x,
              std::span< const double >  y )
{
    if ( x.size() != y.size() )
        throw std::invalid_argument( "abel_expand: length mismatch" );

    const auto  xs = decreasing_rearrangement( x );
    const auto  ys = decreasing_rearrangement( y );
    const auto  n  = xs.size();

    double  direct = 0.0;
    double  abel   = 0.0;
    double  k_m    = 0.0;   // ‖x‖_{k_m}

    for ( std::size_t  m = 0; m < n; ++m )
    {
        direct += xs[m] * ys[m];
        k_m    += xs[m];

        const double  y_next = ( m + 1 < n ? ys[m+1] : 0.0 );

        abel += ( ys[m] - y_next ) * k_m;
    }// for

    return { direct, abel };
}

}// namespace rinorm
