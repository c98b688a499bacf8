#include <rinorm/orlicz.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <rinorm/quadrature.hpp>

namespace rinorm {

namespace
{

template < class... Ts > struct overloaded : Ts... { using Ts::operator()...; };

// lower end of the quantile variable for unbounded ξ
constexpr double  u_floor       = 1e-10;
constexpr double  lambda_tol    = 1e-7;
constexpr double  divergent_sum = 1e12;

OrliczFunction
parse_simple ( const std::string &  name )
{
    if ( name == "exp_gauss" )
        return OrliczFunction::exp_gauss();

    if ( name.rfind( "power:", 0 ) == 0 )
        return OrliczFunction::power( std::stod( name.substr( 6 ) ) );

    if ( name.rfind( "theta_top_m:", 0 ) == 0 )
        return theta_top_m( std::stoul( name.substr( 12 ) ) );

    throw std::invalid_argument( "unknown Orlicz function '" + name + "'" );
}

}// namespace anonymous

OrliczFunction
OrliczFunction::parse ( const std::string &  name )
{
    if ( name.rfind( "spliced:", 0 ) == 0 )
    {
        const auto  rest  = name.substr( 8 );
        const auto  comma = rest.find( ',' );

        if ( comma == std::string::npos )
            throw std::invalid_argument( "spliced: expected 'spliced:<phi>,<psi>'" );

        return make_theta( parse_simple( rest.substr( 0, comma ) ), parse_simple( rest.substr( comma + 1 ) ) );
    }// if

    try
    {
        return parse_simple( name );
    }// try
    catch ( const std::logic_error & )
    {
        throw std::invalid_argument( "unknown Orlicz function '" + name + "'" );
    }// catch
}

OrliczFunction
make_theta ( const OrliczFunction &  phi,
             const OrliczFunction &  psi )
{
    if ( std::abs( phi( 1.0 ) - 1.0 ) > 1e-9 || std::abs( psi( 1.0 ) - 1.0 ) > 1e-9 )
        throw std::invalid_argument( "Φ(1)=Ψ(1)=1 required" );

    return OrliczFunction( [phi, psi] ( const double x ) { return x <= 1.0 ? psi( x ) : phi( x ); },
                           "spliced:" + phi.label() + "," + psi.label(),
                           false );
}

OrliczFunction
theta_for ( const RiNormSpec &   M,
            const SeqNormSpec &  N )
{
    const auto  phi = std::visit( overloaded{
        [] ( const RiNormSpec::Lp & m )     { return OrliczFunction::power( m.p ); },
        [] ( const RiNormSpec::Orlicz & m ) { return m.phi; },
        [] ( const RiNormSpec::Lorentz & ) -> OrliczFunction
        {
            throw std::invalid_argument( "theta_for: Lorentz M is not an Orlicz space" );
        }
    }, M.variant );

    const auto  psi = std::visit( overloaded{
        [] ( const SeqNormSpec::lp & n )        { return OrliczFunction::power( n.p ); },
        [] ( const SeqNormSpec::OrliczSeq & n ) { return n.psi; },
        [] ( const auto & ) -> OrliczFunction
        {
            throw std::invalid_argument( "theta_for: N is not an Orlicz sequence space" );
        }
    }, N.variant );

    return make_theta( phi, psi );
}

OrliczFunction
tilde ( const OrliczFunction &  theta )
{
    if ( theta( 0.0 ) != 0.0 )
        throw std::invalid_argument( "tilde: Θ(0) must be 0" );

    // Θ(t)/t non-decreasing on a log grid over [1e-3, 1e3]
    double  prev = 0.0;

    for ( int  k = 0; k < 1000; ++k )
    {
        const double  t     = std::pow( 10.0, -3.0 + 6.0 * k / 999.0 );
        const double  ratio = theta( t ) / t;

        if ( ratio < prev * ( 1.0 - 1e-12 ) )
            throw std::invalid_argument( "tilde: Θ(x)/x must be non-decreasing" );

        prev = ratio;
    }// for

    auto  integrand = [theta] ( const double t ) { return theta( t ) / t; };

    return OrliczFunction( [integrand] ( const double x )
                           {
                               // split at the splice point
                               if ( x <= 1.0 )
                                   return quad::integrate( integrand, 0.0, x, 1e-8 );

                               return quad::integrate( integrand, 0.0, 1.0, 1e-8 ) +
                                      quad::integrate( integrand, 1.0, x, 1e-8 );
                           },
                           "tilde(" + theta.label() + ")",
                           true );
}

OrliczFunction
theta_top_m ( const std::size_t  m )
{
    if ( m < 1 )
        throw std::invalid_argument( "theta_top_m: need m >= 1" );

    const double  shift = 1.0 / double( m );

    return OrliczFunction( [shift] ( const double x ) { return std::max( x - shift, 0.0 ); },
                           "theta_top_m:" + std::to_string( m ),
                           true );
}

double
make_lambda ( const OrliczFunction &  theta,
              const Distribution &    xi,
              const double            x )
{
    if ( ! ( x >= 0 ) )
        throw std::domain_error( "make_lambda: x must be >= 0" );

    if ( x == 0.0 )
        return 0.0;

    auto  integrand = [&] ( const double u ) { return theta( x * xi.quantile( u ) ); };

    // geometric subdivision towards u = 0, one decade per panel
    double  sum = 0.0;
    double  hi  = 1.0;

    while ( hi > u_floor * 1.5 )
    {
        const double  lo = hi * 0.1;

        sum += quad::integrate( integrand, lo, hi, lambda_tol );
        hi   = lo;

        if ( ! ( sum <= divergent_sum ) )
            return std::numeric_limits< double >::infinity();
    }// while

    // (0, u_floor): monotone integrand, lower end of the interval estimate
    sum += u_floor * integrand( u_floor );

    if ( ! std::isfinite( sum ) || sum > divergent_sum )
        return std::numeric_limits< double >::infinity();

    return sum;
}

OrliczFunction
lambda_function ( const OrliczFunction &  theta,
                  const Distribution &    xi )
{
    return OrliczFunction( [theta, xi] ( const double x ) { return make_lambda( theta, xi, x ); },
                           "lambda(" + theta.label() + "," + xi.label() + ")",
                           theta.is_convex_claimed() );
}

double
lambda_norm ( const OrliczFunction &     theta,
              const Distribution &       xi,
              std::span< const double >  a )
{
    // group equal magnitudes, Λ is the expensive part
    auto  mag = decreasing_rearrangement( a );

    std::vector< std::pair< double, double > >  groups;

    for ( const auto  v : mag )
    {
        if ( v == 0.0 )
            break;

        if ( ! groups.empty() && groups.back().first == v ) groups.back().second += 1.0;
        else                                                groups.emplace_back( v, 1.0 );
    }// for

    if ( groups.empty() )
        return 0.0;

    return luxemburg_gauge( [&] ( const double lambda )
                            {
                                double  sum = 0.0;

                                for ( const auto & [ v, count ] : groups )
                                {
                                    const double  l = make_lambda( theta, xi, v / lambda );

                                    // Λ is non-decreasing, remaining terms are smaller
                                    if ( l == 0.0 )
                                        break;

                                    sum += count * l;
                                }// for

                                return sum;
                            }, groups.front().first );
}

double
gaussian_lambda_equiv ( const std::size_t  m,
                        const double       x )
{
    if ( m < 1 || ! ( x > 0 ) )
        throw std::domain_error( "gaussian_lambda_equiv: need m >= 1 and x > 0" );

    const double  mx = double( m ) * x;

    return x * std::exp( -1.0 / ( mx * mx ) );
}

std::pair< double, double >
exp_gauss_seq_norm ( std::span< const double >  b )
{
    const auto  bs  = decreasing_rearrangement( b );
    double      sup = 0.0;

    for ( std::size_t  i = 0; i < bs.size(); ++i )
        sup = std::max( sup, bs[i] * std::sqrt( 1.0 + std::log( double( i + 1 ) ) ) );

    return { luxemburg( OrliczFunction::exp_gauss(), b ), sup };
}

double
gauss_rhs_closed ( std::span< const double >  a,
                   const std::size_t          m )
{
    const auto  n = a.size();

    if ( m < 1 || m > n )
        throw std::invalid_argument( "gauss_rhs_closed: need 1 <= m <= n" );

    const auto  as   = decreasing_rearrangement( a );
    double      head = 0.0;
    double      sup  = 0.0;

    for ( std::size_t  i = 0; i < m; ++i )
        head += as[i];

    for ( std::size_t  i = 1; i * m <= n; ++i )
        sup = std::max( sup, as[ i * m - 1 ] * std::sqrt( 1.0 + std::log( double( i ) ) ) );

    return head + double( m ) * sup;
}

}// namespace rinorm
