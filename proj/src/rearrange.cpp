#include <rinorm/rearrange.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <rinorm/quadrature.hpp>

namespace rinorm {

QuantileFunction
empirical_quantile ( std::span< const double >  samples )
{
    if ( samples.empty() )
        throw std::invalid_argument( "empty sample" );

    const auto             s = samples.size();
    std::vector< double >  values( samples.begin(), samples.end() );
    std::vector< double >  br( s + 1 );

    for ( auto &  v : values )
        v = std::abs( v );

    std::sort( values.begin(), values.end(), std::greater<>() );

    for ( std::size_t  i = 0; i <= s; ++i )
        br[i] = double( i ) / double( s );

    return QuantileFunction::step( std::move( br ), std::move( values ) );
}

double
empirical_quantile_at ( std::span< const double >  samples,
                        const double               alpha )
{
    if ( samples.empty() )
        throw std::invalid_argument( "empty sample" );

    if ( ! ( alpha > 0 && alpha <= 1 ) )
        throw std::invalid_argument( "empirical_quantile_at: alpha must lie in (0,1]" );

    std::vector< double >  values( samples.begin(), samples.end() );
    const auto             s   = values.size();
    auto                   idx = std::size_t( std::ceil( alpha * double( s ) ) );

    idx = std::clamp< std::size_t >( idx, 1, s );

    // idx-th largest
    std::nth_element( values.begin(), values.begin() + ( idx - 1 ), values.end(), std::greater<>() );

    return values[ idx - 1 ];
}

////////////////////////////////////////////////////////////////////////////////
//
// Disjunctification
//
////////////////////////////////////////////////////////////////////////////////

Disjunctification::Disjunctification ( std::vector< Distribution >  members )
        : members_( std::move( members ) )
{
    if ( members_.empty() )
        throw std::invalid_argument( "disjunctify: empty family" );

    for ( const auto &  d : members_ )
    {
        auto  it = std::find_if( groups_.begin(), groups_.end(),
                                 [&d] ( const auto & g ) { return g.first == d; } );

        if ( it == groups_.end() ) groups_.emplace_back( d, 1.0 );
        else                       it->second += 1.0;
    }// for
}

double
Disjunctification::total_survival ( const double  s ) const
{
    double  sum = 0.0;

    for ( const auto & [ d, count ] : groups_ )
        sum += count * d.survival( s );

    return sum;
}

double
Disjunctification::eval ( const double  t ) const
{
    if ( ! ( t > 0 ) )
        throw std::domain_error( "Y may be infinite at 0" );

    return invert_survival( [this] ( const double s ) { return total_survival( s ); }, t, bisection_tol );
}

std::vector< double >
Disjunctification::unit_mesh ()
{
    constexpr std::size_t  n_geo  = 1024;
    constexpr std::size_t  n_uni  = 1024;
    constexpr double       t_min  = 0x1.0p-40;
    constexpr double       t_knee = 1.0 / 64.0;

    std::vector< double >  mesh;

    mesh.reserve( n_geo + n_uni );

    const double  log_ratio = std::log( t_knee / t_min ) / double( n_geo - 1 );

    for ( std::size_t  k = 0; k + 1 < n_geo; ++k )
        mesh.push_back( t_min * std::exp( log_ratio * double( k ) ) );

    mesh.push_back( t_knee );

    const double  h = ( 1.0 - t_knee ) / double( n_uni );

    for ( std::size_t  k = 1; k < n_uni; ++k )
        mesh.push_back( t_knee + h * double( k ) );

    mesh.push_back( 1.0 );

    return mesh;
}

//
// piece [0,t_1) is constant Y(t_1), pieces [t_j,t_{j+1}) interpolate
// affinely; the last point takes the left limit Y(L⁻)
//
QuantileFunction
Disjunctification::tabulate_on ( const std::vector< double > &  mesh ) const
{
    const auto             k = mesh.size();
    std::vector< double >  br( k + 1 );
    std::vector< double >  val( k );

    br[0] = 0.0;

    for ( std::size_t  j = 0; j < k; ++j )
    {
        br[j+1] = mesh[j];
        val[j]  = eval( j + 1 < k ? mesh[j] : std::nextafter( mesh[j], 0.0 ) );
    }// for

    // exact inverse is non-increasing; remove bisection jitter
    for ( std::size_t  j = 1; j < k; ++j )
        val[j] = std::min( val[j], val[j-1] );

    std::vector< double >  left( k ), right( k );

    left[0]  = val[0];
    right[0] = val[0];

    for ( std::size_t  j = 1; j < k; ++j )
    {
        left[j]  = val[j-1];
        right[j] = val[j];
    }// for

    return QuantileFunction( std::move( br ), std::move( left ), std::move( right ) );
}

QuantileFunction
Disjunctification::restrict_unit () const
{
    return tabulate_on( unit_mesh() );
}

QuantileFunction
Disjunctification::tabulate ( const std::size_t  per_unit ) const
{
    auto        mesh = unit_mesh();
    const auto  n    = size();

    for ( std::size_t  i = 1; i < n; ++i )
        for ( std::size_t  k = 1; k <= per_unit; ++k )
            mesh.push_back( double( i ) + double( k ) / double( per_unit ) );

    return tabulate_on( mesh );
}

std::vector< double >
Disjunctification::at_integers () const
{
    std::vector< double >  y( size() );

    for ( std::size_t  i = 0; i < y.size(); ++i )
        y[i] = eval( double( i + 1 ) );

    return y;
}

double
Disjunctification::head_integral ( const double  x ) const
{
    if ( x <= 0 )
        return 0.0;

    const double  y = eval( x );

    return x * y + quad::integrate_tail( [this] ( const double s ) { return total_survival( s ); }, y );
}

double
Disjunctification::integral ( const double  a,
                              const double  b ) const
{
    if ( ! ( a >= 0 && a < b && b <= double( size() ) ) )
        throw std::domain_error( "integral: need 0 <= a < b <= n" );

    constexpr double  head = 1e-3;

    double  sum = 0.0;
    double  lo  = a;

    if ( a < head )
    {
        const double  mid = std::min( b, head );

        sum += head_integral( mid ) - head_integral( a );
        lo   = mid;
    }// if

    if ( lo < b )
        sum += quad::integrate( [this] ( const double t ) { return eval( t ); }, lo, b, 1e-8 );

    return sum;
}

Disjunctification
disjunctify ( std::span< const Distribution >  dists )
{
    return Disjunctification( std::vector< Distribution >( dists.begin(), dists.end() ) );
}

}// namespace rinorm
