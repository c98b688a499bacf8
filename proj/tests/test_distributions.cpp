#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <rinorm/distributions.hpp>
#include <rinorm/random.hpp>

using namespace rinorm;

TEST_CASE( "survival closed forms" )
{
    CHECK( Distribution::gaussian( 1.0 ).survival( 0.0 ) == 1.0 );
    CHECK( Distribution::exponential( 1.0 ).survival( 1.0 ) == doctest::Approx( std::exp( -1.0 ) ).epsilon( 1e-15 ) );
    CHECK( Distribution::scaled( 2.0, Distribution::uniform( 1.0 ) ).survival( 1.0 ) == doctest::Approx( 0.5 ) );
    CHECK( Distribution::uniform( 1.0 ).survival( -1.0 ) == 1.0 );
    CHECK( Distribution::two_point( 3.0, 0.2 ).survival( 2.9 ) == doctest::Approx( 0.2 ) );
    CHECK( Distribution::two_point( 3.0, 0.2 ).survival( 3.0 ) == 0.0 );
}

TEST_CASE( "quantiles" )
{
    CHECK( Distribution::uniform( 1.0 ).quantile( 0.25 ) == doctest::Approx( 0.75 ) );

    // P(|γ| > q) = 0.5, reference value from an independent normal cdf
    CHECK( Distribution::gaussian( 1.0 ).quantile( 0.5 ) == doctest::Approx( 0.6744897501960817 ).epsilon( 1e-12 ) );

    const auto  tp = Distribution::two_point( 3.0, 0.2 );

    CHECK( tp.quantile( 0.1 ) == 3.0 );
    CHECK( tp.quantile( 0.3 ) == 0.0 );

    CHECK_THROWS_AS( tp.quantile( 0.0 ), std::domain_error );
    CHECK_THROWS_AS( tp.quantile( 1.0 ), std::domain_error );
}

TEST_CASE( "quantile and survival form a Galois pair" )
{
    const std::vector< Distribution >  dists = {
        Distribution::gaussian( 1.3 ), Distribution::exponential( 0.7 ), Distribution::uniform( 2.0 ),
        Distribution::two_point( 1.5, 0.3 ), Distribution::scaled( 0.25, Distribution::gaussian( 1.0 ) )
    };

    for ( const auto &  d : dists )
    {
        for ( double  u = 0.01; u < 1.0; u += 0.0137 )
        {
            const double  q = d.quantile( u );

            // S(q) <= u < S(q⁻)
            CHECK( d.survival( q ) <= u + 1e-12 );

            if ( q > 0 )
                CHECK( d.survival( q * ( 1.0 - 1e-9 ) ) >= u - 1e-9 );
        }// for
    }// for
}

TEST_CASE( "sampling" )
{
    RngStream  s( 7, 0 );

    const auto  ones = Distribution::two_point( 1.0, 1.0 ).sample( s, 4 );

    CHECK( ones == std::vector< double >{ 1, 1, 1, 1 } );

    const auto  zeros = Distribution::scaled( 0.0, Distribution::gaussian( 1.0 ) ).sample( s, 3 );

    CHECK( zeros == std::vector< double >{ 0, 0, 0 } );

    const auto    u    = Distribution::uniform( 1.0 ).sample( s, 100000 );
    const double  mean = std::accumulate( u.begin(), u.end(), 0.0 ) / double( u.size() );

    CHECK( std::abs( mean - 0.5 ) <= 3.0 / std::sqrt( 12.0 * 1e5 ) );
}

TEST_CASE( "empirical distribution matches the survival function" )
{
    for ( const auto &  d : { Distribution::gaussian( 1.0 ), Distribution::exponential( 2.0 ), Distribution::two_point( 1.0, 0.4 ) } )
    {
        RngStream  s( 11, 3 );
        auto       x = d.sample( s, 100000 );

        std::sort( x.begin(), x.end() );

        // Kolmogorov-Smirnov distance at the sample points
        double  ks = 0.0;

        for ( std::size_t  i = 0; i < x.size(); i += 97 )
        {
            const auto    le  = double( std::upper_bound( x.begin(), x.end(), x[i] ) - x.begin() ) / double( x.size() );
            const double  cdf = 1.0 - d.survival( x[i] );

            ks = std::max( ks, std::abs( le - cdf ) );
        }// for

        CHECK( ks < 0.01 );
    }// for
}

TEST_CASE( "streams are reproducible and distinct" )
{
    RngStream  a( 5, 1 ), b( 5, 1 ), c( 5, 2 );

    const auto  x = Distribution::gaussian( 1.0 ).sample( a, 16 );

    CHECK( x == Distribution::gaussian( 1.0 ).sample( b, 16 ) );
    CHECK( x != Distribution::gaussian( 1.0 ).sample( c, 16 ) );
}

TEST_CASE( "invert_survival brackets a bounded support" )
{
    const auto  d = Distribution::uniform( 1.0 );

    CHECK( invert_survival( [&] ( double t ) { return 2.0 * d.survival( t ); }, 1.0 ) == doctest::Approx( 0.5 ).epsilon( 1e-10 ) );
    CHECK( invert_survival( [&] ( double t ) { return d.survival( t ); }, 1.0 ) == 0.0 );
}
