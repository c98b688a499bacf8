#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <rinorm/rearrange.hpp>

using namespace rinorm;

TEST_CASE( "empirical quantile" )
{
    const std::vector< double >  two = { 2, 1 };
    const auto                   f   = empirical_quantile( two );

    CHECK( f( 0.0 ) == 2.0 );
    CHECK( f( 0.49 ) == 2.0 );
    CHECK( f( 0.5 ) == 1.0 );
    CHECK( f( 0.99 ) == 1.0 );
    CHECK( f.domain_length() == 1.0 );

    const std::vector< double >  fives = { 5, 5, 5 };

    CHECK( empirical_quantile( fives )( 0.7 ) == 5.0 );

    std::vector< double >  p = { 1, 2, 3 };

    const auto  ref = empirical_quantile( p );

    do
    {
        const auto  g = empirical_quantile( p );

        for ( double  t = 0.0; t < 1.0; t += 0.05 )
            CHECK( g( t ) == ref( t ) );
    } while ( std::next_permutation( p.begin(), p.end() ) );

    CHECK_THROWS_WITH( empirical_quantile( std::vector< double >{} ), "empty sample" );

    const std::vector< double >  s = { 4, 1, 3, 2 };

    CHECK( empirical_quantile_at( s, 0.25 ) == 4.0 );
    CHECK( empirical_quantile_at( s, 0.5 ) == 3.0 );
    CHECK( empirical_quantile_at( s, 0.51 ) == 2.0 );
}

TEST_CASE( "disjunctification of two uniforms" )
{
    const auto  D = disjunctify( std::vector< Distribution >( 2, Distribution::uniform( 1.0 ) ) );

    for ( double  t = 0.1; t < 2.0; t += 0.1 )
        CHECK( D.eval( t ) == doctest::Approx( 1.0 - t / 2.0 ).epsilon( 1e-9 ) );

    CHECK( D.eval( 1.0 ) == doctest::Approx( 0.5 ).epsilon( 1e-10 ) );
    CHECK( D.eval( 2.0 ) == doctest::Approx( 0.0 ).epsilon( 1e-10 ) );
    CHECK( D.integral( 0.0, 1.0 ) == doctest::Approx( 0.75 ).epsilon( 1e-9 ) );

    const auto  yi = D.at_integers();

    REQUIRE( yi.size() == 2 );
    CHECK( yi[0] == doctest::Approx( 0.5 ).epsilon( 1e-10 ) );
    CHECK( yi[1] == doctest::Approx( 0.0 ).epsilon( 1e-10 ) );

    CHECK_THROWS_WITH( D.eval( 0.0 ), "Y may be infinite at 0" );
    CHECK_THROWS_WITH( D.eval( -1.0 ), "Y may be infinite at 0" );
}

TEST_CASE( "disjunctification of one law is its quantile" )
{
    const auto  d = Distribution::exponential( 1.5 );
    const auto  D = disjunctify( std::vector< Distribution >{ d } );

    for ( double  t = 0.05; t < 1.0; t += 0.05 )
        CHECK( D.eval( t ) == doctest::Approx( d.quantile( t ) ).epsilon( 1e-9 ) );

    const auto  one = disjunctify( std::vector< Distribution >{ Distribution::two_point( 1.0, 1.0 ) } ).restrict_unit();

    for ( double  t = 0.0; t < 1.0; t += 0.01 )
        CHECK( one( t ) == doctest::Approx( 1.0 ) );
}

TEST_CASE( "disjunctification reference values" )
{
    // 4·P(|γ| > s) = 1, reference from an independent normal cdf
    const auto  G = disjunctify( std::vector< Distribution >( 4, Distribution::gaussian( 1.0 ) ) );

    CHECK( G.eval( 1.0 ) == doctest::Approx( 1.1503493803760079 ).epsilon( 1e-9 ) );

    const auto  E = disjunctify( std::vector< Distribution >( 16, Distribution::exponential( 1.0 ) ) );

    CHECK( E.eval( 1.0 ) == doctest::Approx( std::log( 16.0 ) ).epsilon( 1e-9 ) );

    // ∫_0^1 log(16/t) dt = 1 + log 16
    CHECK( E.integral( 0.0, 1.0 ) == doctest::Approx( 1.0 + std::log( 16.0 ) ).epsilon( 1e-7 ) );
    CHECK( E.restrict_unit().integral( 0.0, 1.0 ) == doctest::Approx( 1.0 + std::log( 16.0 ) ).epsilon( 1e-4 ) );

    CHECK_THROWS( disjunctify( std::vector< Distribution >{} ) );
}

TEST_CASE( "tabulated Y is non-increasing and close to eval" )
{
    const std::vector< Distribution >  dists = {
        Distribution::gaussian( 1.0 ), Distribution::exponential( 2.0 ), Distribution::two_point( 3.0, 0.3 ),
        Distribution::uniform( 0.5 ), Distribution::scaled( 0.1, Distribution::gaussian( 1.0 ) )
    };

    const auto  D = disjunctify( dists );
    const auto  f = D.tabulate();

    CHECK( f.domain_length() == doctest::Approx( 5.0 ) );

    double  prev = f( 1e-6 );

    for ( double  t = 0.01; t < 5.0; t += 0.01 )
    {
        const double  v = f( t );

        CHECK( v <= prev );
        prev = v;
    }// for

    for ( double  t : { 0.05, 0.5, 1.5, 2.5, 4.5 } )
        CHECK( f( t ) == doctest::Approx( D.eval( t ) ).epsilon( 1e-2 ) );
}

TEST_CASE( "survival of Y equals the summed survival" )
{
    const std::vector< Distribution >  dists = { Distribution::gaussian( 1.0 ), Distribution::exponential( 1.0 ), Distribution::uniform( 2.0 ) };

    const auto  D = disjunctify( dists );

    for ( double  s : { 0.2, 0.7, 1.3, 2.5 } )
    {
        // measure{t : Y(t) > s} = Σ P(|X_i| > s)
        const double  m = D.total_survival( s );

        CHECK( D.eval( m * 0.999 ) > s );
        CHECK( D.eval( m * 1.001 ) <= s + 1e-9 );
    }// for
}
