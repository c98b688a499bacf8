#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <rinorm/experiments.hpp>

using namespace rinorm;
using nlohmann::json;

namespace fs = std::filesystem;

namespace
{

WindowTable
default_windows ()
{
    return WindowTable::load( RINORM_DEFAULT_WINDOWS );
}

fs::path
scratch ( const std::string &  name )
{
    const auto  p = fs::temp_directory_path() / ( "rinorm_test_" + name );

    fs::remove_all( p );
    fs::create_directories( p );

    return p;
}

int
cli ( std::vector< std::string >  args )
{
    args.insert( args.begin(), "rinorm" );

    std::vector< char * >  argv;

    for ( auto &  a : args )
        argv.push_back( a.data() );

    return run_cli( int( argv.size() ), argv.data() );
}

}// namespace anonymous

TEST_CASE( "literal parsing" )
{
    CHECK( parse_distribution( { { "kind", "gaussian" }, { "sigma", 2 } } ) == Distribution::gaussian( 2 ) );
    CHECK( parse_distribution( { { "kind", "two_point" }, { "v", 3 }, { "p", 0.2 } } ) == Distribution::two_point( 3, 0.2 ) );
    CHECK( parse_distribution( { { "kind", "scaled" }, { "a", 2 }, { "base", { { "kind", "uniform" } } } } ).survival( 1 ) == doctest::Approx( 0.5 ) );
    CHECK_THROWS_AS( parse_distribution( { { "kind", "cauchy" } } ), ConfigError );
    CHECK_THROWS_AS( parse_distribution( { { "sigma", 1 } } ), ConfigError );
    CHECK_THROWS_AS( parse_distribution( { { "kind", "gaussian" }, { "sigma", "wide" } } ), ConfigError );

    CHECK( parse_ri_norm( { { "ri", "lorentz" }, { "p", 2 }, { "q", 1 } } ).label() == "L(2,1)" );
    CHECK( parse_ri_norm( { { "ri", "orlicz" }, { "phi", "power" }, { "p", 2 } } ).label() == "L_{power:2}" );
    CHECK_THROWS_AS( parse_ri_norm( { { "ri", "lp" }, { "p", 0.5 } } ), ConfigError );

    CHECK( parse_seq_norm( { { "seq", "top_m" }, { "m_fraction", 0.25 } }, 10 ).label() == "k3" );
    CHECK( parse_seq_norm( { { "seq", "top_m" }, { "m", 4 } }, 10 ).label() == "k4" );
    CHECK( parse_seq_norm( { { "seq", "linf" } }, 10 ).label() == "linf" );
    CHECK_THROWS_AS( parse_seq_norm( { { "seq", "dual" } }, 10 ), ConfigError );
}

TEST_CASE( "families" )
{
    const auto  geo = FamilySpec::parse( { { "type", "geometric" }, { "ratio", 0.5 } } );
    const auto  a   = geo.coefficients( 3 );

    CHECK( a == std::vector< double >{ 0.5, 0.25, 0.125 } );
    CHECK( geo.members( 3 ).size() == 3 );
    CHECK( ! geo.fixed_size() );

    CHECK( FamilySpec::parse( { { "type", "spike" } } ).coefficients( 3 ) == std::vector< double >{ 1, 0, 0 } );
    CHECK( FamilySpec::parse( { { "type", "harmonic" } } ).coefficients( 2 ) == std::vector< double >{ 1, 0.5 } );
    CHECK( FamilySpec::parse( { { "type", "flat" }, { "name", "x" } } ).label() == "x" );
    CHECK_THROWS_AS( FamilySpec::parse( { { "type", "zigzag" } } ), ConfigError );
    CHECK_THROWS_AS( FamilySpec::parse( { { "type", "geometric" }, { "ratio", 2 } } ), ConfigError );
}

TEST_CASE( "number formatting and csv" )
{
    CHECK( format_number( 0.1 ) == "0.10000000000000001" );
    CHECK( format_number( 2 ) == "2" );

    ResultTable  t{ { "a", "b" }, { { "x,y", "1" } } };

    CHECK( t.csv() == "a,b\n\"x,y\",1\n" );
}

TEST_CASE( "main equivalence on two uniforms" )
{
    const auto  cfg = ExperimentConfig::load( RINORM_CONFIG_DIR "/main_equivalence_uniform.json" );
    const auto  res = run_experiment( cfg, default_windows() );

    REQUIRE( res.table.rows.size() == 1 );
    CHECK( res.table.header == std::vector< std::string >{ "family", "n", "M", "N", "lhs", "stderr", "rhs", "ratio", "pass" } );
    CHECK( std::stod( res.table.rows[0][6] ) == doctest::Approx( 1.25 ).epsilon( 1e-9 ) );

    // E max = 2/3 against 1.25
    CHECK( std::stod( res.table.rows[0][7] ) == doctest::Approx( ( 2.0 / 3.0 ) / 1.25 ).epsilon( 1e-2 ) );
    CHECK( res.pass() );
    CHECK( res.summary[ "seed" ] == 1 );
}

TEST_CASE( "gauss_km closed form column" )
{
    json  j = { { "experiment", "gauss_km" },
                { "family", { { "type", "flat" }, { "base", { { "kind", "gaussian" } } } } },
                { "sweep", { { "n", { 16 } }, { "m", { 1 } } } },
                { "mc", { { "samples_per_batch", 2000 }, { "batches", 4 } } } };

    const auto  res = run_experiment( ExperimentConfig::parse( j ), default_windows() );

    REQUIRE( res.table.rows.size() == 1 );
    CHECK( std::stod( res.table.rows[0][6] ) == doctest::Approx( 2.9423152993887944 ).epsilon( 1e-14 ) );
    CHECK( res.pass() );
}

TEST_CASE( "orlicz_lambda with deterministic coefficients" )
{
    json  j = { { "experiment", "orlicz_lambda" },
                { "families", { { { "type", "harmonic" }, { "base", { { "kind", "two_point" }, { "v", 1 }, { "p", 1 } } } } } },
                { "M", { { "ri", "lp" }, { "p", 2 } } },
                { "N", { { "seq", "lp" }, { "p", 1 } } },
                { "sweep", { { "n", { 8, 32 } } } },
                { "mc", { { "samples_per_batch", 100 }, { "batches", 2 } } } };

    const auto  res = run_experiment( ExperimentConfig::parse( j ), default_windows() );

    REQUIRE( res.table.rows.size() == 2 );

    for ( const auto &  row : res.table.rows )
    {
        CHECK( std::abs( std::stod( row[4] ) - std::stod( row[5] ) ) <= 1e-8 * std::stod( row[5] ) );
        CHECK( row[7] == "1" );
    }// for
}

TEST_CASE( "rosenthal ratio is stable across n" )
{
    json  j = { { "experiment", "rosenthal" },
                { "family", { { "type", "iid" }, { "base", { { "kind", "exponential" } } } } },
                { "N", { { "seq", "lp" }, { "p", 2 } } },
                { "sweep", { { "n", { 8, 32, 128 } }, { "p", { 4 } } } },
                { "mc", { { "samples_per_batch", 2000 }, { "batches", 5 } } } };

    const auto  res = run_experiment( ExperimentConfig::parse( j ), default_windows() );

    REQUIRE( res.summary[ "cv" ].size() == 1 );
    CHECK( res.summary[ "cv" ][0][ "cv" ].get< double >() < 0.5 );
    CHECK( res.pass() );

    j[ "N" ] = { { "seq", "linf" } };

    CHECK_THROWS_AS( run_experiment( ExperimentConfig::parse( j ), default_windows() ), ConfigError );
}

TEST_CASE( "config errors" )
{
    CHECK_THROWS_AS( ExperimentConfig::parse( json::array() ), ConfigError );
    CHECK_THROWS_AS( ExperimentConfig::parse( { { "experiment", "selector" }, { "M", { { "ri", "dual" } } } } ), ConfigError );
    CHECK_THROWS_AS( ExperimentConfig::parse( { { "sweep", { { "n", "many" } } } } ), ConfigError );
    CHECK_THROWS_AS( ExperimentConfig::load( "/nonexistent/config.json" ), ConfigError );

    json  j = { { "experiment", "no_such_experiment" }, { "dists", { { { "kind", "uniform" } } } } };

    CHECK_THROWS_AS( run_experiment( ExperimentConfig::parse( j ), default_windows() ), ConfigError );

    j[ "experiment" ] = "gauss_km";

    CHECK_THROWS_AS( run_experiment( ExperimentConfig::parse( j ), default_windows() ), ConfigError );
}

TEST_CASE( "command line" )
{
    const auto  dir = scratch( "cli" );

    CHECK( cli( { "--list" } ) == 0 );
    CHECK( cli( {} ) == 2 );
    CHECK( cli( { "--bogus" } ) == 2 );

    {
        std::ofstream( dir / "bad.json" ) << "{ \"experiment\": ";
    }

    CHECK( cli( { "--config", ( dir / "bad.json" ).string() } ) == 2 );

    const std::string  cfg = RINORM_CONFIG_DIR "/main_equivalence_uniform.json";

    CHECK( cli( { "--config", cfg, "--experiment", "no_such_experiment", "--out", ( dir / "x" ).string() } ) == 2 );
    CHECK( cli( { "--config", cfg, "--out", ( dir / "a" ).string(), "--seed", "9", "--samples", "500" } ) == 0 );
    CHECK( cli( { "--config", cfg, "--out", ( dir / "b" ).string(), "--seed", "9", "--samples", "500" } ) == 0 );

    auto  slurp = [] ( const fs::path & p )
    {
        std::ifstream  in( p );

        return std::string( std::istreambuf_iterator< char >( in ), {} );
    };

    CHECK( slurp( dir / "a" / "results.csv" ) == slurp( dir / "b" / "results.csv" ) );
    CHECK( json::parse( slurp( dir / "a" / "summary.json" ) )[ "seed" ] == 9 );

    // a window that excludes every ratio turns into a numeric failure
    {
        std::ofstream( dir / "tight.json" ) << R"({"version":1,"cv_max":0.5,"windows":{"main_equivalence":[10,20]}})";
    }

    CHECK( cli( { "--config", cfg, "--out", ( dir / "c" ).string(), "--windows", ( dir / "tight.json" ).string() } ) == 1 );

    fs::remove_all( dir );
}
