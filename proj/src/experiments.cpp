#include <rinorm/experiments.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include <rinorm/orlicz.hpp>
#include <rinorm/rearrange.hpp>

namespace rinorm {

namespace fs = std::filesystem;
using nlohmann::json;

////////////////////////////////////////////////////////////////////////////////
//
// literals
//
////////////////////////////////////////////////////////////////////////////////

namespace
{

template < typename T >
T
get ( const json &         j,
      const char *         key,
      const std::string &  what )
{
    if ( ! j.is_object() || ! j.contains( key ) )
        throw ConfigError( what + ": missing field '" + key + "'" );

    try
    {
        return j.at( key ).get< T >();
    }// try
    catch ( const json::exception & )
    {
        throw ConfigError( what + ": field '" + key + "' has the wrong type" );
    }// catch
}

template < typename T >
T
get_or ( const json &         j,
         const char *         key,
         const T &            fallback,
         const std::string &  what )
{
    return j.contains( key ) ? get< T >( j, key, what ) : fallback;
}

// "power" + p → "power:p"; "theta_top_m" + m → "theta_top_m:m"
std::string
orlicz_name ( const json &         j,
              const char *         key,
              const std::string &  what )
{
    auto  name = get< std::string >( j, key, what );

    if ( name == "power" )
        name += ":" + format_number( get< double >( j, "p", what ) );
    else if ( name == "theta_top_m" )
        name += ":" + std::to_string( get< std::size_t >( j, "m", what ) );

    return name;
}

// invalid_argument from the library becomes a config error
template < typename func_t >
auto
checked ( const func_t &  f ) -> decltype( f() )
{
    try
    {
        return f();
    }// try
    catch ( const ConfigError & )
    {
        throw;
    }// catch
    catch ( const std::logic_error &  e )
    {
        throw ConfigError( e.what() );
    }// catch
}

}// namespace anonymous

Distribution
parse_distribution ( const json &  j )
{
    const std::string  what = "distribution";
    const auto         kind = get< std::string >( j, "kind", what );

    return checked( [&] {
        if ( kind == "gaussian" )    return Distribution::gaussian( get_or< double >( j, "sigma", 1.0, what ) );
        if ( kind == "exponential" ) return Distribution::exponential( get_or< double >( j, "rate", 1.0, what ) );
        if ( kind == "uniform" )     return Distribution::uniform( get_or< double >( j, "b", 1.0, what ) );
        if ( kind == "two_point" )   return Distribution::two_point( get< double >( j, "v", what ), get< double >( j, "p", what ) );
        if ( kind == "scaled" )
        {
            if ( ! j.contains( "base" ) )
                throw ConfigError( "scaled distribution: missing field 'base'" );

            return Distribution::scaled( get< double >( j, "a", what ), parse_distribution( j.at( "base" ) ) );
        }// if

        throw ConfigError( "unknown distribution kind '" + kind + "'" );
    } );
}

RiNormSpec
parse_ri_norm ( const json &  j )
{
    const std::string  what = "ri norm";
    const auto         kind = get< std::string >( j, "ri", what );

    return checked( [&] {
        if ( kind == "lp" )      return RiNormSpec::lp( get< double >( j, "p", what ) );
        if ( kind == "lorentz" ) return RiNormSpec::lorentz( get< double >( j, "p", what ), get< double >( j, "q", what ) );
        if ( kind == "orlicz" )
            return RiNormSpec::orlicz( OrliczFunction::parse( orlicz_name( j, "phi", what ) ),
                                       get_or< double >( j, "q_emb", 1.0, what ) );

        throw ConfigError( "unknown ri norm '" + kind + "'" );
    } );
}

SeqNormSpec
parse_seq_norm ( const json &       j,
                 const std::size_t  n )
{
    const std::string  what = "sequence norm";
    const auto         kind = get< std::string >( j, "seq", what );

    return checked( [&] {
        if ( kind == "lp" )   return SeqNormSpec::lp_norm( get< double >( j, "p", what ) );
        if ( kind == "linf" ) return SeqNormSpec::sup();
        if ( kind == "top_m" )
        {
            if ( j.contains( "m_fraction" ) )
            {
                const auto  f = get< double >( j, "m_fraction", what );
                const auto  m = std::size_t( std::ceil( f * double( n ) ) );

                return SeqNormSpec::top_m( std::max< std::size_t >( m, 1 ) );
            }// if

            return SeqNormSpec::top_m( get< std::size_t >( j, "m", what ) );
        }// if
        if ( kind == "orlicz" ) return SeqNormSpec::orlicz( OrliczFunction::parse( orlicz_name( j, "psi", what ) ) );

        throw ConfigError( "unknown sequence norm '" + kind + "'" );
    } );
}

////////////////////////////////////////////////////////////////////////////////
//
// families
//
////////////////////////////////////////////////////////////////////////////////

FamilySpec
FamilySpec::parse ( const json &  j )
{
    const std::string  what = "family";
    FamilySpec         f;

    f.type = get_or< std::string >( j, "type", "iid", what );
    f.name = get_or< std::string >( j, "name", "", what );

    if ( f.type == "list" )
    {
        if ( ! j.contains( "dists" ) || ! j.at( "dists" ).is_array() || j.at( "dists" ).empty() )
            throw ConfigError( "family 'list': 'dists' must be a nonempty array" );

        for ( const auto &  d : j.at( "dists" ) )
            f.dists.push_back( parse_distribution( d ) );

        return f;
    }// if

    if ( f.type != "iid" && f.type != "flat" && f.type != "geometric" && f.type != "spike" && f.type != "harmonic" )
        throw ConfigError( "unknown family type '" + f.type + "'" );

    f.base  = j.contains( "base" ) ? parse_distribution( j.at( "base" ) ) : Distribution::gaussian( 1.0 );
    f.ratio = get_or< double >( j, "ratio", 0.5, what );

    if ( ! ( f.ratio > 0 && f.ratio < 1 ) )
        throw ConfigError( "family: ratio must lie in (0,1)" );

    return f;
}

std::string
FamilySpec::label () const
{
    if ( ! name.empty() )
        return name;

    if ( type == "list" )
        return "list[" + std::to_string( dists.size() ) + "]";

    return type + ":" + base->label();
}

std::optional< std::size_t >
FamilySpec::fixed_size () const
{
    if ( type == "list" )
        return dists.size();

    return std::nullopt;
}

std::vector< double >
FamilySpec::coefficients ( const std::size_t  n ) const
{
    if ( type == "list" )
        throw ConfigError( "family 'list' has no coefficient sequence" );

    std::vector< double >  a( n, 0.0 );

    for ( std::size_t  i = 0; i < n; ++i )
    {
        if      ( type == "iid" || type == "flat" ) a[i] = 1.0;
        else if ( type == "geometric" )             a[i] = std::pow( ratio, double( i + 1 ) );
        else if ( type == "harmonic" )              a[i] = 1.0 / double( i + 1 );
        else if ( type == "spike" )                 a[i] = ( i == 0 ? 1.0 : 0.0 );
    }// for

    return a;
}

std::vector< Distribution >
FamilySpec::members ( const std::size_t  n ) const
{
    if ( type == "list" )
        return dists;

    if ( type == "iid" || type == "flat" )
        return std::vector< Distribution >( n, *base );

    std::vector< Distribution >  out;

    for ( const auto  a : coefficients( n ) )
        out.push_back( Distribution::scaled( a, *base ) );

    return out;
}

////////////////////////////////////////////////////////////////////////////////
//
// configs
//
////////////////////////////////////////////////////////////////////////////////

namespace
{

std::vector< json >
one_or_many ( const json &  j,
              const char *  key )
{
    std::vector< json >  out;

    if ( ! j.contains( key ) )
        return out;

    const auto &  v = j.at( key );

    if ( v.is_array() )
    {
        if ( v.empty() )
            throw ConfigError( std::string( "'" ) + key + "' must not be empty" );

        for ( const auto &  e : v )
            out.push_back( e );
    }// if
    else
        out.push_back( v );

    return out;
}

template < typename T >
std::vector< T >
sweep_list ( const json &  sweep,
             const char *  key )
{
    if ( ! sweep.contains( key ) )
        return {};

    const auto &  v = sweep.at( key );

    if ( ! v.is_array() || v.empty() )
        throw ConfigError( std::string( "sweep." ) + key + " must be a nonempty list" );

    try
    {
        return v.get< std::vector< T > >();
    }// try
    catch ( const json::exception & )
    {
        throw ConfigError( std::string( "sweep." ) + key + " has the wrong element type" );
    }// catch
}

}// namespace anonymous

ExperimentConfig
ExperimentConfig::parse ( const json &  j )
{
    if ( ! j.is_object() )
        throw ConfigError( "config must be an object" );

    ExperimentConfig  c;

    c.experiment = get_or< std::string >( j, "experiment", "", "config" );

    if ( j.contains( "dists" ) )
    {
        json  lst = { { "type", "list" }, { "dists", j.at( "dists" ) } };

        c.families.push_back( FamilySpec::parse( lst ) );
    }// if

    for ( const auto &  f : one_or_many( j, "family" ) )
        c.families.push_back( FamilySpec::parse( f ) );

    for ( const auto &  f : one_or_many( j, "families" ) )
        c.families.push_back( FamilySpec::parse( f ) );

    c.M = one_or_many( j, "M" );
    c.N = one_or_many( j, "N" );

    // validate literals early; top_m fractions resolve at n = 1 here
    for ( const auto &  m : c.M ) parse_ri_norm( m );
    for ( const auto &  n : c.N ) parse_seq_norm( n, 1 );

    if ( j.contains( "mc" ) )
    {
        const auto &  mc = j.at( "mc" );

        c.mc.samples_per_batch = get_or< std::size_t >( mc, "samples_per_batch", c.mc.samples_per_batch, "mc" );
        c.mc.batches           = get_or< std::size_t >( mc, "batches", c.mc.batches, "mc" );
        c.mc.seed              = get_or< std::uint64_t >( mc, "seed", c.mc.seed, "mc" );
    }// if

    if ( j.contains( "sweep" ) )
    {
        const auto &  sw = j.at( "sweep" );

        c.sweep_n = sweep_list< std::size_t >( sw, "n" );
        c.sweep_m = sweep_list< std::size_t >( sw, "m" );
        c.sweep_p = sweep_list< double >( sw, "p" );
    }// if

    c.theta   = get_or< std::string >( j, "theta", "", "config" );
    c.out     = get_or< std::string >( j, "out", c.out, "config" );
    c.windows = get_or< std::string >( j, "windows", "", "config" );

    if ( ! c.theta.empty() )
        checked( [&] { return OrliczFunction::parse( c.theta ); } );

    return c;
}

ExperimentConfig
ExperimentConfig::load ( const std::string &  path )
{
    std::ifstream  in( path );

    if ( ! in )
        throw ConfigError( "cannot open config '" + path + "'" );

    try
    {
        return parse( json::parse( in ) );
    }// try
    catch ( const json::parse_error &  e )
    {
        throw ConfigError( "malformed config '" + path + "': " + e.what() );
    }// catch
}

////////////////////////////////////////////////////////////////////////////////
//
// windows
//
////////////////////////////////////////////////////////////////////////////////

RatioWindow
WindowTable::for_experiment ( const std::string &  name ) const
{
    const auto  it = windows.find( name );

    return it != windows.end() ? it->second : RatioWindow{};
}

WindowTable
WindowTable::load ( const std::string &  path )
{
    std::ifstream  in( path );

    if ( ! in )
        throw ConfigError( "cannot open window file '" + path + "'" );

    WindowTable  t;

    try
    {
        const auto  j = json::parse( in );

        t.version = j.at( "version" ).get< int >();
        t.cv_max  = j.value( "cv_max", 0.5 );

        for ( const auto & [ name, w ] : j.at( "windows" ).items() )
            t.windows[ name ] = RatioWindow{ w.at( 0 ).get< double >(), w.at( 1 ).get< double >() };
    }// try
    catch ( const json::exception &  e )
    {
        throw ConfigError( "malformed window file '" + path + "': " + e.what() );
    }// catch

    return t;
}

////////////////////////////////////////////////////////////////////////////////
//
// tables
//
////////////////////////////////////////////////////////////////////////////////

std::string
format_number ( const double  x )
{
    char  buf[40];

    std::snprintf( buf, sizeof( buf ), "%.17g", x );
    return buf;
}

std::string
ResultTable::csv () const
{
    std::ostringstream  os;

    auto  write_row = [&os] ( const std::vector< std::string > & row )
    {
        for ( std::size_t  k = 0; k < row.size(); ++k )
        {
            if ( k > 0 )
                os << ',';

            // labels may contain commas
            if ( row[k].find_first_of( ",\"" ) != std::string::npos )
            {
                os << '"';
                for ( const char  c : row[k] )
                    os << ( c == '"' ? std::string( "\"\"" ) : std::string( 1, c ) );
                os << '"';
            }// if
            else
                os << row[k];
        }// for

        os << '\n';
    };

    write_row( header );

    for ( const auto &  r : rows )
        write_row( r );

    return os.str();
}

////////////////////////////////////////////////////////////////////////////////
//
// experiments
//
////////////////////////////////////////////////////////////////////////////////

const std::vector< ExperimentInfo > &
experiment_registry ()
{
    static const std::vector< ExperimentInfo >  registry = {
        { "main_equivalence", "MC ‖‖(X_i)‖_N‖_M against ‖Y|[0,1]‖_M + ‖(Y(i))‖_N over an n sweep" },
        { "rosenthal",        "main_equivalence restricted to N in {l1,l2}, M = Lp" },
        { "gauss_km",         "Gaussian coefficients under k_m: MC, Λ-Luxemburg norm and closed form" },
        { "orlicz_lambda",    "MC ‖‖(a_i ξ_i)‖_N‖_M against the Λ-Luxemburg norm of (a_i)" },
        { "selector",         "E‖(I_i X_i)‖_∞ with Bernoulli(1/m) selectors against the k_m right hand side" },
        { "hj_moments",       "‖U‖_p against U^#(e^-p/4) + ‖V‖_p" },
        { "tail_bound",       "P(‖(X_i)‖_N > 200‖Y‖_P) against 1/(4e)" },
        { "remark_iid",       "‖‖(a_i ξ_i)‖_{k_m}‖_1 against Σ_{i<=m} a*_i + m E max_i a*_{mi}|ξ_i|, E|ξ| = 1" }
    };

    return registry;
}

namespace
{

struct Context
{
    const ExperimentConfig &  cfg;
    const WindowTable &       windows;
    RatioWindow               window;
    ExperimentResult          result;

    void add_row ( std::vector< std::string >  row,
                   json                        row_json,
                   const bool                  pass,
                   const std::string &         what )
    {
        row.push_back( pass ? "1" : "0" );
        row_json[ "pass" ] = pass;

        result.table.rows.push_back( std::move( row ) );
        result.row_pass.push_back( pass );
        result.summary[ "rows" ].push_back( std::move( row_json ) );

        if ( ! pass )
            result.failures.push_back( "row " + std::to_string( result.table.rows.size() ) + ": " + what );
    }
};

std::vector< std::size_t >
sizes_for ( const ExperimentConfig &  cfg,
            const FamilySpec &        f )
{
    if ( const auto  n = f.fixed_size() )
        return { *n };

    if ( cfg.sweep_n.empty() )
        throw ConfigError( "family '" + f.label() + "' needs sweep.n" );

    for ( const auto  n : cfg.sweep_n )
        if ( n < 1 )
            throw ConfigError( "sweep.n entries must be >= 1" );

    return cfg.sweep_n;
}

void
require_families ( const ExperimentConfig &  cfg )
{
    if ( cfg.families.empty() )
        throw ConfigError( "config needs 'dists', 'family' or 'families'" );
}

std::vector< RiNormSpec >
ri_norms ( const ExperimentConfig &  cfg,
           const RiNormSpec &        fallback )
{
    std::vector< RiNormSpec >  Ms;

    for ( const auto &  m : cfg.M )
        Ms.push_back( parse_ri_norm( m ) );

    if ( Ms.empty() )
        Ms.push_back( fallback );

    return Ms;
}

std::vector< json >
seq_literals ( const ExperimentConfig &  cfg,
               const json &              fallback )
{
    return cfg.N.empty() ? std::vector< json >{ fallback } : cfg.N;
}

double
coefficient_of_variation ( const std::vector< double > &  v )
{
    if ( v.size() < 2 )
        return 0.0;

    const double  mean = std::accumulate( v.begin(), v.end(), 0.0 ) / double( v.size() );
    double        ss   = 0.0;

    for ( const auto  x : v )
        ss += ( x - mean ) * ( x - mean );

    return std::sqrt( ss / double( v.size() - 1 ) ) / mean;
}

//
// main_equivalence and rosenthal: one draw per (family,n) feeds every
// (N,M) pair; ratio windows per row and a CV bound per (family,M,N) group
//
void
run_equivalence ( Context &                          ctx,
                  const std::vector< RiNormSpec > &  Ms,
                  const std::vector< json > &        N_lits )
{
    auto &  res = ctx.result;

    res.table.header = { "family", "n", "M", "N", "lhs", "stderr", "rhs", "ratio", "pass" };

    std::map< std::string, std::vector< double > >  groups;
    std::vector< std::string >                      group_order;

    for ( const auto &  fam : ctx.cfg.families )
    {
        for ( const auto  n : sizes_for( ctx.cfg, fam ) )
        {
            const auto  dists = fam.members( n );

            std::vector< SeqNormSpec >  Ns;

            for ( const auto &  lit : N_lits )
                Ns.push_back( parse_seq_norm( lit, n ) );

            const auto  lhs  = estimate_lhs_grid( dists, Ns, Ms, ctx.cfg.mc );
            const auto  D    = disjunctify( dists );
            const auto  unit = D.restrict_unit();
            const auto  y_n  = D.at_integers();

            for ( std::size_t  iN = 0; iN < Ns.size(); ++iN )
            {
                const double  seq_part = seq_eval( Ns[iN], y_n );

                for ( std::size_t  iM = 0; iM < Ms.size(); ++iM )
                {
                    const auto &  e     = lhs[iN][iM];
                    const double  rhs   = ri_eval( Ms[iM], unit ) + seq_part;
                    const double  ratio = e.value / rhs;
                    const bool    ok    = std::isfinite( ratio ) && ctx.window.contains( ratio );
                    const auto    key   = fam.label() + "|" + Ms[iM].label() + "|" + N_lits[iN].dump();

                    if ( ! groups.count( key ) )
                        group_order.push_back( key );

                    groups[ key ].push_back( ratio );

                    ctx.add_row( { fam.label(), std::to_string( n ), Ms[iM].label(), Ns[iN].label(),
                                   format_number( e.value ), format_number( e.std_error ),
                                   format_number( rhs ), format_number( ratio ) },
                                 { { "family", fam.label() }, { "n", n }, { "M", Ms[iM].label() }, { "N", Ns[iN].label() },
                                   { "lhs", e.value }, { "stderr", e.std_error }, { "rhs", rhs }, { "ratio", ratio } },
                                 ok,
                                 fam.label() + " n=" + std::to_string( n ) + " " + Ms[iM].label() + " " + Ns[iN].label() +
                                 " ratio " + format_number( ratio ) + " outside window" );
                }// for
            }// for
        }// for
    }// for

    json  cvs = json::array();

    for ( const auto &  key : group_order )
    {
        const double  cv = coefficient_of_variation( groups[ key ] );
        const bool    ok = cv < ctx.windows.cv_max;

        cvs.push_back( { { "group", key }, { "cv", cv }, { "pass", ok } } );

        if ( ! ok )
            res.failures.push_back( "group " + key + ": ratio CV " + format_number( cv ) + " >= " + format_number( ctx.windows.cv_max ) );
    }// for

    res.summary[ "cv" ] = cvs;
}

void
run_main_equivalence ( Context &  ctx )
{
    require_families( ctx.cfg );
    run_equivalence( ctx, ri_norms( ctx.cfg, RiNormSpec::lp( 1.0 ) ), seq_literals( ctx.cfg, { { "seq", "linf" } } ) );
}

void
run_rosenthal ( Context &  ctx )
{
    require_families( ctx.cfg );

    std::vector< RiNormSpec >  Ms;

    for ( const auto  p : ctx.cfg.sweep_p )
        Ms.push_back( checked( [p] { return RiNormSpec::lp( p ); } ) );

    for ( const auto &  m : ctx.cfg.M )
    {
        auto  M = parse_ri_norm( m );

        if ( ! std::holds_alternative< RiNormSpec::Lp >( M.variant ) )
            throw ConfigError( "rosenthal: M must be Lp" );

        Ms.push_back( std::move( M ) );
    }// for

    if ( Ms.empty() )
        throw ConfigError( "rosenthal: need M or sweep.p" );

    auto  N_lits = ctx.cfg.N;

    if ( N_lits.empty() )
        N_lits = { { { "seq", "lp" }, { "p", 1 } }, { { "seq", "lp" }, { "p", 2 } } };

    for ( const auto &  lit : N_lits )
    {
        const auto  N = parse_seq_norm( lit, 1 );
        const auto  p = std::get_if< SeqNormSpec::lp >( &N.variant );

        if ( p == nullptr || ( p->p != 1.0 && p->p != 2.0 ) )
            throw ConfigError( "rosenthal: N must be lp with p in {1,2}" );
    }// for

    run_equivalence( ctx, Ms, N_lits );
}

std::vector< std::size_t >
m_values ( const ExperimentConfig &  cfg,
           const std::size_t         n )
{
    if ( cfg.sweep_m.empty() )
        throw ConfigError( "experiment needs sweep.m" );

    std::vector< std::size_t >  ms;

    for ( const auto  m : cfg.sweep_m )
    {
        if ( m < 1 )
            throw ConfigError( "sweep.m entries must be >= 1" );

        if ( m <= n )
            ms.push_back( m );
    }// for

    return ms;
}

void
run_gauss_km ( Context &  ctx )
{
    require_families( ctx.cfg );

    auto &  res = ctx.result;

    res.table.header = { "family", "n", "m", "mc", "mc_stderr", "lambda_norm", "closed",
                         "ratio_mc_lambda", "ratio_mc_closed", "ratio_lambda_closed", "pass" };

    for ( const auto &  fam : ctx.cfg.families )
    {
        for ( const auto  n : sizes_for( ctx.cfg, fam ) )
        {
            const auto  a     = fam.coefficients( n );
            const auto  dists = fam.members( n );
            const auto  ms    = m_values( ctx.cfg, n );

            std::vector< SeqNormSpec >  Ns;

            for ( const auto  m : ms )
                Ns.push_back( SeqNormSpec::top_m( m ) );

            const auto  W = sample_seq_norms( dists, Ns, ctx.cfg.mc );

            for ( std::size_t  k = 0; k < ms.size(); ++k )
            {
                const auto    m      = ms[k];
                const auto    mc     = estimate_from_samples( W, k, RiNormSpec::lp( 1.0 ) );
                const double  lam    = lambda_norm( theta_top_m( m ), *fam.base, a );
                const double  closed = gauss_rhs_closed( a, m );
                const double  r1     = mc.value / lam;
                const double  r2     = mc.value / closed;
                const double  r3     = lam / closed;
                const bool    ok     = ctx.window.contains( r1 ) && ctx.window.contains( r2 ) && ctx.window.contains( r3 );

                ctx.add_row( { fam.label(), std::to_string( n ), std::to_string( m ),
                               format_number( mc.value ), format_number( mc.std_error ),
                               format_number( lam ), format_number( closed ),
                               format_number( r1 ), format_number( r2 ), format_number( r3 ) },
                             { { "family", fam.label() }, { "n", n }, { "m", m }, { "mc", mc.value },
                               { "mc_stderr", mc.std_error }, { "lambda_norm", lam }, { "closed", closed },
                               { "ratio_mc_lambda", r1 }, { "ratio_mc_closed", r2 }, { "ratio_lambda_closed", r3 } },
                             ok,
                             fam.label() + " n=" + std::to_string( n ) + " m=" + std::to_string( m ) + " ratios outside window" );
            }// for
        }// for
    }// for
}

// ξ ≡ v almost surely
std::optional< double >
deterministic_value ( const Distribution &  xi )
{
    if ( const auto  tp = std::get_if< TwoPoint >( &xi.kind() ); tp && tp->prob == 1.0 )
        return tp->value;

    return std::nullopt;
}

void
run_orlicz_lambda ( Context &  ctx )
{
    require_families( ctx.cfg );

    auto &  res = ctx.result;

    res.table.header = { "family", "n", "lhs", "lhs_stderr", "lambda_norm", "theta_norm", "ratio", "exact", "pass" };

    const auto  M     = ri_norms( ctx.cfg, RiNormSpec::lp( 1.0 ) ).front();
    const auto  N_lit = seq_literals( ctx.cfg, { { "seq", "lp" }, { "p", 1 } } ).front();

    for ( const auto &  fam : ctx.cfg.families )
    {
        for ( const auto  n : sizes_for( ctx.cfg, fam ) )
        {
            const auto  N     = parse_seq_norm( N_lit, n );
            const auto  theta = ctx.cfg.theta.empty() ? checked( [&] { return theta_for( M, N ); } )
                                                      : OrliczFunction::parse( ctx.cfg.theta );
            const auto  a     = fam.coefficients( n );
            const auto  dists = fam.members( n );
            const auto  lhs   = estimate_lhs( dists, N, M, ctx.cfg.mc );
            const auto  lam   = lambda_norm( theta, *fam.base, a );
            const auto  det   = deterministic_value( *fam.base );

            // for deterministic ξ = v, Λ(x) = Θ(vx)
            std::vector< double >  av( a );

            for ( auto &  x : av )
                x *= det.value_or( 1.0 );

            const double  theta_norm = luxemburg( theta, av );
            const double  ratio      = lhs.value / lam;
            const bool    exact_ok   = ! det || std::abs( lam - theta_norm ) <= 1e-8 * theta_norm;
            const bool    ok         = ctx.window.contains( ratio ) && exact_ok;

            ctx.add_row( { fam.label(), std::to_string( n ), format_number( lhs.value ), format_number( lhs.std_error ),
                           format_number( lam ), format_number( theta_norm ), format_number( ratio ),
                           det ? ( exact_ok ? "1" : "0" ) : "-" },
                         { { "family", fam.label() }, { "n", n }, { "lhs", lhs.value }, { "lhs_stderr", lhs.std_error },
                           { "lambda_norm", lam }, { "theta_norm", theta_norm }, { "ratio", ratio },
                           { "theta", theta.label() }, { "M", M.label() }, { "N", N.label() } },
                         ok,
                         fam.label() + " n=" + std::to_string( n ) + ( exact_ok ? " ratio outside window" : " Λ-norm differs from Θ-norm" ) );
        }// for
    }// for
}

void
run_selector ( Context &  ctx )
{
    require_families( ctx.cfg );

    auto &  res = ctx.result;

    res.table.header = { "family", "n", "m", "selector", "selector_stderr", "rhs", "ratio", "km_over_m", "ratio_km", "pass" };

    for ( const auto &  fam : ctx.cfg.families )
    {
        for ( const auto  n : sizes_for( ctx.cfg, fam ) )
        {
            const auto  dists = fam.members( n );

            for ( const auto  m : m_values( ctx.cfg, n ) )
            {
                const auto  rep = selector_experiment( dists, m, ctx.cfg.mc, ctx.window );

                ctx.add_row( { fam.label(), std::to_string( n ), std::to_string( m ),
                               format_number( rep.lhs ), format_number( rep.std_error ), format_number( rep.rhs ),
                               format_number( rep.ratio ), format_number( rep.extra[ "km_over_m" ].get< double >() ),
                               format_number( rep.extra[ "ratio_km" ].get< double >() ) },
                             rep.to_json(), rep.pass,
                             fam.label() + " n=" + std::to_string( n ) + " m=" + std::to_string( m ) + " ratio outside window" );
            }// for
        }// for
    }// for
}

void
run_hj_moments ( Context &  ctx )
{
    require_families( ctx.cfg );

    auto &  res = ctx.result;

    res.table.header = { "family", "n", "N", "p", "u_p", "u_quantile", "v_p", "ratio", "stderr", "pass" };

    const auto  ps = ctx.cfg.sweep_p.empty() ? std::vector< double >{ 1.0 } : ctx.cfg.sweep_p;

    for ( const auto &  fam : ctx.cfg.families )
    {
        for ( const auto  n : sizes_for( ctx.cfg, fam ) )
        {
            const auto  dists = fam.members( n );

            for ( const auto &  lit : seq_literals( ctx.cfg, { { "seq", "linf" } } ) )
            {
                const auto  N = parse_seq_norm( lit, n );

                for ( const auto  p : ps )
                {
                    const auto  rep = checked( [&] { return hj_moment_check( dists, N, p, ctx.cfg.mc, ctx.window ); } );

                    ctx.add_row( { fam.label(), std::to_string( n ), N.label(), format_number( p ),
                                   format_number( rep.lhs ), format_number( rep.extra[ "u_quantile" ].get< double >() ),
                                   format_number( rep.extra[ "v_p" ].get< double >() ), format_number( rep.ratio ),
                                   format_number( rep.std_error ) },
                                 rep.to_json(), rep.pass,
                                 fam.label() + " n=" + std::to_string( n ) + " " + N.label() + " p=" + format_number( p ) +
                                 " ratio outside window" );
                }// for
            }// for
        }// for
    }// for
}

void
run_tail_bound ( Context &  ctx )
{
    require_families( ctx.cfg );

    auto &  res = ctx.result;

    res.table.header = { "family", "n", "M", "N", "threshold", "exceedance", "stderr", "bound", "pass" };

    const auto  Ms = ri_norms( ctx.cfg, RiNormSpec::lp( 1.0 ) );

    for ( const auto &  fam : ctx.cfg.families )
    {
        for ( const auto  n : sizes_for( ctx.cfg, fam ) )
        {
            const auto  dists = fam.members( n );

            for ( const auto &  lit : seq_literals( ctx.cfg, { { "seq", "lp" }, { "p", 2 } } ) )
            {
                const auto  N = parse_seq_norm( lit, n );

                for ( const auto &  M : Ms )
                {
                    const auto  rep = checked( [&] { return tail_bound_check( dists, N, M, ctx.cfg.mc ); } );

                    ctx.add_row( { fam.label(), std::to_string( n ), M.label(), N.label(),
                                   format_number( rep.extra[ "threshold" ].get< double >() ), format_number( rep.lhs ),
                                   format_number( rep.std_error ), format_number( rep.rhs ) },
                                 rep.to_json(), rep.pass,
                                 fam.label() + " n=" + std::to_string( n ) + " " + N.label() + " exceedance above 1/(4e)" );
                }// for
            }// for
        }// for
    }// for
}

void
run_remark_iid ( Context &  ctx )
{
    require_families( ctx.cfg );

    auto &  res = ctx.result;

    res.table.header = { "family", "n", "m", "lhs", "lhs_stderr", "rhs", "max_term", "ratio", "pass" };

    for ( const auto &  fam : ctx.cfg.families )
    {
        if ( fam.type == "list" )
            throw ConfigError( "remark_iid needs a coefficient family" );

        // ξ normalized to E|ξ| = 1
        const auto  xi = Distribution::scaled( 1.0 / fam.base->mean(), *fam.base );

        for ( const auto  n : sizes_for( ctx.cfg, fam ) )
        {
            const auto  a  = fam.coefficients( n );
            const auto  as = decreasing_rearrangement( a );
            const auto  ms = m_values( ctx.cfg, n );

            std::vector< Distribution >  dists;

            for ( const auto  c : a )
                dists.push_back( Distribution::scaled( c, xi ) );

            std::vector< SeqNormSpec >  Ns;

            for ( const auto  m : ms )
                Ns.push_back( SeqNormSpec::top_m( m ) );

            const auto  W = sample_seq_norms( dists, Ns, ctx.cfg.mc );

            for ( std::size_t  k = 0; k < ms.size(); ++k )
            {
                const auto  m   = ms[k];
                const auto  lhs = estimate_from_samples( W, k, RiNormSpec::lp( 1.0 ) );

                std::vector< Distribution >  sub;

                for ( std::size_t  i = 1; i * m <= n; ++i )
                    sub.push_back( Distribution::scaled( as[ i * m - 1 ], xi ) );

                const auto    mx    = estimate_lhs( sub, SeqNormSpec::sup(), RiNormSpec::lp( 1.0 ), ctx.cfg.mc );
                const double  head  = std::accumulate( as.begin(), as.begin() + m, 0.0 );
                const double  rhs   = head + double( m ) * mx.value;
                const double  ratio = lhs.value / rhs;
                const bool    ok    = ctx.window.contains( ratio );

                ctx.add_row( { fam.label(), std::to_string( n ), std::to_string( m ),
                               format_number( lhs.value ), format_number( lhs.std_error ), format_number( rhs ),
                               format_number( mx.value ), format_number( ratio ) },
                             { { "family", fam.label() }, { "n", n }, { "m", m }, { "lhs", lhs.value },
                               { "lhs_stderr", lhs.std_error }, { "rhs", rhs }, { "max_term", mx.value }, { "ratio", ratio } },
                             ok,
                             fam.label() + " n=" + std::to_string( n ) + " m=" + std::to_string( m ) + " ratio outside window" );
            }// for
        }// for
    }// for
}

}// namespace anonymous

ExperimentResult
run_experiment ( const ExperimentConfig &  cfg,
                 const WindowTable &       windows )
{
    checked( [&] { cfg.mc.validate(); return 0; } );

    Context  ctx{ cfg, windows, windows.for_experiment( cfg.experiment ), {} };

    ctx.result.experiment = cfg.experiment;
    ctx.result.summary    = {
        { "experiment",      cfg.experiment },
        { "seed",            cfg.mc.seed },
        { "mc",              { { "samples_per_batch", cfg.mc.samples_per_batch }, { "batches", cfg.mc.batches }, { "seed", cfg.mc.seed } } },
        { "window",          { ctx.window.lo, ctx.window.hi } },
        { "windows_version", windows.version },
        { "rows",            json::array() }
    };

    const auto &  name = cfg.experiment;

    if      ( name == "main_equivalence" ) run_main_equivalence( ctx );
    else if ( name == "rosenthal" )        run_rosenthal( ctx );
    else if ( name == "gauss_km" )         run_gauss_km( ctx );
    else if ( name == "orlicz_lambda" )    run_orlicz_lambda( ctx );
    else if ( name == "selector" )         run_selector( ctx );
    else if ( name == "hj_moments" )       run_hj_moments( ctx );
    else if ( name == "tail_bound" )       run_tail_bound( ctx );
    else if ( name == "remark_iid" )       run_remark_iid( ctx );
    else
        throw ConfigError( "unknown experiment '" + name + "' (use --list)" );

    ctx.result.summary[ "pass" ]     = ctx.result.pass();
    ctx.result.summary[ "failures" ] = ctx.result.failures;

    return ctx.result;
}

////////////////////////////////////////////////////////////////////////////////
//
// command line
//
////////////////////////////////////////////////////////////////////////////////

int
run_cli ( int      argc,
          char **  argv )
{
    CLI::App  app{ "rinorm: r.i. norms of symmetric sequence norms of independent random variables" };

    std::string                    config_path, out_dir, experiment, windows_path;
    std::optional< std::uint64_t > seed;
    std::optional< std::size_t >   samples;
    bool                           list = false;

    app.add_option( "--config", config_path, "experiment config file (JSON)" );
    app.add_option( "--seed", seed, "override mc.seed" );
    app.add_option( "--samples", samples, "override mc.samples_per_batch" );
    app.add_option( "--out", out_dir, "output directory" );
    app.add_option( "--experiment", experiment, "override the experiment name" );
    app.add_option( "--windows", windows_path, "ratio window file" );
    app.add_flag( "--list", list, "print the experiment registry" );

    try
    {
        app.parse( argc, argv );
    }// try
    catch ( const CLI::ParseError &  e )
    {
        const int  code = app.exit( e );

        return code == 0 ? 0 : 2;
    }// catch

    if ( list )
    {
        for ( const auto &  e : experiment_registry() )
            std::cout << e.name << "  " << e.description << '\n';

        return 0;
    }// if

    if ( config_path.empty() )
    {
        std::cerr << "error: --config is required\n";
        return 2;
    }// if

    ExperimentResult  result;
    std::string       out;

    try
    {
        auto  cfg = ExperimentConfig::load( config_path );

        if ( seed )                  cfg.mc.seed              = *seed;
        if ( samples )               cfg.mc.samples_per_batch = *samples;
        if ( ! experiment.empty() )  cfg.experiment           = experiment;
        if ( ! out_dir.empty() )     cfg.out                  = out_dir;
        if ( ! windows_path.empty() ) cfg.windows             = windows_path;

        if ( cfg.experiment.empty() )
            throw ConfigError( "config names no experiment" );

        const auto  windows = WindowTable::load( cfg.windows.empty() ? std::string( RINORM_DEFAULT_WINDOWS ) : cfg.windows );

        result = run_experiment( cfg, windows );
        out    = cfg.out;
    }// try
    catch ( const ConfigError &  e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }// catch
    catch ( const std::exception &  e )
    {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 1;
    }// catch

    fs::create_directories( out );

    std::ofstream( fs::path( out ) / "results.csv" ) << result.table.csv();
    std::ofstream( fs::path( out ) / "summary.json" ) << result.summary.dump( 2 ) << '\n';

    std::cout << result.experiment << ": " << result.table.rows.size() << " rows, "
              << ( result.pass() ? "pass" : "FAIL" ) << " (" << ( fs::path( out ) / "results.csv" ).string() << ")\n";

    if ( ! result.pass() )
    {
        for ( const auto &  f : result.failures )
            std::cerr << "FAIL " << f << '\n';

        return 1;
    }// if

    return 0;
}

}// namespace rinorm
