#include <rinorm/montecarlo.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace rinorm {

void
McConfig::validate () const
{
    if ( samples_per_batch < 1 )
        throw std::invalid_argument( "McConfig: samples_per_batch must be >= 1" );

    if ( batches < 2 )
        throw std::invalid_argument( "McConfig: batches must be >= 2" );
}

Estimate
aggregate ( std::span< const double >  batch_values )
{
    const auto  b = batch_values.size();

    if ( b == 0 )
        throw std::invalid_argument( "aggregate: no batches" );

    const double  mean = std::accumulate( batch_values.begin(), batch_values.end(), 0.0 ) / double( b );
    double        ss   = 0.0;

    for ( const auto  v : batch_values )
        ss += ( v - mean ) * ( v - mean );

    const double  se = b > 1 ? std::sqrt( ss / double( b - 1 ) / double( b ) ) : 0.0;

    return { mean, se, b };
}

nlohmann::json
Report::to_json () const
{
    nlohmann::json  j = {
        { "experiment", experiment },
        { "inputs",     inputs },
        { "lhs",        lhs },
        { "rhs",        rhs },
        { "ratio",      ratio },
        { "stderr",     std_error },
        { "pass",       pass }
    };

    for ( const auto & [ key, value ] : extra.items() )
        j[ key ] = value;

    return j;
}

////////////////////////////////////////////////////////////////////////////////
//
// sampling
//
////////////////////////////////////////////////////////////////////////////////

std::vector< double >
sample_family ( std::span< const Distribution >  dists,
                RngStream &                      stream,
                const std::size_t                count )
{
    const auto             n = dists.size();
    std::vector< double >  out( n * count );

    for ( std::size_t  k = 0; k < count; ++k )
        for ( std::size_t  i = 0; i < n; ++i )
            out[ k * n + i ] = dists[i].sample( stream );

    return out;
}

NormSamples
sample_seq_norms ( std::span< const Distribution >  dists,
                   std::span< const SeqNormSpec >   Ns,
                   const McConfig &                 cfg )
{
    cfg.validate();

    if ( dists.empty() )
        throw std::invalid_argument( "sample_seq_norms: empty family" );

    using batch_t = std::vector< std::vector< double > >;

    return run_batches< batch_t >( cfg, [&] ( std::size_t, RngStream & stream )
    {
        const auto             s = cfg.samples_per_batch;
        batch_t                W( Ns.size(), std::vector< double >( s ) );
        std::vector< double >  x( dists.size() );

        for ( std::size_t  k = 0; k < s; ++k )
        {
            for ( std::size_t  i = 0; i < x.size(); ++i )
                x[i] = dists[i].sample( stream );

            for ( std::size_t  j = 0; j < Ns.size(); ++j )
                W[j][k] = seq_eval( Ns[j], x );
        }// for

        return W;
    } );
}

std::vector< double >
pooled ( const NormSamples &  samples,
         const std::size_t    iN )
{
    std::vector< double >  all;

    for ( const auto &  batch : samples )
        all.insert( all.end(), batch.at( iN ).begin(), batch.at( iN ).end() );

    return all;
}

////////////////////////////////////////////////////////////////////////////////
//
// left and right hand sides
//
////////////////////////////////////////////////////////////////////////////////

Estimate
estimate_from_samples ( const NormSamples &  samples,
                        const std::size_t    iN,
                        const RiNormSpec &   M )
{
    std::vector< double >  values;

    values.reserve( samples.size() );

    for ( const auto &  batch : samples )
        values.push_back( ri_eval( M, empirical_quantile( batch.at( iN ) ) ) );

    return aggregate( values );
}

Estimate
estimate_lhs ( std::span< const Distribution >  dists,
               const SeqNormSpec &              N,
               const RiNormSpec &               M,
               const McConfig &                 cfg )
{
    const SeqNormSpec  Ns[] = { N };
    const auto         W    = sample_seq_norms( dists, Ns, cfg );

    return estimate_from_samples( W, 0, M );
}

std::vector< std::vector< Estimate > >
estimate_lhs_grid ( std::span< const Distribution >  dists,
                    std::span< const SeqNormSpec >   Ns,
                    std::span< const RiNormSpec >    Ms,
                    const McConfig &                 cfg )
{
    const auto  W = sample_seq_norms( dists, Ns, cfg );

    std::vector< std::vector< Estimate > >  out( Ns.size() );

    for ( std::size_t  j = 0; j < Ns.size(); ++j )
        for ( const auto &  M : Ms )
            out[j].push_back( estimate_from_samples( W, j, M ) );

    return out;
}

double
rhs_eval ( const Disjunctification &  D,
           const SeqNormSpec &        N,
           const RiNormSpec &         M )
{
    return ri_eval( M, D.restrict_unit() ) + seq_eval( N, D.at_integers() );
}

double
rhs_eval ( std::span< const Distribution >  dists,
           const SeqNormSpec &              N,
           const RiNormSpec &               M )
{
    return rhs_eval( disjunctify( dists ), N, M );
}

double
max_partial_sum_norm ( const SeqNormSpec &        N,
                       std::span< const double >  x )
{
    std::vector< double >  partial( x.size(), 0.0 );
    double                 best = 0.0;

    for ( std::size_t  k = 0; k < x.size(); ++k )
    {
        partial[k] = x[k];
        best       = std::max( best, seq_eval( N, partial ) );
    }// for

    return best;
}

////////////////////////////////////////////////////////////////////////////////
//
// checks
//
////////////////////////////////////////////////////////////////////////////////

SandwichReport
max_sandwich_check ( std::span< const Distribution >  dists,
                     std::span< const double >        t_grid )
{
    if ( t_grid.empty() )
        throw std::invalid_argument( "max_sandwich_check: empty grid" );

    SandwichReport  rep;

    rep.min_lower_margin = std::numeric_limits< double >::infinity();
    rep.min_upper_margin = std::numeric_limits< double >::infinity();

    for ( const auto  t : t_grid )
    {
        // 1 - Π(1-p_i) = Σ_i p_i Π_{j<i}(1-p_j); every term is at most p_i
        double  sum_p = 0.0;
        double  value = 0.0;
        double  stay  = 1.0;

        for ( const auto &  d : dists )
        {
            const double  p = d.survival( t );

            sum_p += p;
            value += p * stay;
            stay  *= ( 1.0 - p );
        }// for

        value = std::min( value, 1.0 );

        const double  upper = std::min( 1.0, sum_p );
        const double  lower = 0.5 * upper;

        rep.rows.push_back( { t, lower, value, upper } );

        if ( value < lower || value > upper )
            ++rep.violations;

        rep.min_lower_margin = std::min( rep.min_lower_margin, value - lower );
        rep.min_upper_margin = std::min( rep.min_upper_margin, upper - value );
    }// for

    return rep;
}

namespace
{

nlohmann::json
family_json ( std::span< const Distribution >  dists )
{
    auto  labels = nlohmann::json::array();

    for ( const auto &  d : dists )
        labels.push_back( d.label() );

    return labels;
}

}// namespace anonymous

Report
selector_experiment ( std::span< const Distribution >  dists,
                      const std::size_t                m,
                      const McConfig &                 cfg,
                      const RatioWindow &              window )
{
    if ( m < 1 )
        throw std::invalid_argument( "selector_experiment: need m >= 1" );

    cfg.validate();

    const double  prob = 1.0 / double( m );
    const auto    km   = SeqNormSpec::top_m( m );

    using pair_t = std::pair< double, double >;

    const auto  batches = run_batches< pair_t >( cfg, [&] ( std::size_t, RngStream & stream )
    {
        std::vector< double >  x( dists.size() );
        double                 sum_sel = 0.0;
        double                 sum_km  = 0.0;

        for ( std::size_t  k = 0; k < cfg.samples_per_batch; ++k )
        {
            double  mx = 0.0;

            for ( std::size_t  i = 0; i < x.size(); ++i )
            {
                x[i] = dists[i].sample( stream );

                if ( stream.uniform() < prob )
                    mx = std::max( mx, x[i] );
            }// for

            sum_sel += mx;
            sum_km  += seq_eval( km, x );
        }// for

        const auto  s = double( cfg.samples_per_batch );

        return pair_t{ sum_sel / s, sum_km / s };
    } );

    std::vector< double >  sel, kmv;

    for ( const auto & [ a, b ] : batches )
    {
        sel.push_back( a );
        kmv.push_back( b * prob );
    }// for

    const auto  est_sel = aggregate( sel );
    const auto  est_km  = aggregate( kmv );
    const auto  D       = disjunctify( dists );
    const auto  rhs     = prob * ( D.integral( 0.0, 1.0 ) + seq_eval( km, D.at_integers() ) );

    Report  rep;

    rep.experiment = "selector";
    rep.inputs     = { { "dists", family_json( dists ) }, { "m", m }, { "seed", cfg.seed } };
    rep.lhs        = est_sel.value;
    rep.rhs        = rhs;
    rep.ratio      = est_sel.value / rhs;
    rep.std_error  = est_sel.std_error;
    rep.extra      = { { "km_over_m", est_km.value },
                       { "km_over_m_stderr", est_km.std_error },
                       { "ratio_km", est_sel.value / est_km.value } };
    rep.pass       = window.contains( rep.ratio ) && window.contains( est_sel.value / est_km.value );

    return rep;
}

Report
hj_moment_check ( std::span< const Distribution >  dists,
                  const SeqNormSpec &              N,
                  const double                     p,
                  const McConfig &                 cfg,
                  const RatioWindow &              window )
{
    if ( ! ( p >= 1 ) )
        throw std::invalid_argument( "hj_moment_check: need p >= 1" );

    const double  alpha = std::exp( -p ) / 4.0;

    if ( double( cfg.total() ) < 10.0 / alpha )
        throw std::invalid_argument( "insufficient tail resolution" );

    const SeqNormSpec  Ns[] = { N };
    const auto         W    = sample_seq_norms( dists, Ns, cfg );
    const auto         all  = pooled( W, 0 );

    std::vector< double >  batch_norms;

    for ( const auto &  batch : W )
    {
        double  s = 0.0;

        for ( const auto  w : batch[0] )
            s += std::pow( w, p );

        batch_norms.push_back( std::pow( s / double( batch[0].size() ), 1.0 / p ) );
    }// for

    double  total = 0.0;

    for ( const auto  w : all )
        total += std::pow( w, p );

    const double  u_p  = std::pow( total / double( all.size() ), 1.0 / p );
    const double  u_q  = empirical_quantile_at( all, alpha );
    const double  v_p  = ri_eval( RiNormSpec::lp( p ), disjunctify( dists ).restrict_unit() );

    Report  rep;

    rep.experiment = "hj_moments";
    rep.inputs     = { { "dists", family_json( dists ) }, { "N", N.label() }, { "p", p }, { "seed", cfg.seed } };
    rep.lhs        = u_p;
    rep.rhs        = u_q + v_p;
    rep.ratio      = u_p / rep.rhs;
    rep.std_error  = aggregate( batch_norms ).std_error;
    rep.extra      = { { "u_quantile", u_q }, { "v_p", v_p }, { "alpha", alpha } };
    rep.pass       = window.contains( rep.ratio );

    return rep;
}

Report
ri_maxsum_check ( std::span< const Distribution >  dists,
                  const SeqNormSpec &              N,
                  const RiNormSpec &               M,
                  const McConfig &                 cfg,
                  const RatioWindow &              window )
{
    const SeqNormSpec  Ns[] = { N };
    const auto         W    = sample_seq_norms( dists, Ns, cfg );
    const auto         u_M  = estimate_from_samples( W, 0, M );
    const auto         u_1  = estimate_from_samples( W, 0, RiNormSpec::lp( 1.0 ) );
    const double       v_M  = ri_eval( M, disjunctify( dists ).restrict_unit() );

    Report  rep;

    rep.experiment = "ri_maxsum";
    rep.inputs     = { { "dists", family_json( dists ) }, { "N", N.label() }, { "M", M.label() }, { "seed", cfg.seed } };
    rep.lhs        = u_M.value;
    rep.rhs        = u_1.value + v_M;
    rep.ratio      = rep.lhs / rep.rhs;
    rep.std_error  = u_M.std_error;
    rep.extra      = { { "u_1", u_1.value }, { "v_M", v_M } };
    rep.pass       = window.contains( rep.ratio );

    return rep;
}

Report
tail_bound_check ( std::span< const Distribution >  dists,
                   const SeqNormSpec &              N,
                   const RiNormSpec &               M,
                   const McConfig &                 cfg )
{
    if ( cfg.total() < 10000 )
        throw std::invalid_argument( "tail_bound_check: need at least 1e4 samples" );

    const SeqNormSpec  Ns[] = { N };
    const auto         W    = sample_seq_norms( dists, Ns, cfg );
    const auto         all  = pooled( W, 0 );
    const double       y_P  = rhs_eval( dists, N, M );
    const double       thr  = 200.0 * y_P;

    std::size_t  exceed = 0;

    for ( const auto  w : all )
        if ( w > thr )
            ++exceed;

    const double  s     = double( all.size() );
    const double  frac  = double( exceed ) / s;
    const double  se    = std::sqrt( frac * ( 1.0 - frac ) / s );
    const double  bound = 1.0 / ( 4.0 * std::numbers::e );

    Report  rep;

    rep.experiment = "tail_bound";
    rep.inputs     = { { "dists", family_json( dists ) }, { "N", N.label() }, { "M", M.label() }, { "seed", cfg.seed } };
    rep.lhs        = frac;
    rep.rhs        = bound;
    rep.ratio      = frac / bound;
    rep.std_error  = se;
    rep.extra      = { { "threshold", thr }, { "y_P", y_P }, { "exceedances", exceed } };
    rep.pass       = frac <= bound + 3.0 * se;

    return rep;
}

}// namespace rinorm
