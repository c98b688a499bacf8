#ifndef RINORM_MONTECARLO_HPP
#define RINORM_MONTECARLO_HPP
//
// Seeded Monte Carlo for ‖ ‖(X_i)‖_N ‖_M and the stochastic checks built
// on it. Batches are independent: batch k draws from RngStream(seed, k),
// and results are folded in batch order, so serial and threaded runs
// produce identical numbers.
//

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <thread>
#include <algorithm>
#include <utility>
#include <vector>

#include <json.hpp>

#include <rinorm/distributions.hpp>
#include <rinorm/norms.hpp>
#include <rinorm/random.hpp>
#include <rinorm/rearrange.hpp>

namespace rinorm {

struct McConfig
{
    std::size_t    samples_per_batch = 10000;
    std::size_t    batches           = 10;
    std::uint64_t  seed              = 1;

    std::size_t total () const { return samples_per_batch * batches; }
    void        validate () const;
};

struct Estimate
{
    double       value     = 0.0;
    double       std_error = 0.0;   // across-batch standard error of the mean
    std::size_t  batches   = 0;
};

// mean and standard error of per-batch values
Estimate aggregate ( std::span< const double >  batch_values );

struct RatioWindow
{
    double  lo = 1.0 / 30.0;
    double  hi = 30.0;

    bool contains ( double  r ) const { return r >= lo && r <= hi; }
};

struct Report
{
    std::string     experiment;
    nlohmann::json  inputs = nlohmann::json::object();
    double          lhs       = 0.0;
    double          rhs       = 0.0;
    double          ratio     = 0.0;
    double          std_error = 0.0;
    bool            pass      = false;
    nlohmann::json  extra = nlohmann::json::object();

    nlohmann::json to_json () const;
};

////////////////////////////////////////////////////////////////////////////////
//
// sampling
//
////////////////////////////////////////////////////////////////////////////////

//
// runs fn(batch, stream) for every batch, possibly on several threads,
// and returns the results in batch order
//
template < typename result_t >
std::vector< result_t >
run_batches ( const McConfig &                                                cfg,
              const std::function< result_t ( std::size_t, RngStream & ) > &  fn )
{
    std::vector< result_t >  results( cfg.batches );

    const auto  n_threads = std::min< std::size_t >( cfg.batches, std::max( 1u, std::thread::hardware_concurrency() ) );

    auto  worker = [&] ( const std::size_t w )
    {
        for ( std::size_t  b = w; b < cfg.batches; b += n_threads )
        {
            RngStream  stream( cfg.seed, b );

            results[b] = fn( b, stream );
        }// for
    };

    if ( n_threads <= 1 )
    {
        worker( 0 );
        return results;
    }// if

    std::vector< std::thread >  threads;

    for ( std::size_t  w = 0; w < n_threads; ++w )
        threads.emplace_back( worker, w );

    for ( auto &  t : threads )
        t.join();

    return results;
}

// s draws of the vector (|X_1|,...,|X_n|), row-major
std::vector< double > sample_family ( std::span< const Distribution >  dists,
                                      RngStream &                      stream,
                                      std::size_t                      count );

//
// per batch and per N, the sample of W = ‖(|X_i|)‖_N; the same draws feed
// every N. Result is indexed [batch][N][sample].
//
using NormSamples = std::vector< std::vector< std::vector< double > > >;

NormSamples sample_seq_norms ( std::span< const Distribution >  dists,
                               std::span< const SeqNormSpec >   Ns,
                               const McConfig &                 cfg );

// all batches of one N concatenated in batch order
std::vector< double > pooled ( const NormSamples &  samples, std::size_t  iN );

////////////////////////////////////////////////////////////////////////////////
//
// left and right hand sides
//
////////////////////////////////////////////////////////////////////////////////

// ‖ ‖(X_i)‖_N ‖_M, M applied to the empirical quantile of each batch
Estimate estimate_lhs ( std::span< const Distribution >  dists,
                        const SeqNormSpec &              N,
                        const RiNormSpec &               M,
                        const McConfig &                 cfg );

// estimates for every (N,M) pair from one set of draws, indexed [iN][iM]
std::vector< std::vector< Estimate > >
estimate_lhs_grid ( std::span< const Distribution >  dists,
                    std::span< const SeqNormSpec >   Ns,
                    std::span< const RiNormSpec >    Ms,
                    const McConfig &                 cfg );

// M-norm estimate from precomputed norm samples
Estimate estimate_from_samples ( const NormSamples &  samples,
                                 std::size_t          iN,
                                 const RiNormSpec &   M );

// ‖Y|_[0,1]‖_M + ‖(Y(i))‖_N
double rhs_eval ( std::span< const Distribution >  dists,
                  const SeqNormSpec &              N,
                  const RiNormSpec &               M );

double rhs_eval ( const Disjunctification &  D,
                  const SeqNormSpec &        N,
                  const RiNormSpec &         M );

// max_k ‖Σ_{i<=k} x_i e_i‖_N, literally over all prefixes
double max_partial_sum_norm ( const SeqNormSpec &  N, std::span< const double >  x );

////////////////////////////////////////////////////////////////////////////////
//
// checks
//
////////////////////////////////////////////////////////////////////////////////

struct SandwichRow
{
    double  t;
    double  lower;      // ½ min(1, Σ p_i)
    double  value;      // 1 - Π (1 - p_i)
    double  upper;      // min(1, Σ p_i)
};

struct SandwichReport
{
    std::vector< SandwichRow >  rows;
    std::size_t                 violations = 0;
    double                      min_lower_margin = 0.0;   // min(value - lower)
    double                      min_upper_margin = 0.0;   // min(upper - value)

    bool pass () const { return violations == 0; }
};

SandwichReport max_sandwich_check ( std::span< const Distribution >  dists,
                                    std::span< const double >        t_grid );

// E‖(I_i X_i)‖_∞ with P(I_i = 1) = 1/m against (1/m)(∫_0^1 Y + ‖(Y(i))‖_{k_m})
Report selector_experiment ( std::span< const Distribution >  dists,
                             std::size_t                      m,
                             const McConfig &                 cfg,
                             const RatioWindow &              window = {} );

// ‖U‖_p against U^#(e^{-p}/4) + ‖V‖_p
Report hj_moment_check ( std::span< const Distribution >  dists,
                         const SeqNormSpec &              N,
                         double                           p,
                         const McConfig &                 cfg,
                         const RatioWindow &              window = {} );

// ‖U‖_M against ‖U‖_1 + ‖V‖_M
Report ri_maxsum_check ( std::span< const Distribution >  dists,
                         const SeqNormSpec &              N,
                         const RiNormSpec &               M,
                         const McConfig &                 cfg,
                         const RatioWindow &              window = {} );

// P( ‖(X_i)‖_N > 200 ‖Y‖_P ) against 1/(4e)
Report tail_bound_check ( std::span< const Distribution >  dists,
                          const SeqNormSpec &              N,
                          const RiNormSpec &               M,
                          const McConfig &                 cfg );

}// namespace rinorm

#endif // RINORM_MONTECARLO_HPP
