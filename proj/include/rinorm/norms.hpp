#ifndef RINORM_NORMS_HPP
#define RINORM_NORMS_HPP
//
// Rearrangement invariant function norms on [0,1], symmetric sequence
// norms, and the P functional that combines them.
//
// All spaces are normalized: ‖1_[0,1]‖_M = 1 and ‖e_1‖_N = 1.
//

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <rinorm/orlicz_function.hpp>
#include <rinorm/quantile_function.hpp>

namespace rinorm {

////////////////////////////////////////////////////////////////////////////////
//
// norm descriptions
//
////////////////////////////////////////////////////////////////////////////////

struct RiNormSpec
{
    struct Lp      { double p; };
    struct Lorentz { double p, q; };
    struct Orlicz  { OrliczFunction phi; };

    std::variant< Lp, Lorentz, Orlicz >  variant;

    // q with L_q ↪ M (metadata)
    double                               embed_exponent = 1.0;

    static RiNormSpec lp      ( double  p );
    static RiNormSpec lorentz ( double  p, double  q );
    static RiNormSpec orlicz  ( OrliczFunction  phi, double  embed_exponent = 1.0 );

    std::string label () const;
};

struct SeqNormSpec
{
    struct lp        { double p; };
    struct linf      {};
    struct TopM      { std::size_t m; };
    struct OrliczSeq { OrliczFunction psi; };

    std::variant< lp, linf, TopM, OrliczSeq >  variant;

    static SeqNormSpec lp_norm ( double  p );
    static SeqNormSpec sup     ();
    static SeqNormSpec top_m   ( std::size_t  m );
    static SeqNormSpec orlicz  ( OrliczFunction  psi );

    std::string label () const;
};

////////////////////////////////////////////////////////////////////////////////
//
// Luxemburg gauge
//
////////////////////////////////////////////////////////////////////////////////

//
// inf{ λ > 0 : modular(λ) <= 1 } for a modular non-increasing in λ.
// `scale` is any positive magnitude of the argument (e.g. its maximum);
// the bracket is grown over powers of two starting at the power of two
// above `scale`. Returns 0 if scale == 0 and +inf if no finite λ works.
//
template < typename modular_t >
double
luxemburg_gauge ( const modular_t &  modular,
                  const double       scale,
                  const double       rel_tol = 1e-10 )
{
    if ( ! ( scale > 0 ) )
        return 0.0;

    if ( std::isinf( scale ) )
        return std::numeric_limits< double >::infinity();

    double  hi = std::exp2( std::ceil( std::log2( scale ) ) );
    double  lo = 0.0;

    if ( modular( hi ) > 1.0 )
    {
        lo = hi;
        hi = 2.0 * hi;

        while ( modular( hi ) > 1.0 )
        {
            lo  = hi;
            hi *= 2.0;

            if ( hi > 1e300 )
                return std::numeric_limits< double >::infinity();
        }// while
    }// if
    else
    {
        lo = 0.5 * hi;

        while ( modular( lo ) <= 1.0 )
        {
            hi  = lo;
            lo *= 0.5;

            if ( lo < scale * 1e-300 )
                return 0.0;
        }// while
    }// else

    while ( hi - lo > rel_tol * hi )
    {
        const double  mid = 0.5 * ( lo + hi );

        if ( mid <= lo || mid >= hi )
            break;

        if ( modular( mid ) > 1.0 ) lo = mid;
        else                        hi = mid;
    }// while

    return hi;
}

// ∫_0^L Φ(f/λ) gauge over the whole domain of f
double luxemburg ( const OrliczFunction &  phi, const QuantileFunction &  f );

// Σ Ψ(|x_i|/λ) gauge
double luxemburg ( const OrliczFunction &  psi, std::span< const double >  x );

// ∫_0^L Φ(f) dt, piecewise: exact on constant pieces, Gauss-Legendre on affine ones
double modular ( const OrliczFunction &  phi, const QuantileFunction &  f );

////////////////////////////////////////////////////////////////////////////////
//
// evaluation
//
////////////////////////////////////////////////////////////////////////////////

// ‖f|_[0,1]‖_M
double ri_eval ( const RiNormSpec &  M, const QuantileFunction &  f );

double seq_eval ( const SeqNormSpec &  N, std::span< const double >  x );

// magnitudes sorted in non-increasing order
std::vector< double > decreasing_rearrangement ( std::span< const double >  x );

struct PFunctional
{
    RiNormSpec   M;
    SeqNormSpec  N;
    std::size_t  n = 0;     // sequence length, 0: ceil of the domain length of f
};

// ‖f|_[0,1]‖_M + ‖(f(1),...,f(n))‖_N
double p_eval ( const PFunctional &  P, const QuantileFunction &  f );

// ‖f|_[0,1]‖_M + ‖(∫_{i-1}^i f)_i‖_N
double p_prime_eval ( const PFunctional &  P, const QuantileFunction &  f );

//
// (Σ x*_i y*_i,  Σ_m (y*_m - y*_{m+1}) ‖x‖_{k_m}) with y*_{n+1} = 0;
// both coordinates agree by Abel summation
//
std::pair< double, double > abel_expand ( std::span< const double >  x,
                                          std::span< const double >  y );

// t ↦ f(t/c) on [0, cL)
inline QuantileFunction
dilate_domain ( const QuantileFunction &  f,
                const double              c )
{
    return f.dilated( c );
}

}// namespace rinorm

#endif // RINORM_NORMS_HPP
