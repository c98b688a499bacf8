#ifndef RINORM_ORLICZ_HPP
#define RINORM_ORLICZ_HPP
//
// Orlicz function algebra: the Θ splice of (Φ,Ψ), its regularization Θ̃,
// the expectation transform Λ(x) = E Θ(x|ξ|), and the closed forms for
// Gaussian coefficients under the top-m norm.
//

#include <span>
#include <utility>
#include <vector>

#include <rinorm/distributions.hpp>
#include <rinorm/norms.hpp>
#include <rinorm/orlicz_function.hpp>

namespace rinorm {

// Ψ on [0,1], Φ on [1,∞); requires Φ(1) = Ψ(1) = 1
OrliczFunction make_theta ( const OrliczFunction &  phi,
                            const OrliczFunction &  psi );

// Θ for an (M,N) pair whose members are Orlicz spaces (Lp and lp included)
OrliczFunction theta_for ( const RiNormSpec &  M,
                           const SeqNormSpec &  N );

// x ↦ ∫_0^x Θ(t)/t dt; requires Θ(t)/t non-decreasing
OrliczFunction tilde ( const OrliczFunction &  theta );

// x ↦ (x - 1/m)⁺, the Θ of (L_1, k_m) up to equivalence
OrliczFunction theta_top_m ( std::size_t  m );

// Λ(x) = ∫_0^1 Θ(x·Q_ξ(u)) du
double make_lambda ( const OrliczFunction &  theta,
                     const Distribution &    xi,
                     double                  x );

// Λ wrapped as an Orlicz function
OrliczFunction lambda_function ( const OrliczFunction &  theta,
                                 const Distribution &    xi );

// inf{ λ : Σ_i Λ(a_i/λ) <= 1 }
double lambda_norm ( const OrliczFunction &     theta,
                     const Distribution &       xi,
                     std::span< const double >  a );

// x·exp(-1/(mx)²)
double gaussian_lambda_equiv ( std::size_t  m, double  x );

// (Luxemburg norm under exp(1-1/x²),  sup_i b*_i √(1+log i))
std::pair< double, double > exp_gauss_seq_norm ( std::span< const double >  b );

// Σ_{i<=m} a*_i + m · sup_{1<=i<=n/m} a*_{mi} √(1+log i)
double gauss_rhs_closed ( std::span< const double >  a,
                          std::size_t                m );

}// namespace rinorm

#endif // RINORM_ORLICZ_HPP
