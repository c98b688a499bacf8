#ifndef RINORM_ORLICZ_FUNCTION_HPP
#define RINORM_ORLICZ_FUNCTION_HPP

#include <functional>
#include <string>

namespace rinorm {

///
/// Non-negative, non-decreasing function on [0,∞) vanishing at 0,
/// used as the modular of a Luxemburg norm. Convexity is only claimed,
/// never assumed by the evaluation code.
///
class OrliczFunction
{
public:
    using evaluator_t = std::function< double ( double ) >;

    OrliczFunction ( evaluator_t  f,
                     std::string  label,
                     bool         is_convex_claimed )
            : f_( std::move( f ) )
            , label_( std::move( label ) )
            , convex_( is_convex_claimed )
    {}

    double operator () ( const double  x ) const { return x > 0 ? f_( x ) : 0.0; }

    const std::string & label             () const { return label_; }
    bool                is_convex_claimed () const { return convex_; }

    // x^p, p >= 1
    static OrliczFunction power ( double  p );

    // exp(1 - 1/x²), extended by 0 at 0
    static OrliczFunction exp_gauss ();

    //
    // named functions: "power:p", "theta_top_m:m", "exp_gauss",
    // "spliced:<phi>,<psi>" with <phi>,<psi> themselves "power:p" or "exp_gauss"
    //
    static OrliczFunction parse ( const std::string &  name );

private:
    evaluator_t  f_;
    std::string  label_;
    bool         convex_;
};

}// namespace rinorm

#endif // RINORM_ORLICZ_FUNCTION_HPP
