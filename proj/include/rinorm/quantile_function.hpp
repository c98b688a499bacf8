#ifndef RINORM_QUANTILE_FUNCTION_HPP
#define RINORM_QUANTILE_FUNCTION_HPP

#include <ostream>
#include <span>
#include <vector>

namespace rinorm {

///
/// Non-increasing function on [0,L) stored piecewise: on [t_j, t_{j+1})
/// the value runs affinely from left(j) to right(j). Pieces with
/// left(j) == right(j) are constant. The function is right-continuous and
/// vanishes for t >= L. Only left(0) may be +infinity.
///
class QuantileFunction
{
public:
    struct piece_t
    {
        double  t0, t1;       // [t0, t1)
        double  v0, v1;       // values at t0 and t1⁻

        bool   is_constant () const { return v0 == v1; }
        double length      () const { return t1 - t0; }
    };

    //
    // throws std::invalid_argument("not a rearrangement") if the values
    // increase anywhere, and std::invalid_argument for malformed meshes
    //
    QuantileFunction ( std::vector< double >  breakpoints,
                       std::vector< double >  left_values,
                       std::vector< double >  right_values );

    // constant pieces: values[j] on [breakpoints[j], breakpoints[j+1])
    static QuantileFunction step   ( std::vector< double >  breakpoints,
                                     std::vector< double >  values );

    // continuous piecewise affine through (breakpoints[j], values[j])
    static QuantileFunction affine ( std::vector< double >  breakpoints,
                                     std::vector< double >  values );

    static QuantileFunction constant ( double  value, double  length );

    double operator () ( double  t ) const;

    double      domain_length () const { return breaks_.back(); }
    std::size_t num_pieces    () const { return left_.size(); }
    piece_t     piece         ( std::size_t  j ) const
    {
        return { breaks_[j], breaks_[j+1], left_[j], right_[j] };
    }

    std::span< const double > breakpoints () const { return breaks_; }

    // exact integral over [a,b] ∩ [0,L)
    double integral ( double  a, double  b ) const;

    // the function restricted to [0, min(len, L))
    QuantileFunction restricted ( double  len ) const;

    // (t ↦ f(t/c)) on [0, cL)
    QuantileFunction dilated ( double  c ) const;

    // (t,value) at every breakpoint, right endpoint with the left limit
    void write_csv ( std::ostream &  os ) const;

private:
    std::vector< double >  breaks_;
    std::vector< double >  left_;
    std::vector< double >  right_;
};

}// namespace rinorm

#endif // RINORM_QUANTILE_FUNCTION_HPP
