#include <rinorm/quantile_function.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <stdexcept>

namespace rinorm {

QuantileFunction::QuantileFunction ( std::vector< double >  breakpoints,
                                     std::vector< double >  left_values,
                                     std::vector< double >  right_values )
        : breaks_( std::move( breakpoints ) )
        , left_(   std::move( left_values ) )
        , right_(  std::move( right_values ) )
{
    if ( breaks_.size() < 2 || left_.size() + 1 != breaks_.size() || right_.size() != left_.size() )
        throw std::invalid_argument( "QuantileFunction: inconsistent mesh and value sizes" );

    if ( breaks_.front() != 0.0 )
        throw std::invalid_argument( "QuantileFunction: mesh must start at 0" );

    for ( std::size_t  j = 0; j + 1 < breaks_.size(); ++j )
        if ( ! ( breaks_[j] < breaks_[j+1] ) || ! std::isfinite( breaks_[j+1] ) )
            throw std::invalid_argument( "QuantileFunction: breakpoints must be strictly increasing" );

    for ( std::size_t  j = 0; j < left_.size(); ++j )
    {
        const bool  inf_ok = ( j == 0 );

        if ( std::isnan( left_[j] ) || std::isnan( right_[j] ) ||
             ( ! inf_ok && std::isinf( left_[j] ) ) || std::isinf( right_[j] ) )
            throw std::invalid_argument( "QuantileFunction: values must be finite" );

        if ( right_[j] < 0 || left_[j] < right_[j] )
            throw std::invalid_argument( "not a rearrangement" );

        if ( j > 0 && right_[j-1] < left_[j] )
            throw std::invalid_argument( "not a rearrangement" );
    }// for

    // an infinite head is represented as a constant +inf piece
    if ( std::isinf( left_[0] ) && right_[0] != left_[0] )
        right_[0] = left_[0];
}

QuantileFunction
QuantileFunction::step ( std::vector< double >  breakpoints,
                         std::vector< double >  values )
{
    auto  right = values;

    return QuantileFunction( std::move( breakpoints ), std::move( values ), std::move( right ) );
}

QuantileFunction
QuantileFunction::affine ( std::vector< double >  breakpoints,
                           std::vector< double >  values )
{
    if ( values.size() != breakpoints.size() || values.size() < 2 )
        throw std::invalid_argument( "QuantileFunction::affine: need one value per breakpoint" );

    std::vector< double >  left( values.begin(), values.end() - 1 );
    std::vector< double >  right( values.begin() + 1, values.end() );

    return QuantileFunction( std::move( breakpoints ), std::move( left ), std::move( right ) );
}

QuantileFunction
QuantileFunction::constant ( const double  value,
                             const double  length )
{
    return step( { 0.0, length }, { value } );
}

double
QuantileFunction::operator () ( const double  t ) const
{
    if ( t >= domain_length() )
        return 0.0;

    if ( t <= 0 )
        return left_.front();

    // first breakpoint strictly greater than t
    const auto  it = std::upper_bound( breaks_.begin(), breaks_.end(), t );
    const auto  j  = std::size_t( it - breaks_.begin() ) - 1;
    const auto  p  = piece( j );

    if ( p.is_constant() )
        return p.v0;

    const double  s = ( t - p.t0 ) / p.length();

    return p.v0 + s * ( p.v1 - p.v0 );
}

double
QuantileFunction::integral ( double  a,
                             double  b ) const
{
    a = std::max( a, 0.0 );
    b = std::min( b, domain_length() );

    if ( ! ( a < b ) )
        return 0.0;

    double  sum = 0.0;

    for ( std::size_t  j = 0; j < num_pieces(); ++j )
    {
        const auto    p  = piece( j );
        const double  lo = std::max( a, p.t0 );
        const double  hi = std::min( b, p.t1 );

        if ( ! ( lo < hi ) )
            continue;

        if ( p.is_constant() )
        {
            sum += p.v0 * ( hi - lo );
        }// if
        else
        {
            const double  slope = ( p.v1 - p.v0 ) / p.length();
            const double  f_lo  = p.v0 + slope * ( lo - p.t0 );
            const double  f_hi  = p.v0 + slope * ( hi - p.t0 );

            sum += 0.5 * ( f_lo + f_hi ) * ( hi - lo );
        }// else
    }// for

    return sum;
}

QuantileFunction
QuantileFunction::restricted ( const double  len ) const
{
    if ( ! ( len > 0 ) )
        throw std::invalid_argument( "QuantileFunction::restricted: length must be > 0" );

    if ( len >= domain_length() )
        return *this;

    std::vector< double >  br{ 0.0 };
    std::vector< double >  lv, rv;

    for ( std::size_t  j = 0; j < num_pieces(); ++j )
    {
        const auto  p = piece( j );

        if ( p.t0 >= len )
            break;

        if ( p.t1 <= len )
        {
            br.push_back( p.t1 );
            lv.push_back( p.v0 );
            rv.push_back( p.v1 );
        }// if
        else
        {
            br.push_back( len );
            lv.push_back( p.v0 );
            rv.push_back( p.is_constant() ? p.v0 : p.v0 + ( p.v1 - p.v0 ) * ( len - p.t0 ) / p.length() );
        }// else
    }// for

    return QuantileFunction( std::move( br ), std::move( lv ), std::move( rv ) );
}

QuantileFunction
QuantileFunction::dilated ( const double  c ) const
{
    if ( ! ( c > 0 ) || ! std::isfinite( c ) )
        throw std::invalid_argument( "dilate_domain: factor must be > 0" );

    auto  br = breaks_;

    for ( auto &  t : br )
        t *= c;

    return QuantileFunction( std::move( br ), left_, right_ );
}

void
QuantileFunction::write_csv ( std::ostream &  os ) const
{
    const auto  prec = os.precision();

    os << "t,value\n" << std::setprecision( 17 );

    for ( std::size_t  j = 0; j < num_pieces(); ++j )
        os << breaks_[j] << ',' << left_[j] << '\n';

    os << breaks_.back() << ',' << right_.back() << '\n';
    os << std::setprecision( int( prec ) );
}

}// namespace rinorm
