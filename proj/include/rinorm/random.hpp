#ifndef RINORM_RANDOM_HPP
#define RINORM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rinorm {

inline std::uint64_t
splitmix64 ( std::uint64_t  x )
{
    x += 0x9e3779b97f4a7c15ULL;
    x  = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ULL;
    x  = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebULL;
    return x ^ ( x >> 31 );
}

///
/// Deterministic random stream. Sub-streams are derived from
/// (seed, index) so that independent workers never share state.
///
class RngStream
{
public:
    explicit RngStream ( std::uint64_t  seed,
                         std::uint64_t  index = 0 )
            : engine_( splitmix64( splitmix64( seed ) ^ splitmix64( index + 0x632be59bd9b4e019ULL ) ) )
    {}

    // uniform on the open interval (0,1), 53 bits
    double uniform ()
    {
        return ( double( engine_() >> 11 ) + 0.5 ) * 0x1.0p-53;
    }

private:
    std::mt19937_64  engine_;
};

}// namespace rinorm

#endif // RINORM_RANDOM_HPP
