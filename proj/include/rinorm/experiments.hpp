#ifndef RINORM_EXPERIMENTS_HPP
#define RINORM_EXPERIMENTS_HPP
//
// Config-driven experiment runner: parses experiment files, runs one of
// the registered experiments and produces a CSV table plus JSON summary.
//

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <rinorm/distributions.hpp>
#include <rinorm/montecarlo.hpp>
#include <rinorm/norms.hpp>

namespace rinorm {

// malformed config or unknown names, mapped to exit code 2
struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

////////////////////////////////////////////////////////////////////////////////
//
// literals
//
////////////////////////////////////////////////////////////////////////////////

Distribution parse_distribution ( const nlohmann::json &  j );
RiNormSpec   parse_ri_norm      ( const nlohmann::json &  j );

// n resolves {"seq":"top_m","m_fraction":f} to m = ceil(f·n)
SeqNormSpec  parse_seq_norm     ( const nlohmann::json &  j, std::size_t  n );

///
/// A family of laws indexed by n. Coefficient families put a_i in front
/// of the base law: flat a_i = 1, geometric a_i = ratio^i, spike
/// a = (1,0,...,0), harmonic a_i = 1/i. "iid" is flat, "list" is a fixed
/// explicit family.
///
struct FamilySpec
{
    std::string                   type = "iid";
    std::string                   name;
    std::optional< Distribution > base;
    double                        ratio = 0.5;
    std::vector< Distribution >   dists;

    static FamilySpec parse ( const nlohmann::json &  j );

    std::string                   label        () const;
    std::optional< std::size_t >  fixed_size   () const;
    std::vector< double >         coefficients ( std::size_t  n ) const;
    std::vector< Distribution >   members      ( std::size_t  n ) const;
};

struct ExperimentConfig
{
    std::string                     experiment;
    std::vector< FamilySpec >       families;
    std::vector< nlohmann::json >   M;
    std::vector< nlohmann::json >   N;
    McConfig                        mc;
    std::vector< std::size_t >      sweep_n;
    std::vector< std::size_t >      sweep_m;
    std::vector< double >           sweep_p;
    std::string                     theta;      // named Orlicz function for orlicz_lambda
    std::string                     out = "results";
    std::string                     windows;    // path to the ratio window file

    static ExperimentConfig parse ( const nlohmann::json &  j );
    static ExperimentConfig load  ( const std::string &  path );
};

////////////////////////////////////////////////////////////////////////////////
//
// windows
//
////////////////////////////////////////////////////////////////////////////////

struct WindowTable
{
    int                                    version = 0;
    double                                 cv_max  = 0.5;
    std::map< std::string, RatioWindow >   windows;

    RatioWindow for_experiment ( const std::string &  name ) const;

    static WindowTable load ( const std::string &  path );
};

////////////////////////////////////////////////////////////////////////////////
//
// running
//
////////////////////////////////////////////////////////////////////////////////

struct ResultTable
{
    std::vector< std::string >                  header;
    std::vector< std::vector< std::string > >   rows;

    std::string csv () const;
};

struct ExperimentResult
{
    std::string                  experiment;
    ResultTable                  table;
    std::vector< bool >          row_pass;
    std::vector< std::string >   failures;     // descriptions of failing rows/groups
    nlohmann::json               summary;

    bool pass () const { return failures.empty(); }
};

struct ExperimentInfo
{
    std::string  name;
    std::string  description;
};

const std::vector< ExperimentInfo > & experiment_registry ();

ExperimentResult run_experiment ( const ExperimentConfig &  cfg,
                                  const WindowTable &       windows );

// full-precision number formatting used in every CSV cell
std::string format_number ( double  x );

// command line entry point; returns the process exit code
int run_cli ( int  argc, char **  argv );

}// namespace rinorm

#endif // RINORM_EXPERIMENTS_HPP
