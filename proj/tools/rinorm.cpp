#include <rinorm/experiments.hpp>

int
main ( int      argc,
       char **  argv )
{
    return rinorm::run_cli( argc, argv );
}
