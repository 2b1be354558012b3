#pragma once

namespace nsat {

// Entry point for the nsat command line tool. Exit codes: 0 success / all
// checks hold, 1 saturation failure or lemma counterexample, 2 usage or
// input error.
int run_cli(int argc, char** argv);

}  // namespace nsat
