#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "rspunct/selftest.hpp"

int main(int argc, char** argv) {
  rspunct::oracles::SearchOptions opts;
  unsigned hw = std::thread::hardware_concurrency();
  opts.jobs = static_cast<int>(std::clamp(hw, 1u, 8u));
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--jobs" && i + 1 < argc) opts.jobs = std::atoi(argv[i + 1]);
  }
  return rspunct::run_selftest(std::cout, opts) == 0 ? 0 : 1;
}
