#include <cstdlib>
#include <iostream>

#include "wavechan/acceptance.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

extern "C" void openblas_set_num_threads(int);

int main() {
  if (const char* env = std::getenv("WAVECHAN_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) {
      openblas_set_num_threads(n);
#ifdef _OPENMP
      omp_set_num_threads(n);
#endif
    }
  }
  return wavechan::run_acceptance(std::cout) ? 0 : 1;
}
