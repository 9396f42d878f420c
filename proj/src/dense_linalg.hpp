#pragma once

#include <vector>

#include "wavechan/green_oracle.hpp"

namespace wavechan::linalg {

void herk_accumulate(ComplexMatrix& gram, const ComplexMatrix& block);
std::vector<double> hermitian_eigenvalues(ComplexMatrix& a);
std::vector<double> sigmas_from_gram(ComplexMatrix& gram);
std::vector<double> svd_values_direct(ComplexMatrix a);

}  // namespace wavechan::linalg
