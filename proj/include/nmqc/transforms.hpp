#pragma once

#include <vector>

#include "nmqc/boolfn.hpp"
#include "nmqc/intmat.hpp"
#include "nmqc/poly.hpp"
#include "nmqc/rational.hpp"

namespace nmqc {

// Fourier expansion of the sign function: coefficients c_S with
// (-1)^{f(x)} = sum_S c_S chi_S(x), computed by an in-place butterfly.
MultilinearPoly walsh_hadamard(const BooleanFunction& f);

// entry(i,j) = sum_k (-1)^k binom(i,k) binom(n-i,j-k): the value of the
// size-j class sum of characters at inputs of weight i.
Int krawtchouk_entry(int n, int i, int j);
IntegerMatrix krawtchouk_matrix(int n);

// Class coefficients (1/2^n) K v for a symmetric value vector v, giving the
// Fourier profile indexed by class size.
std::vector<Rat> krawtchouk_coefficients(int n, const std::vector<Rat>& v);

}  // namespace nmqc
