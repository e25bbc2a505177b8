#ifndef EITBEC_FFT_HPP
#define EITBEC_FFT_HPP

#include <complex>
#include <vector>

namespace eitbec {

using cdouble = std::complex<double>;

// In-place complex DFT, e^{+ikx} synthesis convention:
//   forward:  a_k -> sum_j a_j e^{-2*pi*i jk/n}
//   inverse:  a_k -> (1/n) sum_j a_j e^{+2*pi*i jk/n}
// Plans are cached per size; execution is single-threaded and deterministic.
void fft_forward(std::vector<cdouble>& a);
void fft_inverse(std::vector<cdouble>& a);

} // namespace eitbec

#endif
