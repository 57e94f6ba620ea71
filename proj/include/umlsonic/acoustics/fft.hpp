// Copyright 2026 The umlsonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UMLSONIC_ACOUSTICS_FFT_HPP
#define UMLSONIC_ACOUSTICS_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace umlsonic::acoustics {

// In-place iterative radix-2 FFT. Size must be a power of two.
void fft_inplace(std::span<std::complex<double>> data);

// |X_k|^2 for k = 0 .. n/2 of a real frame (n a power of two).
std::vector<double> power_spectrum(std::span<const double> frame);

}  // namespace umlsonic::acoustics

#endif  // UMLSONIC_ACOUSTICS_FFT_HPP
