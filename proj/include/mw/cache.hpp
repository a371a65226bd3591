#pragma once

#include <string>

#include "mw/arith.hpp"

namespace mw {

struct WalshSpectrum;

// Binary cache formats, little-endian:
//   mu table:  magic "MWU1", u32 n, 2^n signed bytes
//   spectrum:  magic "MWSP", u32 n, 2^n i64 coefficients in mask order
void save_mu(const MoebiusTable& t, const std::string& path);
MoebiusTable load_mu(const std::string& path);

void save_spectrum(const WalshSpectrum& s, const std::string& path);
WalshSpectrum load_spectrum(const std::string& path);

}  // namespace mw
