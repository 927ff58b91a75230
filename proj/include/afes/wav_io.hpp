#ifndef AFES_WAV_IO_HPP
#define AFES_WAV_IO_HPP

#include <optional>
#include <string>

#include "afes/synthesis.hpp"

namespace afes {

// Mono IEEE float32 RIFF/WAVE. Samples are cast to float on write and
// widened back on read, so a round trip is bit exact at 32-bit precision.
// With normalize_db set, the peak is scaled to 10^(normalize_db / 20).
void write_wav(const SignalBuffer& buffer, const std::string& path,
               std::optional<double> normalize_db = std::nullopt);
SignalBuffer read_wav(const std::string& path);

// Rows of "index,sample".
void write_csv(const SignalBuffer& buffer, const std::string& path);

}  // namespace afes

#endif
