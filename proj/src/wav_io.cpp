#include "afes/wav_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace afes {

namespace {

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
  out.push_back((v >> 16) & 0xff);
  out.push_back((v >> 24) & 0xff);
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
}

void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

void write_wav(const SignalBuffer& buffer, const std::string& path,
               std::optional<double> normalize_db) {
  std::vector<float> data(buffer.samples.size());
  double scale = 1.0;
  if (normalize_db) {
    double peak = 0.0;
    for (double v : buffer.samples) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) scale = std::pow(10.0, *normalize_db / 20.0) / peak;
  }
  for (std::size_t i = 0; i < data.size(); ++i)
    data[i] = static_cast<float>(buffer.samples[i] * scale);

  const std::uint32_t data_bytes = static_cast<std::uint32_t>(data.size() * 4);
  std::vector<unsigned char> out;
  put_tag(out, "RIFF");
  put_u32(out, 4 + (8 + 16) + (8 + 4) + (8 + data_bytes));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, 3);  // IEEE float
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(std::lround(buffer.fs)));
  put_u32(out, static_cast<std::uint32_t>(std::lround(buffer.fs)) * 4);
  put_u16(out, 4);
  put_u16(out, 32);
  put_tag(out, "fact");
  put_u32(out, 4);
  put_u32(out, static_cast<std::uint32_t>(data.size()));
  put_tag(out, "data");
  put_u32(out, data_bytes);

  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_wav: cannot open " + path);
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!data.empty())
    f.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data_bytes));
  if (!f) throw std::runtime_error("write_wav: write failed for " + path);
}

SignalBuffer read_wav(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_wav: cannot open " + path);
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(f)),
                                 std::istreambuf_iterator<char>());
  if (raw.size() < 12 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
      std::memcmp(raw.data() + 8, "WAVE", 4) != 0)
    throw std::runtime_error("read_wav: not a RIFF/WAVE file: " + path);

  SignalBuffer buf;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::size_t pos = 12;
  bool got_data = false;
  while (pos + 8 <= raw.size()) {
    const char* tag = reinterpret_cast<const char*>(raw.data() + pos);
    const std::uint32_t len = get_u32(raw.data() + pos + 4);
    pos += 8;
    if (pos + len > raw.size()) throw std::runtime_error("read_wav: truncated chunk in " + path);
    if (std::memcmp(tag, "fmt ", 4) == 0 && len >= 16) {
      format = get_u16(raw.data() + pos);
      channels = get_u16(raw.data() + pos + 2);
      buf.fs = get_u32(raw.data() + pos + 4);
      bits = get_u16(raw.data() + pos + 14);
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (format != 3 || channels != 1 || bits != 32)
        throw std::runtime_error("read_wav: expected mono float32 data in " + path);
      const std::size_t count = len / 4;
      buf.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        float v;
        std::memcpy(&v, raw.data() + pos + 4 * i, 4);
        buf.samples[i] = v;
      }
      got_data = true;
    }
    pos += len + (len & 1);
  }
  if (!got_data) throw std::runtime_error("read_wav: no data chunk in " + path);
  return buf;
}

void write_csv(const SignalBuffer& buffer, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  f << "index,sample\n";
  f.precision(17);
  for (std::size_t i = 0; i < buffer.samples.size(); ++i)
    f << i << ',' << buffer.samples[i] << '\n';
  if (!f) throw std::runtime_error("write_csv: write failed for " + path);
}

}  // namespace afes
