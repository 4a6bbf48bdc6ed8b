// Copyright 2026 The Lakeflow Authors
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

#include "lakeflow/digest.hpp"

#include <cstring>
#include <vector>

#include "lakeflow/error.hpp"

namespace lakeflow::checksums {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

inline std::uint32_t rotl32(std::uint32_t x, int r) {
  return (x << r) | (x >> (32 - r));
}

inline std::uint32_t rotr32(std::uint32_t x, int r) {
  return (x >> r) | (x << (32 - r));
}

inline std::uint64_t rotl64(std::uint64_t x, int r) {
  return (x << r) | (x >> (64 - r));
}

inline std::uint32_t load_le32(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
         (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
}

inline std::uint64_t load_le64(const std::uint8_t* p) {
  return std::uint64_t(load_le32(p)) | (std::uint64_t(load_le32(p + 4)) << 32);
}

inline std::uint32_t load_be32(const std::uint8_t* p) {
  return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
         (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

std::string hex_u32(std::uint32_t v) {
  std::string out(8, '0');
  for (int i = 7; i >= 0; --i) {
    out[i] = kHexDigits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string hex_u64(std::uint64_t v) {
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHexDigits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

std::string to_hex_lower(const std::uint8_t* data, std::size_t len) {
  std::string out(len * 2, '0');
  for (std::size_t i = 0; i < len; ++i) {
    out[2 * i] = kHexDigits[data[i] >> 4];
    out[2 * i + 1] = kHexDigits[data[i] & 0xf];
  }
  return out;
}

//------------------------------------------------------------------------
// Adler32
//------------------------------------------------------------------------

void Adler32::update(const void* data, std::size_t len) {
  // Largest n with 255*n*(n+1)/2 + (n+1)*65520 < 2^32, so the sums can be
  // deferred modulo batches of this size.
  constexpr std::size_t kBatch = 5552;
  const auto* p = static_cast<const std::uint8_t*>(data);
  while (len > 0) {
    std::size_t n = len < kBatch ? len : kBatch;
    len -= n;
    while (n-- > 0) {
      a_ += *p++;
      b_ += a_;
    }
    a_ %= 65521;
    b_ %= 65521;
  }
}

std::string Adler32::hex_digest() const { return hex_u32(value()); }

//------------------------------------------------------------------------
// MD5 (RFC 1321)
//------------------------------------------------------------------------

namespace {

constexpr std::uint32_t kMd5K[64] = {
    0xd76aa478, 0xe8c7b756, 0x242070db, 0xc1bdceee, 0xf57c0faf, 0x4787c62a,
    0xa8304613, 0xfd469501, 0x698098d8, 0x8b44f7af, 0xffff5bb1, 0x895cd7be,
    0x6b901122, 0xfd987193, 0xa679438e, 0x49b40821, 0xf61e2562, 0xc040b340,
    0x265e5a51, 0xe9b6c7aa, 0xd62f105d, 0x02441453, 0xd8a1e681, 0xe7d3fbc8,
    0x21e1cde6, 0xc33707d6, 0xf4d50d87, 0x455a14ed, 0xa9e3e905, 0xfcefa3f8,
    0x676f02d9, 0x8d2a4c8a, 0xfffa3942, 0x8771f681, 0x6d9d6122, 0xfde5380c,
    0xa4beea44, 0x4bdecfa9, 0xf6bb4b60, 0xbebfbc70, 0x289b7ec6, 0xeaa127fa,
    0xd4ef3085, 0x04881d05, 0xd9d4d039, 0xe6db99e5, 0x1fa27cf8, 0xc4ac5665,
    0xf4292244, 0x432aff97, 0xab9423a7, 0xfc93a039, 0x655b59c3, 0x8f0ccc92,
    0xffeff47d, 0x85845dd1, 0x6fa87e4f, 0xfe2ce6e0, 0xa3014314, 0x4e0811a1,
    0xf7537e82, 0xbd3af235, 0x2ad7d2bb, 0xeb86d391};

constexpr int kMd5Shift[64] = {7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
                               7, 12, 17, 22, 5, 9,  14, 20, 5, 9,  14, 20,
                               5, 9,  14, 20, 5, 9,  14, 20, 4, 11, 16, 23,
                               4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
                               6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21,
                               6, 10, 15, 21};

}  // namespace

Md5::Md5() : state_{0x67452301, 0xefcdab89, 0x98badcfe, 0x10325476} {}

void Md5::compress(const std::uint8_t block[64]) {
  std::uint32_t m[16];
  for (int i = 0; i < 16; ++i) m[i] = load_le32(block + 4 * i);

  std::uint32_t a = state_[0], b = state_[1], c = state_[2], d = state_[3];
  for (int i = 0; i < 64; ++i) {
    std::uint32_t f;
    int g;
    if (i < 16) {
      f = (b & c) | (~b & d);
      g = i;
    } else if (i < 32) {
      f = (d & b) | (~d & c);
      g = (5 * i + 1) & 15;
    } else if (i < 48) {
      f = b ^ c ^ d;
      g = (3 * i + 5) & 15;
    } else {
      f = c ^ (b | ~d);
      g = (7 * i) & 15;
    }
    std::uint32_t tmp = d;
    d = c;
    c = b;
    b += rotl32(a + f + kMd5K[i] + m[g], kMd5Shift[i]);
    a = tmp;
  }
  state_[0] += a;
  state_[1] += b;
  state_[2] += c;
  state_[3] += d;
}

void Md5::update(const void* data, std::size_t len) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  total_bytes_ += len;
  if (buffered_ > 0) {
    std::size_t take = std::min(len, buffer_.size() - buffered_);
    std::memcpy(buffer_.data() + buffered_, p, take);
    buffered_ += take;
    p += take;
    len -= take;
    if (buffered_ == buffer_.size()) {
      compress(buffer_.data());
      buffered_ = 0;
    }
  }
  while (len >= 64) {
    compress(p);
    p += 64;
    len -= 64;
  }
  if (len > 0) {
    std::memcpy(buffer_.data(), p, len);
    buffered_ = len;
  }
}

std::string Md5::hex_digest() const {
  Md5 copy = *this;
  std::uint64_t bit_len = copy.total_bytes_ * 8;
  std::uint8_t pad[72] = {0x80};
  std::size_t pad_len = 1 + ((119 - copy.total_bytes_ % 64) % 64);
  std::uint8_t len_le[8];
  for (int i = 0; i < 8; ++i) len_le[i] = std::uint8_t(bit_len >> (8 * i));
  copy.total_bytes_ -= 0;  // padding bytes below must not re-count
  // Feed padding through compress directly to keep total_bytes_ untouched.
  std::uint8_t tail[128];
  std::size_t n = copy.buffered_;
  std::memcpy(tail, copy.buffer_.data(), n);
  std::memcpy(tail + n, pad, pad_len);
  n += pad_len;
  std::memcpy(tail + n, len_le, 8);
  n += 8;
  for (std::size_t off = 0; off < n; off += 64) copy.compress(tail + off);

  std::uint8_t out[16];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out[4 * i + j] = std::uint8_t(copy.state_[i] >> (8 * j));
  return to_hex_lower(out, 16);
}

//------------------------------------------------------------------------
// XXH64
//------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kP1 = 0x9E3779B185EBCA87ULL;
constexpr std::uint64_t kP2 = 0xC2B2AE3D27D4EB4FULL;
constexpr std::uint64_t kP3 = 0x165667B19E3779F9ULL;
constexpr std::uint64_t kP4 = 0x85EBCA77C2B2AE63ULL;
constexpr std::uint64_t kP5 = 0x27D4EB2F165667C5ULL;

inline std::uint64_t xx_round(std::uint64_t acc, std::uint64_t input) {
  acc += input * kP2;
  acc = rotl64(acc, 31);
  return acc * kP1;
}

inline std::uint64_t xx_merge(std::uint64_t h, std::uint64_t acc) {
  h ^= xx_round(0, acc);
  return h * kP1 + kP4;
}

}  // namespace

XxHash64::XxHash64(std::uint64_t seed)
    : seed_(seed), acc_{seed + kP1 + kP2, seed + kP2, seed, seed - kP1} {}

void XxHash64::consume_stripe(const std::uint8_t* p) {
  acc_[0] = xx_round(acc_[0], load_le64(p));
  acc_[1] = xx_round(acc_[1], load_le64(p + 8));
  acc_[2] = xx_round(acc_[2], load_le64(p + 16));
  acc_[3] = xx_round(acc_[3], load_le64(p + 24));
}

void XxHash64::update(const void* data, std::size_t len) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  total_bytes_ += len;
  if (buffered_ > 0) {
    std::size_t take = std::min(len, buffer_.size() - buffered_);
    std::memcpy(buffer_.data() + buffered_, p, take);
    buffered_ += take;
    p += take;
    len -= take;
    if (buffered_ == buffer_.size()) {
      consume_stripe(buffer_.data());
      buffered_ = 0;
    }
  }
  while (len >= 32) {
    consume_stripe(p);
    p += 32;
    len -= 32;
  }
  if (len > 0) {
    std::memcpy(buffer_.data(), p, len);
    buffered_ = len;
  }
}

std::uint64_t XxHash64::value() const {
  std::uint64_t h;
  if (total_bytes_ >= 32) {
    h = rotl64(acc_[0], 1) + rotl64(acc_[1], 7) + rotl64(acc_[2], 12) +
        rotl64(acc_[3], 18);
    h = xx_merge(h, acc_[0]);
    h = xx_merge(h, acc_[1]);
    h = xx_merge(h, acc_[2]);
    h = xx_merge(h, acc_[3]);
  } else {
    h = seed_ + kP5;
  }
  h += total_bytes_;

  const std::uint8_t* p = buffer_.data();
  const std::uint8_t* end = p + buffered_;
  while (end - p >= 8) {
    h ^= xx_round(0, load_le64(p));
    h = rotl64(h, 27) * kP1 + kP4;
    p += 8;
  }
  if (end - p >= 4) {
    h ^= std::uint64_t(load_le32(p)) * kP1;
    h = rotl64(h, 23) * kP2 + kP3;
    p += 4;
  }
  while (p < end) {
    h ^= std::uint64_t(*p) * kP5;
    h = rotl64(h, 11) * kP1;
    ++p;
  }

  h ^= h >> 33;
  h *= kP2;
  h ^= h >> 29;
  h *= kP3;
  h ^= h >> 32;
  return h;
}

std::string XxHash64::hex_digest() const { return hex_u64(value()); }

//------------------------------------------------------------------------
// SHA-256 (FIPS 180-4)
//------------------------------------------------------------------------

namespace {

constexpr std::uint32_t kSha256K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

}  // namespace

Sha256::Sha256()
    : state_{0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
             0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19} {}

void Sha256::compress(const std::uint8_t block[64]) {
  std::uint32_t w[64];
  for (int i = 0; i < 16; ++i) w[i] = load_be32(block + 4 * i);
  for (int i = 16; i < 64; ++i) {
    std::uint32_t s0 = rotr32(w[i - 15], 7) ^ rotr32(w[i - 15], 18) ^
                       (w[i - 15] >> 3);
    std::uint32_t s1 = rotr32(w[i - 2], 17) ^ rotr32(w[i - 2], 19) ^
                       (w[i - 2] >> 10);
    w[i] = w[i - 16] + s0 + w[i - 7] + s1;
  }

  std::uint32_t a = state_[0], b = state_[1], c = state_[2], d = state_[3];
  std::uint32_t e = state_[4], f = state_[5], g = state_[6], h = state_[7];
  for (int i = 0; i < 64; ++i) {
    std::uint32_t s1 = rotr32(e, 6) ^ rotr32(e, 11) ^ rotr32(e, 25);
    std::uint32_t ch = (e & f) ^ (~e & g);
    std::uint32_t t1 = h + s1 + ch + kSha256K[i] + w[i];
    std::uint32_t s0 = rotr32(a, 2) ^ rotr32(a, 13) ^ rotr32(a, 22);
    std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
    std::uint32_t t2 = s0 + maj;
    h = g;
    g = f;
    f = e;
    e = d + t1;
    d = c;
    c = b;
    b = a;
    a = t1 + t2;
  }
  state_[0] += a;
  state_[1] += b;
  state_[2] += c;
  state_[3] += d;
  state_[4] += e;
  state_[5] += f;
  state_[6] += g;
  state_[7] += h;
}

void Sha256::update(const void* data, std::size_t len) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  total_bytes_ += len;
  if (buffered_ > 0) {
    std::size_t take = std::min(len, buffer_.size() - buffered_);
    std::memcpy(buffer_.data() + buffered_, p, take);
    buffered_ += take;
    p += take;
    len -= take;
    if (buffered_ == buffer_.size()) {
      compress(buffer_.data());
      buffered_ = 0;
    }
  }
  while (len >= 64) {
    compress(p);
    p += 64;
    len -= 64;
  }
  if (len > 0) {
    std::memcpy(buffer_.data(), p, len);
    buffered_ = len;
  }
}

std::string Sha256::hex_digest() const {
  Sha256 copy = *this;
  std::uint64_t bit_len = copy.total_bytes_ * 8;
  std::uint8_t tail[128];
  std::size_t n = copy.buffered_;
  std::memcpy(tail, copy.buffer_.data(), n);
  tail[n++] = 0x80;
  std::size_t zeros = (119 - (copy.total_bytes_ % 64)) % 64;
  std::memset(tail + n, 0, zeros);
  n += zeros;
  for (int i = 7; i >= 0; --i) tail[n++] = std::uint8_t(bit_len >> (8 * i));
  for (std::size_t off = 0; off < n; off += 64) copy.compress(tail + off);

  std::uint8_t out[32];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 4; ++j)
      out[4 * i + j] = std::uint8_t(copy.state_[i] >> (24 - 8 * j));
  return to_hex_lower(out, 32);
}

//------------------------------------------------------------------------
// Stream helpers
//------------------------------------------------------------------------

namespace {

template <typename Engine>
std::string drain_stream(std::istream& in) {
  Engine engine;
  std::vector<char> buf(1 << 16);
  while (in.good()) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    std::streamsize got = in.gcount();
    if (got > 0) engine.update(buf.data(), static_cast<std::size_t>(got));
  }
  if (in.bad())
    throw Error(ErrorCode::StreamReadError, "stream failed before EOF");
  return engine.hex_digest();
}

}  // namespace

std::string adler32_stream(std::istream& in) { return drain_stream<Adler32>(in); }

std::string md5_stream(std::istream& in) { return drain_stream<Md5>(in); }

std::unique_ptr<Digest> make_digest(std::string_view algorithm) {
  if (algorithm == "adler32") return std::make_unique<Adler32>();
  if (algorithm == "md5") return std::make_unique<Md5>();
  if (algorithm == "xxh64") return std::make_unique<XxHash64>();
  if (algorithm == "sha256") return std::make_unique<Sha256>();
  throw Error(ErrorCode::Unclassified, "unknown digest algorithm: " +
                                           std::string(algorithm));
}

}  // namespace lakeflow::checksums
