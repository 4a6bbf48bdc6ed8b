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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <string>
#include <string_view>

namespace lakeflow::checksums {

std::string to_hex_lower(const std::uint8_t* data, std::size_t len);

// Streaming digest engines. All render lowercase fixed-width hex and keep
// accepting updates after hex_digest() (finalization works on a copy of the
// running state). One engine instance must not be shared across threads
// mid-stream.
class Digest {
 public:
  virtual ~Digest() = default;
  virtual void update(const void* data, std::size_t len) = 0;
  virtual std::string hex_digest() const = 0;
  virtual std::string_view algorithm() const = 0;
};

// Rolling two-sum checksum, A init 1, B init 0, modulus 65521.
class Adler32 final : public Digest {
 public:
  void update(const void* data, std::size_t len) override;
  std::string hex_digest() const override;  // 8 hex digits
  std::string_view algorithm() const override { return "adler32"; }
  std::uint32_t value() const { return (b_ << 16) | a_; }

 private:
  std::uint32_t a_ = 1;
  std::uint32_t b_ = 0;
};

class Md5 final : public Digest {
 public:
  Md5();
  void update(const void* data, std::size_t len) override;
  std::string hex_digest() const override;  // 32 hex digits
  std::string_view algorithm() const override { return "md5"; }

 private:
  void compress(const std::uint8_t block[64]);

  std::array<std::uint32_t, 4> state_;
  std::array<std::uint8_t, 64> buffer_;
  std::size_t buffered_ = 0;
  std::uint64_t total_bytes_ = 0;
};

// 64-bit fast hash (xxhash-class), seed 0 unless given.
class XxHash64 final : public Digest {
 public:
  explicit XxHash64(std::uint64_t seed = 0);
  void update(const void* data, std::size_t len) override;
  std::string hex_digest() const override;  // 16 hex digits
  std::string_view algorithm() const override { return "xxh64"; }
  std::uint64_t value() const;

 private:
  void consume_stripe(const std::uint8_t* p);

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> acc_;
  std::array<std::uint8_t, 32> buffer_;
  std::size_t buffered_ = 0;
  std::uint64_t total_bytes_ = 0;
};

// 256-bit strong hash (SHA-256-class).
class Sha256 final : public Digest {
 public:
  Sha256();
  void update(const void* data, std::size_t len) override;
  std::string hex_digest() const override;  // 64 hex digits
  std::string_view algorithm() const override { return "sha256"; }

 private:
  void compress(const std::uint8_t block[64]);

  std::array<std::uint32_t, 8> state_;
  std::array<std::uint8_t, 64> buffer_;
  std::size_t buffered_ = 0;
  std::uint64_t total_bytes_ = 0;
};

// Stream helpers: read to end in chunks, throw StreamReadError when the
// stream goes bad before EOF.
std::string adler32_stream(std::istream& in);
std::string md5_stream(std::istream& in);

std::unique_ptr<Digest> make_digest(std::string_view algorithm);

}  // namespace lakeflow::checksums
