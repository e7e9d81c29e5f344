// Copyright 2026 The vdfgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VDFGATE_CODEC_HPP_
#define VDFGATE_CODEC_HPP_

#include <stdexcept>

#include "vdfgate/bigint.hpp"
#include "vdfgate/bytes.hpp"

namespace vdfgate::codec {

// All multi-byte integers are big-endian. Variable-length fields carry a
// 4-byte big-endian length prefix. Big integers encode as length prefix +
// minimal unsigned big-endian magnitude (zero encodes as length 0).

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Upper bound on any single length-prefixed field; rejects hostile lengths
// before allocation.
inline constexpr std::size_t kMaxFieldSize = 1 << 20;

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void raw(BytesView b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void raw(std::string_view s);
  void bytes_lp(BytesView b);
  void string_lp(std::string_view s);
  void bigint(const Bigint& v);

  const Bytes& data() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(BytesView data) : data_(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  Bytes raw(std::size_t n);
  Bytes bytes_lp(std::size_t max_len = kMaxFieldSize);
  std::string string_lp(std::size_t max_len = kMaxFieldSize);
  Bigint bigint(std::size_t max_len = kMaxFieldSize);

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return remaining() == 0; }
  // Throws DecodeError unless all input was consumed.
  void expect_done() const;

 private:
  void need(std::size_t n) const;

  BytesView data_;
  std::size_t pos_ = 0;
};

}  // namespace vdfgate::codec

#endif  // VDFGATE_CODEC_HPP_
