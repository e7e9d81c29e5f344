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

#include "vdfgate/codec.hpp"

namespace vdfgate::codec {

void Writer::u32(std::uint32_t v) {
  out_.push_back(static_cast<std::uint8_t>(v >> 24));
  out_.push_back(static_cast<std::uint8_t>(v >> 16));
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
  out_.push_back(static_cast<std::uint8_t>(v));
}

void Writer::u64(std::uint64_t v) {
  u32(static_cast<std::uint32_t>(v >> 32));
  u32(static_cast<std::uint32_t>(v));
}

void Writer::raw(std::string_view s) {
  out_.insert(out_.end(), s.begin(), s.end());
}

void Writer::bytes_lp(BytesView b) {
  u32(static_cast<std::uint32_t>(b.size()));
  raw(b);
}

void Writer::string_lp(std::string_view s) {
  u32(static_cast<std::uint32_t>(s.size()));
  raw(s);
}

void Writer::bigint(const Bigint& v) {
  bytes_lp(bigint_to_bytes(v));
}

void Reader::need(std::size_t n) const {
  if (remaining() < n) throw DecodeError("codec: truncated input");
}

std::uint8_t Reader::u8() {
  need(1);
  return data_[pos_++];
}

std::uint32_t Reader::u32() {
  need(4);
  std::uint32_t v = (static_cast<std::uint32_t>(data_[pos_]) << 24) |
                    (static_cast<std::uint32_t>(data_[pos_ + 1]) << 16) |
                    (static_cast<std::uint32_t>(data_[pos_ + 2]) << 8) |
                    static_cast<std::uint32_t>(data_[pos_ + 3]);
  pos_ += 4;
  return v;
}

std::uint64_t Reader::u64() {
  std::uint64_t hi = u32();
  return (hi << 32) | u32();
}

Bytes Reader::raw(std::size_t n) {
  need(n);
  Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
  pos_ += n;
  return out;
}

Bytes Reader::bytes_lp(std::size_t max_len) {
  std::uint32_t len = u32();
  if (len > max_len) throw DecodeError("codec: field length exceeds bound");
  return raw(len);
}

std::string Reader::string_lp(std::size_t max_len) {
  Bytes b = bytes_lp(max_len);
  return std::string(b.begin(), b.end());
}

Bigint Reader::bigint(std::size_t max_len) {
  Bytes b = bytes_lp(max_len);
  if (!b.empty() && b.front() == 0) {
    throw DecodeError("codec: non-minimal big integer encoding");
  }
  return bigint_from_bytes(b);
}

void Reader::expect_done() const {
  if (!done()) throw DecodeError("codec: trailing bytes");
}

}  // namespace vdfgate::codec
