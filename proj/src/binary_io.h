// Copyright 2026 The kblink Authors.
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

#ifndef KBLINK_SRC_BINARY_IO_H_
#define KBLINK_SRC_BINARY_IO_H_

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "kblink/error.h"

namespace kblink::internal {

static_assert(std::endian::native == std::endian::little,
              "index files are little-endian; add byte swapping for this host");

// Appends little-endian values to an in-memory buffer.
class BinaryWriter {
 public:
  explicit BinaryWriter(std::string_view magic) { buffer_.append(magic); }

  template <typename T>
  void Put(T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    buffer_.append(bytes, sizeof(T));
  }

  void PutString(std::string_view s) {
    Put<uint32_t>(static_cast<uint32_t>(s.size()));
    buffer_.append(s);
  }

  template <typename T>
  void PutVector(const std::vector<T> &values) {
    static_assert(std::is_trivially_copyable_v<T>);
    Put<uint64_t>(values.size());
    buffer_.append(reinterpret_cast<const char *>(values.data()),
                   values.size() * sizeof(T));
  }

  void PutStrings(const std::vector<std::string> &values) {
    Put<uint64_t>(values.size());
    for (const std::string &s : values) PutString(s);
  }

  void WriteFile(const std::string &path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path);
    out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    if (!out) throw Error("write failed: " + path);
  }

 private:
  std::string buffer_;
};

// Bounds-checked reader over a whole file.
class BinaryReader {
 public:
  BinaryReader(const std::string &path, std::string_view magic) : path_(path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IndexFormatError("cannot open " + path);
    data_.assign(std::istreambuf_iterator<char>(in),
                 std::istreambuf_iterator<char>());
    if (data_.compare(0, magic.size(), magic) != 0) {
      throw IndexFormatError(path + ": bad magic");
    }
    pos_ = magic.size();
  }

  template <typename T>
  T Get() {
    Need(sizeof(T));
    T value;
    std::memcpy(&value, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }

  std::string GetString() {
    uint32_t n = Get<uint32_t>();
    Need(n);
    std::string s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  template <typename T>
  std::vector<T> GetVector() {
    uint64_t n = Get<uint64_t>();
    if (n > (data_.size() - pos_) / sizeof(T)) Fail();
    std::vector<T> values(n);
    std::memcpy(values.data(), data_.data() + pos_, n * sizeof(T));
    pos_ += n * sizeof(T);
    return values;
  }

  std::vector<std::string> GetStrings() {
    uint64_t n = Get<uint64_t>();
    if (n > data_.size() - pos_) Fail();
    std::vector<std::string> values;
    values.reserve(n);
    for (uint64_t i = 0; i < n; ++i) values.push_back(GetString());
    return values;
  }

  void ExpectEnd() const {
    if (pos_ != data_.size()) {
      throw IndexFormatError(path_ + ": trailing bytes");
    }
  }

 private:
  void Need(std::size_t n) const {
    if (n > data_.size() - pos_) Fail();
  }
  [[noreturn]] void Fail() const {
    throw IndexFormatError(path_ + ": truncated");
  }

  std::string path_;
  std::string data_;
  std::size_t pos_ = 0;
};

}  // namespace kblink::internal

#endif  // KBLINK_SRC_BINARY_IO_H_
