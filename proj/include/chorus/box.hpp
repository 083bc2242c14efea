// Copyright 2026 The Chorus Authors.
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

#ifndef CHORUS_BOX_HPP_
#define CHORUS_BOX_HPP_

#include <compare>
#include <memory>
#include <utility>

namespace chorus {

/// Immutable, shared heap cell with value semantics.
///
/// Syntax trees in this library are recursive variants; `Box` is the edge
/// type between a node and its children. Copies share the pointee, which is
/// never mutated, so equality and ordering are deep (with a pointer fast
/// path) and a `Box` can be passed freely between threads.
template <class T>
class Box {
 public:
  // NOLINTNEXTLINE(google-explicit-constructor)
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  const T& get() const { return *ptr_; }

  friend bool operator==(const Box& a, const Box& b) {
    return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
  }
  friend std::strong_ordering operator<=>(const Box& a, const Box& b) {
    if (a.ptr_ == b.ptr_) return std::strong_ordering::equal;
    return *a.ptr_ <=> *b.ptr_;
  }

 private:
  std::shared_ptr<const T> ptr_;
};

}  // namespace chorus

#endif  // CHORUS_BOX_HPP_
