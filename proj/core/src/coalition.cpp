// Copyright 2026 The votedim Authors
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

#include "votedim/coalition.hpp"

#include <bit>
#include <string>

#include "votedim/errors.hpp"

namespace votedim {

namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxVoters) {
    throw InvalidArgument("voter count out of range: " + std::to_string(n));
  }
}

}  // namespace

Coalition::Coalition(int n) : n_(n), bits_{0, 0} { check_n(n); }

Coalition Coalition::full(int n) {
  Coalition c(n);
  for (int v = 1; v <= n; ++v) c.add(v);
  return c;
}

Coalition Coalition::from_members(int n, const std::vector<int>& members) {
  Coalition c(n);
  for (int v : members) c.add(v);
  return c;
}

Coalition Coalition::from_mask(int n, std::uint64_t mask) {
  check_n(n);
  if (n > 64) throw InvalidArgument("from_mask supports at most 64 voters");
  if (n < 64 && (mask >> n) != 0) throw InvalidArgument("mask has bits beyond voter count");
  Coalition c(n);
  c.bits_[0] = mask;
  return c;
}

int Coalition::size() const {
  return std::popcount(bits_[0]) + std::popcount(bits_[1]);
}

bool Coalition::contains(int voter) const {
  if (voter < 1 || voter > n_) return false;
  const int b = voter - 1;
  return (bits_[b >> 6] >> (b & 63)) & 1u;
}

void Coalition::add(int voter) {
  if (voter < 1 || voter > n_) {
    throw InvalidArgument("voter " + std::to_string(voter) + " out of range 1.." +
                          std::to_string(n_));
  }
  const int b = voter - 1;
  bits_[b >> 6] |= std::uint64_t{1} << (b & 63);
}

void Coalition::remove(int voter) {
  if (voter < 1 || voter > n_) {
    throw InvalidArgument("voter " + std::to_string(voter) + " out of range 1.." +
                          std::to_string(n_));
  }
  const int b = voter - 1;
  bits_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
}

bool Coalition::subset_of(const Coalition& other) const {
  return (bits_[0] & ~other.bits_[0]) == 0 && (bits_[1] & ~other.bits_[1]) == 0;
}

bool Coalition::intersects(const Coalition& other) const {
  return (bits_[0] & other.bits_[0]) != 0 || (bits_[1] & other.bits_[1]) != 0;
}

Coalition Coalition::united(const Coalition& other) const {
  Coalition c(n_);
  c.bits_[0] = bits_[0] | other.bits_[0];
  c.bits_[1] = bits_[1] | other.bits_[1];
  return c;
}

Coalition Coalition::intersected(const Coalition& other) const {
  Coalition c(n_);
  c.bits_[0] = bits_[0] & other.bits_[0];
  c.bits_[1] = bits_[1] & other.bits_[1];
  return c;
}

Coalition Coalition::minus(const Coalition& other) const {
  Coalition c(n_);
  c.bits_[0] = bits_[0] & ~other.bits_[0];
  c.bits_[1] = bits_[1] & ~other.bits_[1];
  return c;
}

Coalition Coalition::complement() const {
  return full(n_).minus(*this);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int w = 0; w < 2; ++w) {
    std::uint64_t bits = bits_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(w * 64 + b + 1);
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t Coalition::to_mask() const {
  if (n_ > 64) throw InvalidArgument("to_mask supports at most 64 voters");
  return bits_[0];
}

}  // namespace votedim
