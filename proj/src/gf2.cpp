#include "cpnum/gf2.hpp"

#include <algorithm>
#include <string>

#include "cpnum/errors.hpp"

namespace cpnum {

Gf2Vector::Gf2Vector(int length) : len_(length), words_((length + 63) / 64, 0) {
  if (length < 0) throw DomainError("gf2 vector length must be non-negative");
}

bool Gf2Vector::get(int i) const {
  if (i < 0 || i >= len_) throw DomainError("gf2 index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void Gf2Vector::set(int i, bool value) {
  if (i < 0 || i >= len_) throw DomainError("gf2 index out of range");
  std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

void Gf2Vector::flip(int i) { set(i, !get(i)); }

bool Gf2Vector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

int Gf2Vector::leading_bit() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(words_[k]));
  return -1;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (len_ != other.len_)
    throw DomainError("gf2 length mismatch: " + std::to_string(len_) + " vs " +
                      std::to_string(other.len_));
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

bool Gf2Basis::insert(Gf2Vector v) {
  if (v.length() != len_)
    throw DomainError("gf2 basis length mismatch: " + std::to_string(len_) + " vs " +
                      std::to_string(v.length()));
  while (!v.is_zero()) {
    int p = v.leading_bit();
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    if (it == pivots_.end() || *it != p) {
      std::size_t pos = it - pivots_.begin();
      pivots_.insert(it, p);
      rows_.insert(rows_.begin() + pos, std::move(v));
      return true;
    }
    v ^= rows_[it - pivots_.begin()];
  }
  return false;
}

std::pair<Gf2Basis, bool> gf2_rank_insert(Gf2Basis basis, const Gf2Vector& v) {
  bool grew = basis.insert(v);
  return {std::move(basis), grew};
}

EdgeIndex::EdgeIndex(const std::vector<std::pair<int, int>>& edges) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) edges_.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int EdgeIndex::index_of(int u, int v) const {
  std::pair<int, int> key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key)
    throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " not in the enumeration");
  return static_cast<int>(it - edges_.begin());
}

}  // namespace cpnum
