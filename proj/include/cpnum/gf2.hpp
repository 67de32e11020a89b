#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cpnum {

// Bit vector over GF(2), indexed by a fixed edge enumeration.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(int length);

  int length() const { return len_; }
  bool get(int i) const;
  void set(int i, bool value);
  void flip(int i);
  bool is_zero() const;
  int leading_bit() const;  // lowest set index, -1 if zero
  Gf2Vector& operator^=(const Gf2Vector& other);  // length mismatch -> DomainError
  bool operator==(const Gf2Vector& other) const {
    return len_ == other.len_ && words_ == other.words_;
  }

 private:
  int len_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-echelon basis: rows are independent and pivots strictly increase.
class Gf2Basis {
 public:
  Gf2Basis() = default;
  explicit Gf2Basis(int length) : len_(length) {}

  int length() const { return len_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Gf2Vector>& rows() const { return rows_; }

  // GF(2) elimination insert; true iff v was independent of the basis.
  bool insert(Gf2Vector v);

 private:
  int len_ = 0;
  std::vector<Gf2Vector> rows_;
  std::vector<int> pivots_;
};

std::pair<Gf2Basis, bool> gf2_rank_insert(Gf2Basis basis, const Gf2Vector& v);

// Fixed lexicographic enumeration of a graph's edges, shared by every
// GF(2) vector built for that graph so certificates reproduce.
class EdgeIndex {
 public:
  EdgeIndex() = default;
  explicit EdgeIndex(const std::vector<std::pair<int, int>>& edges);
  int count() const { return static_cast<int>(edges_.size()); }
  int index_of(int u, int v) const;  // DomainError if not an edge
  std::pair<int, int> edge_at(int i) const { return edges_[i]; }

 private:
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace cpnum
