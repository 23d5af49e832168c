#include "bta/block_toeplitz.hpp"

#include <sstream>
#include <string>

#include "bta/errors.hpp"

namespace bta {

BlockToeplitz::BlockToeplitz(std::size_t n, SchurShape shape,
                             std::map<int, SchurElement> blocks)
    : n_(n), shape_(shape) {
  if (n_ < 2) throw DimensionMismatch("block order n must be at least 2");
  for (const auto& [j, block] : blocks) {
    if (j < min_index() || j > max_index()) {
      throw DimensionMismatch("diagonal index " + std::to_string(j) +
                              " out of range for n = " + std::to_string(n_));
    }
    if (block.shape() != shape_) {
      throw DimensionMismatch("block shape differs from the declared shape");
    }
    insert_nonzero(j, block);
  }
}

void BlockToeplitz::insert_nonzero(int j, const SchurElement& block) {
  if (!block.is_zero()) blocks_.emplace(j, block);
}

BlockToeplitz BlockToeplitz::zero(std::size_t n, const SchurShape& shape) {
  return {n, shape, {}};
}

BlockToeplitz BlockToeplitz::identity(std::size_t n, const SchurShape& shape) {
  return single_diagonal(n, 0, SchurElement::identity(shape));
}

BlockToeplitz BlockToeplitz::single_diagonal(std::size_t n, int j,
                                             const SchurElement& block) {
  return {n, block.shape(), {{j, block}}};
}

SchurElement BlockToeplitz::block(int j) const {
  if (j < min_index() || j > max_index()) {
    throw DimensionMismatch("diagonal index " + std::to_string(j) +
                            " out of range for n = " + std::to_string(n_));
  }
  auto it = blocks_.find(j);
  return it != blocks_.end() ? it->second : SchurElement::zero(shape_);
}

BlockToeplitz BlockToeplitz::operator-() const {
  BlockToeplitz r = *this;
  for (auto& [j, block] : r.blocks_) block = -block;
  return r;
}

BlockToeplitz& BlockToeplitz::operator+=(const BlockToeplitz& o) {
  if (n_ != o.n_ || shape_ != o.shape_) {
    throw DimensionMismatch("block Toeplitz operands are incompatible");
  }
  for (const auto& [j, block] : o.blocks_) {
    auto it = blocks_.find(j);
    if (it == blocks_.end()) {
      blocks_.emplace(j, block);
    } else {
      it->second += block;
      if (it->second.is_zero()) blocks_.erase(it);
    }
  }
  return *this;
}

BlockToeplitz& BlockToeplitz::operator-=(const BlockToeplitz& o) {
  return *this += -o;
}

BlockToeplitz operator*(const ComplexRational& s, const BlockToeplitz& t) {
  BlockToeplitz r = BlockToeplitz::zero(t.n_, t.shape_);
  if (s.is_zero()) return r;
  for (const auto& [j, block] : t.blocks_) r.blocks_.emplace(j, s * block);
  return r;
}

DenseMatrix BlockToeplitz::to_dense() const {
  const std::size_t d = shape_.d();
  DenseMatrix m(n_ * d, n_ * d);
  for (std::size_t p = 0; p < n_; ++p) {
    for (std::size_t q = 0; q < n_; ++q) {
      const int j = static_cast<int>(p) - static_cast<int>(q);
      auto it = blocks_.find(j);
      if (it == blocks_.end()) continue;
      DenseMatrix blk = it->second.embed();
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          m(p * d + r, q * d + c) = blk(r, c);
        }
      }
    }
  }
  return m;
}

namespace {

DenseMatrix dense_block(const DenseMatrix& m, std::size_t d, std::size_t p,
                        std::size_t q) {
  DenseMatrix blk(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) blk(r, c) = m(p * d + r, q * d + c);
  }
  return blk;
}

}  // namespace

bool is_block_toeplitz(const DenseMatrix& m, std::size_t n, std::size_t d) {
  if (m.rows() != n * d || m.cols() != n * d) {
    throw DimensionMismatch("matrix is not nd x nd");
  }
  for (std::size_t p = 1; p < n; ++p) {
    for (std::size_t q = 1; q < n; ++q) {
      // compare block (p, q) with its upper-left neighbour on the diagonal
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          if (m(p * d + r, q * d + c) != m((p - 1) * d + r, (q - 1) * d + c)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

BlockToeplitz BlockToeplitz::from_dense(const DenseMatrix& m, std::size_t n,
                                        const SchurShape& shape) {
  const std::size_t d = shape.d();
  if (!is_block_toeplitz(m, n, d)) {
    throw NotBlockToeplitz("block diagonals are not constant");
  }
  std::map<int, SchurElement> blocks;
  for (int j = 1 - static_cast<int>(n); j <= static_cast<int>(n) - 1; ++j) {
    const std::size_t p = j >= 0 ? static_cast<std::size_t>(j) : 0;
    const std::size_t q = j >= 0 ? 0 : static_cast<std::size_t>(-j);
    SchurElement block = SchurElement::extract(dense_block(m, d, p, q), shape);
    if (!block.is_zero()) blocks.emplace(j, block);
  }
  return {n, shape, std::move(blocks)};
}

Vec BlockToeplitz::coords() const {
  Vec v;
  v.reserve(coord_dim(n_, shape_));
  for (int j = min_index(); j <= max_index(); ++j) {
    Vec blk = block(j).coords();
    v.insert(v.end(), blk.begin(), blk.end());
  }
  return v;
}

BlockToeplitz BlockToeplitz::from_coords(std::size_t n, const SchurShape& shape,
                                         const Vec& coords) {
  if (coords.size() != coord_dim(n, shape)) {
    throw DimensionMismatch("coordinate vector has wrong length");
  }
  const std::size_t k = shape.element_dim();
  std::map<int, SchurElement> blocks;
  std::size_t offset = 0;
  for (int j = 1 - static_cast<int>(n); j <= static_cast<int>(n) - 1; ++j) {
    Vec blk(coords.begin() + offset, coords.begin() + offset + k);
    SchurElement e = SchurElement::from_coords(shape, blk);
    if (!e.is_zero()) blocks.emplace(j, std::move(e));
    offset += k;
  }
  return {n, shape, std::move(blocks)};
}

std::string BlockToeplitz::str() const {
  std::ostringstream os;
  os << "BlockToeplitz(n=" << n_ << ", sigma=" << shape_.sigma()
     << ", tau=" << shape_.tau() << ")";
  for (const auto& [j, block] : blocks_) {
    os << "\n  T_" << j << " = " << block.str();
  }
  return os.str();
}

bool product_condition(const BlockToeplitz& t, const BlockToeplitz& u) {
  if (t.n() != u.n() || t.shape() != u.shape()) {
    throw DimensionMismatch("block Toeplitz operands are incompatible");
  }
  const int n = static_cast<int>(t.n());
  for (int p = 1; p < n; ++p) {
    for (int q = 1; q < n; ++q) {
      if (t.block(p) * u.block(q - n) != t.block(p - n) * u.block(q)) {
        return false;
      }
    }
  }
  return true;
}

BlockToeplitz structured_product(const BlockToeplitz& t, const BlockToeplitz& u,
                                 ProductStats* stats) {
  if (t.n() != u.n() || t.shape() != u.shape()) {
    throw DimensionMismatch("block Toeplitz operands are incompatible");
  }
  const int n = static_cast<int>(t.n());
  ProductStats local;
  {
    // precondition check, tallied apart from the product itself
    for (int p = 1; p < n; ++p) {
      for (int q = 1; q < n; ++q) {
        local.condition_multiplications += 2;
        if (t.block(p) * u.block(q - n) != t.block(p - n) * u.block(q)) {
          throw ConditionViolated("operands do not satisfy the product criterion");
        }
      }
    }
  }

  std::map<int, SchurElement> blocks;
  for (int k = 1 - n; k <= n - 1; ++k) {
    SchurElement sum = SchurElement::zero(t.shape());
    for (int l = 0; l < n; ++l) {
      const int a = k >= 0 ? k - l : -l;
      const int b = k >= 0 ? l : l + k;
      if (!t.has_block(a) || !u.has_block(b)) continue;
      sum += t.block(a) * u.block(b);
      ++local.product_multiplications;
    }
    if (!sum.is_zero()) blocks.emplace(k, std::move(sum));
  }
  if (stats) *stats = local;
  return {t.n(), t.shape(), std::move(blocks)};
}

}  // namespace bta
