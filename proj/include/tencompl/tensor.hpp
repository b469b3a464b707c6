#ifndef TENCOMPL_TENSOR_HPP
#define TENCOMPL_TENSOR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tencompl {

using index_t = std::int64_t;

/// One observed cell of a third-order tensor.
struct TensorEntry {
  index_t r;  // tissue
  index_t u;  // gene
  index_t i;  // treatment
  double value;
};

/// Coordinate-format sparse tensor of observed values.
///
/// Entries are immutable after construction; every coordinate is validated to
/// lie within dims and duplicate coordinates are rejected. Entry order is the
/// order of construction and is preserved by all transformations.
class SparseTensor3 {
 public:
  SparseTensor3() = default;
  SparseTensor3(index_t dim_r, index_t dim_u, index_t dim_i);

  /// Validating factory: throws DataError on out-of-range or duplicate
  /// coordinates.
  static SparseTensor3 from_entries(index_t dim_r, index_t dim_u,
                                    index_t dim_i,
                                    std::vector<TensorEntry> entries);

  index_t dim_r() const { return dim_r_; }
  index_t dim_u() const { return dim_u_; }
  index_t dim_i() const { return dim_i_; }
  index_t cell_count() const { return dim_r_ * dim_u_ * dim_i_; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const std::vector<TensorEntry>& entries() const { return entries_; }

 private:
  index_t dim_r_ = 0, dim_u_ = 0, dim_i_ = 0;
  std::vector<TensorEntry> entries_;
};

/// One observed cell of the 2D layout.
struct MatrixEntry {
  index_t row;
  index_t col;
  double value;
};

struct SparseMatrix {
  index_t rows = 0;
  index_t cols = 0;
  std::vector<MatrixEntry> entries;
};

/// 2D row layout: `block` packs tissue blocks contiguously (stride = gene
/// count); `paper_exact` uses stride = 8 * gene count, reproducing the
/// original layout with padding rows between tissue blocks.
enum class StrideMode { block, paper_exact };

StrideMode parse_stride_mode(const std::string& name);
std::string stride_mode_name(StrideMode mode);

/// Bijection between 2D (row, col) positions and 3D (tissue, gene, treatment)
/// coordinates: row = r * stride + u, col = i.
struct TensorIndexMap {
  index_t tissue_count = 0;     // R
  index_t gene_count = 0;       // |U|
  index_t treatment_count = 0;  // I
  index_t row_stride = 0;       // S >= |U|

  static TensorIndexMap make(index_t tissues, index_t genes,
                             index_t treatments, StrideMode mode);
  index_t row_count() const { return tissue_count * row_stride; }
};

/// row = r * S + u. Throws DataError when (r, u) is out of range.
index_t map_row(const TensorIndexMap& map, index_t r, index_t u);

/// Inverse of map_row. Throws DataError for rows in the padding region
/// (row mod S >= |U|) or outside the layout.
std::pair<index_t, index_t> unmap_row(const TensorIndexMap& map, index_t row);

/// Rebind every 2D entry to its 3D coordinate; values pass through untouched.
SparseTensor3 to_tensor(const SparseMatrix& matrix, const TensorIndexMap& map);

/// Exact inverse of to_tensor on observed coordinates.
SparseMatrix to_matrix(const SparseTensor3& tensor, const TensorIndexMap& map);

struct TensorStats {
  double density = 0.0;
  std::vector<std::int64_t> per_tissue_counts;
  double min_value = 0.0;
  double max_value = 0.0;
  double mean_value = 0.0;
  bool has_values = false;  // false for the empty tensor: extremes undefined
};

TensorStats tensor_stats(const SparseTensor3& tensor);

// Serialization: header "R U I N", then N lines "r u i value"; values are
// printed in shortest round-trip decimal form, LF line endings.
void write_tensor(std::ostream& out, const SparseTensor3& tensor);
SparseTensor3 read_tensor(std::istream& in);
void write_tensor_file(const std::string& path, const SparseTensor3& tensor);
SparseTensor3 read_tensor_file(const std::string& path);

/// Shortest decimal form that parses back to the identical double.
std::string format_value(double v);

}  // namespace tencompl

#endif
