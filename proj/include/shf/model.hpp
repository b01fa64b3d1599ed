#ifndef SHF_MODEL_HPP
#define SHF_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shf {

using Symbol = std::uint32_t;
using Column = std::size_t;

/// Multiset of block sizes {w1, ..., wt}, stored ascending.
class ShfType {
public:
  ShfType() = default;
  ShfType(std::initializer_list<std::size_t> blocks);
  explicit ShfType(std::vector<std::size_t> blocks);

  /// {w1^(copies), w2}: `copies` blocks of size w1 and one of size w2.
  static ShfType repeated(std::size_t w1, std::size_t copies, std::size_t w2);

  /// Parses "1,1,2" (whitespace tolerated).
  static ShfType parse(const std::string &text);

  std::span<const std::size_t> blocks() const noexcept { return blocks_; }
  std::size_t operator[](std::size_t i) const { return blocks_.at(i); }
  std::size_t t() const noexcept { return blocks_.size(); }
  std::size_t u() const noexcept;

  /// Product over distinct sizes of (multiplicity)! -- the number of ways to
  /// order the interchangeable parts of one unordered family.
  std::size_t orderings() const noexcept;

  std::string to_string() const;

  friend bool operator==(const ShfType &, const ShfType &) = default;

private:
  std::vector<std::size_t> blocks_;
};

/// (N; n, q, type) with u <= n and q >= t.
struct ShfParams {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t q = 0;
  ShfType type;

  /// Throws DomainError unless u <= n and q >= t.
  void validate() const;
};

/// N x n matrix over {0, ..., q-1}, row-major.
class RepMatrix {
public:
  RepMatrix() = default;
  RepMatrix(std::size_t rows, std::size_t cols, std::size_t q);
  RepMatrix(std::size_t q, const std::vector<std::vector<Symbol>> &rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t q() const noexcept { return q_; }

  std::span<const Symbol> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Symbol operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Symbol s);

  void append_row(std::span<const Symbol> row);
  RepMatrix without_row(std::size_t r) const;

  friend bool operator==(const RepMatrix &, const RepMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t q_ = 0;
  std::vector<Symbol> data_;
};

/// Pairwise-disjoint column sets whose sizes follow an ShfType
/// block-for-block. Always held in canonical form: parts in ascending size,
/// equal-size parts by increasing minimum, each part sorted.
class ColumnFamily {
public:
  ColumnFamily() = default;

  /// Canonicalises `parts`; throws DomainError if they are not disjoint or
  /// empty.
  explicit ColumnFamily(std::vector<std::vector<Column>> parts);

  const std::vector<std::vector<Column>> &parts() const noexcept {
    return parts_;
  }
  ShfType type() const;

  /// Flat canonical encoding; two families are equal iff encodings are.
  std::vector<Column> encode() const;

  friend bool operator==(const ColumnFamily &, const ColumnFamily &) = default;
  friend auto operator<=>(const ColumnFamily &a, const ColumnFamily &b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<std::vector<Column>> parts_;
};

/// Symbol multiplicities (i_0, ..., i_{q-1}) of one row.
struct RowWeight {
  std::vector<std::size_t> counts;

  std::size_t n() const noexcept;
  friend bool operator==(const RowWeight &, const RowWeight &) = default;
};

RowWeight weight_of_row(std::span<const Symbol> row, std::size_t q);

/// Replaces blocks[index] by a smaller size w'.
ShfType reduce_block(const ShfType &type, std::size_t index, std::size_t w);

/// Replaces blocks i and j by their sum. Requires t >= 3.
ShfType merge_blocks(const ShfType &type, std::size_t i, std::size_t j);

/// Matrix text: optional '#' comment lines, a header "N n q", then N rows of
/// n whitespace-separated symbols.
struct ParsedMatrix {
  RepMatrix matrix;
  std::optional<ShfType> stamped_type; // from a "# type a,b,c" comment
};

ParsedMatrix parse_matrix(std::istream &in);
ParsedMatrix parse_matrix(const std::string &text);

void write_matrix_header(std::ostream &out, std::size_t rows, std::size_t cols,
                         std::size_t q, const ShfType *type = nullptr);
void write_matrix_row(std::ostream &out, std::span<const Symbol> row);
void serialize_matrix(std::ostream &out, const RepMatrix &m,
                      const ShfType *type = nullptr);
std::string serialize_matrix(const RepMatrix &m);

} // namespace shf

#endif // SHF_MODEL_HPP
