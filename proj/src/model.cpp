#include "shf/model.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "shf/errors.hpp"

namespace shf {

// ---- ShfType ---------------------------------------------------------------

ShfType::ShfType(std::initializer_list<std::size_t> blocks)
    : ShfType(std::vector<std::size_t>(blocks)) {}

ShfType::ShfType(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.size() < 2)
    throw DomainError("type needs at least two blocks");
  if (std::find(blocks_.begin(), blocks_.end(), 0) != blocks_.end())
    throw DomainError("type blocks must be positive");
  std::sort(blocks_.begin(), blocks_.end());
}

ShfType ShfType::repeated(std::size_t w1, std::size_t copies, std::size_t w2) {
  std::vector<std::size_t> b(copies, w1);
  b.push_back(w2);
  return ShfType(std::move(b));
}

ShfType ShfType::parse(const std::string &text) {
  std::vector<std::size_t> b;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t{}");
    const auto last = item.find_last_not_of(" \t{}");
    if (first == std::string::npos)
      throw DomainError("empty block in type '" + text + "'");
    const std::string tok = item.substr(first, last - first + 1);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw DomainError("bad block '" + tok + "' in type '" + text + "'");
    b.push_back(v);
  }
  return ShfType(std::move(b));
}

std::size_t ShfType::u() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
}

std::size_t ShfType::orderings() const noexcept {
  std::size_t r = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    run = (i > 0 && blocks_[i] == blocks_[i - 1]) ? run + 1 : 1;
    r *= run;
  }
  return r;
}

std::string ShfType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(blocks_[i]);
  }
  return s;
}

void ShfParams::validate() const {
  if (type.u() > cols)
    throw DomainError("type sum u = " + std::to_string(type.u()) +
                      " exceeds n = " + std::to_string(cols));
  if (q < type.t())
    throw DomainError("alphabet size q = " + std::to_string(q) +
                      " is smaller than t = " + std::to_string(type.t()));
}

// ---- RepMatrix -------------------------------------------------------------

RepMatrix::RepMatrix(std::size_t rows, std::size_t cols, std::size_t q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {
  if (q < 1)
    throw DomainError("alphabet size must be positive");
}

RepMatrix::RepMatrix(std::size_t q, const std::vector<std::vector<Symbol>> &rows)
    : rows_(0), cols_(rows.empty() ? 0 : rows.front().size()), q_(q) {
  if (q < 1)
    throw DomainError("alphabet size must be positive");
  for (const auto &r : rows)
    append_row(r);
}

void RepMatrix::set(std::size_t r, std::size_t c, Symbol s) {
  if (s >= q_)
    throw SymbolError("symbol " + std::to_string(s) + " >= q");
  data_.at(r * cols_ + c) = s;
}

void RepMatrix::append_row(std::span<const Symbol> row) {
  if (row.size() != cols_)
    throw DomainError("row has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(cols_));
  for (Symbol s : row)
    if (s >= q_)
      throw SymbolError("symbol " + std::to_string(s) + " >= q");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RepMatrix RepMatrix::without_row(std::size_t r) const {
  if (r >= rows_)
    throw DomainError("row index out of range");
  RepMatrix m = *this;
  m.data_.erase(m.data_.begin() + r * cols_, m.data_.begin() + (r + 1) * cols_);
  --m.rows_;
  return m;
}

// ---- ColumnFamily ----------------------------------------------------------

ColumnFamily::ColumnFamily(std::vector<std::vector<Column>> parts)
    : parts_(std::move(parts)) {
  if (parts_.size() < 2)
    throw DomainError("a column family needs at least two parts");
  std::vector<Column> all;
  for (auto &p : parts_) {
    if (p.empty())
      throw DomainError("column family part is empty");
    std::sort(p.begin(), p.end());
    all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw DomainError("column family parts are not pairwise disjoint");
  std::sort(parts_.begin(), parts_.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.front() < b.front();
  });
}

ShfType ColumnFamily::type() const {
  std::vector<std::size_t> b;
  for (const auto &p : parts_)
    b.push_back(p.size());
  return ShfType(std::move(b));
}

std::vector<Column> ColumnFamily::encode() const {
  std::vector<Column> flat;
  for (const auto &p : parts_)
    flat.insert(flat.end(), p.begin(), p.end());
  return flat;
}

// ---- weights and type transformations --------------------------------------

std::size_t RowWeight::n() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

RowWeight weight_of_row(std::span<const Symbol> row, std::size_t q) {
  RowWeight w{std::vector<std::size_t>(q, 0)};
  for (Symbol s : row) {
    if (s >= q)
      throw SymbolError("symbol " + std::to_string(s) + " >= q = " +
                        std::to_string(q));
    ++w.counts[s];
  }
  return w;
}

ShfType reduce_block(const ShfType &type, std::size_t index, std::size_t w) {
  if (index >= type.t())
    throw DomainError("reduce_block: index out of range");
  if (w < 1 || w > type[index])
    throw DomainError("reduce_block: new size must be in [1, " +
                      std::to_string(type[index]) + "]");
  std::vector<std::size_t> b(type.blocks().begin(), type.blocks().end());
  b[index] = w;
  return ShfType(std::move(b));
}

ShfType merge_blocks(const ShfType &type, std::size_t i, std::size_t j) {
  if (i == j)
    throw DomainError("merge_blocks: indices must differ");
  if (type.t() < 3)
    throw DomainError("merge_blocks: type needs at least three blocks");
  if (i >= type.t() || j >= type.t())
    throw DomainError("merge_blocks: index out of range");
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k < type.t(); ++k)
    if (k != i && k != j)
      b.push_back(type[k]);
  b.push_back(type[i] + type[j]);
  return ShfType(std::move(b));
}

// ---- text format -----------------------------------------------------------

namespace {

bool is_blank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::size_t> parse_numbers(const std::string &line,
                                       std::size_t lineno) {
  std::vector<std::size_t> out;
  const char *p = line.data();
  const char *end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r'))
      ++p;
    if (p == end)
      break;
    std::size_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() ||
        (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
      throw FormatError(lineno, "expected a nonnegative integer");
    out.push_back(v);
    p = next;
  }
  return out;
}

} // namespace

ParsedMatrix parse_matrix(std::istream &in) {
  ParsedMatrix out;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t rows = 0, cols = 0, q = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line))
      continue;
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') {
      std::istringstream ss(line.substr(first + 1));
      std::string key, value;
      ss >> key >> value;
      if (key == "type" && !value.empty()) {
        try {
          out.stamped_type = ShfType::parse(value);
        } catch (const DomainError &e) {
          throw FormatError(lineno, e.what());
        }
      }
      continue;
    }
    const auto nums = parse_numbers(line, lineno);
    if (!have_header) {
      if (nums.size() != 3)
        throw FormatError(lineno, "header must be \"N n q\"");
      rows = nums[0];
      cols = nums[1];
      q = nums[2];
      if (q < 1)
        throw FormatError(lineno, "q must be positive");
      out.matrix = RepMatrix(0, cols, q);
      have_header = true;
      continue;
    }
    if (out.matrix.rows() == rows)
      throw FormatError(lineno, "more than " + std::to_string(rows) + " rows");
    if (nums.size() != cols)
      throw FormatError(lineno, "row has " + std::to_string(nums.size()) +
                                    " entries, expected " +
                                    std::to_string(cols));
    std::vector<Symbol> row(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      if (nums[c] >= q)
        throw FormatError(lineno, "symbol " + std::to_string(nums[c]) +
                                      " >= q = " + std::to_string(q));
      row[c] = static_cast<Symbol>(nums[c]);
    }
    out.matrix.append_row(row);
  }
  if (!have_header)
    throw FormatError(0, "missing header");
  if (out.matrix.rows() != rows)
    throw FormatError(0, "expected " + std::to_string(rows) + " rows, found " +
                             std::to_string(out.matrix.rows()));
  return out;
}

ParsedMatrix parse_matrix(const std::string &text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

void write_matrix_header(std::ostream &out, std::size_t rows, std::size_t cols,
                         std::size_t q, const ShfType *type) {
  if (type)
    out << "# type " << type->to_string() << '\n';
  out << rows << ' ' << cols << ' ' << q << '\n';
}

void write_matrix_row(std::ostream &out, std::span<const Symbol> row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c)
      out << ' ';
    out << row[c];
  }
  out << '\n';
}

void serialize_matrix(std::ostream &out, const RepMatrix &m,
                      const ShfType *type) {
  write_matrix_header(out, m.rows(), m.cols(), m.q(), type);
  for (std::size_t r = 0; r < m.rows(); ++r)
    write_matrix_row(out, m.row(r));
}

std::string serialize_matrix(const RepMatrix &m) {
  std::ostringstream out;
  serialize_matrix(out, m);
  return out.str();
}

} // namespace shf
