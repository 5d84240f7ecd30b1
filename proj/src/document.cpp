#include "lca/document.hpp"

#include "lca/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace lca {

namespace {

constexpr std::size_t kMaxBlocks = 4096;

class GroupParser {
public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      expect_end();
      return {};
    }
    std::vector<Block> blocks;
    for (;;) {
      term(blocks);
      skip_ws();
      if (at_end())
        break;
      if (peek() != '+')
        fail("expected '+' or end of input");
      ++pos_;
    }
    return GroupExpr(std::move(blocks));
  }

private:
  void term(std::vector<Block> &out) {
    skip_ws();
    const std::size_t start = pos_;
    Block block;
    switch (peek()) {
    case 'R': ++pos_; block = Block::real(); break;
    case 'T': ++pos_; block = Block::circle(); break;
    case 'Z':
      ++pos_;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        const auto n = integer();
        if (n < 1)
          throw ParseError(ErrorKind::ValueError, start,
                           "cyclic modulus must be >= 1, got " + std::to_string(n));
        block = Block::cyclic(n);
      } else {
        block = Block::integers();
      }
      break;
    default: fail("expected one of 'R', 'Z', 'T', 'Z/'");
    }
    skip_ws();
    std::int64_t count = 1;
    if (peek() == '^') {
      ++pos_;
      count = integer();
    }
    if (out.size() + static_cast<std::size_t>(count) > kMaxBlocks)
      throw ParseError(ErrorKind::ValueError, start, "too many blocks");
    out.insert(out.end(), static_cast<std::size_t>(count), block);
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc())
      throw ParseError(ErrorKind::ValueError, start, "integer out of range");
    return v;
  }

  void expect_end() {
    skip_ws();
    if (!at_end())
      fail("expected end of input");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(ErrorKind::SyntaxError, pos_, what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

using nlohmann::json;

[[noreturn]] void field_error(const std::string &what) {
  throw ParseError(ErrorKind::SyntaxError, 0, what);
}

const json &require(const json &obj, const char *key) {
  const auto it = obj.find(key);
  if (it == obj.end())
    field_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string require_string(const json &obj, const char *key) {
  const auto &v = require(obj, key);
  if (!v.is_string())
    field_error(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

HomScalar parse_entry(const json &rec, const Block &src, const Block &dst,
                      std::size_t i, std::size_t j) {
  const std::string where =
      " in entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (!rec.is_object())
    field_error("entry record must be an object" + where);
  const auto kind = require_string(rec, "kind");
  const auto desc = hom_descriptor(src, dst);
  if (kind != entry_kind_name(desc.kind))
    throw Error(ErrorKind::TagMismatch,
                "kind \"" + kind + "\" but Hom(" + src.to_string() + ", " +
                    dst.to_string() + ") needs \"" +
                    std::string(entry_kind_name(desc.kind)) + "\"" + where);
  if (desc.kind == HomKind::Zero) {
    if (rec.contains("value") &&
        (!rec["value"].is_string() || parse_rational(rec["value"].get<std::string>()) != 0))
      throw Error(ErrorKind::ValueError, "zero entry with nonzero value" + where);
    return HomScalar::zero(src, dst);
  }
  const auto text = require_string(rec, "value");
  if (desc.kind == HomKind::Residue) {
    const auto &m = require(rec, "modulus");
    if (!m.is_number_integer())
      field_error("modulus must be an integer" + where);
    if (m.get<std::int64_t>() != desc.order)
      throw Error(ErrorKind::TagMismatch,
                  "modulus " + m.dump() + " but Hom(" + src.to_string() + ", " +
                      dst.to_string() + ") has order " + std::to_string(desc.order) +
                      where);
  }
  const bool integral = desc.kind == HomKind::Integer || desc.kind == HomKind::Residue;
  const Rational value = integral ? Rational(parse_integer(text)) : parse_rational(text);
  return {src, dst, value};
}

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string entry_record(const HomScalar &s) {
  const auto desc = s.descriptor();
  std::string out = "{\"kind\": " + json_string(entry_kind_name(desc.kind)) +
                    ", \"value\": " + json_string(to_string(s.value()));
  if (desc.kind == HomKind::Residue)
    out += ", \"modulus\": " + std::to_string(desc.order);
  return out + "}";
}

std::string aligned_rows(const std::vector<std::vector<std::string>> &cells) {
  if (cells.empty())
    return "";
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto &row : cells)
    for (std::size_t j = 0; j < row.size(); ++j)
      width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (const auto &row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += row[j];
      if (j + 1 < row.size())
        line += std::string(width[j] - row[j].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

} // namespace

std::string_view entry_kind_name(HomKind kind) {
  switch (kind) {
  case HomKind::Zero: return "zero";
  case HomKind::Real: return "real";
  case HomKind::Integer: return "int";
  case HomKind::CircleValue: return "circle";
  case HomKind::Residue: return "mod";
  }
  return "?";
}

GroupExpr parse_group(std::string_view text) { return GroupParser(text).parse(); }

HomMatrix parse_morphism_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(ErrorKind::SyntaxError, e.byte, "malformed document");
  }
  if (!doc.is_object())
    field_error("document must be an object");
  if (require_string(doc, "format-version") != "1")
    throw Error(ErrorKind::ValueError, "unsupported format-version");
  const auto domain = parse_group(require_string(doc, "domain"));
  const auto codomain = parse_group(require_string(doc, "codomain"));
  const auto &entries = require(doc, "entries");
  if (!entries.is_array())
    field_error("\"entries\" must be an array");

  const std::size_t rows = codomain.size();
  const std::size_t cols = domain.size();
  const bool nested = !entries.empty() && entries.front().is_array();
  std::vector<const json *> flat;
  if (nested) {
    if (entries.size() != rows)
      throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(rows) + " rows");
    for (const auto &row : entries) {
      if (!row.is_array() || row.size() != cols)
        throw Error(ErrorKind::ShapeMismatch,
                    "expected rows of " + std::to_string(cols) + " entries");
      for (const auto &rec : row)
        flat.push_back(&rec);
    }
  } else {
    // A flat row-major list; an empty list also covers rows of width zero.
    if (entries.size() != rows * cols)
      throw Error(ErrorKind::ShapeMismatch,
                  "expected " + std::to_string(rows * cols) + " entries");
    for (const auto &rec : entries)
      flat.push_back(&rec);
  }

  Matrix<HomScalar> e(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      e(i, j) = parse_entry(*flat[i * cols + j], domain[j], codomain[i], i, j);
  return {domain, codomain, std::move(e)};
}

std::string serialize_morphism(const HomMatrix &m) {
  std::string out = "{\n";
  out += "  \"format-version\": \"1\",\n";
  out += "  \"domain\": " + json_string(m.domain().to_string()) + ",\n";
  out += "  \"codomain\": " + json_string(m.codomain().to_string()) + ",\n";
  if (m.rows() == 0) {
    out += "  \"entries\": []\n}\n";
    return out;
  }
  out += "  \"entries\": [\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < m.cols(); ++j)
      out += (j ? ", " : "") + entry_record(m(i, j));
    out += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string pretty_morphism(const HomMatrix &m) {
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_string(m(i, j)));
    cells.push_back(std::move(row));
  }
  std::string body = aligned_rows(cells);
  std::string out = m.domain().to_string() + " -> " + m.codomain().to_string() + "\n";
  std::istringstream lines(body);
  for (std::string line; std::getline(lines, line);)
    out += "[ " + line + " ]\n";
  return out;
}

std::string hom_grid(const GroupExpr &domain, const GroupExpr &codomain) {
  if (domain.empty() || codomain.empty())
    return "0\n";
  std::vector<std::vector<std::string>> cells;
  for (const auto &dst : codomain) {
    std::vector<std::string> row;
    for (const auto &src : domain)
      row.push_back(hom_descriptor(src, dst).to_string());
    cells.push_back(std::move(row));
  }
  return aligned_rows(cells);
}

} // namespace lca
