// Copyright 2026 The quadprod Authors
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

// Text formats.
//
//   matrix:   field Q | field GF <p>
//             <rows> <cols>
//             one line per row, whitespace-separated scalars
//   witness:  per factor, a header line
//               factor <index> role=<role> nullity=<n> scalar=<c>
//             followed by a matrix block
//   spec:     idem=<n1,...> scalars=<c1,...> sqz=<m1[,m2]>, any subset
//
// Blank lines and lines starting with '#' are ignored on input.

#ifndef QUADPROD_IO_HPP
#define QUADPROD_IO_HPP

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quadprod/factor.hpp"
#include "quadprod/matrix.hpp"

namespace quadprod {

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<Residue>>;

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::size_t parse_count(std::string_view s, std::string_view what) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::ParseError, "expected a nonnegative integer for " + std::string(what) + ", got '" +
                                      std::string(s) + "'");
  }
  return v;
}

/// Yields meaningful lines and tracks line numbers for diagnostics.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    if (pending_) return std::exchange(pending_, std::nullopt);
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::string_view t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      return std::string(t);
    }
    return std::nullopt;
  }

  void push_back(std::string line) { pending_ = std::move(line); }

  std::string require(std::string_view what) {
    auto l = next();
    if (!l) throw Error(Errc::ParseError, "unexpected end of input, expected " + std::string(what));
    return *l;
  }

  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::optional<std::string> pending_;
  std::size_t line_no_ = 0;
};

inline Field parse_field_line(std::string_view line) {
  const auto toks = split_ws(line);
  if (toks.size() == 2 && toks[0] == "field" && toks[1] == "Q") return Field::rationals();
  if (toks.size() == 3 && toks[0] == "field" && toks[1] == "GF") {
    return Field::prime(parse_count(toks[2], "field modulus"));
  }
  throw Error(Errc::ParseError, "expected 'field Q' or 'field GF <p>', got '" + std::string(line) + "'");
}

template <FieldElement K>
Matrix<K> read_matrix_body(LineReader& lines, const Field& field) {
  const auto dims = split_ws(lines.require("matrix dimensions"));
  if (dims.size() != 2) throw Error(Errc::ParseError, "expected '<rows> <cols>'");
  const std::size_t rows = parse_count(dims[0], "rows");
  const std::size_t cols = parse_count(dims[1], "cols");
  Matrix<K> m(rows, cols, field);
  // Rows of a matrix without columns are blank lines, which the reader skips.
  if (cols == 0) return m;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto toks = split_ws(lines.require("matrix row"));
    if (toks.size() != cols) {
      throw Error(Errc::ParseError, "row " + std::to_string(i + 1) + " has " + std::to_string(toks.size()) +
                                        " entries, expected " + std::to_string(cols) + " (line " +
                                        std::to_string(lines.line_no()) + ")");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = K::parse(toks[j], field);
  }
  return m;
}

}  // namespace detail

inline std::string field_line(const Field& f) {
  return f.is_rationals() ? std::string("field Q") : "field GF " + std::to_string(f.modulus());
}

template <FieldElement K>
void write_matrix(std::ostream& out, const Matrix<K>& m) {
  out << field_line(m.field()) << '\n' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).to_string();
    out << '\n';
  }
}

template <FieldElement K>
std::string to_text(const Matrix<K>& m) {
  std::ostringstream s;
  write_matrix(s, m);
  return s.str();
}

inline AnyMatrix read_any_matrix(std::istream& in) {
  detail::LineReader lines(in);
  const Field field = detail::parse_field_line(lines.require("field line"));
  if (field.is_rationals()) return detail::read_matrix_body<Rational>(lines, field);
  return detail::read_matrix_body<Residue>(lines, field);
}

template <FieldElement K>
Matrix<K> read_matrix(std::istream& in) {
  AnyMatrix any = read_any_matrix(in);
  if (auto* m = std::get_if<Matrix<K>>(&any)) return std::move(*m);
  throw Error(Errc::FieldMismatch, "matrix is over a different kind of field");
}

template <FieldElement K>
Matrix<K> parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix<K>(in);
}

template <FieldElement K>
void write_witness(std::ostream& out, const Witness<K>& w) {
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    const auto& f = w.factors[i];
    out << "factor " << i + 1 << " role=" << role_name(f.role) << " nullity=" << f.declared_nullity
        << " scalar=" << f.scalar.to_string() << '\n';
    write_matrix(out, f.matrix);
  }
}

inline FactorRole parse_role(std::string_view s) {
  if (s == "idempotent") return FactorRole::Idempotent;
  if (s == "scaled-idempotent") return FactorRole::ScaledIdempotent;
  if (s == "square-zero") return FactorRole::SquareZero;
  throw Error(Errc::ParseError, "unknown role '" + std::string(s) + "'");
}

/// Reads factors until end of input; every factor must be over `field`.
template <FieldElement K>
Witness<K> read_witness(std::istream& in, const Field& field) {
  detail::LineReader lines(in);
  Witness<K> w;
  while (auto header = lines.next()) {
    const auto toks = detail::split_ws(*header);
    if (toks.size() != 5 || toks[0] != "factor") {
      throw Error(Errc::ParseError, "expected a factor header, got '" + *header + "'");
    }
    if (detail::parse_count(toks[1], "factor index") != w.factors.size() + 1) {
      throw Error(Errc::ParseError, "factor indices must run 1, 2, ... in order");
    }
    auto value_of = [&](const std::string& tok, std::string_view key) {
      const std::string prefix = std::string(key) + "=";
      if (tok.rfind(prefix, 0) != 0) throw Error(Errc::ParseError, "expected '" + prefix + "...', got '" + tok + "'");
      return tok.substr(prefix.size());
    };
    WitnessFactor<K> f;
    f.role = parse_role(value_of(toks[2], "role"));
    f.declared_nullity = detail::parse_count(value_of(toks[3], "nullity"), "nullity");
    f.scalar = K::parse(value_of(toks[4], "scalar"), field);
    const Field mf = detail::parse_field_line(lines.require("field line"));
    if (mf != field) throw Error(Errc::FieldMismatch, "witness factor over " + mf.to_string());
    f.matrix = detail::read_matrix_body<K>(lines, field);
    w.factors.push_back(std::move(f));
  }
  return w;
}

template <FieldElement K>
std::string to_text(const Witness<K>& w) {
  std::ostringstream s;
  write_witness(s, w);
  return s.str();
}

template <FieldElement K>
Witness<K> parse_witness(std::string_view text, const Field& field) {
  std::istringstream in{std::string(text)};
  return read_witness<K>(in, field);
}

/// Parses `idem=... scalars=... sqz=...`; missing scalars default to 1.
template <FieldElement K>
FactorSpec<K> parse_factor_spec(std::string_view text, const Field& field) {
  FactorSpec<K> spec;
  bool have_scalars = false;
  auto parse_list = [](std::string_view v) {
    std::vector<std::string> items;
    if (v.empty()) return items;
    for (auto& item : detail::split_on(v, ',')) items.push_back(item);
    return items;
  };
  for (const auto& tok : detail::split_ws(text)) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(Errc::ParseError, "spec token '" + tok + "' lacks '='");
    const std::string key = tok.substr(0, eq);
    const auto items = parse_list(std::string_view(tok).substr(eq + 1));
    if (key == "idem") {
      spec.idem_nullities.clear();
      for (const auto& it : items) spec.idem_nullities.push_back(detail::parse_count(it, "idem nullity"));
    } else if (key == "sqz") {
      spec.sqz_nullities.clear();
      for (const auto& it : items) spec.sqz_nullities.push_back(detail::parse_count(it, "sqz nullity"));
    } else if (key == "scalars") {
      have_scalars = true;
      spec.scalars.clear();
      for (const auto& it : items) spec.scalars.push_back(K::parse(it, field));
    } else {
      throw Error(Errc::ParseError, "unknown spec key '" + key + "'");
    }
  }
  if (!have_scalars) spec.scalars.assign(spec.idem_nullities.size(), K::one(field));
  spec.validate();
  return spec;
}

template <FieldElement K>
std::string format_factor_spec(const FactorSpec<K>& spec) {
  auto join = [](const auto& xs, auto&& fmt) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + fmt(xs[i]);
    return s;
  };
  auto count = [](std::size_t v) { return std::to_string(v); };
  auto scalar = [](const K& c) { return c.to_string(); };
  return "idem=" + join(spec.idem_nullities, count) + " scalars=" + join(spec.scalars, scalar) +
         " sqz=" + join(spec.sqz_nullities, count);
}

}  // namespace quadprod

#endif  // QUADPROD_IO_HPP
