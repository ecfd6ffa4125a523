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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "quadprod/quadprod.hpp"

namespace quadprod::cli {
namespace {

enum class Format { Human, KeyValue };

/// One datum, rendered either as an aligned "label  value" line or as
/// "key=value".
struct Entry {
  std::string key;
  std::string label;
  std::string value;
  bool human = true;
};

class Report {
 public:
  void add(std::string key, std::string label, std::string value) {
    entries_.push_back({std::move(key), std::move(label), std::move(value)});
  }
  /// Emitted only in keyvalue mode.
  void add_machine(std::string key, std::string value) {
    entries_.push_back({std::move(key), {}, std::move(value), false});
  }
  void add(std::string key, std::string label, std::size_t value) {
    add(std::move(key), std::move(label), std::to_string(value));
  }

  void render(std::ostream& out, Format fmt) const {
    if (fmt == Format::KeyValue) {
      for (const auto& e : entries_) out << e.key << '=' << e.value << '\n';
      return;
    }
    std::size_t width = 0;
    for (const auto& e : entries_)
      if (e.human) width = std::max(width, e.label.size());
    for (const auto& e : entries_) {
      if (e.human) out << e.label << std::string(width - e.label.size() + 2, ' ') << e.value << '\n';
    }
  }

 private:
  std::vector<Entry> entries_;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

AnyMatrix load_matrix(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_any_matrix(in);
}

std::string join_tokens(const std::vector<std::string>& toks) {
  std::string s;
  for (const auto& t : toks) s += (s.empty() ? "" : " ") + t;
  return s;
}

void add_invariants(Report& r, const InvariantReport& rep) {
  r.add("n", "order n", rep.order);
  r.add("rank", "rank r(G)", rep.rank);
  r.add("nullity", "nullity n(G)", rep.nullity);
  r.add("n0", "n0(G)", rep.n0);
  r.add("dim_RcapN", "dim(R(G) cap N(G))", rep.dim_range_cap_null);
  r.add("dim_RplusN", "dim(R(G) + N(G))", rep.dim_range_plus_null);
}

void add_decision(Report& r, const Decision& d) {
  for (const auto& c : d.conditions) {
    const std::string base = "condition." + c.id;
    r.add_machine(base + ".lhs", std::to_string(c.lhs));
    r.add_machine(base + ".rhs", std::to_string(c.rhs));
    r.add(base + ".result", c.id, std::string(c.passed ? "pass  " : "FAIL  ") + c.describe());
  }
  r.add("feasible", "verdict", d.feasible ? "feasible" : "infeasible");
  r.add("constructive", "constructive", d.constructive == Constructive::Full ? "full" : "decision-only");
}

template <FieldElement K>
void add_verification(Report& r, const Witness<K>& w, const VerificationReport& v) {
  for (std::size_t i = 0; i < v.factors.size(); ++i) {
    const auto& f = v.factors[i];
    const std::string idx = std::to_string(i + 1);
    std::string status = f.passed() ? "ok" : "FAIL";
    status += " role=" + role_name(w.factors[i].role) + (f.role_ok ? "" : "(violated)");
    status += " nullity=" + std::to_string(f.actual_nullity) + (f.nullity_ok ? "" : "(declared " +
              std::to_string(w.factors[i].declared_nullity) + ")");
    if (!f.shape_ok) status += " shape=mismatch";
    r.add("factor." + idx, "factor " + idx, status);
  }
  r.add("product", "product", v.product_ok ? "ok" : "FAIL");
  r.add("verified", "verdict", v.passed() ? "verified" : "rejected");
}

int cmd_invariants(const std::string& input, Format fmt, std::ostream& out) {
  const AnyMatrix any = load_matrix(input);
  Report r;
  std::visit([&](const auto& g) { add_invariants(r, invariant_report(g)); }, any);
  r.render(out, fmt);
  return kSuccess;
}

int cmd_decide(const std::string& input, const std::string& spec_text, Format fmt, std::ostream& out) {
  const AnyMatrix any = load_matrix(input);
  return std::visit(
      [&](const auto& g) {
        using K = typename std::decay_t<decltype(g)>::value_type;
        const auto spec = parse_factor_spec<K>(spec_text, g.field());
        const Decision d = decide(g, spec);
        Report r;
        r.add("field", "field", g.field().to_string());
        r.add("spec", "spec", format_factor_spec(spec));
        add_invariants(r, invariant_report(g));
        add_decision(r, d);
        r.render(out, fmt);
        return d.feasible ? kSuccess : kNegative;
      },
      any);
}

int cmd_factor(const std::string& input, const std::string& spec_text, const std::string& output, Format fmt,
               std::ostream& out, std::ostream& err) {
  if (output == input) throw UsageError("--output must differ from --input");
  const AnyMatrix any = load_matrix(input);
  return std::visit(
      [&](const auto& g) -> int {
        using K = typename std::decay_t<decltype(g)>::value_type;
        const auto spec = parse_factor_spec<K>(spec_text, g.field());
        const Decision d = decide(g, spec);
        Report r;
        r.add("field", "field", g.field().to_string());
        r.add("spec", "spec", format_factor_spec(spec));
        if (!d.feasible) {
          add_decision(r, d);
          r.render(out, fmt);
          return kNegative;
        }
        if (d.constructive != Constructive::Full) {
          err << "error: the requested shape is feasible but only decidable; no construction is available\n";
          return kUsage;
        }
        const Witness<K> w = factor(g, spec);
        const VerificationReport v = verify_witness(g, w);
        std::ostringstream text;
        write_witness(text, w);
        if (output == "-") {
          out << text.str();
        } else {
          std::ofstream file(output);
          if (!file) throw UsageError("cannot write '" + output + "'");
          file << text.str();
        }
        r.add("factors", "factors", w.factors.size());
        add_verification(r, w, v);
        r.render(output == "-" ? err : out, fmt);
        return v.passed() ? kSuccess : kNegative;
      },
      any);
}

int cmd_verify(const std::string& input, const std::string& witness_path, Format fmt, std::ostream& out) {
  const AnyMatrix any = load_matrix(input);
  const std::string witness_text = read_file(witness_path);
  return std::visit(
      [&](const auto& g) {
        using K = typename std::decay_t<decltype(g)>::value_type;
        const Witness<K> w = parse_witness<K>(witness_text, g.field());
        const VerificationReport v = verify_witness(g, w);
        Report r;
        r.add("field", "field", g.field().to_string());
        r.add("factors", "factors", w.factors.size());
        add_verification(r, w, v);
        r.render(out, fmt);
        return v.passed() ? kSuccess : kNegative;
      },
      any);
}

int cmd_oracle(std::size_t p, std::size_t n, const std::string& spec_text, Format fmt, std::ostream& out) {
  const Field field = Field::prime(p);
  SmallFieldOracle oracle({field, n});
  const auto spec = parse_factor_spec<Residue>(spec_text, field);
  const auto mismatches = oracle.cross_check(spec);
  Report r;
  r.add("field", "field", field.to_string());
  r.add("n", "order n", n);
  r.add("spec", "spec", format_factor_spec(spec));
  r.add("matrices", "matrices", std::to_string(oracle.size()));
  r.add("idempotent", "idempotent matrices", oracle.enumerate_codes(MatrixProperty::idempotent()).size());
  r.add("square_zero", "square-zero matrices", oracle.enumerate_codes(MatrixProperty::square_zero()).size());
  r.add("product_set", "product set size", oracle.product_set_codes(spec).size());
  r.add("mismatches", "mismatches", mismatches.size());
  r.render(out, fmt);
  for (const auto& m : mismatches) {
    out << "mismatch in_product_set=" << (m.in_product_set ? "true" : "false")
        << " decided_feasible=" << (m.decided_feasible ? "true" : "false") << '\n';
    write_matrix(out, m.g);
  }
  return mismatches.empty() ? kSuccess : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and construct factorizations into idempotent and square-zero matrices"};
  app.name("quadprod");
  app.require_subcommand(1);

  std::string format_name = "human";
  const std::map<std::string, Format> formats{{"human", Format::Human}, {"keyvalue", Format::KeyValue}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format: human or keyvalue")
        ->check(CLI::IsMember({"human", "keyvalue"}));
  };

  std::string input, output, witness;
  std::vector<std::string> spec_tokens;
  std::size_t prime = 2, order = 2;

  auto* inv = app.add_subcommand("invariants", "Print r, n, n0, dim(R cap N), dim(R+N)");
  inv->add_option("--input,-i", input, "Matrix file ('-' for stdin)")->required();
  add_format(inv);

  auto* dec = app.add_subcommand("decide", "Evaluate the feasibility conditions for a factor shape");
  dec->add_option("--input,-i", input, "Matrix file ('-' for stdin)")->required();
  dec->add_option("--spec,-s", spec_tokens, "idem=<n1,...> scalars=<c1,...> sqz=<m1[,m2]>")->required();
  add_format(dec);

  auto* fac = app.add_subcommand("factor", "Construct and verify a witness");
  fac->add_option("--input,-i", input, "Matrix file ('-' for stdin)")->required();
  fac->add_option("--spec,-s", spec_tokens, "idem=<n1,...> scalars=<c1,...> sqz=<m1[,m2]>")->required();
  fac->add_option("--output,-o", output, "Witness file ('-' for stdout)")->required();
  add_format(fac);

  auto* ver = app.add_subcommand("verify", "Re-check a witness file against a matrix");
  ver->add_option("--input,-i", input, "Matrix file")->required();
  ver->add_option("--witness,-w", witness, "Witness file")->required();
  add_format(ver);

  auto* ora = app.add_subcommand("oracle", "Exhaustively cross-check decide against brute-force products");
  ora->add_option("--field,-p", prime, "Prime modulus p of GF(p)")->required();
  ora->add_option("--n", order, "Matrix order")->required();
  ora->add_option("--spec,-s", spec_tokens, "idem=<n1,...> scalars=<c1,...> sqz=<m1[,m2]>")->required();
  add_format(ora);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const Format fmt = formats.at(format_name);
  const std::string spec_text = join_tokens(spec_tokens);
  try {
    if (inv->parsed()) return cmd_invariants(input, fmt, out);
    if (dec->parsed()) return cmd_decide(input, spec_text, fmt, out);
    if (fac->parsed()) return cmd_factor(input, spec_text, output, fmt, out, err);
    if (ver->parsed()) {
      if (witness == input) throw UsageError("--witness must differ from --input");
      return cmd_verify(input, witness, fmt, out);
    }
    if (ora->parsed()) return cmd_oracle(prime, order, spec_text, fmt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == Errc::ConstructionError) return kInternal;
    if (e.code() == Errc::Infeasible) return kNegative;
    return kUsage;
  }
  return kUsage;
}

}  // namespace quadprod::cli
