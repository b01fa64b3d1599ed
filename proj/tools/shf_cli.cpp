// shf: construct, verify and bound separating hash families.
//
// Exit codes: 0 ok, 1 property fails (verify), 2 bad input, 3 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "shf/bounds.hpp"
#include "shf/constructor.hpp"
#include "shf/errors.hpp"
#include "shf/model.hpp"
#include "shf/report.hpp"
#include "shf/verifier.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kBadInput = 2;
constexpr int kIoError = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_list(const std::string &text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoul(item));
  return out;
}

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
  std::size_t n = 0, q = 0, w1 = 0, w2 = 0;
  std::string out = "-";
};

int cmd_construct(const ConstructArgs &a) {
  if (a.out == "-") {
    shf::write_construction(std::cout, a.n, a.q, a.w1, a.w2);
    return std::cout ? kOk : kIoError;
  }
  std::ofstream file(a.out);
  if (!file)
    throw IoError("cannot open '" + a.out + "' for writing");
  const auto rows = shf::write_construction(file, a.n, a.q, a.w1, a.w2);
  file.close();
  if (!file)
    throw IoError("write to '" + a.out + "' failed");
  std::cout << rows << '\n';
  return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::string type;
  std::string format = "text";
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs &a) {
  std::ifstream in(a.path);
  if (!in)
    throw IoError("cannot open '" + a.path + "'");
  const auto parsed = shf::parse_matrix(in);
  shf::ShfType type;
  if (!a.type.empty())
    type = shf::ShfType::parse(a.type);
  else if (parsed.stamped_type)
    type = *parsed.stamped_type;
  else
    throw shf::DomainError("no --type given and the matrix carries none");

  const auto v = shf::verify(parsed.matrix, type, {a.threads});
  if (a.format == "json") {
    std::cout << shf::verdict_to_json(v).dump() << '\n';
  } else {
    std::cout << (v.ok ? "ok" : "FAIL") << ": SHF(" << parsed.matrix.rows()
              << "; " << parsed.matrix.cols() << ", " << parsed.matrix.q()
              << ", {" << type.to_string() << "})\n"
              << "families checked: " << v.families_checked << '\n';
    if (v.witness) {
      std::cout << "unseparated family:";
      for (const auto &p : v.witness->parts()) {
        std::cout << " {";
        for (std::size_t i = 0; i < p.size(); ++i)
          std::cout << (i ? "," : "") << p[i];
        std::cout << '}';
      }
      std::cout << '\n';
    }
  }
  return v.ok ? kOk : kFails;
}

// ---- bound ------------------------------------------------------------------

struct BoundArgs {
  std::string method;
  std::optional<std::size_t> n, q, w1, w2, t1, t2;
  std::optional<std::string> N;
  std::string type;
  std::string exp = "ceil";
  std::string gamma = "two-smallest";
  std::string pair;
  std::string variant = "printed";
  std::string format = "text";
};

template <class T>
const T &need(const std::optional<T> &v, const char *flag,
              const std::string &method) {
  if (!v)
    throw shf::DomainError("bound " + method + " requires " + flag);
  return *v;
}

shf::BigCount parse_big(const std::string &s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw shf::DomainError("--N must be a nonnegative integer, got '" + s + "'");
  return shf::BigCount(s);
}

void print_count(const BoundArgs &a, const std::string &what,
                 const shf::BigCount &value) {
  if (a.format == "json") {
    nlohmann::json j;
    j["method"] = a.method;
    j["quantity"] = what;
    j["value"] = value.str();
    j["rendering"] = shf::render_scientific(value);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
}

void print_implied(const BoundArgs &a, const std::optional<std::size_t> &n) {
  if (a.format == "json") {
    nlohmann::json j;
    j["method"] = a.method;
    j["quantity"] = "max_n";
    j["value"] = n ? nlohmann::json(*n) : nlohmann::json();
    j["no_bound"] = !n.has_value();
    std::cout << j.dump() << '\n';
  } else if (n) {
    std::cout << "n <= " << *n << '\n';
  } else {
    std::cout << "no bound\n";
  }
}

void print_bound(const BoundArgs &a, const shf::BoundResult &b,
                 nlohmann::json modes) {
  if (a.format == "json") {
    nlohmann::json j = shf::bound_to_json(b);
    j["method"] = a.method;
    j["modes"] = std::move(modes);
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << (b.value ? b.value->str() : std::string("(not materialised)"))
            << '\n'
            << "rendering: " << b.rendering << '\n'
            << "omega: " << (b.omega ? "true" : "false") << '\n';
}

shf::ExpMode parse_exp(const std::string &s) {
  return s == "ceil" ? shf::ExpMode::Ceil : shf::ExpMode::FloorPlusOne;
}

int cmd_bound(const BoundArgs &a) {
  const auto &m = a.method;
  if (m == "main") {
    const auto q = need(a.q, "--q", m), w1 = need(a.w1, "--w1", m),
               w2 = need(a.w2, "--w2", m);
    if (a.N)
      print_implied(a, shf::implied_max_n(parse_big(*a.N), q, w1, w2));
    else
      print_count(a, "min_N", shf::main_min_N(need(a.n, "--n or --N", m), q, w1, w2));
    return kOk;
  }
  if (m == "sshf") {
    const auto q = need(a.q, "--q", m), t1 = need(a.t1, "--t1", m),
               t2 = need(a.t2, "--t2", m);
    if (a.N)
      print_implied(a, shf::sshf_implied_max_n(parse_big(*a.N), q, t1, t2));
    else
      print_count(a, "min_N", shf::sshf_min_N(need(a.n, "--n or --N", m), q, t1, t2));
    return kOk;
  }

  const auto N = parse_big(need(a.N, "--N", m));
  const auto q = need(a.q, "--q", m);
  if (a.type.empty())
    throw shf::DomainError("bound " + m + " requires --type");
  const auto type = shf::ShfType::parse(a.type);
  const auto exp = parse_exp(a.exp);
  nlohmann::json modes;
  modes["exp"] = shf::to_string(exp);

  if (m == "besz") {
    const auto gamma = a.gamma == "two-smallest"
                           ? shf::GammaMode::TwoSmallest
                           : shf::GammaMode::DesignatedPair;
    std::optional<shf::GammaPair> pair;
    if (!a.pair.empty()) {
      const auto p = parse_list(a.pair);
      if (p.size() != 2)
        throw shf::DomainError("--pair takes two block sizes, e.g. 2,3");
      pair = shf::GammaPair{p[0], p[1]};
    }
    modes["gamma"] = shf::to_string(gamma);
    print_bound(a, shf::besz_bound(N, q, type, gamma, exp, pair), modes);
  } else if (m == "bt2011") {
    print_bound(a, shf::baztran2011_bound(N, q, type, exp), modes);
  } else {
    const auto variant = a.variant == "printed" ? shf::Bt2013Variant::Printed
                                                : shf::Bt2013Variant::Tabulated;
    modes["variant"] = shf::to_string(variant);
    if (variant == shf::Bt2013Variant::Tabulated)
      modes["reconstructed"] = true;
    print_bound(a, shf::baztran2013_bound(N, q, type, exp, variant), modes);
  }
  return kOk;
}

// ---- table ------------------------------------------------------------------

struct TableArgs {
  std::string format = "md";
  std::string grid = "default";
  std::string qs = "3,4,5", w1s = "1,2,3", w2s = "2,3,4,5,6";
  std::string out = "-";
};

int cmd_table(const TableArgs &a) {
  std::vector<shf::TableKey> grid;
  if (a.grid == "default") {
    grid = shf::default_grid();
  } else {
    for (auto q : parse_list(a.qs))
      for (auto w1 : parse_list(a.w1s))
        for (auto w2 : parse_list(a.w2s))
          if (w1 < w2)
            grid.push_back({q, w1, w2});
  }
  const auto rows = shf::build_table(grid);
  std::ofstream file;
  std::ostream *out = &std::cout;
  if (a.out != "-") {
    file.open(a.out);
    if (!file)
      throw IoError("cannot open '" + a.out + "' for writing");
    out = &file;
  }
  if (a.format == "csv")
    shf::write_table_csv(*out, rows);
  else
    shf::write_table_markdown(*out, rows);
  out->flush();
  if (!*out)
    throw IoError("write failed");
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Separating hash families: construct, verify, bound"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto *construct = app.add_subcommand(
      "construct", "Write the optimal matrix for type {w1^(q-1), w2}");
  construct->add_option("--n", ca.n, "columns")->required();
  construct->add_option("--q", ca.q, "alphabet size")->required();
  construct->add_option("--w1", ca.w1, "repeated block size")->required();
  construct->add_option("--w2", ca.w2, "large block size")->required();
  construct->add_option("--out,-o", ca.out, "output path ('-' for stdout)");

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "Exhaustively check separation");
  verify->add_option("matrix", va.path, "matrix file")->required();
  verify->add_option("--type", va.type,
                     "comma-separated block sizes (default: stamped type)");
  verify->add_option("--format", va.format)
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--threads", va.threads,
                     "worker threads (0 = all cores, 1 = sequential)");

  BoundArgs ba;
  auto *bound = app.add_subcommand("bound", "Evaluate one bound");
  bound->add_option("method", ba.method)
      ->required()
      ->check(CLI::IsMember({"main", "besz", "bt2011", "bt2013", "sshf"}));
  bound->add_option("--n", ba.n, "columns");
  bound->add_option("--N", ba.N, "rows (implied-n mode for main/sshf)");
  bound->add_option("--q", ba.q, "alphabet size");
  bound->add_option("--w1", ba.w1);
  bound->add_option("--w2", ba.w2);
  bound->add_option("--t1", ba.t1);
  bound->add_option("--t2", ba.t2);
  bound->add_option("--type", ba.type, "comma-separated block sizes");
  bound->add_option("--exp", ba.exp)
      ->check(CLI::IsMember({"ceil", "floor-plus-one"}));
  bound->add_option("--gamma", ba.gamma)
      ->check(CLI::IsMember({"two-smallest", "designated-pair"}));
  bound->add_option("--pair", ba.pair, "designated gamma pair, e.g. 2,3");
  bound->add_option("--variant", ba.variant)
      ->check(CLI::IsMember({"printed", "tabulated"}));
  bound->add_option("--format", ba.format)
      ->check(CLI::IsMember({"text", "json"}));

  TableArgs ta;
  auto *table = app.add_subcommand("table", "Regenerate the bound comparison table");
  table->add_option("--format", ta.format)->check(CLI::IsMember({"md", "csv"}));
  table->add_option("--grid", ta.grid)
      ->check(CLI::IsMember({"default", "custom"}));
  table->add_option("--qs", ta.qs, "custom grid q values");
  table->add_option("--w1s", ta.w1s, "custom grid w1 values");
  table->add_option("--w2s", ta.w2s, "custom grid w2 values");
  table->add_option("--out,-o", ta.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*construct)
      return cmd_construct(ca);
    if (*verify)
      return cmd_verify(va);
    if (*bound)
      return cmd_bound(ba);
    if (*table)
      return cmd_table(ta);
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const shf::FormatError &e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kBadInput;
  } catch (const shf::DomainError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: value out of range: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
