#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "lrcrystal/graded.hpp"
#include "lrcrystal/json_io.hpp"
#include "lrcrystal/oracle.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalidShape = 3;

struct ShapeArg {
  std::optional<lrc::Partition> partition;
  std::optional<lrc::RationalShape> rational;
};

ShapeArg parse_shape(const std::string& s) {
  ShapeArg out;
  if (s.find('|') != std::string::npos)
    out.rational = lrc::parse_rational(s);
  else
    out.partition = lrc::parse_partition(s);
  return out;
}

std::optional<lrc::SymPair> parse_pair(const std::string& s) {
  auto make = [&](const std::string& prefix,
                  lrc::PairKind kind) -> std::optional<lrc::SymPair> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      size_t used = 0;
      int rank = std::stoi(s.substr(prefix.size()), &used);
      if (used != s.size() - prefix.size() || rank < 1) return std::nullopt;
      if (kind == lrc::PairKind::Sp) {
        if (rank % 2 != 0) return std::nullopt;
        rank /= 2;
      }
      return lrc::SymPair{kind, rank};
    } catch (...) {
      return std::nullopt;
    }
  };
  if (auto p = make("GL", lrc::PairKind::GL)) return p;
  if (auto p = make("Sp", lrc::PairKind::Sp)) return p;
  if (auto p = make("O", lrc::PairKind::O)) return p;
  return std::nullopt;
}

int cmd_lr(const std::string& lambda_s, const std::string& mu_s, const std::string& nu_s, int n,
           const std::string& variant_s, bool list, const std::string& format) {
  auto lambda = lrc::parse_partition(lambda_s);
  auto mu = lrc::parse_partition(mu_s);
  auto nu = lrc::parse_partition(nu_s);
  if (!lambda || !mu || !nu) return kExitParse;
  lrc::LRVariant variant;
  if (variant_s == "GL")
    variant = lrc::LRVariant::GL;
  else if (variant_s == "O")
    variant = lrc::LRVariant::O;
  else if (variant_s == "Sp")
    variant = lrc::LRVariant::Sp;
  else
    return kExitParse;
  lrc::LRQuery q{*lambda, *mu, *nu, n, variant};
  long long c;
  std::vector<lrc::Tableau> companions;
  try {
    c = lrc::lr_coefficient(q);
    if (list) companions = lrc::lowest_companions(q);
  } catch (const std::invalid_argument&) {
    return kExitInvalidShape;
  }
  if (format == "json") {
    nlohmann::json j{{"coefficient", c}};
    if (list) {
      j["tableaux"] = nlohmann::json::array();
      for (const auto& t : companions) j["tableaux"].push_back(lrc::to_json(t));
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << c << "\n";
    if (list)
      for (const auto& t : companions) std::cout << lrc::to_json(t)["rows"].dump() << "\n";
  }
  return 0;
}

int cmd_branch(const std::string& lambda_s, const std::string& pair_s,
               const std::string& format) {
  auto lambda = lrc::parse_partition(lambda_s);
  auto pair = parse_pair(pair_s);
  if (!lambda || !pair) return kExitParse;
  std::map<lrc::Partition, long long> dec;
  try {
    dec = lrc::branch_decompose(*lambda, *pair);
  } catch (const std::invalid_argument&) {
    return kExitInvalidShape;
  }
  if (format == "json") {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [nu, m] : dec) j[lrc::to_string(nu)] = m;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [nu, m] : dec) std::cout << lrc::to_string(nu) << " " << m << "\n";
  }
  return 0;
}

int cmd_graded(const std::string& nu_s, const std::string& pair_s, const std::string& format) {
  auto pair = parse_pair(pair_s);
  if (!pair) return kExitParse;
  ShapeArg nu = parse_shape(nu_s);
  if (!nu.partition && !nu.rational) return kExitParse;
  lrc::GradedPoly m;
  try {
    if (nu.rational)
      m = lrc::graded_multiplicity(*nu.rational, *pair);
    else if (pair->kind == lrc::PairKind::GL)
      m = lrc::graded_multiplicity(lrc::RationalShape{*nu.partition, {}, pair->n}, *pair);
    else
      m = lrc::graded_multiplicity(*nu.partition, *pair);
  } catch (const std::invalid_argument&) {
    return kExitInvalidShape;
  }
  if (format == "json")
    std::cout << lrc::to_json(m).dump() << "\n";
  else
    std::cout << m.str() << "\n";
  return 0;
}

int cmd_table(const std::string& kind, int rows, int cols, const std::string& format) {
  std::vector<std::vector<std::string>> cells(rows + 1, std::vector<std::string>(cols + 1));
  try {
    if (kind == "SO4") {
      auto table = lrc::so4_table(rows, cols);
      for (int i = 0; i <= rows; ++i)
        for (int j = 0; j <= cols; ++j) cells[i][j] = table[i][j].str();
    } else if (kind == "O4") {
      lrc::SymPair o4{lrc::PairKind::O, 4};
      for (int i = 0; i <= rows; ++i)
        for (int j = i; j <= cols; ++j)
          cells[i][j] =
              lrc::graded_multiplicity(lrc::Partition{{i + j, j - i, 0, 0}}, o4).str();
    } else {
      return kExitParse;
    }
  } catch (const std::invalid_argument&) {
    return kExitInvalidShape;
  }
  if (format == "csv") {
    for (const auto& row : cells) {
      for (size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? "," : "") << "\"" << row[j] << "\"";
      std::cout << "\n";
    }
  } else {
    size_t width = 1;
    for (const auto& row : cells)
      for (const auto& c : row) width = std::max(width, c.size());
    for (const auto& row : cells) {
      for (size_t j = 0; j < row.size(); ++j) {
        std::cout << (j ? " | " : "");
        std::cout << row[j] << std::string(width - row[j].size(), ' ');
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& level) {
  if (level != "fast" && level != "full") return kExitParse;
  lrc::VerifyReport rep = lrc::verify_all(level == "full");
  nlohmann::json j{{"ok", rep.ok()}, {"passed", rep.passed}, {"failed", rep.failed}};
  std::cout << j.dump() << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_graph(const std::string& shape_s, int n) {
  ShapeArg shape = parse_shape(shape_s);
  if (!shape.partition && !shape.rational) return kExitParse;
  std::vector<lrc::Tableau> elems;
  int rank = n;
  try {
    if (shape.rational) {
      rank = shape.rational->n;
      elems = lrc::enumerate_rational(*shape.rational);
    } else {
      elems = lrc::enumerate_ssyt(lrc::straight_shape(lrc::reambient(*shape.partition, n)), n);
    }
  } catch (const std::invalid_argument&) {
    return kExitInvalidShape;
  }
  auto label = [](const lrc::Tableau& t) {
    std::string s;
    for (int e : lrc::row_word(t)) s += (s.empty() ? "" : ".") + std::to_string(e);
    return s.empty() ? std::string("empty") : s;
  };
  std::cout << "digraph crystal {\n";
  for (const auto& t : elems) std::cout << "  \"" << label(t) << "\";\n";
  for (const auto& t : elems)
    for (int i = 1; i < rank; ++i)
      if (auto r = lrc::lower(t, i))
        std::cout << "  \"" << label(t) << "\" -> \"" << label(r->tableau)
                  << "\" [label=\"" << i << "\"];\n";
  std::cout << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Richardson, branching and graded-multiplicity calculator"};
  app.require_subcommand(1);

  std::string lambda_s, mu_s, nu_s, pair_s, variant_s = "GL", format = "text";
  std::string kind = "SO4", level = "fast", shape_s;
  int n = 0, rows = 3, cols = 3;
  bool list = false;

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("--lambda", lambda_s)->required();
  lr->add_option("--mu", mu_s)->required();
  lr->add_option("--nu", nu_s)->required();
  lr->add_option("--n", n)->required();
  lr->add_option("--variant", variant_s)->check(CLI::IsMember({"GL", "O", "Sp"}));
  lr->add_flag("--list", list, "print the companion tableaux");
  lr->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* branch = app.add_subcommand("branch", "decompose a GL representation under K");
  branch->add_option("--lambda", lambda_s)->required();
  branch->add_option("--pair", pair_s)->required();
  branch->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* graded = app.add_subcommand("graded", "graded multiplicity of a K-type");
  graded->add_option("--nu", nu_s)->required();
  graded->add_option("--pair", pair_s)->required();
  graded->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "graded multiplicity tables");
  table->add_option("--kind", kind)->check(CLI::IsMember({"O4", "SO4"}));
  table->add_option("--rows", rows);
  table->add_option("--cols", cols);
  table->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

  auto* verify = app.add_subcommand("verify", "run the cross-module invariant suites");
  verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));

  auto* graph = app.add_subcommand("graph", "crystal graph in DOT format");
  graph->add_option("--shape", shape_s)->required();
  graph->add_option("--n", n);
  std::string graph_format = "dot";
  graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (lr->parsed()) return cmd_lr(lambda_s, mu_s, nu_s, n, variant_s, list, format);
    if (branch->parsed()) return cmd_branch(lambda_s, pair_s, format);
    if (graded->parsed()) return cmd_graded(nu_s, pair_s, format);
    if (table->parsed()) return cmd_table(kind, rows, cols, format);
    if (verify->parsed()) return cmd_verify(level);
    if (graph->parsed()) return cmd_graph(shape_s, n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidShape;
  }
  return kExitParse;
}
