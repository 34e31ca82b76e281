// Command line front end: enumeration, factorization, forest export, algebra
// evaluation, matrix emission and verification suites.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>

#include "wqsym/golden.hpp"
#include "wqsym/involution.hpp"
#include "wqsym/json_io.hpp"
#include "wqsym/verify.hpp"

using namespace wqsym;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;

PackedWord parse_word(const std::string& s) {
  try {
    return PackedWord::parse(s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitUsage);
  }
}

std::string elem_str(const Elem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    const bool neg = c < 0;
    const Int a = neg ? Int(-c) : c;
    if (out.empty())
      out = neg ? "- " : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1) out += a.str() + "*";
    out += basis_name(x.basis()) + "[" + w.str() + "]";
  }
  return out;
}

std::string tensor_str(const Tensor2& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : x.terms()) {
    const bool neg = c < 0;
    const Int a = neg ? Int(-c) : c;
    if (out.empty())
      out = neg ? "- " : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1) out += a.str() + "*";
    out += basis_name(x.basis()) + "[" + k.first.str() + "](x)" + basis_name(x.basis()) +
           "[" + k.second.str() + "]";
  }
  return out;
}

std::vector<PackedWord> make_order(int n, const std::string& order) {
  if (order == "grlex") return enumerate_packed_words(n);
  if (order != "paper")
    throw CLI::ValidationError("--order must be paper or grlex");
  std::vector<PackedWord> out;
  if (n == 3)
    for (const auto& s : golden::fixture_order3()) out.push_back(PackedWord::parse(s));
  else if (n == 4)
    for (const auto& s : golden::fixture_order4()) out.push_back(PackedWord::parse(s));
  else if (n <= 2)
    return enumerate_packed_words(n);
  else
    throw CLI::ValidationError("the fixed reference order exists for sizes <= 4 only");
  return out;
}

int env_max_degree() {
  const char* v = std::getenv("WQSYM_MAX_DEGREE");
  if (!v) return 1 << 20;
  return std::max(0, std::atoi(v));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with packed words and their Hopf algebra"};
  app.require_subcommand(1);

  // ---- enumerate ----------------------------------------------------------
  auto* cmd_enum = app.add_subcommand("enumerate", "list packed words of one size");
  int enum_size = 0;
  std::string enum_filter = "all";
  std::string enum_format = "lines";
  cmd_enum->add_option("--size", enum_size, "word size")->required();
  cmd_enum->add_option("--filter", enum_filter, "all|irreducible|red-irr|blue-irr|rb-irr")
      ->check(CLI::IsMember({"all", "irreducible", "red-irr", "blue-irr", "rb-irr"}));
  cmd_enum->add_option("--format", enum_format, "lines|json|count")
      ->check(CLI::IsMember({"lines", "json", "count"}));

  // ---- factor --------------------------------------------------------------
  auto* cmd_factor = app.add_subcommand("factor", "factor a packed word");
  std::string factor_mode = "gd";
  std::string factor_word;
  cmd_factor->add_option("--mode", factor_mode, "gd|red|blue|rb|br")
      ->check(CLI::IsMember({"gd", "red", "blue", "rb", "br"}));
  cmd_factor->add_option("word", factor_word, "packed word")->required();

  // ---- forest ---------------------------------------------------------------
  auto* cmd_forest = app.add_subcommand("forest", "forest of a packed word");
  std::string forest_mode = "red";
  bool forest_skeleton = false;
  std::string forest_format = "json";
  std::string forest_word;
  cmd_forest->add_option("--mode", forest_mode, "red|blue|rb|br")
      ->check(CLI::IsMember({"red", "blue", "rb", "br"}));
  cmd_forest->add_flag("--skeleton", forest_skeleton, "emit the skeleton form");
  cmd_forest->add_option("--format", forest_format, "json|dot")
      ->check(CLI::IsMember({"json", "dot"}));
  cmd_forest->add_option("word", forest_word, "packed word")->required();

  // ---- op -------------------------------------------------------------------
  auto* cmd_op = app.add_subcommand("op", "evaluate a basis operation");
  std::string op_basis = "R";
  std::string op_name;
  std::vector<std::string> op_args;
  cmd_op->add_option("--basis", op_basis, "M|Q|R")->check(CLI::IsMember({"M", "Q", "R"}));
  cmd_op->add_option("--op", op_name, "prec|succ|prod|copr-prec|copr-succ|copr")
      ->required()
      ->check(CLI::IsMember({"prec", "succ", "prod", "copr-prec", "copr-succ", "copr"}));
  cmd_op->add_option("operands", op_args, "packed words")->required();

  // ---- matrix ----------------------------------------------------------------
  auto* cmd_matrix = app.add_subcommand("matrix", "change-of-basis matrix as CSV");
  std::string matrix_which;
  int matrix_size = 3;
  std::string matrix_order = "paper";
  bool strict_zeros = false;
  cmd_matrix->add_option("--which", matrix_which, "P2R|O2Q|Q2R")
      ->required()
      ->check(CLI::IsMember({"P2R", "O2Q", "Q2R"}));
  cmd_matrix->add_option("--size", matrix_size, "degree")->required();
  cmd_matrix->add_option("--order", matrix_order, "paper|grlex")
      ->check(CLI::IsMember({"paper", "grlex"}));
  cmd_matrix->add_flag("--strict-zeros", strict_zeros, "print 0 instead of .");

  // ---- involution --------------------------------------------------------------
  auto* cmd_inv = app.add_subcommand("involution", "the involution on packed words");
  std::string inv_word;
  int inv_table = 0;
  cmd_inv->add_option("word", inv_word, "packed word");
  cmd_inv->add_option("--table", inv_table, "print the full table of one size");

  // ---- verify --------------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  int max_size = 4;
  cmd_verify->add_option("--suite", suite,
                         "dims|bijections|axioms|bases|duality|iso|series|all")
      ->check(CLI::IsMember(
          {"dims", "bijections", "axioms", "bases", "duality", "iso", "series", "all"}));
  cmd_verify->add_option("--max-size", max_size, "size cap for the expensive suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_enum) {
      std::vector<PackedWord> words;
      for (const PackedWord& w : enumerate_packed_words(enum_size)) {
        bool keep = true;
        if (enum_filter == "irreducible")
          keep = is_irreducible(w);
        else if (enum_filter == "red-irr")
          keep = is_red_irreducible(w);
        else if (enum_filter == "blue-irr")
          keep = is_blue_irreducible(w);
        else if (enum_filter == "rb-irr")
          keep = is_irreducible(w) && is_red_irreducible(w) && is_blue_irreducible(w);
        if (keep) words.push_back(w);
      }
      if (enum_format == "count") {
        std::cout << words.size() << "\n";
      } else if (enum_format == "json") {
        json j = json::array();
        for (const auto& w : words) j.push_back(w.str());
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& w : words) std::cout << w.str() << "\n";
      }
      return 0;
    }

    if (*cmd_factor) {
      const PackedWord w = parse_word(factor_word);
      if (factor_mode == "gd") {
        bool first = true;
        for (const PackedWord& f : gd_decompose(w)) {
          std::cout << (first ? "" : " | ") << f.str();
          first = false;
        }
        std::cout << "\n";
      } else if (factor_mode == "red" || factor_mode == "blue") {
        auto [u, v] = factor_mode == "red" ? red_factorize(w) : blue_factorize(w);
        std::cout << u.str() << " (*) " << v.str() << "\n";
      } else {
        Bifactorization b =
            factor_mode == "rb" ? red_blue_factorize(w) : blue_red_factorize(w);
        std::cout << b.outer.str() << " (*) " << b.inner.str() << " (*) " << b.core.str()
                  << "\n";
      }
      return 0;
    }

    if (*cmd_forest) {
      const PackedWord w = parse_word(forest_word);
      BiplaneForest f;
      if (forest_mode == "red")
        f = forest_skeleton ? to_red_skeleton(w) : to_red_forest(w);
      else if (forest_mode == "blue")
        f = forest_skeleton ? to_blue_skeleton(w) : to_blue_forest(w);
      else if (forest_mode == "rb")
        f = to_bicolored(w, Scheme::RedBlue);
      else
        f = to_bicolored(w, Scheme::BlueRed);
      if (forest_format == "json")
        std::cout << forest_to_json(f).dump(2) << "\n";
      else
        std::cout << forest_to_dot(f, w.str());
      return 0;
    }

    if (*cmd_op) {
      const BasisTag tag = op_basis == "M"   ? BasisTag::M
                           : op_basis == "Q" ? BasisTag::Q
                                             : BasisTag::R;
      const bool unary = op_name.rfind("copr", 0) == 0;
      if ((unary && op_args.size() != 1) || (!unary && op_args.size() != 2)) {
        std::cerr << "error: " << op_name << " takes " << (unary ? 1 : 2)
                  << " operand(s)\n";
        return kExitUsage;
      }
      const Elem x(tag, parse_word(op_args[0]));
      if (unary) {
        if (op_name == "copr-prec")
          std::cout << tensor_str(copr_prec(x)) << "\n";
        else if (op_name == "copr-succ")
          std::cout << tensor_str(copr_succ(x)) << "\n";
        else
          std::cout << tensor_str(reduced_coproduct(x)) << "\n";
      } else {
        const Elem y(tag, parse_word(op_args[1]));
        if (op_name == "prec")
          std::cout << elem_str(half_prec(x, y)) << "\n";
        else if (op_name == "succ")
          std::cout << elem_str(half_succ(x, y)) << "\n";
        else
          std::cout << elem_str(full_product(x, y)) << "\n";
      }
      return 0;
    }

    if (*cmd_matrix) {
      const auto order = make_order(matrix_size, matrix_order);
      ExactMatrix m = matrix_which == "P2R" ? basis_matrix(BasisTag::P, order)
                      : matrix_which == "O2Q" ? basis_matrix(BasisTag::O, order)
                                              : sigma_matrix(order);
      std::cout << matrix_to_csv(m, order, strict_zeros);
      return 0;
    }

    if (*cmd_inv) {
      if (inv_table > 0) {
        for (const PackedWord& w : enumerate_packed_words(inv_table))
          std::cout << w.str() << " " << involution_hat(w).str() << "\n";
      } else if (!inv_word.empty()) {
        std::cout << involution_hat(parse_word(inv_word)).str() << "\n";
      } else {
        std::cerr << "error: give a word or --table N\n";
        return kExitUsage;
      }
      return 0;
    }

    if (*cmd_verify) {
      const int cap = std::min(max_size, env_max_degree());
      verify::Report rep = verify::run_suite(suite, cap);
      std::cout << rep.to_json().dump(2) << "\n";
      return rep.all_passed() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
