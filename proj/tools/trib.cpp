// Command-line surface: generation, counting, tabulation, and
// formula-vs-oracle verification for squares and cubes in the Tribonacci
// word. Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trib/counts.hpp"
#include "trib/kernel.hpp"
#include "trib/oracle.hpp"

namespace {

using trib::Int;

Int parse_count_arg(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    throw std::domain_error("expected a nonnegative decimal integer, got '" + text + "'");
  }
  return Int(text);
}

std::string csv_cell(const std::optional<Int>& v) { return v ? v->str() : ""; }

std::string json_value(const std::optional<Int>& v) { return v ? v->str() : "null"; }

struct TableRow {
  std::int64_t m;
  Int t, k, a_t, b_t;
  std::optional<Int> alpha, beta, gamma, theta;
};

TableRow make_row(std::int64_t m) {
  TableRow row{m,
               trib::tribonacci_number(m),
               trib::kernel_number(m),
               trib::count_squares_at_tm(m),
               trib::count_cubes_at_tm(m),
               std::nullopt,
               std::nullopt,
               std::nullopt,
               std::nullopt};
  if (m >= 4) {
    const auto b = trib::breakpoints(m);
    row.alpha = b.alpha;
    row.beta = b.beta;
    row.gamma = b.gamma;
    row.theta = b.theta;
  }
  return row;
}

void print_rows_csv(const std::vector<TableRow>& rows) {
  std::cout << "m,t,k,A_t,B_t,alpha,beta,gamma,theta\n";
  for (const auto& r : rows) {
    std::cout << r.m << ',' << r.t.str() << ',' << r.k.str() << ',' << r.a_t.str()
              << ',' << r.b_t.str() << ',' << csv_cell(r.alpha) << ','
              << csv_cell(r.beta) << ',' << csv_cell(r.gamma) << ','
              << csv_cell(r.theta) << '\n';
  }
}

void print_rows_json(const std::vector<TableRow>& rows) {
  std::cout << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::cout << "  {\"m\": " << r.m << ", \"t\": " << r.t.str() << ", \"k\": "
              << r.k.str() << ", \"A_t\": " << r.a_t.str() << ", \"B_t\": "
              << r.b_t.str() << ", \"alpha\": " << json_value(r.alpha)
              << ", \"beta\": " << json_value(r.beta) << ", \"gamma\": "
              << json_value(r.gamma) << ", \"theta\": " << json_value(r.theta)
              << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  std::cout << "]\n";
}

int run_gen(std::int64_t n) {
  std::cout << trib::prefix(n).str() << '\n';
  return 0;
}

int run_count(const std::string& kind, const std::string& n_text, bool explain) {
  const Int n = parse_count_arg(n_text);
  const trib::CountResult result =
      kind == "squares" ? trib::count_squares(n) : trib::count_cubes(n);
  std::cout << result.value.str() << '\n';
  if (explain) {
    std::cout << "branch=" << trib::regime_name(result.regime);
    if (result.order) std::cout << " m=" << *result.order;
    std::cout << '\n';
  }
  return 0;
}

int run_table(std::int64_t from_m, std::int64_t to_m, const std::string& format) {
  if (from_m < 0 || from_m > to_m) {
    throw std::domain_error("table: need 0 <= FROM <= TO");
  }
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(to_m - from_m + 1));
  for (std::int64_t m = from_m; m <= to_m; ++m) rows.push_back(make_row(m));
  if (format == "json") {
    print_rows_json(rows);
  } else {
    print_rows_csv(rows);
  }
  return 0;
}

int run_kernel(std::int64_t m) {
  std::cout << trib::kernel_word(m).str() << '\n';
  return 0;
}

int run_breakpoints(std::int64_t m, const std::string& format) {
  const auto b = trib::breakpoints(m);
  if (format == "json") {
    std::cout << "{\"m\": " << b.m << ", \"alpha\": " << b.alpha.str()
              << ", \"beta\": " << b.beta.str() << ", \"gamma\": " << b.gamma.str()
              << ", \"theta\": " << b.theta.str() << "}\n";
  } else {
    std::cout << "m,alpha,beta,gamma,theta\n";
    std::cout << b.m << ',' << b.alpha.str() << ',' << b.beta.str() << ','
              << b.gamma.str() << ',' << b.theta.str() << '\n';
  }
  return 0;
}

// ---- verify -----------------------------------------------------------

struct Mismatch {
  std::string detail;
};

void require(bool condition, const std::string& detail) {
  if (!condition) throw Mismatch{detail};
}

void check_ok(const std::string& name) { std::cout << "ok: " << name << '\n'; }

void verify_identities() {
  {
    Int t2 = 0, t1 = 1, t0 = 1;  // t_{m-3}, t_{m-2}, t_{m-1}
    for (int m = 1; m <= 60; ++m) {
      const Int expected = t0 + t1 + t2;
      require(trib::tribonacci_number(m) == expected,
              "t recurrence fails at m=" + std::to_string(m));
      t2 = t1;
      t1 = t0;
      t0 = expected;
    }
    Int k2 = 0, k1 = 1, k0 = 1;
    for (int m = 3; m <= 60; ++m) {
      const Int expected = k0 + k1 + k2 - 1;
      require(trib::kernel_number(m) == expected,
              "k recurrence fails at m=" + std::to_string(m));
      k2 = k1;
      k1 = k0;
      k0 = expected;
    }
    check_ok("t and k recurrences (m <= 60)");
  }
  for (int m = 3; m <= 60; ++m) {
    require(trib::kernel_number(m) ==
                trib::kernel_number(m - 3) + trib::tribonacci_number(m - 4),
            "k_m = k_{m-3} + t_{m-4} fails at m=" + std::to_string(m));
    require(2 * trib::kernel_number(m) ==
                trib::tribonacci_number(m - 3) + trib::tribonacci_number(m - 5) + 1,
            "2 k_m = t_{m-3} + t_{m-5} + 1 fails at m=" + std::to_string(m));
  }
  check_ok("kernel-number identities (m <= 60)");
  {
    Int sum_t = 0;
    for (int m = 0; m <= 60; ++m) {
      sum_t += trib::tribonacci_number(m);
      require(2 * sum_t ==
                  trib::tribonacci_number(m) + trib::tribonacci_number(m + 2) - 3,
              "t partial-sum formula fails at m=" + std::to_string(m));
    }
    Int sum_k = 0;
    for (int m = 1; m <= 60; ++m) {
      sum_k += trib::kernel_number(m);
      require(2 * sum_k == trib::tribonacci_number(m - 2) +
                               trib::tribonacci_number(m - 3) + m,
              "k partial-sum formula fails at m=" + std::to_string(m));
    }
    check_ok("partial-sum formulas (m <= 60)");
  }
  for (int m = 0; m <= 15; ++m) {
    const auto k4 = trib::to_int64(trib::kernel_number(m + 4));
    const auto k5 = trib::to_int64(trib::kernel_number(m + 5));
    const auto k6 = trib::to_int64(trib::kernel_number(m + 6));
    require(trib::word_tm(m) + trib::word_tm(m + 1).slice(1, k4 - 2) ==
                trib::word_tm(m + 2).slice(1, k5 - 2),
            "prefix identity (1) fails at m=" + std::to_string(m));
    require(trib::word_tm(m + 3).slice(1, k6 - 2) ==
                trib::word_tm(m + 1) + trib::word_tm(m) +
                    trib::word_tm(m + 1).slice(1, k4 - 2),
            "prefix identity (2) fails at m=" + std::to_string(m));
  }
  check_ok("prefix identities, letterwise (m <= 15)");
  for (int m = 1; m <= 15; ++m) {
    const auto kernel = trib::kernel_word(m);
    require(Int(kernel.size()) == trib::kernel_number(m),
            "kernel length fails at m=" + std::to_string(m));
    require(trib::is_palindrome(kernel),
            "kernel palindromicity fails at m=" + std::to_string(m));
  }
  check_ok("kernel words are palindromes of length k_m (m <= 15)");
  for (int m = 1; m <= 12; ++m) {
    const Int p = trib::first_end_position(m);
    require(p == trib::kernel_number(m + 3) - 1,
            "P(K_m,1) closed forms disagree at m=" + std::to_string(m));
    const auto occ = trib::find_occurrences(trib::kernel_word(m),
                                            trib::to_int64(2 * p));
    require(!occ.empty() &&
                Int(occ.front()) + trib::kernel_number(m) - 1 == p,
            "P(K_m,1) text scan fails at m=" + std::to_string(m));
  }
  check_ok("first-occurrence end positions by text scan (m <= 12)");
  for (int m = 4; m <= 30; ++m) {
    const auto c1 = trib::position_range(trib::SquareCase::case1, m);
    const auto c2 = trib::position_range(trib::SquareCase::case2, m);
    const auto c3 = trib::position_range(trib::SquareCase::case3, m);
    require(c1.count() == trib::kernel_number(m) - 1 &&
                c2.count() == trib::kernel_number(m) - 1 &&
                c3.count() == trib::tribonacci_number(m - 4) -
                                  trib::kernel_number(m - 3) + 1,
            "position-set cardinalities fail at m=" + std::to_string(m));
    const auto next3 = trib::position_range(trib::SquareCase::case3, m + 1);
    require(c3.hi < c2.lo && c2.hi < c1.lo && c1.hi + 1 == next3.lo,
            "position-set chain fails at m=" + std::to_string(m));
  }
  check_ok("position-set cardinalities, adjacency, disjointness (4 <= m <= 30)");
  for (int m = 4; m <= 30; ++m) {
    const auto b = trib::breakpoints(m);
    const Int a_alpha = trib::count_squares(b.alpha).value;
    const Int a_beta = trib::count_squares(b.beta).value;
    require(a_alpha == trib::delta_cum(m - 1) + trib::delta_cum(m) +
                           trib::theta_cum(m) + 1,
            "A(alpha_m) anchor fails at m=" + std::to_string(m));
    require(a_beta == 2 * trib::delta_cum(m) + trib::theta_cum(m + 1),
            "A(beta_m) anchor fails at m=" + std::to_string(m));
    require(trib::count_squares(b.gamma).value == a_beta + 1,
            "A(gamma_m) anchor fails at m=" + std::to_string(m));
    require(trib::count_squares(b.theta).value ==
                trib::count_squares(trib::breakpoints(m + 1).alpha).value - 1,
            "A(theta_m) anchor fails at m=" + std::to_string(m));
  }
  check_ok("breakpoint anchors (4 <= m <= 30)");
  for (int m = 0; m <= 40; ++m) {
    require(trib::count_squares_at_tm(m) ==
                trib::count_squares(trib::tribonacci_number(m)).value,
            "A(t_m) closed form fails at m=" + std::to_string(m));
    require(trib::count_cubes_at_tm(m) ==
                trib::count_cubes(trib::tribonacci_number(m)).value,
            "B(t_m) closed form fails at m=" + std::to_string(m));
    if (m >= 3) {
      require(trib::count_squares_at_tm_partial_sums(m) == trib::count_squares_at_tm(m),
              "partial-sum form of A(t_m) fails at m=" + std::to_string(m));
    }
  }
  check_ok("A(t_m), B(t_m) closed forms and partial-sum form (m <= 40)");
}

std::vector<std::int64_t> record_ends(const std::vector<trib::RepetitionRecord>& records) {
  std::vector<std::int64_t> ends;
  ends.reserve(records.size());
  for (const auto& r : records) ends.push_back(r.end_position);
  return ends;
}

Int count_at_most(const std::vector<std::int64_t>& ends, std::int64_t n) {
  return Int(std::upper_bound(ends.begin(), ends.end(), n) - ends.begin());
}

std::vector<std::int64_t> verify_squares(std::int64_t max_n, std::int64_t cap) {
  const auto records = trib::brute_distinct_squares(max_n, cap);
  const auto ends = record_ends(records);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const Int formula = trib::count_squares(n).value;
    const Int oracle = count_at_most(ends, n);
    require(formula == oracle, "A(" + std::to_string(n) + "): formula " +
                                   formula.str() + ", oracle " + oracle.str());
  }
  check_ok("A(n) equals the brute-force square count for all n <= " +
           std::to_string(max_n));
  std::set<std::int64_t> end_set(ends.begin(), ends.end());
  require(end_set.size() == ends.size(), "two distinct squares share an end position");
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const bool expected = end_set.count(n) > 0;
    require((trib::a_indicator(n) == 1) == expected,
            "a(" + std::to_string(n) + "): indicator " +
                std::to_string(trib::a_indicator(n)) + ", oracle " +
                (expected ? "1" : "0"));
  }
  check_ok("a(n) support equals the oracle's new-square ends");
  const auto classes = trib::square_length_classes(max_n);
  for (const auto& r : records) {
    require(classes.count(Int(2 * r.root_length)) == 1,
            "square of total length " + std::to_string(2 * r.root_length) +
                " outside the admissible classes");
  }
  check_ok("square lengths all lie in {2 t_m} u {2 t_m + 2 t_{m-1}}");
  return ends;
}

std::vector<std::int64_t> verify_cubes(std::int64_t max_n, std::int64_t cap) {
  const auto records = trib::brute_distinct_cubes(max_n, cap);
  const auto ends = record_ends(records);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const Int formula = trib::count_cubes(n).value;
    const Int oracle = count_at_most(ends, n);
    require(formula == oracle, "B(" + std::to_string(n) + "): formula " +
                                   formula.str() + ", oracle " + oracle.str());
  }
  check_ok("B(n) equals the brute-force cube count for all n <= " +
           std::to_string(max_n));
  const auto classes = trib::cube_length_classes(max_n);
  for (const auto& r : records) {
    require(classes.count(Int(3 * r.root_length)) == 1,
            "cube of total length " + std::to_string(3 * r.root_length) +
                " outside the admissible classes");
  }
  check_ok("cube lengths all lie in {3 t_m}");
  return ends;
}

int run_verify(std::int64_t max_n, const std::string& what, std::int64_t cap) {
  if (max_n < 1) throw std::domain_error("verify: MAX_N must be >= 1");
  try {
    const bool all = what == "all";
    if (all || what == "identities") verify_identities();
    std::vector<std::int64_t> square_ends, cube_ends;
    if (all || what == "squares") square_ends = verify_squares(max_n, cap);
    if (all || what == "cubes") cube_ends = verify_cubes(max_n, cap);
    if (all) {
      require(trib::assert_no_fourth_power(max_n, cap),
              "a fourth power occurs within prefix(" + std::to_string(max_n) + ")");
      check_ok("no fourth power up to n = " + std::to_string(max_n));
      for (std::int64_t n = 0; n <= max_n; ++n) {
        require(count_at_most(cube_ends, n) <= count_at_most(square_ends, n),
                "B(n) > A(n) at n = " + std::to_string(n));
      }
      check_ok("B(n) <= A(n) throughout");
    }
  } catch (const Mismatch& mismatch) {
    std::cout << "MISMATCH: " << mismatch.detail << '\n';
    return 1;
  }
  std::cout << "verify: all checks passed (max_n=" << max_n << ", " << what << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squares and cubes in the Tribonacci word: closed-form counts,"
               " kernel machinery, and a brute-force certifier"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* gen = app.add_subcommand("gen", "Print the prefix T[1,n]");
  std::int64_t gen_n = 0;
  gen->add_option("n", gen_n, "prefix length")->required();
  gen->callback([&] { exit_code = run_gen(gen_n); });

  auto* count = app.add_subcommand("count", "Count distinct squares or cubes in T[1,n]");
  std::string count_kind, count_n;
  bool count_explain = false;
  count->add_option("kind", count_kind, "squares or cubes")
      ->required()
      ->check(CLI::IsMember({"squares", "cubes"}));
  count->add_option("n", count_n, "prefix length (any size)")->required();
  count->add_flag("--explain", count_explain, "also print the fired branch and band");
  count->callback([&] { exit_code = run_count(count_kind, count_n, count_explain); });

  auto* table = app.add_subcommand("table", "Tabulate m, t_m, k_m, A(t_m), B(t_m), breakpoints");
  std::int64_t table_from = 0, table_to = 0;
  std::string table_format = "csv";
  table->add_option("from", table_from, "first m")->required();
  table->add_option("to", table_to, "last m")->required();
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->callback([&] { exit_code = run_table(table_from, table_to, table_format); });

  auto* kernel = app.add_subcommand("kernel", "Print the kernel word K_m");
  std::int64_t kernel_m = 0;
  kernel->add_option("m", kernel_m, "kernel order (>= 1)")->required();
  kernel->callback([&] { exit_code = run_kernel(kernel_m); });

  auto* bp = app.add_subcommand("breakpoints", "Print alpha_m, beta_m, gamma_m, theta_m");
  std::int64_t bp_m = 0;
  std::string bp_format = "csv";
  bp->add_option("m", bp_m, "band order (>= 4)")->required();
  bp->add_option("--format", bp_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  bp->callback([&] { exit_code = run_breakpoints(bp_m, bp_format); });

  auto* verify = app.add_subcommand("verify", "Check the formulas against the brute-force oracle");
  std::int64_t verify_max = 0, verify_cap = trib::kDefaultOracleCap;
  std::string verify_what = "all";
  verify->add_option("max_n", verify_max, "verify every n <= max_n")->required();
  verify->add_option("what", verify_what, "squares, cubes, identities, or all")
      ->check(CLI::IsMember({"squares", "cubes", "identities", "all"}));
  verify->add_option("--cap", verify_cap, "oracle size cap");
  verify->callback([&] { exit_code = run_verify(verify_max, verify_what, verify_cap); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
