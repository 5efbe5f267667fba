// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Criteria 1-8 run against the kernel directly; criterion 9 drives the
// installed CLI binary over the golden script corpus.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "etcs/constructions.hpp"
#include "etcs/derived.hpp"
#include "etcs/enumerate.hpp"
#include "etcs/nno.hpp"
#include "etcs/verifier.hpp"

using namespace etcs;

namespace {

struct Failure {
  std::string detail;
};

#define EXPECT(cond, msg)                          \
  do {                                             \
    if (!(cond)) throw Failure{msg};               \
  } while (0)

// --- criterion 1 -----------------------------------------------------------

void axiom_suite(std::string& note) {
  auto started = std::chrono::steady_clock::now();
  auto reports = check_all(3);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  EXPECT(reports.size() == verifier_entry_ids().size(),
         "missing suite entries");
  for (const auto& r : reports) {
    if (r.id == "A9") {
      EXPECT(r.verdict == Verdict::prefix_verified,
             "A9 must be prefix-verified");
    } else {
      EXPECT(r.verdict == Verdict::pass, r.id + " did not pass");
    }
    EXPECT(r.witness.empty(), r.id + " carries a witness on a clean run");
  }
  EXPECT(elapsed < 60000, "suite exceeded 60 seconds");
  note = "15 entries in " + std::to_string(elapsed) + "ms";
}

// --- criterion 2 -----------------------------------------------------------

void uniqueness_by_counting(std::string& note) {
  std::uint64_t total = 0;
  for (const char* id : {"A5", "A6", "A7", "A8"}) {
    Report r = check_axiom(id, 3);
    EXPECT(r.verdict == Verdict::pass,
           std::string(id) + " mediator counting failed");
    EXPECT(r.stats.instances > 0, std::string(id) + " checked nothing");
    total += r.stats.instances;
  }
  note = std::to_string(total) +
         " universal-property instances, each with exactly one mediator";
}

// --- criterion 3 -----------------------------------------------------------

void cardinality_laws(std::string& note) {
  std::uint64_t checked = 0;
  auto universe3 = set_universe(3);
  for (const auto& X : universe3)
    for (const auto& Y : universe3) {
      EXPECT(product(X, Y).obj.size() == X.size() * Y.size(),
             "|X x Y| != |X| * |Y|");
      EXPECT(coproduct(X, Y).obj.size() == X.size() + Y.size(),
             "|X + Y| != |X| + |Y|");
      checked += 2;
    }
  for (std::size_t nx = 0; nx <= 4; ++nx)
    for (std::size_t ny = 0; ny <= 4; ++ny) {
      SetObj X = sized_set(nx), Y = sized_set(ny);
      std::uint64_t expected = 1;
      if (nx > 0 && ny == 0) {
        expected = 0;
      } else {
        for (std::size_t k = 0; k < nx; ++k) expected *= ny;
      }
      EXPECT(function_set(X, Y).obj.size() == expected,
             "|Y^X| != |Y|^|X|");
      ++checked;
    }
  for (const auto& X : universe3)
    for (const auto& Y : universe3)
      for (const auto& s : all_surjections(X, Y)) {
        std::uint64_t expected = 1;
        for (const auto& y : Y.elements()) {
          std::uint64_t fibre = 0;
          for (const auto& v : s.table())
            if (v == y) ++fibre;
          expected *= fibre;
        }
        std::uint64_t count = 0;
        for (const auto& i : all_functions(Y, X))
          if (fn_eq_or_false(compose(s, i), identity(Y))) ++count;
        EXPECT(count == expected,
               "right-inverse count != product of fibre sizes");
        ++checked;
      }
  for (std::size_t nx = 0; nx <= 4; ++nx)
    for (std::size_t ni = 0; ni <= 3; ++ni)
      for (const auto& p : all_functions(sized_set(nx), sized_set(ni))) {
        std::uint64_t expected = 1;
        for (const auto& [i, fibre] : family_from_map(p))
          expected *= fibre.size();
        EXPECT(indexed_product(p).size() == expected,
               "|indexed product| != product of fibre sizes");
        ++checked;
      }
  note = std::to_string(checked) + " cardinality identities";
}

// --- criterion 4 -----------------------------------------------------------

void oracle_equivalence(std::string& note) {
  std::uint64_t checked = 0;
  // Coproduct: axiomatic build uniquely isomorphic to the tagged oracle.
  auto universe2 = set_universe(2);
  for (const auto& X : universe2)
    for (const auto& Y : universe2) {
      CoproductResult cop = coproduct(X, Y);
      EXPECT(cop.verified, "axiomatic coproduct missing");
      const FnMor& iso = cop.axiomatic_maps[2];
      EXPECT(is_isomorphism(iso).has_value(), "coproduct iso is not an iso");
      EXPECT(fn_eq_or_false(compose(iso, cop.axiomatic_maps[0]), cop.inl),
             "iso does not commute with inl");
      EXPECT(fn_eq_or_false(compose(iso, cop.axiomatic_maps[1]), cop.inr),
             "iso does not commute with inr");
      std::size_t count = 0;
      for (const auto& h : all_functions(cop.axiomatic_obj, cop.obj))
        if (fn_eq_or_false(compose(h, cop.axiomatic_maps[0]), cop.inl) &&
            fn_eq_or_false(compose(h, cop.axiomatic_maps[1]), cop.inr))
          ++count;
      EXPECT(count == 1, "coproduct iso is not unique");
      ++checked;
    }
  // Quotient partitions match union-find, over every equivalence relation
  // on carriers of size <= 4.
  for (std::size_t n = 0; n <= 4; ++n) {
    SetObj X = sized_set(n);
    for (const auto& partition : all_partitions(X)) {
      std::vector<std::pair<Value, Value>> full, spanning;
      for (const auto& block : partition) {
        for (const auto& a : block)
          for (const auto& b : block) full.emplace_back(a, b);
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
          spanning.emplace_back(block[i], block[i + 1]);
      }
      QuotientResult q = quotient(EquivRelation::from_pairs(X, full));
      EXPECT(partition_of_quotient(q) == union_find_partition(X, spanning),
             "quotient partition differs from union-find oracle");
      ++checked;
    }
  }
  // Indexed products equal the brute-force fibre product.
  for (std::size_t nx = 0; nx <= 4; ++nx)
    for (std::size_t ni = 0; ni <= 3; ++ni)
      for (const auto& p : all_functions(sized_set(nx), sized_set(ni))) {
        EXPECT(indexed_product(p) == fibre_product_oracle(p),
               "indexed product differs from fibre-product oracle");
        ++checked;
      }
  note = std::to_string(checked) + " oracle agreements";
}

// --- criterion 5 -----------------------------------------------------------

void classifier_and_terminal(std::string& note) {
  EXPECT(elements(classifier().two).size() == 2,
         "classifier does not have exactly two elements");
  for (const auto& T : set_universe(3))
    EXPECT(is_terminal(T) == (T.size() == 1),
           "is_terminal(T) differs from |T| = 1 at " + T.str());
  note = "classifier has 2 elements; terminality = one element, size <= 3";
}

// --- criterion 6 -----------------------------------------------------------

void integers_construction(std::string& note) {
  // Class counts at both bounds; the pinned pair identifications live in
  // {0..10}^2 (the pair (2, 5) is outside the bound-3 carrier).
  for (std::uint64_t bound : {3ull, 10ull}) {
    IntegersResult z = build_integers(bound);
    EXPECT(z.obj.size() == 2 * bound + 1,
           "class count != 2B+1 at B=" + std::to_string(bound));
  }
  IntegersResult z = build_integers(10);
  auto cls = [&](std::uint64_t m, std::uint64_t n) {
    return z.proj(Value::pair(Value::nat(m), Value::nat(n)));
  };
  EXPECT(cls(2, 5) == cls(0, 3), "(2,5) and (0,3) should be identified");
  EXPECT(!(cls(2, 5) == cls(0, 4)), "(2,5) and (0,4) should be distinct");
  note = "B in {3, 10}: 7 and 21 classes; (2,5)~(0,3); (2,5)!~(0,4)";
}

// --- criterion 7 -----------------------------------------------------------

void arithmetic_by_recursion(std::string& note) {
  NatSystem sys;  // default bound 10^4
  std::uint64_t checked = 0;
  for (std::uint64_t m = 0; m < 50; ++m)
    for (std::uint64_t n = 0; n < 50; ++n) {
      if (m + n < 50) {
        EXPECT(nat_arith(sys, NatOp::add, m, n) == m + n, "add mismatch");
        ++checked;
      }
      if (m * n < 50) {
        EXPECT(nat_arith(sys, NatOp::mul, m, n) == m * n, "mul mismatch");
        ++checked;
      }
      std::uint64_t p = 1;
      bool fits = true;
      for (std::uint64_t k = 0; k < n && fits; ++k) {
        p *= m;
        if (p >= 50) fits = false;
      }
      if (fits) {
        EXPECT(nat_arith(sys, NatOp::pow, m, n) == p, "pow mismatch");
        ++checked;
      }
    }
  std::mt19937_64 rng(424242);
  for (int k = 0; k < 1000; ++k) {
    std::uint64_t m = 50 + rng() % 4900;
    std::uint64_t n = 50 + rng() % (sys.bound() - m - 50);
    EXPECT(m + n < sys.bound(), "bad sample");
    EXPECT(nat_arith(sys, NatOp::add, m, n) == m + n, "random add mismatch");
    ++checked;
  }
  for (int k = 0; k < 200; ++k) {
    std::uint64_t m = 2 + rng() % 98;
    std::uint64_t n = 2 + rng() % (sys.bound() / m > 2 ? sys.bound() / m - 2
                                                       : 1);
    if (m * n >= sys.bound()) continue;
    EXPECT(nat_arith(sys, NatOp::mul, m, n) == m * n, "random mul mismatch");
    ++checked;
  }
  note = std::to_string(checked) + " arithmetic agreements with the oracle";
}

// --- criterion 8 -----------------------------------------------------------

void mutation_sensitivity(std::string& note) {
  const std::pair<const char*, Mutation> cases[] = {
      {"product", Mutation::swap_projection},
      {"inverse_image", Mutation::drop_fibre_element},
      {"function_set", Mutation::break_curry},
      {"classifier", Mutation::wrong_truth_element},
      {"right_inverse", Mutation::non_least_choice},
  };
  for (const auto& [construction, mutation] : cases) {
    bool failing_with_witness = false;
    for (const auto& r : mutate_and_check(construction, mutation))
      if (r.verdict == Verdict::fail && !r.witness.empty())
        failing_with_witness = true;
    EXPECT(failing_with_witness,
           std::string(construction) + " mutation went unnoticed");
  }
  for (const auto& r : check_all(2))
    EXPECT(r.verdict != Verdict::fail, "clean run reported a failure");
  note = "5 mutations caught with witnesses; clean run spotless";
}

// --- criterion 9 -----------------------------------------------------------

int run_cli(const std::string& args, const std::string& out_path,
            const std::string& err_path) {
  std::string cmd = std::string(ETCS_CLI_PATH) + " " + args + " > " +
                    out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void cli_determinism(std::string& note) {
  namespace fs = std::filesystem;
  const std::map<std::string, int> expected_exit = {
      {"01_compose", 0},      {"02_product", 0},   {"03_funcset", 0},
      {"04_fibre", 0},        {"05_classify", 0},  {"06_choice", 0},
      {"07_quotient", 0},     {"08_coproduct", 0}, {"09_indexedprod", 0},
      {"10_integers", 0},     {"11_recurse", 0},   {"12_check", 0},
      {"13_parse_error", 2},  {"14_failed_assert", 1}, {"15_check_all", 0},
  };
  fs::path golden(ETCS_GOLDEN_DIR);
  fs::path work = fs::temp_directory_path() / "etcs_acceptance";
  fs::create_directories(work);
  std::uint64_t compared = 0;
  for (const auto& [stem, exit_code] : expected_exit) {
    fs::path script = golden / (stem + ".etcs");
    EXPECT(fs::exists(script), "missing golden script " + stem);
    for (const char* format : {"text", "json"}) {
      std::string suffix = std::string(format) == "text" ? ".out.txt"
                                                         : ".out.json";
      fs::path out = work / (stem + suffix);
      fs::path err = work / (stem + suffix + ".err");
      int code = run_cli("--format " + std::string(format) + " " +
                             script.string(),
                         out.string(), err.string());
      EXPECT(code == exit_code,
             stem + " (" + format + "): exit " + std::to_string(code) +
                 ", expected " + std::to_string(exit_code));
      fs::path golden_out = golden / (stem + suffix);
      EXPECT(fs::exists(golden_out), "missing golden output " + stem + suffix);
      EXPECT(slurp(out) == slurp(golden_out),
             stem + suffix + " differs from its golden file");
      // Determinism: a second run is byte-identical.
      fs::path out2 = work / (stem + suffix + ".again");
      run_cli("--format " + std::string(format) + " " + script.string(),
              out2.string(), err.string());
      EXPECT(slurp(out) == slurp(out2), stem + suffix + " is not stable");
      ++compared;
    }
    // Diagnostics are stable too (compared for the error-case script).
    if (exit_code == 2) {
      fs::path err_golden = golden / (stem + ".err.txt");
      fs::path err_out = work / (stem + ".err.run");
      run_cli("--format text " + script.string(),
              (work / "ignore.out").string(), err_out.string());
      EXPECT(fs::exists(err_golden), "missing golden diagnostics " + stem);
      EXPECT(slurp(err_out) == slurp(err_golden),
             stem + " diagnostics differ from golden");
    }
  }
  // Reading from standard input behaves like reading the file.
  {
    fs::path out = work / "stdin.out";
    fs::path err = work / "stdin.err";
    std::string cmd = std::string("cat ") +
                      (golden / "01_compose.etcs").string() + " | " +
                      ETCS_CLI_PATH + " --format text - > " + out.string() +
                      " 2> " + err.string();
    int status = std::system(cmd.c_str());
    EXPECT(status >= 0 && WEXITSTATUS(status) == 0, "stdin run failed");
    EXPECT(slurp(out) == slurp(golden / "01_compose.out.txt"),
           "stdin output differs from the file-based golden");
  }
  // The axiom-suite flag is deterministic as well.
  {
    fs::path a = work / "axioms_a.out", b = work / "axioms_b.out";
    fs::path err = work / "axioms.err";
    int ca = run_cli("--check-axioms --size 1 --format json", a.string(),
                     err.string());
    int cb = run_cli("--check-axioms --size 1 --format json", b.string(),
                     err.string());
    EXPECT(ca == 0 && cb == 0, "--check-axioms exited nonzero");
    EXPECT(slurp(a) == slurp(b), "--check-axioms output is not stable");
  }
  note = std::to_string(compared) + " golden comparisons, both formats";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(std::string&)> run;
  };
  const Criterion criteria[] = {
      {"axiom-suite: check all size 3 passes (A9 prefix-verified) under 60s",
       axiom_suite},
      {"uniqueness-by-counting: exactly one mediator per instance",
       uniqueness_by_counting},
      {"cardinality-laws: products, exponentials, unions, sections, "
       "indexed products",
       cardinality_laws},
      {"oracle-equivalence: coproduct iso, union-find quotient, fibre "
       "product",
       oracle_equivalence},
      {"classifier-and-terminal: |2| = 2 and terminality = one element",
       classifier_and_terminal},
      {"integers: 2B+1 classes with the stated identifications",
       integers_construction},
      {"arithmetic-by-recursion: agrees with native arithmetic",
       arithmetic_by_recursion},
      {"mutation-sensitivity: all five mutations caught, clean runs clean",
       mutation_sensitivity},
      {"cli-determinism: golden corpus byte-identical, exit codes honored",
       cli_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    try {
      c.run(note);
      std::cout << "[PASS] " << c.name;
      if (!note.empty()) std::cout << " (" << note << ")";
      std::cout << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "[FAIL] " << c.name << ": " << f.detail << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << c.name << ": unexpected error: " << e.what()
                << "\n";
    }
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: failures present")
            << "\n";
  return failures == 0 ? 0 : 1;
}
