// One line per acceptance criterion; exit status 1 if any fails.
#include "hlpos/combinat/gt_array.hpp"
#include "hlpos/combinat/tableau.hpp"
#include "hlpos/plactic/insertion.hpp"
#include "hlpos/plactic/particles.hpp"
#include "hlpos/verifycli/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace vc = hlpos::verifycli;
using hlpos::combinat::GTArray;
using hlpos::combinat::Tableau;
using hlpos::combinat::Word;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t cases = 0;
  std::string note;
};

// Runs `check` for each n in [lo, hi] with the given grid and folds the
// certificates together.
void run(Outcome& o, const std::string& check, int lo, int hi, const std::function<void(vc::CheckParams&)>& set,
         bool expect_pass = true) {
  for (int n = lo; n <= hi; ++n) {
    vc::CheckParams p;
    if (n > 0) p.n = n;
    set(p);
    const auto c = vc::run_check(check, p);
    o.cases += c.cases;
    if (c.pass != expect_pass) {
      o.pass = false;
      if (o.note.empty()) o.note = check + " n=" + std::to_string(n) + " witness " + c.witness.dump();
    }
  }
}

Outcome insertion_oracle() {
  Outcome o;
  const int n = 3;
  std::vector<Word> words{{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> longer;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != len - 1) continue;
      for (int x = 1; x <= n; ++x) {
        longer.push_back(w);
        longer.back().push_back(x);
      }
    }
    words.insert(words.end(), longer.begin(), longer.end());
  }
  for (const auto& w : words) {
    GTArray rows = hlpos::combinat::tableau_to_gt(Tableau(), n);
    GTArray cols = rows;
    Tableau tr, tc;
    bool ok = true;
    for (std::size_t k = 0; k < w.size(); ++k) {
      rows = hlpos::plactic::pull_insert(rows, w[k]);
      tr = hlpos::plactic::row_insert(tr, w[k]);
      const int x = w[w.size() - 1 - k];
      cols = hlpos::plactic::push_insert(x, cols);
      tc = hlpos::plactic::column_insert(x, tc);
      ok = ok && rows == hlpos::combinat::tableau_to_gt(tr, n) && cols == hlpos::combinat::tableau_to_gt(tc, n);
    }
    ok = ok && tr == tc;
    ++o.cases;
    if (!ok && o.pass) {
      o.pass = false;
      o.note = "word " + hlpos::combinat::word_to_string(w);
    }
  }
  // a 21-letter reading word through tableau -> array -> tableau
  const Word example = hlpos::combinat::parse_word("554433322255551111344");
  const Tableau t = hlpos::plactic::insertion_tableau(example);
  const Tableau back = hlpos::combinat::gt_to_tableau(hlpos::combinat::tableau_to_gt(t, 5));
  ++o.cases;
  if (!(back == t && hlpos::combinat::reading_word(back) == example)) {
    o.pass = false;
    o.note = "round trip of 554433322255551111344 gave " + back.to_string();
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    double budget_s;  // 0: no time budget
    std::function<Outcome()> body;
  };
  auto grid = [](int size) { return [size](vc::CheckParams& p) { p.max_size = size; }; };
  const std::vector<Criterion> criteria{
      {"Theta(P_lambda) = Pi_lambda exactly, |lambda| <= 4, n <= 4", 300,
       [&] { Outcome o; run(o, "theta-vs-pi", 1, 4, grid(4)); return o; }},
      {"Theta(P_lambda) entries nonnegative at t = 0, 1/4, 1/2, 3/4", 0,
       [&] { Outcome o; run(o, "hl-positivity", 1, 4, grid(4)); return o; }},
      {"columns of Theta(P_lambda) sum to P_lambda", 0,
       [&] { Outcome o; run(o, "stochastic-corollary", 1, 4, grid(4)); return o; }},
      {"tableau sum = symmetrization, both = Schur at t = 0, |lambda| <= 5, n <= 5", 120,
       [&] {
         Outcome o;
         run(o, "hl-equality", 1, 5, grid(5));
         run(o, "schur-degeneration", 1, 5, grid(5));
         return o;
       }},
      {"Pieri multiplicities phi, psi' vs triangular solve, |lambda| <= 3, r <= 3, n = 4", 0,
       [&] {
         Outcome o;
         run(o, "pieri", 4, 4, [](vc::CheckParams& p) { p.max_size = 3; p.alpha_degree = 3; });
         return o;
       }},
      {"Yang-Baxter holds symbolically; a mutated weight is detected", 0,
       [&] {
         Outcome o;
         run(o, "yang-baxter", 0, 0, [](vc::CheckParams&) {});
         run(o, "yang-baxter", 0, 0, [](vc::CheckParams& p) { p.mutate = true; }, false);
         return o;
       }},
      {"[T_k, T_l] = 0 for k, l <= 4, n <= 4; [T~(alpha), T~(beta)] = 0 to order 3", 0,
       [&] { Outcome o; run(o, "commutation", 1, 4, [](vc::CheckParams& p) { p.alpha_degree = 4; }); return o; }},
      {"T_k at t = 0 equals plactic H_k (k <= 3); plactic Schur positivity, |lambda| <= 4", 0,
       [&] {
         Outcome o;
         run(o, "t0-plactic-reduction", 1, 4, [](vc::CheckParams& p) { p.alpha_degree = 3; });
         run(o, "plactic-positivity", 1, 4, grid(4));
         return o;
       }},
      {"T_r Pi_lambda = sum phi Pi_mu, |lambda| <= 3, r <= 2, n <= 3", 0,
       [&] {
         Outcome o;
         run(o, "pieri-operator", 1, 3, [](vc::CheckParams& p) { p.max_size = 3; p.alpha_degree = 2; });
         return o;
       }},
      {"row/column insertion = pull/push on all words of length <= 6 over {1,2,3}", 0, insertion_oracle},
  };

  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.note = "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    failed += !o.pass;
    std::printf("%s criterion %2d: %s (%zu cases, %.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", index, c.title, o.cases,
                secs, o.note.empty() ? "" : ": ", o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
