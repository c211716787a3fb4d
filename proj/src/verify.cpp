#include "stern/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "stern/analysis.hpp"
#include "stern/error.hpp"
#include "stern/recurrence.hpp"
#include "stern/speyer.hpp"
#include "stern/sternarrays.hpp"
#include "stern/transfer.hpp"

namespace stern {

std::string status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::FlaggedErratum: return "flagged-erratum";
  }
  return "fail";
}

bool VerificationReport::ok() const {
  for (const Check& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

CheckStatus VerificationReport::criterion_status(int criterion) const {
  CheckStatus worst = CheckStatus::Pass;
  bool seen = false;
  for (const Check& c : checks) {
    if (c.criterion != criterion) continue;
    seen = true;
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::FlaggedErratum) worst = CheckStatus::FlaggedErratum;
  }
  return seen ? worst : CheckStatus::Fail;
}

Json VerificationReport::to_json(bool with_timings) const {
  Json doc;
  doc["schema"] = 1;
  doc["profile"] = profile == Profile::Quick ? "quick" : "full";
  doc["ok"] = ok();
  Json criteria = Json::array();
  for (int k = 1; k <= kCriterionCount; ++k)
    criteria.push_back({{"criterion", k}, {"status", status_name(criterion_status(k))}});
  doc["criteria"] = criteria;
  Json list = Json::array();
  for (const Check& c : checks) {
    Json j;
    j["id"] = c.id;
    j["criterion"] = c.criterion;
    j["anchor"] = c.anchor;
    j["status"] = status_name(c.status);
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    if (!c.note.empty()) j["note"] = c.note;
    list.push_back(j);
  }
  doc["checks"] = list;
  if (with_timings) {
    Json t = Json::object();
    for (const Check& c : checks) t[c.id] = c.runtime_ms;
    doc["runtime_ms"] = t;
  }
  return doc;
}

namespace {

using Body = std::function<void(Check&)>;

// Runs one check; an exception is recorded as a failure, never dropped.
void run(std::vector<Check>& out, int criterion, std::string id, std::string anchor, const Body& body) {
  Check c;
  c.id = std::move(id);
  c.criterion = criterion;
  c.anchor = std::move(anchor);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = CheckStatus::Fail;
    c.computed = std::string("error: ") + e.what();
  }
  c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out.push_back(std::move(c));
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

template <class T>
std::string join(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << to_string(values[i]);
  return os.str();
}

std::string join(const std::vector<long>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string matrix_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Poly upoly(const std::string& text) { return parse_poly(text).to_univariate(); }

std::vector<Rational> rationals(const std::vector<long>& values) {
  return std::vector<Rational>(values.begin(), values.end());
}

std::vector<Integer> integers(const std::vector<long>& values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

// 1-D patterns with positive ends, weight in [1, max_weight], length <= max_length.
std::vector<WindowPattern> patterns_up_to(int max_weight, int max_length) {
  std::vector<WindowPattern> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (!cur.empty() && cur.back() > 0) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int e = cur.empty() ? 1 : 0; e <= left; ++e) {
      cur.push_back(e);
      rec(left - e);
      cur.pop_back();
    }
  };
  rec(max_weight);
  return out;
}

// ---- criterion 1: the arrays -------------------------------------------

void rows_checks(std::vector<Check>& out, Profile profile) {
  const int c = 1;
  run(out, c, "rows.triangle-printed", "first four rows of Stern's triangle as displayed", [](Check& k) {
    const std::vector<std::vector<long>> printed = {
        {1}, {1, 1, 1}, {1, 1, 2, 1, 2, 1, 1}, {1, 1, 2, 1, 3, 2, 3, 1, 3, 2, 3, 1, 2, 1, 1}};
    bool ok = true;
    for (int n = 0; n < 4; ++n) {
      const auto row = stern_row(n, RowKind::Triangle).entries;
      ok = ok && row == integers(printed[static_cast<std::size_t>(n)]);
      k.expected += (n ? " | " : "") + join(printed[static_cast<std::size_t>(n)]);
      k.computed += (n ? " | " : "") + join(row);
    }
    k.status = pass_if(ok);
  });
  run(out, c, "rows.diatomic-printed", "first five rows of Stern's diatomic array as displayed", [](Check& k) {
    const std::vector<std::vector<long>> printed = {{1, 1},
                                                    {1, 2, 1},
                                                    {1, 3, 2, 3, 1},
                                                    {1, 4, 3, 5, 2, 5, 3, 4, 1},
                                                    {1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7, 4, 5, 1}};
    bool ok = true;
    for (int n = 0; n < 5; ++n) {
      const auto row = stern_row(n, RowKind::Diatomic).entries;
      ok = ok && row == integers(printed[static_cast<std::size_t>(n)]);
      k.expected += (n ? " | " : "") + join(printed[static_cast<std::size_t>(n)]);
      k.computed += (n ? " | " : "") + join(row);
    }
    k.status = pass_if(ok);
  });
  const int n_product = profile == Profile::Full ? 12 : 10;
  run(out, c, "rows.recursive-vs-product", "product formula for the row generating function", [&](Check& k) {
    int bad = -1;
    for (int n = 0; n <= n_product && bad < 0; ++n)
      if (stern_row(n, RowKind::Triangle).entries != stern_row(n, RowKind::Triangle, RowMethod::Product).entries) bad = n;
    k.expected = "rows 0.." + std::to_string(n_product) + " identical";
    k.computed = bad < 0 ? k.expected : "first difference at row " + std::to_string(bad);
    k.status = pass_if(bad < 0);
  });
  const int n_part = profile == Profile::Full ? 8 : 6;
  run(out, c, "rows.partition-oracle", "entries count binary partitions with parts used at most twice", [&](Check& k) {
    std::string bad;
    for (int n = 0; n <= n_part && bad.empty(); ++n) {
      const auto row = stern_row(n, RowKind::Triangle).entries;
      for (long j = 0; j < static_cast<long>(row.size()); ++j)
        if (row[static_cast<std::size_t>(j)] != partition_count(n, j)) {
          bad = "row " + std::to_string(n) + " entry " + std::to_string(j);
          break;
        }
    }
    k.expected = "all entries of rows 0.." + std::to_string(n_part);
    k.computed = bad.empty() ? k.expected : "mismatch at " + bad;
    k.status = pass_if(bad.empty());
  });
}

// ---- criterion 2 --------------------------------------------------------

void concat_checks(std::vector<Check>& out) {
  run(out, 2, "rows.concatenation", "merged concatenation of diatomic rows gives triangle row n", [](Check& k) {
    std::vector<int> bad;
    for (int n = 1; n <= 8; ++n)
      if (!concat_check(n)) bad.push_back(n);
    k.expected = "n = 1..8";
    k.computed = bad.empty() ? k.expected : "fails for n = " + join(std::vector<long>(bad.begin(), bad.end()));
    k.status = pass_if(bad.empty());
  });
}

// ---- criterion 3 and 4: low power sums -------------------------------

void usum_checks(std::vector<Check>& out, int criterion) {
  const ProductSpec stern = ProductSpec::stern();
  const std::vector<Rational> printed = rationals({1, 3, 13, 59, 269, 1227, 5597, 25531});
  if (criterion == 3) {
  run(out, 3, "usum.u2-brute", "printed values of the sum of squares, rows 0-7", [&](Check& k) {
    const auto u = u_brute(stern, WindowPattern({2}), 7);
    k.expected = join(printed);
    k.computed = join(u);
    k.status = pass_if(u == printed);
  });
  run(out, 3, "usum.u2-transfer", "printed values of the sum of squares, rows 0-7", [&](Check& k) {
    const auto u = iterate(build_system(stern, WindowPattern({2}), true), 7);
    k.expected = join(printed);
    k.computed = join(u);
    k.status = pass_if(u == printed);
  });
  run(out, 3, "usum.u2-recurrence", "u2(n+2) = 5 u2(n+1) - 2 u2(n)", [&](Check& k) {
    const auto brute = u_brute(stern, WindowPattern({2}), 16);
    const auto fast = iterate(build_system(stern, WindowPattern({2}), true), 80);
    const Poly r = upoly("x^2-5x+2");
    const bool ok = annihilates(r, brute, 0) && annihilates(r, fast, 0);
    k.expected = "holds for n = 0..78 (transfer) and 0..14 (brute force)";
    k.computed = ok ? k.expected : "violated";
    k.status = pass_if(ok);
  });
  run(out, 3, "usum.u2-prose-recurrence", "recurrence restated in prose with the coefficient 2 missing", [&](Check& k) {
    const auto u = u_brute(stern, WindowPattern({2}), 7);
    const bool prose = annihilates(upoly("x^2-5x+1"), u, 0);
    const bool eq = annihilates(upoly("x^2-5x+2"), u, 0);
    k.expected = "u2(n+2) - 5u2(n+1) + u2(n) = 0";
    k.computed = prose ? k.expected : "violated (13 - 15 + 1 = -1); u2(n+2) - 5u2(n+1) + 2u2(n) = 0 holds";
    k.status = prose ? CheckStatus::Pass : (eq ? CheckStatus::FlaggedErratum : CheckStatus::Fail);
    if (!prose) k.note = "the displayed recurrence is authoritative; the prose restatement drops the factor 2";
  });

  return;
  }
  auto closed_form = [&](const std::string& id, const WindowPattern& alpha, long lead) {
    run(out, 4, id, "closed form " + std::to_string(lead) + "*7^(n-1) for n >= 1", [&, alpha, lead](Check& k) {
      const auto fast = iterate(build_system(stern, alpha, true), 12);
      const auto brute = u_brute(stern, alpha, 12);
      std::vector<Rational> want;
      Integer p = lead;
      for (int n = 1; n <= 12; ++n, p *= 7) want.emplace_back(p);
      const std::vector<Rational> got_fast(fast.begin() + 1, fast.end());
      const std::vector<Rational> got_brute(brute.begin() + 1, brute.end());
      k.expected = join(want);
      k.computed = join(got_fast);
      k.status = pass_if(got_fast == want && got_brute == want);
      if (got_brute != got_fast) k.note = "brute force gives " + join(got_brute);
    });
  };
  closed_form("usum.u3-closed-form", WindowPattern({3}), 3);
  closed_form("usum.u21-closed-form", WindowPattern({2, 1}), 2);
}

// ---- criterion 5: transfer matrices -------------------------------------

void transfer_checks(std::vector<Check>& out) {
  const ProductSpec stern = ProductSpec::stern();
  auto matrix_check = [&](const std::string& id, const WindowPattern& alpha, const Matrix& printed) {
    run(out, 5, id, "printed transfer matrix for " + alpha.to_string(), [&, alpha, printed](Check& k) {
      const TransferSystem sys = build_system(stern, alpha, true);
      k.expected = matrix_string(printed);
      k.computed = matrix_string(sys.matrix);
      std::string order;
      for (const auto& p : sys.closure) order += (order.empty() ? "" : " < ") + p.display(true).to_string();
      k.note = "closure order " + order;
      k.status = pass_if(sys.matrix.size() == printed.size() && sys.matrix == printed);
    });
  };
  matrix_check("transfer.A2", WindowPattern({2}), Matrix::from_rows({{3, 2}, {2, 2}}));
  matrix_check("transfer.A3", WindowPattern({3}), Matrix::from_rows({{3, 6}, {2, 4}}));
  matrix_check("transfer.A1111", WindowPattern({1, 1, 1, 1}),
               Matrix::from_rows({{3, 8, 6, 0, 0, 0},
                                  {2, 5, 3, 0, 0, 0},
                                  {2, 4, 2, 0, 0, 0},
                                  {1, 4, 2, 1, 0, 0},
                                  {1, 3, 1, 2, 1, 0},
                                  {0, 2, 2, 2, 2, 0}}));
  {
    // Evidence for the A1111 comparison: which matrix reproduces the actual sums.
    Check& k = out.back();
    try {
      const TransferSystem sys = build_system(stern, WindowPattern({1, 1, 1, 1}), true);
      const auto brute = u_brute(stern, WindowPattern({1, 1, 1, 1}), 10);
      const bool engine_ok = iterate(sys, 10) == brute;
      TransferSystem printed = sys;
      printed.matrix = Matrix::from_rows(
          {{3, 8, 6, 0, 0, 0}, {2, 5, 3, 0, 0, 0}, {2, 4, 2, 0, 0, 0}, {1, 4, 2, 1, 0, 0}, {1, 3, 1, 2, 1, 0}, {0, 2, 2, 2, 2, 0}});
      const bool printed_ok = iterate(printed, 10) == brute;
      k.note += "; engine matrix reproduces brute-force u_1111(0..10): " + std::string(engine_ok ? "yes" : "no") +
                "; printed matrix does: " + (printed_ok ? "yes" : "no");
      if (k.status == CheckStatus::Fail)
        k.note += "; the printed row for 211 sums to 8 but the expansion of u_211(n+1) has 10 terms "
                  "(8 from even positions, 2 from odd); the printed row equals the even-position part alone";
    } catch (const std::exception& e) {
      k.note += std::string("; evidence unavailable: ") + e.what();
    }
  }
  auto mmp_check = [&](const std::string& id, int r, const std::string& printed) {
    run(out, 5, id, "minimum polynomial " + printed, [&, r, printed](Check& k) {
      const Poly m = minpoly(stern_power_system(r).matrix);
      k.expected = upoly(printed).to_string();
      k.computed = m.to_string();
      k.status = pass_if(m == upoly(printed));
    });
  };
  mmp_check("transfer.mmp2", 2, "x^2-5x+2");
  mmp_check("transfer.mmp3", 3, "x(x-7)");
}

// ---- criterion 6: the r = 1..10 table -----------------------------------

void rmp_table_checks(std::vector<Check>& out) {
  const std::vector<std::string> table = {"x-3",
                                          "x^2-5x+2",
                                          "x-7",
                                          "(x+1)(x^2-11x+2)",
                                          "x^2-14x-47",
                                          "x^4-20x^3-161x^2-40x+4",
                                          "x^3-29x^2-485x-327",
                                          "(x+1)(x^4-44x^3-1313x^2-88x+4)",
                                          "x^3-65x^2-3653x-3843",
                                          "(x+1)(x^4-100x^3-9601x^2-200x+4)"};
  const ProductSpec stern = ProductSpec::stern();
  for (int r = 1; r <= 10; ++r) {
    const std::string& printed = table[static_cast<std::size_t>(r - 1)];
    run(out, 6, "rmp.r" + std::string(r < 10 ? "0" : "") + std::to_string(r), "table of recurrences, " + printed,
        [&, r, printed](Check& k) {
          const RecurrenceReport rep = recurrence_report(stern, WindowPattern({r}));
          k.expected = upoly(printed).to_string();
          k.computed = rep.rmp.to_string();
          k.note = "n0=" + std::to_string(rep.n0) + ", mmp=" + rep.mmp.to_string();
          k.status = pass_if(rep.rmp == upoly(printed) && rep.divisibility_ok);
        });
  }
  run(out, 6, "rmp.r04-brute", "u4 = 1,3,37,395 and 395 = 10*37 + 9*3 - 2*1", [&](Check& k) {
    const auto u = u_brute(stern, WindowPattern({4}), 12);
    const bool ok = u[0] == 1 && u[1] == 3 && u[2] == 37 && u[3] == 395 && annihilates(upoly("x^3-10x^2-9x+2"), u, 0);
    k.expected = "1,3,37,395,...; x^3-10x^2-9x+2 annihilates u4(0..12)";
    k.computed = join(u);
    k.status = pass_if(ok);
  });
  // The (1,1,1,1) example prints the A4 quadratic with its coefficients reversed.
  const Poly table_quad = upoly("x^2-11x+2");
  auto erratum = [&](const std::string& id, const std::string& anchor, const std::string& printed,
                     const std::function<Poly()>& compute, const Poly& corrected) {
    run(out, 6, id, anchor, [&, printed, compute, corrected](Check& k) {
      const Poly got = compute();
      const Poly want = upoly(printed);
      k.expected = printed;
      k.computed = got.to_string();
      if (got == want) {
        k.status = CheckStatus::Pass;
      } else if (got == corrected) {
        k.status = CheckStatus::FlaggedErratum;
        k.note = "computed value agrees with the printed form after replacing 2x^2-11x+1 by x^2-11x+2 (table row r=4)";
      } else {
        k.status = CheckStatus::Fail;
      }
    });
  };
  erratum("rmp.example-A4-block", "minimum polynomial of the A4 block in the (1,1,1,1) example", "(x+1)(2x^2-11x+1)",
          [] { return minpoly(stern_power_system(4).matrix); }, upoly("x+1") * table_quad);
  erratum("rmp.example-mmp1111", "minimum polynomial of A_(1,1,1,1)", "x(x+1)(2x^2-11x+1)(x-1)^2",
          [&] { return minpoly(build_system(stern, WindowPattern({1, 1, 1, 1}), true).matrix); },
          upoly("x(x+1)(x-1)^2") * table_quad);
  erratum("rmp.example-rmp1111", "least recurrence of u_(1,1,1,1)", "(x-1)^2(x+1)(2x^2-11x+1)",
          [&] { return recurrence_report(stern, WindowPattern({1, 1, 1, 1})).rmp; },
          upoly("(x-1)^2(x+1)") * table_quad);
}

// ---- criterion 7 --------------------------------------------------------

void decomposition_checks(std::vector<Check>& out) {
  run(out, 7, "decomposition.1111", "mmp(1,1,1,1) = x (x-1)^2 mmp(4)", [](Check& k) {
    const MmpDecomposition t = decompose_mmp(WindowPattern({1, 1, 1, 1}));
    k.expected = "w=1, z=2, ok";
    k.computed = "w=" + std::to_string(t.w) + ", z=" + std::to_string(t.z) + (t.ok ? ", ok" : ", not ok");
    k.status = pass_if(t.ok && t.w == 1 && t.z == 2);
  });
  run(out, 7, "decomposition.all", "mmp(alpha) = x^w (x-1)^z mmp(|alpha|)", [](Check& k) {
    const auto all = patterns_up_to(5, 4);
    std::string bad;
    for (const auto& a : all) {
      const MmpDecomposition t = decompose_mmp(a);
      if (!t.ok) bad += (bad.empty() ? "" : " ") + a.to_string();
    }
    k.expected = "ok for all " + std::to_string(all.size()) + " patterns with |alpha| <= 5, length <= 4";
    k.computed = bad.empty() ? k.expected : "fails for " + bad;
    k.status = pass_if(bad.empty());
  });
}

// ---- criterion 8 --------------------------------------------------------

void oracle_checks(std::vector<Check>& out, Profile profile) {
  const int n_stern = profile == Profile::Full ? 16 : 12;
  run(out, 8, "oracle.stern", "transfer iteration equals direct summation", [&](Check& k) {
    const ProductSpec stern = ProductSpec::stern();
    const auto all = patterns_up_to(4, 4);
    std::string bad;
    for (const auto& a : all) {
      const auto fast = iterate(build_system(stern, a, true), n_stern);
      if (fast != u_brute(stern, a, n_stern)) bad += (bad.empty() ? "" : " ") + a.to_string();
    }
    k.expected = std::to_string(all.size()) + " patterns agree for n <= " + std::to_string(n_stern);
    k.computed = bad.empty() ? k.expected : "disagree for " + bad;
    k.status = pass_if(bad.empty());
  });
  const int n_random = profile == Profile::Full ? 10 : 8;
  run(out, 8, "oracle.random-specs", "transfer iteration equals direct summation for general (p, q, b)", [&](Check& k) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> deg(1, 4), qdeg(0, 4), coef(-2, 3), base(2, 3), pick(0, 4);
    const std::vector<WindowPattern> alphas = {WindowPattern({1}), WindowPattern({2}), WindowPattern({1, 1}),
                                               WindowPattern({2, 1}), WindowPattern({1, 0, 1})};
    std::string bad, specs;
    for (int t = 0; t < 10; ++t) {
      auto random_poly = [&](int d) {
        std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
        for (auto& v : c) v = coef(rng);
        if (c.front() == 0) c.front() = 1;
        if (c.back() == 0) c.back() = 1;
        return Poly(c);
      };
      const Poly p = random_poly(deg(rng));
      const Poly q = random_poly(qdeg(rng));
      const int b = base(rng);
      const WindowPattern& a = alphas[static_cast<std::size_t>(pick(rng))];
      const ProductSpec spec = ProductSpec::univariate(p, q, b);
      const auto fast = iterate(build_system(spec, a, false), n_random);
      const auto brute = u_brute(spec, a, n_random);
      const std::string name = "p=" + p.to_string() + " q=" + q.to_string() + " b=" + std::to_string(b) + " alpha=" + a.to_string();
      specs += (specs.empty() ? "" : "; ") + name;
      if (fast != brute) bad += (bad.empty() ? "" : "; ") + name;
    }
    k.expected = "10 specs agree for n <= " + std::to_string(n_random);
    k.computed = bad.empty() ? k.expected : "disagree for " + bad;
    k.note = specs;
    k.status = pass_if(bad.empty());
  });
}

// ---- criterion 9 --------------------------------------------------------

void conjecture_checks(std::vector<Check>& out, Profile profile, unsigned threads) {
  const int r_max = profile == Profile::Full ? 40 : 16;
  ConjectureReport report;
  std::string error;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    report = conjecture_check(r_max, threads);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double per_row = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / r_max;
  if (!error.empty()) {
    run(out, 9, "conjectures.census", "eigenvalue counts and recurrence orders", [&](Check& k) {
      k.expected = "census for r <= " + std::to_string(r_max);
      k.computed = "error: " + error;
      k.status = CheckStatus::Fail;
    });
    return;
  }
  for (const ConjectureRow& row : report.rows) {
    run(out, 9, "conjectures.r" + std::string(row.r < 10 ? "0" : "") + std::to_string(row.r),
        "eigenvalue counts, semisimplicity and minimum order", [&](Check& k) {
          std::ostringstream want, got;
          if (row.r % 2) {
            want << "e0=" << to_string(row.e0_expected) << " e1=0";
            got << "e0=" << row.e0 << " e1=" << row.e1;
          } else {
            want << "e1=" << to_string(row.e1_expected) << " e-1=" << to_string(row.eneg1_expected);
            got << "e1=" << row.e1 << " e-1=" << row.eneg1;
          }
          want << " mo=" << row.mo_expected << " semisimple, no other repeated eigenvalues";
          got << " mo=" << row.deg_rmp << (row.semisimple_ok ? " semisimple" : " NOT semisimple")
              << (row.no_other_multiples ? ", no other repeated eigenvalues" : ", other repeated eigenvalues");
          if (row.r % 2 == 0) {
            want << ", (x-1) does not divide rmp";
            got << (row.superfluous_one_ok ? ", (x-1) does not divide rmp" : ", (x-1) divides rmp");
          }
          k.expected = want.str();
          k.computed = got.str();
          k.status = pass_if(row.pass());
        });
    out.back().runtime_ms = per_row;
  }
}

// ---- criterion 10 -------------------------------------------------------

void speyer_checks(std::vector<Check>& out, Profile profile) {
  const int r_max = profile == Profile::Full ? 40 : 16;
  run(out, 10, "speyer.symmetrizable", "B_r is conjugate to a symmetric matrix by a diagonal matrix", [&](Check& k) {
    std::string bad;
    for (int r = 1; r <= r_max; ++r) {
      const Matrix b = speyer_matrix(r);
      try {
        const auto s = diagonal_symmetrize(b);
        for (int i = 0; i <= r; ++i)
          if (s[static_cast<std::size_t>(i)] * Rational(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(i))) != 1)
            bad += " r=" + std::to_string(r) + "(symmetrizer)";
      } catch (const Error& e) {
        bad += " r=" + std::to_string(r);
      }
    }
    k.expected = "r = 1.." + std::to_string(r_max) + ", with d_i^2 = 1/C(r,i)";
    k.computed = bad.empty() ? k.expected : "fails for" + bad;
    k.status = pass_if(bad.empty());
  });
  run(out, 10, "speyer.squarefree", "minimum polynomial of B_r has no repeated roots", [&](Check& k) {
    std::string bad;
    for (int r = 1; r <= r_max; ++r) {
      const Poly m = minpoly(speyer_matrix(r));
      if (gcd(m, m.derivative()).degree() != 0) bad += " r=" + std::to_string(r);
    }
    k.expected = "gcd(M, M') = 1 for r = 1.." + std::to_string(r_max);
    k.computed = bad.empty() ? k.expected : "fails for" + bad;
    k.status = pass_if(bad.empty());
  });
}

// ---- criterion 11 -------------------------------------------------------

void vrur_checks(std::vector<Check>& out) {
  for (int r = 1; r <= 3; ++r) {
    run(out, 11, "vrur.series-r" + std::to_string(r), "2V/(1-x) = (U-1)/x + (1+x)/(1-x)^2", [r](Check& k) {
      const VrurResult v = vrur_check(r, 40);
      k.expected = "identity through x^40";
      k.computed = v.series_ok ? k.expected : "identity fails";
      k.note = "u and v match direct summation for n <= " + std::to_string(v.brute_terms - 1) + ": " +
               (v.prefix_matches_brute ? "yes" : "no");
      k.status = pass_if(v.series_ok && v.prefix_matches_brute);
    });
  }
  for (int r = 1; r <= 6; ++r) {
    run(out, 11, "vrur.recurrence-r" + std::to_string(r), "least recurrence of v_r is (x-1) rmp_r", [r](Check& k) {
      const VrurResult v = vrur_check(r, 20);
      k.expected = v.expected.to_string();
      k.computed = v.v_recurrence.to_string();
      k.status = pass_if(v.recurrence_ok && v.prefix_matches_brute);
    });
  }
}

// ---- criterion 12 -------------------------------------------------------

void univariate_checks(std::vector<Check>& out) {
  struct Row {
    int d, r;
    std::string printed;
  };
  const std::vector<Row> rows = {{2, 2, "(x-2)(x-8)"},
                                 {2, 3, "(x-4)(x-16)"},
                                 {2, 4, "(x-2)(x-8)(x-32)"},
                                 {3, 2, "(x-2)(x-8)(x-32)"},
                                 {3, 3, "(x-2)(x-8)(x-32)(x-128)"},
                                 {3, 4, "(x-2)(x-8)(x-32)(x-128)(x-512)"}};
  for (const Row& row : rows) {
    const std::string id = "univariate.d" + std::to_string(row.d) + "-r" + std::to_string(row.r);
    run(out, 12, id, "rmp((1+x)^" + std::to_string(row.d) + ",1,(" + std::to_string(row.r) + "),2) = " + row.printed,
        [row](Check& k) {
          const ProductSpec spec = ProductSpec::univariate(upoly("(1+x)^" + std::to_string(row.d)), Poly{1}, 2);
          const RecurrenceReport rep = recurrence_report(spec, WindowPattern({row.r}));
          k.expected = upoly(row.printed).to_string();
          k.computed = rep.rmp.to_string();
          k.status = pass_if(rep.rmp == upoly(row.printed));
        });
  }
  run(out, 12, "fit.parity", "c_i = 0 for even i when r is even or d is odd, otherwise for odd i", [](Check& k) {
    std::string bad;
    int count = 0;
    for (int d = 1; d <= 3; ++d)
      for (int b = 2; b <= 3; ++b)
        for (int r = 1; r <= 4; ++r) {
          const ExpFit f = exp_fit(d, b, WindowPattern({r}));
          ++count;
          if (!f.matches_prediction) bad += " (d=" + std::to_string(d) + ",b=" + std::to_string(b) + ",r=" + std::to_string(r) + ")";
        }
    k.expected = std::to_string(count) + " fits (d <= 3, b in {2,3}, r <= 4) with the predicted vanishing";
    k.computed = bad.empty() ? k.expected : "fails for" + bad;
    k.status = pass_if(bad.empty());
  });
  run(out, 12, "fit.odd-powers-of-two", "u for (1+x)^3, b=2 is a combination of 2^{(2i+1)n}", [](Check& k) {
    std::string bad, detail;
    for (int r = 1; r <= 4; ++r) {
      const ExpFit f = exp_fit(3, 2, WindowPattern({r}));
      if (!f.even_indices_vanish) bad += " r=" + std::to_string(r);
      detail += (detail.empty() ? "" : "; ") + std::string("r=") + std::to_string(r) + ": c=" + join(f.coeffs);
    }
    k.expected = "only odd exponents for r = 1..4";
    k.computed = bad.empty() ? k.expected : "even exponents present for" + bad;
    k.note = detail;
    k.status = pass_if(bad.empty());
  });
}

// ---- criterion 13 -------------------------------------------------------

void multivariate_checks(std::vector<Check>& out) {
  struct Row {
    std::vector<int> bases;
    int r;
    std::string printed;
    std::string corrected;  // empty unless the printed form is suspect
  };
  const std::vector<Row> rows = {{{2, 2}, 2, "x^2-27x+132", ""},
                                 {{2, 2}, 3, "x^3-67x+1020x^2-4704", "x^3-67x^2+1020x-4704"},
                                 {{2, 3}, 2, "x^2-23x+104", ""},
                                 {{2, 3}, 3, "x^2-45x+402", ""},
                                 {{2, 3}, 4, "x^3-107x^2+3176x-28320", ""}};
  for (const Row& row : rows) {
    const std::string b = std::to_string(row.bases[0]) + "," + std::to_string(row.bases[1]);
    run(out, 13, "multivariate.b" + std::to_string(row.bases[0]) + std::to_string(row.bases[1]) + "-r" + std::to_string(row.r),
        "rmp((1+x1+x2)^2,1,(" + std::to_string(row.r) + "),(" + b + ")) = " + row.printed, [row](Check& k) {
          const ProductSpec spec(parse_poly("(1+x1+x2)^2"), parse_poly("1", 2), row.bases);
          const MultivariateRmp m = multivariate_rmp(spec, WindowPattern::single(2, row.r));
          k.expected = row.printed;
          k.computed = m.rmp.to_string();
          k.note = "closure size " + std::to_string(m.closure_size) + "; transfer values match direct summation for n < " +
                   std::to_string(m.brute_terms) + ": " + (m.brute_values_agree ? "yes" : "no");
          if (!m.brute_values_agree) {
            k.status = CheckStatus::Fail;
          } else if (m.rmp == upoly(row.printed)) {
            k.status = CheckStatus::Pass;
          } else if (!row.corrected.empty() && m.rmp == upoly(row.corrected)) {
            k.status = CheckStatus::FlaggedErratum;
            k.note += "; printed form read literally is " + upoly(row.printed).to_string() +
                      "; the computed polynomial is the printed one with the exponents of the two middle terms exchanged";
          } else {
            k.status = CheckStatus::Fail;
          }
        });
  }
}

// ---- criterion 14 -------------------------------------------------------

void pascal_checks(std::vector<Check>& out) {
  run(out, 14, "pascal.breakdown", "with b = 1 the set of descendants is infinite", [](Check& k) {
    const ProductSpec spec = ProductSpec::univariate(Poly{1, 1}, Poly{1}, 1);
    TransferOptions opts;
    opts.closure_budget = 200;
    k.expected = "ClosureBudgetExceeded";
    try {
      const TransferSystem sys = build_system(spec, WindowPattern({2}), true, opts);
      k.computed = "closure of size " + std::to_string(sys.size());
      k.status = CheckStatus::Fail;
    } catch (const Error& e) {
      k.computed = kind_name(e.kind());
      k.status = pass_if(e.kind() == ErrorKind::ClosureBudgetExceeded);
    }
  });
}

}  // namespace

std::vector<Check> run_criterion(int criterion, Profile profile, unsigned threads) {
  std::vector<Check> out;
  switch (criterion) {
    case 1: rows_checks(out, profile); break;
    case 2: concat_checks(out); break;
    case 3:
    case 4: usum_checks(out, criterion); break;
    case 5: transfer_checks(out); break;
    case 6: rmp_table_checks(out); break;
    case 7: decomposition_checks(out); break;
    case 8: oracle_checks(out, profile); break;
    case 9: conjecture_checks(out, profile, threads); break;
    case 10: speyer_checks(out, profile); break;
    case 11: vrur_checks(out); break;
    case 12: univariate_checks(out); break;
    case 13: multivariate_checks(out); break;
    case 14: pascal_checks(out); break;
    default: throw Error(ErrorKind::InvalidArgument, "no acceptance criterion " + std::to_string(criterion));
  }
  return out;
}

VerificationReport verify_paper(Profile profile, unsigned threads) {
  VerificationReport report;
  report.profile = profile;
  for (int k = 1; k <= kCriterionCount; ++k) {
    auto checks = run_criterion(k, profile, threads);
    for (auto& c : checks) report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace stern
