// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// nonzero exit when anything fails.  Tolerances are exact (integer
// arithmetic throughout); runtime budgets are noted where they apply.

#include "q6/q6.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace q6;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(std::ostream&)>& body)
{
    auto start = std::chrono::steady_clock::now();
    std::ostringstream why;
    bool ok = true;
    try {
        body(why);
        ok = why.str().empty();
    } catch (const std::exception& e) {
        ok = false;
        why << "exception: " << e.what();
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ["
              << static_cast<long long>(ms) << " ms]";
    if (!ok) {
        std::cout << " -- " << why.str();
        ++failures;
    }
    std::cout << std::endl;
}

template <class T, class U>
void expect(std::ostream& why, const char* what, const T& expected, const U& got)
{
    if (!(expected == got))
        why << what << ": expected " << expected << ", got " << got << "; ";
}

void expect_true(std::ostream& why, const char* what, bool cond)
{
    if (!cond) why << what << "; ";
}

Partition parts(std::vector<int> v) { return Partition(std::move(v)); }

} // namespace

int main()
{
    // 1. desk-scale fixtures, exact, < 1 s
    criterion(1, "fixture values and witness lists", [](std::ostream& why) {
        auto [b6e, b6o] = b6_length_split_tables(7);
        auto [b6ee, b6eo] = b6_even_split_tables(7);
        expect(why, "b6(7)", Int(14), b6_table(7).at(7));
        expect(why, "b6e(7)", Int(6), b6e.at(7));
        expect(why, "b6o(7)", Int(8), b6o.at(7));
        expect(why, "b6ee(7)", Int(8), b6ee.at(7));
        expect(why, "b6eo(7)", Int(6), b6eo.at(7));
        expect(why, "b6e(7) by enumeration", Int(6), count(7, preset_constraint("b6e")));
        expect(why, "b6o(7) by enumeration", Int(8), count(7, preset_constraint("b6o")));
        expect(why, "b6ee(7) by enumeration", Int(8), count(7, preset_constraint("b6ee")));
        expect(why, "b6eo(7) by enumeration", Int(6), count(7, preset_constraint("b6eo")));

        std::vector<Partition> q2_14 = enumerate(14, preset_constraint("q2"));
        std::vector<Partition> q2_expected = {parts({13, 1}), parts({11, 3}), parts({9, 5}),
                                              parts({7, 6, 1}), parts({6, 5, 3})};
        expect(why, "q2(14) count", Int(5), Int(q2_14.size()));
        expect_true(why, "q2(14) partition list", q2_14 == q2_expected);

        SequenceTable q2 = q2_table(14, "product");
        std::vector<int> expansion = {1, 1, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 5, 5, 5};
        for (int n = 0; n <= 14; ++n)
            expect(why, ("q2(" + std::to_string(n) + ")").c_str(),
                   Int(expansion[static_cast<size_t>(n)]), q2.at(n));

        std::vector<Partition> m3 = enumerate_mk(3, 18);
        std::vector<Partition> m3_expected = {parts({7, 4, 4, 2, 1}), parts({6, 5, 4, 2, 1}),
                                              parts({5, 5, 5, 2, 1})};
        expect(why, "mk(3) at 18 count", Int(3), Int(m3.size()));
        expect_true(why, "mk(3) at 18 witnesses", m3 == m3_expected);
        expect(why, "mk table at (3,18)", Int(3), mk_table(3, 18).at(18));

        std::vector<Partition> p2 = enumerate_pk(2, 17);
        std::vector<Partition> p2_expected = {
            parts({5, 3, 3, 3, 2, 1}),       parts({4, 4, 4, 2, 2, 1}),
            parts({4, 4, 4, 2, 1, 1, 1}),    parts({4, 3, 3, 3, 2, 1, 1}),
            parts({3, 3, 3, 3, 2, 2, 1}),    parts({3, 3, 3, 3, 2, 1, 1, 1}),
            parts({3, 3, 3, 2, 2, 2, 1, 1}), parts({3, 3, 3, 2, 2, 1, 1, 1, 1}),
            parts({3, 3, 3, 2, 1, 1, 1, 1, 1, 1})};
        expect(why, "pk(2) at 17 count", Int(9), Int(p2.size()));
        expect_true(why, "pk(2) at 17 witnesses", p2 == p2_expected);
        expect(why, "pk table at (2,17)", Int(9), pk_table(2, 17).at(17));
    });

    // 2. all seventeen identity suites to 2000, th5/th5a for k <= 8; < 60 s
    criterion(2, "identity suites to 2000", [](std::ostream& why) {
        SuiteParams params; // ks defaults to 1..8
        for (const auto& [id, desc, anchor] : suite_catalog()) {
            VerificationReport rep = run_suite(id, 2000, params);
            if (!rep.pass) {
                why << rep.suite << " failed at n=" << rep.first_failure->n << " (expected "
                    << rep.first_failure->expected << ", got " << rep.first_failure->got
                    << "); ";
            }
        }
    });

    // 3. every table function equals brute-force enumeration; < 30 s
    criterion(3, "oracle equivalence to 50 (mk to 40 for k<=4, pk for k<=3)",
              [](std::ostream& why) {
                  SequenceTable p = p_table(50);
                  SequenceTable b6 = b6_table(50);
                  SequenceTable q2 = q2_table(50);
                  auto [c, d] = cd_tables(50);
                  auto [b6e, b6o] = b6_length_split_tables(50);
                  auto [b6ee, b6eo] = b6_even_split_tables(50);
                  std::vector<std::pair<const SequenceTable*, const char*>> pairs = {
                      {&p, "p"},       {&b6, "b6"},     {&q2, "q2"},   {&c, "c"},
                      {&d, "d"},       {&b6e, "b6e"},   {&b6o, "b6o"}, {&b6ee, "b6ee"},
                      {&b6eo, "b6eo"},
                  };
                  for (auto [table, name] : pairs)
                      for (int n = 0; n <= 50; ++n)
                          if (count(n, preset_constraint(name)) != table->at(n)) {
                              why << name << " table vs oracle differs at n=" << n << "; ";
                              return;
                          }
                  for (int k = 1; k <= 4; ++k) {
                      SequenceTable mk = mk_table(k, 40);
                      for (int n = 0; n <= 40; ++n)
                          if (count_mk(k, n) != mk.at(n)) {
                              why << "mk(" << k << ") vs oracle differs at n=" << n << "; ";
                              return;
                          }
                  }
                  for (int k = 1; k <= 3; ++k) {
                      SequenceTable pk = pk_table(k, 40);
                      for (int n = 0; n <= 40; ++n)
                          if (count_pk(k, n) != pk.at(n)) {
                              why << "pk(" << k << ") vs oracle differs at n=" << n << "; ";
                              return;
                          }
                  }
              });

    // 4. series identities
    criterion(4, "pentagonal theta to 500; quintuple/triple specializations to 240",
              [](std::ostream& why) {
                  expect_true(why, "pentagonal theta vs (q;q)_oo at 500",
                              pentagonal_theta(500) == build_product({{{-1, 1, 1, 1}}}, 500));
                  for (auto [s, m] : {std::pair{2, 24}, std::pair{10, 24}, std::pair{2, 6},
                                      std::pair{1, 3}}) {
                      auto [sum, prod] = quintuple_specialization(s, m, 240);
                      if (!(sum == prod))
                          why << "quintuple (s=" << s << ", m=" << m << ") sides differ; ";
                  }
                  for (auto [s, sign, m] : {std::tuple{1, -1, 6}, std::tuple{1, 1, 6},
                                            std::tuple{1, 1, 3}}) {
                      auto [sum, prod] = triple_specialization(s, sign, m, 240);
                      if (!(sum == prod))
                          why << "triple (s=" << s << ", sign=" << sign << ", m=" << m
                              << ") sides differ; ";
                  }
              });

    // 5. congruence families at table limit 10^5
    criterion(5, "mod-3 congruence families, corollary, two-squares route",
              [](std::ostream& why) {
                  SequenceTable b6 = b6_table(100000);
                  for (long long p : {7LL, 11LL, 19LL, 23LL, 31LL})
                      for (long long j = 1; j < p; ++j) {
                          CongruenceReport rep = verify_family({{p}, j, "b6"}, b6);
                          if (!rep.pass()) {
                              why << "family p=" << p << " j=" << j << " violated at n="
                                  << rep.violations[0].n << "; ";
                              return;
                          }
                      }
                  for (auto [p1, p2] : {std::pair{5LL, 7LL}, std::pair{7LL, 11LL}})
                      for (long long j : {1LL, 2LL, 3LL}) {
                          CongruenceReport rep = verify_family({{p1, p2}, j, "b6"}, b6);
                          if (!rep.pass()) {
                              why << "family (" << p1 << "," << p2 << ") j=" << j
                                  << " violated; ";
                              return;
                          }
                      }
                  for (long long p : {7LL, 11LL, 13LL, 17LL, 19LL, 23LL}) {
                      CongruenceReport rep = verify_corollary_p24(p, b6);
                      if (!rep.pass()) {
                          why << "corollary p=" << p << " violated; ";
                          return;
                      }
                  }
                  TruncatedSeries f = two_squares_series(2000);
                  for (int n = 0; n <= 2000; ++n) {
                      Int lhs = (n % 2 == 0) ? b6.at(n) : -b6.at(n);
                      if ((lhs - f.coeff(n)) % 3 != 0) {
                          why << "b6 mod 3 vs theta product differs at n=" << n << "; ";
                          return;
                      }
                      if (!two_squares_witness(n).has_value() && f.coeff(n) != 0) {
                          why << "witness-free n=" << n << " has nonzero coefficient; ";
                          return;
                      }
                  }
              });

    // 6. bijection properties
    criterion(6, "bijection properties (phi/psi to 40, glaisher/franklin to 60, "
                 "q61/w61 to 200, census to 40)",
              [](std::ostream& why) {
                  PartitionConstraint b6c = preset_constraint("b6");
                  for (int n = 0; n <= 40; ++n) {
                      long long even_count = 0, odd_count = 0;
                      for (const Partition& lam : enumerate(n, b6c)) {
                          if (!in_b6prime(lam)) continue;
                          (lam.length() % 2 == 0 ? even_count : odd_count) += 1;
                          Partition img = phi(lam);
                          if (img.weight() != n || !in_b6prime(img) ||
                              img.length() % 2 == lam.length() % 2 || !(phi(img) == lam)) {
                              why << "phi fails at " << to_string(lam) << "; ";
                              return;
                          }
                      }
                      if (even_count != odd_count) {
                          why << "phi census unbalanced at n=" << n << "; ";
                          return;
                      }
                  }
                  PartitionConstraint q2prime = preset_constraint("q2prime");
                  PartitionConstraint q2c = preset_constraint("q2");
                  for (int n = 0; n <= 40; ++n) {
                      std::set<Partition> images;
                      for (const Partition& lam : enumerate(n, q2prime)) {
                          Partition img = psi(lam);
                          if (img.weight() != n || !q2c.satisfied_by(img) ||
                              !(psi_inverse(img) == lam)) {
                              why << "psi fails at " << to_string(lam) << "; ";
                              return;
                          }
                          images.insert(img);
                      }
                      std::vector<Partition> codomain = enumerate(n, q2c);
                      if (images.size() != codomain.size()) {
                          why << "psi not onto at n=" << n << "; ";
                          return;
                      }
                  }
                  PartitionConstraint odd = preset_constraint("odd");
                  PartitionConstraint distinct = preset_constraint("distinct");
                  for (int n = 0; n <= 60; ++n) {
                      for (const Partition& lam : enumerate(n, odd))
                          if (!(glaisher_inverse(glaisher(lam)) == lam)) {
                              why << "glaisher round-trip fails at " << to_string(lam) << "; ";
                              return;
                          }
                      for (const Partition& lam : enumerate(n, distinct)) {
                          FranklinResult f = franklin(lam);
                          if (f.fixed != is_pentagonal_partition(lam)) {
                              why << "franklin fixed-point set wrong at " << to_string(lam)
                                  << "; ";
                              return;
                          }
                          if (!f.fixed && (!(franklin(f.image).image == lam) ||
                                           f.image.length() % 2 == lam.length() % 2)) {
                              why << "franklin involution fails at " << to_string(lam) << "; ";
                              return;
                          }
                      }
                  }
                  for (int n = 0; n <= 200; ++n) {
                      auto [q, w] = cardinality_q61_w61(n);
                      if (q != w) {
                          why << "|Q61| != |W61| at n=" << n << "; ";
                          return;
                      }
                  }
                  for (int n = 0; n <= 40; ++n) {
                      CensusReport rep = three_split_involution_census(n);
                      if (!rep.ok()) {
                          why << "census fails at n=" << n << "; ";
                          return;
                      }
                  }
              });

    // 7. conjecture scans, k <= 10, n <= 2000
    criterion(7, "conjecture scans to 2000 with sharpness and implication chains",
              [](std::ostream& why) {
                  std::vector<ScanResult> results = scan_matrix(conjecture_ids(), 10, 2000);
                  for (const ScanResult& r : results)
                      if (r.violated()) {
                          why << r.id << " k=" << r.k << " counterexample at n="
                              << r.counterexample->first << "; ";
                          return;
                      }
                  for (const ScanResult& r : results) {
                      if (r.id == "cor81" && r.k <= 6 && r.sharpness_match != true)
                          why << "cor81 sharpness mismatch at k=" << r.k << "; ";
                      if ((r.id == "conj-q2-p-i" || r.id == "conj-q2-p-ii") && r.k <= 5 &&
                          r.sharpness_match != true)
                          why << r.id << " sharpness mismatch at k=" << r.k << "; ";
                  }
                  for (const ChainReport& c : check_implication_chains(10, 2000))
                      if (!c.ok)
                          why << "chain " << c.chain << " violated at k=" << c.violation->first
                              << ", n=" << c.violation->second << "; ";
              });

    // 8. cache round-trip at N = 10^4
    criterion(8, "binary cache round-trip for p, b6, q2 at 10^4", [](std::ostream& why) {
        namespace fs = std::filesystem;
        for (const char* fn : {"p", "b6", "q2"}) {
            SequenceTable t = (fn == std::string("p"))    ? p_table(10000)
                              : (fn == std::string("b6")) ? b6_table(10000)
                                                          : q2_table(10000);
            fs::path a = fs::temp_directory_path() / (std::string("q6_acc_") + fn + "_a.ptkt");
            fs::path b = fs::temp_directory_path() / (std::string("q6_acc_") + fn + "_b.ptkt");
            write_table_cache(t, a);
            SequenceTable back = read_table_cache(a);
            if (back.name != t.name || back.values != t.values) {
                why << fn << " cache read-back differs; ";
                return;
            }
            write_table_cache(back, b);
            std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
            std::string sa((std::istreambuf_iterator<char>(fa)),
                           std::istreambuf_iterator<char>());
            std::string sb((std::istreambuf_iterator<char>(fb)),
                           std::istreambuf_iterator<char>());
            if (sa != sb || sa.empty()) {
                why << fn << " cache bytes differ on rewrite; ";
                return;
            }
            fs::remove(a);
            fs::remove(b);
        }
    });

    if (failures == 0)
        std::cout << "acceptance: all criteria passed" << std::endl;
    else
        std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return failures == 0 ? 0 : 1;
}
