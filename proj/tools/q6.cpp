// q6 command-line tool: exact partition-function tables, identity suites,
// inequality scans, congruence sweeps, bijection dumps, and the brute-force
// partition oracle.
//
// Exit codes: 0 verified/ok, 1 failed verification or counterexample,
// 2 usage or input error.

#include "q6/q6.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using q6::Int;
using q6::Json;
using q6::SequenceTable;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::vector<std::string> split_list(const std::string& csv)
{
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

SequenceTable make_table(const std::string& fn, int k, int limit, std::string method)
{
    if (fn == "p") return q6::p_table(limit);
    if (fn == "b6") return q6::b6_table(limit, method.empty() ? "recurrence" : method);
    if (fn == "q2") return q6::q2_table(limit, method.empty() ? "recurrence" : method);
    if (fn == "b3") return q6::b3_table(limit, method.empty() ? "pentagonal-sum" : method);
    if (fn == "c") return q6::cd_tables(limit).first;
    if (fn == "d") return q6::cd_tables(limit).second;
    if (fn == "mk") return q6::mk_table(k, limit);
    if (fn == "pk") return q6::pk_table(k, limit);
    if (fn == "b6e") return q6::b6_length_split_tables(limit).first;
    if (fn == "b6o") return q6::b6_length_split_tables(limit).second;
    if (fn == "b6ee") return q6::b6_even_split_tables(limit).first;
    if (fn == "b6eo") return q6::b6_even_split_tables(limit).second;
    throw q6::Error("table: unknown function id '" + fn + "'");
}

void emit_table(const SequenceTable& t, const std::string& format, std::ostream& os)
{
    if (format == "csv") {
        for (int n = 0; n <= t.limit(); ++n) os << n << ',' << t.at(n) << '\n';
        return;
    }
    if (format == "json") {
        os << q6::to_json(t).dump(2) << '\n';
        return;
    }
    throw q6::Error("table: unknown format '" + format + "'");
}

int cmd_table(const std::string& fn, int k, int limit, const std::string& method,
              const std::string& format, const std::string& write_cache,
              const std::string& read_cache)
{
    SequenceTable t = read_cache.empty() ? make_table(fn, k, limit, method)
                                         : q6::read_table_cache(read_cache);
    if (!write_cache.empty()) q6::write_table_cache(t, write_cache);
    emit_table(t, format, std::cout);
    return exit_ok;
}

int cmd_verify(const std::string& suites, int limit, int kmax, const std::string& format,
               const std::string& residuals_csv, bool list_suites)
{
    if (list_suites) {
        for (const auto& [id, desc, anchor] : q6::suite_catalog())
            std::cout << id << "\n  " << desc << "\n  " << anchor << '\n';
        return exit_ok;
    }
    q6::SuiteParams params;
    params.ks.clear();
    for (int k = 1; k <= kmax; ++k) params.ks.push_back(k);
    params.collect_all = !residuals_csv.empty();

    std::vector<std::string> ids;
    if (suites == "all") {
        for (const auto& [id, desc, anchor] : q6::suite_catalog()) ids.push_back(id);
    } else {
        ids = split_list(suites);
    }

    std::ofstream csv;
    if (!residuals_csv.empty()) {
        csv.open(residuals_csv);
        if (!csv) throw q6::Error("verify: cannot open " + residuals_csv);
        csv << "suite,n,expected,got\n";
    }

    bool all_pass = true;
    Json jreports = Json::array();
    for (const std::string& id : ids) {
        q6::VerificationReport rep = q6::run_suite(id, limit, params);
        all_pass = all_pass && rep.pass;
        if (format == "json") {
            jreports.push_back(q6::to_json(rep));
        } else {
            std::cout << (rep.pass ? "pass" : "FAIL") << ' ' << rep.suite;
            if (!rep.params.empty()) std::cout << " [" << rep.params << "]";
            std::cout << " (limit " << rep.limit << ", " << rep.checked << " checked, "
                      << rep.elapsed_ms << " ms)";
            if (rep.first_failure)
                std::cout << " first failure at n=" << rep.first_failure->n << ": expected "
                          << rep.first_failure->expected << ", got " << rep.first_failure->got;
            std::cout << '\n';
        }
        if (csv.is_open())
            for (const auto& f : rep.failures)
                csv << rep.suite << ',' << f.n << ',' << f.expected << ',' << f.got << '\n';
    }
    if (format == "json") std::cout << jreports.dump(2) << '\n';
    return all_pass ? exit_ok : exit_failed;
}

int cmd_scan(const std::string& ids_arg, int kmax, int limit, const std::string& csv_path,
             bool chains, const std::string& format)
{
    std::vector<std::string> ids =
        (ids_arg == "all") ? q6::conjecture_ids() : split_list(ids_arg);
    std::vector<q6::ScanResult> results = q6::scan_matrix(ids, kmax, limit);

    bool any_counterexample = false;
    Json jout = Json::array();
    for (const q6::ScanResult& r : results) {
        any_counterexample = any_counterexample || r.violated();
        if (format == "json") {
            jout.push_back(q6::to_json(r));
        } else {
            std::cout << (r.violated() ? "COUNTEREXAMPLE" : "verified") << ' ' << r.id;
            if (r.id != "c8-1-2") std::cout << " k=" << r.k;
            std::cout << " (limit " << r.limit << ")";
            if (r.counterexample)
                std::cout << " at n=" << r.counterexample->first
                          << " value=" << r.counterexample->second;
            if (r.first_strict) std::cout << " first_strict=" << *r.first_strict;
            if (r.claimed_sharpness) std::cout << " claimed=" << *r.claimed_sharpness;
            if (r.sharpness_match)
                std::cout << " sharpness=" << (*r.sharpness_match ? "match" : "differs");
            std::cout << '\n';
        }
    }
    if (chains) {
        for (const q6::ChainReport& c : q6::check_implication_chains(kmax, limit)) {
            if (format == "json") {
                Json jc;
                jc["chain"] = c.chain;
                jc["ok"] = c.ok;
                if (c.violation)
                    jc["violation"] = {{"k", c.violation->first}, {"n", c.violation->second}};
                jout.push_back(jc);
            } else {
                std::cout << (c.ok ? "verified" : "VIOLATED") << " chain " << c.chain << '\n';
            }
            any_counterexample = any_counterexample || !c.ok;
        }
    }
    if (format == "json") std::cout << jout.dump(2) << '\n';
    if (!csv_path.empty()) {
        std::ofstream os(csv_path);
        if (!os) throw q6::Error("scan: cannot open " + csv_path);
        os << q6::scan_results_csv(results);
    }
    return any_counterexample ? exit_failed : exit_ok;
}

int cmd_congruence(const std::string& primes_arg, const std::string& j_arg,
                   const std::string& target, long long corollary_p, long long witness_m,
                   int limit, const std::string& format)
{
    Json jout = Json::array();
    bool failed = false;
    bool did_something = false;

    if (witness_m >= 0) {
        did_something = true;
        auto w = q6::two_squares_witness(witness_m);
        if (format == "json") {
            Json j;
            j["schema"] = 1;
            j["m"] = witness_m;
            j["target_value"] = 24 * witness_m + 5;
            if (w)
                j["witness"] = {{"a", w->first}, {"b", w->second}};
            else
                j["witness"] = nullptr;
            jout.push_back(j);
        } else if (w) {
            std::cout << "witness for 24*" << witness_m << "+5: a=" << w->first
                      << " b=" << w->second << " (a^2+(2b)^2=" << 24 * witness_m + 5 << ")\n";
        } else {
            std::cout << "no witness: 24*" << witness_m << "+5 = " << 24 * witness_m + 5
                      << " has no representation a^2+(2b)^2\n";
        }
    }

    SequenceTable table{"", "", {}};
    auto ensure_table = [&](const std::string& name) {
        if (table.name == name) return;
        table = (name == "b6") ? q6::b6_table(limit, "recurrence")
                               : q6::b3_table(limit, "pentagonal-sum");
    };

    if (!primes_arg.empty()) {
        did_something = true;
        std::vector<long long> primes;
        for (const std::string& s : split_list(primes_arg)) primes.push_back(std::stoll(s));
        ensure_table(target);
        std::vector<long long> js;
        if (j_arg == "all") {
            long long p = primes.back();
            for (long long j = 1; j < p; ++j) js.push_back(j);
        } else {
            js.push_back(std::stoll(j_arg));
        }
        for (long long j : js) {
            q6::PrimeFamilySpec spec{primes, j, target};
            q6::CongruenceReport rep = q6::verify_family(spec, table);
            if (!rep.exploratory && !rep.pass()) failed = true;
            if (format == "json") {
                jout.push_back(q6::to_json(rep));
            } else {
                std::cout << (rep.exploratory ? "report" : (rep.pass() ? "pass" : "FAIL")) << ' '
                          << rep.spec << ": " << rep.checked << " checked, "
                          << rep.violations.size() << " violations (" << rep.coverage_note
                          << ")\n";
            }
        }
    }

    if (corollary_p > 0) {
        did_something = true;
        ensure_table("b6");
        q6::CongruenceReport rep = q6::verify_corollary_p24(corollary_p, table);
        if (!rep.pass()) failed = true;
        if (format == "json") {
            jout.push_back(q6::to_json(rep));
        } else {
            std::cout << (rep.pass() ? "pass" : "FAIL") << ' ' << rep.spec << ": " << rep.checked
                      << " checked, " << rep.violations.size() << " violations\n";
        }
    }

    if (!did_something) throw CLI::ValidationError("congruence: nothing to do");
    if (format == "json") std::cout << jout.dump(2) << '\n';
    return failed ? exit_failed : exit_ok;
}

int cmd_bijection(const std::string& map, int n)
{
    using q6::Partition;
    using q6::to_string;
    if (map == "glaisher") {
        for (const Partition& lam : q6::enumerate(n, q6::preset_constraint("odd"))) {
            Partition img = q6::glaisher(lam);
            Partition back = q6::glaisher_inverse(img);
            std::cout << to_string(lam) << " -> " << to_string(img)
                      << (back == lam ? "" : "  ROUND-TRIP MISMATCH") << '\n';
        }
        return exit_ok;
    }
    if (map == "franklin") {
        for (const Partition& lam : q6::enumerate(n, q6::preset_constraint("distinct"))) {
            q6::FranklinResult f = q6::franklin(lam);
            if (f.fixed)
                std::cout << to_string(lam) << " fixed (pentagonal)\n";
            else
                std::cout << to_string(lam) << " <-> " << to_string(f.image) << '\n';
        }
        return exit_ok;
    }
    if (map == "phi") {
        for (const Partition& lam : q6::enumerate(n, q6::preset_constraint("b6"))) {
            if (!q6::in_b6prime(lam)) continue;
            std::cout << to_string(lam) << " <-> " << to_string(q6::phi(lam)) << '\n';
        }
        return exit_ok;
    }
    if (map == "psi") {
        for (const Partition& lam : q6::enumerate(n, q6::preset_constraint("q2prime"))) {
            Partition img = q6::psi(lam);
            Partition back = q6::psi_inverse(img);
            std::cout << to_string(lam) << " -> " << to_string(img)
                      << (back == lam ? "" : "  ROUND-TRIP MISMATCH") << '\n';
        }
        return exit_ok;
    }
    if (map == "census") {
        q6::CensusReport rep = q6::three_split_involution_census(n);
        std::cout << "n=" << rep.n << " signed=" << rep.signed_count
                  << " theta=" << rep.theta_sum << " rhs=" << rep.rhs << " stages:"
                  << " franklin=" << (rep.franklin_stage_ok ? "ok" : "FAIL")
                  << " transfer=" << (rep.transfer_stage_ok ? "ok" : "FAIL")
                  << " b-set=" << (rep.b_set_ok ? "ok" : "FAIL")
                  << " c-set=" << (rep.c_set_ok ? "ok" : "FAIL")
                  << " zeta=" << (rep.zeta_stage_ok ? "ok" : "FAIL") << '\n'
                  << "note: " << rep.note << '\n';
        return rep.ok() ? exit_ok : exit_failed;
    }
    throw CLI::ValidationError("bijection: unknown map '" + map + "'");
}

int cmd_oracle(const std::string& constraint, int n, bool list, int mk_k, int pk_k)
{
    using q6::Partition;
    std::vector<Partition> items;
    Int cnt;
    if (mk_k > 0) {
        items = q6::enumerate_mk(mk_k, n);
        cnt = Int(items.size());
    } else if (pk_k > 0) {
        items = q6::enumerate_pk(pk_k, n);
        cnt = Int(items.size());
    } else {
        q6::PartitionConstraint c = q6::preset_constraint(constraint);
        cnt = q6::count(n, c);
        if (list) items = q6::enumerate(n, c);
    }
    std::cout << "count=" << cnt << '\n';
    if (list)
        for (const Partition& p : items) std::cout << q6::to_string(p) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact partition-function tables, identities, congruences, and scans"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "emit f(0..N) as CSV (rows `n,value`) or JSON");
    std::string t_fn, t_method, t_format = "csv", t_write_cache, t_read_cache;
    int t_k = 0, t_limit = -1;
    table->add_option("--fn", t_fn,
                      "function id: p|b6|q2|c|d|b3|mk|pk|b6e|b6o|b6ee|b6eo");
    table->add_option("--k", t_k, "index k for mk/pk");
    table->add_option("--limit", t_limit, "table limit N");
    table->add_option("--method", t_method, "production route (per-function default)");
    table->add_option("--format", t_format, "csv|json (default csv)");
    table->add_option("--write-cache", t_write_cache, "write binary cache to this path");
    table->add_option("--read-cache", t_read_cache, "load table from binary cache");

    // verify
    auto* verify = app.add_subcommand("verify", "run identity suites over 0..limit");
    std::string v_suite = "all", v_format = "text", v_csv;
    int v_limit = 2000, v_kmax = 8;
    bool v_list = false;
    verify->add_option("--suite", v_suite, "suite id list or 'all'");
    verify->add_flag("--list", v_list, "print the suite catalog and exit");
    verify->add_option("--limit", v_limit, "sweep limit (default 2000)");
    verify->add_option("--kmax", v_kmax, "max k for th5/th5a (default 8)");
    verify->add_option("--format", v_format, "text|json");
    verify->add_option("--residuals-csv", v_csv,
                       "collect every residual violation as CSV rows suite,n,expected,got");

    // scan
    auto* scan = app.add_subcommand("scan", "inequality/conjecture counterexample scan");
    std::string s_id = "all", s_csv, s_format = "text";
    int s_kmax = 10, s_limit = 2000;
    bool s_chains = false;
    scan->add_option("--id", s_id, "conjecture id list or 'all'");
    scan->add_option("--kmax", s_kmax, "max truncation index (default 10)");
    scan->add_option("--limit", s_limit, "sweep limit (default 2000)");
    scan->add_option("--csv", s_csv,
                     "write CSV: id,k,status,first_strict_n,claimed_bound,match");
    scan->add_flag("--chains", s_chains, "also check the implication chains");
    scan->add_option("--format", s_format, "text|json");

    // congruence
    auto* cong = app.add_subcommand("congruence", "mod-3 family and corollary sweeps");
    std::string c_primes, c_j = "all", c_target = "b6", c_format = "text";
    long long c_corollary = 0, c_witness = -1;
    int c_limit = 100000;
    cong->add_option("--primes", c_primes, "comma-separated primes p_1..p_{alpha+1}");
    cong->add_option("--j", c_j, "offset j, or 'all' for every nonzero residue");
    cong->add_option("--target", c_target, "b6|b3");
    cong->add_option("--corollary", c_corollary, "run the single-prime corollary sweep for p");
    cong->add_option("--witness", c_witness, "find a two-squares witness for 24m+5");
    cong->add_option("--limit", c_limit, "table limit (default 100000)");
    cong->add_option("--format", c_format, "text|json");

    // bijection
    auto* bij = app.add_subcommand("bijection", "dump orbit/pairing tables for weight n");
    std::string b_map;
    int b_n = 0;
    bij->add_option("--map", b_map, "glaisher|franklin|phi|psi|census")->required();
    bij->add_option("--n", b_n, "weight")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force partition counts/listings");
    std::string o_constraint = "p";
    int o_n = 0, o_mk = 0, o_pk = 0;
    bool o_list = false;
    oracle->add_option("--constraint", o_constraint,
                       "p|b6|b6e|b6o|b6ee|b6eo|q2|q2prime|c|d|q61|div6|distinct|odd");
    oracle->add_option("--n", o_n, "weight")->required();
    oracle->add_flag("--list", o_list, "list the partitions");
    oracle->add_option("--mk", o_mk, "count/list the mk family for this k");
    oracle->add_option("--pk", o_pk, "count/list the pk family for this k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (table->parsed()) {
            if (t_read_cache.empty() && (t_fn.empty() || t_limit < 0))
                throw q6::Error("table: --fn and --limit are required without --read-cache");
            return cmd_table(t_fn, t_k, t_limit, t_method, t_format, t_write_cache,
                             t_read_cache);
        }
        if (verify->parsed()) return cmd_verify(v_suite, v_limit, v_kmax, v_format, v_csv, v_list);
        if (scan->parsed()) return cmd_scan(s_id, s_kmax, s_limit, s_csv, s_chains, s_format);
        if (cong->parsed())
            return cmd_congruence(c_primes, c_j, c_target, c_corollary, c_witness, c_limit,
                                  c_format);
        if (bij->parsed()) return cmd_bijection(b_map, b_n);
        if (oracle->parsed()) return cmd_oracle(o_constraint, o_n, o_list, o_mk, o_pk);
    } catch (const q6::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
