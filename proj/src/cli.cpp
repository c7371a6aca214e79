#include "chi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "chi/classify.hpp"
#include "chi/error.hpp"
#include "chi/experiments.hpp"
#include "chi/partition.hpp"
#include "chi/report_io.hpp"
#include "chi/ring.hpp"

namespace chi::cli {
namespace {

constexpr std::uint64_t kMaxLimit = 100'000'000;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_limit(std::uint64_t limit) {
  if (limit > kMaxLimit) throw InputError("--limit must not exceed 10^8");
}

void check_prime(long r) {
  if (r < 2 || !is_prime_trial(static_cast<std::uint64_t>(r))) throw InputError("--r must be a prime");
}

PartitionReport sharded_partition(const Rational& t, long r, std::uint64_t limit, long j_max, unsigned threads) {
  if (threads <= 1 || limit < 1000) return compute_partition(t, r, limit, j_max);
  std::vector<PartitionReport> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::uint64_t width = (limit - 1) / threads + 1;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t lo = 2 + i * width;
    const std::uint64_t hi = std::min(limit, lo + width - 1);
    pool.emplace_back([&, i, lo, hi] {
      try {
        parts[i] = compute_partition_range(t, r, lo, hi, j_max);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  auto out = merge(parts);
  out.limit = limit;
  return out;
}

std::vector<Rational> read_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open batch file " + path);
  std::vector<Rational> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(Rational::parse(line.substr(b, e - b + 1)));
  }
  return out;
}

struct PartitionOpts {
  std::string t;
  std::string batch;
  long r = 2;
  std::uint64_t limit = 1'000'000;
  long j_max = 8;
  std::string format = "csv";
  unsigned threads = 1;
  std::string out_path;
};

void emit_partition(const PartitionOpts& o, std::ostream& out) {
  check_prime(o.r);
  check_limit(o.limit);
  if (o.threads < 1) throw InputError("--threads must be >= 1");
  if (o.j_max < 0) throw InputError("--jmax must be >= 0");
  std::vector<Rational> ts;
  if (!o.batch.empty()) ts = read_batch(o.batch);
  else if (!o.t.empty()) ts.push_back(Rational::parse(o.t));
  else throw InputError("partition needs <t> or --batch FILE");

  std::ostringstream text;
  Json all = Json::array();
  for (const auto& t : ts) {
    const auto report = sharded_partition(t, o.r, o.limit, o.j_max, o.threads);
    const auto pred = predicted_densities(t, o.r, o.j_max);
    std::vector<ComparisonRow> rows;
    if (pred.supported) rows = compare(report, pred);
    if (o.format == "json") {
      all.push_back({{"report", to_json(report)}, {"prediction", to_json(pred)}, {"rows", to_json(rows)}});
    } else {
      if (ts.size() > 1) text << "# t = " << t.str() << '\n';
      text << (pred.supported ? comparison_csv(rows) : partition_csv(report));
    }
  }
  if (o.format == "json") text << (ts.size() == 1 && o.batch.empty() ? all[0] : all).dump(2) << '\n';

  if (o.out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out_path);
    f << text.str();
  }
}

int report_check(const CheckReport& rep, bool show_violations, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(rep).dump(2) << '\n';
  } else {
    out << (rep.passed() ? "PASS " : "FAIL ") << rep.name << ": " << rep.primes_checked << " primes checked, "
        << rep.violation_count << " violations\n";
    if (show_violations && !rep.passed()) out << violations_csv(rep);
  }
  return rep.passed() ? 0 : 2;
}

LucasSpec lucas_from(const std::string& T, const std::string& Q, const std::string& t) {
  if (!t.empty()) return LucasSpec::from_parameter(Rational::parse(t));
  if (T.empty() || Q.empty()) throw InputError("give --T and --Q, or --t");
  const Rational tt = Rational::parse(T), qq = Rational::parse(Q);
  if (!tt.is_integer() || !qq.is_integer() || qq == 0) throw InputError("T and Q must be integers, Q != 0");
  return {tt.num(), qq.num()};
}

Family parse_family(const std::string& s) {
  if (s == "W") return Family::W;
  if (s == "V") return Family::V;
  if (s == "C") return Family::C;
  if (s == "S") return Family::S;
  if (s == "sub" || s == "subsequence") return Family::Subsequence;
  throw InputError("unknown family " + s);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index of appearance and prime partitions for second-order recurrences"};
  app.require_subcommand(1);
  int code = 0;
  std::function<void()> action;

  // classify
  std::string c_t;
  auto* classify_cmd = app.add_subcommand("classify", "Arithmetic classification and predicted densities of t");
  classify_cmd->add_option("t", c_t, "parameter a/b")->required();
  std::vector<long> c_rs = kDefaultRs;
  classify_cmd->add_option("--r", c_rs, "primes r for per-r data")->delimiter(',');
  classify_cmd->callback([&] {
    action = [&] {
      for (long r : c_rs) check_prime(r);
      const auto c = classify(Rational::parse(c_t), c_rs);
      Json j = to_json(c);
      Json preds = Json::object();
      for (long r : c_rs) preds[std::to_string(r)] = to_json(predicted_densities(c, r));
      j["predictions"] = preds;
      out << j.dump(2) << '\n';
    };
  });

  // index
  std::string i_t;
  std::uint64_t i_p = 0;
  bool i_scan = false;
  auto* index_cmd = app.add_subcommand("index", "chi(t,p), the order of D mod p");
  index_cmd->add_option("t", i_t)->required();
  index_cmd->add_option("p", i_p)->required();
  index_cmd->add_flag("--scan", i_scan, "use the direct recurrence scan");
  index_cmd->callback([&] {
    action = [&] {
      if (i_p < 3 || !is_prime_trial(i_p)) throw InputError("p must be an odd prime");
      const Rational t = Rational::parse(i_t);
      const auto v = i_scan ? index_by_scan(t, i_p) : index(t, i_p);
      out << "chi(" << t.str() << "," << i_p << ") = " << v << '\n';
    };
  });

  // partition
  PartitionOpts po;
  auto* part_cmd = app.add_subcommand("partition", "Empirical partition Pi_j(t,r) against the predicted densities");
  part_cmd->add_option("t", po.t);
  part_cmd->add_option("--batch", po.batch, "file with one rational per line");
  part_cmd->add_option("--r", po.r);
  part_cmd->add_option("--limit", po.limit);
  part_cmd->add_option("--jmax", po.j_max);
  part_cmd->add_option("--format", po.format)->check(CLI::IsMember({"csv", "json"}));
  part_cmd->add_option("--threads", po.threads);
  part_cmd->add_option("--out", po.out_path);
  part_cmd->callback([&] { action = [&] { emit_partition(po, out); }; });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exact per-prime checks");
  verify_cmd->require_subcommand(1);
  std::string v_t, v_T, v_Q, v_format = "text", v_family = "W";
  long v_r = 2, v_nmax = 2, v_jmax = 3, v_kmax = 30;
  std::uint64_t v_limit = 10000;
  bool v_show = false;
  auto common = [&](CLI::App* s, bool needs_t) {
    if (needs_t) s->add_option("t", v_t)->required();
    s->add_option("--limit", v_limit);
    s->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));
    s->add_flag("--violations", v_show, "print violations as CSV");
  };
  auto checked = [&](auto make) {
    return [&, make] {
      action = [&, make] {
        check_limit(v_limit);
        code = report_check(make(), v_show, v_format, out);
      };
    };
  };
  auto* s_prop11 = verify_cmd->add_subcommand("prop11", "chi(C_r(t),p) against chi(t,p)");
  common(s_prop11, true);
  s_prop11->add_option("--r", v_r);
  s_prop11->callback(checked([&] {
    check_prime(v_r);
    return verify_prop11(Rational::parse(v_t), v_r, v_limit);
  }));
  auto* s_twin = verify_cmd->add_subcommand("twin", "chi(-t,p) against chi(t,p)");
  common(s_twin, true);
  s_twin->callback(checked([&] { return verify_twin(Rational::parse(v_t), v_limit); }));
  auto* s_cubic = verify_cmd->add_subcommand("cubic", "3-adic levels of the cubic associates");
  common(s_cubic, true);
  s_cubic->callback(checked([&] { return verify_cubic_associates(Rational::parse(v_t), v_limit); }));
  auto* s_circ = verify_cmd->add_subcommand("circular", "2-adic levels of t and w");
  common(s_circ, true);
  s_circ->callback(checked([&] { return verify_circular(Rational::parse(v_t), v_limit); }));
  auto* s_bridge = verify_cmd->add_subcommand("bridge", "Lucas rank of apparition against chi");
  common(s_bridge, false);
  s_bridge->add_option("--T", v_T);
  s_bridge->add_option("--Q", v_Q);
  s_bridge->add_option("--t", v_t);
  s_bridge->callback(checked([&] { return verify_bridge(lucas_from(v_T, v_Q, v_t), v_limit); }));
  auto* s_split = verify_cmd->add_subcommand("splitting", "Polynomial splitting against group membership");
  common(s_split, true);
  s_split->add_option("--r", v_r);
  s_split->add_option("--nmax", v_nmax);
  s_split->add_option("--jmax", v_jmax);
  s_split->callback(checked([&] {
    check_prime(v_r);
    return verify_splitting_theorems(Rational::parse(v_t), v_r, v_limit, v_nmax, v_jmax);
  }));
  auto* s_ballot = verify_cmd->add_subcommand("ballot", "B_k = L_rk / L_k identities and divisor certificates");
  common(s_ballot, false);
  s_ballot->add_option("--T", v_T);
  s_ballot->add_option("--Q", v_Q);
  s_ballot->add_option("--t", v_t);
  s_ballot->add_option("--r", v_r);
  s_ballot->add_option("--kmax", v_kmax);
  s_ballot->callback(checked([&] {
    check_prime(v_r);
    const auto b = ballot_check(lucas_from(v_T, v_Q, v_t), v_r, v_limit, v_kmax);
    CheckReport all{"ballot"};
    all.absorb(b.integrality);
    all.absorb(b.identities);
    all.absorb(b.certificates);
    return all;
  }));
  auto* s_seq = verify_cmd->add_subcommand("sequences", "Prime divisors of W, V, C, S and subsequences");
  common(s_seq, true);
  s_seq->add_option("--family", v_family)->check(CLI::IsMember({"W", "V", "C", "S", "sub", "subsequence"}));
  s_seq->add_option("--r", v_r);
  s_seq->callback(checked([&] {
    check_prime(v_r);
    return sequence_divisor_check(Rational::parse(v_t), parse_family(v_family), v_limit, v_r);
  }));

  // dynamics
  auto* dyn_cmd = app.add_subcommand("dynamics", "Prime divisors of polynomial orbits");
  dyn_cmd->require_subcommand(1);
  std::string d_x;
  long d_k = 2, d_nmax = 30;
  std::uint64_t d_limit = 100000;
  auto* d_cheb = dyn_cmd->add_subcommand("chebyshev", "Orbit of x -> C_k(x) and its zeros mod p");
  d_cheb->add_option("x0", d_x)->required();
  d_cheb->add_option("--k", d_k);
  d_cheb->add_option("--nmax", d_nmax);
  d_cheb->add_option("--limit", d_limit);
  d_cheb->callback([&] {
    action = [&] {
      check_limit(d_limit);
      const auto rep = chebyshev_orbit_divisors(Rational::parse(d_x), d_k, d_nmax, d_limit);
      code = report_check(rep.checks, true, "text", out);
      out << "divisors: " << rep.divisors.size() << '\n';
      for (const auto& [n, frac] : rep.checkpoints) out << "N = " << n << ": fraction " << fixed6(frac) << '\n';
    };
  });
  auto* d_quad = dyn_cmd->add_subcommand("quadmap", "Returns of y -> y^2 - 2 to t against chi odd");
  d_quad->add_option("t", d_x)->required();
  d_quad->add_option("--limit", d_limit);
  d_quad->callback([&] {
    action = [&] {
      check_limit(d_limit);
      const auto rep = quadmap_divisor_check(Rational::parse(d_x), d_limit);
      code = report_check(rep.checks, true, "text", out);
      const double frac = rep.admissible ? static_cast<double>(rep.divisors.size()) / rep.admissible : 0.0;
      out << "divisors: " << rep.divisors.size() << " of " << rep.admissible << " (" << fixed6(frac) << ")\n";
    };
  });

  // nondivisor
  std::string n_t, n_y0, n_y1;
  long n_r = 7;
  std::uint64_t n_limit = 1'000'000;
  auto* nd_cmd = app.add_subcommand("nondivisor", "Primes that cannot divide the sequence with initial row Y");
  nd_cmd->add_option("t", n_t)->required();
  nd_cmd->add_option("y0", n_y0)->required();
  nd_cmd->add_option("y1", n_y1)->required();
  nd_cmd->add_option("--r", n_r);
  nd_cmd->add_option("--limit", n_limit);
  nd_cmd->callback([&] {
    action = [&] {
      check_prime(n_r);
      check_limit(n_limit);
      const auto rep =
          nondivisor_density(Rational::parse(n_t), Rational::parse(n_y0), Rational::parse(n_y1), n_r, n_limit);
      code = report_check(rep.checks, true, "text", out);
      const Rational expected(n_r - 1, n_r * n_r * n_r);
      out << "trace b = " << rep.trace.str() << '\n'
          << "|T| = " << rep.target_count << ", pi(N) = " << rep.prime_count << ", fraction "
          << fixed6(rep.target_fraction()) << " (predicted " << expected.str() << " = " << fixed6(expected.to_double())
          << ")\n"
          << "divisors: " << rep.divisor_count << " of " << rep.admissible << " admissible\n"
          << "criterion disagreements: " << rep.criterion_disagreements.size() << '\n';
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }
  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return code;
}

}  // namespace chi::cli
