// mdslab: construct, verify and search MDS/NMDS codes from the shell.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdslab/covering.hpp"
#include "mdslab/criteria.hpp"
#include "mdslab/equiv.hpp"
#include "mdslab/extend.hpp"
#include "mdslab/parallel.hpp"
#include "mdslab/reproduce.hpp"

using namespace mdslab;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaim = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 20240917;

Field field_of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    std::uint32_t m = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++m;
    }
    if (r != 1) throw BadInput("q = " + std::to_string(q) + " is not a prime power");
    return Field::make(p, m);
  }
  throw BadInput("q must be at least 2");
}

Vec parse_vec(const std::string& csv) {
  Vec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(static_cast<Elem>(std::stoul(item)));
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

std::string show(std::span<const Elem> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string params(const LinearCode& c, const CodeClass& cls) {
  std::ostringstream os;
  os << '[' << c.n() << ',' << c.k() << ',' << cls.d << "]_" << c.field().q() << ' ' << to_string(cls.tag)
     << " d_dual=" << cls.d_dual;
  return os.str();
}

LinearCode read_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return LinearCode::parse_text(ss.str());
}

void write_code(const LinearCode& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot write " + path);
  out << c.to_text();
}

// Field plus evaluation data shared by several subcommands.
struct EvalArgs {
  std::uint32_t q = 0;
  std::string S;
  std::string v = "1";
  std::size_t k = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "field order")->required();
    cmd->add_option("--S", S, "evaluation points, comma separated")->required();
    cmd->add_option("--v", v, "multipliers, comma separated; a single value is broadcast");
    cmd->add_option("--k", k, "dimension")->required();
  }

  EvalConfig config() const {
    Field f = field_of_order(q);
    Vec s = parse_vec(S), mult = parse_vec(v);
    if (mult.size() == 1) mult.assign(s.size(), mult[0]);
    return EvalConfig::make(f, s, mult);
  }
};

json result_json(const Algorithm1Output& o) {
  const auto& r = o.result;
  json j;
  j["branch"] = o.branch;
  j["g_kp1"] = o.g_kp1;
  j["g_km1"] = o.g_km1;
  j["f"] = o.f.coeffs();
  j["u_scalar"] = o.u_scalar;
  j["u"] = r.u;
  j["n"] = r.extended.n();
  j["k"] = r.extended.k();
  j["advertised"] = {{"tag", to_string(o.advertised_tag)}, {"d", o.advertised_d}};
  if (o.classified) {
    j["tag"] = to_string(r.extended_class.tag);
    j["d"] = r.extended_class.d;
    j["d_dual"] = r.extended_class.d_dual;
  }
  j["hypotheses_hold"] = r.hypotheses_hold;
  j["nongrs_inherited"] = r.nongrs_inherited;
  j["generator"] = r.extended.generator().to_rows();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mdslab: MDS and near-MDS codes, deep holes and extensions"};
  app.require_subcommand(1);
  unsigned threads = 0;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--threads", threads, "worker threads (default: MDSLAB_THREADS or hardware)");
  app.add_option("--seed", seed, "seed for sampled and shuffled runs");

  // construct
  auto* construct = app.add_subcommand("construct", "build a GRS, EGRS, ESGRS or Roth-Lempel code");
  std::string kind, out_path;
  EvalArgs cons;
  Elem delta = 0;
  construct->add_option("kind", kind, "grs | egrs | esgrs | rl")->required()->check(CLI::IsMember({"grs", "egrs", "esgrs", "rl"}));
  cons.attach(construct);
  construct->add_option("--delta", delta, "Roth-Lempel delta");
  construct->add_option("--out", out_path, "code file to write");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "report [n,k,d] and the MDS/NMDS tag");
  std::string code_path;
  classify_cmd->add_option("code", code_path, "code file")->required();

  // deepholes
  auto* deep = app.add_subcommand("deepholes", "covering radius and deep holes");
  std::uint64_t limit = 20;
  bool csv = false;
  deep->add_option("code", code_path, "code file")->required();
  deep->add_option("--limit", limit, "deep holes to list (0 lists all)");
  deep->add_flag("--csv", csv, "CSV output");

  // criteria
  auto* crit = app.add_subcommand("criteria", "test a polynomial deep-hole candidate of an ESGRS code");
  EvalArgs ca;
  Elem gkp1 = 0, gkm1 = 0, u_scalar = 0;
  std::string f_coeffs;
  ca.attach(crit);
  crit->add_option("--gkp1", gkp1, "coefficient of x^{k+1}");
  crit->add_option("--gkm1", gkm1, "coefficient of x^{k-1}")->required();
  crit->add_option("--f", f_coeffs, "coefficients f_0..f_k of f in V_k")->required();
  crit->add_option("--u", u_scalar, "last coordinate of the candidate")->required();

  // extend
  auto* ext = app.add_subcommand("extend", "extend a code by a vector");
  std::string u_csv, ext_kind = "deep-hole";
  ext->add_option("code", code_path, "code file")->required();
  ext->add_option("--u", u_csv, "vector, comma separated")->required();
  ext->add_option("--kind", ext_kind, "deep-hole | second | dual-path")
      ->check(CLI::IsMember({"deep-hole", "second", "dual-path"}));
  ext->add_option("--out", out_path, "code file to write");

  // algorithm1 / search
  auto* alg = app.add_subcommand("algorithm1", "enumerate extensions of an ESGRS code");
  alg->alias("search");
  EvalArgs aa;
  std::uint64_t budget = 0;
  std::string only, emit = "jsonl";
  bool shuffle = false;
  std::optional<Elem> pin_kp1, pin_km1, pin_u;
  std::string pin_f;
  aa.attach(alg);
  alg->add_option("--budget", budget, "grid points to visit")->required();
  alg->add_option("--only", only, "mds | nmds")->check(CLI::IsMember({"mds", "nmds"}));
  alg->add_option("--emit", emit, "jsonl")->check(CLI::IsMember({"jsonl"}));
  alg->add_flag("--shuffle", shuffle, "walk the grid in the order given by --seed");
  alg->add_option("--gkp1", pin_kp1, "pin g_{k+1}");
  alg->add_option("--gkm1", pin_km1, "pin g_{k-1}");
  alg->add_option("--u", pin_u, "pin the last coordinate");
  alg->add_option("--f", pin_f, "pin f by its coefficients f_0..f_k");
  bool no_classify = false;
  alg->add_flag("--no-classify", no_classify, "skip classifying each output");

  // equiv
  auto* eq = app.add_subcommand("equiv", "monomial equivalence of two codes");
  std::string path_a, path_b;
  eq->add_option("a", path_a, "first code file")->required();
  eq->add_option("b", path_b, "second code file")->required();

  // mkz-bench
  auto* bench = app.add_subcommand("mkz-bench", "two-condition NMDS test versus the deep-hole route (CSV)");
  EvalArgs ba;
  std::uint64_t samples = 1000;
  bool exhaustive = false, verify = false;
  ba.attach(bench);
  bench->add_option("--samples", samples, "random vectors to test");
  bench->add_flag("--exhaustive", exhaustive, "test every vector of GF(q)^n");
  bench->add_flag("--verify", verify, "also classify each second-kind extension");

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "re-derive a worked example and check every stated fact");
  std::string example;
  std::vector<std::string> ids = reproduce_ids();
  ids.push_back("all");
  rep->add_option("example", example, "example id")->required()->check(CLI::IsMember(ids));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (threads) set_thread_count(threads);

  try {
    if (*construct) {
      EvalConfig cfg = cons.config();
      LinearCode c = kind == "grs"     ? grs(cfg, cons.k)
                     : kind == "egrs"  ? egrs(cfg, cons.k)
                     : kind == "esgrs" ? esgrs(cfg, cons.k)
                                       : roth_lempel(cfg.field, cfg.S, cons.k, delta);
      std::string line = params(c, classify(c));
      if (out_path.empty()) {
        std::cout << c.to_text();
        std::cerr << line << '\n';
      } else {
        write_code(c, out_path);
        std::cout << line << '\n';
      }
      return kExitOk;
    }

    if (*classify_cmd) {
      LinearCode c = read_code(code_path);
      std::cout << params(c, classify(c)) << '\n';
      return kExitOk;
    }

    if (*deep) {
      LinearCode c = read_code(code_path);
      auto t = SyndromeTable::build(c);
      auto holes = enumerate_deep_holes(t, limit);
      const std::uint64_t count = deep_hole_count(t);
      if (csv) {
        std::cout << "vector,error_distance\n";
        for (auto& h : holes) std::cout << '"' << show(h.vector) << "\"," << h.error_distance << '\n';
      } else {
        std::cout << "rho=" << t.covering_radius() << " deep_holes=" << count << '\n';
        for (auto& h : holes) std::cout << show(h.vector) << '\n';
      }
      return kExitOk;
    }

    if (*crit) {
      EvalConfig cfg = ca.config();
      Poly f(cfg.field, parse_vec(f_coeffs));
      LinearCode c = esgrs(cfg, ca.k);
      Vec word = deep_hole_candidate(cfg, candidate_polynomial(cfg.field, ca.k, gkp1, gkm1, f), u_scalar);
      auto t = SyndromeTable::build(c);
      bool def = t.error_distance(word) == t.covering_radius();
      bool mds_ext = mds_extension_deep_hole_test(c, word);
      bool verdict;
      std::string which;
      if (gkp1 == 0) {
        which = to_string(Criterion::Class1);
        verdict = class1_is_deep_hole(cfg, ca.k, gkm1, f, u_scalar);
      } else {
        which = to_string(Criterion::Class2);
        verdict = class2_is_deep_hole(cfg, ca.k, gkp1, gkm1, f, u_scalar);
        auto fs = forbidden_set(cfg, ca.k, gkp1, cfg.field.sub(u_scalar, f.coeff(ca.k)));
        std::cout << "forbidden=" << show(Vec(fs.L.begin(), fs.L.end())) << " |L|=" << fs.L.size()
                  << " bound=" << fs.bound << '\n'
                  << "admissible=" << show(fs.admissible(cfg.field)) << '\n';
      }
      std::cout << "vector=" << show(word) << '\n'
                << which << '=' << verdict << ' ' << to_string(Criterion::MdsExtension) << '=' << mds_ext << ' '
                << to_string(Criterion::Definition) << '=' << def << '\n';
      return verdict == def && mds_ext == def ? kExitOk : kExitClaim;
    }

    if (*ext) {
      LinearCode c = read_code(code_path);
      Vec u = parse_vec(u_csv);
      LinearCode out = c;
      if (ext_kind == "deep-hole") {
        auto r = extend_by_deep_hole(c, u);
        std::cout << "base " << params(c, r.base_class) << '\n'
                  << "extended " << params(r.extended, r.extended_class) << '\n'
                  << "hypotheses_hold=" << r.hypotheses_hold << " nongrs_inherited=" << r.nongrs_inherited << '\n';
        for (auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
        out = r.extended;
      } else {
        out = ext_kind == "second" ? second_kind_extend(c, u) : dual_path_extend(c, u);
        std::cout << "extended " << params(out, classify(out)) << '\n';
      }
      if (!out_path.empty()) write_code(out, out_path);
      return kExitOk;
    }

    if (*alg) {
      EvalConfig cfg = aa.config();
      Algorithm1Options opts;
      opts.budget = budget;
      opts.seed = shuffle ? seed : 0;
      opts.g_kp1 = pin_kp1;
      opts.g_km1 = pin_km1;
      opts.u_scalar = pin_u;
      if (!pin_f.empty()) opts.f = Poly(cfg.field, parse_vec(pin_f));
      opts.classify = !no_classify;
      algorithm1(cfg, aa.k, opts, [&](const Algorithm1Output& o) {
        if (only == "mds" && o.advertised_tag != CodeTag::MDS) return true;
        if (only == "nmds" && o.advertised_tag != CodeTag::NMDS) return true;
        std::cout << result_json(o).dump() << '\n';
        return true;
      });
      return kExitOk;
    }

    if (*eq) {
      auto w = monomial_equivalent(read_code(path_a), read_code(path_b));
      if (!w.found) {
        std::cout << "NONE\n";
      } else {
        std::vector<std::size_t> perm = w.perm;
        std::cout << "perm=" << show(Vec(perm.begin(), perm.end())) << "\nscale=" << show(w.scale) << '\n';
      }
      return kExitOk;
    }

    if (*bench) {
      EvalConfig cfg = ba.config();
      LinearCode c = esgrs(cfg, ba.k);
      const std::size_t n = c.n(), k = c.k();
      const Field& f = cfg.field;
      auto t0 = std::chrono::steady_clock::now();
      auto table = SyndromeTable::build(c);
      std::uint64_t holes = deep_hole_count(table);
      double deep_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Elem> el(0, f.q() - 1);
      std::uint64_t tested = 0, accepted = 0, agree = 0, max_ops = 0, total_ops = 0;
      Vec u(n, 0);
      auto t1 = std::chrono::steady_clock::now();
      auto run = [&] {
        auto r = mkz_check(c, u);
        ++tested;
        accepted += r.verdict;
        max_ops = std::max(max_ops, r.ops_count);
        total_ops += r.ops_count;
        if (verify) agree += r.verdict == (classify(second_kind_extend(c, u)).tag == CodeTag::NMDS);
      };
      if (exhaustive) {
        while (true) {
          run();
          std::size_t i = 0;
          while (i < n && ++u[i] == f.q()) u[i++] = 0;
          if (i == n) break;
        }
      } else {
        for (std::uint64_t s = 0; s < samples; ++s) {
          for (auto& x : u) x = el(rng);
          run();
        }
      }
      double mkz_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
      std::cout << "n,k,q,u_tested,mkz_accepted,agree_classify,max_ops,mean_ops,bound_single,bound_exhaustive,"
                   "bound_exhaustive_dual,deep_holes,deep_hole_seconds,mkz_seconds\n";
      std::cout << n << ',' << k << ',' << f.q() << ',' << tested << ',' << accepted << ','
                << (verify ? std::to_string(agree) : std::string("")) << ',' << max_ops << ','
                << (tested ? static_cast<double>(total_ops) / static_cast<double>(tested) : 0.0) << ','
                << mkz_cost_bound(n, k, f.q(), false, false) << ',' << mkz_cost_bound(n, k, f.q(), false) << ','
                << mkz_cost_bound(n, k, f.q(), true) << ',' << holes << ',' << deep_s << ',' << mkz_s << '\n';
      return verify && agree != tested ? kExitClaim : kExitOk;
    }

    if (*rep) {
      std::vector<std::string> run = example == "all" ? reproduce_ids() : std::vector<std::string>{example};
      bool ok = true;
      for (const auto& id : run) {
        RunReport r = reproduce(id);
        std::cout << "# " << r.command << " (" << r.elapsed.count() << " s)\n";
        for (auto& [key, value] : r.inputs) std::cout << "# " << key << " = " << value << '\n';
        std::cout << "claim,expected,computed,result\n";
        for (auto& o : r.outcomes)
          std::cout << o.claim << ",\"" << o.expected << "\",\"" << o.computed << "\"," << (o.pass ? "PASS" : "FAIL")
                    << '\n';
        ok = ok && r.all_pass();
      }
      return ok ? kExitOk : kExitClaim;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
