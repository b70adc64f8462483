#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "radokit/columns_condition.hpp"
#include "radokit/deuber.hpp"
#include "radokit/progression_properties.hpp"
#include "radokit/progressions.hpp"
#include "radokit/rado_search.hpp"
#include "radokit/text_io.hpp"
#include "radokit/uniformity.hpp"
#include "selftest.hpp"

namespace radokit::cli {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt_rational(const Rational& q) {
  std::ostringstream ss;
  ss << q.get_num() << '/' << q.get_den();
  return ss.str();
}

template <typename Range>
std::string join(const Range& values, char sep = ',') {
  std::ostringstream ss;
  bool first = true;
  for (const auto& v : values) {
    if (!first) ss << sep;
    ss << v;
    first = false;
  }
  return ss.str();
}

MpcParams parse_mpc(const std::string& text) {
  const auto v = parse_int64_list(text);
  if (v.size() != 3) throw InvalidArgument("--mpc expects m,p,c");
  MpcParams p{v[0], v[1], v[2]};
  p.validate();
  return p;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

ModFunction read_function(const std::string& path) {
  auto in = open_input(path);
  LineReader reader(in);
  const std::string header = reader.expect("modulus N");
  const auto nv = parse_int64s(header, reader.line_number());
  if (nv.size() != 1 || nv[0] < 1) throw ParseError(reader.line_number(), "N must be positive");
  std::vector<Complex> values;
  for (std::int64_t i = 0; i < nv[0]; ++i) {
    const std::string line = reader.expect("value \"re im\"");
    std::istringstream ss(line);
    double re = 0.0;
    double im = 0.0;
    std::string extra;
    if (!(ss >> re >> im) || (ss >> extra)) {
      throw ParseError(reader.line_number(), "expected \"re im\"");
    }
    values.emplace_back(re, im);
  }
  if (reader.next()) throw ParseError(reader.line_number(), "trailing data after function values");
  return ModFunction(nv[0], std::move(values));
}

void print_search(std::ostream& out, const SearchResult& r) {
  out << "kind=" << to_string(r.kind) << " value=" << r.value << '\n';
  out << "certificate_n=" << r.certificate.n << '\n';
  out << "colouring=" << join(r.certificate.assignment) << '\n';
}

int search_exit(const SearchResult& r) {
  return r.kind == ResultKind::Exact ? kExitOk : kExitInconclusive;
}

ModFunction random_bounded(std::int64_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::vector<Complex> v;
  v.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) v.push_back(std::polar(radius(rng), angle(rng)));
  return ModFunction(n, std::move(v));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"radokit: partition regularity, Rado numbers, Deuber sets and Gowers norms"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  unsigned threads = 1;
  app.add_option("--seed", seed, "Seed for every randomized suite")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for search and norm kernels")
      ->capture_default_str()
      ->check(CLI::Range(1u, 256u));

  // regcheck
  auto* regcheck = app.add_subcommand("regcheck", "Decide partition regularity via the columns condition");
  std::string reg_matrix;
  std::string reg_out;
  std::string reg_verify;
  std::size_t reg_cap = kDefaultColumnCap;
  regcheck->add_option("--matrix", reg_matrix, "Matrix file")->required();
  regcheck->add_option("--witness-out", reg_out, "Write the witness to this file");
  regcheck->add_option("--verify", reg_verify, "Verify a witness file against the matrix");
  regcheck->add_option("--cap", reg_cap, "Maximum column count for the search")->capture_default_str();

  // mpc
  auto* mpc = app.add_subcommand("mpc", "Elements of an (m,p,c)-set and solution extraction");
  std::string mpc_params;
  std::string mpc_gen;
  std::string mpc_matrix;
  mpc->add_option("--mpc", mpc_params, "Parameters m,p,c");
  mpc->add_option("--generator", mpc_gen, "Generator s_0,...,s_m")->required();
  mpc->add_option("--matrix", mpc_matrix, "Matrix file; derives p,c from its witness and extracts a solution");

  // rado
  auto* rado = app.add_subcommand("rado", "Exact Rado number by exhaustive search");
  std::string rado_matrix;
  int rado_colours = 2;
  std::int64_t rado_max = 100;
  std::string rado_mode = "all";
  std::string rado_cert;
  std::uint64_t rado_nodes = 0;
  rado->add_option("--matrix", rado_matrix, "Matrix file")->required();
  rado->add_option("--colours", rado_colours, "Number of colours r")->required();
  rado->add_option("--max-n", rado_max, "Largest N searched")->capture_default_str();
  rado->add_option("--mode", rado_mode, "all|nonconstant|injective")->capture_default_str();
  rado->add_option("--certificate", rado_cert, "Write the certificate colouring here");
  rado->add_option("--node-limit", rado_nodes, "Abort after this many search nodes (0 = none)");

  // mono
  auto* mono = app.add_subcommand("mono", "Look for a monochromatic kernel vector");
  std::string mono_matrix;
  std::string mono_colouring;
  std::string mono_mode = "all";
  mono->add_option("--matrix", mono_matrix, "Matrix file")->required();
  mono->add_option("--colouring", mono_colouring, "Colouring file")->required();
  mono->add_option("--mode", mono_mode, "all|nonconstant|injective")->capture_default_str();

  // threshold
  auto* threshold = app.add_subcommand("threshold", "Least N forcing a monochromatic (m,p,c)-set");
  std::string thr_params;
  int thr_colours = 2;
  std::int64_t thr_max = 100;
  std::string thr_cert;
  threshold->add_option("--mpc", thr_params, "Parameters m,p,c")->required();
  threshold->add_option("--colours", thr_colours, "Number of colours r")->required();
  threshold->add_option("--max-n", thr_max, "Largest N searched")->capture_default_str();
  threshold->add_option("--certificate", thr_cert, "Write the avoiding colouring here");

  // gowers
  auto* gowers = app.add_subcommand("gowers", "Gowers U^k norm of a function on Z/NZ");
  std::string gow_file;
  int gow_k = 2;
  gowers->add_option("--function", gow_file, "File: N, then N lines \"re im\"")->required();
  gowers->add_option("--k", gow_k, "Order k (1..4)")->capture_default_str();

  // qcount
  auto* qcount = app.add_subcommand("qcount", "Count (m,p,c)-configurations over progressions");
  std::string q_params;
  std::string q_set;
  std::vector<std::string> q_progs;
  bool q_gap = false;
  qcount->add_option("--mpc", q_params, "Parameters m,p,c (c > p)")->required();
  qcount->add_option("--set", q_set, "Comma-separated elements of A")->required();
  qcount->add_option("--prog", q_progs, "Progression centre,difference,radius (repeat m+1 times)")
      ->required();
  qcount->add_flag("--gap", q_gap, "Also report the factorization gap");

  // gvn
  auto* gvn = app.add_subcommand("gvn", "Probe |Lambda| <= min U^k norm for random bounded functions");
  std::string gvn_forms;
  std::int64_t gvn_n = 31;
  int gvn_k = 2;
  int gvn_trials = 10;
  std::vector<std::string> gvn_functions;
  gvn->add_option("--forms", gvn_forms, "Matrix file whose rows are the forms psi_i")->required();
  gvn->add_option("--n", gvn_n, "Prime modulus N")->capture_default_str();
  gvn->add_option("--k", gvn_k, "Norm order k")->capture_default_str();
  gvn->add_option("--trials", gvn_trials, "Random trials when no functions are given")
      ->capture_default_str();
  gvn->add_option("--function", gvn_functions, "Function files, one per form");

  // prog-props
  auto* props = app.add_subcommand("prog-props", "Randomized check of fractional-dilate properties");
  std::int64_t props_instances = 1000;
  std::int64_t props_radius = 1000;
  props->add_option("--instances", props_instances, "Random instances")->capture_default_str();
  props->add_option("--max-radius", props_radius, "Largest radius")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitError;
  }

  try {
    if (*regcheck) {
      const IntegerMatrix a = read_matrix_file(reg_matrix);
      if (!reg_verify.empty()) {
        auto in = open_input(reg_verify);
        const Witness w = read_witness(in);
        const bool ok = verify_witness(a, w);
        out << "verified=" << (ok ? "true" : "false") << '\n';
        return ok ? kExitOk : kExitInconclusive;
      }
      const auto w = find_witness(a, reg_cap);
      out << "regular=" << (w ? "true" : "false") << '\n';
      if (!w) return kExitOk;
      const std::size_t predicted = predicted_blocks(*w);
      const MpcParams p = params_from_witness(*w);
      out << "t=" << w->blocks() << " one_plus_rank=" << predicted
          << " rank_agrees=" << (predicted == w->blocks() ? "true" : "false") << '\n';
      out << "m=" << p.m << " p=" << p.p << " c=" << p.c << '\n';
      for (std::size_t j = 0; j < w->blocks(); ++j) {
        std::vector<std::size_t> one_based;
        for (std::size_t i : w->partition.block(j)) one_based.push_back(i + 1);
        out << "block_" << (j + 1) << '=' << join(one_based, ' ') << '\n';
      }
      for (std::size_t i = 0; i < w->alpha.rows(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < w->alpha.cols(); ++j) row.push_back(fmt_rational(w->alpha(i, j)));
        out << "alpha_" << (i + 1) << '=' << join(row, ' ') << '\n';
      }
      if (!reg_out.empty()) {
        std::ofstream f(reg_out);
        if (!f) throw Error("cannot write '" + reg_out + "'");
        write_witness(f, *w);
      }
      return kExitOk;
    }

    if (*mpc) {
      const Generator s = parse_int64_list(mpc_gen);
      if (s.empty()) throw InvalidArgument("--generator must be non-empty");
      MpcParams params;
      std::optional<IntegerMatrix> a;
      std::optional<Witness> w;
      if (!mpc_matrix.empty() && !mpc_params.empty()) {
        throw InvalidArgument("mpc takes --mpc or --matrix, not both");
      }
      if (!mpc_matrix.empty()) {
        a = read_matrix_file(mpc_matrix);
        w = find_witness(*a);
        if (!w) {
          out << "regular=false\n";
          return kExitInconclusive;
        }
        params = params_from_witness(*w);
        out << "witness_m=" << params.m << " p=" << params.p << " c=" << params.c << '\n';
        params.m = static_cast<std::int64_t>(s.size()) - 1;
      } else if (!mpc_params.empty()) {
        params = parse_mpc(mpc_params);
      } else {
        throw InvalidArgument("mpc needs --mpc or --matrix");
      }
      const MpcSet set = mpc_elements(params, s);
      out << "m=" << params.m << " p=" << params.p << " c=" << params.c << '\n';
      out << "elements=" << join(set.elements) << '\n';
      out << "valid=" << (set.valid ? "true" : "false") << '\n';
      if (a && set.valid && s.size() >= w->blocks()) {
        const IntegerVector x = extract_solution(*a, *w, s);
        bool inside = true;
        for (const auto& v : x) inside = inside && v.fits_slong_p() && set.contains(v.get_si());
        out << "solution=" << join(x) << '\n';
        out << "in_kernel=" << (is_zero(std::span<const Integer>(multiply(*a, x))) ? "true" : "false")
            << " in_set=" << (inside ? "true" : "false") << '\n';
      }
      return kExitOk;
    }

    if (*rado) {
      const IntegerMatrix a = read_matrix_file(rado_matrix);
      const SolutionMode mode = parse_solution_mode(rado_mode);
      const SearchResult r =
          rado_number(a, rado_colours, rado_max, mode, SearchOptions{threads, rado_nodes});
      print_search(out, r);
      if (!rado_cert.empty()) {
        std::ofstream f(rado_cert);
        if (!f) throw Error("cannot write '" + rado_cert + "'");
        write_colouring(f, r.certificate);
      }
      return search_exit(r);
    }

    if (*mono) {
      const IntegerMatrix a = read_matrix_file(mono_matrix);
      auto in = open_input(mono_colouring);
      const Colouring c = read_colouring(in);
      const auto hit = find_mono_solution(a, c, parse_solution_mode(mono_mode));
      if (!hit) {
        out << "result=none\n";
      } else {
        out << "result=found colour=" << hit->colour << " x=" << join(hit->x) << '\n';
      }
      return kExitOk;
    }

    if (*threshold) {
      const MpcParams params = parse_mpc(thr_params);
      const SearchResult r = mpc_threshold(params, thr_colours, thr_max, SearchOptions{threads, 0});
      print_search(out, r);
      if (!thr_cert.empty()) {
        std::ofstream f(thr_cert);
        if (!f) throw Error("cannot write '" + thr_cert + "'");
        write_colouring(f, r.certificate);
      }
      return search_exit(r);
    }

    if (*gowers) {
      const ModFunction f = read_function(gow_file);
      out << "N=" << f.modulus() << " k=" << gow_k << '\n';
      out << "norm=" << fmt_double(gowers_norm(f, gow_k, threads)) << '\n';
      return kExitOk;
    }

    if (*qcount) {
      const MpcParams params = parse_mpc(q_params);
      const IntegerSet a(parse_int64_list(q_set));
      std::vector<Progression> ps;
      for (const auto& text : q_progs) {
        const auto v = parse_int64_list(text);
        if (v.size() != 3) throw InvalidArgument("--prog expects centre,difference,radius");
        ps.push_back(Progression::make(v[0], v[1], v[2]));
      }
      const Rational q = q_count(a, params, ps);
      out << "q=" << fmt_rational(q) << " q_real=" << fmt_double(q.get_d()) << '\n';
      if (q_gap) {
        const FactorizationGap g = factorization_gap(a, params, ps);
        out << "q_prev=" << fmt_rational(g.q_prev) << " alpha=" << fmt_rational(g.alpha) << '\n';
        out << "exponent=" << g.level_exponent << " predicted=" << fmt_rational(g.predicted)
            << " gap=" << fmt_rational(g.gap) << " gap_real=" << fmt_double(g.gap.get_d()) << '\n';
        out << "exponent_all=" << g.full_exponent
            << " predicted_all=" << fmt_rational(g.predicted_all)
            << " gap_all=" << fmt_rational(g.gap_all)
            << " gap_all_real=" << fmt_double(g.gap_all.get_d()) << '\n';
      }
      return kExitOk;
    }

    if (*gvn) {
      const LinearSystemMap psi = LinearSystemMap::from_matrix(read_matrix_file(gvn_forms));
      out << "pairwise_independent=" << (pairwise_independent(psi) ? "true" : "false") << '\n';
      if (!gvn_functions.empty()) {
        std::vector<ModFunction> fs;
        for (const auto& path : gvn_functions) fs.push_back(read_function(path));
        const CountReport rep = gvn_report(psi, fs, gvn_k, gvn_n, threads);
        std::vector<std::string> norms;
        for (double v : rep.norms) norms.push_back(fmt_double(v));
        out << "lambda_abs=" << fmt_double(rep.lambda_abs) << '\n';
        out << "norms=" << join(norms) << '\n';
        out << "slack=" << fmt_double(rep.slack) << '\n';
        return kExitOk;
      }
      std::mt19937_64 rng(seed);
      int violations = 0;
      double min_slack = 0.0;
      for (int t = 0; t < gvn_trials; ++t) {
        std::vector<ModFunction> fs;
        for (std::size_t i = 0; i < psi.forms(); ++i) fs.push_back(random_bounded(gvn_n, rng));
        const CountReport rep = gvn_report(psi, fs, gvn_k, gvn_n, threads);
        if (t == 0 || rep.slack < min_slack) min_slack = rep.slack;
        if (rep.slack < -1e-9) {
          ++violations;
          out << "violation trial=" << t << " slack=" << fmt_double(rep.slack) << '\n';
        }
      }
      out << "trials=" << gvn_trials << " violations=" << violations
          << " min_slack=" << fmt_double(min_slack) << '\n';
      return violations == 0 ? kExitOk : kExitInconclusive;
    }

    if (*props) {
      const auto outcomes = run_progression_suite(
          ProgressionSuiteConfig{seed, props_instances, props_radius});
      bool all = true;
      for (const auto& o : outcomes) {
        all = all && o.passed();
        out << "property=" << o.name << " cases=" << o.cases << " failures=" << o.failures
            << " status=" << (o.passed() ? "pass" : "fail") << '\n';
        if (!o.first_failure.empty()) out << "first_failure=" << o.first_failure << '\n';
      }
      return all ? kExitOk : kExitInconclusive;
    }

    if (*selftest) {
      return run_selftest(SelftestOptions{seed, threads}, out) ? kExitOk : kExitInconclusive;
    }
  } catch (const ParseError& e) {
    err << "error: parse error at " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace radokit::cli
