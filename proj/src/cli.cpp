#include "selfsim/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>

#include "selfsim/factored_det.hpp"
#include "selfsim/matrix_io.hpp"
#include "selfsim/oracle.hpp"
#include "selfsim/pascal.hpp"
#include "selfsim/perturbation.hpp"

namespace selfsim::cli {

namespace {

Int parse_big(const std::string& s, const char* what) {
  try {
    Int n(s);
    return n;
  } catch (const std::invalid_argument&) {
    throw Error(std::string("invalid ") + what + ": '" + s + "'");
  }
}

// Determinant values print with an explicit sign for positive rationals
// ("+1"), which keeps goldens greppable; zero prints bare.
std::string signed_rat_str(const Rat& v) {
  if (rat_is_zero(v)) return "0";
  return (sgn(v) > 0 ? "+" : "") + v.get_str();
}

template <class T>
std::string signed_value_str(const T& v) {
  if constexpr (std::is_same_v<T, Rat>) {
    return signed_rat_str(v);
  } else if constexpr (std::is_same_v<T, RatFun>) {
    if (v.is_constant()) return signed_rat_str(v.constant_value());
    return v.str();
  } else {
    return ring_str(v);
  }
}

struct DegenerateOff {
  // Raised to reach exit code 1 when --perturb off meets a degenerate input.
  Degenerate inner;
};

template <class T>
void print_matrix(std::ostream& out, const SquareMat<T>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out << " ";
      out << ring_str(m(i, j));
    }
    out << "\n";
  }
}

void cmd_det(const AnyDefining& def, const Int& n, bool factored,
             bool perturb_auto, std::ostream& out, std::ostream& err) {
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d.tilde(0, 0))>;
        try {
          FactoredDet<T> f = det_selfsim(d, n);
          if (factored) {
            std::string line = factored_str(f);
            try {
              T v = det_expand(f);
              line += " = " + ring_str(v);
            } catch (const BitBudgetExceeded&) {
              err << "note: expansion exceeds the bit budget; "
                     "result stays factored\n";
            }
            out << line << "\n";
          } else {
            try {
              T v = det_expand(f);
              out << signed_value_str(v) << "\n";
            } catch (const BitBudgetExceeded&) {
              err << "note: expansion exceeds the bit budget; "
                     "printing factored form\n";
              out << factored_str(f) << "\n";
            }
          }
        } catch (const Degenerate& g) {
          if constexpr (std::is_same_v<T, Rat>) {
            if (!perturb_auto) throw DegenerateOff{g};
            err << "note: defining matrix is degenerate (leading "
                << g.minor_size << "x" << g.minor_size
                << " minor); routing through generic perturbation\n";
            PerturbedDefining p = perturb(d);
            FactoredDet<RatFun> lf;
            DigitCounts dc = digit_counts(n, d.base);
            for (std::size_t k = 0; k < p.lifted_diag.size(); ++k) {
              lf.factors.emplace_back(p.lifted_diag[k], dc.counts[k]);
            }
            if (factored) {
              std::string line = factored_str(lf);
              try {
                line += " = " + eval_lifted_at_zero(p.lifted_diag, dc).get_str();
              } catch (const BitBudgetExceeded&) {
                err << "note: the value at t = 0 exceeds the bit budget; "
                       "result stays factored (in t)\n";
              }
              out << line << "\n";
            } else {
              try {
                out << signed_rat_str(eval_lifted_at_zero(p.lifted_diag, dc))
                    << "\n";
              } catch (const BitBudgetExceeded&) {
                err << "note: the value at t = 0 exceeds the bit budget; "
                       "printing the lifted factored form\n";
                out << factored_str(lf) << "\n";
              }
            }
          } else {
            throw DegenerateOff{g};  // only ring q matrices can be lifted
          }
        }
      },
      def);
}

void cmd_ldu(const AnyDefining& def, std::ostream& out) {
  std::visit(
      [&](const auto& d) {
        auto f = ldu_defining(d);  // Degenerate propagates to exit code 1
        out << "L:\n";
        print_matrix(out, f.lower);
        out << "d:";
        for (const auto& v : f.diag) out << " " << ring_str(v);
        out << "\nU:\n";
        print_matrix(out, f.upper);
      },
      def);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    parts.push_back(s.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void cmd_bench(const AnyDefining& def, const std::string& n_list,
               bool with_oracle, std::ostream& out, std::ostream& err) {
  out << std::left << std::setw(14) << "n" << std::setw(12) << "fast_ms"
      << std::setw(12) << "oracle_ms" << std::setw(7) << "agree"
      << "value\n";
  for (const std::string& ns : split_list(n_list)) {
    Int n = parse_big(ns, "bench size");
    if (n < 1) throw Error("bench sizes must be >= 1");
    std::visit(
        [&](const auto& d) {
          using T = std::decay_t<decltype(d.tilde(0, 0))>;
          auto t0 = std::chrono::steady_clock::now();
          std::string value;
          FactoredDet<T> f;
          std::optional<Degenerate> degenerate;
          try {
            f = det_selfsim(d, n);
          } catch (const Degenerate& g) {
            degenerate = g;
          }
          Rat perturbed_value;
          if (degenerate) {
            if constexpr (std::is_same_v<T, Rat>) {
              perturbed_value = det_via_perturbation(d, n);
              value = signed_rat_str(perturbed_value);
            } else {
              throw DegenerateOff{*degenerate};
            }
          } else {
            try {
              T v = det_expand(f);
              value = signed_value_str(v);
            } catch (const BitBudgetExceeded&) {
              value = "(factored) " + factored_str(f);
            }
          }
          double fast_ms = ms_since(t0);

          std::string oracle_ms = "-";
          std::string agree = "-";
          if (with_oracle) {
            if (n <= Int(static_cast<unsigned long>(kDenseCap))) {
              std::size_t un = mpz_get_ui(n.get_mpz_t());
              auto t1 = std::chrono::steady_clock::now();
              T od = oracle::det_fraction_free(dense(d, un));
              double oms = ms_since(t1);
              std::ostringstream fmt;
              fmt << std::fixed << std::setprecision(3) << oms;
              oracle_ms = fmt.str();
              if (degenerate) {
                if constexpr (std::is_same_v<T, Rat>) {
                  agree = (od == perturbed_value) ? "yes" : "NO";
                }
              } else {
                try {
                  agree = (od == det_expand(f)) ? "yes" : "NO";
                } catch (const BitBudgetExceeded&) {
                  agree = "?";
                }
              }
            } else {
              err << "note: oracle skipped for n = " << n.get_str()
                  << " (dense cap " << kDenseCap << ")\n";
            }
          }
          std::ostringstream fmt;
          fmt << std::fixed << std::setprecision(3) << fast_ms;
          out << std::left << std::setw(14) << n.get_str() << std::setw(12)
              << fmt.str() << std::setw(12) << oracle_ms << std::setw(7)
              << agree << value << "\n";
        },
        def);
  }
}

PascalKind parse_kind(const std::string& s) {
  if (s == "binom-lift") return PascalKind::BinomLift;
  if (s == "legendre") return PascalKind::Legendre;
  if (s == "lower") return PascalKind::Lower;
  if (s == "lower-signed") return PascalKind::LowerSigned;
  throw Error("unknown pascal kind '" + s + "'");
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact b-self-similar matrix toolkit"};
  app.require_subcommand(1);

  std::string def_path, n_str, s_str, t_str, n_list, kind_str = "binom-lift",
                                                     ring_str_ = "q",
                                                     perturb_str = "auto";
  std::uint64_t prime = 2;
  int base = 2, block = 1;
  std::string smax_str = "0", tmax_str = "0";
  bool factored = false, with_oracle = false, check = false;

  auto* det = app.add_subcommand("det", "determinant of M(n)");
  det->add_option("--def", def_path, "defining matrix file")->required();
  det->add_option("--n", n_str, "matrix size")->required();
  det->add_flag("--factored", factored, "print the factored form");
  det->add_option("--perturb", perturb_str, "auto|off (default auto)")
      ->check(CLI::IsMember({"auto", "off"}));

  auto* ldu = app.add_subcommand("ldu", "seed LDU factors");
  ldu->add_option("--def", def_path)->required();

  auto* inv = app.add_subcommand("inv", "exact inverse of M(n)");
  inv->add_option("--def", def_path)->required();
  inv->add_option("--n", n_str)->required();

  auto* ent = app.add_subcommand("entry", "single entry M(s,t)");
  ent->add_option("--def", def_path)->required();
  ent->add_option("--s", s_str)->required();
  ent->add_option("--t", t_str)->required();

  auto* dns = app.add_subcommand("dense", "materialize M(n)");
  dns->add_option("--def", def_path)->required();
  dns->add_option("--n", n_str)->required();

  auto* gen = app.add_subcommand("gen", "emit defining matrix files");
  auto* gen_pascal = gen->add_subcommand("pascal", "Pascal-triangle seeds");
  gen_pascal->add_option("--p", prime, "prime")->required();
  gen_pascal
      ->add_option("--kind", kind_str,
                   "binom-lift|legendre|lower|lower-signed")
      ->required();
  gen_pascal->add_option("--ring", ring_str_, "q|gf (default q)")
      ->check(CLI::IsMember({"q", "gf"}));

  auto* tm = app.add_subcommand("thue-morse", "closed-form checks");
  tm->add_option("--check", n_str, "verify up to N")->required();

  auto* mu = app.add_subcommand("mu", "digit-sum sign vector");
  mu->add_option("--base", base)->required();
  mu->add_option("--n", n_str)->required();
  mu->add_flag("--check", check, "verify the defining identities");

  auto* scan = app.add_subcommand("scan-minors", "consecutive minor scan");
  scan->add_option("--def", def_path)->required();
  scan->add_option("--l", block, "block size")->required();
  scan->add_option("--smax", smax_str)->required();
  scan->add_option("--tmax", tmax_str)->required();

  auto* orc = app.add_subcommand("oracle", "brute-force reference paths");
  auto* orc_det = orc->add_subcommand("det", "dense fraction-free determinant");
  orc_det->add_option("--def", def_path)->required();
  orc_det->add_option("--n", n_str)->required();

  auto* bench = app.add_subcommand("bench", "fast path vs dense oracle");
  bench->add_option("--def", def_path)->required();
  bench->add_option("--n-list", n_list, "comma-separated sizes")->required();
  bench->add_flag("--oracle", with_oracle, "also run the dense oracle");

  try {
    std::vector<std::string> argv(args);
    argv.insert(argv.begin(), "selfsim");
    std::vector<const char*> cargv;
    for (const auto& a : argv) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (det->parsed()) {
    AnyDefining d = load_defining_file(def_path);
    Int n = parse_big(n_str, "n");
    if (n < 1) throw Error("n must be >= 1");
    cmd_det(d, n, factored, perturb_str == "auto", out, err);
    return 0;
  }
  if (ldu->parsed()) {
    cmd_ldu(load_defining_file(def_path), out);
    return 0;
  }
  if (inv->parsed()) {
    AnyDefining d = load_defining_file(def_path);
    Int n = parse_big(n_str, "n");
    if (n < 1 || n > Int(static_cast<unsigned long>(kDenseCap))) {
      throw SizeLimit("inv: n must be in [1, " + std::to_string(kDenseCap) + "]");
    }
    std::visit(
        [&](const auto& dd) {
          print_matrix(out, inverse_dense(dd, mpz_get_ui(n.get_mpz_t())));
        },
        d);
    return 0;
  }
  if (ent->parsed()) {
    AnyDefining d = load_defining_file(def_path);
    Int s = parse_big(s_str, "s");
    Int t = parse_big(t_str, "t");
    if (s < 0 || t < 0) throw Error("indices must be >= 0");
    std::visit(
        [&](const auto& dd) { out << ring_str(entry(dd, s, t)) << "\n"; }, d);
    return 0;
  }
  if (dns->parsed()) {
    AnyDefining d = load_defining_file(def_path);
    Int n = parse_big(n_str, "n");
    if (n < 1) throw Error("n must be >= 1");
    if (n > Int(static_cast<unsigned long>(kDenseCap))) {
      throw SizeLimit("dense size exceeds cap " + std::to_string(kDenseCap));
    }
    std::visit(
        [&](const auto& dd) {
          print_matrix(out, dense(dd, mpz_get_ui(n.get_mpz_t())));
        },
        d);
    return 0;
  }
  if (gen_pascal->parsed()) {
    PascalKind kind = parse_kind(kind_str);
    AnyDefining d = ring_str_ == "gf"
                        ? AnyDefining(pascal_defining_gf(prime, kind))
                        : AnyDefining(pascal_defining(prime, kind));
    out << "# pascal p=" << prime << " kind=" << kind_str << "\n"
        << serialize_defining(d);
    return 0;
  }
  if (tm->parsed()) {
    Int n = parse_big(n_str, "N");
    if (n < 1 || !mpz_fits_ulong_p(n.get_mpz_t())) {
      throw Error("thue-morse --check expects 1 <= N <= 2^64");
    }
    unsigned long limit = mpz_get_ui(n.get_mpz_t());
    ThueMorseStream stream;
    for (unsigned long k = 0; k < limit; ++k) {
      int s = stream.next();
      int rec = (k % 2 == 0) ? thue_morse(Int(k / 2))
                             : 1 - thue_morse(Int(k / 2));
      int par = thue_morse(Int(k));
      if (s != rec || s != par) {
        err << "FAIL at k=" << k << "\n";
        return 3;
      }
    }
    out << "thue-morse: recursion and digit-sum parity agree for k < "
        << limit << ": OK\n";
    Defining<Rat> p2 = pascal_defining(2, PascalKind::BinomLift);
    unsigned long det_limit = std::min(limit, 4096ul);
    for (unsigned long k = 1; k <= det_limit; ++k) {
      Rat fast = det_expand(det_selfsim(p2, Int(k)));
      if (fast != Rat(det_pascal2_closed(Int(k)))) {
        err << "FAIL: closed form mismatch at n=" << k << "\n";
        return 3;
      }
    }
    out << "pascal p=2 determinant closed forms agree for n <= " << det_limit
        << ": OK\n";
    return 0;
  }
  if (mu->parsed()) {
    Int n = parse_big(n_str, "n");
    if (base < 2) throw Error("mu: base must be >= 2");
    if (n < 1 || n > Int(static_cast<unsigned long>(kDenseCap))) {
      throw SizeLimit("mu: n must be in [1, " + std::to_string(kDenseCap) + "]");
    }
    std::size_t len = mpz_get_ui(n.get_mpz_t());
    MuVector v = mu_vector(base, len);
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
      if (i) out << " ";
      out << v.entries[i];
    }
    out << "\n";
    if (check) {
      Defining<Rat> l = binomial_lower_defining(base);
      SquareMat<Rat> ln = dense(l, len);
      std::vector<Rat> muq;
      muq.reserve(len);
      for (int e : v.entries) muq.emplace_back(e);
      std::vector<Rat> prod = mul_vec(ln, muq);
      bool ok = rat_is_one(prod[0]);
      for (std::size_t i = 1; i < prod.size(); ++i) ok = ok && rat_is_zero(prod[i]);
      if (!ok) {
        err << "FAIL: L(n) * mu != e0\n";
        return 3;
      }
      out << "L(n) * mu = e0: OK\n";
      if (base % 2 == 1) {
        auto [even_sum, odd_sum] = mu_partition_sums(base, n);
        std::vector<int> nu = digits(n, base).digits;
        long digit_sum = 0;
        for (int d : nu) digit_sum += d;
        Int expect(1);
        expect <<= (digit_sum - 1);
        if (even_sum != expect || odd_sum != expect) {
          err << "FAIL: partition sums " << even_sum.get_str() << ", "
              << odd_sum.get_str() << " != 2^" << (digit_sum - 1) << "\n";
          return 3;
        }
        out << "partition sums = 2^" << (digit_sum - 1) << " each: OK\n";
      }
    }
    return 0;
  }
  if (scan->parsed()) {
    AnyDefining d = load_defining_file(def_path);
    Int smax = parse_big(smax_str, "smax");
    Int tmax = parse_big(tmax_str, "tmax");
    if (smax < 0 || tmax < 0) throw Error("offsets must be >= 0");
    std::visit(
        [&](const auto& dd) {
          auto report = oracle::minor_scan(dd, block, smax, tmax);
          for (const auto& [s, t, v] : report.violations) {
            out << "violation s=" << s.get_str() << " t=" << t.get_str()
                << " det=" << ring_str(v) << "\n";
          }
          out << "scanned l=" << block << " blocks with s<=" << smax.get_str()
              << ", t<=" << tmax.get_str() << ": " << report.violations.size()
              << " violations\n";
        },
        d);
    return 0;
  }
  if (orc_det->parsed()) {
    AnyDefining d = load_defining_file(def_path);
    Int n = parse_big(n_str, "n");
    if (n < 1) throw Error("n must be >= 1");
    if (n > Int(static_cast<unsigned long>(kDenseCap))) {
      throw SizeLimit("oracle det size exceeds cap " + std::to_string(kDenseCap));
    }
    std::visit(
        [&](const auto& dd) {
          auto v = oracle::det_fraction_free(dense(dd, mpz_get_ui(n.get_mpz_t())));
          out << signed_value_str(v) << "\n";
        },
        d);
    return 0;
  }
  if (bench->parsed()) {
    cmd_bench(load_defining_file(def_path), n_list, with_oracle, out, err);
    return 0;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const DegenerateOff& e) {
    err << "error: " << e.inner.what()
        << " (use --perturb auto on a ring q matrix to evaluate anyway)\n";
    return 1;
  } catch (const Degenerate& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NegativePoleOrder& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const PerturbationFailed& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace selfsim::cli
