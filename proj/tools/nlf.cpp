// nlf: command-line front end for the nlfield library.
//
// Exit codes: 0 success, 1 a verification suite failed, 2 usage or input error.

#include "nlfield/arith_series.hpp"
#include "nlfield/characters.hpp"
#include "nlfield/field_algebra.hpp"
#include "nlfield/flows.hpp"
#include "nlfield/galois_reps.hpp"
#include "nlfield/io.hpp"
#include "nlfield/modular.hpp"
#include "nlfield/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlf::io::json;

struct RunConfig {
  std::size_t N = 100;
  nlf::u64 P = 100;
  double tol = 1e-10;
  unsigned precision_cap = nlf::kDefaultPrecisionCap;
  std::uint64_t seed = 1;
  std::string format = "json";
  bool seed_header = true;
  std::string output;
  bool N_given = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) nlf::fail(nlf::Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    nlf::fail(nlf::Errc::ParseError, path + ": " + e.what());
  }
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::string command) : cfg_(cfg), command_(std::move(command)) {}

  void json_out(json body) const {
    if (cfg_.seed_header) {
      json out{{"header", header()}};
      for (auto& [k, v] : body.items()) out[k] = v;
      body = std::move(out);
    }
    write(body.dump(2) + "\n");
  }

  void csv_out(const std::string& body) const {
    std::string text;
    if (cfg_.seed_header) text = "# " + header().dump() + "\n";
    write(text + body);
  }

  template <class C>
  void series_out(const nlf::ArithSeries<C>& f) const {
    if (cfg_.format == "csv") {
      csv_out(nlf::io::series_to_csv(f));
      return;
    }
    json rows = json::array();
    for (std::size_t n = 1; n <= f.N(); ++n) {
      json row = json::array({n});
      for (auto& part : nlf::io::coeff_pair(f[n])) row.push_back(part);
      rows.push_back(std::move(row));
    }
    json_out({{"domain", nlf::coeff_traits<C>::name}, {"N", f.N()}, {"coeffs", rows}});
  }

  void cusp_out(const nlf::CuspFormCoeffs& f) const {
    if (cfg_.format == "json") {
      json a = json::array();
      for (const auto& v : f.a) a.push_back(v.get_str());
      json_out({{"weight", f.weight}, {"N", f.N()}, {"a", a}});
      return;
    }
    csv_out(nlf::io::cusp_to_csv(f));
  }

 private:
  json header() const {
    return json{{"command", command_}, {"seed", cfg_.seed}, {"N", cfg_.N}, {"P", cfg_.P}, {"tol", cfg_.tol},
                {"precision_cap", cfg_.precision_cap}};
  }

  void write(const std::string& text) const {
    if (cfg_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(cfg_.output);
    if (!out) nlf::fail(nlf::Errc::ParseError, "cannot write " + cfg_.output);
    out << text;
  }

  const RunConfig& cfg_;
  std::string command_;
};

template <class A, class B, class Fn>
auto same_domain(const A& a, const B& b, Fn&& fn) {
  return std::visit(
      [&](const auto& x, const auto& y) -> decltype(fn(x, x)) {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return fn(x, y);
        } else {
          nlf::fail(nlf::Errc::DomainUnsupported, "operands have different coefficient domains; promote explicitly");
        }
      },
      a, b);
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      out.push_back(std::stod(cell));
    } catch (const std::logic_error&) {
      nlf::fail(nlf::Errc::ParseError, "malformed flow time '" + text + "'");
    }
  }
  return out;
}

nlf::AlgElem<nlf::Complex64> to_complex(const nlf::io::AnyAlgElem& f) {
  return std::visit([](const auto& x) { return nlf::promote<nlf::Complex64>(x); }, f);
}

// -- subcommand registration -------------------------------------------------------

void add_algebra(CLI::App& app, RunConfig& cfg, std::function<void()>& action) {
  auto* alg = app.add_subcommand("algebra", "field algebra operations on JSON elements");
  alg->require_subcommand(1);

  auto* mul = alg->add_subcommand("mul", "Cauchy or Dirichlet product of two elements");
  static std::string op = "cauchy", a_path, b_path;
  mul->add_option("--op", op, "cauchy|dirichlet")->check(CLI::IsMember({"cauchy", "dirichlet"}));
  mul->add_option("a", a_path)->required();
  mul->add_option("b", b_path)->required();
  mul->callback([&cfg, &action] {
    action = [&cfg] {
      const auto a = nlf::io::algelem_from_json(read_json(a_path));
      const auto b = nlf::io::algelem_from_json(read_json(b_path));
      const json out = same_domain(a, b, [](const auto& x, const auto& y) {
        return nlf::io::algelem_to_json(op == "cauchy" ? nlf::cauchy_product(x, y) : nlf::dirichlet_product(x, y));
      });
      Emitter(cfg, "algebra mul").json_out(out);
    };
  });

  static std::string single;
  auto* tr = alg->add_subcommand("trace", "trace functional T(f)");
  tr->add_option("elem", single)->required();
  tr->callback([&cfg, &action] {
    action = [&cfg] {
      const auto f = nlf::io::algelem_from_json(read_json(single));
      const json t = std::visit([](const auto& x) { return nlf::io::coeff_pair(nlf::trace_functional(x)); }, f);
      Emitter(cfg, "algebra trace").json_out({{"trace", t}});
    };
  });

  auto* norm = alg->add_subcommand("normalize", "rescale to trace one");
  norm->add_option("elem", single)->required();
  norm->callback([&cfg, &action] {
    action = [&cfg] {
      const auto f = nlf::io::algelem_from_json(read_json(single));
      const json out = std::visit([](const auto& x) { return nlf::io::algelem_to_json(nlf::normalize_z1(x)); }, f);
      Emitter(cfg, "algebra normalize").json_out(out);
    };
  });

  auto* grade = alg->add_subcommand("grade", "split by exponent sign vectors");
  grade->add_option("elem", single)->required();
  grade->callback([&cfg, &action] {
    action = [&cfg] {
      const auto f = nlf::io::algelem_from_json(read_json(single));
      json out = std::visit(
          [&](const auto& x) {
            const auto g = nlf::grade(x, cfg.precision_cap);
            json comps = json::array();
            for (const auto& [theta, part] : g.components) {
              comps.push_back({{"sign", theta.to_string()}, {"element", nlf::io::algelem_to_json(part)}});
            }
            return json{{"constant", nlf::io::coeff_pair(g.constant)}, {"components", comps}};
          },
          f);
      Emitter(cfg, "algebra grade").json_out(out);
    };
  });

  static std::size_t sigma = 1;
  auto* gal = alg->add_subcommand("galois", "apply an automorphism to the exponents");
  gal->add_option("--sigma", sigma, "automorphism index (0 is the identity)");
  gal->add_option("elem", single)->required();
  gal->callback([&cfg, &action] {
    action = [&cfg] {
      const auto f = nlf::io::algelem_from_json(read_json(single));
      const json out = std::visit([](const auto& x) { return nlf::io::algelem_to_json(nlf::galois_act(sigma, x)); }, f);
      Emitter(cfg, "algebra galois").json_out(out);
    };
  });

  static std::string mode = "cauchy", alpha_text = "0";
  auto* shift = alg->add_subcommand("shift", "bilateral shift S_alpha or Dirichlet shift T_alpha");
  shift->add_option("--mode", mode)->check(CLI::IsMember({"cauchy", "dirichlet"}));
  shift->add_option("--alpha", alpha_text, "exponent as JSON, e.g. '[\"1\",\"1/2\"]'");
  shift->add_option("elem", single)->required();
  shift->callback([&cfg, &action] {
    action = [&cfg] {
      const auto f = nlf::io::algelem_from_json(read_json(single));
      json alpha_json;
      try {
        alpha_json = json::parse(alpha_text);
      } catch (const json::parse_error&) {
        alpha_json = alpha_text;
      }
      const json out = std::visit(
          [&](const auto& x) {
            const auto alpha = nlf::io::element_from_json(x.field(), alpha_json);
            return nlf::io::algelem_to_json(mode == "cauchy" ? nlf::shift_cauchy(alpha, x) : nlf::shift_dirichlet(alpha, x));
          },
          f);
      Emitter(cfg, "algebra shift").json_out(out);
    };
  });

  auto* d0 = alg->add_subcommand("d0", "compare the two constant-term rules of the Dirichlet product");
  d0->add_option("a", a_path)->required();
  d0->add_option("b", b_path)->required();
  d0->callback([&cfg, &action] {
    action = [&cfg] {
      const auto a = nlf::io::algelem_from_json(read_json(a_path));
      const auto b = nlf::io::algelem_from_json(read_json(b_path));
      const json out = same_domain(a, b, [](const auto& x, const auto& y) {
        const auto r = nlf::constant_term_diagnostic(x, y);
        return json{{"convolution_rule", nlf::io::coeff_pair(r.convolution_rule)},
                    {"graded_rule", nlf::io::coeff_pair(r.graded_rule)},
                    {"agree", r.agree}};
      });
      Emitter(cfg, "algebra d0").json_out(out);
    };
  });
}

void add_series(CLI::App& app, RunConfig& cfg, std::function<void()>& action) {
  auto* ser = app.add_subcommand("series", "arithmetic series in CSV form");
  ser->require_subcommand(1);
  static std::string a_path, b_path;
  static double s0 = 1.0;

  auto binary = [&](const char* name, const char* help, bool coprime) {
    auto* sub = ser->add_subcommand(name, help);
    sub->add_option("a", a_path)->required();
    sub->add_option("b", b_path)->required();
    sub->callback([&cfg, &action, coprime, name] {
      action = [&cfg, coprime, name] {
        const auto a = nlf::io::series_from_csv(read_text(a_path));
        const auto b = nlf::io::series_from_csv(read_text(b_path));
        same_domain(a, b, [&](const auto& x, const auto& y) {
          Emitter(cfg, std::string("series ") + name).series_out(coprime ? nlf::rp_conv(x, y) : nlf::dconv(x, y));
          return 0;
        });
      };
    });
  };
  binary("dconv", "Dirichlet convolution", false);
  binary("rpconv", "relatively prime product", true);

  auto unary = [&](const char* name, const char* help, bool coprime) {
    auto* sub = ser->add_subcommand(name, help);
    sub->add_option("a", a_path)->required();
    sub->callback([&cfg, &action, coprime, name] {
      action = [&cfg, coprime, name] {
        const auto a = nlf::io::series_from_csv(read_text(a_path));
        std::visit(
            [&](const auto& x) { Emitter(cfg, std::string("series ") + name).series_out(coprime ? nlf::rp_inv(x) : nlf::dinv(x)); },
            a);
      };
    });
  };
  unary("dinv", "Dirichlet inverse", false);
  unary("rpinv", "inverse for the relatively prime product", true);

  auto* poly = ser->add_subcommand("polylog", "coefficients n^-s");
  poly->add_option("-s,--s", s0, "exponent s >= 1")->check(CLI::Range(1.0, 1e6));
  poly->callback([&cfg, &action] {
    action = [&cfg] {
      const auto out = nlf::polylog_coeffs(s0, cfg.N);
      std::visit([&](const auto& x) { Emitter(cfg, "series polylog").series_out(x); }, out);
    };
  });
}

void add_char(CLI::App& app, RunConfig& cfg, std::function<void()>& action) {
  auto* ch = app.add_subcommand("char", "Dirichlet characters");
  ch->require_subcommand(1);
  static nlf::u64 modulus = 1;
  static std::size_t index = 0;
  static std::string path;

  auto* list = ch->add_subcommand("list", "all characters mod N in enumeration order");
  list->add_option("modulus", modulus)->required()->check(CLI::PositiveNumber);
  list->callback([&cfg, &action] {
    action = [&cfg] {
      json arr = json::array();
      std::size_t i = 0;
      for (const auto& chi : nlf::char_enumerate(modulus)) {
        json c = nlf::io::character_to_json(chi);
        c["index"] = i++;
        c["order"] = chi.order();
        arr.push_back(std::move(c));
      }
      Emitter(cfg, "char list").json_out({{"characters", arr}});
    };
  });

  auto* apply = ch->add_subcommand("apply", "R_chi: multiply coefficients by chi(n)");
  apply->add_option("--modulus", modulus)->required()->check(CLI::PositiveNumber);
  apply->add_option("--index", index)->required();
  apply->add_option("series", path)->required();
  apply->callback([&cfg, &action] {
    action = [&cfg] {
      const auto chars = nlf::char_enumerate(modulus);
      if (index >= chars.size()) nlf::fail(nlf::Errc::ParseError, "character index out of range");
      const auto& chi = chars[index];
      const auto f = nlf::io::series_from_csv(read_text(path));
      const Emitter out(cfg, "char apply");
      std::visit(
          [&](const auto& x) {
            using C = typename std::decay_t<decltype(x)>::Coeff;
            if constexpr (std::is_same_v<C, nlf::Complex64>) {
              out.series_out(nlf::R_chi(chi, x));
            } else if (chi.order() <= 2 && std::is_same_v<C, nlf::Rational>) {
              out.series_out(nlf::R_chi(chi, x));
            } else if (4 % chi.order() == 0) {
              nlf::ArithSeries<nlf::GaussRational> g(x.N());
              for (std::size_t n = 1; n <= x.N(); ++n) g[n] = nlf::GaussRational(x[n]);
              out.series_out(nlf::R_chi(chi, g));
            } else {
              nlf::ArithSeries<nlf::Complex64> z(x.N());
              for (std::size_t n = 1; n <= x.N(); ++n) z[n] = nlf::coeff_traits<C>::to_complex(x[n]);
              out.series_out(nlf::R_chi(chi, z));
            }
          },
          f);
    };
  });
}

// Smallest exact domain that holds every value of rho.
template <class Fn>
void with_rep_domain(const nlf::GaloisRep& rho, Fn&& fn) {
  nlf::u64 order = 1;
  for (const auto& chi : rho.summands()) order = nlf::lcm(order, chi.order());
  if (order <= 2) {
    fn(nlf::Rational{});
  } else if (4 % order == 0) {
    fn(nlf::GaussRational{});
  } else {
    fn(nlf::Complex64{});
  }
}

void add_rep(CLI::App& app, RunConfig& cfg, std::function<void()>& action) {
  auto* rep = app.add_subcommand("rep", "Galois representations as sums of characters");
  rep->require_subcommand(1);
  static std::string rep_path, series_path;
  static nlf::u64 p = 2;
  static unsigned depth = 4;

  auto* apply = rep->add_subcommand("apply", "R_rho: multiply coefficients by chi_rho(n)");
  apply->add_option("rep", rep_path)->required();
  apply->add_option("series", series_path)->required();
  apply->callback([&cfg, &action] {
    action = [&cfg] {
      const auto rho = nlf::io::rep_from_json(read_json(rep_path));
      const auto f = nlf::io::series_from_csv(read_text(series_path));
      const Emitter out(cfg, "rep apply");
      with_rep_domain(rho, [&](auto tag) {
        using D = decltype(tag);
        std::visit(
            [&](const auto& x) {
              using C = typename std::decay_t<decltype(x)>::Coeff;
              using T = std::conditional_t<std::is_same_v<C, nlf::Complex64> || std::is_same_v<D, nlf::Complex64>, nlf::Complex64,
                                           std::conditional_t<std::is_same_v<C, nlf::Rational> && std::is_same_v<D, nlf::Rational>,
                                                              nlf::Rational, nlf::GaussRational>>;
              nlf::ArithSeries<T> y(x.N());
              for (std::size_t n = 1; n <= x.N(); ++n) {
                if constexpr (std::is_same_v<T, nlf::Complex64>) {
                  y[n] = nlf::coeff_traits<C>::to_complex(x[n]);
                } else {
                  y[n] = T(x[n]);
                }
              }
              out.series_out(nlf::R_rho(rho, y));
            },
            f);
      });
    };
  });

  auto* euler = rep->add_subcommand("euler", "Euler factor coefficients at p^0 .. p^k");
  euler->add_option("rep", rep_path)->required();
  euler->add_option("-p", p)->required();
  euler->add_option("-k", depth, "expansion depth");
  euler->callback([&cfg, &action] {
    action = [&cfg] {
      const auto rho = nlf::io::rep_from_json(read_json(rep_path));
      with_rep_domain(rho, [&](auto tag) {
        using D = decltype(tag);
        json coeffs = json::array();
        for (const auto& c : nlf::euler_factor_coeffs<D>(rho, p, depth)) coeffs.push_back(nlf::io::coeff_pair(c));
        Emitter(cfg, "rep euler").json_out({{"p", p}, {"coeffs", coeffs}});
      });
    };
  });
}

void add_modular(CLI::App& app, RunConfig& cfg, std::function<void()>& action) {
  auto* delta = app.add_subcommand("delta", "q-expansion coefficients of Delta");
  delta->callback([&cfg, &action] {
    action = [&cfg] { Emitter(cfg, "delta").cusp_out(nlf::delta_expansion(cfg.N)); };
  });

  static nlf::u64 p = 2;
  static std::string variant = "paper", input;
  static unsigned weight = 12;
  auto* hecke = app.add_subcommand("hecke", "Hecke operator via pr(t_p x f); output truncation floor(N/p)");
  hecke->add_option("-p", p)->required();
  hecke->add_option("--variant", variant)->check(CLI::IsMember({"paper", "classical"}));
  hecke->add_option("--input", input, "cusp form CSV n,a_n (default: Delta to N)");
  hecke->add_option("--weight", weight, "weight of --input");
  hecke->callback([&cfg, &action] {
    action = [&cfg] {
      const auto f = input.empty() ? nlf::delta_expansion(cfg.N) : nlf::io::cusp_from_csv(read_text(input), weight);
      const auto v = variant == "paper" ? nlf::HeckeVariant::paper : nlf::HeckeVariant::classical;
      Emitter(cfg, "hecke").cusp_out(nlf::hecke_tp(f, p, v));
    };
  });
}

void add_flow(CLI::App& app, RunConfig& cfg, std::function<void()>& action) {
  static std::string mode = "cauchy", r_text = "0", path;
  static bool reverse = false;
  auto* flow = app.add_subcommand("flow", "Cauchy or Dirichlet flow (output in complex64)");
  flow->add_option("--mode", mode)->check(CLI::IsMember({"cauchy", "dirichlet"}));
  flow->add_option("-r", r_text, "flow time, comma separated per embedding");
  flow->add_flag("--time-reversal", reverse, "apply exponent inversion instead of a flow");
  flow->add_option("elem", path)->required();
  flow->callback([&cfg, &action] {
    action = [&cfg] {
      const auto f = to_complex(nlf::io::algelem_from_json(read_json(path)));
      nlf::AlgElem<nlf::Complex64> out(f.field());
      if (reverse) {
        out = nlf::time_reversal(f);
      } else {
        auto r = parse_reals(r_text);
        if (r.size() == 1 && f.field()->degree() > 1) r.assign(f.field()->degree(), r.front());
        out = mode == "cauchy" ? nlf::cauchy_flow(r, f) : nlf::dirichlet_flow(r, f);
      }
      Emitter(cfg, "flow").json_out(nlf::io::algelem_to_json(out));
    };
  });
}

void add_verify(CLI::App& app, RunConfig& cfg, std::function<void()>& action, int& status) {
  static std::string suite;
  static nlf::VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "run a named invariant suite");
  std::string names = "all";
  for (const auto& n : nlf::suite_names()) names += "|" + n;
  verify->add_option("suite", suite, names)->required();
  verify->add_option("-M", vc.M, "torus level for orthonormality")->check(CLI::PositiveNumber);
  verify->add_option("--points", vc.points, "quadrature grid size")->check(CLI::PositiveNumber);
  verify->add_option("--samples", vc.samples, "random instances per property (0: suite default)");
  verify->callback([&cfg, &action, &status] {
    action = [&cfg, &status] {
      vc.N = cfg.N_given ? cfg.N : 0;
      vc.P = cfg.P;
      vc.tol = cfg.tol;
      vc.precision_cap = cfg.precision_cap;
      vc.seed = cfg.seed;
      const auto reports = nlf::run_suite(suite, vc);
      bool ok = true;
      if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
          json props = json::array();
          for (const auto& p : r.properties) {
            props.push_back({{"name", p.name}, {"passed", p.passed}, {"total", p.total}, {"note", p.note}});
          }
          arr.push_back({{"suite", r.suite}, {"pass", r.ok()}, {"properties", props}});
          ok = ok && r.ok();
        }
        Emitter(cfg, "verify " + suite).json_out({{"pass", ok}, {"suites", arr}});
      } else {
        std::string text;
        for (const auto& r : reports) {
          text += r.to_text();
          ok = ok && r.ok();
        }
        text += ok ? "all properties hold\n" : "verification FAILED\n";
        Emitter(cfg, "verify " + suite).csv_out(text);
      }
      status = ok ? 0 : 1;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nlf: field algebras, Dirichlet series, characters and Hecke operators"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  RunConfig cfg;
  auto* n_opt = app.add_option("-N,--truncation", cfg.N, "truncation bound N")->check(CLI::PositiveNumber);
  app.add_option("-P,--prime-bound", cfg.P, "prime bound P")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "float tolerance in (0, 1e-3]")->check(CLI::Range(1e-300, 1e-3));
  app.add_option("--precision-cap", cfg.precision_cap, "sign-resolution cap in bits")->check(CLI::Range(64u, 1u << 16));
  app.add_option("--seed", cfg.seed, "RNG seed for sampled properties");
  app.add_option("--format", cfg.format, "json|csv (verify: csv gives the text report)")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--emit-seed-header,!--no-emit-seed-header", cfg.seed_header, "record the configuration in outputs");
  app.add_option("-o,--output", cfg.output, "output file (default stdout)");

  std::function<void()> action;
  int status = 0;
  add_algebra(app, cfg, action);
  add_series(app, cfg, action);
  add_char(app, cfg, action);
  add_rep(app, cfg, action);
  add_modular(app, cfg, action);
  add_flow(app, cfg, action);
  add_verify(app, cfg, action, status);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.N_given = n_opt->count() > 0;
  // Series and cusp-form commands default to CSV unless a format was given.
  if (app.count("--format") == 0) {
    for (const auto* sub : app.get_subcommands()) {
      const auto& name = sub->get_name();
      if (name == "series" || name == "char" || name == "delta" || name == "hecke") cfg.format = "csv";
      if (name == "verify") cfg.format = "csv";
      if (name == "char" && sub->got_subcommand("list")) cfg.format = "json";
    }
  }

  try {
    if (action) action();
  } catch (const nlf::Error& e) {
    std::cerr << "nlf: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "nlf: malformed JSON input: " << e.what() << "\n";
    return 2;
  }
  return status;
}
