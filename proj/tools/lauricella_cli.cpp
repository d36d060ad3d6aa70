#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lauricella/chains.hpp"
#include "lauricella/cocycles.hpp"
#include "lauricella/connection.hpp"
#include "lauricella/monodromy.hpp"
#include "lauricella/numerics.hpp"
#include "lauricella/parameters.hpp"
#include "lauricella/rational.hpp"

using json = nlohmann::ordered_json;
using namespace lauricella;
using parameters::ParameterVector;

namespace {

constexpr const char* version = "1.0.0";

json cpx(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < M.cols(); ++j) r.push_back(cpx(M(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Complex parse_cpx(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  throw input_error("expected a number or [re, im] pair");
}

struct Job {
  ParameterVector pv;
  parameters::IndexClassification cls;
  parameters::PointConfiguration cfg;
  json echo;
};

Job load_alpha_job(const json& in) {
  Job job;
  if (!in.contains("alpha")) throw input_error("payload needs an \"alpha\" array");
  const json& al = in.at("alpha");
  bool exact = true;
  for (const auto& v : al) exact = exact && v.is_string();
  if (exact) {
    std::vector<Rational> r;
    for (const auto& v : al) r.push_back(Rational::parse(v.get<std::string>()));
    job.pv = ParameterVector::from_alpha_exact(r);
  } else {
    std::vector<Complex> a;
    for (const auto& v : al) a.push_back(parse_cpx(v));
    job.pv = ParameterVector::from_alpha(a);
  }
  job.cls = parameters::classify(job.pv);
  if (in.contains("x")) {
    std::vector<double> x = in.at("x").get<std::vector<double>>();
    job.cfg = parameters::configuration_from_points(job.cls, x);
  } else {
    job.cfg = parameters::aligned_configuration(job.cls);
  }
  job.echo = in;
  return job;
}

json chain_json(const chains::TwistedChain& c) {
  json terms = json::array();
  for (const auto& [el, coeff] : c.terms)
    terms.push_back({{"kind", el.kind == chains::ChainKind::PathTo ? "path" : "loop"},
                     {"site", el.site},
                     {"coeff", cpx(coeff)}});
  return terms;
}

Matrix cohomology_intersections(const Job& job) {
  return cocycles::adapted_frame(job.pv, job.cls, job.cfg).C;
}

int matrix_rank(const Matrix& M) {
  Eigen::JacobiSVD<Matrix> svd(M);
  return int(svd.setThreshold(1e-10).rank());
}

json run_command(const std::string& cmd, const std::string& verify_what, const json& in,
                 double tol, std::uint64_t seed, const std::string& pairs,
                 const std::string& kind, int& status) {
  json out;
  out["command"] = verify_what.empty() ? cmd : cmd + " " + verify_what;
  out["version"] = version;
  out["seed"] = seed;
  out["input"] = in;

  if (cmd == "classify") {
    Job job = load_alpha_job(in);
    json d;
    d["m"] = job.pv.m;
    d["r"] = job.cls.r;
    d["s"] = job.cls.s;
    d["iN0"] = job.cls.iN0;
    d["iNeg"] = job.cls.iNeg;
    d["iZc"] = job.cls.iZc;
    d["all_integral"] = job.cls.all_integral;
    d["order"] = job.cls.order;
    d["inf_at_left"] = job.cls.inf_at_left;
    d["slot"] = job.cls.slot;
    d["dim_relative"] = job.pv.m + 1;
    d["warnings"] = job.cls.warnings;
    out["classification"] = d;
  } else if (cmd == "basis") {
    Job job = load_alpha_job(in);
    auto bp = chains::bases(job.pv, job.cls);
    json g = json::array(), dl = json::array();
    for (const auto& c : bp.gamma) g.push_back(chain_json(c));
    for (const auto& c : bp.delta) dl.push_back(chain_json(c));
    out["gamma"] = g;
    out["delta"] = dl;
  } else if (cmd == "ih") {
    Job job = load_alpha_job(in);
    Matrix H = chains::intersection_matrix_h(job.pv, job.cls);
    out["H"] = matrix_json(H);
    out["rank"] = matrix_rank(H);
  } else if (cmd == "ic") {
    Job job = load_alpha_job(in);
    Matrix C = cohomology_intersections(job);
    out["C"] = matrix_json(C);
    out["rank"] = matrix_rank(C);
  } else if (cmd == "pfaffian") {
    Job job = load_alpha_job(in);
    auto rs = connection::residue_matrices(job.pv);
    if (kind == "r") {
      json res = json::array();
      for (const auto& [ij, R] : rs.R)
        res.push_back({{"i", ij.first}, {"j", ij.second}, {"R", matrix_json(R)}});
      out["residues"] = res;
    } else {
      const auto pk =
          kind == "xi" ? connection::PfaffianKind::Xi : connection::PfaffianKind::Theta;
      std::vector<Complex> x(job.cfg.x.begin(), job.cfg.x.begin() + job.pv.m + 2);
      auto comps = connection_at(pk, rs, job.pv, x);
      json c = json::array();
      for (const auto& M : comps) c.push_back(matrix_json(M));
      out["components"] = c;
    }
  } else if (cmd == "monodromy") {
    Job job = load_alpha_job(in);
    Matrix H = chains::intersection_matrix_h(job.pv, job.cls);
    json gens = json::array();
    auto emit = [&](int p, int q) {
      auto cm = monodromy::circuit_matrix(p, q, job.pv, job.cls, job.cfg, H);
      gens.push_back({{"p", p},
                      {"q", q},
                      {"M", matrix_json(cm.M)},
                      {"det", cpx(cm.M.determinant())},
                      {"degenerate", cm.degenerate}});
    };
    if (pairs == "all") {
      for (int p = 0; p <= job.pv.m; ++p)
        for (int q = p + 1; q <= job.pv.m + 1; ++q)
          if (!(p == 0 && q == job.pv.m + 1)) emit(p, q);
    } else {
      int p = 0, q = 0;
      if (std::sscanf(pairs.c_str(), "%d,%d", &p, &q) != 2)
        throw input_error("--pairs expects all or p,q");
      emit(p, q);
    }
    out["generators"] = gens;
    auto rep = monodromy::classify_representation(job.pv, job.cls, job.cfg);
    out["reducible"] = rep.reducible;
    out["trivial"] = rep.trivial;
  } else if (cmd == "verify") {
    double residual = 0.0;
    if (verify_what == "tpr") {
      Job job = load_alpha_job(in);
      residual = numerics::verify_tpr(job.pv, job.cls, job.cfg, 1e-10);
    } else if (verify_what == "euler") {
      const double a = in.at("a").get<double>();
      const double c = in.at("c").get<double>();
      const auto b = in.at("b").get<std::vector<double>>();
      const auto x = in.at("x").get<std::vector<double>>();
      residual = numerics::euler_check(a, b, c, x);
    } else if (verify_what == "monodromy") {
      Job job = load_alpha_job(in);
      residual = numerics::verify_monodromy(job.pv, job.cls, job.cfg, 1e-10);
    } else if (verify_what == "integrability") {
      Job job = load_alpha_job(in);
      auto rs = connection::residue_matrices(job.pv);
      residual = connection::check_integrability(rs, job.pv, 20, unsigned(seed));
    } else {
      throw input_error("verify expects tpr|euler|monodromy|integrability");
    }
    const bool pass = residual <= tol;
    out["residual"] = residual;
    out["tolerance"] = tol;
    out["pass"] = pass;
    if (!pass) status = 1;
  } else if (cmd == "eval") {
    const Complex a = parse_cpx(in.at("a"));
    const Complex c = parse_cpx(in.at("c"));
    std::vector<Complex> b, x;
    for (const auto& v : in.at("b")) b.push_back(parse_cpx(v));
    for (const auto& v : in.at("x")) x.push_back(parse_cpx(v));
    out["value"] = cpx(numerics::fd_series(a, b, c, x));
  } else {
    throw input_error("unknown command");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted (co)homology data of the Lauricella F_D local system"};
  app.require_subcommand(1);

  std::string input = "-", output, pairs = "all", kind = "r", verify_what;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  app.add_option("--input", input, "JSON payload file, - for stdin");
  app.add_option("--tol", tol, "pass/fail tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random seed (recorded in the output)");
  app.add_option("--output", output, "output file (default stdout)");
  app.add_option("--pairs", pairs, "all or p,q (monodromy)");
  app.add_option("--kind", kind, "r|xi|theta (pfaffian)")
      ->check(CLI::IsMember({"r", "xi", "theta"}));

  std::vector<std::string> names{"classify", "basis", "ih", "ic", "pfaffian", "monodromy", "eval"};
  for (const auto& n : names) app.add_subcommand(n)->fallthrough();
  auto* ver = app.add_subcommand("verify");
  ver->fallthrough();
  ver->add_option("what", verify_what, "tpr|euler|monodromy|integrability")->required();

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  int status = 0;
  json out;
  try {
    json in;
    if (input == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      in = json::parse(ss.str());
    } else {
      std::ifstream f(input);
      if (!f) throw input_error("cannot open input file " + input);
      in = json::parse(f);
    }
    out = run_command(cmd, verify_what, in, tol, seed, pairs, kind, status);
  } catch (const json::exception& e) {
    out = {{"error", e.what()}};
    status = 2;
  } catch (const input_error& e) {
    out = {{"error", e.what()}};
    status = 2;
  } catch (const domain_error& e) {
    out = {{"error", e.what()}};
    status = 3;
  }

  const std::string doc = out.dump(2) + "\n";
  if (output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(output);
    f << doc;
  }
  return status;
}
