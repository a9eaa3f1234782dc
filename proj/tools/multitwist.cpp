// multitwist: command-line front end.
//
// Exit codes: 0 success, 2 invalid input, 3 internal inconsistency (a
// cross-check between independent computations failed).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multitwist/classify.hpp"
#include "multitwist/config.hpp"
#include "multitwist/coxeter.hpp"
#include "multitwist/error.hpp"
#include "multitwist/flatstruct.hpp"
#include "multitwist/fuchsian.hpp"
#include "multitwist/numthy.hpp"
#include "multitwist/penner.hpp"
#include "multitwist/report.hpp"
#include "multitwist/spectral.hpp"
#include "multitwist/sweep.hpp"

namespace mt = multitwist;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInconsistent = 3;

struct Options {
  double tol = mt::kDefaultTol;
  int digits = 12;
  bool as_json = false;
};

Options opts;

double num(double x) { return mt::round_significant(x, opts.digits); }

json num_array(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

void print_text(const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && j.front().is_structured()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const json& j) {
  if (opts.as_json) {
    std::cout << j.dump() << '\n';
  } else {
    print_text(j, "");
  }
}

std::string signature_entry(long v) { return v == mt::kInfinity ? "inf" : std::to_string(v); }

int cmd_classify(const std::string& path) {
  const auto doc = mt::load_config_file(path);
  const auto report = mt::make_classify_report(doc.graph, opts.tol);
  if (opts.as_json) {
    std::cout << mt::to_json(report, opts.digits) << '\n';
  } else {
    emit(json::parse(mt::to_json(report, opts.digits)));
  }
  return kExitOk;
}

int cmd_flat(const std::string& path) {
  const auto doc = mt::load_config_file(path);
  const auto fs = mt::flat_data(doc.graph, opts.tol);
  json j;
  j["mu"] = num(fs.mu);
  j["V"] = num_array(fs.v);
  j["Vp"] = num_array(fs.vp);
  j["a_girths"] = num_array(fs.a_girths);
  j["b_girths"] = num_array(fs.b_girths);
  j["area"] = num(fs.area());
  j["residual"] = fs.residual;
  json rects = json::array();
  for (const auto& r : fs.rectangles)
    rects.push_back({{"a", r.a + 1}, {"b", r.b + 1}, {"copy", r.copy}, {"width", num(r.width)}, {"height", num(r.height)}});
  j["rectangles"] = rects;
  const auto daf = mt::daf_generators(fs.mu);
  j["daf_TA"] = {{1, num(daf.twist_a(0, 1))}, {0, 1}};
  j["daf_TB"] = {{1, 0}, {num(daf.twist_b(1, 0)), 1}};
  if (doc.embedding) {
    const auto eu = mt::euler_genus(*doc.embedding);
    j["euler"] = {{"vertices", eu.vertices}, {"edges", eu.edges}, {"faces", eu.faces}, {"chi", eu.chi}, {"genus", eu.genus}};
  }
  if (fs.residual > 1e-9) {
    emit(j);
    std::cerr << "flat-structure relations violated (residual " << fs.residual << ")\n";
    return kExitInconsistent;
  }
  emit(j);
  return kExitOk;
}

int cmd_word(const std::string& path, const std::string& word_text) {
  const auto doc = mt::load_config_file(path);
  const auto w = mt::MultiTwistWord::parse(word_text);
  const auto ctx = mt::MuContext::from_graph(doc.graph);
  const auto cls = mt::automorphism_class(w, ctx, std::max(opts.tol, 1e-9));
  json j;
  j["word"] = w.to_string();
  j["mu"] = num(ctx.mu);
  j["exact_mu_squared"] = ctx.mu_squared.has_value();
  j["type"] = mt::to_string(cls.kind);
  j["element"] = mt::to_string(cls.element.kind);
  j["trace"] = num(cls.element.trace);
  if (cls.element.kind == mt::ElementKind::kHyperbolic) {
    j["dilatation"] = num(cls.element.dilatation);
    j["translation_length"] = num(cls.element.translation_length);
  }
  if (cls.element.kind == mt::ElementKind::kElliptic) {
    if (cls.element.order) {
      j["order"] = *cls.element.order;
    } else {
      j["order"] = "NotResolved";
    }
  }
  emit(j);
  return kExitOk;
}

int cmd_signature(const std::string& path) {
  const auto doc = mt::load_config_file(path);
  const auto label = mt::family_of(doc.graph);
  const auto sig = mt::triangle_signature(doc.graph);
  json j;
  j["family"] = label.name();
  j["signature"] = {signature_entry(sig.p), signature_entry(sig.q), signature_entry(sig.r)};
  j["product_order"] = sig.product_order;
  emit(j);
  return kExitOk;
}

int cmd_coxeter(const std::string& path) {
  const auto doc = mt::load_config_file(path);
  const auto sig = mt::form_signature(mt::coxeter_form(doc.graph));
  const double rho = mt::bicolored_coxeter_spectral_radius(doc.graph, std::max(opts.tol, 1e-9));
  const auto m7 = mt::main7_identity_report(doc.graph);
  json j;
  j["form_signature"] = {sig.n_plus, sig.n_minus, sig.n_zero};
  j["class"] = mt::to_string(sig.form_class);
  j["bicolored_spectral_radius"] = num(rho);
  j["homology_identity"] = m7.holds();
  j["assumption"] = "all intersections taken positive; orientability is not checked";
  emit(j);
  return m7.holds() ? kExitOk : kExitInconsistent;
}

int cmd_penner(const std::string& path, const std::string& word_text) {
  const auto doc = mt::load_config_file(path);
  if (!doc.embedding) throw mt::Error(mt::ErrorKind::kValidation, "penner needs a configuration with an embedding");
  const auto w = mt::ComponentWord::parse(word_text);
  json j;
  j["word"] = w.to_string();
  const auto membership = mt::validate_penner_word(w, doc.graph);
  j["membership"] = mt::to_string(membership);
  if (membership != mt::PennerMembership::kInG0) {
    emit(j);
    std::cerr << "error: word must twist every a_i positively and every b_j negatively\n";
    return kExitInvalid;
  }
  const double lambda = mt::penner_dilatation(w, *doc.embedding, opts.tol);
  const mt::BigInt rows = mt::row_sum_check(w, *doc.embedding);
  j["dilatation"] = num(lambda);
  j["min_row_sum"] = rows.str();
  emit(j);
  return rows >= 5 && lambda >= std::sqrt(5.0) - 1e-9 ? kExitOk : kExitInconsistent;
}

int cmd_poly(const std::string& sub, const std::vector<std::string>& args) {
  json j;
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw mt::Error(mt::ErrorKind::kValidation, "poly " + sub + " takes " + std::to_string(n) + " argument(s)");
  };
  if (sub == "mahler") {
    need(1);
    const auto p = mt::IntPolynomial::parse(args[0]);
    const auto m = mt::mahler_measure_certified(p, std::max(opts.tol, 1e-12));
    j["polynomial"] = p.to_string();
    j["mahler_measure"] = num(m.value);
    j["error_bound"] = m.error_bound;
  } else if (sub == "salem") {
    need(1);
    const auto p = mt::IntPolynomial::parse(args[0]);
    j["polynomial"] = p.to_string();
    j["salem"] = mt::is_salem(p);
  } else if (sub == "resultant") {
    need(2);
    const auto p = mt::BiPolynomial::parse(args[0]);
    const auto q = mt::BiPolynomial::parse(args[1]);
    j["resultant"] = mt::resultant(p, q).to_string();
  } else if (sub == "lehmer") {
    need(0);
    const auto l = mt::lehmer_polynomial();
    const auto q = mt::mu_quintic();
    j["lehmer_polynomial"] = l.to_string();
    j["lambda_L"] = num(mt::largest_real_root(l, 1e-15));
    j["mu_quintic"] = q.to_string();
    j["mu_L"] = num(std::sqrt(mt::largest_real_root(q, 1e-15)));
  } else {
    throw mt::Error(mt::ErrorKind::kValidation, "unknown poly subcommand '" + sub + "'");
  }
  emit(j);
  return kExitOk;
}

int cmd_sweep(std::size_t max_vertices, std::int64_t max_mult, std::size_t tree_vertices, std::size_t orderings) {
  const auto graphs = mt::enumerate_connected_multigraphs(max_vertices, max_mult);
  const auto smith = mt::smith_sweep(graphs);
  auto pool = mt::enumerate_trees(tree_vertices);
  pool.insert(pool.end(), graphs.begin(), graphs.end());
  const auto mini = mt::minimality_sweep(pool);
  const auto cox = mt::coxeter_sweep(graphs, orderings, 20240601);
  json j;
  j["graphs"] = smith.graphs;
  j["smith"] = {{"recessive", smith.recessive}, {"critical", smith.critical}, {"dominant", smith.dominant},
                {"mismatches", smith.mismatches}};
  j["minimality"] = {{"dominant", mini.dominant}, {"min_mu", num(mini.min_mu)}, {"argmin_count", mini.argmin_count},
                     {"argmin_all_eh10", mini.argmin_all_eh10},
                     {"min_multi_edge_mu", num(mini.min_multi_edge_mu)}};
  j["coxeter"] = {{"graphs", cox.graphs},
                  {"orderings", cox.orderings},
                  {"howlett_product_failures", cox.howlett_product_failures},
                  {"orthogonality_failures", cox.orthogonality_failures},
                  {"class_mismatches", cox.class_mismatches},
                  {"radius_failures", cox.radius_failures},
                  {"main7_failures", cox.main7_failures}};
  emit(j);
  for (const auto& s : smith.mismatch_examples) std::cerr << s << '\n';
  for (const auto& s : cox.failure_examples) std::cerr << s << '\n';
  const bool multi_ok = mini.multi_edge_dominant == 0 || mini.min_multi_edge_mu >= std::sqrt(5.0) - 1e-9;
  return smith.mismatches == 0 && cox.ok() && multi_ok ? kExitOk : kExitInconsistent;
}

int exit_code_for(mt::ErrorKind kind) {
  switch (kind) {
    case mt::ErrorKind::kInternalInconsistency:
    case mt::ErrorKind::kNoConvergence:
      return kExitInconsistent;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups generated by two positive multi-twists: classification, dilatations, signatures"};
  app.require_subcommand(1);
  app.add_option("--tol", opts.tol, "numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--digits", opts.digits, "significant digits in numeric output")->check(CLI::Range(1, 17));
  app.add_flag("--json", opts.as_json, "structured JSON output");

  std::string config, word;
  std::function<int()> run;

  auto* classify = app.add_subcommand("classify", "Smith family and mu per component; freeness");
  classify->add_option("config", config)->required()->check(CLI::ExistingFile);
  classify->callback([&] { run = [&] { return cmd_classify(config); }; });

  auto* flat = app.add_subcommand("flat", "flat-structure data (and genus when an embedding is given)");
  flat->add_option("config", config)->required()->check(CLI::ExistingFile);
  flat->callback([&] { run = [&] { return cmd_flat(config); }; });

  auto* wordcmd = app.add_subcommand("word", "element type and dilatation of a word such as \"A B^-2 A^3\" (left to right)");
  wordcmd->add_option("config", config)->required()->check(CLI::ExistingFile);
  wordcmd->add_option("word", word)->required();
  wordcmd->callback([&] { run = [&] { return cmd_word(config, word); }; });

  auto* sig = app.add_subcommand("signature", "triangle group signature of a recessive configuration");
  sig->add_option("config", config)->required()->check(CLI::ExistingFile);
  sig->callback([&] { run = [&] { return cmd_signature(config); }; });

  auto* cox = app.add_subcommand("coxeter", "Coxeter form, bicoloured spectral radius, homology identity");
  cox->add_option("config", config)->required()->check(CLI::ExistingFile);
  cox->callback([&] { run = [&] { return cmd_coxeter(config); }; });

  auto* penner = app.add_subcommand("penner", "dilatation of a component word such as \"a1^2 b1^-1\"");
  penner->add_option("config", config)->required()->check(CLI::ExistingFile);
  penner->add_option("word", word)->required();
  penner->callback([&] { run = [&] { return cmd_penner(config, word); }; });

  std::string poly_sub;
  std::vector<std::string> poly_args;
  auto* poly = app.add_subcommand("poly", "polynomial tools: mahler <p>, salem <p>, resultant <p(x,y)> <q(y)>, lehmer");
  poly->add_option("subcommand", poly_sub)->required()->check(CLI::IsMember({"mahler", "salem", "resultant", "lehmer"}));
  poly->add_option("args", poly_args);
  poly->callback([&] { run = [&] { return cmd_poly(poly_sub, poly_args); }; });

  std::size_t max_vertices = 8, tree_vertices = 10, orderings = 20;
  std::int64_t max_mult = 10;
  auto* sweep = app.add_subcommand("sweep", "exhaustive classification, minimality and Coxeter checks");
  sweep->add_option("--max-vertices", max_vertices, "vertex bound for multigraphs")->check(CLI::Range(2, 8));
  sweep->add_option("--max-multiplicity", max_mult, "bound on total edge multiplicity")->check(CLI::Range(1, 16));
  sweep->add_option("--tree-vertices", tree_vertices, "vertex bound for trees")->check(CLI::Range(2, 12));
  sweep->add_option("--orderings", orderings, "random generator orderings per graph");
  sweep->callback([&] { run = [&] { return cmd_sweep(max_vertices, max_mult, tree_vertices, orderings); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return run();
  } catch (const mt::Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInconsistent;
  }
}
