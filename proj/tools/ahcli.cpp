// ahcli: command-line front end for the ahlib library.
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "ahlib/ahlib.hpp"

using namespace ahlib;

namespace {

struct Globals {
  std::string field = "q";
  std::string h = "1";
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
};

Json envelope(const std::string& command, Json result) {
  return {{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
}

void emit(const Globals& g, const std::string& command, const Json& result, const std::string& text) {
  if (g.json) {
    std::cout << envelope(command, result).dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

Field field_of(const Globals& g) { return parse_field(g.field); }
AhContext context_of(const Globals& g) { return AhContext(parse_poly(g.h, field_of(g))); }

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
}

/// A module document, optionally wrapped in a CLI envelope.
FinModule load_module(const std::string& path) {
  Json j = read_json(path);
  if (j.contains("result") && j["result"].is_object()) j = j["result"];
  try {
    return module_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad module document: ") + e.what());
  }
}

std::string matrix_text(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
    s += "]\n";
  }
  return s;
}

std::string module_text(const FinModule& m) {
  std::string s = "dim " + std::to_string(m.dim()) + " over " + m.field().to_string() + ", h = " +
                  m.context().h().to_string() + ", provenance " + provenance_to_json(m.provenance()).dump() + "\n";
  return s + "X =\n" + matrix_text(m.X()) + "Y =\n" + matrix_text(m.Y());
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string verdict_text(const Verdict& v) {
  std::string s = std::string(to_string(v.value)) + " (" + v.method + ")";
  if (const auto* w = std::get_if<Vec>(&v.witness)) s += " witness " + vec_text(*w);
  if (const auto* w = std::get_if<Matrix>(&v.witness)) s += " idempotent " + w->to_string();
  if (const auto* w = std::get_if<std::string>(&v.witness)) s += " [" + *w + "]";
  return s;
}

Json elements_json(const std::vector<AhElement>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(e.to_string());
  return out;
}

std::string elements_text(const std::vector<AhElement>& es) {
  std::string s;
  for (const auto& e : es) s += e.to_string() + "\n";
  return s.empty() ? "(none)\n" : s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the algebras A_h = F<x, y | yx = xy + h>"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "q, fp:<p>, or either with [<irreducible poly in t>]")->capture_default_str();
  app.add_option("--h", g.h, "the polynomial h in x")->capture_default_str();
  app.add_flag("--json", g.json, "JSON output (schema ahlib/1)");
  app.add_option("--seed", g.seed, "seed for randomized witness searches")->capture_default_str();

  std::function<void()> action;

  // mul
  std::string mul_a, mul_b;
  auto* mul = app.add_subcommand("mul", "normal form of a * b");
  mul->add_option("a", mul_a)->required();
  mul->add_option("b", mul_b)->required();
  mul->callback([&] {
    action = [&] {
      const AhContext ctx = context_of(g);
      const AhElement r = parse_element(mul_a, ctx) * parse_element(mul_b, ctx);
      emit(g, "mul", element_to_json(r), r.to_string());
    };
  });

  // ctable
  unsigned ct_k = 0;
  auto* ctable = app.add_subcommand("ctable", "coefficient table of delta^k(x), rows 1..k");
  ctable->add_option("k", ct_k)->required();
  ctable->callback([&] {
    action = [&] {
      const auto rows = coeff_tables(ct_k);
      Json out = Json::array();
      std::string text;
      for (const auto& row : rows) {
        const auto [sum, ok] = factorial_sum_check(row.k());
        Json j = table_to_json(row);
        j["sum"] = sum.get_str();
        j["factorial_check"] = ok;
        out.push_back(j);
        text += "k=" + std::to_string(row.k()) + ": " + row.to_string() + " sum=" + sum.get_str() +
                (ok ? "=" : "!=") + std::to_string(row.k() - 1) + "!\n";
      }
      emit(g, "ctable", out, text);
    };
  });

  // delta
  unsigned dl_k = 1;
  std::string dl_r = "x";
  bool dl_expand = false;
  auto* delta = app.add_subcommand("delta", "delta^k(r) = (h d/dx)^k r");
  delta->add_option("k", dl_k)->required();
  delta->add_option("--r", dl_r, "polynomial to differentiate")->capture_default_str();
  delta->add_flag("--expand", dl_expand, "also compare delta^k(x) with its partition expansion");
  delta->callback([&] {
    action = [&] {
      const AhContext ctx = context_of(g);
      const Poly d = ctx.delta_apply(parse_poly(dl_r, ctx.field()), dl_k);
      Json j{{"k", dl_k}, {"r", dl_r}, {"value", d.to_string()}};
      std::string text = d.to_string();
      if (dl_expand) {
        const bool ok = expand_delta_x(dl_k, ctx) == ctx.delta_apply(Poly::x(ctx.field()), dl_k);
        j["expansion_matches"] = ok;
        text += std::string("\nexpansion ") + (ok ? "matches" : "differs");
      }
      emit(g, "delta", j, text);
    };
  });

  // zp
  auto* zp = app.add_subcommand("zp", "central element z_p (characteristic p)");
  zp->callback([&] {
    action = [&] {
      const AhContext ctx = context_of(g);
      const AhElement z = make_z_p(ctx);
      const Poly q = ctx.delta_p_x_over_h();
      const bool central = commutator(z, AhElement::x(ctx)).is_zero() && commutator(z, AhElement::y(ctx)).is_zero();
      Json j{{"z_p", z.to_string()}, {"delta_p_x_over_h", q.to_string()}, {"in_xp_subring", q.in_xp_subring()},
             {"central", central}};
      emit(g, "zp", j,
           "z_p = " + z.to_string() + "\ndelta^p(x)/h = " + q.to_string() + (q.in_xp_subring() ? " (in F[x^p])" : "") +
               "\ncentral: " + (central ? "yes" : "no"));
    };
  });

  // center
  unsigned cz_dx = 4, cz_dy = 4;
  auto* center = app.add_subcommand("center", "central elements in a degree window");
  center->add_option("--dx", cz_dx)->capture_default_str();
  center->add_option("--dy", cz_dy)->capture_default_str();
  center->callback([&] {
    action = [&] {
      const auto basis = centralizer_bounded(context_of(g), cz_dx, cz_dy);
      emit(g, "center", {{"dx", cz_dx}, {"dy", cz_dy}, {"basis", elements_json(basis)}}, elements_text(basis));
    };
  });

  // normal
  std::string nm_b;
  unsigned nm_dx = 2, nm_dy = 2;
  auto* normal = app.add_subcommand("normal", "check A b = b A on a window of monomials");
  normal->add_option("b", nm_b)->required();
  normal->add_option("--dx", nm_dx)->capture_default_str();
  normal->add_option("--dy", nm_dy)->capture_default_str();
  normal->callback([&] {
    action = [&] {
      const bool ok = is_normal_bounded(parse_element(nm_b, context_of(g)), nm_dx, nm_dy);
      emit(g, "normal", {{"element", nm_b}, {"normal", ok}}, ok ? "normal" : "not normal");
    };
  });

  // embed
  std::string em_a;
  auto* embed = app.add_subcommand("embed", "image of an element under x -> x, y -> y h in the Weyl algebra");
  embed->add_option("a", em_a)->required();
  embed->callback([&] {
    action = [&] {
      const AhContext ctx = context_of(g);
      const AhElement img = embed_weyl(parse_element(em_a, ctx), AhContext::weyl(ctx.field()));
      emit(g, "embed", element_to_json(img), img.to_string());
    };
  });

  // module
  auto* module = app.add_subcommand("module", "finite-dimensional modules");
  module->require_subcommand(1);

  std::string mb_kind, mb_lambda = "0", mb_mu = "0", mb_beta = "0", mb_q = "0", mb_f = "x", mb_x, mb_y;
  unsigned mb_n = 0;
  std::vector<std::string> mb_g;
  auto* build = module->add_subcommand("build", "construct a module");
  build->add_option("--kind", mb_kind, "one-dim | n-module | l-factor | l-z-beta | weyl-restrict | quotient")
      ->required()
      ->check(CLI::IsMember({"one-dim", "n-module", "l-factor", "l-z-beta", "weyl-restrict", "quotient"}));
  build->add_option("--lambda", mb_lambda)->capture_default_str();
  build->add_option("--mu", mb_mu)->capture_default_str();
  build->add_option("--beta", mb_beta)->capture_default_str();
  build->add_option("--q", mb_q)->capture_default_str();
  build->add_option("--n", mb_n)->capture_default_str();
  build->add_option("--f", mb_f)->capture_default_str();
  build->add_option("--g", mb_g, "g_0 .. g_{n-1} of y^n - sum g_j y^j (repeat the flag)");
  build->add_option("--X", mb_x, "JSON matrix (weyl-restrict)");
  build->add_option("--Y", mb_y, "JSON matrix (weyl-restrict)");
  build->callback([&] {
    action = [&] {
      const AhContext ctx = context_of(g);
      const Field& f = ctx.field();
      auto s = [&](const std::string& t) { return parse_scalar(t, f); };
      auto p = [&](const std::string& t) { return parse_poly(t, f); };
      auto built = [&]() -> FinModule {
        if (mb_kind == "one-dim") return one_dim(ctx, s(mb_lambda), s(mb_mu));
        if (mb_kind == "n-module") return n_module(ctx, s(mb_lambda), p(mb_q), mb_n);
        if (mb_kind == "l-z-beta") return l_z_beta(ctx, s(mb_lambda), s(mb_beta));
        if (mb_kind == "quotient") return n_quotient_module(ctx, p(mb_f), p(mb_q));
        if (mb_kind == "l-factor") {
          std::vector<Poly> gs;
          for (const auto& t : mb_g) gs.push_back(p(t));
          return l_module_factor(ctx, p(mb_f), gs);
        }
        Json jx, jy;
        try {
          jx = Json::parse(mb_x);
          jy = Json::parse(mb_y);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::ParseError, std::string("bad matrix JSON: ") + e.what());
        }
        return weyl_restrict(matrix_from_json(jx, f), matrix_from_json(jy, f), ctx);
      }();
      emit(g, "module build", module_to_json(built), module_text(built));
    };
  });

  std::string mod_path;
  auto add_module_arg = [&](CLI::App* sub) { sub->add_option("module", mod_path, "module JSON file, or - for stdin")->required(); };

  auto* check = module->add_subcommand("check", "verify YX - XY = h(X)");
  add_module_arg(check);
  check->callback([&] {
    action = [&] {
      const FinModule m = load_module(mod_path);
      const bool ok = verify_relation(m);
      emit(g, "module check", {{"relation", ok}}, ok ? "relation holds" : "relation fails");
    };
  });

  auto* lattice = module->add_subcommand("lattice", "all submodules (finite fields)");
  add_module_arg(lattice);
  lattice->callback([&] {
    action = [&] {
      const auto l = submodule_lattice(load_module(mod_path));
      std::string text = std::to_string(l.members.size()) + " submodules, " + (l.is_chain ? "chain" : "not a chain") + "\n";
      for (const auto& s : l.members) {
        text += "  dim " + std::to_string(s.dim()) + ":";
        for (const auto& v : s.basis()) text += " " + vec_text(v);
        text += "\n";
      }
      emit(g, "module lattice", lattice_to_json(l), text);
    };
  });

  unsigned an_dx = 2, an_dy = 2;
  auto* ann = module->add_subcommand("ann", "annihilator in a degree window");
  add_module_arg(ann);
  ann->add_option("--dx", an_dx)->capture_default_str();
  ann->add_option("--dy", an_dy)->capture_default_str();
  ann->callback([&] {
    action = [&] {
      const auto basis = ann_bounded(load_module(mod_path), an_dx, an_dy);
      emit(g, "module ann", {{"dx", an_dx}, {"dy", an_dy}, {"basis", elements_json(basis)}}, elements_text(basis));
    };
  });

  auto* verdicts = module->add_subcommand("verdicts", "irreducibility, indecomposability, annihilator, weights");
  add_module_arg(verdicts);
  verdicts->callback([&] {
    action = [&] {
      const FinModule m = load_module(mod_path);
      const Verdict irr = is_irreducible(m, g.seed);
      const Verdict ind = is_indecomposable(m);
      Json j{{"relation", verify_relation(m)},
             {"irreducible", verdict_to_json(irr)},
             {"indecomposable", verdict_to_json(ind)},
             {"d_annihilator", d_annihilator(m).to_string()}};
      std::string text = "relation: " + std::string(verify_relation(m) ? "holds" : "fails") +
                         "\nirreducible: " + verdict_text(irr) + "\nindecomposable: " + verdict_text(ind) +
                         "\nAnn_D: " + d_annihilator(m).to_string() + "\n";
      try {
        const Verdict uni = is_uniserial(m);
        j["uniserial"] = verdict_to_json(uni);
        text += "uniserial: " + verdict_text(uni) + "\n";
      } catch (const Error& e) {
        j["uniserial"] = verdict_to_json({Tri::Unknown, "none", std::string(e.what())});
        text += "uniserial: Unknown (" + std::string(e.what()) + ")\n";
      }
      try {
        Json ws = Json::array();
        for (const auto& w : weight_decomposition(m)) {
          ws.push_back({{"f", w.f.to_string()}, {"multiplicity", w.multiplicity}, {"dim", w.generalized.dim()},
                        {"weight_space", w.is_weight_space}, {"basis", subspace_to_json(w.generalized)}});
          text += "weight " + w.f.to_string() + ": dim " + std::to_string(w.generalized.dim()) +
                  (w.is_weight_space ? ", weight space" : ", generalized only") + "\n";
        }
        j["weights"] = ws;
      } catch (const Error& e) {
        j["weights"] = nullptr;
        text += "weights: " + std::string(e.what()) + "\n";
      }
      emit(g, "module verdicts", j, text);
    };
  });

  // classify
  std::string cl_lambda = "0", cl_beta = "0";
  auto* classify = app.add_subcommand("classify", "irreducible modules at (lambda, beta) in characteristic p");
  classify->add_option("--lambda", cl_lambda)->capture_default_str();
  classify->add_option("--beta", cl_beta)->capture_default_str();
  classify->callback([&] {
    action = [&] {
      const AhContext ctx = context_of(g);
      const auto c = classify_char_p(ctx, parse_scalar(cl_lambda, ctx.field()), parse_scalar(cl_beta, ctx.field()));
      Json mods = Json::array();
      std::string text = "case " + std::to_string(c.case_id) + "\n";
      for (const auto& m : c.modules) {
        mods.push_back(module_to_json(m));
        text += module_text(m);
      }
      Json roots = Json::array();
      for (const auto& r : c.roots) roots.push_back(r.to_string());
      emit(g, "classify", {{"case", c.case_id}, {"roots", roots}, {"modules", mods}}, text);
    };
  });

  // induced
  std::string in_f = "x", in_v;
  unsigned in_steps = 64;
  auto* induced = app.add_subcommand("induced", "recover u_m from a . u_m in U(D f) by degree reduction");
  induced->add_option("a", in_v, "element a of A_h; the start is a . u_m")->required();
  induced->add_option("--f", in_f)->capture_default_str();
  induced->add_option("--max-steps", in_steps)->capture_default_str();
  induced->callback([&] {
    action = [&] {
      const AhContext ctx = context_of(g);
      const Poly f = parse_poly(in_f, ctx.field());
      const InducedElement start = induced_act(parse_element(in_v, ctx), InducedElement::generator(ctx, f));
      const Recovery r = recover_generator(start, in_steps);
      Json trail = Json::array();
      std::string text;
      for (const auto& v : r.trail) {
        trail.push_back(induced_to_json(v));
        text += v.to_string() + "\n";
      }
      text += (r.recovered ? "recovered u in " : "not recovered after ") + std::to_string(r.steps) + " steps";
      emit(g, "induced", {{"recovered", r.recovered}, {"steps", r.steps}, {"trail", trail}}, text);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (action) action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 0;
}
