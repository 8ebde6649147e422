#pragma once

// JSON forms of the library values. Every top-level document carries "schema": "ahlib/1".
// Scalars and polynomials are written as strings in the text syntax of parse.hpp.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "ahlib/analysis.hpp"
#include "ahlib/parse.hpp"
#include "ahlib/partitions.hpp"

namespace ahlib {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ahlib/1";

inline Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

inline Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

inline Matrix matrix_from_json(const Json& j, const Field& f) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be arrays");
    Vec row;
    for (const auto& c : r) row.push_back(parse_scalar(c.is_string() ? c.get<std::string>() : c.dump(), f));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix");
  const Matrix m = Matrix::from_rows(f, rows);
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "matrix must be square");
  return m;
}

inline Json element_to_json(const AhElement& a) {
  Json terms = Json::array();
  for (const auto& [mono, c] : a.ordered_terms()) {
    terms.push_back({{"x", mono.first}, {"y", mono.second}, {"c", c.to_string()}});
  }
  return {{"h", a.context().h().to_string()}, {"field", a.context().field().to_string()}, {"terms", terms}};
}

inline AhElement element_from_json(const Json& j) {
  const Field f = parse_field(j.at("field").get<std::string>());
  const AhContext ctx(parse_poly(j.at("h").get<std::string>(), f));
  AhElement a(ctx);
  for (const auto& t : j.at("terms")) {
    a.add_term(t.at("x").get<unsigned>(), t.at("y").get<unsigned>(), parse_scalar(t.at("c").get<std::string>(), f));
  }
  return a;
}

inline Json provenance_to_json(const Provenance& p) {
  Json out{{"kind", provenance_kind(p)}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, provenance::OneDim>) {
          out["lambda"] = v.lambda.to_string();
          out["mu"] = v.mu.to_string();
        } else if constexpr (std::is_same_v<T, provenance::NModule>) {
          out["lambda"] = v.lambda.to_string();
          out["q"] = v.q.to_string();
          out["n"] = v.n;
        } else if constexpr (std::is_same_v<T, provenance::LFactor>) {
          out["f"] = v.f.to_string();
          Json g = Json::array();
          for (const auto& gj : v.g) g.push_back(gj.to_string());
          out["g"] = g;
          out["g_prime"] = std::string(to_string(v.g_prime));
        } else if constexpr (std::is_same_v<T, provenance::LZBeta>) {
          out["lambda"] = v.lambda.to_string();
          out["beta"] = v.beta.to_string();
        } else if constexpr (std::is_same_v<T, provenance::Custom>) {
          out["label"] = v.label;
        }
      },
      p);
  return out;
}

inline Json module_to_json(const FinModule& m) {
  return {{"schema", kSchema},
          {"h", m.context().h().to_string()},
          {"field", m.field().to_string()},
          {"dim", m.dim()},
          {"X", matrix_to_json(m.X())},
          {"Y", matrix_to_json(m.Y())},
          {"provenance", provenance_to_json(m.provenance())}};
}

/// Reads a module document. Constructor provenances are rebuilt from their parameters and must
/// reproduce the stored matrices; anything else becomes Custom.
inline FinModule module_from_json(const Json& j) {
  const Field f = parse_field(j.at("field").get<std::string>());
  const AhContext ctx(parse_poly(j.at("h").get<std::string>(), f));
  const Matrix x = matrix_from_json(j.at("X"), f);
  const Matrix y = matrix_from_json(j.at("Y"), f);
  const std::string kind = j.contains("provenance") ? j["provenance"].value("kind", "Custom") : "Custom";
  const Json prov = j.contains("provenance") ? j["provenance"] : Json::object();
  auto scalar = [&](const char* key) { return parse_scalar(prov.at(key).get<std::string>(), f); };
  auto poly = [&](const std::string& s) { return parse_poly(s, f); };

  std::optional<FinModule> rebuilt;
  if (kind == "OneDim") {
    rebuilt = one_dim(ctx, scalar("lambda"), scalar("mu"));
  } else if (kind == "NModule") {
    rebuilt = n_module(ctx, scalar("lambda"), poly(prov.at("q").get<std::string>()), prov.at("n").get<unsigned>());
  } else if (kind == "LFactor") {
    std::vector<Poly> g;
    for (const auto& gj : prov.at("g")) g.push_back(poly(gj.get<std::string>()));
    rebuilt = l_module_factor(ctx, poly(prov.at("f").get<std::string>()), g);
  } else if (kind == "LZBeta") {
    rebuilt = l_z_beta(ctx, scalar("lambda"), scalar("beta"));
  }
  if (rebuilt) {
    if (rebuilt->X() != x || rebuilt->Y() != y) {
      throw Error(ErrorCode::InvalidArgument, "stored matrices do not match the " + kind + " provenance");
    }
    return *rebuilt;
  }
  if (kind == "WeylRestrict") return FinModule(ctx, x, y, provenance::WeylRestrict{});
  return custom_module(ctx, x, y, prov.value("label", "custom"));
}

inline Json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, Vec>) return vec_to_json(v);
        else if constexpr (std::is_same_v<T, Matrix>) return matrix_to_json(v);
        else return v;
      },
      w);
}

inline Json verdict_to_json(const Verdict& v) {
  return {{"value", std::string(to_string(v.value))}, {"method", v.method}, {"witness", witness_to_json(v.witness)}};
}

inline Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& v : s.basis()) rows.push_back(vec_to_json(v));
  return rows;
}

inline Json lattice_to_json(const SubmoduleLattice& l) {
  Json members = Json::array();
  for (const auto& s : l.members) members.push_back(subspace_to_json(s));
  return {{"is_chain", l.is_chain}, {"count", l.members.size()}, {"subspaces", members}};
}

inline Json table_to_json(const PartitionCoeffTable& t) {
  Json entries = Json::array();
  for (const auto& [mu, c] : t.entries()) entries.push_back({{"parts", mu.parts()}, {"coeff", c.get_str()}});
  return {{"k", t.k()}, {"entries", entries}};
}

inline Json induced_to_json(const InducedElement& v) {
  Json terms = Json::array();
  for (const auto& [k, r] : v.terms()) terms.push_back({{"y", k}, {"r", r.to_string()}});
  return {{"f", v.f().to_string()}, {"terms", terms}};
}

}  // namespace ahlib
