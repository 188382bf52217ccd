#include "bihyp/json_io.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "bihyp/error.hpp"

namespace bihyp {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON descriptor: ") + e.what());
  }
}

double real(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string(what) + " must be finite");
  return v;
}

std::array<double, 4> quad(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 4) bad(std::string(what) + " must be an array of four numbers");
  return {real(j[0], what), real(j[1], what), real(j[2], what), real(j[3], what)};
}

RealVector real_vector(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of numbers");
  RealVector v;
  for (const auto& e : j) v.push_back(real(e, what));
  return v;
}

std::size_t positive_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) bad(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

int index_value(const Json& j) {
  if (!j.is_number_integer()) bad("index must be an integer");
  const auto i = j.get<long long>();
  if (i < 1 || i > 4) throw Error(ErrorCode::BadIndex, "idempotent index must be in 1..4");
  return static_cast<int>(i);
}

H2Set predicate_from_json(const Json& outer) {
  const Json& j = outer.at("lambda_predicate");
  if (!j.is_object()) bad("lambda_predicate must be an object");
  const std::string rule = j.at("rule").get<std::string>();
  LambdaPredicate p;
  if (j.contains("dim")) {
    p.dim = positive_size(j["dim"], "dim");
  } else if (outer.contains("dim")) {
    p.dim = positive_size(outer["dim"], "dim");
  }
  if (j.contains("box")) p.box = real(j["box"], "box");
  if (rule == "abs_sum_lt" || rule == "modulus_lt_or_one") {
    p.rule = rule == "abs_sum_lt" ? PredicateRule::AbsSumLt : PredicateRule::ModulusLtOrOne;
    p.c = real(j.at("c"), "c");
    if (!(p.c > 0.0)) bad("c must be positive");
    return p;
  }
  if (rule != "seminorm_ball") bad("unknown predicate rule '" + rule + "'");
  p.rule = PredicateRule::SeminormBall;
  const Json& list = j.at("seminorms");
  if (!list.is_array() || list.empty()) bad("seminorms must be a nonempty array");
  std::optional<std::size_t> fixed;
  for (const auto& s : list) {
    auto sn = std::make_shared<const Seminorm>(seminorm_from_json(s));
    if (auto d = sn->fixed_dim()) fixed = d;
    p.seminorms.push_back(std::move(sn));
  }
  if (j.contains("center")) {
    p.center = hvector_from_json(j["center"]);
    if (!j.contains("dim") && !outer.contains("dim")) p.dim = p.center->dim();
    if (p.center->dim() != p.dim) throw Error(ErrorCode::DimensionMismatch, "center dimension differs from dim");
  } else if (fixed && !j.contains("dim") && !outer.contains("dim")) {
    p.dim = *fixed;
  }
  if (fixed && *fixed != p.dim) throw Error(ErrorCode::DimensionMismatch, "seminorm dimension differs from dim");
  if (j.contains("epsilon")) p.epsilon = number_from_json(j["epsilon"]);
  if (!is_positive(p.epsilon)) bad("epsilon must be strictly positive in every component");
  if (j.contains("strict")) p.strict = j["strict"].get<bool>();
  return p;
}

}  // namespace

Bihyperbolic number_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_number()) return Bihyperbolic(real(j, "number"));
    if (j.is_string()) return parse_canonical_string(j.get<std::string>());
    if (j.is_array()) return Bihyperbolic::from_lambda(quad(j, "idempotent"));
    if (j.is_object()) {
      if (j.contains("idempotent")) return Bihyperbolic::from_lambda(quad(j["idempotent"], "idempotent"));
      if (j.contains("canonical")) {
        const auto c = quad(j["canonical"], "canonical");
        return Bihyperbolic::from_canonical({c[0], c[1], c[2], c[3]});
      }
    }
    bad("expected a bihyperbolic number");
  });
}

Json number_to_json(const Bihyperbolic& b) {
  const auto c = b.to_canonical();
  const auto& l = b.lambda();
  return Json{{"canonical", {c.x, c.y, c.z, c.w}}, {"idempotent", {l[0], l[1], l[2], l[3]}}};
}

HVector hvector_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_object() && j.contains("comps")) {
      const Json& c = j["comps"];
      if (!c.is_array() || c.size() != 4) bad("comps must hold four component vectors");
      HVector::Components comps;
      for (std::size_t i = 0; i < 4; ++i) comps[i] = real_vector(c[i], "comps entry");
      HVector x = HVector::from_components(std::move(comps));
      if (j.contains("dim") && positive_size(j["dim"], "dim") != x.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "dim differs from component length");
      }
      return x;
    }
    if (j.is_object() && j.contains("entries")) {
      std::vector<Bihyperbolic> entries;
      for (const auto& e : j["entries"]) entries.push_back(number_from_json(e));
      if (entries.empty()) bad("entries must be nonempty");
      return HVector::from_entries(entries);
    }
    return HVector::scalar(number_from_json(j));
  });
}

Json hvector_to_json(const HVector& x) {
  Json comps = Json::array();
  for (const auto& c : x.comps()) comps.push_back(c);
  return Json{{"dim", x.dim()}, {"comps", comps}};
}

ComponentNorm component_norm_from_json(const Json& j) {
  if (j.is_number()) {
    const double p = j.get<double>();
    if (p == 1.0) return ComponentNorm::P1;
    if (p == 2.0) return ComponentNorm::P2;
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "1" || s == "P1") return ComponentNorm::P1;
    if (s == "2" || s == "P2") return ComponentNorm::P2;
    if (s == "inf" || s == "Infinity" || s == "PInf") return ComponentNorm::PInf;
  }
  bad("component norm must be 1, 2 or \"inf\"");
}

Json component_norm_to_json(ComponentNorm p) {
  switch (p) {
    case ComponentNorm::P1:
      return 1;
    case ComponentNorm::P2:
      return 2;
    case ComponentNorm::PInf:
      return "inf";
  }
  return nullptr;
}

RealConvexBody body_from_json(const Json& j) {
  return guarded([&]() -> RealConvexBody {
    if (j.contains("hull")) {
      std::vector<RealVector> vertices;
      for (const auto& v : j["hull"]) vertices.push_back(real_vector(v, "hull vertex"));
      return make_hull(std::move(vertices));
    }
    if (j.contains("ball")) {
      const Json& b = j["ball"];
      const ComponentNorm p = b.contains("p") ? component_norm_from_json(b["p"]) : ComponentNorm::P2;
      const double r = b.contains("r") ? real(b["r"], "r") : 1.0;
      const bool closed = b.contains("closed") ? b["closed"].get<bool>() : true;
      return make_ball(p, r, closed);
    }
    bad("body must be {\"hull\":...} or {\"ball\":...}");
  });
}

Json body_to_json(const RealConvexBody& b) {
  if (const auto* ball = std::get_if<NormBall>(&b)) {
    return Json{{"ball", {{"p", component_norm_to_json(ball->p)}, {"r", ball->radius}, {"closed", ball->closed}}}};
  }
  return Json{{"hull", std::get<PolytopeHull>(b).vertices}};
}

Product product_from_json(const Json& j) {
  return guarded([&] {
    const Json& parts = j.at("product");
    std::array<RealConvexBody, 4> bodies;
    if (parts.is_object()) {
      bodies.fill(body_from_json(parts));
    } else if (parts.is_array() && parts.size() == 4) {
      for (std::size_t i = 0; i < 4; ++i) bodies[i] = body_from_json(parts[i]);
    } else {
      bad("product must list four bodies or give one body for all components");
    }
    std::optional<std::size_t> dim;
    for (const auto& b : bodies) {
      if (const auto* h = std::get_if<PolytopeHull>(&b)) {
        if (dim && *dim != h->vertices.front().size()) {
          throw Error(ErrorCode::DimensionMismatch, "product parts differ in dimension");
        }
        dim = h->vertices.front().size();
      }
    }
    if (j.contains("dim")) {
      const std::size_t d = positive_size(j["dim"], "dim");
      if (dim && *dim != d) throw Error(ErrorCode::DimensionMismatch, "dim differs from hull vertex length");
      dim = d;
    }
    return make_product(std::move(bodies), dim.value_or(1));
  });
}

H2Set set_from_json(const Json& j) {
  return guarded([&]() -> H2Set {
    if (!j.is_object()) bad("set descriptor must be an object");
    if (j.contains("product")) return product_from_json(j);
    if (j.contains("lambda_predicate")) return predicate_from_json(j);
    bad("set descriptor needs \"product\" or \"lambda_predicate\"");
  });
}

Json set_to_json(const H2Set& s) {
  if (s.is_product()) {
    const auto& p = s.product();
    Json parts = Json::array();
    for (const auto& b : p.parts) parts.push_back(body_to_json(b));
    return Json{{"product", parts}, {"dim", p.dim}};
  }
  const auto& p = *s.predicate();
  Json inner{{"dim", p.dim}};
  switch (p.rule) {
    case PredicateRule::AbsSumLt:
      inner["rule"] = "abs_sum_lt";
      inner["c"] = p.c;
      break;
    case PredicateRule::ModulusLtOrOne:
      inner["rule"] = "modulus_lt_or_one";
      inner["c"] = p.c;
      break;
    case PredicateRule::SeminormBall: {
      inner["rule"] = "seminorm_ball";
      Json list = Json::array();
      for (const auto& sn : p.seminorms) list.push_back(seminorm_to_json(*sn));
      inner["seminorms"] = list;
      if (p.center) inner["center"] = hvector_to_json(*p.center);
      inner["epsilon"] = number_to_json(p.epsilon);
      inner["strict"] = p.strict;
      break;
    }
  }
  if (p.box > 0.0) inner["box"] = p.box;
  return Json{{"lambda_predicate", inner}};
}

Seminorm seminorm_from_json(const Json& j) {
  return guarded([&]() -> Seminorm {
    if (!j.is_object()) bad("seminorm descriptor must be an object");
    if (j.contains("canonical_norm")) {
      const Json& n = j["canonical_norm"];
      if (n.is_array()) {
        if (n.size() != 4) bad("canonical_norm needs four component norms");
        CanonicalNorm c;
        for (std::size_t i = 0; i < 4; ++i) c.norms[i] = component_norm_from_json(n[i]);
        return Seminorm{c};
      }
      return Seminorm{CanonicalNorm::uniform(component_norm_from_json(n))};
    }
    if (j.contains("coordinate")) {
      const Json& c = j["coordinate"];
      CoordinateSeminorm s{{false, false, false, false}, ComponentNorm::P2};
      for (const auto& i : c.at("kept")) s.kept[static_cast<std::size_t>(index_value(i) - 1)] = true;
      if (c.contains("p")) s.base = component_norm_from_json(c["p"]);
      return Seminorm{s};
    }
    if (j.contains("gauge")) return Seminorm{GaugeSeminorm{product_from_json(j["gauge"])}};
    if (j.contains("sup")) {
      SupFamily f;
      for (const auto& m : j["sup"]) f.members.push_back(seminorm_from_json(m));
      if (f.members.empty()) bad("sup needs at least one member");
      return Seminorm{std::move(f)};
    }
    bad("unknown seminorm descriptor");
  });
}

Json seminorm_to_json(const Seminorm& p) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CanonicalNorm>) {
          Json n = Json::array();
          for (auto c : s.norms) n.push_back(component_norm_to_json(c));
          return Json{{"canonical_norm", n}};
        } else if constexpr (std::is_same_v<T, CoordinateSeminorm>) {
          Json kept = Json::array();
          for (int i = 0; i < 4; ++i) {
            if (s.kept[static_cast<std::size_t>(i)]) kept.push_back(i + 1);
          }
          return Json{{"coordinate", {{"kept", kept}, {"p", component_norm_to_json(s.base)}}}};
        } else if constexpr (std::is_same_v<T, GaugeSeminorm>) {
          return Json{{"gauge", set_to_json(s.set)}};
        } else {
          Json m = Json::array();
          for (const auto& x : s.members) m.push_back(seminorm_to_json(x));
          return Json{{"sup", m}};
        }
      },
      p.form);
}

SeminormFamily family_from_json(const Json& j) {
  return guarded([&] {
    const Json& list = j.is_object() && j.contains("family") ? j["family"] : j;
    if (!list.is_array() || list.empty()) bad("seminorm family must be a nonempty array");
    SeminormFamily f;
    for (const auto& m : list) f.members.push_back(seminorm_from_json(m));
    return f;
  });
}

Json family_to_json(const SeminormFamily& f) {
  Json out = Json::array();
  for (const auto& m : f.members) out.push_back(seminorm_to_json(m));
  return out;
}

Json witness_to_json(const Witness& w) {
  Json pts = Json::array();
  for (const auto& p : w.points) pts.push_back(hvector_to_json(p));
  Json sc = Json::array();
  for (const auto& s : w.scalars) sc.push_back(number_to_json(s));
  return Json{{"kind", witness_kind_name(w.kind)}, {"points", pts}, {"scalars", sc}, {"indices", w.indices}};
}

Witness witness_from_json(const Json& j) {
  return guarded([&] {
    const auto kind = witness_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) bad("unknown witness kind");
    Witness w{*kind, {}, {}, {}};
    if (j.contains("points")) {
      for (const auto& p : j["points"]) w.points.push_back(hvector_from_json(p));
    }
    if (j.contains("scalars")) {
      for (const auto& s : j["scalars"]) w.scalars.push_back(number_from_json(s));
    }
    if (j.contains("indices")) w.indices = j["indices"].get<std::vector<int>>();
    return w;
  });
}

Json report_to_json(const CheckReport& r) {
  Json out{{"verdict", verdict_name(r.verdict)},
           {"trials", r.trials},
           {"seed", r.seed},
           {"witness", r.witness ? witness_to_json(*r.witness) : Json(nullptr)}};
  if (!r.found.empty()) {
    Json f = Json::array();
    for (const auto& b : r.found) f.push_back(number_to_json(b));
    out["found"] = f;
  }
  return out;
}

Json gauge_to_json(const GaugeResult& g) {
  const auto& l = g.value.lambda();
  return Json{{"value", {l[0], l[1], l[2], l[3]}},
              {"per_component", g.per_component},
              {"method", gauge_method_name(g.method)}};
}

}  // namespace bihyp
