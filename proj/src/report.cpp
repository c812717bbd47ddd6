#include "hurwitz/report.hpp"

namespace hurwitz {

namespace {

Json base(const char* command, const ProblemFile& p) {
  Json j;
  j["command"] = command;
  j["field"] = field_json(p);
  j["dimension"] = p.dim;
  j["cartan"] = matrix_json(p.matrix);
  return j;
}

Json elements_json(const std::vector<FieldElement>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(e.to_string());
  return a;
}

Json interval_json(const Interval& i) { return Json::array({i.lo.get_str(), i.hi.get_str()}); }

Json blocks_json(const std::vector<std::vector<std::size_t>>& blocks) {
  Json a = Json::array();
  for (const auto& b : blocks) {
    Json block = Json::array();
    for (std::size_t i : b) block.push_back(i + 1);
    a.push_back(block);
  }
  return a;
}

Json galois_json(const std::vector<EmbeddingPd>& v) {
  Json a = Json::array();
  for (const auto& e : v) {
    Json j;
    j["embedding"] = e.index;
    j["real"] = e.is_real;
    j["positive_definite"] = e.positive_definite ? Json(*e.positive_definite) : Json(nullptr);
    j["minor_signs"] = e.minor_signs;
    a.push_back(j);
  }
  return a;
}

std::vector<int> signs(const std::vector<FieldElement>& v) {
  std::vector<int> out;
  for (const auto& e : v) out.push_back(sign(e));
  return out;
}

CartanMatrix cartan_of(const ProblemFile& p) { return CartanMatrix(p.matrix); }

}  // namespace

std::string poly_variable(const NumberField& k) {
  return !k.is_rational() && k.symbol() == "x" ? "t" : "x";
}

Json field_json(const ProblemFile& p) {
  Json j;
  if (!p.field_decl) {
    j["kind"] = "rational";
    return j;
  }
  j["kind"] = "number_field";
  j["polynomial"] = p.field_decl->minpoly.to_string(p.field_decl->symbol);
  j["root"] = interval_json(p.field_decl->root);
  j["symbol"] = p.field_decl->symbol;
  j["degree"] = p.field.degree();
  Json em = Json::array();
  const FieldElement g = FieldElement::generator(p.field);
  const Rational eps = Rational(1) / Rational(Integer(1) << 60);
  for (const auto& e : p.field.embeddings()) {
    const Box b = evaluate(g, e, eps);
    Json x;
    x["index"] = e.index;
    x["real"] = e.is_real;
    x["approx"] = Json::array({b.re.mid().get_d(), e.is_real ? 0.0 : b.im.mid().get_d()});
    em.push_back(x);
  }
  j["embeddings"] = em;
  return j;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json order_json(const OrderResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["order"] = r.is_finite() ? Json(r.order) : Json(nullptr);
  j["cap"] = r.cap;
  j["degenerate"] = r.degenerate;
  if (r.witness) {
    const Witness& w = *r.witness;
    Json wj;
    wj["kind"] = to_string(w.kind);
    wj["embedding"] = w.embedding ? Json(*w.embedding) : Json(nullptr);
    if (w.rectangle) {
      Json rect;
      rect["re"] = interval_json(w.rectangle->re);
      rect["im"] = interval_json(w.rectangle->im);
      wj["rectangle"] = rect;
    } else {
      wj["rectangle"] = nullptr;
    }
    wj["value"] = w.value;
    wj["detail"] = w.detail;
    j["witness"] = wj;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json orbit_json(const OrbitResult& r, bool emit_states) {
  Json j;
  j["status"] = to_string(r.status);
  j["size"] = r.size;
  j["cap"] = r.cap;
  if (emit_states) {
    Json s = Json::array();
    for (const auto& t : r.states) s.push_back(t.key());
    j["states"] = s;
  }
  return j;
}

Json closure_json(const ClosureResult& r, bool emit_elements) {
  Json j;
  j["status"] = to_string(r.status);
  j["order"] = r.status == ClosureResult::Status::Finite ? Json(r.size) : Json(nullptr);
  j["size"] = r.size;
  j["cap"] = r.cap;
  if (emit_elements) {
    Json s = Json::array();
    for (const auto& m : r.elements) s.push_back(m.key());
    j["elements"] = s;
  }
  return j;
}

Json analyze_report(const ProblemFile& p) {
  const CartanMatrix c = cartan_of(p);
  Json j = base("analyze", p);
  const FieldElement d = det(c.matrix());
  const auto minors = leading_principal_minors(c.matrix());
  j["symmetric"] = c.symmetric();
  j["blocks"] = blocks_json(cartan_blocks(c));
  j["det"] = d.to_string();
  j["invertible"] = !d.is_zero();
  j["leading_minors"] = elements_json(minors);
  j["minor_signs"] = signs(minors);
  if (c.symmetric()) {
    j["positive_definite"] = is_positive_definite(c.matrix());
    j["galois_pd"] = galois_json(galois_pd_check(c));
  } else {
    j["positive_definite"] = nullptr;
    j["galois_pd"] = nullptr;
  }
  return j;
}

Json coxeter_report(const ProblemFile& p, const OrderOptions& opt) {
  const CartanMatrix c = cartan_of(p);
  const std::string var = poly_variable(p.field);
  const auto [u, v] = coleman_decompose(c);
  const Matrix cox = coxeter_element(reflections_from_cartan(c));
  const Polynomial direct = charpoly(cox);
  const Polynomial coleman = coleman_charpoly(c);
  if (!(direct == coleman))
    throw Error(ErrorCode::InternalMismatch, "charpoly(c) = " + direct.to_string(var) +
                                                 " but det(xU + V) = " + coleman.to_string(var));
  const FieldElement d = det(c.matrix());
  const FieldElement at1 = coleman.eval(FieldElement::one(p.field));
  if (!(d == at1))
    throw Error(ErrorCode::InternalMismatch, "det C differs from the charpoly at 1");

  Json j = base("coxeter", p);
  j["variable"] = var;
  j["U"] = matrix_json(u);
  j["V"] = matrix_json(v);
  j["coxeter_element"] = matrix_json(cox);
  j["charpoly"] = direct.to_string(var);
  j["coleman_charpoly"] = coleman.to_string(var);
  j["charpoly_match"] = true;
  j["det"] = d.to_string();
  j["charpoly_at_1"] = at1.to_string();
  j["det_match"] = true;
  const OrderResult o = element_order(cox, opt);
  j["order"] = o.is_finite() ? Json(o.order) : Json(nullptr);
  j["order_result"] = order_json(o);
  return j;
}

Json orbit_report(const ProblemFile& p, std::size_t cap, bool emit_states) {
  const CartanMatrix c = cartan_of(p);
  Json j = base("orbit", p);
  j["orbit"] = orbit_json(orbit(TupleState{reflections_from_cartan(c).refs}, cap), emit_states);
  return j;
}

Json group_report(const ProblemFile& p, std::size_t cap, bool emit_elements) {
  const CartanMatrix c = cartan_of(p);
  Json j = base("group", p);
  j["closure"] = closure_json(group_closure(reflections_from_cartan(c).refs, cap), emit_elements);
  return j;
}

Json certify_report(const ProblemFile& p, const CertifyOptions& opt, bool emit_states) {
  const CartanMatrix c = cartan_of(p);
  const CertificateReport r = certify(c, opt);
  Json j = base("certify", p);
  j["symmetric"] = c.symmetric();
  j["det"] = r.det.to_string();
  j["invertible"] = r.invertible;
  j["hypotheses"] = r.hypotheses;
  j["blocks"] = blocks_json(r.blocks);
  j["leading_minors"] = elements_json(r.minors);
  j["positive_definite"] = r.pd;
  j["galois_pd"] = galois_json(r.galois_pd);
  Json pairs = Json::array();
  for (const auto& row : r.pair_orders) {
    Json jr = Json::array();
    for (const auto& o : row) jr.push_back(order_json(o));
    pairs.push_back(jr);
  }
  j["pair_orders"] = pairs;
  j["coxeter_element"] = matrix_json(r.coxeter);
  j["coxeter_order"] = r.coxeter_order.is_finite() ? Json(r.coxeter_order.order) : Json(nullptr);
  j["coxeter_order_result"] = order_json(r.coxeter_order);
  j["orbit_probe"] = orbit_json(r.orbit_probe, emit_states);
  j["closure"] = r.closure ? closure_json(*r.closure, false) : Json(nullptr);
  j["conclusion"] = to_string(r.conclusion);
  return j;
}

}  // namespace hurwitz
