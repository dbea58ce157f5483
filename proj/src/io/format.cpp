#include "rootfunc/errors.hpp"
#include "rootfunc/io.hpp"

namespace rootfunc::io {
namespace {

void append_power(std::string& out, const std::string& name, unsigned e) {
  if (!out.empty()) out += '*';
  out += name;
  if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string format_monomial(const Monomial& m, const VarContext& context) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m.x(i) > 0) append_power(out, context.name(i), m.x(i));
  }
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m.y(i) > 0) append_power(out, context.partner_name(i), m.y(i));
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Scalar magnitude = abs(c);
    if (m.is_one()) {
      out += scalar_to_string(magnitude);
    } else {
      if (magnitude != 1) out += scalar_to_string(magnitude) + "*";
      out += format_monomial(m, *p.context());
    }
  }
  return out;
}

std::string format_functional(const Functional& L) {
  std::string out = "{";
  bool first = true;
  for (const auto& [m, v] : L.support()) {
    if (!first) out += ", ";
    first = false;
    out += format_monomial(m, *L.context()) + ": " + scalar_to_string(v);
  }
  return out + "}";
}

Json to_json(const Polynomial& p) {
  const bool x_only = p.is_x_only();
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    const std::size_t width = x_only ? m.arity() : m.width();
    for (std::size_t k = 0; k < width; ++k) exps.push_back(m[k]);
    Json term;
    term["coeff"] = scalar_to_string(c);
    term["exps"] = std::move(exps);
    terms.push_back(std::move(term));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const Functional& L) {
  Json support = Json::array();
  for (const auto& [m, v] : L.support()) {
    Json exps = Json::array();
    for (std::size_t k = 0; k < m.arity(); ++k) exps.push_back(m.x(k));
    Json entry;
    entry["exps"] = std::move(exps);
    entry["value"] = scalar_to_string(v);
    support.push_back(std::move(entry));
  }
  Json out;
  out["support"] = std::move(support);
  if (L.certified_degree()) {
    out["certified_degree"] = *L.certified_degree();
  } else {
    out["certified_degree"] = nullptr;
  }
  return out;
}

Json to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& g : trace.steps) steps.push_back(to_json(g));
  Json out;
  out["input"] = to_json(trace.input);
  out["steps"] = std::move(steps);
  out["iterations"] = trace.iterations;
  out["stabilized"] = trace.stabilized;
  return out;
}

Functional functional_from_json(const nlohmann::json& j, const ContextPtr& context,
                                const FieldSpec& field) {
  if (!j.is_object() || !j.contains("support") || !j["support"].is_array()) {
    throw Error("functional JSON needs a \"support\" array");
  }
  Functional out(context, field);
  for (const auto& entry : j["support"]) {
    if (!entry.contains("exps") || !entry.contains("value") || !entry["exps"].is_array() ||
        !entry["value"].is_string()) {
      throw Error("functional JSON entries need \"exps\" and a string \"value\"");
    }
    auto exps = entry["exps"].get<std::vector<unsigned>>();
    if (exps.size() != context->size()) {
      throw ArityError("functional JSON exponent vector has wrong length");
    }
    Scalar v;
    try {
      v = Scalar(entry["value"].get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error("functional JSON value is not a rational: " + entry["value"].get<std::string>());
    }
    if (v.get_den() == 0) throw DomainError("zero denominator in functional JSON");
    v.canonicalize();
    Monomial m = Monomial::from_exponents(context->size(), exps);
    out.set(m, field.add(out.value(m), field.from_rational(v)));
  }
  return out;
}

}  // namespace rootfunc::io
