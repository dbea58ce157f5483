#include "rootfunc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "rootfunc/bezoutian.hpp"
#include "rootfunc/errors.hpp"
#include "rootfunc/io.hpp"
#include "rootfunc/linalg.hpp"
#include "rootfunc/reduce.hpp"
#include "rootfunc/slices.hpp"

namespace rootfunc::cli {
namespace {

struct Options {
  std::string system_path;
  bool json = false;
  std::optional<int> max_iters;
  Convention convention = Convention::forward;
  int degree = 0;
  int epsilon = 0;
  std::optional<int> escalate;
  std::string poly;
  bool trace = false;
  std::string functional_path;
};

EngineConfig engine_config(const Options& o) {
  EngineConfig config;
  config.epsilon = o.epsilon;
  if (o.escalate) {
    config.escalate = true;
    config.epsilon_escalation_limit = *o.escalate;
  }
  config.membership_iteration_cap = o.max_iters;
  config.convention = o.convention;
  return config;
}

void emit(std::ostream& out, const io::Json& j) { out << j.dump() << '\n'; }

void cmd_bezoutian(const io::SystemFile& sf, const Options& o, std::ostream& out) {
  Polynomial B = bezoutian(sf.system, o.convention);
  if (o.json) {
    emit(out, io::to_json(B));
  } else {
    out << io::format_polynomial(B) << '\n';
  }
}

void cmd_slice(const io::SystemFile& sf, const Options& o, std::ostream& out) {
  SliceBasis slice = ideal_slice_basis(sf.system, o.degree);
  if (o.json) {
    io::Json basis = io::Json::array();
    for (std::size_t k = 0; k < slice.rank(); ++k) basis.push_back(io::to_json(slice.row_polynomial(k)));
    io::Json j;
    j["degree"] = o.degree;
    j["rank"] = slice.rank();
    j["basis"] = std::move(basis);
    emit(out, j);
    return;
  }
  out << "rank " << slice.rank() << '\n';
  for (std::size_t k = 0; k < slice.rank(); ++k) {
    out << io::format_polynomial(slice.row_polynomial(k)) << '\n';
  }
}

void cmd_annihilators(const io::SystemFile& sf, const Options& o, std::ostream& out) {
  std::vector<Functional> basis = annihilator_basis(sf.system, o.degree);
  if (o.json) {
    io::Json arr = io::Json::array();
    for (const auto& L : basis) arr.push_back(io::to_json(L));
    io::Json j;
    j["degree"] = o.degree;
    j["dimension"] = basis.size();
    j["basis"] = std::move(arr);
    emit(out, j);
    return;
  }
  out << "dimension " << basis.size() << '\n';
  for (const auto& L : basis) out << io::format_functional(L) << '\n';
}

void cmd_unit(const io::SystemFile& sf, const Options& o, std::ostream& out) {
  UnitFunctional E = find_unit_functional(sf.system, engine_config(o));
  if (o.json) {
    io::Json j;
    j["epsilon"] = E.epsilon;
    j["free_parameters"] = E.free_parameters;
    j["functional"] = io::to_json(E.base);
    emit(out, j);
    return;
  }
  out << io::format_functional(E.base) << '\n';
}

Reducer make_reducer(const io::SystemFile& sf, const Options& o) {
  EngineConfig config = engine_config(o);
  return Reducer(sf.system, find_unit_functional(sf.system, config), config);
}

void cmd_reduce(const io::SystemFile& sf, const Options& o, std::ostream& out) {
  Polynomial G = io::parse_poly(o.poly, sf.context, sf.field);
  Reducer reducer = make_reducer(sf, o);
  auto [nf, trace] = reducer.normal_form(G);
  if (o.json) {
    io::Json j;
    j["normal_form"] = io::to_json(nf);
    j["iterations"] = trace.iterations;
    j["stabilized"] = trace.stabilized;
    if (o.trace) j["trace"] = io::to_json(trace);
    emit(out, j);
    return;
  }
  if (o.trace) {
    for (std::size_t p = 0; p < trace.steps.size(); ++p) {
      out << "step " << p << ": " << io::format_polynomial(trace.steps[p]) << '\n';
    }
  }
  out << io::format_polynomial(nf) << '\n';
}

void cmd_member(const io::SystemFile& sf, const Options& o, std::ostream& out) {
  Polynomial G = io::parse_poly(o.poly, sf.context, sf.field);
  const bool member = make_reducer(sf, o).is_member(G);
  if (o.json) {
    io::Json j;
    j["member"] = member;
    emit(out, j);
  } else {
    out << (member ? "true" : "false") << '\n';
  }
}

void cmd_quotient_basis(const io::SystemFile& sf, const Options& o, std::ostream& out) {
  Reducer reducer = make_reducer(sf, o);
  const int delta = sf.system.delta_f();
  const std::size_t n = sf.context->size();
  MonomialIndex index(n, delta);
  std::vector<std::vector<Scalar>> accepted;
  std::vector<std::pair<Monomial, Polynomial>> chosen;
  std::vector<Monomial> monos = x_monomials_up_to(n, delta);
  std::reverse(monos.begin(), monos.end());
  for (const auto& m : monos) {
    Polynomial nf = reducer.normal_form(Polynomial::monomial(sf.context, sf.field, m)).first;
    std::vector<Scalar> coords(index.size(), Scalar(0));
    for (const auto& [t, c] : nf.terms()) coords[*index.find(t)] = c;
    accepted.push_back(coords);
    if (rref(ExactMatrix::from_rows(accepted, index.size(), sf.field)).rank() < accepted.size()) {
      accepted.pop_back();
      continue;
    }
    chosen.emplace_back(m, std::move(nf));
  }
  if (o.json) {
    io::Json arr = io::Json::array();
    for (const auto& [m, nf] : chosen) {
      io::Json e;
      e["monomial"] = io::format_monomial(m, *sf.context);
      e["normal_form"] = io::to_json(nf);
      arr.push_back(std::move(e));
    }
    io::Json j;
    j["dimension"] = chosen.size();
    j["basis"] = std::move(arr);
    emit(out, j);
    return;
  }
  out << "dimension " << chosen.size() << '\n';
  for (const auto& [m, nf] : chosen) {
    out << io::format_monomial(m, *sf.context) << " -> " << io::format_polynomial(nf) << '\n';
  }
}

void cmd_star(const io::SystemFile& sf, const Options& o, std::ostream& out) {
  std::ifstream in(o.functional_path, std::ios::binary);
  if (!in) throw Error("cannot open functional file '" + o.functional_path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad functional file: ") + e.what());
  }
  Functional L = io::functional_from_json(j, sf.context, sf.field);
  Polynomial F = io::parse_poly(o.poly, sf.context, sf.field);
  Polynomial result = star_poly(L, F, sf.system, o.convention);
  if (o.json) {
    emit(out, io::to_json(result));
  } else {
    out << io::format_polynomial(result) << '\n';
  }
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bezoutian root functionals and normal forms", "rootfunc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--system", o.system_path, "System file")->required()->check(CLI::ExistingFile);
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--max-iters", o.max_iters, "Reduction iteration cap")->check(CLI::PositiveNumber);
  std::map<std::string, Convention> conventions{{"forward", Convention::forward},
                                                {"reverse", Convention::reverse}};
  app.add_option("--convention", o.convention, "Divided-difference convention")
      ->transform(CLI::CheckedTransformer(conventions));

  auto add_engine_opts = [&](CLI::App* sub) {
    sub->add_option("--epsilon", o.epsilon, "Slack degree of the unit functional")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--escalate", o.escalate, "Retry with up to K larger epsilons")
        ->check(CLI::NonNegativeNumber);
  };

  auto* bez = app.add_subcommand("bezoutian", "Print B(x,y)");
  auto* slice = app.add_subcommand("slice", "Basis of the ideal slice");
  slice->add_option("--degree", o.degree)->required();
  auto* ann = app.add_subcommand("annihilators", "Functionals vanishing on the slice");
  ann->add_option("--degree", o.degree)->required();
  auto* unit = app.add_subcommand("unit", "Unit bounded root functional");
  add_engine_opts(unit);
  auto* reduce = app.add_subcommand("reduce", "Normal form of a polynomial");
  reduce->add_option("--poly", o.poly)->required();
  reduce->add_flag("--trace", o.trace);
  add_engine_opts(reduce);
  auto* member = app.add_subcommand("member", "Ideal membership");
  member->add_option("--poly", o.poly)->required();
  add_engine_opts(member);
  auto* quotient = app.add_subcommand("quotient-basis", "Basis of the quotient ring");
  add_engine_opts(quotient);
  auto* star = app.add_subcommand("star", "Extension L * F");
  star->add_option("--functional", o.functional_path)->required()->check(CLI::ExistingFile);
  star->add_option("--poly", o.poly)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, err, err);
    return kUsage;
  }

  try {
    io::SystemFile sf = io::load_system_file(o.system_path);
    if (*bez) cmd_bezoutian(sf, o, out);
    else if (*slice) cmd_slice(sf, o, out);
    else if (*ann) cmd_annihilators(sf, o, out);
    else if (*unit) cmd_unit(sf, o, out);
    else if (*reduce) cmd_reduce(sf, o, out);
    else if (*member) cmd_member(sf, o, out);
    else if (*quotient) cmd_quotient_basis(sf, o, out);
    else if (*star) cmd_star(sf, o, out);
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const CapExceeded& e) {
    err << "undecided: " << e.what() << '\n';
    return kUndecided;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace rootfunc::cli
