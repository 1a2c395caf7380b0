#include "interior/cli/run.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "interior/cli/generators.hpp"
#include "interior/cli/graph_io.hpp"
#include "interior/closed_form.hpp"
#include "interior/error.hpp"

namespace interior::cli {

namespace {

// Graphs at most this large go to the non-expanding recursion under "auto".
constexpr std::size_t kAutoRecursionVertices = 20;

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::Ehrhart, "ehrhart"},     {Method::NonExpanding, "nonexpanding"}, {Method::AltCycle, "altcycle"},
    {Method::ClosedForm, "closed-form"}, {Method::Auto, "auto"},              {Method::Verify, "verify"},
};

struct Input {
  BipartiteGraph graph;
  std::optional<std::pair<std::size_t, std::size_t>> complete;
};

Input load(const RunConfig& config) {
  if (config.input.has_value() == config.generator.has_value())
    throw InvalidInput("give exactly one of an input file or a generator spec");
  if (config.input) return {parse_graph_file(*config.input), std::nullopt};
  auto generated = generate(*config.generator, config.seed);
  return {std::move(generated.graph), generated.complete};
}

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

IntPolynomial compute(Method m, const Input& in, const RunConfig& config) {
  switch (m) {
    case Method::Ehrhart: return interior_via_ehrhart(in.graph, config.enumeration);
    case Method::NonExpanding: return interior_nonexpanding(in.graph, config.recursion);
    case Method::AltCycle: return interior_altcycle(in.graph, config.recursion);
    case Method::ClosedForm:
      if (!in.complete) throw InvalidInput("the closed form needs a complete-graph generator spec");
      return interior_complete(in.complete->first, in.complete->second);
    case Method::Auto:
    case Method::Verify: break;
  }
  throw std::logic_error("compute() called with a composite method");
}

MethodResult run_one(Method m, const Input& in, const RunConfig& config, bool skip_on_limit) {
  MethodResult r;
  r.method = m;
  try {
    r.millis = time_ms([&] { r.polynomial = compute(m, in, config); });
  } catch (const ResourceLimit& e) {
    if (!skip_on_limit) throw;
    r.skipped = e.what();
    return r;
  }
  if (config.inject_fault == m) *r.polynomial += IntPolynomial{1};
  return r;
}

nlohmann::json integer_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

nlohmann::json coefficients_json(const IntPolynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(integer_json(c));
  return out;
}

}  // namespace

std::string_view to_string(Method m) {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [method, n] : kMethodNames)
    if (n == name) return method;
  return std::nullopt;
}

Report run(const RunConfig& config) {
  const Input in = load(config);
  if (in.graph.vertex_count() == 0) throw InvalidInput("graph has no vertices");

  Report report;
  report.graph = in.graph;
  report.method = config.method;

  switch (config.method) {
    case Method::Verify: {
      std::vector<Method> methods{Method::Ehrhart, Method::NonExpanding, Method::AltCycle};
      if (in.complete) methods.push_back(Method::ClosedForm);
      for (Method m : methods) report.results.push_back(run_one(m, in, config, true));

      const MethodResult* first = nullptr;
      bool agree = true;
      for (const auto& r : report.results) {
        if (!r.polynomial) continue;
        if (!first)
          first = &r;
        else if (!(*r.polynomial == *first->polynomial))
          agree = false;
      }
      if (!first) throw ResourceLimit("every method exceeded its resource limits");
      report.polynomial = *first->polynomial;
      report.agreement = agree;
      break;
    }
    case Method::Auto: {
      Method chosen = Method::Ehrhart;
      if (in.complete)
        chosen = Method::ClosedForm;
      else if (in.graph.vertex_count() <= kAutoRecursionVertices)
        chosen = Method::NonExpanding;
      report.method = chosen;
      report.results.push_back(run_one(chosen, in, config, false));
      report.polynomial = *report.results.back().polynomial;
      break;
    }
    default:
      report.results.push_back(run_one(config.method, in, config, false));
      report.polynomial = *report.results.back().polynomial;
      break;
  }

  if (config.ehrhart_upto) {
    report.ehrhart_values_millis =
        time_ms([&] { report.ehrhart_values = ehrhart_values(in.graph, *config.ehrhart_upto, config.enumeration); });
  }
  return report;
}

void require_agreement(const Report& report) {
  if (!report.agreement || *report.agreement) return;
  std::ostringstream os;
  os << "methods disagree:";
  for (const auto& r : report.results)
    if (r.polynomial) os << "\n  " << to_string(r.method) << ": " << *r.polynomial;
  throw MethodMismatch(os.str());
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : report.graph.edges()) edges.push_back({e.v + 1, e.w + 1});

  nlohmann::json out;
  out["graph"] = {{"nV", report.graph.v_count()}, {"nW", report.graph.w_count()}, {"edges", edges}};
  out["method"] = to_string(report.method);
  out["coefficients"] = coefficients_json(report.polynomial);
  out["polynomial"] = report.polynomial.to_string();
  if (report.ehrhart_values) {
    auto values = nlohmann::json::array();
    for (const auto& v : *report.ehrhart_values) values.push_back(integer_json(v));
    out["ehrhart_values"] = values;
  }
  if (report.agreement) out["agreement"] = *report.agreement;

  auto results = nlohmann::json::array();
  nlohmann::json timings = nlohmann::json::object();
  for (const auto& r : report.results) {
    nlohmann::json entry{{"method", to_string(r.method)}};
    if (r.polynomial) {
      entry["coefficients"] = coefficients_json(*r.polynomial);
      entry["polynomial"] = r.polynomial->to_string();
      timings[std::string(to_string(r.method))] = r.millis;
    } else {
      entry["skipped"] = r.skipped;
    }
    results.push_back(entry);
  }
  if (report.ehrhart_values) timings["ehrhart_values"] = report.ehrhart_values_millis;
  out["results"] = results;
  out["timings_ms"] = timings;
  return out;
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << "graph: |V| = " << report.graph.v_count() << ", |W| = " << report.graph.w_count()
     << ", " << report.graph.edge_count() << " edges\n";
  for (const auto& r : report.results) {
    os << std::left << std::setw(14) << to_string(r.method);
    if (r.polynomial)
      os << *r.polynomial << "  (" << std::fixed << std::setprecision(1) << r.millis << " ms)\n";
    else
      os << "skipped: " << r.skipped << '\n';
  }
  if (report.agreement) os << "agreement: " << (*report.agreement ? "yes" : "NO") << '\n';
  if (report.ehrhart_values) {
    os << "ehrhart values:";
    for (const auto& v : *report.ehrhart_values) os << ' ' << v.get_str();
    os << '\n';
  }
  os << "I(x) = " << report.polynomial << '\n';
  return os.str();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const MethodMismatch*>(&e)) return kExitMismatch;
  if (dynamic_cast<const ResourceLimit*>(&e)) return kExitResource;
  if (dynamic_cast<const ConsistencyFailure*>(&e)) return kExitInternal;
  if (dynamic_cast<const Error*>(&e)) return kExitInput;
  return kExitInternal;
}

}  // namespace interior::cli
