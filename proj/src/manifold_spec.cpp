#include "paraframe/manifold_spec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "paraframe/errors.hpp"
#include "paraframe/poly_text.hpp"

namespace paraframe {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Line {
  int number;
  std::string head;  // text before '='
  std::string tail;  // text after '='
};

/// Decomposes a polynomial over params+frame names into per-frame-name
/// coefficients; every monomial must be linear in exactly one frame name.
std::vector<ExactScalar> decompose_vector(const ExactScalar& p,
                                          const std::vector<std::string>& frame, int line) {
  std::vector<ExactScalar> out(frame.size());
  for (const auto& [mono, coeff] : p.terms()) {
    int which = -1;
    Monomial rest;
    int frame_degree = 0;
    for (const auto& [name, e] : mono.factors()) {
      const auto it = std::find(frame.begin(), frame.end(), name);
      if (it != frame.end()) {
        frame_degree += e;
        which = static_cast<int>(it - frame.begin());
      } else {
        rest = rest * Monomial::variable(name, e);
      }
    }
    if (frame_degree != 1)
      throw ParseError("expected an expression linear in the frame names", line);
    out[which] += ExactScalar::term(coeff, rest);
  }
  return out;
}

std::string render_poly_factor(const ExactScalar& coeff, const std::string& name) {
  if (coeff == ExactScalar(1)) return name;
  if (coeff == ExactScalar(-1)) return "-" + name;
  if (coeff.terms().size() == 1) return coeff.str() + "*" + name;
  return "(" + coeff.str() + ")*" + name;
}

}  // namespace

int ManifoldSpec::frame_index(const std::string& name) const {
  const auto it = std::find(frame.begin(), frame.end(), name);
  return it == frame.end() ? -1 : static_cast<int>(it - frame.begin());
}

std::string render_vector(std::span<const ExactScalar> components,
                          const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    std::string term = render_poly_factor(components[i], names[i]);
    if (out.empty()) {
      out = term;
    } else if (term.starts_with('-')) {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

ManifoldSpec parse_manifold(std::string_view text) {
  std::vector<Line> lines;
  {
    int number = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++number;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const std::string t = trim(raw);
      if (t.empty()) continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw ParseError("expected '=' in statement", number);
      lines.push_back({number, trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
    }
  }

  ManifoldSpec spec;
  // Header pass: dim, params, frame.
  bool saw_dim = false, saw_params = false, saw_frame = false;
  for (const Line& ln : lines) {
    if (ln.head == "dim") {
      if (saw_dim) throw ParseError("duplicate assignment of 'dim'", ln.number);
      saw_dim = true;
      try {
        size_t used = 0;
        spec.dim = std::stoi(ln.tail, &used);
        if (used != ln.tail.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("dimension must be an integer", ln.number);
      }
      if (spec.dim % 2 == 0) throw ParseError("dimension must be odd (2n+1)", ln.number);
      if (spec.dim < 3) throw ParseError("dimension must be at least 3", ln.number);
    } else if (ln.head == "params") {
      if (saw_params) throw ParseError("duplicate assignment of 'params'", ln.number);
      saw_params = true;
      spec.params = split_list(ln.tail);
      for (const auto& p : spec.params) {
        if (!valid_identifier(p)) throw ParseError("invalid parameter name '" + p + "'", ln.number);
        if (p == "alpha" || p == "beta")
          throw ParseError("'" + p + "' is reserved for the connection parameters", ln.number);
        if (std::count(spec.params.begin(), spec.params.end(), p) > 1)
          throw ParseError("duplicate parameter name '" + p + "'", ln.number);
      }
    } else if (ln.head == "frame") {
      if (saw_frame) throw ParseError("duplicate assignment of 'frame'", ln.number);
      saw_frame = true;
      spec.frame = split_list(ln.tail);
      for (const auto& f : spec.frame) {
        if (!valid_identifier(f)) throw ParseError("invalid frame name '" + f + "'", ln.number);
        if (f == "alpha" || f == "beta")
          throw ParseError("'" + f + "' is reserved for the connection parameters", ln.number);
        if (std::count(spec.frame.begin(), spec.frame.end(), f) > 1)
          throw ParseError("duplicate frame name '" + f + "'", ln.number);
      }
    }
  }
  if (!saw_dim) throw ParseError("missing 'dim = <odd integer>'");
  if (!saw_frame) throw ParseError("missing 'frame = <names>'");
  if (static_cast<int>(spec.frame.size()) != spec.dim)
    throw ParseError("frame lists " + std::to_string(spec.frame.size()) + " names but dim = " +
                     std::to_string(spec.dim));
  for (const auto& f : spec.frame)
    if (std::find(spec.params.begin(), spec.params.end(), f) != spec.params.end())
      throw ParseError("name '" + f + "' is both a parameter and a frame vector");

  std::set<std::string> scalar_vars(spec.params.begin(), spec.params.end());
  std::set<std::string> vector_vars = scalar_vars;
  vector_vars.insert(spec.frame.begin(), spec.frame.end());

  auto parse_vector = [&](const std::string& text_in, int line) {
    try {
      return decompose_vector(parse_polynomial(text_in, vector_vars), spec.frame, line);
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line);
    }
  };
  auto parse_scalar = [&](const std::string& text_in, int line) {
    try {
      return parse_polynomial(text_in, scalar_vars);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  };

  bool saw_xi = false, saw_metric = false, saw_eta = false;
  for (const Line& ln : lines) {
    const std::vector<std::string> words = split_ws(ln.head);
    if (words.empty()) throw ParseError("empty statement", ln.number);
    const std::string& kw = words[0];
    if (kw == "dim" || kw == "params" || kw == "frame") {
      if (words.size() != 1) throw ParseError("unexpected tokens after '" + kw + "'", ln.number);
      continue;  // handled in the header pass
    }
    if (kw == "xi") {
      if (words.size() != 1) throw ParseError("unexpected tokens after 'xi'", ln.number);
      if (saw_xi) throw ParseError("duplicate assignment of 'xi'", ln.number);
      saw_xi = true;
      spec.xi = parse_vector(ln.tail, ln.number);
    } else if (kw == "eta") {
      if (words.size() != 1) throw ParseError("unexpected tokens after 'eta'", ln.number);
      if (saw_eta) throw ParseError("duplicate assignment of 'eta'", ln.number);
      saw_eta = true;
      spec.eta_override = parse_vector(ln.tail, ln.number);
    } else if (kw == "bracket") {
      if (words.size() != 3) throw ParseError("expected 'bracket <ei> <ej> = <vector>'", ln.number);
      const int i = spec.frame_index(words[1]);
      const int j = spec.frame_index(words[2]);
      if (i < 0) throw ParseError("unknown frame name '" + words[1] + "'", ln.number);
      if (j < 0) throw ParseError("unknown frame name '" + words[2] + "'", ln.number);
      if (i == j) throw ParseError("bracket of a frame vector with itself is identically zero", ln.number);
      if (i > j)
        throw ParseError("bracket pairs are given with the lower-indexed vector first "
                         "(antisymmetry is implied)", ln.number);
      if (spec.brackets.count({i, j}))
        throw ParseError("duplicate bracket assignment for (" + words[1] + ", " + words[2] + ")",
                         ln.number);
      spec.brackets[{i, j}] = parse_vector(ln.tail, ln.number);
    } else if (kw == "metric") {
      if (words.size() == 1) {
        if (ln.tail != "identity")
          throw ParseError("expected 'metric = identity' or 'metric <ei> <ej> = <poly>'", ln.number);
        if (saw_metric) throw ParseError("duplicate metric specification", ln.number);
        saw_metric = true;
        spec.metric_is_identity = true;
      } else if (words.size() == 3) {
        if (spec.metric_is_identity) throw ParseError("duplicate metric specification", ln.number);
        saw_metric = true;
        const int i = spec.frame_index(words[1]);
        const int j = spec.frame_index(words[2]);
        if (i < 0) throw ParseError("unknown frame name '" + words[1] + "'", ln.number);
        if (j < 0) throw ParseError("unknown frame name '" + words[2] + "'", ln.number);
        const auto key = std::minmax(i, j);
        if (spec.metric_entries.count({key.first, key.second}))
          throw ParseError("duplicate metric entry (" + words[1] + ", " + words[2] + ")", ln.number);
        spec.metric_entries[{key.first, key.second}] = parse_scalar(ln.tail, ln.number);
      } else {
        throw ParseError("expected 'metric = identity' or 'metric <ei> <ej> = <poly>'", ln.number);
      }
    } else if (kw == "phi") {
      if (words.size() != 2) throw ParseError("expected 'phi <ei> = <vector>'", ln.number);
      const int j = spec.frame_index(words[1]);
      if (j < 0) throw ParseError("unknown frame name '" + words[1] + "'", ln.number);
      if (spec.phi_columns.count(j))
        throw ParseError("duplicate phi assignment for '" + words[1] + "'", ln.number);
      spec.phi_columns[j] = parse_vector(ln.tail, ln.number);
    } else {
      throw ParseError("unknown statement '" + kw + "'", ln.number);
    }
  }
  if (!saw_xi) throw ParseError("missing 'xi = <vector>'");
  if (!saw_metric) throw ParseError("missing metric specification");
  return spec;
}

std::string render_manifold(const ManifoldSpec& spec) {
  std::ostringstream out;
  out << "dim = " << spec.dim << "\n";
  out << "params =";
  for (size_t i = 0; i < spec.params.size(); ++i) out << (i ? ", " : " ") << spec.params[i];
  out << "\n";
  out << "frame =";
  for (size_t i = 0; i < spec.frame.size(); ++i) out << (i ? ", " : " ") << spec.frame[i];
  out << "\n";
  out << "xi = " << render_vector(spec.xi, spec.frame) << "\n";
  if (spec.eta_override) out << "eta = " << render_vector(*spec.eta_override, spec.frame) << "\n";
  for (const auto& [key, comps] : spec.brackets)
    out << "bracket " << spec.frame[key.first] << " " << spec.frame[key.second] << " = "
        << render_vector(comps, spec.frame) << "\n";
  if (spec.metric_is_identity) {
    out << "metric = identity\n";
  } else {
    for (const auto& [key, value] : spec.metric_entries)
      out << "metric " << spec.frame[key.first] << " " << spec.frame[key.second] << " = "
          << value.str() << "\n";
  }
  for (const auto& [j, comps] : spec.phi_columns)
    out << "phi " << spec.frame[j] << " = " << render_vector(comps, spec.frame) << "\n";
  return out.str();
}

ManifoldSpec with_params_set(const ManifoldSpec& spec,
                             const std::map<std::string, ExactScalar>& bindings) {
  for (const auto& [name, value] : bindings) {
    if (std::find(spec.params.begin(), spec.params.end(), name) == spec.params.end())
      throw ValidationError("unknown parameter '" + name + "'");
    for (const auto& var : value.indeterminates())
      if (std::find(spec.params.begin(), spec.params.end(), var) == spec.params.end())
        throw ValidationError("parameter value uses undeclared indeterminate '" + var + "'");
  }
  // Polynomial-valued substitution on every coefficient.
  auto subst = [&](const ExactScalar& s) {
    ExactScalar out;
    for (const auto& [mono, coeff] : s.terms()) {
      ExactScalar term(coeff);
      for (const auto& [name, e] : mono.factors()) {
        const auto it = bindings.find(name);
        if (it == bindings.end())
          term = term * ExactScalar::term(Rational(1), Monomial::variable(name, e));
        else
          term = term * it->second.pow(static_cast<unsigned>(e));
      }
      out += term;
    }
    return out;
  };
  ManifoldSpec out = spec;
  out.params.erase(std::remove_if(out.params.begin(), out.params.end(),
                                  [&](const std::string& p) { return bindings.count(p) > 0; }),
                   out.params.end());
  for (auto& c : out.xi) c = subst(c);
  if (out.eta_override)
    for (auto& c : *out.eta_override) c = subst(c);
  for (auto& [key, comps] : out.brackets)
    for (auto& c : comps) c = subst(c);
  for (auto& [key, value] : out.metric_entries) value = subst(value);
  for (auto& [j, comps] : out.phi_columns)
    for (auto& c : comps) c = subst(c);
  return out;
}

LoadedManifold load_manifold(const ManifoldSpec& spec, JacobiPolicy policy, bool skip_validation) {
  const int n = spec.dim;
  FrameAlgebra fa(spec.frame);
  for (const auto& [key, comps] : spec.brackets) fa.set_bracket(key.first, key.second, comps);

  PolyMatrix g(n, n);
  if (spec.metric_is_identity) {
    g = PolyMatrix::identity(n);
  } else {
    for (const auto& [key, value] : spec.metric_entries) {
      g.at(key.first, key.second) = value;
      g.at(key.second, key.first) = value;
    }
  }
  PolyMatrix phi(n, n);
  for (const auto& [j, comps] : spec.phi_columns)
    for (int k = 0; k < n; ++k) phi.at(k, j) = comps[k];

  LoadedManifold out{fa,
                     ApapRStructure(MetricFrame(std::move(g)), std::move(phi), spec.xi,
                                    spec.eta_override),
                     {}};

  if (const auto bad = fa.first_jacobi_violation()) {
    std::ostringstream msg;
    msg << "Jacobi identity fails at triple (" << spec.frame[bad->i] << ", " << spec.frame[bad->j]
        << ", " << spec.frame[bad->k] << "), component " << spec.frame[bad->component]
        << ": residual " << bad->residual.str();
    if (policy == JacobiPolicy::hard_error)
      throw ValidationError(msg.str() + " (pass --allow-non-lie to continue)");
    out.warnings.push_back("warning: " + msg.str());
  }
  if (!skip_validation) {
    const ValidationReport report = validate_apapr(out.algebra, out.structure);
    if (const AxiomCheck* bad = report.first_failure())
      throw ValidationError("structure axiom failed: " + bad->name +
                            (bad->detail.empty() ? "" : " (" + bad->detail + ")"));
  }
  return out;
}

namespace {

const std::string kExample1Text =
    "# Built-in 3-dimensional fixture.\n"
    "dim = 3\n"
    "params =\n"
    "frame = e0, e1, e2\n"
    "xi = e0\n"
    "bracket e0 e1 = -e2\n"
    "bracket e0 e2 = -e1\n"
    "metric = identity\n"
    "phi e1 = e2\n"
    "phi e2 = e1\n";

const std::string kExample2Text =
    "# Built-in 5-dimensional fixture with parameters p, q.\n"
    "dim = 5\n"
    "params = p, q\n"
    "frame = e0, e1, e2, e3, e4\n"
    "xi = e0\n"
    "bracket e0 e1 = p*e2 - e3 + q*e4\n"
    "bracket e0 e2 = -p*e1 - q*e3 - e4\n"
    "bracket e0 e3 = -e1 + q*e2 + p*e4\n"
    "bracket e0 e4 = -q*e1 - e2 - p*e3\n"
    "metric = identity\n"
    "phi e1 = e3\n"
    "phi e2 = e4\n"
    "phi e3 = e1\n"
    "phi e4 = e2\n";

}  // namespace

const std::string& builtin_manifold_text(const std::string& name) {
  if (name == "example1") return kExample1Text;
  if (name == "example2") return kExample2Text;
  throw std::invalid_argument("unknown builtin '" + name + "' (available: example1, example2)");
}

ManifoldSpec builtin_manifold(const std::string& name) {
  return parse_manifold(builtin_manifold_text(name));
}

std::vector<std::string> builtin_manifold_names() { return {"example1", "example2"}; }

}  // namespace paraframe
