#include "paraframe/crosscheck.hpp"

#include <sstream>

#include "paraframe/curvature.hpp"
#include "paraframe/errors.hpp"
#include "paraframe/poly_text.hpp"

namespace paraframe {

namespace {

std::string tensor_table(const TensorField& t) {
  std::ostringstream out;
  const int r = t.rank();
  std::vector<int> idx(r, 0);
  const size_t total = t.data().size();
  for (size_t flat = 0; flat < total; ++flat) {
    size_t rem = flat;
    for (int s = r - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(rem % t.dim());
      rem /= t.dim();
    }
    const ExactScalar& v = t.at(std::span<const int>(idx));
    if (v.is_zero()) continue;
    out << "(";
    for (int s = 0; s < r; ++s) out << (s ? "," : "") << idx[s];
    out << ") = " << v.str() << "\n";
  }
  return out.str();
}

/// Collects verdict rows; a failing must-hold identity attaches both tables.
struct SuiteSink {
  Report::Section section;
  bool* internal_failure;
  bool* reference_mismatch;

  void must_hold(const std::string& name, bool ok) {
    section.add_verdict(name, ok);
    if (!ok) *internal_failure = true;
  }

  void must_match(const std::string& name, const TensorField& expected, const TensorField& computed) {
    const bool ok = expected == computed;
    section.add_verdict(name, ok);
    if (!ok) {
      *internal_failure = true;
      Report::Section detail(name + ".tables");
      detail.add("expected", "\n" + tensor_table(expected));
      detail.add("computed", "\n" + tensor_table(computed));
      section.add_child(std::move(detail));
    }
  }

  /// Reference-vs-computed adjudication: mismatches are labeled, not failed.
  void reference(const std::string& name, const ExactScalar& published, const ExactScalar& computed) {
    const bool match = published == computed;
    section.add(name + ".reference", published.str());
    section.add(name + ".computed", computed.str());
    section.add(name + ".verdict", match ? "MATCH" : "MISMATCH (computed value is authoritative)");
    if (!match) *reference_mismatch = true;
  }

  void reference_tensor(const std::string& name, const TensorField& published,
                        const TensorField& computed) {
    const bool match = published == computed;
    section.add(name + ".verdict", match ? "MATCH" : "MISMATCH (computed value is authoritative)");
    if (!match) {
      *reference_mismatch = true;
      Report::Section detail(name + ".tables");
      detail.add("reference", "\n" + tensor_table(published));
      detail.add("computed", "\n" + tensor_table(computed));
      section.add_child(std::move(detail));
    }
  }
};

ExactScalar P(const char* text) { return parse_polynomial(text); }

// ---------------------------------------------------------------------------
// Published component tables of the two built-in fixtures, frozen for
// reference-vs-computed adjudication. Curvature generators are closed under
// antisymmetry in both index pairs and under pair interchange; 2-tensor
// generators under symmetry.
// ---------------------------------------------------------------------------

struct CurvEntry {
  int i, j, k, l;
  const char* value;
};
struct ConnEntry {
  int i, j, k;
  const char* value;
};
struct Sym2Entry {
  int i, j;
  const char* value;
};

TensorField curvature_table(int dim, const std::vector<CurvEntry>& generators) {
  TensorField t(dim, {Slot::lower, Slot::lower, Slot::lower, Slot::lower});
  for (const auto& e : generators) {
    const ExactScalar v = P(e.value);
    // Orbit under {antisym(ij), antisym(kl), pair swap}.
    const int idx[4] = {e.i, e.j, e.k, e.l};
    for (int swap_ij = 0; swap_ij < 2; ++swap_ij)
      for (int swap_kl = 0; swap_kl < 2; ++swap_kl)
        for (int pair_swap = 0; pair_swap < 2; ++pair_swap) {
          int a = swap_ij ? idx[1] : idx[0];
          int b = swap_ij ? idx[0] : idx[1];
          int c = swap_kl ? idx[3] : idx[2];
          int d = swap_kl ? idx[2] : idx[3];
          if (pair_swap) {
            std::swap(a, c);
            std::swap(b, d);
          }
          const ExactScalar signed_v = ((swap_ij + swap_kl) % 2 == 0) ? v : -v;
          t.at({a, b, c, d}) = signed_v;
        }
  }
  return t;
}

TensorField sym2_table(int dim, const std::vector<Sym2Entry>& generators) {
  TensorField t(dim, {Slot::lower, Slot::lower});
  for (const auto& e : generators) {
    const ExactScalar v = P(e.value);
    t.at({e.i, e.j}) = v;
    t.at({e.j, e.i}) = v;
  }
  return t;
}

struct TripleRef {
  const char* first;
  const char* second;
  const char* third;
};

struct ReferenceTables {
  std::vector<ConnEntry> lc_connection;
  std::vector<CurvEntry> lc_curvature;
  std::vector<Sym2Entry> lc_ricci;
  TripleRef lc_einstein;
  TripleRef lc_soliton;
  std::vector<Sym2Entry> lc_lie;
  std::vector<ConnEntry> gsm_connection;
  std::vector<CurvEntry> gsm_curvature;
  std::vector<Sym2Entry> gsm_ricci;
  const char* gsm_scal;
  std::vector<Sym2Entry> gsm_lie;
  TripleRef gsm_einstein;
  TripleRef gsm_soliton;
};

const ReferenceTables& example1_tables() {
  static const ReferenceTables t{
      {{1, 0, 2, "1"}, {2, 0, 1, "1"}, {1, 2, 0, "-1"}, {2, 1, 0, "-1"}},
      {{1, 2, 2, 1, "1"}, {1, 0, 0, 1, "-1"}, {2, 0, 0, 2, "-1"}},
      {{0, 0, "-2"}},
      {"0", "0", "-2"},
      {"0", "-1", "3"},
      {{1, 2, "2"}},
      {{1, 0, 2, "1 - beta"},
       {1, 0, 1, "-alpha"},
       {2, 0, 1, "1 - beta"},
       {2, 0, 2, "-alpha"},
       {1, 2, 0, "beta - 1"},
       {2, 1, 0, "beta - 1"},
       {1, 1, 0, "alpha"},
       {2, 2, 0, "alpha"}},
      {{0, 1, 1, 0, "beta - 1"},
       {0, 2, 0, 2, "1 - beta"},
       {0, 1, 0, 2, "-alpha"},
       {1, 2, 1, 2, "alpha^2 - (beta - 1)^2"}},
      {{0, 0, "2*(beta - 1)"},
       {1, 1, "beta*(beta - 1) - alpha^2"},
       {2, 2, "beta*(beta - 1) - alpha^2"},
       {1, 2, "alpha"}},
      "2*(beta^2 - alpha^2 - 1)",
      {{1, 1, "-2*alpha"}, {2, 2, "-2*alpha"}, {1, 2, "2*(1 - beta)"}},
      {"beta*(beta - 1) - alpha^2", "alpha", "alpha*(alpha - 1) - (beta - 1)*(beta - 2)"},
      {"alpha^2 + alpha + beta - beta^2", "beta - alpha - 1", "(beta - 1)*(beta + 3) - alpha^2"},
  };
  return t;
}

const ReferenceTables& example2_tables() {
  static const ReferenceTables t{
      {{0, 1, 2, "p"}, {0, 1, 4, "q"}, {1, 0, 3, "1"},
       {0, 2, 1, "-p"}, {0, 2, 3, "-q"}, {2, 0, 4, "1"},
       {0, 3, 2, "q"}, {0, 3, 4, "p"}, {3, 0, 1, "1"},
       {0, 4, 1, "-q"}, {0, 4, 3, "-p"}, {4, 0, 2, "1"},
       {1, 3, 0, "-1"}, {2, 4, 0, "-1"}, {3, 1, 0, "-1"}, {4, 2, 0, "-1"}},
      {{0, 1, 1, 0, "-1"}, {0, 2, 2, 0, "-1"}, {0, 3, 3, 0, "-1"}, {0, 4, 4, 0, "-1"},
       {1, 2, 3, 4, "1"}, {1, 4, 3, 2, "1"}, {1, 3, 3, 1, "1"}, {2, 4, 4, 2, "1"}},
      {{0, 0, "-4"}},
      {"0", "0", "-4"},
      {"0", "-1", "5"},
      {{1, 3, "2"}, {2, 4, "2"}},
      {{0, 1, 2, "p"}, {0, 1, 4, "q"}, {0, 2, 1, "-p"}, {0, 2, 3, "-q"},
       {0, 3, 2, "q"}, {0, 3, 4, "p"}, {0, 4, 1, "-q"}, {0, 4, 3, "-p"},
       {1, 0, 3, "1 - beta"}, {1, 0, 1, "-alpha"},
       {2, 0, 4, "1 - beta"}, {2, 0, 2, "-alpha"},
       {3, 0, 1, "1 - beta"}, {3, 0, 3, "-alpha"},
       {4, 0, 2, "1 - beta"}, {4, 0, 4, "-alpha"},
       {1, 3, 0, "beta - 1"}, {3, 1, 0, "beta - 1"},
       {2, 4, 0, "beta - 1"}, {4, 2, 0, "beta - 1"},
       {1, 1, 0, "alpha"}, {2, 2, 0, "alpha"}, {3, 3, 0, "alpha"}, {4, 4, 0, "alpha"}},
      {{0, 1, 0, 1, "1 - beta"}, {0, 4, 4, 0, "beta - 1"},
       {0, 2, 0, 2, "1 - beta"}, {0, 3, 3, 0, "beta - 1"},
       {0, 1, 0, 3, "-alpha"}, {0, 4, 0, 2, "-alpha"},
       {1, 4, 1, 2, "alpha*(beta - 1)"}, {3, 4, 2, 3, "-alpha*(beta - 1)"},
       {3, 4, 4, 1, "-alpha*(beta - 1)"}, {2, 3, 1, 2, "-alpha*(beta - 1)"},
       {3, 4, 3, 4, "alpha^2"}, {2, 3, 2, 3, "alpha^2"},
       {1, 4, 1, 4, "alpha^2"}, {1, 2, 1, 2, "alpha^2"},
       {1, 3, 1, 3, "alpha^2 - (beta - 1)^2"}, {2, 4, 2, 4, "alpha^2 - (beta - 1)^2"},
       {1, 2, 3, 4, "(beta - 1)^2"}, {2, 3, 1, 4, "-(beta - 1)^2"}},
      {{0, 0, "4*(beta - 1)"},
       {1, 1, "beta^2 - beta - 3*alpha^2"}, {2, 2, "beta^2 - beta - 3*alpha^2"},
       {3, 3, "beta^2 - beta - 3*alpha^2"}, {4, 4, "beta^2 - beta - 3*alpha^2"},
       {1, 3, "3*alpha - 2*alpha*beta"}, {2, 4, "3*alpha - 2*alpha*beta"}},
      "4*(beta^2 - 3*alpha^2 - 1)",
      {{1, 1, "-2*alpha"}, {2, 2, "-2*alpha"}, {3, 3, "-2*alpha"}, {4, 4, "-2*alpha"},
       {1, 3, "2*(1 - beta)"}, {2, 4, "2*(1 - beta)"}},
      {"beta^2 - beta - 3*alpha^2", "-2*alpha*beta + 3*alpha",
       "3*alpha^2 + 2*alpha*beta - 3*alpha + 5*beta - beta^2 - 4"},
      {"3*alpha^2 + alpha - beta^2 + beta", "2*alpha*beta + beta - 3*alpha - 1",
       "beta^2 - 3*alpha^2 - 2*alpha*beta - 6*beta + 2*alpha + 5"},
  };
  return t;
}

TensorField connection_table_tensor(int dim, const std::vector<ConnEntry>& entries) {
  TensorField t(dim, {Slot::lower, Slot::lower, Slot::upper});
  for (const auto& e : entries) t.at({e.i, e.j, e.k}) = P(e.value);
  return t;
}

TensorField connection_as_tensor(const ConnectionCoefficients& c) {
  TensorField t(c.dim(), {Slot::lower, Slot::lower, Slot::upper});
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k) t.at({i, j, k}) = c.gamma(i, j, k);
  return t;
}

TensorField matrix_as_tensor(const PolyMatrix& m) {
  TensorField t(m.rows(), {Slot::lower, Slot::lower});
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at({i, j}) = m.at(i, j);
  return t;
}

/// Independent evaluation of the torsion closed form
/// alpha{eta(x)y - eta(y)x} + beta{eta(x)phi y - eta(y)phi x}.
TensorField torsion_closed_form(const ApapRStructure& s, const ExactScalar& alpha,
                                const ExactScalar& beta) {
  const int n = s.dim();
  TensorField t(n, {Slot::lower, Slot::lower, Slot::upper});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        ExactScalar v;
        if (m == j) v += alpha * s.eta()[i];
        if (m == i) v -= alpha * s.eta()[j];
        v += beta * (s.eta()[i] * s.phi().at(m, j));
        v -= beta * (s.eta()[j] * s.phi().at(m, i));
        t.at({i, j, m}) = std::move(v);
      }
  return t;
}

}  // namespace

CrosscheckOutcome run_crosscheck(const LoadedManifold& m,
                                 const std::optional<std::string>& builtin_name) {
  CrosscheckOutcome out;
  const FrameAlgebra& fa = m.algebra;
  const ApapRStructure& s = m.structure;
  const int N = s.dim();
  const int n = (N - 1) / 2;
  const ExactScalar alpha = ExactScalar::variable("alpha");
  const ExactScalar beta = ExactScalar::variable("beta");

  // ---- validation --------------------------------------------------------
  {
    SuiteSink sink{Report::Section("validation"), &out.internal_failure, &out.reference_mismatch};
    const ValidationReport v = validate_apapr(fa, s);
    for (const auto& c : v.checks)
      sink.section.add(c.name, c.passed ? "pass" : "FAIL (" + c.detail + ")");
    if (!v.all_passed()) out.validation_failure = true;
    sink.section.add_verdict("jacobi identity", fa.satisfies_jacobi());
    if (!fa.satisfies_jacobi()) out.validation_failure = true;
    const AssociatedMetric assoc = associated_metric(s);
    if (assoc.signature) {
      std::ostringstream sig;
      sig << "(" << assoc.signature->positive << "," << assoc.signature->negative << ","
          << assoc.signature->zero << ")";
      sink.section.add("associated metric signature", sig.str());
      sink.must_hold("associated metric signature is (n+1, n)",
                     assoc.signature->positive == n + 1 && assoc.signature->negative == n &&
                         assoc.signature->zero == 0);
    } else {
      sink.section.add("associated metric signature", "skipped (entries contain indeterminates)");
    }
    out.report.add(std::move(sink.section));
  }

  const ConnectionCoefficients lc = levi_civita(fa, s.metric());
  const ParaSasakiResult ps = is_para_sasaki_like(s, lc);
  const ConnectionCoefficients gsm = gsm_connection(lc, s, alpha, beta);
  const CurvatureData lc_curv = curvature(lc, fa, s.metric());
  const TensorField lc_ric = ricci(lc_curv, s.metric());
  const ExactScalar lc_scal = scalar_curvature(lc_ric, s.metric());
  const CurvatureData gsm_curv = curvature(gsm, fa, s.metric());
  const TensorField gsm_ric = ricci(gsm_curv, s.metric());
  const ExactScalar gsm_scal = scalar_curvature(gsm_ric, s.metric());

  // ---- Levi-Civita layer --------------------------------------------------
  const EinsteinTriple lc_einstein = solve_einstein_like(lc_ric, s);
  const TensorField lc_lie = lie_derivative_metric(s.xi(), lc, s.metric());
  const SolitonTriple lc_soliton = solve_soliton(lc_lie, lc_ric, s, "xi");
  {
    SuiteSink sink{Report::Section("levi-civita"), &out.internal_failure, &out.reference_mismatch};
    sink.section.add("para-sasaki-like", ps.flag ? "true" : "false");
    sink.section.add("scal", lc_scal.str());
    sink.section.add("einstein.status", to_string(lc_einstein.status));
    if (lc_einstein.status == SolveStatus::unique_solution) {
      sink.section.add("einstein.a", lc_einstein.a.str());
      sink.section.add("einstein.b", lc_einstein.b.str());
      sink.section.add("einstein.c", lc_einstein.c.str());
      sink.section.add("einstein.kind", to_string(lc_einstein.kind));
    }
    for (const auto& f : lc_einstein.free_unknowns) sink.section.add("einstein.free", f);
    sink.section.add("soliton.status", to_string(lc_soliton.status));
    if (lc_soliton.status == SolveStatus::unique_solution) {
      sink.section.add("soliton.lambda", lc_soliton.lambda.str());
      sink.section.add("soliton.mu", lc_soliton.mu.str());
      sink.section.add("soliton.nu", lc_soliton.nu.str());
      sink.section.add("soliton.kind", to_string(lc_soliton.kind));
    }
    out.report.add(std::move(sink.section));
  }

  // ---- para-Sasaki identity suite (Levi-Civita) ---------------------------
  if (ps.flag) {
    SuiteSink sink{Report::Section("para-sasaki-identities"), &out.internal_failure,
                   &out.reference_mismatch};
    const StructureDerivatives d = covariant_derivative_structure(lc, s);
    // D xi = phi
    TensorField phi_t(N, {Slot::lower, Slot::upper});
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) phi_t.at({i, k}) = s.phi().at(k, i);
    sink.must_match("reeb derivative: D xi = phi", phi_t, d.dxi);
    // (D eta)(x,y) = g(x, phi y)
    sink.must_match("dual form derivative: D eta = g(., phi .)", matrix_as_tensor(s.g_phi()), d.deta);
    // R(x,y)xi = -eta(y)x + eta(x)y
    {
      TensorField expected(N, {Slot::lower, Slot::lower, Slot::upper});
      TensorField computed(N, {Slot::lower, Slot::lower, Slot::upper});
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          for (int l = 0; l < N; ++l) {
            ExactScalar e;
            if (l == i) e -= s.eta()[j];
            if (l == j) e += s.eta()[i];
            expected.at({i, j, l}) = std::move(e);
            ExactScalar c;
            for (int k = 0; k < N; ++k) c += lc_curv.riemann.at({i, j, k, l}) * s.xi()[k];
            computed.at({i, j, l}) = std::move(c);
          }
      sink.must_match("reeb curvature: R(x,y)xi = eta(x)y - eta(y)x", expected, computed);
    }
    // Ric(., xi) = -2n eta
    {
      bool ok = true;
      for (int i = 0; i < N && ok; ++i) {
        ExactScalar v = ExactScalar(2 * n) * s.eta()[i];
        for (int j = 0; j < N; ++j) v += lc_ric.at({i, j}) * s.xi()[j];
        ok = v.is_zero();
      }
      sink.must_hold("reeb ricci: Ric(., xi) = -2n eta", ok);
    }
    // phi D_x xi = D_{phi x} xi = x - eta(x) xi
    {
      bool ok1 = true, ok2 = true;
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
          ExactScalar lhs1, lhs2;
          for (int mdx = 0; mdx < N; ++mdx) {
            lhs1 += s.phi().at(k, mdx) * d.dxi.at({i, mdx});
            lhs2 += s.phi().at(mdx, i) * d.dxi.at({mdx, k});
          }
          ExactScalar rhs = -(s.eta()[i] * s.xi()[k]);
          if (k == i) rhs += ExactScalar(1);
          if (!(lhs1 == rhs)) ok1 = false;
          if (!(lhs2 == rhs)) ok2 = false;
        }
      sink.must_hold("phi(D_x xi) = x - eta(x)xi", ok1);
      sink.must_hold("D_{phi x} xi = x - eta(x)xi", ok2);
    }
    // L_xi g = 2 g(., phi .)
    sink.must_match("reeb lie derivative: L_xi g = 2 g(., phi .)",
                    matrix_as_tensor(s.g_phi()).scaled(ExactScalar(2)), lc_lie);
    out.report.add(std::move(sink.section));
  }

  // ---- transferred-connection identity suite ------------------------------
  {
    SuiteSink sink{Report::Section("transfer-identities"), &out.internal_failure,
                   &out.reference_mismatch};
    const StructureDerivatives d = covariant_derivative_structure(gsm, s);
    TensorField zero_dg(N, {Slot::lower, Slot::lower, Slot::lower});
    sink.must_match("metricity: Dbar g = 0", zero_dg, d.dg);
    sink.must_match("torsion closed form", torsion_closed_form(s, alpha, beta), torsion(gsm, fa));
    {
      const ConnectionCoefficients rebuilt =
          reconstruct_connection_from_torsion(torsion(gsm, fa), lc, s.metric());
      sink.must_match("uniqueness: connection rebuilt from its torsion", connection_as_tensor(gsm),
                      connection_as_tensor(rebuilt));
    }
    // Reductions to the semi-symmetric and quarter-symmetric connections.
    {
      const ConnectionCoefficients semi =
          gsm_connection(lc, s, ExactScalar(1), ExactScalar(0));
      const ConnectionCoefficients quarter =
          gsm_connection(lc, s, ExactScalar(0), ExactScalar(1));
      bool ok_semi = true, ok_quarter = true;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          for (int k = 0; k < N; ++k) {
            ExactScalar e_semi = lc.gamma(i, j, k) + s.metric().at(i, j) * s.xi()[k];
            if (k == i) e_semi -= s.eta()[j];
            if (!(semi.gamma(i, j, k) == e_semi)) ok_semi = false;
            ExactScalar e_quarter = lc.gamma(i, j, k) + s.g_phi().at(i, j) * s.xi()[k] -
                                    s.eta()[j] * s.phi().at(k, i);
            if (!(quarter.gamma(i, j, k) == e_quarter)) ok_quarter = false;
            // Substitution route must agree with the direct construction.
            if (!(gsm.gamma(i, j, k).substituted({{"alpha", 1}, {"beta", 0}}) ==
                  semi.gamma(i, j, k)))
              ok_semi = false;
            if (!(gsm.gamma(i, j, k).substituted({{"alpha", 0}, {"beta", 1}}) ==
                  quarter.gamma(i, j, k)))
              ok_quarter = false;
          }
      sink.must_hold("(alpha,beta)=(1,0) semi-symmetric reduction", ok_semi);
      sink.must_hold("(alpha,beta)=(0,1) quarter-symmetric reduction", ok_quarter);
    }
    out.report.add(std::move(sink.section));
  }

  // ---- para-Sasaki transfer suite -----------------------------------------
  if (ps.flag) {
    SuiteSink sink{Report::Section("para-sasaki-transfer-identities"), &out.internal_failure,
                   &out.reference_mismatch};
    const StructureDerivatives d = covariant_derivative_structure(gsm, s);
    // Dbar xi = (1 - beta) phi - alpha phi^2
    {
      TensorField expected(N, {Slot::lower, Slot::upper});
      const PolyMatrix phi2 = s.phi() * s.phi();
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
          expected.at({i, k}) =
              (ExactScalar(1) - beta) * s.phi().at(k, i) - alpha * phi2.at(k, i);
      sink.must_match("reeb derivative transfer: Dbar xi = (1-beta)phi - alpha phi^2", expected,
                      d.dxi);
    }
    // Dbar phi closed form.
    {
      TensorField expected(N, {Slot::lower, Slot::lower, Slot::upper});
      const PolyMatrix phi2 = s.phi() * s.phi();
      const PolyMatrix gphiphi = s.phi().transposed() * s.metric().components() * s.phi();
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          for (int k = 0; k < N; ++k) {
            ExactScalar v = (beta - ExactScalar(1)) *
                            (gphiphi.at(i, j) * s.xi()[k] + s.eta()[j] * phi2.at(k, i));
            v += alpha * (s.g_phi().at(i, j) * s.xi()[k] + s.eta()[j] * s.phi().at(k, i));
            expected.at({i, j, k}) = std::move(v);
          }
      sink.must_match("structure tensor transfer: Dbar phi closed form", expected, d.dphi);
    }
    // Dbar eta: the self-consistent form carries alpha on the eta(x)eta(y)
    // term; the published form omits it. Both are reported.
    {
      TensorField derived(N, {Slot::lower, Slot::lower});
      TensorField published(N, {Slot::lower, Slot::lower});
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          const ExactScalar common =
              (ExactScalar(1) - beta) * s.g_phi().at(i, j) - alpha * s.metric().at(i, j);
          derived.at({i, j}) = common + alpha * (s.eta()[i] * s.eta()[j]);
          published.at({i, j}) = common + s.eta()[i] * s.eta()[j];
        }
      sink.must_match("dual form transfer: Dbar eta = (1-beta)g(phi.,.) - alpha g + alpha eta(x)eta",
                      derived, d.deta);
      sink.reference_tensor("dual form transfer, published variant (eta(x)eta term without alpha)",
                            published, d.deta);
    }
    // Curvature transfer closed form == direct curvature.
    {
      const CurvatureData cf = gsm_curvature_closed_form(lc_curv, fa, s, alpha, beta);
      sink.must_match("curvature transfer closed form (R^l_ijk)", cf.riemann, gsm_curv.riemann);
      sink.must_match("curvature transfer closed form (lowered)", cf.lowered, gsm_curv.lowered);
    }
    // Rbar(x,y)xi contraction.
    {
      TensorField expected(N, {Slot::lower, Slot::lower, Slot::upper});
      TensorField computed(N, {Slot::lower, Slot::lower, Slot::upper});
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          for (int l = 0; l < N; ++l) {
            ExactScalar e = alpha * (s.eta()[j] * s.phi().at(l, i)) -
                            alpha * (s.eta()[i] * s.phi().at(l, j));
            if (l == i) e += (beta - ExactScalar(1)) * s.eta()[j];
            if (l == j) e -= (beta - ExactScalar(1)) * s.eta()[i];
            expected.at({i, j, l}) = std::move(e);
            ExactScalar c;
            for (int k = 0; k < N; ++k) c += gsm_curv.riemann.at({i, j, k, l}) * s.xi()[k];
            computed.at({i, j, l}) = std::move(c);
          }
      sink.must_match("reeb curvature transfer: Rbar(x,y)xi", expected, computed);
    }
    // Rbar(xi,y)xi = (1-beta)phi^2 y - alpha phi y.
    {
      TensorField expected(N, {Slot::lower, Slot::upper});
      TensorField computed(N, {Slot::lower, Slot::upper});
      const PolyMatrix phi2 = s.phi() * s.phi();
      for (int j = 0; j < N; ++j)
        for (int l = 0; l < N; ++l) {
          expected.at({j, l}) =
              (ExactScalar(1) - beta) * phi2.at(l, j) - alpha * s.phi().at(l, j);
          ExactScalar c;
          for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
              if (s.xi()[i].is_zero() || s.xi()[k].is_zero()) continue;
              c += s.xi()[i] * s.xi()[k] * gsm_curv.riemann.at({i, j, k, l});
            }
          computed.at({j, l}) = std::move(c);
        }
      sink.must_match("double reeb curvature transfer: Rbar(xi,y)xi", expected, computed);
    }
    // Ricci transfer closed form and scalar relation.
    {
      const TensorField cf = gsm_ricci_closed_form(lc_ric, fa, s, alpha, beta);
      sink.must_match("ricci transfer closed form", cf, gsm_ric);
      const ExactScalar expected_scal =
          lc_scal + ExactScalar(2 * n) * (beta * beta + (1 - 2 * n) * (alpha * alpha));
      sink.must_hold("scalar transfer: scal_bar = scal + 2n[beta^2 + (1-2n)alpha^2]",
                     expected_scal == gsm_scal);
    }
    // Transferred Lie derivative closed form (verified inside the call).
    {
      const TensorField lbar =
          gsm_lie_derivative(Potential::reeb(), gsm, lc, s, alpha, beta);
      sink.must_hold("reeb lie-derivative transfer closed form", true);
      // Einstein / soliton transfer end-to-end.
      const EinsteinTriple gsm_einstein = solve_einstein_like(gsm_ric, s);
      sink.section.add("einstein.status", to_string(gsm_einstein.status));
      if (gsm_einstein.status == SolveStatus::unique_solution) {
        sink.section.add("einstein.a", gsm_einstein.a.str());
        sink.section.add("einstein.b", gsm_einstein.b.str());
        sink.section.add("einstein.c", gsm_einstein.c.str());
        sink.section.add("einstein.kind", to_string(gsm_einstein.kind));
      }
      if (lc_einstein.status == SolveStatus::unique_solution &&
          gsm_einstein.status == SolveStatus::unique_solution) {
        const EinsteinTriple transferred =
            einstein_transfer_constants(lc_einstein.a, lc_einstein.b, lc_einstein.c, n, alpha, beta);
        sink.must_hold("einstein transfer constants == direct solve",
                       transferred.a == gsm_einstein.a && transferred.b == gsm_einstein.b &&
                           transferred.c == gsm_einstein.c);
      }
      const SolitonTriple gsm_soliton = solve_soliton(lbar, gsm_ric, s, "xi");
      sink.section.add("soliton.status", to_string(gsm_soliton.status));
      if (gsm_soliton.status == SolveStatus::unique_solution) {
        sink.section.add("soliton.lambda", gsm_soliton.lambda.str());
        sink.section.add("soliton.mu", gsm_soliton.mu.str());
        sink.section.add("soliton.nu", gsm_soliton.nu.str());
        sink.section.add("soliton.kind", to_string(gsm_soliton.kind));
      }
      if (lc_soliton.status == SolveStatus::unique_solution &&
          gsm_soliton.status == SolveStatus::unique_solution) {
        const SolitonTriple transferred =
            soliton_transfer_constants(lc_soliton.lambda, lc_soliton.mu, lc_soliton.nu, n, alpha, beta);
        sink.must_hold("soliton transfer constants == direct solve",
                       transferred.lambda == gsm_soliton.lambda && transferred.mu == gsm_soliton.mu &&
                           transferred.nu == gsm_soliton.nu);
      }
    }
    // Collinear potential v = k xi with a symbolic constant k. A manifold
    // parameter named k would collide with the collinear constant.
    {
      std::set<std::string> used;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          for (int k = 0; k < N; ++k)
            for (const auto& var : fa.c(i, j, k).indeterminates()) used.insert(var);
          for (const auto& var : s.metric().at(i, j).indeterminates()) used.insert(var);
          for (const auto& var : s.phi().at(i, j).indeterminates()) used.insert(var);
        }
      const std::string kname = used.count("k") ? "k0" : "k";
      const Potential pot = Potential::collinear(ExactScalar::variable(kname));
      sink.section.add("collinear.constant", kname);
      const TensorField lkv = lie_derivative_metric(pot.components(s), lc, s.metric());
      const SolitonTriple lc_coll = solve_soliton(lkv, lc_ric, s, pot.describe());
      const TensorField lbar_kv = gsm_lie_derivative(pot, gsm, lc, s, alpha, beta);
      sink.must_hold("collinear lie-derivative transfer closed form (k on every term)", true);
      const SolitonTriple gsm_coll = solve_soliton(lbar_kv, gsm_ric, s, pot.describe());
      sink.section.add("collinear.soliton.status", to_string(gsm_coll.status));
      if (lc_coll.status == SolveStatus::unique_solution &&
          gsm_coll.status == SolveStatus::unique_solution) {
        const SolitonTriple published = collinear_soliton_transfer_constants(
            lc_coll.lambda, lc_coll.mu, lc_coll.nu, ExactScalar::variable(kname), n, alpha, beta);
        sink.reference("collinear transfer lambda", published.lambda, gsm_coll.lambda);
        sink.reference("collinear transfer mu", published.mu, gsm_coll.mu);
        sink.reference("collinear transfer nu", published.nu, gsm_coll.nu);
        // The published transferred Lie-derivative formula carries k only on
        // the alpha terms; the direct evaluation also carries it on the beta
        // term. Report the comparison.
        TensorField published_lie(N, {Slot::lower, Slot::lower});
        const ExactScalar kvar = ExactScalar::variable(kname);
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j)
            published_lie.at({i, j}) = lkv.at({i, j}) +
                                       2 * (alpha * kvar) * (s.eta()[i] * s.eta()[j]) -
                                       2 * (alpha * kvar) * s.metric().at(i, j) -
                                       2 * beta * s.g_phi().at(i, j);
        sink.reference_tensor("collinear lie-derivative transfer, published variant (beta term without k)",
                              published_lie, lbar_kv);
      }
    }
    out.report.add(std::move(sink.section));
  } else {
    Report::Section skipped("para-sasaki-transfer-identities");
    skipped.add("status", "skipped (base is not para-Sasaki-like)");
    out.report.add(std::move(skipped));
  }

  // ---- operator suite on a deterministic consistent jet --------------------
  {
    SuiteSink sink{Report::Section("operator-identities"), &out.internal_failure,
                   &out.reference_mismatch};
    std::vector<ExactScalar> d1(N);
    PolyMatrix d2(N, N);
    for (int i = 0; i < N; ++i) d1[i] = ExactScalar(Rational(2 * i + 1, i + 2));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        ExactScalar sym(Rational(i + j + 1, 3));
        ExactScalar bracket_part;
        for (int k = 0; k < N; ++k) bracket_part += fa.c(i, j, k) * d1[k];
        d2.at(i, j) = sym + ExactScalar(Rational(1, 2)) * bracket_part;
      }
    const FunctionJet jet(ExactScalar(0), d1, d2);
    try {
      const JetOperators ops =
          jet_operators(jet, s.xi(), s, lc, fa, alpha, beta);
      sink.must_hold("divergence/hessian/laplacian transfer closed forms", true);
      sink.section.add("div(xi)", ops.divergence_lc.str());
      sink.section.add("div_bar(xi)", ops.divergence_gsm.str());
    } catch (const InternalConsistencyError& e) {
      sink.must_hold(std::string("divergence/hessian/laplacian transfer closed forms: ") + e.what(),
                     false);
    }
    out.report.add(std::move(sink.section));
  }

  // ---- published reference tables (builtins only) --------------------------
  if (builtin_name) {
    const ReferenceTables& ref =
        *builtin_name == "example1" ? example1_tables() : example2_tables();
    SuiteSink sink{Report::Section("reference-tables"), &out.internal_failure,
                   &out.reference_mismatch};
    sink.reference_tensor("levi-civita connection", connection_table_tensor(N, ref.lc_connection),
                          connection_as_tensor(lc));
    sink.reference_tensor("levi-civita curvature", curvature_table(N, ref.lc_curvature),
                          lc_curv.lowered);
    sink.reference_tensor("levi-civita ricci", sym2_table(N, ref.lc_ricci), lc_ric);
    sink.reference_tensor("reeb lie derivative", sym2_table(N, ref.lc_lie), lc_lie);
    if (lc_einstein.status == SolveStatus::unique_solution) {
      sink.reference("levi-civita einstein a", P(ref.lc_einstein.first), lc_einstein.a);
      sink.reference("levi-civita einstein b", P(ref.lc_einstein.second), lc_einstein.b);
      sink.reference("levi-civita einstein c", P(ref.lc_einstein.third), lc_einstein.c);
    }
    if (lc_soliton.status == SolveStatus::unique_solution) {
      sink.reference("levi-civita soliton lambda", P(ref.lc_soliton.first), lc_soliton.lambda);
      sink.reference("levi-civita soliton mu", P(ref.lc_soliton.second), lc_soliton.mu);
      sink.reference("levi-civita soliton nu", P(ref.lc_soliton.third), lc_soliton.nu);
    }
    sink.reference_tensor("transferred connection", connection_table_tensor(N, ref.gsm_connection),
                          connection_as_tensor(gsm));
    sink.reference_tensor("transferred curvature", curvature_table(N, ref.gsm_curvature),
                          gsm_curv.lowered);
    sink.reference_tensor("transferred ricci", sym2_table(N, ref.gsm_ricci), gsm_ric);
    sink.reference("transferred scal", P(ref.gsm_scal), gsm_scal);
    {
      const TensorField lbar = gsm_lie_derivative(Potential::reeb(), gsm, lc, s, alpha, beta);
      sink.reference_tensor("transferred reeb lie derivative", sym2_table(N, ref.gsm_lie), lbar);
      const EinsteinTriple e = solve_einstein_like(gsm_ric, s);
      if (e.status == SolveStatus::unique_solution) {
        sink.reference("transferred einstein a", P(ref.gsm_einstein.first), e.a);
        sink.reference("transferred einstein b", P(ref.gsm_einstein.second), e.b);
        sink.reference("transferred einstein c", P(ref.gsm_einstein.third), e.c);
      }
      const SolitonTriple so = solve_soliton(lbar, gsm_ric, s, "xi");
      if (so.status == SolveStatus::unique_solution) {
        sink.reference("transferred soliton lambda", P(ref.gsm_soliton.first), so.lambda);
        sink.reference("transferred soliton mu", P(ref.gsm_soliton.second), so.mu);
        sink.reference("transferred soliton nu", P(ref.gsm_soliton.third), so.nu);
      }
    }
    out.report.add(std::move(sink.section));
  }

  return out;
}

}  // namespace paraframe
