#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>

#include <CLI11.hpp>

#include "parkspace/certify.hpp"
#include "parkspace/characters.hpp"
#include "parkspace/groups.hpp"
#include "parkspace/partitions.hpp"
#include "parkspace/serialize.hpp"
#include "parkspace/symfunc.hpp"

using namespace parkspace;

namespace {

std::string rational_text(const Rational& v) {
  return v.get_den() == 1 ? v.get_num().get_str()
                          : v.get_num().get_str() + "/" + v.get_den().get_str();
}

Json rf_json(const RationalFunction& f) {
  return f.is_polynomial() ? poly_to_json(f.as_poly()) : rational_function_to_json(f);
}

int run(int argc, char** argv) {
  CLI::App app{"generalized Catalan numbers and parking-character decompositions"};
  app.require_subcommand(1);
  long threads = 0;
  if (const char* env = std::getenv("PARKSPACE_THREADS")) threads = std::atol(env);
  app.add_option("--threads", threads, "number of scan threads (0 = default)");

  std::string group, lambda_text, basis = "irreducible";
  long k = 1, n = 0, m = 0, period = 0;
  bool graded = false, dual = false, at_one = false, integral = false, main_form = false;

  auto* c_catalan = app.add_subcommand("catalan", "generalized (dual) q-Catalan number");
  c_catalan->add_option("--group", group)->required();
  c_catalan->add_option("--k", k)->required();
  c_catalan->add_flag("--q", graded, "graded (q) value");
  c_catalan->add_flag("--dual", dual, "use the codegree (dual) version");
  c_catalan->add_flag("--at-one", at_one, "evaluate at q = 1");

  auto* c_condition = app.add_subcommand("condition", "condition on k as residues");
  c_condition->add_option("--group", group)->required();
  c_condition->add_flag("--dual", dual, "dual variant where applicable");
  c_condition->add_flag("--integral", integral, "integrality of the q=1 value");
  c_condition->add_flag("--main", main_form, "embedded closed-form condition");

  auto* c_verify = app.add_subcommand("verify-tables", "verify all condition tables");

  auto* c_gcd = app.add_subcommand("gcd", "gcd of Schur specializations over partitions of n");
  c_gcd->add_option("--n", n)->required();
  c_gcd->add_option("--k", k)->required();
  c_gcd->add_flag("--q", graded);

  auto* c_mult = app.add_subcommand("mult", "multiplicity of one irreducible character");
  c_mult->add_option("--group", group)->required();
  c_mult->add_option("--k", k)->required();
  c_mult->add_option("--lambda", lambda_text, "character label")->required();
  c_mult->add_flag("--q", graded);

  auto* c_decomp = app.add_subcommand("decompose", "full decomposition of the parking character");
  c_decomp->add_option("--group", group)->required();
  c_decomp->add_option("--k", k)->required();
  c_decomp->add_option("--basis", basis, "irreducible | permutation");
  c_decomp->add_flag("--q", graded);

  auto* c_dihedral = app.add_subcommand("dihedral", "dihedral multiplicities and checks");
  c_dihedral->add_option("--m", m)->required();
  c_dihedral->add_option("--k", k);

  auto* c_unimodal = app.add_subcommand("unimodality", "unimodality of Schur quotients");
  c_unimodal->add_option("--n", n)->required();
  c_unimodal->add_option("--k", k)->required();
  c_unimodal->add_option("--lambda", lambda_text);

  auto* c_stirling = app.add_subcommand("stirling", "Stirling number divisibility checks");
  c_stirling->add_option("--n", n)->required();

  auto* c_certify = app.add_subcommand("certify", "periodicity certificate for integrality");
  c_certify->add_option("--group", group)->required();
  c_certify->add_flag("--dual", dual);
  c_certify->add_option("--period", period, "scan period (default lcm of degrees)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  set_thread_count(static_cast<int>(threads));

  if (*c_catalan) {
    auto w = group_data(group);
    if (at_one || !graded) {
      Rational v = dual ? catalan_star_at_one(w, k) : catalan_at_one(w, k);
      std::cout << rational_text(v) << "\n";
    } else {
      RationalFunction v = dual ? catalan_star_q(w, k) : catalan_q(w, k);
      std::cout << rf_json(v).dump() << "\n";
    }
  } else if (*c_condition) {
    auto w = group_data(group);
    ResidueCondition c;
    if (main_form)
      c = main_condition(w);
    else if (integral)
      c = integrality_condition(w, dual);
    else {
      auto pr = q_polynomiality_condition(w);
      c = dual ? pr.cat_star : pr.both;
    }
    std::cout << residue_condition_to_json(c).dump() << "\n";
  } else if (*c_verify) {
    std::string report;
    TableVerification v = verify_condition_tables(&report);
    std::cout << "conditions: " << (v.conditions_ok ? "ok" : "FAIL") << "\n"
              << "cat-only rows: " << (v.cat_rows_ok ? "ok" : "FAIL") << "\n"
              << "integrality rows: " << (v.integrality_ok ? "ok" : "FAIL") << "\n"
              << "dual integrality rows: " << (v.dual_integrality_ok ? "ok" : "FAIL") << "\n";
    if (!report.empty()) std::cerr << report;
    return v.all_ok() ? 0 : 1;
  } else if (*c_gcd) {
    if (graded)
      std::cout << poly_to_json(gcd_poly_schur(n, k)).dump() << "\n";
    else
      std::cout << gcd_int_schur(n, k).get_str() << "\n";
  } else if (*c_mult) {
    GroupLabel label = GroupLabel::parse(group);
    Json out{{"group", group}, {"k", k}};
    if (label.kind == GroupLabel::Kind::Sym) {
      Partition lambda = Partition::parse(lambda_text);
      if (lambda.size() != label.n) throw std::invalid_argument("partition size must equal n");
      if (graded) {
        RationalFunction c =
            RationalFunction(spec_schur_q(lambda, k)) / RationalFunction(q_int_poly(k));
        out["coeff"] = rf_json(c);
        out["valid"] = c.is_polynomial() && has_nonneg_integer_coeffs(c.as_poly());
      } else {
        Rational c = Rational(spec_schur_ones(lambda, k)) / Rational(k);
        out["coeff"] = rational_to_json(c);
        out["valid"] = c.get_den() == 1 && c >= 0;
      }
    } else if (label.kind == GroupLabel::Kind::Imprimitive && label.p == 1) {
      MultiPartition lambda = MultiPartition::parse(lambda_text);
      if (lambda.component_count() != label.m || lambda.size() != label.n)
        throw std::invalid_argument("multipartition shape must match G(m,1,n)");
      if (graded) {
        RationalFunction c = g_m1n_hat_at(lambda, k);
        out["coeff"] = rf_json(c);
        out["valid"] = c.is_polynomial() && has_nonneg_integer_coeffs(c.as_poly());
      } else {
        Rational c = g_m1n_mult_ungraded(lambda, k);
        out["coeff"] = rational_to_json(c);
        out["valid"] = c.get_den() == 1 && c >= 0;
      }
    } else if (label.kind == GroupLabel::Kind::Imprimitive) {
      MultiPartition lambda = MultiPartition::parse(lambda_text);
      Rational c = gmpn_restricted_multiplicity(shift_orbit(lambda, label.p), k);
      out["coeff"] = rational_to_json(c);
      out["valid"] = c.get_den() == 1 && c >= 0;
    } else if (label.kind == GroupLabel::Kind::Dihedral) {
      DihedralDecomposition d = dihedral_decomposition(label.m);
      std::vector<Rational> vals = dihedral_mult_ungraded(label.m, k);
      bool found = false;
      for (std::size_t i = 0; i < d.labels.size(); ++i) {
        if (d.labels[i] != lambda_text) continue;
        found = true;
        if (graded) {
          RationalFunction c = substitute_u(d.hat[i],
                                            RationalFunction(Poly::monomial(Rational(1), k)));
          out["coeff"] = rf_json(c);
          out["valid"] = c.is_polynomial() && has_nonneg_integer_coeffs(c.as_poly());
        } else {
          out["coeff"] = rational_to_json(vals[i]);
          out["valid"] = vals[i].get_den() == 1 && vals[i] >= 0;
        }
      }
      if (!found) throw std::invalid_argument("unknown dihedral character label");
    } else {
      throw std::invalid_argument("mult supports S<n>, G(m,p,n), and D<m> labels");
    }
    std::cout << out.dump() << "\n";
  } else if (*c_decomp) {
    GroupLabel label = GroupLabel::parse(group);
    Decomposition d;
    if (label.kind == GroupLabel::Kind::Sym) {
      d = basis == "permutation" ? sym_perm_decomposition(label.n, k)
                                 : sym_irr_decomposition(label.n, k, graded);
    } else if (label.kind == GroupLabel::Kind::Imprimitive && label.p == 1) {
      d = basis == "permutation" ? g_m1n_perm_decomposition(label.m, label.n, k)
                                 : g_m1n_irr_decomposition(label.m, label.n, k, graded);
    } else {
      throw std::invalid_argument("decompose supports S<n> and G(m,1,n)");
    }
    std::cout << decomposition_to_json(d).dump() << "\n";
  } else if (*c_dihedral) {
    DihedralDecomposition d = dihedral_decomposition(m);
    Json entries = Json::array();
    std::vector<Rational> vals = dihedral_mult_ungraded(m, k);
    for (std::size_t i = 0; i < d.labels.size(); ++i)
      entries.push_back({{"label", d.labels[i]},
                         {"hat", upoly_to_json(d.hat[i])},
                         {"mult", rational_to_json(vals[i])}});
    auto [is_char, is_perm] = dihedral_condition_check(m, k);
    Json out{{"m", m},
             {"k", k},
             {"entries", entries},
             {"is_character", is_char},
             {"is_perm_decomposable", is_perm},
             {"closure_ok", dihedral_closure_check(m)}};
    std::cout << out.dump() << "\n";
  } else if (*c_unimodal) {
    auto lambdas = lambda_text.empty() ? enumerate_partitions(n)
                                       : std::vector<Partition>{Partition::parse(lambda_text)};
    Json out = Json::array();
    for (const auto& lambda : lambdas) {
      UnimodalityVerdict v = unimodality_check(lambda, k);
      out.push_back({{"lambda", lambda.to_string()},
                     {"even_ok", v.even_ok},
                     {"odd_ok", v.odd_ok},
                     {"whole_ok", v.whole_ok}});
    }
    std::cout << out.dump() << "\n";
  } else if (*c_stirling) {
    Json out{{"n", n}, {"divisibility_ok", stirling_divisibility_check(n)}};
    std::cout << out.dump() << "\n";
  } else if (*c_certify) {
    auto w = group_data(group);
    if (period == 0) {
      period = 1;
      for (long d : w.degrees) period = std::lcm(period, d);
    }
    Poly f = catalan_counting_polynomial(w, dual);
    auto c = period_enumerate(f, period, period);
    if (!c) {
      std::cout << "{\"certified\":false}\n";
      return 1;
    }
    Json out = residue_condition_to_json(*c);
    out["certified"] = true;
    std::cout << out.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
