#pragma once

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcg/mcg.hpp"

namespace mcg::cli {

enum class Format { json, csv, text };

struct RunConfig {
  Format format = Format::json;
  unsigned precision_bits = 60;
};

namespace detail {

inline constexpr int kTextDigits = 12;

inline std::string show(const Interval& x, int digits = kTextDigits) {
  return "[" + format_fixed(x.lo, digits, Rounding::down) + ", " + format_fixed(x.hi, digits, Rounding::up) + "]";
}

inline std::string trace_text(const QuadReal& t) {
  return t.is_rational() ? t.rational_part().get_str() : t.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

inline std::vector<SymplecticPair> parse_pairs(int genus, const std::string& text) {
  std::vector<SymplecticPair> pairs;
  for (const auto& item : split(text, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto parts = split(item, ',');
    if (parts.size() != 2) throw PreconditionError("each pair must read 'u,v': '" + item + "'");
    pairs.emplace_back(HomologyClass::parse(genus, parts[0]), HomologyClass::parse(genus, parts[1]));
  }
  return pairs;
}

inline IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<Integer> r;
    for (const auto& cell : split(row, ',')) {
      auto first = cell.find_first_not_of(" \t");
      auto last = cell.find_last_not_of(" \t");
      if (first == std::string::npos) throw PreconditionError("empty matrix entry");
      Integer v;
      if (v.set_str(cell.substr(first, last - first + 1), 10) != 0) throw PreconditionError("bad matrix entry '" + cell + "'");
      r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows.front().empty()) throw PreconditionError("empty matrix");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw PreconditionError("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline std::string bound_csv(const std::string& kind, const BoundResult& b) {
  std::ostringstream os;
  os << "kind,direction,lower,upper,binding_case\n"
     << kind << ',' << to_string(b.direction) << ',' << format_fixed(b.value.lo, 15, Rounding::down) << ','
     << format_fixed(b.value.hi, 15, Rounding::up) << ',' << b.binding_case << '\n';
  return os.str();
}

inline std::string bound_text(const std::string& kind, const BoundResult& b) {
  std::string out = kind + ": " + show(b.value) + " (" + std::string(to_string(b.direction)) + ")";
  if (!b.binding_case.empty()) out += ", binding case " + b.binding_case;
  return out + "\n  valid for: " + b.validity_note + "\n";
}

}  // namespace detail

/// Runs one command line and writes the report to `out`. Returns 0 on
/// success, 1 on a computation error (or a failing verify-paper row), 2 on a
/// usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dilatations, curve families, bounds and Johnson tau for mapping classes", "mcg"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->default_str("json");
  app.add_option("--precision-bits", config.precision_bits, "Relative precision of certified intervals")
      ->check(CLI::Range(8U, 4096U))
      ->default_str("60");

  // dilatation
  auto* dil = app.add_subcommand("dilatation", "Thurston image, isometry class and certified dilatation of a word");
  std::string word;
  std::uint64_t mu = 0;
  dil->add_option("--word", word, "Word over a, b, A, B (empty for the identity)")->required();
  dil->add_option("--mu", mu, "Radicand mu >= 1")->required()->check(CLI::PositiveNumber);

  // family
  auto* fam = app.add_subcommand("family", "Intersection matrix, NN^t and its Perron-Frobenius data");
  int genus = 0;
  std::string kind;
  std::string matrix;
  fam->add_option("--genus", genus, "Genus");
  fam->add_option("--kind", kind, "torelli, braid or custom")
      ->required()
      ->check(CLI::IsMember({"torelli", "braid", "custom"}));
  fam->add_option("--matrix", matrix, "Custom intersection matrix, rows split by ';', entries by ','");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Closed-form dilatation and translation-length bounds");
  std::string bound_kind;
  std::optional<int> opt_genus, opt_n, opt_j, opt_r, opt_p, opt_k;
  std::optional<long> opt_b;
  std::optional<std::string> opt_log_lambda;
  // "johnson" is the Johnson-kernel case of the surgery bound (n = 4, j = 1).
  std::map<std::string, BoundKind> bound_kinds{{"surgery", BoundKind::surgery},
                                               {"punctured-surgery", BoundKind::punctured_surgery},
                                               {"torelli", BoundKind::torelli},
                                               {"johnson", BoundKind::surgery},
                                               {"congruence", BoundKind::congruence},
                                               {"brunnian", BoundKind::brunnian},
                                               {"filling-intersection", BoundKind::filling_intersection},
                                               {"tau-cc", BoundKind::tau_cc},
                                               {"tau-cc-infs", BoundKind::tau_cc_infs},
                                               {"hironaka-kin", BoundKind::hironaka_kin},
                                               {"m-of-k", BoundKind::m_of_k}};
  std::vector<std::string> kind_names;
  for (const auto& [name, _] : bound_kinds) kind_names.push_back(name);
  bnd->add_option("--group,--kind", bound_kind, "Bound to evaluate")->required()->check(CLI::IsMember(kind_names));
  bnd->add_option("--genus", opt_genus, "Genus g");
  bnd->add_option("-n,--intersections", opt_n, "Intersection threshold n");
  bnd->add_option("-j,--power", opt_j, "Power j in i(c, f^j(c))");
  bnd->add_option("-r,--level", opt_r, "Congruence level r");
  bnd->add_option("-p,--punctures", opt_p, "Number of punctures p");
  bnd->add_option("-k,--depth", opt_k, "Johnson filtration depth k");
  bnd->add_option("-B,--b-value", opt_b, "Intersection threshold B(k)");
  bnd->add_option("--log-lambda", opt_log_lambda, "Exact log dilatation (decimal or p/q)");

  // search
  auto* srch = app.add_subcommand("search", "Minimal dilatation over conjugacy classes up to a word length");
  std::size_t max_len = 0;
  unsigned jobs = 1;
  srch->add_option("--max-len", max_len, "Maximum word length")->required();
  srch->add_option("--mu", mu, "Radicand mu >= 1")->required()->check(CLI::PositiveNumber);
  srch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->default_str("1");

  // lcs-table
  auto* lcs = app.add_subcommand("lcs-table", "Nested commutators w(k) and their dilatations");
  int max_k = 0;
  lcs->add_option("--max-k", max_k, "Largest depth k")->required();
  lcs->add_option("--mu", mu, "Radicand mu >= 1")->required()->check(CLI::PositiveNumber);

  // johnson-tau
  auto* tau = app.add_subcommand("johnson-tau", "Johnson homomorphism of a bounding-pair map");
  std::string pairs_text;
  std::string a_text;
  bool lantern = false;
  tau->add_option("--genus", genus, "Genus g")->required();
  tau->add_option("--pairs", pairs_text, "Symplectic basis of the cut-off subsurface, e.g. \"x2,y2;x3,y3\"");
  tau->add_option("--a", a_text, "Homology class of the bounding pair, e.g. x1");
  auto* lantern_flag = tau->add_flag("--lantern", lantern, "Compare the two lantern bounding-pair maps");
  lantern_flag->excludes(tau->get_option("--pairs"));
  lantern_flag->excludes(tau->get_option("--a"));

  // tau-cc
  auto* tcc = app.add_subcommand("tau-cc", "Upper bound on curve-complex translation length");
  std::optional<std::string> tcc_log_lambda;
  tcc->add_option("--genus", genus, "Genus g")->required();
  tcc->add_option("--log-lambda", tcc_log_lambda, "Exact log dilatation (decimal or p/q); omit for the infimum bound");

  // verify-paper
  auto* ver = app.add_subcommand("verify-paper", "Run the acceptance table");
  std::vector<int> only;
  ver->add_option("--criterion", only, "Run only these rows (1-based)");

  // Accept the single-letter long spellings --r and --p.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    for (auto [short_form, long_form] : {std::pair{"--r", "--level"}, std::pair{"--p", "--punctures"}}) {
      std::string s(short_form);
      if (a == s || a.rfind(s + "=", 0) == 0) a = long_form + a.substr(s.size());
    }
    args.push_back(std::move(a));
  }

  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  config.format = format_name == "csv" ? Format::csv : format_name == "text" ? Format::text : Format::json;
  const Format format = config.format;
  const unsigned bits = config.precision_bits;
  try {
    if (dil->parsed()) {
      DilatationReport r = dilatation(Word::parse(word), mu, bits);
      if (format == Format::json) {
        out << to_json(r).dump(2) << '\n';
      } else if (format == Format::csv) {
        out << "word,mu,trace,class,log_lambda_lo,log_lambda_hi\n"
            << r.word.str() << ',' << r.mu << ',' << r.trace.str() << ',' << to_string(r.isometry_class) << ',';
        if (r.log_dilatation) {
          out << format_fixed(r.log_dilatation->lo, 15, Rounding::down) << ','
              << format_fixed(r.log_dilatation->hi, 15, Rounding::up);
        } else {
          out << ',';
        }
        out << '\n';
      } else if (r.isometry_class != IsometryClass::hyperbolic) {
        out << to_string(r.isometry_class) << "; no dilatation\n";
      } else {
        const auto& p = *r.char_poly;
        out << "word " << r.word.str() << ", mu " << r.mu << "\n"
            << "  trace " << detail::trace_text(r.trace) << ", hyperbolic\n"
            << "  lambda in " << detail::show(*r.dilatation) << "\n"
            << "  log lambda in " << detail::show(*r.log_dilatation) << "\n"
            << "  char poly x^2 - " << Rational(-p[1]).get_str() << " x + 1\n";
      }
      return 0;
    }

    if (fam->parsed()) {
      IntersectionFamily f;
      if (kind == "custom") {
        if (matrix.empty()) throw PreconditionError("--kind custom needs --matrix");
        f = custom_family(detail::parse_matrix(matrix));
      } else {
        if (!matrix.empty()) throw PreconditionError("--matrix is only valid with --kind custom");
        if (fam->get_option("--genus")->count() == 0) throw PreconditionError("--genus is required");
        f = kind == "torelli" ? torelli_family(genus) : braid_family(genus);
      }
      IntMatrix product = nnt(f);
      PFResult pf = pf_eigenvalue(product, pow2(-static_cast<long>(bits)));
      std::optional<std::uint64_t> radicand = thurston_mu(f);
      if (format == Format::json) {
        Json j{{"kind", std::string(to_string(f.kind))},
               {"genus", f.genus},
               {"N", to_json(f.n)},
               {"NNt", to_json(product)},
               {"pf", to_json(pf)},
               {"mu", radicand ? Json(*radicand) : Json(nullptr)}};
        out << j.dump(2) << '\n';
      } else if (format == Format::csv) {
        out << family_csv(f, product, pf);
      } else {
        out << to_string(f.kind) << " family, genus " << f.genus << ", " << f.size() << " curve pairs\n";
        if (pf.exact) {
          out << "  PF eigenvalue of NN^t = " << pf.value_lower.get_str() << " (exact, all-ones eigenvector)\n";
        } else {
          out << "  PF eigenvalue of NN^t in [" << format_fixed(pf.value_lower, detail::kTextDigits, Rounding::down) << ", "
              << format_fixed(pf.value_upper, detail::kTextDigits, Rounding::up) << "]\n";
        }
        if (radicand) out << "  mu = " << *radicand << "\n";
      }
      return 0;
    }

    if (bnd->parsed()) {
      BoundQuery q;
      q.kind = bound_kinds.at(bound_kind);
      q.genus = opt_genus;
      q.intersections = opt_n;
      q.power = opt_j;
      // Group bounds hold for every genus in range; --genus is only validated.
      if (bound_kind == "torelli" || bound_kind == "johnson" || bound_kind == "congruence" || bound_kind == "brunnian") {
        int least = bound_kind == "brunnian" ? 0 : 2;
        if (opt_genus && *opt_genus < least) {
          throw PreconditionError("this bound needs genus >= " + std::to_string(least));
        }
        q.genus.reset();
      }
      if (bound_kind == "johnson") {
        if (opt_n || opt_j) throw PreconditionError("--group johnson takes no -n or -j");
        q.intersections = 4;
        q.power = 1;
      }
      q.level = opt_r;
      q.punctures = opt_p;
      q.depth = opt_k;
      q.b_value = opt_b;
      if (opt_log_lambda) q.log_dilatation = Interval::point(parse_rational(*opt_log_lambda));
      BoundResult b = evaluate(q);
      if (format == Format::json) {
        Json j = to_json(b);
        j["kind"] = bound_kind;
        out << j.dump(2) << '\n';
      } else if (format == Format::csv) {
        out << detail::bound_csv(bound_kind, b);
      } else {
        out << detail::bound_text(bound_kind, b);
      }
      return 0;
    }

    if (srch->parsed()) {
      SearchReport r = min_dilatation_search(max_len, mu, jobs, bits);
      if (format == Format::json) {
        out << to_json(r).dump(2) << '\n';
      } else if (format == Format::csv) {
        out << "word,trace,log_lambda_lo,log_lambda_hi\n";
        for (const auto& w : r.all_minima) {
          DilatationReport d = dilatation(w, mu, bits);
          out << w.str() << ',' << d.trace.str() << ',' << format_fixed(d.log_dilatation->lo, 15, Rounding::down) << ','
              << format_fixed(d.log_dilatation->hi, 15, Rounding::up) << '\n';
        }
      } else {
        out << r.classes_examined << " classes of length <= " << r.max_length << " at mu " << r.mu << "\n"
            << "  minimum |trace| " << detail::trace_text(abs(r.minimum.trace)) << ", log lambda in "
            << detail::show(*r.minimum.log_dilatation) << "\n  attained by";
        for (const auto& w : r.all_minima) out << ' ' << w.str();
        out << "\n  (minimal among classes of length <= " << r.max_length << " only)\n";
      }
      return 0;
    }

    if (lcs->parsed()) {
      auto rows = lcs_table(max_k, mu, bits);
      if (format == Format::json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
          arr.push_back(Json{{"k", r.depth},
                             {"word", r.word.str()},
                             {"length", r.word_length},
                             {"trace", to_json(r.trace)},
                             {"class", std::string(to_string(r.isometry_class))},
                             {"log_lambda", r.log_dilatation ? to_json(*r.log_dilatation) : Json(nullptr)}});
        }
        out << Json{{"mu", mu}, {"rows", arr}}.dump(2) << '\n';
      } else if (format == Format::csv) {
        out << lcs_csv(rows);
      } else {
        for (const auto& r : rows) {
          out << "k=" << r.depth << " length " << r.word_length << " trace " << detail::trace_text(r.trace) << ' '
              << to_string(r.isometry_class);
          if (r.log_dilatation) out << " log lambda " << detail::show(*r.log_dilatation);
          out << '\n';
        }
      }
      return 0;
    }

    if (tau->parsed()) {
      if (lantern) {
        auto fixture = LanternFixture::canonical(genus);
        Wedge3Coset zd = fixture.tau_zd();
        Wedge3Coset dw = fixture.tau_dw();
        bool distinct = !coset_equal(zd, dw);
        if (format == Format::json) {
          out << Json{{"genus", genus}, {"tau_zd", to_json(zd)}, {"tau_dw", to_json(dw)}, {"distinct", distinct}}.dump(2)
              << '\n';
        } else if (format == Format::csv) {
          out << "map,term,coefficient\n";
          for (const auto& [name, c] : zd.normal_form().terms()) out << "tau_zd," << name << ',' << c.get_str() << '\n';
          for (const auto& [name, c] : dw.normal_form().terms()) out << "tau_dw," << name << ',' << c.get_str() << '\n';
        } else {
          out << "tau(T_z T_d^-1) " << (distinct ? "!=" : "==") << " tau(T_d T_w^-1) in the quotient of rank "
              << quotient_rank(genus) << '\n';
        }
        return 0;
      }
      if (a_text.empty()) throw PreconditionError("--a is required unless --lantern is given");
      Wedge3Coset c = tau_bounding_pair(genus, detail::parse_pairs(genus, pairs_text), HomologyClass::parse(genus, a_text));
      if (format == Format::json) {
        out << to_json(c).dump(2) << '\n';
      } else if (format == Format::csv) {
        out << "term,coefficient\n";
        for (const auto& [name, coeff] : c.normal_form().terms()) out << name << ',' << coeff.get_str() << '\n';
      } else {
        Wedge3Coset nf = c.normal_form();
        if (nf.is_zero()) {
          out << "0 in the quotient\n";
        } else {
          bool first = true;
          for (const auto& [name, coeff] : nf.terms()) {
            out << (first ? "" : " + ") << coeff.get_str() << ' ' << name;
            first = false;
          }
          out << '\n';
        }
      }
      return 0;
    }

    if (tcc->parsed()) {
      BoundResult b = tcc_log_lambda ? tau_cc_upper(genus, Interval::point(parse_rational(*tcc_log_lambda)))
                                     : tau_cc_infs_upper(genus);
      std::string name = tcc_log_lambda ? "tau-cc" : "tau-cc-infs";
      if (format == Format::json) {
        Json j = to_json(b);
        j["kind"] = name;
        out << j.dump(2) << '\n';
      } else if (format == Format::csv) {
        out << detail::bound_csv(name, b);
      } else {
        out << detail::bound_text(name, b);
      }
      return 0;
    }

    if (ver->parsed()) {
      auto all = verify::criteria();
      std::vector<verify::CriterionResult> results;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (!only.empty() && std::find(only.begin(), only.end(), static_cast<int>(i + 1)) == only.end()) continue;
        results.push_back(all[i]());
      }
      bool all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      if (format == Format::json) {
        Json arr = Json::array();
        for (const auto& r : results) {
          arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        }
        out << Json{{"all_passed", all_passed}, {"criteria", arr}}.dump(2) << '\n';
      } else if (format == Format::csv) {
        out << "id,passed,elapsed_ms,budget_ms\n";
        for (const auto& r : results) out << r.id << ',' << (r.passed ? "true" : "false") << ',' << r.elapsed_ms << ',' << r.budget_ms << '\n';
      } else {
        for (const auto& r : results) out << verify::format_row(r) << '\n';
        std::size_t passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
        out << passed << '/' << results.size() << " criteria passed\n";
      }
      return all_passed ? 0 : 1;
    }
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace mcg::cli
