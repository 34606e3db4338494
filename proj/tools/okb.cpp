// Command-line front end.  Every subcommand is a thin veneer over the
// library: load a model (file or fixture), parse class expressions, run one
// computation, print human-readable text or canonical JSON.
//
// Exit codes: 0 success, 2 usage or parse error, 3 invalid model,
// 4 violated precondition, 5 internal error.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "okb/analysis.hpp"
#include "okb/cones.hpp"
#include "okb/errors.hpp"
#include "okb/fixtures.hpp"
#include "okb/minkowski.hpp"
#include "okb/model_io.hpp"
#include "okb/okounkov.hpp"
#include "okb/polygon.hpp"
#include "okb/zariski.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace okb;

ojson coords_json(const DivisorClass& d) {
  ojson arr = ojson::array();
  for (int i = 0; i < d.rank(); ++i) arr.push_back(to_string(d[i]));
  return arr;
}

std::vector<std::string> curve_labels(const SurfaceModel& m) {
  std::vector<std::string> out;
  out.reserve(m.negative_curves.size());
  for (const NamedClass& nc : m.negative_curves) out.push_back(nc.label);
  return out;
}

ojson labels_json(const SurfaceModel& m, const CurveSubset& s) {
  ojson arr = ojson::array();
  for (int i : s.indices()) arr.push_back(m.curve_label(i));
  return arr;
}

ojson vertices_json(const RationalPolygon& p) {
  ojson arr = ojson::array();
  for (const Point2& v : p.vertices()) {
    ojson pt = ojson::array();
    pt.push_back(to_string(v.x));
    pt.push_back(to_string(v.y));
    arr.push_back(std::move(pt));
  }
  return arr;
}

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

std::string point_text(const Point2& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

std::string vertices_text(const RationalPolygon& p) {
  if (p.empty()) return "(empty)";
  std::string out;
  for (const Point2& v : p.vertices()) {
    if (!out.empty()) out += ", ";
    out += point_text(v);
  }
  return out;
}

std::string combination_text(const SurfaceModel& m, const CurveSubset& support,
                             const QVec& coefficients) {
  if (support.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (!out.empty()) out += " + ";
    out += to_string(coefficients[k]) + "*" + m.curve_label(support.indices()[k]);
  }
  return out;
}

const char* origin_text(MinkowskiBasisElement::Origin o) {
  switch (o) {
    case MinkowskiBasisElement::Origin::Flag: return "flag";
    case MinkowskiBasisElement::Origin::NefRay: return "nef-ray";
    case MinkowskiBasisElement::Origin::Chamber: return "chamber";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor-class computations on surfaces with rational "
               "polyhedral effective cone"};
  app.require_subcommand(1);

  std::string fixture;
  std::string model_path;
  bool want_json = false;
  auto* fixture_opt =
      app.add_option("--fixture", fixture, "built-in model: quartic|dp6")
          ->check(CLI::IsMember({"quartic", "dp6"}));
  auto* model_opt = app.add_option("--model", model_path, "surface-model JSON file");
  fixture_opt->excludes(model_opt);
  model_opt->excludes(fixture_opt);
  app.add_flag("--json", want_json, "canonical JSON output");

  int rc = 0;

  auto resolve_unchecked = [&]() -> SurfaceModel {
    if (!model_path.empty()) return load_model_unchecked(model_path);
    if (!fixture.empty()) return fixtures::by_name(fixture);
    throw ParseError("pass --fixture quartic|dp6 or --model <file>");
  };
  auto resolve = [&]() -> SurfaceModel {
    if (!model_path.empty()) return load_model(model_path);
    if (!fixture.empty()) return fixtures::by_name(fixture);
    throw ParseError("pass --fixture quartic|dp6 or --model <file>");
  };

  // validate
  {
    auto* sub = app.add_subcommand("validate", "check the model invariants");
    sub->fallthrough();
    sub->callback([&] {
      SurfaceModel m = resolve_unchecked();
      ValidationReport report = validate(m);
      if (want_json) {
        ojson j;
        j["name"] = m.name;
        j["valid"] = report.ok();
        j["violations"] = report.violations;
        emit(j);
      } else if (report.ok()) {
        std::cout << "model '" << m.name << "': valid\n";
      } else {
        std::cout << "model '" << m.name << "': invalid: " << report.to_string() << "\n";
      }
      if (!report.ok()) rc = 3;
    });
  }

  // zariski <class>
  {
    static std::string arg;
    auto* sub = app.add_subcommand("zariski", "Zariski decomposition of a "
                                              "pseudoeffective class");
    sub->fallthrough();
    sub->add_option("class", arg, "divisor class")->required();
    sub->callback([&] {
      SurfaceModel m = resolve();
      ZariskiDecomposition z = decompose(m, parse_class_expression(m, arg));
      if (want_json) {
        ojson j;
        j["positive"] = coords_json(z.positive);
        ojson neg = ojson::object();
        for (std::size_t k = 0; k < z.coefficients.size(); ++k)
          neg[m.curve_label(z.support.indices()[k])] = to_string(z.coefficients[k]);
        j["negative"] = std::move(neg);
        emit(j);
      } else {
        std::cout << "P = " << z.positive.to_string() << "\n";
        std::cout << "N = " << combination_text(m, z.support, z.coefficients) << "\n";
      }
    });
  }

  // volume <class>
  {
    static std::string arg;
    auto* sub = app.add_subcommand("volume", "volume (positive-part square) of a "
                                             "pseudoeffective class");
    sub->fallthrough();
    sub->add_option("class", arg, "divisor class")->required();
    sub->callback([&] {
      SurfaceModel m = resolve();
      Rational v = volume(m, parse_class_expression(m, arg));
      if (want_json) {
        ojson j;
        j["volume"] = to_string(v);
        emit(j);
      } else {
        std::cout << to_string(v) << "\n";
      }
    });
  }

  // chambers [--count-only]
  {
    static bool count_only = false;
    auto* sub = app.add_subcommand("chambers", "Zariski chambers (nonempty "
                                               "negative-definite supports)");
    sub->fallthrough();
    sub->add_flag("--count-only", count_only, "print only the number of chambers");
    sub->callback([&] {
      SurfaceModel m = resolve();
      if (count_only) {
        long n = chamber_count(m);
        if (want_json) {
          ojson j;
          j["count"] = n;
          emit(j);
        } else {
          std::cout << n << "\n";
        }
        return;
      }
      std::vector<CurveSubset> chambers = enumerate_chambers(m);
      if (want_json) {
        ojson j;
        j["count"] = static_cast<long>(chambers.size());
        ojson list = ojson::array();
        for (const CurveSubset& c : chambers) list.push_back(labels_json(m, c));
        j["chambers"] = std::move(list);
        emit(j);
      } else {
        for (const CurveSubset& c : chambers)
          std::cout << c.to_string(curve_labels(m)) << "\n";
      }
    });
  }

  // star-check
  {
    auto* sub = app.add_subcommand("star-check", "pairwise intersection condition "
                                                 "(Ni.Nj)^2 >= Ni^2*Nj^2 for meeting curves");
    sub->fallthrough();
    sub->callback([&] {
      SurfaceModel m = resolve();
      std::optional<std::pair<int, int>> w = star_witness(m);
      if (want_json) {
        ojson j;
        j["satisfied"] = !w.has_value();
        if (w) {
          ojson pair = ojson::array();
          pair.push_back(m.curve_label(w->first));
          pair.push_back(m.curve_label(w->second));
          j["witness"] = std::move(pair);
        } else {
          j["witness"] = nullptr;
        }
        emit(j);
      } else if (w) {
        std::cout << "violated by (" << m.curve_label(w->first) << ", "
                  << m.curve_label(w->second) << ")\n";
      } else {
        std::cout << "satisfied\n";
      }
    });
  }

  // weyl-check
  {
    auto* sub = app.add_subcommand("weyl-check", "whether no two meeting negative "
                                                 "curves ever share a chamber");
    sub->fallthrough();
    sub->callback([&] {
      SurfaceModel m = resolve();
      bool simple = is_simple_weyl(m);
      if (want_json) {
        ojson j;
        j["simple"] = simple;
        emit(j);
      } else {
        std::cout << (simple ? "simple\n" : "not simple\n");
      }
    });
  }

  // okounkov <class> --flag <class> [--svg out.svg]
  {
    static std::string arg, flag_arg, svg_path;
    auto* sub = app.add_subcommand("okounkov", "Okounkov polygon of a big or nef "
                                               "class with respect to a flag");
    sub->fallthrough();
    sub->add_option("class", arg, "divisor class")->required();
    sub->add_option("--flag", flag_arg, "flag curve class")->required();
    sub->add_option("--svg", svg_path, "write an SVG rendering to this file");
    sub->callback([&] {
      SurfaceModel m = resolve();
      DivisorClass d = parse_class_expression(m, arg);
      Flag flag{parse_class_expression(m, flag_arg)};
      RationalPolygon poly;
      std::optional<ChamberWalk> walk;
      if (is_big(m, d)) {
        walk = chamber_walk(m, d, flag);
        poly = okounkov_polygon(m, d, flag);
      } else {
        poly = nef_class_polygon(m, d, flag);
      }
      if (!svg_path.empty()) {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out) throw ParseError(svg_path + ": cannot open for writing");
        out << polygons_to_svg({{arg, poly}});
      }
      if (want_json) {
        ojson j;
        j["class"] = coords_json(d);
        j["flag"] = coords_json(flag.curve);
        j["vertices"] = vertices_json(poly);
        j["area"] = to_string(poly.area());
        if (walk) {
          j["t_min"] = to_string(walk->a);
          j["t_max"] = to_string(walk->mu);
          ojson segs = ojson::array();
          for (const WalkSegment& s : walk->segments) {
            ojson e;
            e["t"] = ojson::array({to_string(s.t_lo), to_string(s.t_hi)});
            e["support"] = labels_json(m, s.support);
            e["alpha"] = ojson::array({to_string(s.alpha_lo), to_string(s.alpha_hi)});
            e["beta"] = ojson::array({to_string(s.beta_lo), to_string(s.beta_hi)});
            segs.push_back(std::move(e));
          }
          j["segments"] = std::move(segs);
        }
        if (!svg_path.empty()) j["svg"] = svg_path;
        emit(j);
      } else {
        std::cout << "vertices: " << vertices_text(poly) << "\n";
        std::cout << "area = " << to_string(poly.area()) << "\n";
        if (walk) {
          std::cout << "t in [" << to_string(walk->a) << ", " << to_string(walk->mu)
                    << "]\n";
          for (const WalkSegment& s : walk->segments)
            std::cout << "  t in [" << to_string(s.t_lo) << ", " << to_string(s.t_hi)
                      << "]: support " << s.support.to_string(curve_labels(m))
                      << ", alpha " << to_string(s.alpha_lo) << " -> "
                      << to_string(s.alpha_hi) << ", beta " << to_string(s.beta_lo)
                      << " -> " << to_string(s.beta_hi) << "\n";
        }
        if (!svg_path.empty()) std::cout << "wrote " << svg_path << "\n";
      }
    });
  }

  // mb --flag <class>
  {
    static std::string flag_arg;
    auto* sub = app.add_subcommand("mb", "Minkowski basis for a big and nef flag");
    sub->fallthrough();
    sub->add_option("--flag", flag_arg, "flag curve class")->required();
    sub->callback([&] {
      SurfaceModel m = resolve();
      MinkowskiBasis basis = minkowski_basis(m, Flag{parse_class_expression(m, flag_arg)});
      if (want_json) {
        ojson j;
        j["flag"] = coords_json(basis.flag.curve);
        j["count"] = static_cast<long>(basis.elements.size());
        ojson list = ojson::array();
        for (const MinkowskiBasisElement& e : basis.elements) {
          ojson je;
          je["class"] = coords_json(e.cls);
          je["origin"] = origin_text(e.origin);
          if (e.origin == MinkowskiBasisElement::Origin::Chamber)
            je["chamber"] = labels_json(m, e.chamber);
          je["vertices"] = vertices_json(e.polygon);
          list.push_back(std::move(je));
        }
        j["elements"] = std::move(list);
        emit(j);
      } else {
        for (const MinkowskiBasisElement& e : basis.elements) {
          std::cout << e.cls.to_string() << "  [" << origin_text(e.origin);
          if (e.origin == MinkowskiBasisElement::Origin::Chamber)
            std::cout << " " << e.chamber.to_string(curve_labels(m));
          std::cout << "]\n";
        }
      }
    });
  }

  // mb-card {--ample | --bignef --flag | --bound --flag}
  {
    static bool ample = false, bignef = false, bound = false;
    static std::string flag_arg;
    auto* sub = app.add_subcommand("mb-card", "predicted Minkowski basis cardinality");
    sub->fallthrough();
    sub->add_flag("--ample", ample, "count for an ample flag");
    sub->add_flag("--bignef", bignef, "count for a big and nef flag (needs --flag)");
    sub->add_flag("--bound", bound, "upper bound for a big and nef flag (needs --flag)");
    sub->add_option("--flag", flag_arg, "flag curve class");
    sub->callback([&] {
      if (static_cast<int>(ample) + static_cast<int>(bignef) + static_cast<int>(bound) != 1)
        throw ParseError("choose exactly one of --ample, --bignef, --bound");
      SurfaceModel m = resolve();
      long count = 0;
      std::string mode;
      std::optional<DivisorClass> c;
      if (ample) {
        count = cardinality_ample(m);
        mode = "ample";
      } else {
        if (flag_arg.empty()) throw ParseError("--bignef and --bound require --flag");
        c = parse_class_expression(m, flag_arg);
        count = bignef ? cardinality_bignef(m, *c) : cardinality_upper_bound(m, *c);
        mode = bignef ? "bignef" : "bound";
      }
      if (want_json) {
        ojson j;
        j["mode"] = mode;
        if (c) j["flag"] = coords_json(*c);
        j["count"] = count;
        emit(j);
      } else {
        std::cout << count << "\n";
      }
    });
  }

  // mb-decompose <class> --flag <class>
  {
    static std::string arg, flag_arg;
    auto* sub = app.add_subcommand("mb-decompose", "write a nef class over the "
                                                   "Minkowski basis");
    sub->fallthrough();
    sub->add_option("class", arg, "nef divisor class")->required();
    sub->add_option("--flag", flag_arg, "flag curve class")->required();
    sub->callback([&] {
      SurfaceModel m = resolve();
      DivisorClass d = parse_class_expression(m, arg);
      MinkowskiDecomposition dec =
          minkowski_decompose(m, d, Flag{parse_class_expression(m, flag_arg)});
      if (want_json) {
        ojson j;
        j["class"] = coords_json(d);
        j["flag"] = coords_json(dec.basis.flag.curve);
        ojson terms = ojson::array();
        for (std::size_t k = 0; k < dec.coefficients.size(); ++k) {
          ojson t;
          t["element"] = coords_json(dec.basis.elements[k].cls);
          t["coefficient"] = to_string(dec.coefficients[k]);
          terms.push_back(std::move(t));
        }
        j["coefficients"] = std::move(terms);
        j["vertices"] = vertices_json(dec.polygon);
        emit(j);
      } else {
        std::string out;
        for (std::size_t k = 0; k < dec.coefficients.size(); ++k) {
          if (sign(dec.coefficients[k]) == 0) continue;
          if (!out.empty()) out += " + ";
          out += to_string(dec.coefficients[k]) + "*" + dec.basis.elements[k].cls.to_string();
        }
        std::cout << (out.empty() ? "0" : out) << "\n";
      }
    });
  }

  // numeq <class1> <class2>
  {
    static std::string arg1, arg2;
    auto* sub = app.add_subcommand("numeq", "numerical-equivalence test for two "
                                            "pseudoeffective classes");
    sub->fallthrough();
    sub->add_option("class1", arg1, "first class")->required();
    sub->add_option("class2", arg2, "second class")->required();
    sub->callback([&] {
      SurfaceModel m = resolve();
      EquivalenceReport r = numerically_equivalent(m, parse_class_expression(m, arg1),
                                                   parse_class_expression(m, arg2));
      if (want_json) {
        ojson j;
        j["equivalent"] = r.equivalent;
        j["polygons_equal"] = r.polygons_equal;
        j["curve_products_equal"] = r.curve_products_equal;
        ojson mism = ojson::array();
        for (int i : r.curve_mismatches) mism.push_back(m.curve_label(i));
        j["curve_mismatches"] = std::move(mism);
        ojson battery = ojson::array();
        for (const Flag& f : r.battery) battery.push_back(coords_json(f.curve));
        j["battery"] = std::move(battery);
        emit(j);
      } else {
        std::cout << "positive parts (polygons over the ample battery): "
                  << (r.polygons_equal ? "equal" : "different") << "\n";
        std::cout << "products with negative curves: "
                  << (r.curve_products_equal ? "equal" : "different");
        if (!r.curve_mismatches.empty()) {
          std::cout << " (mismatch at";
          for (int i : r.curve_mismatches) std::cout << " " << m.curve_label(i);
          std::cout << ")";
        }
        std::cout << "\n";
        std::cout << "numerically equivalent: " << (r.equivalent ? "yes" : "no") << "\n";
      }
    });
  }

  // fujita <D> <A> --flag <class> --beta <rational>
  {
    static std::string arg_d, arg_a, flag_arg, beta_arg;
    auto* sub = app.add_subcommand("fujita", "polygon-level approximation report "
                                             "for a big class and a nef class below it");
    sub->fallthrough();
    sub->add_option("D", arg_d, "big divisor class")->required();
    sub->add_option("A", arg_a, "nef approximating class")->required();
    sub->add_option("--flag", flag_arg, "flag curve class")->required();
    sub->add_option("--beta", beta_arg, "tolerance (positive rational)")->required();
    sub->callback([&] {
      SurfaceModel m = resolve();
      FujitaReport r =
          fujita_report(m, parse_class_expression(m, arg_d), parse_class_expression(m, arg_a),
                        Flag{parse_class_expression(m, flag_arg)}, parse_rational(beta_arg));
      if (want_json) {
        ojson j;
        j["beta"] = to_string(r.beta);
        j["inner_contained"] = r.inner_contained;
        j["inner_gap"] = to_string(r.inner_gap);
        j["minimal_delta"] = to_string(r.minimal_delta);
        j["outer_gap"] = to_string(r.outer_gap);
        j["within_beta"] = r.gaps_within_beta;
        j["d_vertices"] = vertices_json(r.d_polygon);
        j["a_vertices"] = vertices_json(r.a_polygon);
        j["scaled_a_vertices"] = vertices_json(r.scaled_a_polygon);
        emit(j);
      } else {
        std::cout << "inner: contained = " << (r.inner_contained ? "yes" : "no")
                  << ", gap = " << to_string(r.inner_gap) << "\n";
        std::cout << "dilation: delta = " << to_string(r.minimal_delta)
                  << ", outer gap = " << to_string(r.outer_gap) << "\n";
        std::cout << "both gaps below " << to_string(r.beta) << ": "
                  << (r.gaps_within_beta ? "yes" : "no") << "\n";
      }
    });
  }

  // reduced-chambers --flag <class>
  {
    static std::string flag_arg;
    auto* sub = app.add_subcommand("reduced-chambers", "chamber count with the "
                                                       "flag's null curves deleted");
    sub->fallthrough();
    sub->add_option("--flag", flag_arg, "big and nef flag curve class")->required();
    sub->callback([&] {
      SurfaceModel m = resolve();
      DivisorClass c = parse_class_expression(m, flag_arg);
      long n = reduced_chamber_count(m, c);
      if (want_json) {
        ojson j;
        j["flag"] = coords_json(c);
        j["count"] = n;
        emit(j);
      } else {
        std::cout << n << "\n";
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const StarViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return rc;
}
