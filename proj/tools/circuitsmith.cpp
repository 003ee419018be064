#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include "circuitsmith/io.hpp"
#include "circuitsmith/psi.hpp"

using namespace circuitsmith;
using io::json;

namespace {

enum Exit { kValid = 0, kInvalid = 1, kUnknown = 2, kInputError = 3 };

int exit_for(Status s) {
  switch (s) {
    case Status::Pass: return kValid;
    case Status::Fail: return kInvalid;
    case Status::Unknown: return kUnknown;
  }
  return kInvalid;
}

void emit(const json& j, const std::string& out = {}) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw MalformedInput("cannot write " + out);
  f << j.dump(2) << "\n";
}

// A complex file is either {"maximal": ...} or a bare list of simplices.
SimplicialComplex load_complex(const std::string& path) {
  const auto j = io::read_file(path);
  return j.is_array() ? io::closure_from_json(j) : io::complex_from_json(j);
}

TargetPair load_target(const std::string& path) {
  auto t = io::target_from_json(io::read_file(path));
  return {std::move(t.space), std::move(t.relative)};
}

json sigma_report(const SigmaSet& s, const Verdict& prop20) {
  return json{{"case", to_string(s.kase)},
              {"simplices", io::to_json(s.sigma.simplices())},
              {"dimension", s.sigma.dimension()},
              {"dimension_bound", s.dimension_bound},
              {"face_closed", s.face_closed},
              {"codim_ok", s.codim_ok},
              {"prop20", io::verdict_to_json(prop20)}};
}

int laws_exit(const std::vector<LawCheck>& laws, bool check) {
  return check && !all_hold(laws) ? kInvalid : kValid;
}

BordismMode parse_mode(const std::string& m) {
  if (m == "absolute") return BordismMode::Absolute;
  if (m == "relative") return BordismMode::Relative;
  throw MalformedInput("mode must be absolute or relative");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circuits, singular sets, homology, limit sets and pseudocycle certificates"};
  app.require_subcommand(1);

  std::function<int()> run;
  std::string f1, f2, f3, out, rel, sfile, iso, kase, mode = "relative";
  int k = -2, r = 0;
  bool check = false, reverse = false;

  auto* recognize = app.add_subcommand("recognize", "Classify every simplex as manifold or not");
  recognize->add_option("complex", f1)->required();
  recognize->callback([&] {
    run = [&] {
      const auto report = non_manifold_set(load_complex(f1));
      emit(io::manifold_report_to_json(report));
      return report.exact ? kValid : kUnknown;
    };
  });

  auto* hom = app.add_subcommand("homology", "Integer homology of a complex or pair");
  hom->add_option("complex", f1)->required();
  hom->add_option("--rel", rel, "Subcomplex A");
  hom->callback([&] {
    run = [&] {
      const auto k_ = load_complex(f1);
      emit(io::homology_to_json(homology(k_, rel.empty() ? SimplicialComplex{} : load_complex(rel))));
      return kValid;
    };
  });

  auto* cc = app.add_subcommand("check-circuit", "Verify the circuit axioms");
  cc->add_option("circuit", f1)->required();
  cc->add_option("--k", k, "Circuit dimension")->required();
  cc->add_option("--s", sfile, "Singular set");
  cc->callback([&] {
    run = [&] {
      auto j = io::read_file(f1);
      j["k"] = k;
      if (!sfile.empty()) j["singular"] = io::to_json(load_complex(sfile).simplices());
      bool supplied = false;
      const auto q = io::circuit_from_json(j, &supplied);
      const auto v = verify_circuit(q);
      json out{{"circuit", io::circuit_to_json(q)},
               {"singular_source", supplied ? "supplied" : "default"},
               {"verdict", io::verdict_to_json(v)}};
      if (supplied) {
        const auto d = with_default_singular_set(q);
        if (d.singular != q.singular) {
          out["default_singular"] = io::to_json(d.singular.maximal_simplices());
          out["default_verdict"] = io::verdict_to_json(verify_circuit(d));
        }
      }
      emit(out);
      return exit_for(v.status());
    };
  });

  auto* sig = app.add_subcommand("sigma", "Singular set Sigma and its complement checks");
  sig->add_option("--case", kase, "a, b or c")->required()->check(CLI::IsMember({"a", "b", "c"}));
  sig->add_option("data", f1, "Circuit (a, b) or bordism (c)")->required();
  sig->callback([&] {
    run = [&] {
      const auto j = io::read_file(f1);
      if (kase == "c") {
        const auto b = io::bordism_from_json(j);
        const auto s = sigma_bordism(b);
        const auto v = verify_prop20(s, b);
        emit(sigma_report(s, v));
        return exit_for(v.status());
      }
      const auto q = io::circuit_from_json(j);
      const auto s = kase == "a" ? sigma_absolute(q) : sigma_relative(q);
      const auto v = verify_prop20(s, q);
      emit(sigma_report(s, v));
      return exit_for(v.status());
    };
  });

  auto* gl = app.add_subcommand("glue", "Glue two circuits (or one to itself) along boundary parts");
  gl->add_option("first", f1)->required();
  gl->add_option("second", f2, "Omit to glue the first circuit to itself");
  gl->add_option("--iso", iso, "{E, F, vertex_map}")->required();
  gl->add_flag("--reverse", reverse, "Reverse the orientation of the second piece");
  gl->callback([&] {
    run = [&] {
      auto spec = io::glue_spec_from_json(io::read_file(iso));
      spec.reverse_second = reverse;
      const auto a = io::circuit_from_json(io::read_file(f1));
      const auto g = f2.empty() ? glue_self(a, spec) : glue(a, io::circuit_from_json(io::read_file(f2)), spec);
      emit({{"circuit", io::circuit_to_json(g.circuit)},
            {"from_first", io::vertex_map_to_json(g.from_first).at("vertex_map")},
            {"from_second", io::vertex_map_to_json(g.from_second).at("vertex_map")},
            {"subdivisions", g.subdivisions},
            {"verdict", io::verdict_to_json(g.verdict)}});
      return exit_for(g.verdict.status());
    };
  });

  auto* fc = app.add_subcommand("fundamental-class", "Orient a circuit and print its fundamental class");
  fc->add_option("circuit", f1)->required();
  fc->callback([&] {
    run = [&] {
      const auto q = io::circuit_from_json(io::read_file(f1));
      const auto z = fundamental_class(q, orient_circuit(q));
      emit({{"fundamental_class", io::chain_to_json(z)}, {"boundary", io::chain_to_json(boundary(z))}});
      return kValid;
    };
  });

  auto* ev = app.add_subcommand("evaluate", "Homology coordinates of a_*[Q]");
  ev->add_option("circuit", f1)->required();
  ev->add_option("map", f2)->required();
  ev->add_option("target", f3)->required();
  ev->callback([&] {
    run = [&] {
      const auto q = io::circuit_from_json(io::read_file(f1));
      const auto t = load_target(f3);
      const SimplicialMap a(q.complex, t.space, io::vertex_map_from_json(io::read_file(f2)));
      const auto z = fundamental_class(q, orient_circuit(q));
      emit({{"homology_coordinates", io::coordinates_to_json(evaluate(q, a, z, homology(t.space, t.relative)))}});
      return kValid;
    };
  });

  auto* ls = app.add_subcommand("limit-set", "Limit set of a compactified map");
  ls->add_option("map", f1)->required();
  ls->callback([&] {
    run = [&] {
      const auto f = io::limit_map_from_json(io::read_file(f1));
      auto j = io::limit_set_to_json(limit_set(f));
      j["laws"] = io::laws_to_json(basic_laws(f));
      emit(j);
      return kValid;
    };
  });

  auto* co = app.add_subcommand("compose", "Composite h after f");
  co->add_option("inner", f1, "Map applied first")->required();
  co->add_option("outer", f2, "Map applied second")->required();
  co->add_flag("--check", check, "Fail unless every law holds");
  co->callback([&] {
    run = [&] {
      const auto c = compose(io::limit_map_from_json(io::read_file(f1)), io::limit_map_from_json(io::read_file(f2)));
      emit({{"map", io::limit_map_to_json(c.map)},
            {"limit_set", io::limit_set_to_json(limit_set(c.map))},
            {"laws", io::laws_to_json(c.laws)}});
      return laws_exit(c.laws, check);
    };
  });

  auto* pr = app.add_subcommand("product", "Product of two compactified maps");
  pr->add_option("first", f1)->required();
  pr->add_option("second", f2)->required();
  pr->add_flag("--check", check, "Fail unless every law holds");
  pr->callback([&] {
    run = [&] {
      const auto p = product(io::limit_map_from_json(io::read_file(f1)), io::limit_map_from_json(io::read_file(f2)));
      emit({{"map", io::limit_map_to_json(p.map)},
            {"limit_set", io::limit_set_to_json(limit_set(p.map))},
            {"laws", io::laws_to_json(p.laws)}});
      return laws_exit(p.laws, check);
    };
  });

  auto* ps = app.add_subcommand("psi", "Certify a circuit and map as a pseudocycle");
  ps->add_option("circuit", f1)->required();
  ps->add_option("map", f2)->required();
  ps->add_option("target", f3)->required();
  ps->add_option("--out", out, "Write the certificate here");
  ps->callback([&] {
    run = [&] {
      const auto q = io::circuit_from_json(io::read_file(f1));
      const auto t = load_target(f3);
      const auto c = psi(q, SimplicialMap(q.complex, t.space, io::vertex_map_from_json(io::read_file(f2))), t);
      emit(certificate_json(c), out);
      return exit_for(c.status());
    };
  });

  auto* cb = app.add_subcommand("check-bordism", "Certify a bordism and its map");
  cb->add_option("bordism", f1)->required();
  cb->add_option("map", f2)->required();
  cb->add_option("target", f3)->required();
  cb->add_option("--mode", mode, "absolute or relative")->check(CLI::IsMember({"absolute", "relative"}));
  cb->add_option("--out", out, "Write the certificate here");
  cb->callback([&] {
    run = [&] {
      const auto b = io::bordism_from_json(io::read_file(f1));
      const auto t = load_target(f3);
      const auto c = verify_bordism_certificate(
          b, SimplicialMap(b.complex, t.space, io::vertex_map_from_json(io::read_file(f2))), t, parse_mode(mode));
      emit(certificate_json(c), out);
      return exit_for(c.status());
    };
  });

  auto* dc = app.add_subcommand("dual-complex", "Dual complex of the r-simplices");
  dc->add_option("complex", f1)->required();
  dc->add_option("--r", r, "Simplex dimension")->required();
  dc->callback([&] {
    run = [&] {
      const auto d = dual_complex(load_complex(f1), r);
      json labels = json::object();
      for (Vertex v : d.complex.vertices()) {
        labels[std::to_string(v)] = io::to_json(d.subdivision.carrier.at(static_cast<std::size_t>(v)));
      }
      emit({{"maximal", io::to_json(d.complex.maximal_simplices())},
            {"barycenter_of", labels},
            {"dimension", d.complex.dimension()},
            {"dimension_bound", d.dimension_bound},
            {"within_bound", d.within_bound},
            {"join_total", d.join_total},
            {"join_unique", d.join_unique}});
      return d.within_bound && d.join_total && d.join_unique ? kValid : kInvalid;
    };
  });

  auto* vc = app.add_subcommand("verify-cert", "Re-verify a certificate from its own data");
  vc->add_option("certificate", f1)->required();
  vc->callback([&] {
    run = [&] {
      const auto c = verify_certificate(io::read_file(f1));
      emit({{"status", to_string(c.status)}, {"mismatches", c.mismatches}});
      return exit_for(c.status);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kValid : kInputError;
  }

  try {
    return run();
  } catch (const StageFailure& e) {
    json w = json::array();
    for (const auto& s : e.witnesses()) w.push_back(s);
    emit({{"status", "invalid"}, {"stage", e.stage()}, {"message", e.what()}, {"witnesses", w}});
    return kInvalid;
  } catch (const StructuralError& e) {
    emit({{"status", "invalid"}, {"stage", "structure"}, {"message", e.what()}});
    return kInvalid;
  } catch (const ContractError& e) {
    emit({{"status", "invalid"}, {"stage", "contract"}, {"message", e.what()}});
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
