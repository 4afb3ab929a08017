#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gsv/axioms.hpp"
#include "gsv/cli.hpp"
#include "gsv/domain.hpp"
#include "gsv/errors.hpp"
#include "gsv/report.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

namespace {

gsv::RunConfig make_config(int agents, int alts, const std::string& mode, std::uint64_t seed,
                           std::uint64_t samples, int workers, const std::string& space) {
  gsv::RunConfig config;
  config.dims = {agents, alts};
  if (mode != "exhaustive" && mode != "sampled") throw std::invalid_argument("unknown mode " + mode);
  config.mode = mode == "sampled" ? gsv::Mode::Sampled : gsv::Mode::Exhaustive;
  config.seed = seed;
  config.samples = samples;
  config.workers = workers;
  config.sample_space = space == "unanimous"   ? gsv::SampleSpace::Unanimous
                        : space == "efficient" ? gsv::SampleSpace::Efficient
                                               : gsv::SampleSpace::All;
  return config;
}

gsv::PreferenceDomain make_domain(const std::vector<std::string>& members) {
  std::vector<gsv::Preference> prefs;
  for (const auto& m : members) prefs.push_back(gsv::Preference::parse(m));
  return gsv::PreferenceDomain(std::move(prefs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Verification engine for finite social choice rules";

  py::register_exception<gsv::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<gsv::CapExceeded>(m, "CapExceeded", PyExc_OverflowError);
  py::register_exception<gsv::NotTopsOnly>(m, "NotTopsOnly", PyExc_ValueError);

  py::class_<gsv::Rule>(m, "Rule")
      .def_static(
          "parse",
          [](const std::string& text, std::optional<int> agents, std::optional<int> alts) {
            std::optional<gsv::Dimensions> context;
            if (agents && alts) context = gsv::Dimensions{*agents, *alts};
            return gsv::Rule::parse(text, context);
          },
          py::arg("text"), py::arg("agents") = py::none(), py::arg("alts") = py::none())
      .def_property_readonly("agents", &gsv::Rule::agents)
      .def_property_readonly("alternatives", &gsv::Rule::alternatives)
      .def("evaluate",
           [](const gsv::Rule& f, const std::string& profile) {
             return f.evaluate(gsv::Profile::parse(profile)).name();
           })
      .def("__str__", &gsv::Rule::to_string)
      .def("__repr__", [](const gsv::Rule& f) { return "Rule('" + f.to_string() + "')"; })
      .def("__eq__", [](const gsv::Rule& a, const gsv::Rule& b) { return a == b; });

  m.def("is_unanimous", [](const gsv::Rule& f) { return gsv::is_unanimous(f); });
  m.def("is_tops_only", [](const gsv::Rule& f) { return gsv::is_tops_only(f); });
  m.def("is_efficient", [](const gsv::Rule& f) { return gsv::is_efficient(f); });
  m.def("is_strategy_proof", [](const gsv::Rule& f) { return gsv::is_strategy_proof(f); });
  m.def("find_dictator", [](const gsv::Rule& f) { return gsv::find_dictator(f); });
  m.def("_find_manipulation_json", [](const gsv::Rule& f) {
    const auto w = gsv::find_manipulation(f);
    return w ? gsv::to_json(*w).dump() : std::string("null");
  });
  m.def("is_dictatorial_profile", [](const gsv::Rule& f, const std::string& profile) {
    return gsv::is_dictatorial_profile(f, gsv::Profile::parse(profile));
  });
  m.def("is_manipulable_profile", [](const gsv::Rule& f, const std::string& profile) {
    return gsv::is_manipulable_profile(f, gsv::Profile::parse(profile));
  });

  m.def(
      "_classify_json",
      [](const gsv::Rule& f, bool sets, const std::string& path, int workers) {
        gsv::ClassifyOptions options;
        options.path = path == "definitional" ? gsv::ClassifyPath::Definitional
                                              : gsv::ClassifyPath::TopsCells;
        options.materialize_sets = sets;
        options.workers = workers;
        py::gil_scoped_release release;
        return gsv::to_json(gsv::classify_all(f, options), sets).dump();
      },
      py::arg("rule"), py::arg("sets") = false, py::arg("path") = "tops", py::arg("workers") = 1);

  m.def(
      "_census_json",
      [](int agents, int alts, const std::string& mode, std::uint64_t seed, std::uint64_t samples,
         int workers, const std::string& space) {
        const auto config = make_config(agents, alts, mode, seed, samples, workers, space);
        py::gil_scoped_release release;
        return gsv::to_json(gsv::census(config), false).dump();
      },
      py::arg("agents"), py::arg("alts"), py::arg("mode") = "exhaustive", py::arg("seed") = 0,
      py::arg("samples") = 10000, py::arg("workers") = 1, py::arg("space") = "all");

  m.def(
      "_verify_lemma_json",
      [](const std::string& id, int agents, int alts, const std::string& mode, std::uint64_t seed,
         std::uint64_t samples, int workers) {
        const auto lemma = gsv::parse_lemma_id(id);
        if (!lemma) throw std::invalid_argument("unknown lemma id " + id);
        const auto config = make_config(agents, alts, mode, seed, samples, workers, "all");
        py::gil_scoped_release release;
        return gsv::to_json(gsv::verify_lemma(*lemma, config)).dump();
      },
      py::arg("id"), py::arg("agents"), py::arg("alts"), py::arg("mode") = "exhaustive",
      py::arg("seed") = 0, py::arg("samples") = 10000, py::arg("workers") = 1);

  m.def("_counterexample_json", [](int agents) {
    return gsv::to_json(gsv::gs_counterexample_two_alternatives(agents)).dump();
  });

  m.def("coalesce", [](const gsv::Rule& f) { return gsv::coalesce(f); });
  m.def("restrict_to_two", [](const gsv::Rule& f, const std::vector<std::string>& fixed) {
    std::vector<gsv::Preference> prefs;
    for (const auto& p : fixed) prefs.push_back(gsv::Preference::parse(p));
    return gsv::restrict_to_two(f, prefs);
  });

  m.def("enumerate_preferences", [](int alts) {
    std::vector<std::string> out;
    for (const auto& p : gsv::enumerate_preferences(alts)) out.push_back(p.to_string());
    return out;
  });
  m.def("encode_preference",
        [](const std::string& text) { return gsv::Preference::parse(text).code(); });
  m.def("decode_preference", [](std::uint64_t code, int alts) {
    return gsv::decode_preference(code, alts).to_string();
  });
  m.def("is_minimally_rich", [](const std::vector<std::string>& members) {
    return gsv::is_minimally_rich(make_domain(members));
  });
  m.def("satisfies_property_t_star", [](const std::vector<std::string>& members) {
    return gsv::satisfies_property_t_star(make_domain(members));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = gsv::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
