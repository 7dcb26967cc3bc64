#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "eoc/errors.hpp"
#include "eoc/link_stream.hpp"
#include "eoc/oracle.hpp"
#include "eoc/pipeline.hpp"
#include "eoc/update.hpp"

namespace py = pybind11;
using namespace eoc;

namespace {

using PyClique = std::tuple<VertexSet, Timestamp, Timestamp>;
using PyLink = std::tuple<Vertex, Vertex, Timestamp>;

PyClique to_py(const CliqueKey& k) { return {k.vertices, k.span.start, k.span.end}; }

template <class Range>
std::vector<PyClique> to_py_list(const Range& keys) {
  std::vector<PyClique> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(to_py(k));
  return out;
}

LinkList to_links(const std::vector<PyLink>& links) {
  LinkList out;
  out.reserve(links.size());
  for (const auto& [u, v, t] : links) out.push_back({u, v, t});
  return out;
}

std::vector<PyLink> from_links(const LinkList& links) {
  std::vector<PyLink> out;
  out.reserve(links.size());
  for (const auto& l : links) out.emplace_back(l.u, l.v, l.t);
  return out;
}

std::optional<Interval> to_interval(const std::optional<std::pair<Timestamp, Timestamp>>& w) {
  if (!w) return std::nullopt;
  return Interval{w->first, w->second};
}

FormatSpec make_format(const std::string& order, const std::string& delimiter, bool rebase) {
  FormatSpec spec;
  if (order == "tuv") spec.order = ColumnOrder::tuv;
  else if (order == "uvt") spec.order = ColumnOrder::uvt;
  else throw ConfigError("unknown column order '" + order + "'");
  if (delimiter == "whitespace") spec.delimiter = Delimiter::whitespace;
  else if (delimiter == "comma") spec.delimiter = Delimiter::comma;
  else throw ConfigError("unknown delimiter '" + delimiter + "'");
  spec.rebase = rebase;
  return spec;
}

PartitionPlan make_plan(const std::string& scheme, std::size_t parts,
                        const std::vector<Timestamp>& boundaries) {
  PartitionPlan plan;
  if (scheme == "ut") plan.scheme = Scheme::uniform_time;
  else if (scheme == "ulc") plan.scheme = Scheme::uniform_link_count;
  else if (scheme == "explicit") plan.scheme = Scheme::explicit_boundaries;
  else throw ConfigError("unknown partition scheme '" + scheme + "'");
  plan.parts = parts;
  plan.boundaries = boundaries;
  return plan;
}

Params make_params(Timestamp delta, std::uint32_t gamma) {
  Params p{delta, gamma};
  validate(p);
  return p;
}

py::dict cycle_dict(const CycleReport& c) {
  py::dict d;
  d["cycle"] = c.cycle;
  d["boundary"] = c.boundary;
  d["new_links"] = c.new_links;
  d["seeds"] = c.seeds;
  d["carried"] = c.carried;
  d["found_before_removal"] = c.found_before_removal;
  d["checked"] = c.checked;
  d["removed"] = c.removed;
  d["found"] = c.found;
  d["maximal"] = c.maximal;
  d["frontier"] = c.frontier;
  d["live_peak"] = c.live_peak;
  d["seconds"] = c.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_eoc, m) {
  m.doc() = "Batch-incremental enumeration of maximal (delta, gamma)-cliques";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<EmptyStreamError>(m, "EmptyStreamError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<StateError>(m, "StateError", base.ptr());
  py::register_exception<OracleBoundsError>(m, "OracleBoundsError", base.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);

  py::class_<LinkStream>(m, "LinkStream")
      .def_static(
          "from_links",
          [](const std::vector<PyLink>& links,
             std::optional<std::pair<Timestamp, Timestamp>> observation) {
            return LinkStream::from_links(to_links(links), to_interval(observation));
          },
          py::arg("links"), py::arg("observation") = py::none())
      .def_static(
          "parse",
          [](const std::string& text, const std::string& order, const std::string& delimiter,
             bool rebase) {
            std::istringstream in(text);
            return parse_links(in, make_format(order, delimiter, rebase));
          },
          py::arg("text"), py::arg("order") = "uvt", py::arg("delimiter") = "whitespace",
          py::arg("rebase") = false)
      .def_static(
          "parse_file",
          [](const std::string& path, const std::string& order, const std::string& delimiter,
             bool rebase) { return parse_links_file(path, make_format(order, delimiter, rebase)); },
          py::arg("path"), py::arg("order") = "uvt", py::arg("delimiter") = "whitespace",
          py::arg("rebase") = false)
      .def_property_readonly("links", [](const LinkStream& s) { return from_links(s.links()); })
      .def_property_readonly("vertices", &LinkStream::vertices)
      .def_property_readonly("observation",
                             [](const LinkStream& s) {
                               return std::make_pair(s.observation().start, s.observation().end);
                             })
      .def("__len__", &LinkStream::link_count)
      .def("static_edge_count", &LinkStream::static_edge_count)
      .def("time_bounds",
           [](const LinkStream& s) {
             auto b = s.time_bounds();
             return std::make_tuple(b.t_min, b.t_max, b.lifetime);
           })
      .def("occurrences",
           [](const LinkStream& s, Vertex u, Vertex v) {
             auto o = s.occurrences(u, v);
             return std::vector<Timestamp>(o.begin(), o.end());
           })
      .def("count_in",
           [](const LinkStream& s, Vertex u, Vertex v, Timestamp a, Timestamp b) {
             return s.count_in(u, v, {a, b});
           })
      .def("neighbors_min_count",
           [](const LinkStream& s, VertexSet seed, Timestamp a, Timestamp b, std::uint32_t gamma) {
             return s.neighbors_min_count(seed, {a, b}, gamma);
           })
      .def("links_in",
           [](const LinkStream& s, Timestamp a, Timestamp b) {
             return from_links(s.links_in({a, b}));
           })
      .def("dump", py::overload_cast<>(&LinkStream::dump, py::const_))
      .def("__eq__", [](const LinkStream& a, const LinkStream& b) { return a == b; });

  m.def(
      "is_clique",
      [](VertexSet vertices, Timestamp a, Timestamp b, const LinkStream& s, Timestamp delta,
         std::uint32_t gamma) {
        auto k = make_key(std::move(vertices), {a, b});
        return is_delta_gamma_clique(k.vertices, k.span, s, make_params(delta, gamma));
      },
      py::arg("vertices"), py::arg("start"), py::arg("end"), py::arg("stream"), py::arg("delta"),
      py::arg("gamma"));

  m.def(
      "is_maximal",
      [](VertexSet vertices, Timestamp a, Timestamp b, const LinkStream& s, Timestamp delta,
         std::uint32_t gamma) {
        return check_maximality(make_key(std::move(vertices), {a, b}), s,
                                make_params(delta, gamma));
      },
      py::arg("vertices"), py::arg("start"), py::arg("end"), py::arg("stream"), py::arg("delta"),
      py::arg("gamma"));

  m.def(
      "brute_force",
      [](const LinkStream& s, Timestamp delta, std::uint32_t gamma, std::size_t max_vertices,
         Timestamp max_span) {
        OracleConfig cfg{max_vertices, max_span};
        return to_py_list(brute_force_enumerate(s, make_params(delta, gamma), cfg));
      },
      py::arg("stream"), py::arg("delta"), py::arg("gamma"), py::arg("max_vertices") = 8,
      py::arg("max_span") = 40);

  m.def(
      "partition",
      [](const LinkStream& s, const std::string& scheme, std::size_t parts,
         const std::vector<Timestamp>& boundaries) {
        std::vector<std::pair<Timestamp, std::vector<PyLink>>> out;
        for (const auto& b : partition_links(s, make_plan(scheme, parts, boundaries)))
          out.emplace_back(b.boundary, from_links(b.links));
        return out;
      },
      py::arg("stream"), py::arg("scheme") = "ut", py::arg("parts") = 1,
      py::arg("boundaries") = std::vector<Timestamp>{});

  m.def(
      "run",
      [](const LinkStream& s, Timestamp delta, std::uint32_t gamma, const std::string& scheme,
         std::size_t parts, const std::vector<Timestamp>& boundaries, const std::string& mode,
         std::optional<std::string> state_dir, std::optional<std::size_t> stop_after,
         bool certify, bool verify) {
        PipelineOptions opt;
        opt.params = make_params(delta, gamma);
        opt.plan = make_plan(scheme, parts, boundaries);
        if (mode == "offline") opt.mode = Mode::offline;
        else if (mode == "online") opt.mode = Mode::online;
        else throw ConfigError("unknown mode '" + mode + "'");
        opt.state_dir = std::move(state_dir);
        opt.stop_after = stop_after;
        opt.certify = certify;
        opt.verify = verify;
        RunReport r;
        {
          py::gil_scoped_release release;
          r = run_pipeline(s, opt);
        }
        py::dict d;
        d["result"] = to_py_list(r.result);
        py::list cycles;
        for (const auto& c : r.cycles) cycles.append(cycle_dict(c));
        d["cycles"] = cycles;
        d["finished"] = r.finished;
        d["resumed_cycles"] = r.resumed_cycles;
        d["t_end"] = r.t_end;
        d["temporally_maximum"] = to_py_list(r.temporally_maximum);
        d["cardinally_maximum"] = to_py_list(r.cardinally_maximum);
        d["uncertified"] = to_py_list(r.uncertified);
        d["verified"] = r.verified;
        d["verify_note"] = r.verify_note;
        d["seconds"] = r.seconds;
        d["live_peak"] = r.live_peak;
        return d;
      },
      py::arg("stream"), py::arg("delta"), py::arg("gamma"), py::arg("scheme") = "ut",
      py::arg("parts") = 1, py::arg("boundaries") = std::vector<Timestamp>{},
      py::arg("mode") = "offline", py::arg("state_dir") = py::none(),
      py::arg("stop_after") = py::none(), py::arg("certify") = true, py::arg("verify") = false);

  py::class_<BatchState>(m, "BatchState")
      .def_static(
          "initial",
          [](Timestamp delta, std::uint32_t gamma, Timestamp t_start) {
            return BatchState::initial(make_params(delta, gamma), t_start);
          },
          py::arg("delta"), py::arg("gamma"), py::arg("t_start"))
      .def_static(
          "loads",
          [](const std::string& text, std::optional<std::pair<Timestamp, std::uint32_t>> expect) {
            std::optional<Params> p;
            if (expect) p = Params{expect->first, expect->second};
            return load_state(text, p);
          },
          py::arg("text"), py::arg("expect") = py::none())
      .def("dumps", [](const BatchState& s) { return save_state(s); })
      .def_property_readonly("delta", [](const BatchState& s) { return s.params.delta; })
      .def_property_readonly("gamma", [](const BatchState& s) { return s.params.gamma; })
      .def_readonly("t_start", &BatchState::t_start)
      .def_readonly("boundary", &BatchState::boundary)
      .def_property_readonly("maximal", [](const BatchState& s) { return to_py_list(s.maximal); })
      .def_property_readonly("frontier",
                             [](const BatchState& s) {
                               std::vector<PyClique> out;
                               for (const auto& [k, _] : s.frontier) out.push_back(to_py(k));
                               return out;
                             })
      .def_property_readonly("link_tail",
                             [](const BatchState& s) { return from_links(s.link_tail); })
      .def(
          "update",
          [](const BatchState& s, const std::vector<PyLink>& links, Timestamp next_boundary) {
            auto [next, report] = update_batch(s, to_links(links), next_boundary);
            return std::make_pair(std::move(next), cycle_dict(report));
          },
          py::arg("links"), py::arg("boundary"))
      .def(
          "finalize",
          [](const BatchState& s, Timestamp t_end) { return to_py_list(finalize(s, t_end)); },
          py::arg("t_end"))
      .def("__eq__", [](const BatchState& a, const BatchState& b) { return a == b; });
}
