#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "eoc/errors.hpp"
#include "eoc/update.hpp"
#include "json.hpp"

namespace eoc {

namespace {

using json = nlohmann::json;

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json body(const BatchState& s) {
  json doc;
  doc["format"] = "eoc-state";
  doc["version"] = state_format_version;
  doc["delta"] = s.params.delta;
  doc["gamma"] = s.params.gamma;
  doc["t_start"] = s.t_start;
  doc["t_boundary"] = s.boundary ? json(*s.boundary) : json(nullptr);
  json maximal = json::array();
  for (const auto& k : s.maximal) maximal.push_back(to_string(k));
  doc["maximal"] = std::move(maximal);
  json frontier = json::array();
  for (const auto& [k, cand] : s.frontier) {
    json entry;
    entry["clique"] = to_string(k);
    entry["candidates"] = cand ? json(*cand) : json(nullptr);
    frontier.push_back(std::move(entry));
  }
  doc["frontier"] = std::move(frontier);
  json tail = json::array();
  for (const auto& l : s.link_tail) tail.push_back({l.u, l.v, l.t});
  doc["link_tail"] = std::move(tail);
  return doc;
}

template <class T>
T field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw StateError(std::string("state lacks field '") + name + "'");
  try {
    return doc.at(name).get<T>();
  } catch (const json::exception& e) {
    throw StateError(std::string("state field '") + name + "' has the wrong type");
  }
}

}  // namespace

void save_state(const BatchState& state, std::ostream& out) {
  json doc = body(state);
  doc["checksum"] = fnv1a(doc.dump());
  out << doc.dump(1) << '\n';
}

std::string save_state(const BatchState& state) {
  std::ostringstream os;
  save_state(state, os);
  return os.str();
}

BatchState load_state(std::istream& in, std::optional<Params> expected) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw StateError(std::string("unreadable state: ") + e.what());
  }
  if (!doc.is_object()) throw StateError("state is not an object");
  if (field<std::string>(doc, "format") != "eoc-state") throw StateError("not a state file");
  int version = field<int>(doc, "version");
  if (version != state_format_version) {
    throw StateError("unsupported state version " + std::to_string(version));
  }
  BatchState s;
  s.params.delta = field<Timestamp>(doc, "delta");
  s.params.gamma = field<std::uint32_t>(doc, "gamma");
  try {
    validate(s.params);
  } catch (const ConfigError& e) {
    throw StateError(std::string("state holds invalid parameters: ") + e.what());
  }
  if (expected && *expected != s.params) {
    throw ConfigError("state was built with delta=" + std::to_string(s.params.delta) +
                      " gamma=" + std::to_string(s.params.gamma) + ", run asks for delta=" +
                      std::to_string(expected->delta) +
                      " gamma=" + std::to_string(expected->gamma));
  }
  std::string stored = field<std::string>(doc, "checksum");
  doc.erase("checksum");
  if (fnv1a(doc.dump()) != stored) throw StateError("state checksum mismatch");

  s.t_start = field<Timestamp>(doc, "t_start");
  if (!doc.contains("t_boundary")) throw StateError("state lacks field 't_boundary'");
  if (!doc["t_boundary"].is_null()) s.boundary = field<Timestamp>(doc, "t_boundary");
  try {
    for (const auto& text : field<std::vector<std::string>>(doc, "maximal")) {
      s.maximal.insert(parse_clique(text));
    }
    for (const auto& entry : field<json>(doc, "frontier")) {
      CandidatePtr cand;
      if (!entry.at("candidates").is_null()) {
        cand = std::make_shared<const VertexSet>(entry.at("candidates").get<VertexSet>());
      }
      s.frontier.emplace(parse_clique(entry.at("clique").get<std::string>()), std::move(cand));
    }
    for (const auto& l : field<json>(doc, "link_tail")) {
      s.link_tail.push_back({l.at(0).get<Vertex>(), l.at(1).get<Vertex>(), l.at(2).get<Timestamp>()});
    }
  } catch (const json::exception& e) {
    throw StateError(std::string("malformed state entry: ") + e.what());
  } catch (const StateError&) {
    throw;
  } catch (const Error& e) {
    throw StateError(e.what());
  }
  return s;
}

BatchState load_state(const std::string& text, std::optional<Params> expected) {
  std::istringstream in(text);
  return load_state(in, expected);
}

void save_state_file(const BatchState& state, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    save_state(state, out);
    if (!out) throw Error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot replace " + path);
}

BatchState load_state_file(const std::string& path, std::optional<Params> expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateError("cannot open state " + path);
  return load_state(in, expected);
}

}  // namespace eoc
