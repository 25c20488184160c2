#include "kintree/result_document.hpp"

#include <json.hpp>

namespace kintree {

namespace {

using Json = nlohmann::ordered_json;

Json ids(std::span<const Vertex> vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

Json header(std::string_view status, int k, std::span<const Vertex> terminals) {
  Json doc;
  doc["status"] = status;
  doc["k"] = k;
  doc["terminals"] = ids(terminals);
  return doc;
}

std::string text(const Json& doc) { return doc.dump(2) + "\n"; }

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::ParseError, "result document: " + what);
}

std::vector<Vertex> read_ids(const Json& node, const char* what) {
  if (!node.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const Json& v : node) {
    if (!v.is_number_integer()) malformed(std::string(what) + " must hold integers");
    if (v.get<long long>() < 1) malformed(std::string(what) + " must hold 1-based ids");
    out.push_back(v.get<Vertex>() - 1);
  }
  return out;
}

const Json& field(const Json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) malformed(std::string("missing field '") + key + "'");
  return node.at(key);
}

}  // namespace

std::string render_result(int k, std::span<const Vertex> terminals, const SolveResult& result) {
  if (const auto* t = std::get_if<InducedTree>(&result)) {
    Json doc = header("tree", k, terminals);
    doc["tree"]["vertices"] = ids(t->vertices.items());
    return text(doc);
  }
  if (const auto* d = std::get_if<Disconnected>(&result)) {
    Json doc = header("disconnected", k, terminals);
    Json comps = Json::array();
    for (const auto& c : d->components) comps.push_back(ids(c));
    doc["components"] = comps;
    return text(doc);
  }
  Json doc = header("no_tree", k, terminals);
  Json cert;
  if (const auto* ks = std::get_if<KStructure>(&result)) {
    cert["type"] = "k_structure";
    Json paths = Json::array();
    for (const Path& p : ks->paths) paths.push_back(ids(p));
    cert["paths"] = paths;
  } else {
    const auto& k4 = std::get<K4Structure>(result);
    cert["type"] = "k4_structure";
    for (std::size_t c = 0; c < 4; ++c) {
      cert["branch"][std::string(K4Structure::kCornerNames[c])] = k4.branch[c] + 1;
    }
    for (std::size_t p = 0; p < 6; ++p) {
      cert["paths"][std::string(K4Structure::kPairNames[p])] = ids(k4.paths[p]);
    }
  }
  doc["certificate"] = cert;
  return text(doc);
}

std::string render_exhaustive_no_tree(int k, std::span<const Vertex> terminals) {
  Json doc = header("no_tree", k, terminals);
  doc["certificate"]["type"] = "exhaustive_search";
  return text(doc);
}

std::string render_error(ErrorCode code, std::string_view message) {
  Json doc;
  doc["status"] = "error";
  doc["error"]["code"] = to_string(code);
  // Error::what() already starts with "<code>: ".
  const std::string prefix = std::string(to_string(code)) + ": ";
  if (message.substr(0, prefix.size()) == prefix) message.remove_prefix(prefix.size());
  doc["error"]["message"] = message;
  return text(doc);
}

ParsedResult parse_result(std::string_view raw) {
  Json doc;
  try {
    doc = Json::parse(raw);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  ParsedResult out;
  const Json& status = field(doc, "status");
  if (!status.is_string()) malformed("status must be a string");
  out.status = status.get<std::string>();
  if (out.status == "error") {
    const Json& code = field(field(doc, "error"), "code");
    if (code.is_string()) out.error_code = code.get<std::string>();
    return out;
  }
  const Json& k = field(doc, "k");
  if (!k.is_number_integer()) malformed("k must be an integer");
  out.k = k.get<int>();
  out.terminals = read_ids(field(doc, "terminals"), "terminals");

  if (out.status == "tree") {
    InducedTree t;
    t.vertices = VertexSet(read_ids(field(field(doc, "tree"), "vertices"), "tree.vertices"));
    t.terminals = out.terminals;
    out.result = std::move(t);
  } else if (out.status == "disconnected") {
    const Json& comps = field(doc, "components");
    if (!comps.is_array()) malformed("components must be an array");
    Disconnected d;
    for (const Json& c : comps) d.components.push_back(read_ids(c, "components"));
    out.result = std::move(d);
  } else if (out.status == "no_tree") {
    const Json& cert = field(doc, "certificate");
    const Json& type = field(cert, "type");
    if (!type.is_string()) malformed("certificate.type must be a string");
    const std::string kind = type.get<std::string>();
    if (kind == "exhaustive_search") {
      out.exhaustive = true;
    } else if (kind == "k_structure") {
      const Json& paths = field(cert, "paths");
      if (!paths.is_array()) malformed("certificate.paths must be an array");
      KStructure ks;
      for (const Json& p : paths) ks.paths.push_back(read_ids(p, "certificate.paths"));
      out.result = std::move(ks);
    } else if (kind == "k4_structure") {
      K4Structure k4;
      const Json& branch = field(cert, "branch");
      for (std::size_t c = 0; c < 4; ++c) {
        const Json& v = field(branch, std::string(K4Structure::kCornerNames[c]).c_str());
        if (!v.is_number_integer() || v.get<long long>() < 1) malformed("branch vertices must be 1-based ids");
        k4.branch[c] = v.get<Vertex>() - 1;
      }
      const Json& paths = field(cert, "paths");
      for (std::size_t p = 0; p < 6; ++p) {
        k4.paths[p] = read_ids(field(paths, std::string(K4Structure::kPairNames[p]).c_str()),
                               "certificate.paths");
      }
      out.result = std::move(k4);
    } else {
      malformed("unknown certificate type '" + kind + "'");
    }
  } else {
    malformed("unknown status '" + out.status + "'");
  }
  return out;
}

}  // namespace kintree
