#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "syllnet/error.hpp"
#include "syllnet/report_io.hpp"

namespace syllnet {
namespace {

namespace pt = boost::property_tree;
using nlohmann::json;

constexpr std::string_view kCsvMetaPrefix = "# syllnet ";
constexpr std::string_view kCsvNodePrefix = "# node ";

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

json metadata_of(const SyllableNetwork& net) {
  return json{{"linking", std::string(to_string(net.variant().linking))},
              {"weighted", net.variant().weighted},
              {"directed", net.variant().directed},
              {"provenance", net.provenance()}};
}

struct Metadata {
  Linking linking = Linking::kCoOccurrence;
  std::optional<bool> weighted;
  std::optional<bool> directed;
  std::vector<std::string> provenance;
};

Metadata parse_metadata(std::string_view text, const std::string& origin, const std::string& ctx) {
  Metadata m;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(origin, ctx, std::string("bad metadata: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(origin, ctx, "metadata must be a JSON object");
  try {
    if (j.contains("linking")) {
      const auto l = parse_linking(j.at("linking").get<std::string>());
      if (!l) throw ParseError(origin, ctx, "unknown linking rule");
      m.linking = *l;
    }
    if (j.contains("weighted")) m.weighted = j.at("weighted").get<bool>();
    if (j.contains("directed")) m.directed = j.at("directed").get<bool>();
    if (j.contains("provenance")) m.provenance = j.at("provenance").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(origin, ctx, std::string("bad metadata field: ") + e.what());
  }
  return m;
}

std::uint64_t parse_weight(std::string_view text, const std::string& origin, const std::string& ctx) {
  std::string s(text);
  // GEXF tools commonly write "1.0".
  if (auto dot = s.find('.'); dot != std::string::npos &&
                              s.find_first_not_of('0', dot + 1) == std::string::npos) {
    s.resize(dot);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(origin, ctx, "weight '" + std::string(text) + "' is not a positive integer");
  }
  std::uint64_t w = 0;
  try {
    w = std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError(origin, ctx, "weight '" + std::string(text) + "' out of range");
  }
  if (w == 0) throw ParseError(origin, ctx, "weight must be positive");
  return w;
}

SyllableNetwork assemble(const Metadata& meta, bool directed, std::vector<std::string> nodes,
                         const std::vector<LabeledEdge>& edges, const std::string& origin) {
  bool weighted = false;
  if (meta.weighted) {
    weighted = *meta.weighted;
  } else {
    for (const auto& e : edges) weighted = weighted || e.weight != 1;
  }
  try {
    return SyllableNetwork::from_labeled(NetworkVariant{meta.linking, directed, weighted},
                                         std::move(nodes), edges, meta.provenance);
  } catch (const UsageError& e) {
    throw ParseError(origin, "graph", e.what());
  }
}

void check_csv_label(const std::string& label) {
  if (label.empty() || label.front() == '#' ||
      label.find_first_of(",\"\r\n") != std::string::npos) {
    throw UsageError("label '" + label + "' cannot be written to edge CSV");
  }
}

// --- GraphML ---------------------------------------------------------------

std::string write_graphml(const SyllableNetwork& net) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" "
         "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
         "xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
      << "  <key id=\"linking\" for=\"graph\" attr.name=\"linking\" attr.type=\"string\"/>\n"
      << "  <key id=\"weighted\" for=\"graph\" attr.name=\"weighted\" attr.type=\"boolean\"/>\n"
      << "  <key id=\"provenance\" for=\"graph\" attr.name=\"provenance\" attr.type=\"string\"/>\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"" << (net.variant().directed ? "directed" : "undirected")
      << "\">\n"
      << "    <data key=\"linking\">" << to_string(net.variant().linking) << "</data>\n"
      << "    <data key=\"weighted\">" << (net.variant().weighted ? "true" : "false") << "</data>\n"
      << "    <data key=\"provenance\">" << xml_escape(json(net.provenance()).dump()) << "</data>\n";
  for (const auto& label : net.nodes()) {
    const auto esc = xml_escape(label);
    out << "    <node id=\"" << esc << "\"><data key=\"label\">" << esc << "</data></node>\n";
  }
  for (const auto& e : net.edges()) {
    out << "    <edge source=\"" << xml_escape(net.label(e.source)) << "\" target=\""
        << xml_escape(net.label(e.target)) << "\"><data key=\"weight\">" << e.weight
        << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

pt::ptree read_xml(std::string_view content, const std::string& origin) {
  std::istringstream in{std::string(content)};
  pt::ptree tree;
  try {
    pt::read_xml(in, tree, pt::xml_parser::no_comments | pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(origin, "line " + std::to_string(e.line()), e.message());
  }
  if (tree.empty()) throw ParseError(origin, "document", "no root element");
  return tree;
}

std::string attr(const pt::ptree& node, const char* name, const std::string& origin,
                 const std::string& ctx) {
  const auto v = node.get_optional<std::string>(std::string("<xmlattr>.") + name);
  if (!v) throw ParseError(origin, ctx, std::string("missing attribute '") + name + "'");
  return *v;
}

SyllableNetwork read_graphml(std::string_view content, const std::string& origin) {
  const auto tree = read_xml(content, origin);
  const auto root = tree.get_child_optional("graphml");
  if (!root) throw ParseError(origin, "document", "root element is not <graphml>");

  // key id -> attribute name, per domain
  std::map<std::string, std::string> graph_keys, edge_keys;
  const pt::ptree* graph = nullptr;
  for (const auto& [name, child] : *root) {
    if (name == "key") {
      const auto id = attr(child, "id", origin, "<key>");
      const auto domain = child.get<std::string>("<xmlattr>.for", "all");
      // "attr.name" contains the default path separator.
      const auto attr_name = child.get<std::string>(pt::ptree::path_type("<xmlattr>/attr.name", '/'), id);
      if (domain == "graph" || domain == "all") graph_keys[id] = attr_name;
      if (domain == "edge" || domain == "all") edge_keys[id] = attr_name;
    } else if (name == "graph") {
      if (graph != nullptr) throw ParseError(origin, "<graph>", "more than one graph element");
      graph = &child;
    }
  }
  if (graph == nullptr) throw ParseError(origin, "<graphml>", "no <graph> element");

  const auto edgedefault = graph->get<std::string>("<xmlattr>.edgedefault", "undirected");
  if (edgedefault != "directed" && edgedefault != "undirected") {
    throw ParseError(origin, "<graph>", "edgedefault must be 'directed' or 'undirected'");
  }
  Metadata meta;
  std::vector<std::string> nodes;
  std::vector<LabeledEdge> edges;
  std::size_t edge_index = 0;
  for (const auto& [name, child] : *graph) {
    if (name == "data") {
      const auto key = attr(child, "key", origin, "<graph><data>");
      const auto it = graph_keys.find(key);
      const std::string field = it == graph_keys.end() ? key : it->second;
      const auto value = child.get_value<std::string>();
      if (field == "linking") {
        const auto l = parse_linking(value);
        if (!l) throw ParseError(origin, "<graph><data key=\"" + key + "\">", "unknown linking rule");
        meta.linking = *l;
      } else if (field == "weighted") {
        meta.weighted = value == "true" || value == "1";
      } else if (field == "provenance") {
        meta.provenance = parse_metadata("{\"provenance\":" + value + "}", origin,
                                         "<graph><data key=\"" + key + "\">")
                              .provenance;
      }
    } else if (name == "node") {
      nodes.push_back(attr(child, "id", origin, "<node>[" + std::to_string(nodes.size()) + "]"));
    } else if (name == "edge") {
      const std::string ctx = "<edge>[" + std::to_string(edge_index++) + "]";
      LabeledEdge e{attr(child, "source", origin, ctx), attr(child, "target", origin, ctx), 1};
      if (const auto d = child.get_optional<std::string>("<xmlattr>.directed")) {
        if ((*d == "true") != (edgedefault == "directed")) {
          throw ParseError(origin, ctx, "mixed directed and undirected edges are not supported");
        }
      }
      for (const auto& [dn, data] : child) {
        if (dn != "data") continue;
        const auto key = attr(data, "key", origin, ctx + "<data>");
        const auto it = edge_keys.find(key);
        if ((it == edge_keys.end() ? key : it->second) == "weight") {
          e.weight = parse_weight(data.get_value<std::string>(), origin, ctx);
        }
      }
      edges.push_back(std::move(e));
    }
  }
  return assemble(meta, edgedefault == "directed", std::move(nodes), edges, origin);
}

// --- GEXF ------------------------------------------------------------------

std::string write_gexf(const SyllableNetwork& net) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<gexf xmlns=\"http://gexf.net/1.2\" version=\"1.2\">\n"
      << "  <meta>\n"
      << "    <creator>syllnet</creator>\n"
      << "    <description>" << xml_escape(metadata_of(net).dump()) << "</description>\n"
      << "  </meta>\n"
      << "  <graph mode=\"static\" defaultedgetype=\""
      << (net.variant().directed ? "directed" : "undirected") << "\">\n"
      << "    <nodes>\n";
  for (const auto& label : net.nodes()) {
    const auto esc = xml_escape(label);
    out << "      <node id=\"" << esc << "\" label=\"" << esc << "\"/>\n";
  }
  out << "    </nodes>\n    <edges>\n";
  std::size_t id = 0;
  for (const auto& e : net.edges()) {
    out << "      <edge id=\"" << id++ << "\" source=\"" << xml_escape(net.label(e.source))
        << "\" target=\"" << xml_escape(net.label(e.target)) << "\" weight=\"" << e.weight
        << "\"/>\n";
  }
  out << "    </edges>\n  </graph>\n</gexf>\n";
  return out.str();
}

SyllableNetwork read_gexf(std::string_view content, const std::string& origin) {
  const auto tree = read_xml(content, origin);
  const auto root = tree.get_child_optional("gexf");
  if (!root) throw ParseError(origin, "document", "root element is not <gexf>");

  Metadata meta;
  if (const auto desc = root->get_optional<std::string>("meta.description")) {
    if (!desc->empty() && desc->front() == '{') meta = parse_metadata(*desc, origin, "<meta><description>");
  }
  const auto graph = root->get_child_optional("graph");
  if (!graph) throw ParseError(origin, "<gexf>", "no <graph> element");
  const auto edgetype = graph->get<std::string>("<xmlattr>.defaultedgetype", "undirected");
  if (edgetype != "directed" && edgetype != "undirected") {
    throw ParseError(origin, "<graph>", "defaultedgetype must be 'directed' or 'undirected'");
  }

  std::vector<std::string> nodes;
  if (const auto ns = graph->get_child_optional("nodes")) {
    for (const auto& [name, child] : *ns) {
      if (name == "node") nodes.push_back(attr(child, "id", origin, "<node>[" + std::to_string(nodes.size()) + "]"));
    }
  }
  std::vector<LabeledEdge> edges;
  if (const auto es = graph->get_child_optional("edges")) {
    for (const auto& [name, child] : *es) {
      if (name != "edge") continue;
      const std::string ctx = "<edge>[" + std::to_string(edges.size()) + "]";
      LabeledEdge e{attr(child, "source", origin, ctx), attr(child, "target", origin, ctx), 1};
      if (const auto t = child.get_optional<std::string>("<xmlattr>.type"); t && *t != edgetype) {
        throw ParseError(origin, ctx, "mixed edge types are not supported");
      }
      if (const auto w = child.get_optional<std::string>("<xmlattr>.weight")) {
        e.weight = parse_weight(*w, origin, ctx);
      }
      edges.push_back(std::move(e));
    }
  }
  return assemble(meta, edgetype == "directed", std::move(nodes), edges, origin);
}

// --- edge CSV --------------------------------------------------------------

std::string write_edge_csv(const SyllableNetwork& net) {
  for (const auto& label : net.nodes()) check_csv_label(label);
  std::string out;
  out += kCsvMetaPrefix;
  out += metadata_of(net).dump();
  out += '\n';
  std::vector<bool> touched(net.node_count(), false);
  for (const auto& e : net.edges()) touched[e.source] = touched[e.target] = true;
  for (std::size_t v = 0; v < touched.size(); ++v) {
    if (!touched[v]) {
      out += kCsvNodePrefix;
      out += net.nodes()[v];
      out += '\n';
    }
  }
  out += "source,target,weight\n";
  for (const auto& e : net.edges()) {
    out += net.label(e.source);
    out += ',';
    out += net.label(e.target);
    out += ',';
    out += std::to_string(e.weight);
    out += '\n';
  }
  return out;
}

std::vector<std::string> split_csv_row(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

SyllableNetwork read_edge_csv(std::string_view content, const std::string& origin) {
  Metadata meta;
  std::vector<std::string> nodes;
  std::vector<LabeledEdge> edges;
  bool header_seen = false;
  bool has_weight = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string ctx = "line " + std::to_string(line_no);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (header_seen) throw ParseError(origin, ctx, "comment lines must precede the header");
      std::string_view view(line);
      if (view.starts_with(kCsvMetaPrefix)) {
        meta = parse_metadata(view.substr(kCsvMetaPrefix.size()), origin, ctx);
      } else if (view.starts_with(kCsvNodePrefix)) {
        nodes.emplace_back(view.substr(kCsvNodePrefix.size()));
      }
      continue;
    }
    const auto cells = split_csv_row(line);
    if (!header_seen) {
      if (cells.size() < 2 || cells[0] != "source" || cells[1] != "target" ||
          (cells.size() == 3 && cells[2] != "weight") || cells.size() > 3) {
        throw ParseError(origin, ctx, "expected header 'source,target,weight'");
      }
      has_weight = cells.size() == 3;
      header_seen = true;
      continue;
    }
    if (cells.size() != (has_weight ? 3u : 2u)) {
      throw ParseError(origin, ctx, "expected " + std::to_string(has_weight ? 3 : 2) + " columns");
    }
    if (cells[0].empty() || cells[1].empty()) throw ParseError(origin, ctx, "empty node label");
    LabeledEdge e{cells[0], cells[1], 1};
    if (has_weight) e.weight = parse_weight(cells[2], origin, ctx);
    edges.push_back(std::move(e));
  }
  if (!header_seen) throw ParseError(origin, "line " + std::to_string(line_no + 1), "missing header line");
  return assemble(meta, meta.directed.value_or(false), std::move(nodes), edges, origin);
}

}  // namespace

std::string_view to_string(GraphFileFormat format) {
  switch (format) {
    case GraphFileFormat::kGraphMl: return "graphml";
    case GraphFileFormat::kGexf: return "gexf";
    case GraphFileFormat::kEdgeCsv: return "csv";
  }
  return "?";
}

std::optional<GraphFileFormat> parse_graph_format(std::string_view text) {
  if (text == "graphml") return GraphFileFormat::kGraphMl;
  if (text == "gexf") return GraphFileFormat::kGexf;
  if (text == "csv" || text == "edge_csv") return GraphFileFormat::kEdgeCsv;
  return std::nullopt;
}

GraphFileFormat format_from_extension(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (auto f = parse_graph_format(ext.empty() ? ext : ext.substr(1))) return *f;
  throw UsageError("cannot infer graph format from '" + path.string() +
                   "' (use .graphml, .gexf or .csv)");
}

std::string serialize_graph(const SyllableNetwork& net, GraphFileFormat format) {
  switch (format) {
    case GraphFileFormat::kGraphMl: return write_graphml(net);
    case GraphFileFormat::kGexf: return write_gexf(net);
    case GraphFileFormat::kEdgeCsv: return write_edge_csv(net);
  }
  throw UsageError("unknown graph format");
}

SyllableNetwork parse_graph(std::string_view content, GraphFileFormat format,
                            const std::string& origin) {
  switch (format) {
    case GraphFileFormat::kGraphMl: return read_graphml(content, origin);
    case GraphFileFormat::kGexf: return read_gexf(content, origin);
    case GraphFileFormat::kEdgeCsv: return read_edge_csv(content, origin);
  }
  throw UsageError("unknown graph format");
}

void export_graph(const SyllableNetwork& net, GraphFileFormat format,
                  const std::filesystem::path& path) {
  write_text_file(path, serialize_graph(net, format));
}

SyllableNetwork import_graph(const std::filesystem::path& path, GraphFileFormat format) {
  return parse_graph(read_text_file(path), format, path.string());
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path().string(), "cannot create directory: " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError(path.string(), "write failed");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

}  // namespace syllnet
