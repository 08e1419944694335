#include "translat/render.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "translat/io.hpp"

namespace translat {

RenderFormat parse_render_format(const std::string& name) {
  if (name == "dot") return RenderFormat::Dot;
  if (name == "tikz") return RenderFormat::Tikz;
  if (name == "json") return RenderFormat::Json;
  throw DomainError("unknown format: " + name + " (want dot, tikz or json)");
}

RenderTarget parse_render_target(const std::string& name) {
  if (name == "subgroup-lattice") return RenderTarget::SubgroupLattice;
  if (name == "quotient-poset") return RenderTarget::QuotientPoset;
  if (name == "transfer-system") return RenderTarget::TransferSystem;
  if (name == "ts-hasse") return RenderTarget::TsHasse;
  throw DomainError("unknown render target: " + name);
}

std::string decoration_glyphs(const Decorations& d, bool ascii) {
  std::string out;
  if (d.saturated) out += ascii ? "S" : "\u25B3";
  if (d.cosaturated) out += ascii ? "C" : "\u2661";
  if (d.lsp) {
    if (d.connected) out += ascii ? "c" : "\u25C7";
    else out += ascii ? "L" : "\u25C6";
  }
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// Covering pairs of an arbitrary reflexive order/relation table.
std::vector<std::pair<int, int>> reduction_edges(const BitMatrix& rel) {
  int n = rel.dim();
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !rel.test(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n && covered; ++c)
        if (c != a && c != b && rel.test(a, c) && rel.test(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

// "C_12" -> "C_{12}", "C_2^2" -> "C_{2}^{2}", "{}_9C_2" -> "{}_{9}C_{2}"
std::string tex_label(const std::string& label) {
  std::string out;
  size_t i = 0;
  if (label.rfind("{}_", 0) == 0) {
    out += "{}_{";
    i = 3;
    while (i < label.size() && isdigit(uint8_t(label[i]))) out += label[i++];
    out += "}";
  }
  for (; i < label.size(); ++i) {
    char c = label[i];
    if (c == '_' || c == '^') {
      out += c;
      out += '{';
      while (i + 1 < label.size() && isdigit(uint8_t(label[i + 1]))) out += label[++i];
      out += '}';
    } else if (c == '#') {
      out += "\\#";
    } else {
      out += c;
    }
  }
  return "$" + out + "$";
}

struct TikzNode {
  std::string id, text;
  int layer = 0;
};

std::string tikz_document(const std::vector<TikzNode>& nodes,
                          const std::vector<std::pair<int, int>>& edges) {
  // layered layout: x spreads the nodes of a layer, y is the layer
  std::vector<int> layer_count, layer_pos(nodes.size(), 0);
  for (const auto& n : nodes) {
    if (int(layer_count.size()) <= n.layer) layer_count.resize(n.layer + 1, 0);
  }
  std::vector<int> filled(layer_count.size(), 0);
  for (const auto& n : nodes) ++layer_count[n.layer];
  for (size_t i = 0; i < nodes.size(); ++i)
    layer_pos[i] = filled[nodes[i].layer]++;

  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n"
     << "\\begin{tikzpicture}[every node/.style={inner sep=2pt}]\n";
  char buf[64];
  for (size_t i = 0; i < nodes.size(); ++i) {
    double x = (layer_pos[i] - (layer_count[nodes[i].layer] - 1) / 2.0) * 1.8;
    double y = nodes[i].layer * 1.2;
    std::snprintf(buf, sizeof(buf), "(%.2f,%.2f)", x, y);
    os << "  \\node (" << nodes[i].id << ") at " << buf << " {" << nodes[i].text
       << "};\n";
  }
  for (auto [a, b] : edges)
    os << "  \\draw (" << nodes[a].id << ") -- (" << nodes[b].id << ");\n";
  os << "\\end{tikzpicture}\n\\end{document}\n";
  return os.str();
}

std::vector<int> chain_heights(const BitMatrix& rel) {
  // longest path from a minimal element, following the reduction
  int n = rel.dim();
  auto edges = reduction_edges(rel);
  std::vector<int> height(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges)
      if (height[b] < height[a] + 1) {
        height[b] = height[a] + 1;
        changed = true;
      }
  }
  return height;
}

BitMatrix order_matrix(const Lattice& l) {
  BitMatrix rel(l.size);
  for (int a = 0; a < l.size; ++a)
    l.up[a].for_each([&](int b) { rel.set(a, b); });
  return rel;
}

std::string render_order_dot(const std::string& graph_name,
                             const std::vector<std::string>& labels,
                             const BitMatrix& rel) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  rankdir=BT;\n  node [shape=none];\n";
  for (size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=" << dot_quote(labels[i]) << "];\n";
  for (auto [a, b] : reduction_edges(rel)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_order_tikz(const std::vector<std::string>& labels,
                              const BitMatrix& rel) {
  auto height = chain_heights(rel);
  std::vector<TikzNode> nodes;
  for (size_t i = 0; i < labels.size(); ++i)
    nodes.push_back({"n" + std::to_string(i), tex_label(labels[i]), height[i]});
  return tikz_document(nodes, reduction_edges(rel));
}

}  // namespace

std::string render_lattice(const Lattice& l, const LatticeAction& a,
                           const RenderSpec& spec) {
  switch (spec.format) {
    case RenderFormat::Dot:
      return render_order_dot("subgroup_lattice", l.labels, order_matrix(l));
    case RenderFormat::Tikz:
      return render_order_tikz(l.labels, order_matrix(l));
    case RenderFormat::Json:
      return lattice_to_json(l, a).dump(1) + "\n";
  }
  return {};
}

std::string render_quotient(const QuotientPoset& q, const RenderSpec& spec) {
  switch (spec.format) {
    case RenderFormat::Dot:
      return render_order_dot("quotient_poset", q.labels, q.order);
    case RenderFormat::Tikz:
      return render_order_tikz(q.labels, q.order);
    case RenderFormat::Json: {
      nlohmann::json j;
      j["labels"] = q.labels;
      nlohmann::json classes = nlohmann::json::array();
      for (const auto& cls : q.classes) classes.push_back(cls);
      j["classes"] = std::move(classes);
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < q.num_classes(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < q.num_classes(); ++k) row.push_back(q.order.test(i, k) ? 1 : 0);
        rows.push_back(std::move(row));
      }
      j["order"] = std::move(rows);
      return j.dump(1) + "\n";
    }
  }
  return {};
}

std::string render_transfer(const Lattice& l, const TransferSystem& ts,
                            const RenderSpec& spec) {
  switch (spec.format) {
    case RenderFormat::Dot: {
      // nodes of the lattice, edges of the system (reduction only)
      std::ostringstream os;
      os << "digraph transfer_system {\n  rankdir=BT;\n  node [shape=none];\n";
      for (int i = 0; i < l.size; ++i)
        os << "  n" << i << " [label=" << dot_quote(l.labels[i]) << "];\n";
      for (auto [a, b] : reduction_edges(ts.rel)) os << "  n" << a << " -> n" << b << ";\n";
      os << "}\n";
      return os.str();
    }
    case RenderFormat::Tikz: {
      auto height = chain_heights(order_matrix(l));
      std::vector<TikzNode> nodes;
      for (int i = 0; i < l.size; ++i)
        nodes.push_back({"n" + std::to_string(i), tex_label(l.labels[i]), height[i]});
      return tikz_document(nodes, reduction_edges(ts.rel));
    }
    case RenderFormat::Json:
      return ts_to_json(l, ts).dump(1) + "\n";
  }
  return {};
}

std::string render_ts_hasse(const Lattice& l, const TsLattice& tsl,
                            const RenderSpec& spec) {
  switch (spec.format) {
    case RenderFormat::Dot: {
      std::ostringstream os;
      os << "digraph ts_hasse {\n  rankdir=BT;\n  node [shape=box];\n";
      for (int i = 0; i < tsl.count(); ++i) {
        std::string label = "T" + std::to_string(i);
        std::string attrs;
        if (!tsl.decorations.empty()) {
          const auto& d = tsl.decorations[i];
          std::string glyphs = decoration_glyphs(d, spec.ascii);
          if (!glyphs.empty()) label += " " + glyphs;
          attrs = std::string(", saturated=") + (d.saturated ? "true" : "false") +
                  ", cosaturated=" + (d.cosaturated ? "true" : "false") +
                  ", lsp=" + (d.lsp ? "true" : "false") +
                  ", connected=" + (d.connected ? "true" : "false");
        }
        os << "  t" << i << " [label=" << dot_quote(label) << attrs << "];\n";
      }
      for (auto [a, b] : tsl.hasse_edges) os << "  t" << a << " -> t" << b << ";\n";
      os << "}\n";
      return os.str();
    }
    case RenderFormat::Tikz: {
      std::vector<TikzNode> nodes;
      for (int i = 0; i < tsl.count(); ++i) {
        std::string text = "$T_{" + std::to_string(i) + "}$";
        if (!tsl.decorations.empty()) {
          std::string glyphs = decoration_glyphs(tsl.decorations[i], /*ascii=*/true);
          if (!glyphs.empty()) text += " " + glyphs;
        }
        nodes.push_back({"t" + std::to_string(i), text, tsl.systems[i].edge_count()});
      }
      return tikz_document(nodes, tsl.hasse_edges);
    }
    case RenderFormat::Json:
      return tslattice_to_json(l, tsl).dump(1) + "\n";
  }
  return {};
}

}  // namespace translat
