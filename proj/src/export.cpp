#include "letf/export.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace letf {

namespace {

using nlohmann::json;

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Code points, not bytes; the connective glyphs are all single-column.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xc0) != 0x80) ++w;
  return w;
}

}  // namespace

std::string signed_text(const SignedFormula& sf, RenderStyle style) {
  std::string out = sf.sign == Sign::One ? "1(" : "0(";
  out += render(sf.formula, style);
  out += ')';
  return out;
}

std::string semantic_atom_text(const SemanticAtom& a, RenderStyle style) {
  return render(a.as_formula(), style);
}

// ── Proof trees ─────────────────────────────────────────────────────────────

std::string proof_tree_text(const Tableau& t, RenderStyle style) {
  std::ostringstream out;

  std::unordered_map<int, const Branch*> branch_at_leaf;
  for (const Branch& b : t.branches())
    if (!b.nodes.empty()) branch_at_leaf.emplace(b.nodes.back(), &b);

  std::size_t head_width = 0;
  std::vector<std::string> heads(t.nodes().size());
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    heads[i] = std::to_string(i + 1) + ". " + signed_text(t.nodes()[i].sf, style);
    head_width = std::max(head_width, display_width(heads[i]));
  }

  auto emit = [&](auto&& self, int id, int indent) -> void {
    const TableauNode& node = t.nodes()[static_cast<std::size_t>(id)];
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    out << pad << heads[static_cast<std::size_t>(id)];
    if (node.rule) {
      out << std::string(
                 head_width - display_width(heads[static_cast<std::size_t>(id)]) + 2, ' ')
          << "Rule " << rule_number(*node.rule) << " in " << node.source + 1;
    }
    out << '\n';

    if (node.children.empty()) {
      auto it = branch_at_leaf.find(id);
      if (it != branch_at_leaf.end()) {
        const Branch* b = it->second;
        out << pad << "   ";
        if (b->is_closed() && b->closure)
          out << (style == RenderStyle::Unicode ? "⊗" : "x") << " ("
              << b->closure->first + 1 << ", " << b->closure->second + 1 << ")\n";
        else
          out << "open\n";
      }
      return;
    }
    if (node.children.size() == 1) {
      self(self, node.children[0], indent);
    } else {
      for (int child : node.children) self(self, child, indent + 1);
    }
  };

  if (!t.nodes().empty()) emit(emit, 0, 0);
  return out.str();
}

std::string proof_tree_dot(const Tableau& t, RenderStyle style) {
  std::ostringstream out;
  out << "digraph tableau {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    out << "  n" << i << " [label=\""
        << dot_escape(std::to_string(i + 1) + ". " + signed_text(t.nodes()[i].sf, style))
        << "\"];\n";
  }
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    const TableauNode& node = t.nodes()[i];
    if (node.parent < 0) continue;
    out << "  n" << node.parent << " -> n" << i;
    if (node.rule) out << " [label=\"R" << rule_number(*node.rule) << "\"]";
    out << ";\n";
  }
  std::size_t mark = 0;
  for (const Branch& b : t.branches()) {
    if (b.nodes.empty()) continue;
    out << "  m" << mark << " [shape=plaintext, label=\"";
    if (b.is_closed() && b.closure)
      out << "x (" << b.closure->first + 1 << ", " << b.closure->second + 1 << ")";
    else
      out << "open";
    out << "\"];\n  n" << b.nodes.back() << " -> m" << mark << " [style=dotted];\n";
    ++mark;
  }
  out << "}\n";
  return out.str();
}

std::string proof_tree_json(const Tableau& t) {
  json nodes = json::array();
  for (std::size_t i = 0; i < t.nodes().size(); ++i) {
    const TableauNode& n = t.nodes()[i];
    json jn{{"id", i},
            {"sign", n.sf.sign == Sign::One ? 1 : 0},
            {"formula", render(n.sf.formula)},
            {"parent", n.parent}};
    if (n.rule) {
      jn["rule"] = rule_number(*n.rule);
      jn["source"] = n.source;
    }
    nodes.push_back(std::move(jn));
  }
  json branches = json::array();
  for (const Branch& b : t.branches()) {
    json jb{{"nodes", b.nodes}, {"status", b.is_closed() ? "closed" : "open"}};
    if (b.closure) jb["closure"] = {b.closure->first, b.closure->second};
    branches.push_back(std::move(jb));
  }
  json j{{"closed", t.closed()},
         {"initial_count", t.initial_count()},
         {"nodes", std::move(nodes)},
         {"branches", std::move(branches)}};
  return j.dump(2);
}

// ── Quasi-matrices ──────────────────────────────────────────────────────────

std::string matrix_text(const QuasiMatrix& m, RenderStyle style) {
  std::ostringstream out;
  std::size_t name_width = 0;
  std::vector<std::string> names(m.rows.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    names[r] = render(m.rows[r], style);
    name_width = std::max(name_width, display_width(names[r]));
  }
  std::vector<std::string> labels(m.columns.size());
  for (std::size_t c = 0; c < m.columns.size(); ++c)
    labels[c] = "v" + std::to_string(c + 1);

  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    out << names[r] << std::string(name_width - display_width(names[r]), ' ') << " |";
    for (std::size_t c = 0; c < m.columns.size(); ++c)
      out << ' ' << std::string(labels[c].size() - 1, ' ') << int(m.cells[r][c]);
    out << '\n';
  }
  out << std::string(name_width, ' ') << " |";
  for (const std::string& l : labels) out << ' ' << l;
  out << '\n';
  return out.str();
}

std::string matrix_csv(const QuasiMatrix& m) {
  std::ostringstream out;
  out << "formula";
  for (std::size_t c = 0; c < m.columns.size(); ++c) out << ",v" << c + 1;
  out << '\n';
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    out << render(m.rows[r]);
    for (std::size_t c = 0; c < m.columns.size(); ++c) out << ',' << int(m.cells[r][c]);
    out << '\n';
  }
  return out.str();
}

std::string matrix_json(const QuasiMatrix& m) {
  json rows = json::array();
  for (const Formula& f : m.rows) rows.push_back(render(f));
  json columns = json::array();
  for (const Valuation& v : m.columns) {
    json atoms = json::object();
    for (std::size_t i = 0; i < v.domain().size(); ++i)
      atoms[semantic_atom_text(v.domain().at(i))] = v.bit(i) ? 1 : 0;
    columns.push_back(std::move(atoms));
  }
  json j{{"rows", std::move(rows)}, {"columns", std::move(columns)}, {"cells", m.cells}};
  return j.dump(2);
}

// ── Valuations and countermodels ────────────────────────────────────────────

std::string valuation_text(const Valuation& v, RenderStyle style) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.domain().size(); ++i)
    out << "v(" << semantic_atom_text(v.domain().at(i), style) << ") = " << v.bit(i)
        << '\n';
  return out.str();
}

std::string countermodel_text(const Valuation& v, std::span<const Formula> premises,
                              const Formula& conclusion, RenderStyle style) {
  const char* maps_to = style == RenderStyle::Unicode ? "↦" : "|->";
  std::ostringstream out;
  out << valuation_text(v, style);
  for (const Formula& p : premises)
    out << "premise " << render(p, style) << ' ' << maps_to << ' ' << v.evaluate(p)
        << '\n';
  out << "conclusion " << render(conclusion, style) << ' ' << maps_to << ' '
      << v.evaluate(conclusion) << '\n';
  return out.str();
}

std::string countermodel_json(const Valuation& v, std::span<const Formula> premises,
                              const Formula& conclusion) {
  json atoms = json::array();
  for (std::size_t i = 0; i < v.domain().size(); ++i)
    atoms.push_back({{"atom", semantic_atom_text(v.domain().at(i))},
                     {"value", v.bit(i) ? 1 : 0}});
  json jp = json::array();
  for (const Formula& p : premises)
    jp.push_back({{"formula", render(p)}, {"value", v.evaluate(p) ? 1 : 0}});
  json j{{"atoms", std::move(atoms)},
         {"premises", std::move(jp)},
         {"conclusion",
          {{"formula", render(conclusion)}, {"value", v.evaluate(conclusion) ? 1 : 0}}}};
  return j.dump(2);
}

}  // namespace letf
