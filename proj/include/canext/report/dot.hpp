#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "canext/core/errors.hpp"
#include "canext/order/lattice.hpp"

namespace canext::report {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

/// Hasse diagram with the bottom at the bottom; `highlight` marks nodes
/// drawn filled (for instance the image of an embedding).
inline std::string hasse_dot(const Lattice& L, const std::string& graph_name, const ElementSet* highlight = nullptr) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  for (Elem a = 0; a < L.size(); ++a) {
    out << "  n" << a << " [label=\"" << dot_escape(L.name(a)) << "\"";
    if (highlight && highlight->test(a)) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (const auto& [lo, hi] : L.poset().covers()) out << "  n" << lo << " -> n" << hi << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::invalid_document, "cannot write '" + path + "'");
  f << text;
}

/// FNV-1a, 64 bit, as a 16-digit hex string.
inline std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 15];
  return s;
}

}  // namespace canext::report
