#ifndef PSC_DOT_HPP
#define PSC_DOT_HPP

#include <optional>
#include <string>

#include "psc/colorful_graph.hpp"

namespace psc {

// Isolated vertices are omitted, so the output lists edges only.
inline std::string formula_graph_dot(const FormulaGraph& g) {
    std::string out = "graph formula {\n";
    for (auto [u, v] : g.edges) {
        auto a = index_to_pair(u, g.n);
        auto b = index_to_pair(v, g.n);
        out += "  \"(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")\" -- \"(" +
               std::to_string(b.first) + "," + std::to_string(b.second) + ")\";\n";
    }
    out += "}\n";
    return out;
}

inline const char* dot_palette(int color) {
    static const char* palette[] = {"red",    "blue",  "green", "black",  "orange",
                                    "purple", "brown", "cyan",  "magenta", "gray40"};
    return palette[color % 10];
}

// Directions follow the base orientation unless an orientation is supplied.
// Singleton pairs are drawn dashed; they carry no color id.
inline std::string colorful_graph_dot(const ColorfulGraph& g,
                                      const std::optional<Orientation>& o = std::nullopt) {
    if (o && static_cast<int>(o->flip.size()) != g.color_count())
        throw std::invalid_argument("colorful_graph_dot: orientation length mismatch");
    std::string out = "digraph colorful {\n";
    for (int v = 1; v <= g.n; ++v) out += "  " + std::to_string(v) + ";\n";
    for (int c = 0; c < g.color_count(); ++c) {
        bool flip = o && o->flip[c];
        for (auto [u, v] : g.colors[c]) {
            if (flip) std::swap(u, v);
            out += "  " + std::to_string(u) + " -> " + std::to_string(v) + " [color=" +
                   dot_palette(c) + ", label=\"c" + std::to_string(c + 1) + "\"];\n";
        }
    }
    for (auto [u, v] : g.singleton_pairs)
        out += "  " + std::to_string(u) + " -> " + std::to_string(v) +
               " [color=gray70, style=dashed];\n";
    out += "}\n";
    return out;
}

}  // namespace psc

#endif
