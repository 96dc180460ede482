#include "blring/render.hpp"

#include <sstream>

namespace blring {

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string pad_cell(const std::string& s, std::size_t w) {
  std::string out = s;
  for (std::size_t i = display_width(s); i < w; ++i) out += ' ';
  return out;
}

/// One operation table: header with the op symbol, separator, value rows.
std::vector<std::string> table_lines(const std::string& sym, std::size_t n,
                                     const std::vector<Elem>& tab,
                                     const std::vector<std::string>& labels) {
  std::size_t w = display_width(sym);
  for (const auto& l : labels) w = std::max(w, display_width(l));

  std::vector<std::string> lines;
  std::string head = pad_cell(sym, w) + " |";
  for (std::size_t j = 0; j < n; ++j) head += " " + pad_cell(labels[j], w);
  lines.push_back(head);
  lines.push_back(std::string(w + 1, '-') + "+" +
                  std::string(n * (w + 1), '-'));
  for (std::size_t i = 0; i < n; ++i) {
    std::string row = pad_cell(labels[i], w) + " |";
    for (std::size_t j = 0; j < n; ++j)
      row += " " + pad_cell(labels[tab[i * n + j]], w);
    lines.push_back(row);
  }
  // trim trailing spaces
  for (auto& l : lines)
    while (!l.empty() && l.back() == ' ') l.pop_back();
  return lines;
}

std::string side_by_side(const std::vector<std::string>& a,
                         const std::vector<std::string>& b) {
  std::size_t wa = 0;
  for (const auto& l : a) wa = std::max(wa, display_width(l));
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << pad_cell(a[i], wa) << "   " << b[i] << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_tables(const ResLat& l,
                          const std::vector<std::string>& labels) {
  const std::vector<std::string>& lb = labels.empty() ? l.labels : labels;
  if (lb.size() != l.size) throw Error("render_tables: label count mismatch");
  auto left = table_lines("→", l.size, l.arrow, lb);
  auto right = table_lines("⊗", l.size, l.odot, lb);
  return side_by_side(left, right);
}

std::string render_cayley(const FiniteRing& r) {
  auto add = table_lines("+", r.order, r.add, r.labels);
  auto mul = table_lines("*", r.order, r.mul, r.labels);
  std::ostringstream os;
  for (const auto& l : add) os << l << "\n";
  os << "\n";
  for (const auto& l : mul) os << l << "\n";
  return os.str();
}

std::vector<std::pair<Elem, Elem>> hasse_edges(
    std::size_t size, const std::vector<std::uint8_t>& leq) {
  auto le = [&](Elem a, Elem b) { return leq[std::size_t(a) * size + b] != 0; };
  std::vector<std::pair<Elem, Elem>> edges;
  for (Elem i = 0; i < size; ++i)
    for (Elem j = 0; j < size; ++j) {
      if (i == j || !le(i, j)) continue;
      bool cover = true;
      for (Elem k = 0; k < size && cover; ++k)
        if (k != i && k != j && le(i, k) && le(k, j)) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

std::string render_ideal_lattice(const IdealLattice& lat) {
  std::ostringstream os;
  const std::size_t n = lat.size();
  os << "ideals (" << n << "):\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Ideal& ideal = lat.ideals[i];
    os << "  [" << i << "] " << ideal.label() << " = {";
    bool first = true;
    for (auto e = ideal.members.find_first(); e != MemberSet::npos;
         e = ideal.members.find_next(e)) {
      if (!first) os << ",";
      os << lat.ring->labels[e];
      first = false;
    }
    os << "}\n";
  }
  os << "hasse:";
  for (auto [i, j] : hasse_edges(n, lat.leq))
    os << " [" << i << "]<[" << j << "]";
  os << "\nleq:\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "  ";
    for (std::size_t j = 0; j < n; ++j) os << (lat.leq[i * n + j] ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

std::vector<std::string> ideal_lattice_labels(std::size_t n) {
  if (n == 1) return {"0"};
  if (n == 2) return {"0", "R"};
  if (n == 3) return {"0", "I", "R"};
  if (n == 4) return {"0", "I", "J", "R"};
  std::vector<std::string> out(n);
  out[0] = "0";
  out[n - 1] = "R";
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = "I" + std::to_string(i);
  return out;
}

}  // namespace blring
