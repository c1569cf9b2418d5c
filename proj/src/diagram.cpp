// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "knotforge/error.hpp"

namespace knotforge {

// -------------------------------------------------------------- LinearForm

long LinearForm::evaluate(std::span<const int> indices) const {
  long v = constant;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    v += static_cast<long>(coeffs[k]) * indices[k];
  return v;
}

long LinearForm::max_over_box(int bound) const {
  long v = constant;
  for (int c : coeffs)
    if (c > 0) v += static_cast<long>(c) * bound;
  return v;
}

bool LinearForm::is_identically_zero() const {
  return constant == 0 &&
         std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

std::string LinearForm::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "i" + std::to_string(k + 1);
  }
  if (constant != 0 || out.empty()) {
    if (out.empty())
      out = std::to_string(constant);
    else
      out += (constant > 0 ? " + " : " - ") + std::to_string(std::labs(constant));
  }
  return out;
}

// ------------------------------------------------------------ TangleDiagram

namespace {

enum class EndKind { Boundary, Cross, Cup, Cap };

struct End {
  EndKind kind = EndKind::Boundary;
  int slice = -1;
  int port = 0;  // crossing: 0 BL, 1 BR, 2 TL, 3 TR; cup/cap: 0 L, 1 R
};

struct Edge {
  End bottom;
  End top;
};

const char* slice_keyword(SliceKind k) {
  switch (k) {
    case SliceKind::PosCross: return "x+";
    case SliceKind::NegCross: return "x-";
    case SliceKind::Cup: return "cup";
    case SliceKind::Cap: return "cap";
  }
  return "?";
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

TangleDiagram::TangleDiagram(std::string name, std::vector<Slice> slices)
    : name_(std::move(name)), slices_(std::move(slices)) {
  std::vector<Edge> edges(1);  // edge 0 enters from the bottom endpoint
  std::vector<int> strands{0};
  // Per slice the edges it touches: bl, br, tl, tr or l, r.
  std::vector<std::array<int, 4>> touch(slices_.size(), {-1, -1, -1, -1});
  std::vector<int> crossing_id(slices_.size(), -1);

  auto new_edge = [&](End bottom) {
    edges.push_back({bottom, {}});
    return static_cast<int>(edges.size()) - 1;
  };

  for (std::size_t s = 0; s < slices_.size(); ++s) {
    const auto [kind, p] = slices_[s];
    const int si = static_cast<int>(s);
    const int width = static_cast<int>(strands.size());
    const std::string where =
        "slice " + std::to_string(s + 1) + " (" + slice_keyword(kind) + " " +
        std::to_string(p) + ")";
    if (p < 0) throw ValidationError(where + ": negative position");
    switch (kind) {
      case SliceKind::PosCross:
      case SliceKind::NegCross: {
        if (p + 1 >= width)
          throw ValidationError(where + ": crossing needs strands " +
                                std::to_string(p) + " and " + std::to_string(p + 1) +
                                " but only " + std::to_string(width) + " exist");
        const int bl = strands[p], br = strands[p + 1];
        edges[bl].top = {EndKind::Cross, si, 0};
        edges[br].top = {EndKind::Cross, si, 1};
        const int tl = new_edge({EndKind::Cross, si, 2});
        const int tr = new_edge({EndKind::Cross, si, 3});
        strands[p] = tl;
        strands[p + 1] = tr;
        touch[s] = {bl, br, tl, tr};
        crossing_id[s] = crossing_count_++;
        framing_ += kind == SliceKind::PosCross ? 1 : -1;
        break;
      }
      case SliceKind::Cup: {
        if (p > width)
          throw ValidationError(where + ": cup out of range for " +
                                std::to_string(width) + " strands");
        const int l = new_edge({EndKind::Cup, si, 0});
        const int r = new_edge({EndKind::Cup, si, 1});
        strands.insert(strands.begin() + p, {l, r});
        touch[s] = {l, r, -1, -1};
        ++cupcap_count_;
        break;
      }
      case SliceKind::Cap: {
        if (p + 1 >= width)
          throw ValidationError(where + ": cap out of range for " +
                                std::to_string(width) + " strands");
        const int l = strands[p], r = strands[p + 1];
        edges[l].top = {EndKind::Cap, si, 0};
        edges[r].top = {EndKind::Cap, si, 1};
        strands.erase(strands.begin() + p, strands.begin() + p + 2);
        touch[s] = {l, r, -1, -1};
        ++cupcap_count_;
        break;
      }
    }
    max_width_ = std::max(max_width_, static_cast<int>(strands.size()));
  }
  if (strands.size() != 1)
    throw ValidationError("wrong boundary arity: diagram ends with " +
                          std::to_string(strands.size()) + " strands, expected 1");
  const int top_edge = strands[0];

  // Walk the knot from the bottom endpoint.
  const int n = crossing_count_;
  traversal_.crossings.resize(n);
  traversal_.record_of_slice.assign(slices_.size(), -1);
  std::vector<LinearForm> label(edges.size());
  std::vector<bool> visited(edges.size(), false);
  std::map<int, CupCapRecord> turns;
  LinearForm form{0, std::vector<int>(n, 0)};
  int cur = 0;
  bool up = true;
  while (true) {
    if (visited[cur]) throw ValidationError("traversal revisits an edge");
    visited[cur] = true;
    label[cur] = form;
    if (up) {
      const End e = edges[cur].top;
      if (e.kind == EndKind::Boundary) break;
      const auto& t = touch[e.slice];
      if (e.kind == EndKind::Cross) {
        const Slice sl = slices_[e.slice];
        const int k = crossing_id[e.slice];
        const int f_port = sl.kind == SliceKind::PosCross ? 1 : 0;
        CrossingRecord& rec = traversal_.crossings[k];
        rec.sign = sl.kind == SliceKind::PosCross ? 1 : -1;
        rec.index_id = k + 1;
        rec.slice = e.slice;
        if (e.port == f_port) {
          rec.f_side_in = form;
          form.coeffs[k] += 1;
        } else {
          rec.e_side_in = form;
          form.coeffs[k] -= 1;
        }
        cur = e.port == 0 ? t[3] : t[2];
      } else {  // cap
        turns[e.slice] = {TurnKind::Cap, e.slice, form, e.port == 0 ? 1 : 0};
        cur = e.port == 0 ? t[1] : t[0];
        up = false;
      }
    } else {
      const End e = edges[cur].bottom;
      if (e.kind == EndKind::Boundary)
        throw ValidationError("orientation clash: the strand returns to the bottom endpoint");
      if (e.kind == EndKind::Cross)
        throw ValidationError(
            "orientation clash at slice " + std::to_string(e.slice + 1) +
            ": a strand passes downward through the crossing; rotate it with a "
            "cup and a cap so both strands point up");
      const auto& t = touch[e.slice];
      turns[e.slice] = {TurnKind::Cup, e.slice, form, e.port == 0 ? -1 : 0};
      cur = e.port == 0 ? t[1] : t[0];
      up = true;
    }
  }
  if (cur != top_edge)
    throw InconsistencyError("traversal left through an unexpected edge");
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    throw ValidationError("multiple components: the traversal from the bottom "
                          "endpoint misses part of the diagram");
  if (!form.is_identically_zero())
    throw InconsistencyError("label forms do not return to 0 at the top endpoint");

  for (auto& [slice, rec] : turns) {
    traversal_.record_of_slice[slice] = static_cast<int>(traversal_.cupcaps.size());
    traversal_.cupcaps.push_back(rec);
  }
  for (std::size_t s = 0; s < slices_.size(); ++s)
    if (crossing_id[s] >= 0) traversal_.record_of_slice[s] = crossing_id[s];

  // Oriented smoothing: every crossing becomes two parallel upward strands.
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); };
  for (std::size_t s = 0; s < slices_.size(); ++s) {
    const auto& t = touch[s];
    if (slices_[s].kind == SliceKind::PosCross || slices_[s].kind == SliceKind::NegCross) {
      unite(t[0], t[2]);
      unite(t[1], t[3]);
    } else {
      unite(t[0], t[1]);
    }
  }
  unite(0, top_edge);
  seifert_circles_ = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (find_root(parent, static_cast<int>(e)) == static_cast<int>(e)) ++seifert_circles_;
}

std::string TangleDiagram::canonical_text() const {
  std::string out = "tangle " + name_ + "\n";
  for (const auto& s : slices_)
    out += std::string(slice_keyword(s.kind)) + " " + std::to_string(s.position) + "\n";
  return out;
}

// ------------------------------------------------------------------ parser

TangleDiagram parse_tangle(std::string_view text) {
  std::string name;
  bool have_header = false;
  std::vector<Slice> slices;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    struct Token {
      std::string_view text;
      int column;
    };
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0].text != "tangle")
        throw ParseError("expected header 'tangle NAME', found '" +
                             std::string(tokens[0].text) + "'",
                         line_no, tokens[0].column);
      if (tokens.size() != 2)
        throw ParseError("header takes exactly one name", line_no,
                         tokens.size() < 2 ? static_cast<int>(line.size()) + 1
                                           : tokens[2].column);
      name = std::string(tokens[1].text);
      have_header = true;
      continue;
    }

    SliceKind kind;
    const auto kw = tokens[0].text;
    if (kw == "x+")
      kind = SliceKind::PosCross;
    else if (kw == "x-")
      kind = SliceKind::NegCross;
    else if (kw == "cup")
      kind = SliceKind::Cup;
    else if (kw == "cap")
      kind = SliceKind::Cap;
    else if (kw == "tangle")
      throw ParseError("duplicate header", line_no, tokens[0].column);
    else
      throw ParseError("unknown token '" + std::string(kw) +
                           "' (expected x+, x-, cup or cap)",
                       line_no, tokens[0].column);
    if (tokens.size() < 2)
      throw ParseError("missing position after '" + std::string(kw) + "'", line_no,
                       static_cast<int>(line.size()) + 1);
    if (tokens.size() > 2)
      throw ParseError("unexpected token '" + std::string(tokens[2].text) + "'",
                       line_no, tokens[2].column);
    const auto num = tokens[1].text;
    if (num.size() > 9 || !std::all_of(num.begin(), num.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw ParseError("position must be a nonnegative integer, found '" +
                           std::string(num) + "'",
                       line_no, tokens[1].column);
    slices.push_back({kind, std::stoi(std::string(num))});
  }
  if (!have_header) throw ParseError("missing header 'tangle NAME'", 1, 1);
  return TangleDiagram(std::move(name), std::move(slices));
}

const Traversal& traverse_labels(const TangleDiagram& d) { return d.traversal(); }

TangleDiagram zero_framed(const TangleDiagram& d, const std::string& name) {
  const int f = d.framing();
  const SliceKind kink = f > 0 ? SliceKind::NegCross : SliceKind::PosCross;
  std::vector<Slice> slices;
  for (int i = 0; i < std::abs(f); ++i) {
    slices.push_back({SliceKind::Cup, 1});
    slices.push_back({kink, 0});
    slices.push_back({SliceKind::Cap, 1});
  }
  slices.insert(slices.end(), d.slices().begin(), d.slices().end());
  return TangleDiagram(name, std::move(slices));
}

}  // namespace knotforge
