#include "gkf/euler_char.hpp"

#include <stdexcept>

namespace gkf {

namespace {

long long count_true(const std::vector<std::uint8_t>& v) {
  long long c = 0;
  for (std::uint8_t b : v) c += b != 0;
  return c;
}

}  // namespace

CubicalComplexCounts cubical_counts(const MaskGrid& mask) {
  const int n = mask.n;
  if (n < 1) throw std::invalid_argument("cubical_counts: empty mask");
  CubicalComplexCounts out;

  if (mask.topology == Topology::torus) {
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<std::uint8_t> vert(nn, 0), hedge(nn, 0), vedge(nn, 0);
    auto idx = [n](int r, int c) {
      return static_cast<std::size_t>((r + n) % n) * n + (c + n) % n;
    };
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (!mask.at(r, c)) continue;
        ++out.faces;
        vert[idx(r, c)] = vert[idx(r, c + 1)] = 1;
        vert[idx(r + 1, c)] = vert[idx(r + 1, c + 1)] = 1;
        hedge[idx(r, c)] = hedge[idx(r + 1, c)] = 1;
        vedge[idx(r, c)] = vedge[idx(r, c + 1)] = 1;
      }
    }
    out.vertices = count_true(vert);
    out.edges = count_true(hedge) + count_true(vedge);
    return out;
  }

  const int m = n + 1;
  std::vector<std::uint8_t> vert(static_cast<std::size_t>(m) * m, 0);
  std::vector<std::uint8_t> hedge(static_cast<std::size_t>(m) * n, 0);
  std::vector<std::uint8_t> vedge(static_cast<std::size_t>(n) * m, 0);
  auto vid = [m](int r, int c) { return static_cast<std::size_t>(r) * m + c; };
  auto hid = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
  auto vidge = [m](int r, int c) { return static_cast<std::size_t>(r) * m + c; };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!mask.at(r, c)) continue;
      ++out.faces;
      vert[vid(r, c)] = vert[vid(r, c + 1)] = 1;
      vert[vid(r + 1, c)] = vert[vid(r + 1, c + 1)] = 1;
      hedge[hid(r, c)] = hedge[hid(r + 1, c)] = 1;
      vedge[vidge(r, c)] = vedge[vidge(r, c + 1)] = 1;
    }
  }
  out.vertices = count_true(vert);
  out.edges = count_true(hedge) + count_true(vedge);
  return out;
}

long long euler_char_2d(const MaskGrid& mask) {
  return cubical_counts(mask).chi();
}

long long euler_char_1d(const std::vector<std::uint8_t>& mask,
                        Topology1d topo) {
  const std::size_t n = mask.size();
  if (n == 0) return 0;
  long long components = 0;
  if (topo == Topology1d::interval) {
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i] && (i == 0 || !mask[i - 1])) ++components;
    return components;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (mask[i] && !mask[(i + n - 1) % n]) ++components;
  return components;  // all-on circle has no start -> 0 = chi(S^1)
}

namespace {

// Flood fill over a boolean predicate with the given neighbourhood.
long long component_count(int n, const std::vector<std::uint8_t>& cells,
                          bool eight_connected,
                          std::vector<int>* label_out = nullptr) {
  std::vector<int> label(cells.size(), -1);
  std::vector<std::size_t> stack;
  long long comps = 0;
  for (std::size_t start = 0; start < cells.size(); ++start) {
    if (!cells[start] || label[start] >= 0) continue;
    int id = static_cast<int>(comps++);
    stack.push_back(start);
    label[start] = id;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      int r = static_cast<int>(cur) / n, c = static_cast<int>(cur) % n;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          if (!eight_connected && dr != 0 && dc != 0) continue;
          int rr = r + dr, cc = c + dc;
          if (rr < 0 || rr >= n || cc < 0 || cc >= n) continue;
          std::size_t nb = static_cast<std::size_t>(rr) * n + cc;
          if (cells[nb] && label[nb] < 0) {
            label[nb] = id;
            stack.push_back(nb);
          }
        }
      }
    }
  }
  if (label_out) *label_out = std::move(label);
  return comps;
}

}  // namespace

long long euler_char_flood_fill_oracle(const MaskGrid& mask) {
  if (mask.topology != Topology::rectangle)
    throw std::invalid_argument(
        "euler_char_flood_fill_oracle: rectangle topology only");
  const int n = mask.n;
  long long b0 = component_count(n, mask.on, /*eight_connected=*/true);

  std::vector<std::uint8_t> off(mask.on.size());
  for (std::size_t i = 0; i < off.size(); ++i) off[i] = mask.on[i] ? 0 : 1;
  std::vector<int> label;
  long long off_comps = component_count(n, off, /*eight_connected=*/false,
                                        &label);
  // Holes are off-components that never touch the border.
  std::vector<std::uint8_t> touches(off_comps, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if ((r == 0 || c == 0 || r == n - 1 || c == n - 1) &&
          label[static_cast<std::size_t>(r) * n + c] >= 0)
        touches[label[static_cast<std::size_t>(r) * n + c]] = 1;
  long long b1 = 0;
  for (std::uint8_t t : touches)
    if (!t) ++b1;
  b1 += off_comps - static_cast<long long>(touches.size());  // zero, by construction
  return b0 - b1;
}

long long euler_char_quad_oracle(const MaskGrid& mask) {
  const int n = mask.n;
  const bool wrap = mask.topology == Topology::torus;
  auto cell = [&](int r, int c) -> int {
    if (wrap) return mask.at((r + n) % n, (c + n) % n) ? 1 : 0;
    if (r < 0 || r >= n || c < 0 || c >= n) return 0;
    return mask.at(r, c) ? 1 : 0;
  };
  long long q1 = 0, q3 = 0, qd = 0;
  const int lo = wrap ? 0 : -1;          // window = 2x2 block anchored here
  const int windows = wrap ? n : n + 1;  // torus wraps; rectangle zero-pads
  for (int r = lo; r < lo + windows; ++r) {
    for (int c = lo; c < lo + windows; ++c) {
      int a = cell(r, c), b = cell(r, c + 1);
      int d = cell(r + 1, c), e = cell(r + 1, c + 1);
      int s = a + b + d + e;
      if (s == 1) ++q1;
      else if (s == 3) ++q3;
      else if (s == 2 && ((a && e) || (b && d))) ++qd;
    }
  }
  long long num = q1 - q3 - 2 * qd;
  return num / 4;
}

}  // namespace gkf
