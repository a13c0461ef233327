#include "hfdts/grid.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "hfdts/error.hpp"
#include "hfdts/homology.hpp"

namespace hfdts {

namespace {

constexpr int kMaxGrid = 7;

bool is_permutation(const std::vector<int>& p, int n) {
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return static_cast<int>(p.size()) == n;
}

// cyclic half-open interval [a, b) on Z/n, a != b
bool in_range(int v, int a, int b, int n) { return (v - a + n) % n < (b - a + n) % n; }

// cyclic open interval (a, b)
bool inside(int v, int a, int b, int n) {
  const int off = (v - a + n) % n;
  return off > 0 && off < (b - a + n) % n;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Targets (with multiplicity) of empty rectangles out of x.
std::vector<int> boundary_of(const GridDiagram& g, const std::vector<int>& x) {
  const int n = g.n;
  std::vector<int> hits;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      // lower-left corner (a, x[a]), upper-right (b, x[b])
      const int r0 = x[a], r1 = x[b];
      bool empty = true;
      for (int c = a; empty && c != b; c = (c + 1) % n)
        if (in_range(g.X[c], r0, r1, n) || in_range(g.O[c], r0, r1, n)) empty = false;
      for (int c = (a + 1) % n; empty && c != b; c = (c + 1) % n)
        if (inside(x[c], r0, r1, n)) empty = false;
      if (!empty) continue;
      std::vector<int> y = x;
      std::swap(y[a], y[b]);
      hits.push_back(static_cast<int>(permutation_index(y)));
    }
  }
  return hits;
}

std::vector<int> reduce_mod2(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2) out.push_back(v[i]);
    i = j;
  }
  return out;
}

std::vector<std::vector<int>> boundary_lists(const GridDiagram& g, bool parallel) {
  g.check();
  if (g.n > kMaxGrid) throw Error(ErrorCode::InvalidGrid, "grids larger than 7 are not supported");
  const auto gens = all_permutations(g.n);
  const int m = static_cast<int>(gens.size());
  std::vector<std::vector<int>> out(m);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (int i = 0; i < m; ++i) out[i] = reduce_mod2(boundary_of(g, gens[i]));
  return out;
}

F2Matrix to_matrix(const std::vector<std::vector<int>>& lists) {
  const int m = static_cast<int>(lists.size());
  F2Matrix d(m, m);
  for (int x = 0; x < m; ++x)
    for (int y : lists[x]) d.set(y, x, true);
  return d;
}

std::vector<int> parse_list(const std::string& s, std::size_t offset) {
  try {
    const Json j = Json::parse(s);
    if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "");
    return j.get<std::vector<int>>();
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "offset " + std::to_string(offset) + ": expected an integer list, got '" + s + "'");
  }
}

}  // namespace

void GridDiagram::check() const {
  if (n < 1) throw Error(ErrorCode::InvalidGrid, "size must be positive");
  if (!is_permutation(X, n)) throw Error(ErrorCode::InvalidGrid, "X is not a permutation of 0.." + std::to_string(n - 1));
  if (!is_permutation(O, n)) throw Error(ErrorCode::InvalidGrid, "O is not a permutation of 0.." + std::to_string(n - 1));
  for (int c = 0; c < n; ++c)
    if (X[c] == O[c])
      throw Error(ErrorCode::InvalidGrid, "column " + std::to_string(c) + ": X and O share row " + std::to_string(X[c]));
}

int GridDiagram::components() const {
  std::vector<int> o_col(n);
  for (int c = 0; c < n; ++c) o_col[O[c]] = c;
  std::vector<char> seen(n, 0);
  int k = 0;
  for (int c = 0; c < n; ++c) {
    if (seen[c]) continue;
    ++k;
    for (int e = c; !seen[e]; e = o_col[X[e]]) seen[e] = 1;
  }
  return k;
}

GridDiagram GridDiagram::rotated(int k) const {
  GridDiagram g{n, std::vector<int>(n), std::vector<int>(n)};
  for (int c = 0; c < n; ++c) {
    g.X[((c + k) % n + n) % n] = X[c];
    g.O[((c + k) % n + n) % n] = O[c];
  }
  return g;
}

GridDiagram grid_parse(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::InvalidInput, "offset " + std::to_string(e.byte) + ": " + e.what());
    }
    return grid_from_json(j);
  }
  static const std::regex key(R"((^|\s)(n|X|O)\s*:)");
  std::vector<std::pair<std::string, std::size_t>> keys;  // name, value start
  std::vector<std::size_t> starts;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), key); it != std::sregex_iterator(); ++it) {
    keys.push_back({(*it)[2].str(), static_cast<std::size_t>(it->position() + it->length())});
    starts.push_back(static_cast<std::size_t>(it->position()));
  }
  if (keys.empty()) throw Error(ErrorCode::InvalidInput, "offset 0: expected 'n:', 'X:' and 'O:' fields");
  if (starts[0] != 0 && text.find_first_not_of(" \t\r\n") < starts[0])
    throw Error(ErrorCode::InvalidInput, "offset 0: unexpected text before the first field");
  GridDiagram g;
  bool have[3] = {false, false, false};
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::size_t end = i + 1 < keys.size() ? starts[i + 1] : text.size();
    std::string v = text.substr(keys[i].second, end - keys[i].second);
    v.erase(0, v.find_first_not_of(" \t\r\n"));
    v.erase(v.find_last_not_of(" \t\r\n") + 1);
    const std::string& k = keys[i].first;
    const int slot = k == "n" ? 0 : k == "X" ? 1 : 2;
    if (have[slot]) throw Error(ErrorCode::InvalidInput, "offset " + std::to_string(starts[i]) + ": duplicate field " + k);
    have[slot] = true;
    if (slot == 0) {
      std::size_t used = 0;
      try {
        g.n = std::stoi(v, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != v.size())
        throw Error(ErrorCode::InvalidInput,
                    "offset " + std::to_string(keys[i].second) + ": expected an integer size, got '" + v + "'");
    } else {
      (slot == 1 ? g.X : g.O) = parse_list(v, keys[i].second);
    }
  }
  for (int s = 0; s < 3; ++s)
    if (!have[s]) throw Error(ErrorCode::InvalidInput, std::string("missing field ") + "nXO"[s]);
  g.check();
  return g;
}

Json grid_to_json(const GridDiagram& g) { return Json{{"n", g.n}, {"X", g.X}, {"O", g.O}}; }

GridDiagram grid_from_json(const Json& j) {
  GridDiagram g;
  try {
    g.n = j.at("n").get<int>();
    g.X = j.at("X").get<std::vector<int>>();
    g.O = j.at("O").get<std::vector<int>>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("grid document: ") + e.what());
  }
  g.check();
  return g;
}

long long permutation_index(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  long long idx = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    idx = idx * (n - i) + smaller;
  }
  return idx;
}

F2Matrix grid_differential(const GridDiagram& g) { return to_matrix(boundary_lists(g, true)); }
F2Matrix grid_differential_serial(const GridDiagram& g) { return to_matrix(boundary_lists(g, false)); }

GridResult grid_tilde_rank(const GridDiagram& g, bool parallel) {
  const auto lists = boundary_lists(g, parallel);
  const int m = static_cast<int>(lists.size());
  bool square_zero = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : square_zero) if (parallel)
  for (int x = 0; x < m; ++x) {
    std::vector<int> twice;
    for (int y : lists[x]) twice.insert(twice.end(), lists[y].begin(), lists[y].end());
    if (!reduce_mod2(std::move(twice)).empty()) square_zero = false;
  }
  if (!square_zero) throw Error(ErrorCode::NotAComplex, "grid differential does not square to zero");
  const F2Matrix d = to_matrix(lists);
  return {m, m - 2 * rank(d)};
}

}  // namespace hfdts
