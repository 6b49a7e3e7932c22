#include "ptorus/states.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ptorus {

int MarkedState::num_blocks() const {
  int n = 0;
  for (auto b : blocks) n = std::max(n, b + 1);
  return n;
}

int MarkedState::mark_of_block(int b) const {
  for (std::size_t m = 0; m < marks.size(); ++m)
    if (marks[m] == b) return static_cast<int>(m);
  return -1;
}

bool MarkedState::is_standard() const { return std::is_sorted(marks.begin(), marks.end()); }

MarkedState canonicalize(std::vector<int> blocks, const std::vector<int>& marked_blocks) {
  std::map<int, int> relabel;
  MarkedState s;
  s.blocks.reserve(blocks.size());
  for (int b : blocks) {
    auto [it, inserted] = relabel.try_emplace(b, static_cast<int>(relabel.size()));
    s.blocks.push_back(static_cast<std::uint8_t>(it->second));
  }
  for (int b : marked_blocks) {
    auto it = relabel.find(b);
    if (it == relabel.end()) throw std::invalid_argument("mark on a block with no points");
    s.marks.push_back(static_cast<std::uint8_t>(it->second));
  }
  return s;
}

std::string canonical_encode(const MarkedState& s) {
  std::string out;
  out.reserve(2 + s.blocks.size() + s.marks.size());
  out.push_back(static_cast<char>(s.blocks.size()));
  out.push_back(static_cast<char>(s.marks.size()));
  for (auto b : s.blocks) out.push_back(static_cast<char>(b));
  for (auto m : s.marks) out.push_back(static_cast<char>(m));
  return out;
}

MarkedState canonical_decode(const std::string& bytes) {
  if (bytes.size() < 2) throw std::invalid_argument("truncated state encoding");
  auto width = static_cast<std::size_t>(static_cast<unsigned char>(bytes[0]));
  auto level = static_cast<std::size_t>(static_cast<unsigned char>(bytes[1]));
  if (bytes.size() != 2 + width + level) throw std::invalid_argument("bad state encoding length");
  MarkedState s;
  for (std::size_t i = 0; i < width; ++i) s.blocks.push_back(static_cast<std::uint8_t>(bytes[2 + i]));
  for (std::size_t i = 0; i < level; ++i)
    s.marks.push_back(static_cast<std::uint8_t>(bytes[2 + width + i]));
  return s;
}

std::string describe(const MarkedState& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) os << (i ? " " : "") << int(s.blocks[i]);
  os << " |";
  for (std::size_t m = 0; m < s.marks.size(); ++m) os << " " << m + 1 << ":" << int(s.marks[m]);
  return os.str();
}

MarkedState apply_mark_permutation(const MarkedState& s, const Permutation& p) {
  if (p.size() != s.marks.size()) throw std::invalid_argument("permutation size differs from level");
  MarkedState out = s;
  for (std::size_t m = 0; m < s.marks.size(); ++m) out.marks[p[m]] = s.marks[m];
  return out;
}

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Slice with a variable number of points; mark[b] is the mark carried by
// block b or -1.
struct ExtState {
  std::vector<int> block;
  std::vector<int> mark;

  void normalize() {
    std::vector<int> relabel(block.size() + mark.size() + 1, -1);
    std::vector<int> new_mark;
    int next = 0;
    for (int& b : block) {
      if (relabel[b] < 0) {
        relabel[b] = next++;
        new_mark.push_back(mark[b]);
      }
      b = relabel[b];
    }
    mark = std::move(new_mark);
  }

  std::string key() const {
    std::string k;
    k.reserve(block.size() + mark.size());
    for (int b : block) k.push_back(static_cast<char>(b));
    for (int m : mark) k.push_back(static_cast<char>(m + 1));
    return k;
  }
};

using WeightMap = std::map<std::pair<int, int>, std::int64_t>;  // (q, v) -> count
using Layer = std::map<std::string, std::pair<ExtState, WeightMap>>;

void accumulate(Layer& layer, const ExtState& s, const WeightMap& w, int dq, int dv) {
  auto& slot = layer.try_emplace(s.key(), s, WeightMap{}).first->second.second;
  for (const auto& [e, c] : w) slot[{e.first + dq, e.second + dv}] += c;
}

Layer apply_bond(const Layer& in, int a, int b) {
  Layer out;
  for (const auto& [k, entry] : in) {
    const auto& [s, w] = entry;
    accumulate(out, s, w, 0, 0);
    int ba = s.block[a];
    int bb = s.block[b];
    if (ba == bb) {
      accumulate(out, s, w, 0, 1);
      continue;
    }
    if (s.mark[ba] >= 0 && s.mark[bb] >= 0) continue;  // would lower the level
    ExtState joined = s;
    for (int& x : joined.block)
      if (x == bb) x = ba;
    joined.mark[ba] = std::max(s.mark[ba], s.mark[bb]);
    joined.normalize();
    accumulate(out, joined, w, 0, 1);
  }
  return out;
}

// Drops points [0, drop) and charges q for every unmarked block left empty.
Layer drop_points(const Layer& in, int drop) {
  Layer out;
  for (const auto& [k, entry] : in) {
    const auto& [s, w] = entry;
    std::vector<bool> survives(s.mark.size(), false);
    for (std::size_t i = drop; i < s.block.size(); ++i) survives[s.block[i]] = true;
    int detached = 0;
    bool lost_bridge = false;
    for (std::size_t b = 0; b < s.mark.size(); ++b) {
      if (survives[b]) continue;
      if (s.mark[b] >= 0) lost_bridge = true;
      ++detached;
    }
    if (lost_bridge) continue;
    ExtState next;
    next.block.assign(s.block.begin() + drop, s.block.end());
    next.mark = s.mark;
    next.normalize();
    accumulate(out, next, w, detached, 0);
  }
  return out;
}

}  // namespace

std::int64_t n_tor(int width, int level) {
  if (level < 0 || level > width) return 0;
  if (level == 0) return binomial(2 * width, width) / (width + 1);
  if (level == 1) return binomial(2 * width - 1, width - 1);
  return binomial(2 * width, width - level);
}

namespace {

// With weighted = false the layers carry no weights and only the reachable
// slices are tracked.
Layer propagate_column(const MarkedState& s, LatticeKind kind, bool weighted) {
  const int width = s.width();
  ExtState start;
  start.block.resize(2 * width);
  int nb = s.num_blocks();
  for (int i = 0; i < width; ++i) start.block[i] = s.blocks[i];
  for (int i = 0; i < width; ++i) start.block[width + i] = nb + i;
  start.mark.assign(nb + width, -1);
  for (std::size_t m = 0; m < s.marks.size(); ++m) start.mark[s.marks[m]] = static_cast<int>(m);
  start.normalize();

  Layer layer;
  accumulate(layer, start, weighted ? WeightMap{{{0, 0}, 1}} : WeightMap{}, 0, 0);
  for (int y = 0; y < width; ++y) {
    layer = apply_bond(layer, y, width + y);
    if (kind == LatticeKind::Triangular) layer = apply_bond(layer, y, width + (y + 1) % width);
  }
  layer = drop_points(layer, width);
  for (int y = 0; y < width; ++y) layer = apply_bond(layer, y, (y + 1) % width);
  return layer;
}

MarkedState to_marked(const ExtState& e, std::size_t level) {
  MarkedState t;
  for (int b : e.block) t.blocks.push_back(static_cast<std::uint8_t>(b));
  t.marks.assign(level, 0);
  for (std::size_t b = 0; b < e.mark.size(); ++b)
    if (e.mark[b] >= 0) t.marks[e.mark[b]] = static_cast<std::uint8_t>(b);
  return t;
}

}  // namespace

std::vector<ColumnTerm> column_image(const MarkedState& s, LatticeKind kind) {
  std::vector<ColumnTerm> out;
  for (const auto& [k, entry] : propagate_column(s, kind, true)) {
    const auto& [e, w] = entry;
    const MarkedState t = to_marked(e, s.marks.size());
    for (const auto& [exps, c] : w) {
      if (c != 0) out.push_back(ColumnTerm{t, exps.first, exps.second, c});
    }
  }
  return out;
}

StateSpace::StateSpace(int width, int level, std::vector<MarkedState> states)
    : width_(width), level_(level), states_(std::move(states)) {
  std::sort(states_.begin(), states_.end());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].width() != width || states_[i].level() != level)
      throw std::invalid_argument("state does not match the space's width/level");
    index_.emplace(canonical_encode(states_[i]), i);
    if (states_[i].is_standard()) standard_.push_back(i);
  }
}

std::ptrdiff_t StateSpace::find(const MarkedState& s) const {
  auto it = index_.find(canonical_encode(s));
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

std::size_t StateSpace::index_of(const MarkedState& s) const {
  auto i = find(s);
  if (i < 0) throw std::out_of_range("state not in space: " + describe(s));
  return static_cast<std::size_t>(i);
}

StateSpace generate_states(int width, int level, LatticeKind kind) {
  if (width < 1 || level < 0 || level > width)
    throw std::invalid_argument("need 0 <= level <= width");

  // The column map commutes with relabelling the marks, so the walk runs
  // over sorted-mark representatives and whole orbits are added at the end.
  std::set<MarkedState> reps;
  std::deque<MarkedState> queue;
  auto visit = [&](MarkedState s) {
    std::sort(s.marks.begin(), s.marks.end());
    if (reps.insert(s).second) queue.push_back(std::move(s));
  };

  // Seeds: all singletons, marks on any l points.
  std::vector<int> singletons(width);
  for (int i = 0; i < width; ++i) singletons[i] = i;
  std::vector<bool> chosen(width, false);
  std::fill(chosen.begin(), chosen.begin() + level, true);
  do {
    std::vector<int> marked;
    for (int i = 0; i < width; ++i)
      if (chosen[i]) marked.push_back(i);
    visit(canonicalize(singletons, marked));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));

  while (!queue.empty()) {
    const MarkedState s = std::move(queue.front());
    queue.pop_front();
    for (const auto& [k, entry] : propagate_column(s, kind, false)) visit(to_marked(entry.first, s.marks.size()));
  }

  std::set<MarkedState> seen;
  const auto perms = all_permutations(level);
  for (const auto& r : reps)
    for (const auto& p : perms) seen.insert(apply_mark_permutation(r, p));

  std::int64_t expected = factorial(level) * n_tor(width, level);
  if (static_cast<std::int64_t>(seen.size()) != expected) {
    throw CountMismatch("closure for L=" + std::to_string(width) + ", l=" + std::to_string(level) +
                        " has " + std::to_string(seen.size()) + " states, expected " +
                        std::to_string(expected));
  }
  return StateSpace(width, level, std::vector<MarkedState>(seen.begin(), seen.end()));
}

}  // namespace ptorus
