#include "ptorus/symgroup.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ptorus {

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }
int ClassLabel::size() const {
  return std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
}
bool ClassLabel::is_identity() const {
  return std::all_of(cycle_type.begin(), cycle_type.end(), [](int c) { return c == 1; });
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Beta-set (first-column hook lengths) of a partition with k = rows parts.
std::vector<int> beta_set(const Partition& rows) {
  int k = static_cast<int>(rows.size());
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = rows[i] + (k - 1 - i);
  return beta;  // strictly decreasing
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  int k = static_cast<int>(beta.size());
  Partition rows;
  for (int i = 0; i < k; ++i) {
    int r = beta[i] - (k - 1 - i);
    if (r > 0) rows.push_back(r);
  }
  return rows;
}

class MurnaghanNakayama {
 public:
  std::int64_t eval(const Partition& shape, const Partition& cycles, std::size_t pos) {
    if (pos == cycles.size()) return shape.empty() ? 1 : 0;
    auto memo_key = std::make_pair(shape, Partition(cycles.begin() + pos, cycles.end()));
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

    int r = cycles[pos];
    std::vector<int> beta = beta_set(shape);
    std::int64_t total = 0;
    // Removing a rim hook of length r = sliding one bead from b to b - r.
    for (std::size_t i = 0; i < beta.size(); ++i) {
      int target = beta[i] - r;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int b : beta)
        if (b > target && b < beta[i]) ++between;
      std::vector<int> next = beta;
      next[i] = target;
      std::int64_t sub = eval(from_beta_set(next), cycles, pos + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(memo_key, total);
    return total;
  }

 private:
  std::map<std::pair<Partition, Partition>, std::int64_t> memo_;
};

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<Partition> partitions(int l) {
  if (l < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(l, l, cur, out);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << "]";
  return os.str();
}

Partition parse_partition(const std::string& s) {
  Partition p;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) {
      p.push_back(std::stoi(digits));
      digits.clear();
    }
  };
  for (char ch : s) {
    if (ch >= '0' && ch <= '9') {
      digits += ch;
    } else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
      flush();
    } else {
      throw std::invalid_argument("bad partition: " + s);
    }
  }
  flush();
  if (!std::is_sorted(p.rbegin(), p.rend()) ||
      std::any_of(p.begin(), p.end(), [](int x) { return x <= 0; }))
    throw std::invalid_argument("not a partition: " + s);
  return p;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t class_size(const ClassLabel& c) {
  std::map<int, int> mult;
  for (int m : c.cycle_type) ++mult[m];
  std::int64_t z = 1;
  for (auto [m, a] : mult) {
    for (int i = 0; i < a; ++i) z *= m;
    z *= factorial(a);
  }
  return factorial(c.size()) / z;
}

std::int64_t dim_irrep(const YoungDiagram& d) {
  const auto& rows = d.rows;
  std::int64_t hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < rows.size() && rows[k] > j; ++k) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(d.size()) / hooks;
}

std::int64_t character(const YoungDiagram& d, const ClassLabel& c) {
  if (d.size() != c.size()) throw std::invalid_argument("diagram and class sizes differ");
  MurnaghanNakayama mn;
  return mn.eval(d.rows, c.cycle_type, 0);
}

std::int64_t c_coeff(const YoungDiagram& d, const ClassLabel& c) {
  std::int64_t num = class_size(c) * character(d, c);
  std::int64_t den = dim_irrep(d);
  if (num % den != 0) {
    throw NonIntegral("c(" + partition_to_string(d.rows) + "," +
                      partition_to_string(c.cycle_type) + ") is not an integer");
  }
  return num / den;
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::find(labels.begin(), labels.end(), p);
  if (it == labels.end()) throw std::invalid_argument("unknown label " + partition_to_string(p));
  return static_cast<std::size_t>(it - labels.begin());
}

const CharacterTable& character_table(int l) {
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(table_mutex());
  auto& slot = cache[l];
  if (!slot) {
    auto t = std::make_unique<CharacterTable>();
    t->l = l;
    t->labels = partitions(l);
    MurnaghanNakayama mn;
    for (const auto& d : t->labels) {
      std::vector<std::int64_t> row;
      for (const auto& c : t->labels) row.push_back(mn.eval(d, c, 0));
      t->chi.push_back(std::move(row));
      t->dims.push_back(dim_irrep(YoungDiagram{d}));
      t->class_sizes.push_back(class_size(ClassLabel{d}));
    }
    slot = std::move(t);
  }
  return *slot;
}

Permutation identity_permutation(int l) {
  Permutation p(l);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

ClassLabel cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  Partition cycles;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return ClassLabel{cycles};
}

std::vector<Permutation> all_permutations(int l) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(l);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation class_representative(const ClassLabel& c) {
  Permutation p(c.size());
  int start = 0;
  for (int len : c.cycle_type) {
    for (int k = 0; k < len; ++k) p[start + k] = start + (k + 1) % len;
    start += len;
  }
  return p;
}

int permutation_sign(const Permutation& p) {
  int sign = 1;
  for (int len : cycle_type(p).cycle_type)
    if (len % 2 == 0) sign = -sign;
  return sign;
}

}  // namespace ptorus
