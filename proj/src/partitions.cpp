#include "ffc/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ffc/error.hpp"

namespace ffc::partitions {

namespace {

std::atomic<int> g_max_size{kDefaultMaxSize};

void check_ground(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    fail(ErrorKind::size_limit,
         "ground set size " + std::to_string(n) + " outside [1, " + std::to_string(kMaxGroundSize) + "]");
  }
}

void check_same_size(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) {
    fail(ErrorKind::dimension, "partitions of different ground sets (" + std::to_string(a.size()) + " vs " +
                                   std::to_string(b.size()) + ")");
  }
}

// Mixed-radix code of a type: digit i is r_i with radix n/i + 1.
std::uint64_t type_code(int n, std::span<const int> counts) {
  std::uint64_t code = 0;
  std::uint64_t radix = 1;
  for (int i = 1; i <= n; ++i) {
    code += radix * static_cast<std::uint64_t>(counts[static_cast<std::size_t>(i - 1)]);
    radix *= static_cast<std::uint64_t>(n / i + 1);
  }
  return code;
}

}  // namespace

void set_max_size(int n) {
  check_ground(n);
  g_max_size.store(n);
}

int max_size() { return g_max_size.load(); }

void check_size(int n) {
  const int cap = max_size();
  if (n < 1 || n > cap) {
    fail(ErrorKind::size_limit,
         "partition lattice size n=" + std::to_string(n) + " outside [1, n_max=" + std::to_string(cap) + "]");
  }
}

// Restricted-growth-string generator in lexicographic order.
class Enumerator {
 public:
  template <class Visit>
  static void run(int n, Visit&& visit) {
    SetPartition p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::array<std::uint8_t, kMaxGroundSize> prefix_max{};  // max label among positions < i
    p.blocks_ = 1;
    while (true) {
      visit(static_cast<const SetPartition&>(p));
      int i = n - 1;
      while (i > 0 && p.label_[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i)]) --i;
      if (i == 0) return;
      ++p.label_[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) {
        p.label_[static_cast<std::size_t>(j)] = 0;
        prefix_max[static_cast<std::size_t>(j)] =
            std::max(prefix_max[static_cast<std::size_t>(j - 1)], p.label_[static_cast<std::size_t>(j - 1)]);
      }
      std::uint8_t top = 0;
      for (int j = 0; j < n; ++j) top = std::max(top, p.label_[static_cast<std::size_t>(j)]);
      p.blocks_ = static_cast<std::uint8_t>(top + 1);
    }
  }

  static SetPartition make(std::span<const int> labels) {
    SetPartition p;
    p.n_ = static_cast<std::uint8_t>(labels.size());
    int top = -1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      p.label_[i] = static_cast<std::uint8_t>(labels[i]);
      top = std::max(top, labels[i]);
    }
    p.blocks_ = static_cast<std::uint8_t>(top + 1);
    return p;
  }
};

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  check_ground(static_cast<int>(labels.size()));
  int next = 0;
  for (int l : labels) {
    if (l < 0 || l > next) fail(ErrorKind::malformed, "labels are not a restricted growth string");
    if (l == next) ++next;
  }
  return Enumerator::make(labels);
}

SetPartition SetPartition::from_blocks(const std::vector<std::vector<int>>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  check_ground(n);
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (blocks[bi].empty()) fail(ErrorKind::malformed, "empty block in set partition");
    for (int e : blocks[bi]) {
      if (e < 1 || e > n) fail(ErrorKind::malformed, "element " + std::to_string(e) + " outside {1.." + std::to_string(n) + "}");
      if (owner[static_cast<std::size_t>(e - 1)] != -1) fail(ErrorKind::malformed, "element " + std::to_string(e) + " repeated");
      owner[static_cast<std::size_t>(e - 1)] = static_cast<int>(bi);
    }
  }
  // Relabel blocks by least element.
  std::vector<int> relabel(blocks.size(), -1);
  std::vector<int> labels(static_cast<std::size_t>(n));
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int& r = relabel[static_cast<std::size_t>(owner[static_cast<std::size_t>(i)])];
    if (r == -1) r = next++;
    labels[static_cast<std::size_t>(i)] = r;
  }
  return Enumerator::make(labels);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    fail(ErrorKind::malformed, "set partition must look like {1,3|2,4}");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<int>> blocks(1);
  std::string number;
  auto flush = [&] {
    if (number.empty()) fail(ErrorKind::malformed, "empty element in set partition text");
    try {
      blocks.back().push_back(std::stoi(number));
    } catch (const std::exception&) {
      fail(ErrorKind::malformed, "bad element '" + number + "' in set partition text");
    }
    number.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (c == '|') {
      flush();
      blocks.emplace_back();
    } else if (c >= '0' && c <= '9') {
      number.push_back(c);
    } else {
      fail(ErrorKind::malformed, std::string("unexpected character '") + c + "' in set partition text");
    }
  }
  flush();
  return from_blocks(blocks);
}

SetPartition SetPartition::singletons(int n) {
  check_ground(n);
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  return Enumerator::make(labels);
}

SetPartition SetPartition::one_block(int n) {
  check_ground(n);
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  return Enumerator::make(labels);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < n_; ++i) out[label_[static_cast<std::size_t>(i)]].push_back(i + 1);
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sizes(blocks_, 0);
  for (int i = 0; i < n_; ++i) ++sizes[label_[static_cast<std::size_t>(i)]];
  return sizes;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  const auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) os << '|';
    for (std::size_t k = 0; k < bs[b].size(); ++k) {
      if (k) os << ',';
      os << bs[b][k];
    }
  }
  os << '}';
  return os.str();
}

int PartitionType::block_count() const { return std::accumulate(counts.begin(), counts.end(), 0); }

std::vector<int> PartitionType::sizes() const {
  std::vector<int> out;
  for (int i = static_cast<int>(counts.size()); i >= 1; --i) {
    for (int k = 0; k < counts[static_cast<std::size_t>(i - 1)]; ++k) out.push_back(i);
  }
  return out;
}

std::string PartitionType::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto s = sizes();
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

PartitionType PartitionType::from_sizes(int n, std::span<const int> sizes) {
  PartitionType t;
  t.n = n;
  t.counts.assign(static_cast<std::size_t>(n), 0);
  int total = 0;
  for (int s : sizes) {
    if (s < 1 || s > n) fail(ErrorKind::malformed, "block size " + std::to_string(s) + " invalid for n=" + std::to_string(n));
    ++t.counts[static_cast<std::size_t>(s - 1)];
    total += s;
  }
  if (total != n) fail(ErrorKind::malformed, "block sizes do not sum to n=" + std::to_string(n));
  return t;
}

namespace {

void validate_type(const PartitionType& t) {
  if (t.n < 1 || static_cast<int>(t.counts.size()) != t.n) {
    fail(ErrorKind::malformed, "partition type must carry exactly n counts");
  }
  long total = 0;
  for (int i = 1; i <= t.n; ++i) {
    const int r = t.counts[static_cast<std::size_t>(i - 1)];
    if (r < 0) fail(ErrorKind::malformed, "negative block count in partition type");
    total += static_cast<long>(i) * r;
  }
  if (total != t.n) fail(ErrorKind::malformed, "partition type does not satisfy sum i*r_i = n");
}

// Stack test: the block of every revisited element must be the innermost
// open block.
template <class Labels>
bool noncrossing_labels(int n, const Labels& label) {
  std::array<int, kMaxGroundSize> last{};
  for (int i = 0; i < n; ++i) last[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] = i;
  std::array<int, kMaxGroundSize> seen{};
  seen.fill(0);
  std::array<int, kMaxGroundSize> stack{};
  int top = 0;
  for (int i = 0; i < n; ++i) {
    const int b = label[static_cast<std::size_t>(i)];
    if (seen[static_cast<std::size_t>(b)]) {
      if (top == 0 || stack[static_cast<std::size_t>(top - 1)] != b) return false;
    } else {
      seen[static_cast<std::size_t>(b)] = 1;
      if (last[static_cast<std::size_t>(b)] != i) stack[static_cast<std::size_t>(top++)] = b;
      continue;
    }
    if (last[static_cast<std::size_t>(b)] == i) --top;
  }
  return true;
}

std::int64_t mobius_of_sizes(std::span<const int> sizes) {
  std::int64_t mu = 1;
  for (int s : sizes) {
    std::int64_t f = 1;
    for (int k = 2; k < s; ++k) f *= k;
    mu *= (s % 2 == 1) ? f : -f;  // (-1)^{s-1} (s-1)!
  }
  return mu;
}

struct Table {
  std::vector<TypeClass> classes;
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::once_flag coarse_once;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> coarse;
};

std::array<std::once_flag, kMaxGroundSize + 1> g_table_once;
std::array<std::unique_ptr<Table>, kMaxGroundSize + 1> g_tables;

void build_table(int n, Table& table) {
  std::unordered_map<std::uint64_t, TypeClass> acc;
  std::vector<int> counts(static_cast<std::size_t>(n));
  std::array<int, kMaxGroundSize> sizes{};
  Enumerator::run(n, [&](const SetPartition& p) {
    sizes.fill(0);
    for (int i = 0; i < n; ++i) ++sizes[static_cast<std::size_t>(p.label(i))];
    std::fill(counts.begin(), counts.end(), 0);
    for (int b = 0; b < p.block_count(); ++b) ++counts[static_cast<std::size_t>(sizes[static_cast<std::size_t>(b)] - 1)];
    const std::uint64_t code = type_code(n, counts);
    auto [it, fresh] = acc.try_emplace(code);
    TypeClass& tc = it->second;
    if (fresh) {
      tc.type.n = n;
      tc.type.counts = counts;
      tc.mobius = mobius_of_sizes(std::span<const int>(sizes.data(), static_cast<std::size_t>(p.block_count())));
    }
    ++tc.count_all;
    std::array<int, kMaxGroundSize> labels{};
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = p.label(i);
    if (noncrossing_labels(n, labels)) ++tc.count_noncrossing;
  });
  for (auto& [code, tc] : acc) table.classes.push_back(std::move(tc));
  // Coarsest types first: 1_n leads, 0_n closes the list.
  std::sort(table.classes.begin(), table.classes.end(),
            [](const TypeClass& a, const TypeClass& b) { return a.type.sizes() > b.type.sizes(); });
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    table.index.emplace(type_code(n, table.classes[i].type.counts), i);
  }
}

Table& table_for(int n) {
  check_size(n);
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(g_table_once[slot], [&] {
    auto t = std::make_unique<Table>();
    build_table(n, *t);
    g_tables[slot] = std::move(t);
  });
  return *g_tables[slot];
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int n) {
  check_size(n);
  std::vector<SetPartition> out;
  Enumerator::run(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<SetPartition> enumerate_noncrossing(int n) {
  check_size(n);
  std::vector<SetPartition> out;
  Enumerator::run(n, [&](const SetPartition& p) {
    if (is_noncrossing(p)) out.push_back(p);
  });
  return out;
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  check_size(n);
  Enumerator::run(n, visit);
}

bool is_noncrossing(const SetPartition& p) {
  std::array<int, kMaxGroundSize> labels{};
  for (int i = 0; i < p.size(); ++i) labels[static_cast<std::size_t>(i)] = p.label(i);
  return noncrossing_labels(p.size(), labels);
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
  check_same_size(finer, coarser);
  std::array<int, kMaxGroundSize> image{};
  image.fill(-1);
  for (int i = 0; i < finer.size(); ++i) {
    int& img = image[static_cast<std::size_t>(finer.label(i))];
    if (img == -1) {
      img = coarser.label(i);
    } else if (img != coarser.label(i)) {
      return false;
    }
  }
  return true;
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  check_same_size(a, b);
  const int n = a.size();
  std::array<int, kMaxGroundSize> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite_blocks = [&](const SetPartition& p) {
    std::array<int, kMaxGroundSize> first{};
    first.fill(-1);
    for (int i = 0; i < n; ++i) {
      int& f = first[static_cast<std::size_t>(p.label(i))];
      if (f == -1) {
        f = i;
      } else {
        parent[static_cast<std::size_t>(find(i))] = find(f);
      }
    }
  };
  unite_blocks(a);
  unite_blocks(b);
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::array<int, kMaxGroundSize> relabel{};
  relabel.fill(-1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int& r = relabel[static_cast<std::size_t>(find(i))];
    if (r == -1) r = next++;
    labels[static_cast<std::size_t>(i)] = r;
  }
  return Enumerator::make(labels);
}

std::int64_t mobius_from_zero(const SetPartition& p) {
  const auto sizes = p.block_sizes();
  return mobius_of_sizes(sizes);
}

std::int64_t mobius_from_zero(const PartitionType& t) {
  validate_type(t);
  const auto sizes = t.sizes();
  return mobius_of_sizes(sizes);
}

std::int64_t mobius_to_one(const SetPartition& p) {
  std::int64_t f = 1;
  for (int k = 2; k < p.block_count(); ++k) f *= k;
  return (p.block_count() % 2 == 1) ? f : -f;
}

PartitionType partition_type(const SetPartition& p) {
  const auto sizes = p.block_sizes();
  return PartitionType::from_sizes(p.size(), sizes);
}

Integer count_by_type(const PartitionType& t, Lattice lattice) {
  validate_type(t);
  Integer p_r = 1;
  for (int r : t.counts) p_r *= factorial(static_cast<unsigned>(r));
  const Integer n_fact = factorial(static_cast<unsigned>(t.n));
  if (lattice == Lattice::noncrossing) {
    const int m = t.block_count();
    return n_fact / (p_r * factorial(static_cast<unsigned>(t.n - m + 1)));
  }
  Integer denom = p_r;
  for (int i = 1; i <= t.n; ++i) {
    Integer fi = factorial(static_cast<unsigned>(i));
    for (int k = 0; k < t.counts[static_cast<std::size_t>(i - 1)]; ++k) denom *= fi;
  }
  return n_fact / denom;
}

Rational multiplicative_extension(std::span<const Rational> f, const SetPartition& p) {
  Rational r = 1;
  for (int s : p.block_sizes()) {
    if (static_cast<std::size_t>(s) > f.size()) {
      fail(ErrorKind::index, "sequence of length " + std::to_string(f.size()) + " has no entry for block size " +
                                 std::to_string(s));
    }
    r *= f[static_cast<std::size_t>(s - 1)];
  }
  return r;
}

Rational multiplicative_extension(std::span<const Rational> f, const PartitionType& t) {
  Rational r = 1;
  for (int i = 1; i <= static_cast<int>(t.counts.size()); ++i) {
    const int reps = t.counts[static_cast<std::size_t>(i - 1)];
    if (reps == 0) continue;
    if (static_cast<std::size_t>(i) > f.size()) {
      fail(ErrorKind::index, "sequence of length " + std::to_string(f.size()) + " has no entry for block size " +
                                 std::to_string(i));
    }
    r *= pow(f[static_cast<std::size_t>(i - 1)], reps);
  }
  return r;
}

std::uint64_t block_size_product(const SetPartition& p) {
  std::uint64_t r = 1;
  for (int s : p.block_sizes()) r *= static_cast<std::uint64_t>(s);
  return r;
}

VarPoly partition_lattice_charpoly(int n) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (const auto& tc : type_classes(n)) {
    coeffs[static_cast<std::size_t>(tc.type.block_count())] +=
        Rational(static_cast<long>(tc.count_all)) * Rational(static_cast<long>(tc.mobius));
  }
  return VarPoly(std::move(coeffs));
}

const std::vector<TypeClass>& type_classes(int n) { return table_for(n).classes; }

std::size_t type_index(const PartitionType& t) {
  validate_type(t);
  const Table& table = table_for(t.n);
  return table.index.at(type_code(t.n, t.counts));
}

const std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>>& coarsenings(int n) {
  Table& table = table_for(n);
  std::call_once(table.coarse_once, [&] {
    table.coarse.resize(table.classes.size());
    std::vector<int> counts(static_cast<std::size_t>(n));
    std::array<int, kMaxGroundSize> merged{};
    for (std::size_t s = 0; s < table.classes.size(); ++s) {
      const auto sizes = table.classes[s].type.sizes();
      const int m = static_cast<int>(sizes.size());
      std::map<std::size_t, std::uint64_t> hist;
      // pi >= sigma  <=>  pi is a partition of sigma's blocks.
      Enumerator::run(m, [&](const SetPartition& merge) {
        merged.fill(0);
        for (int b = 0; b < m; ++b) merged[static_cast<std::size_t>(merge.label(b))] += sizes[static_cast<std::size_t>(b)];
        std::fill(counts.begin(), counts.end(), 0);
        for (int b = 0; b < merge.block_count(); ++b) ++counts[static_cast<std::size_t>(merged[static_cast<std::size_t>(b)] - 1)];
        ++hist[table.index.at(type_code(n, counts))];
      });
      table.coarse[s].assign(hist.begin(), hist.end());
    }
  });
  return table.coarse;
}

}  // namespace ffc::partitions
