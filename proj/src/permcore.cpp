#include "typeb/permcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace typeb::perm {

namespace {

int initial_bound() {
  if (const char* env = std::getenv("TYPEB_ENUM_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 12) {
      return static_cast<int>(v);
    }
  }
  return 8;
}

int& bound_storage() {
  static int bound = initial_bound();
  return bound;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<SignedValue> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (const auto& v : image_) {
    if (v.value < 1 || v.value > size() || seen[v.value]) {
      throw DomainError("absolute values do not form a permutation");
    }
    seen[v.value] = true;
  }
}

SignedPermutation SignedPermutation::from_signed(
    const std::vector<int>& one_line) {
  std::vector<SignedValue> image;
  image.reserve(one_line.size());
  for (int v : one_line) image.push_back({std::abs(v), v < 0});
  return SignedPermutation(std::move(image));
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<SignedValue> image;
  for (int i = 1; i <= n; ++i) image.push_back({i, false});
  return SignedPermutation(std::move(image));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) os << ' ';
    os << (image_[i].barred ? "-" : "") << image_[i].value;
  }
  return os.str();
}

bool Cycle::all_barred() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const SignedValue& v) { return v.barred; });
}

bool Cycle::contains_special(int r) const {
  return !entries.empty() && entries.front().value <= r;
}

std::string CycleDecomposition::to_string() const {
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      if (i) os << ' ';
      os << (c.entries[i].barred ? "-" : "") << c.entries[i].value;
    }
    os << ')';
  }
  return os.str();
}

CycleDecomposition cycle_decompose(const SignedPermutation& sigma) {
  const int n = sigma.size();
  CycleDecomposition out;
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    // The start is reached from the last element of its cycle; its bar is
    // the bar of that image.
    int x = start;
    do {
      seen[x] = true;
      cycle.entries.push_back({x, false});
      x = sigma(x).value;
    } while (x != start);
    for (std::size_t i = 0; i < cycle.entries.size(); ++i) {
      const int pred = cycle.entries[(i + cycle.entries.size() - 1) %
                                     cycle.entries.size()].value;
      cycle.entries[i].barred = sigma(pred).barred;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

SignedPermutation from_cycles(const CycleDecomposition& cycles) {
  int n = 0;
  for (const auto& c : cycles.cycles) n += c.ord();
  std::vector<SignedValue> image(n);
  for (const auto& c : cycles.cycles) {
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const SignedValue& next = c.entries[(i + 1) % c.entries.size()];
      const int at = c.entries[i].value;
      if (at < 1 || at > n) throw DomainError("cycle value out of range");
      image[at - 1] = next;
    }
  }
  return SignedPermutation(std::move(image));
}

bool is_derangement_B(const SignedPermutation& sigma) {
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma(i).value == i && !sigma(i).barred) return false;
  }
  return true;
}

std::string to_string(Mode mode) {
  return mode == Mode::assoc ? "assoc" : "restr";
}

Mode mode_from_string(const std::string& s) {
  if (s == "assoc") return Mode::assoc;
  if (s == "restr") return Mode::restr;
  throw DomainError("unknown mode '" + s + "' (expected assoc or restr)");
}

bool window_ok(const Cycle& cycle, Mode mode, int m) {
  const bool in_window =
      mode == Mode::assoc ? cycle.ord() >= m : cycle.ord() <= m;
  return in_window || cycle.all_barred();
}

bool specials_separated(const CycleDecomposition& cycles, int r) {
  for (const auto& c : cycles.cycles) {
    int specials = 0;
    for (const auto& e : c.entries) specials += e.value <= r ? 1 : 0;
    if (specials > 1) return false;
  }
  return true;
}

int enumeration_bound() { return bound_storage(); }

void set_enumeration_bound(int bound) {
  if (bound < 0) throw DomainError("enumeration bound must be nonnegative");
  bound_storage() = bound;
}

void check_enumeration_size(int size) {
  if (size < 0) throw DomainError("enumeration size must be nonnegative");
  if (size > enumeration_bound()) {
    throw ResourceGuardError(
        "enumeration over signed permutations of [" + std::to_string(size) +
        "] exceeds the bound n+r <= " + std::to_string(enumeration_bound()) +
        " (raise with --enum-bound or TYPEB_ENUM_BOUND)");
  }
}

void enumerate_signed(
    int n, const std::function<void(const SignedPermutation&)>& visit) {
  check_enumeration_size(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<SignedValue> image(n);
      for (int i = 0; i < n; ++i) image[i] = {perm[i], ((mask >> i) & 1u) != 0};
      visit(SignedPermutation(std::move(image)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace {

// Counts for all signed permutations whose underlying permutation has
// perm[0] == first. Positions are 0-based; bit i of a sign mask bars the
// image of i, which bars the entry perm[i] inside its cycle.
std::vector<std::uint64_t> count_partition(int size, int r, Mode mode, int m,
                                           int first) {
  std::vector<std::uint64_t> by_cycles(size + 1, 0);
  std::vector<int> rest;
  for (int v = 0; v < size; ++v) {
    if (v != first) rest.push_back(v);
  }
  std::vector<int> perm(size);
  std::vector<std::uint32_t> cycle_masks;
  std::vector<int> cycle_lengths;
  std::vector<bool> seen(size);
  do {
    perm[0] = first;
    std::copy(rest.begin(), rest.end(), perm.begin() + 1);
    cycle_masks.clear();
    cycle_lengths.clear();
    std::fill(seen.begin(), seen.end(), false);
    bool separated = true;
    for (int s = 0; s < size && separated; ++s) {
      if (seen[s]) continue;
      std::uint32_t entry_mask = 0;  // bits of the images, i.e. of the bars
      int len = 0;
      int specials = 0;
      int x = s;
      do {
        seen[x] = true;
        entry_mask |= 1u << x;
        specials += x < r ? 1 : 0;
        ++len;
        x = perm[x];
      } while (x != s);
      separated = specials <= 1;
      cycle_masks.push_back(entry_mask);
      cycle_lengths.push_back(len);
    }
    if (!separated) continue;
    const int cycles = static_cast<int>(cycle_masks.size());
    if (cycles < r) continue;
    // Cycles that fail the window must be entirely barred.
    std::uint32_t forced = 0;
    for (int c = 0; c < cycles; ++c) {
      const bool in_window = mode == Mode::assoc ? cycle_lengths[c] >= m
                                                 : cycle_lengths[c] <= m;
      if (!in_window) forced |= cycle_masks[c];
    }
    for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
      if ((mask & forced) == forced) ++by_cycles[cycles];
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return by_cycles;
}

using RowKey = std::tuple<int, int, int, int>;

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<RowKey, std::vector<ExactInt>>& row_cache() {
  static std::map<RowKey, std::vector<ExactInt>> cache;
  return cache;
}

}  // namespace

std::vector<ExactInt> oracle_row(int n, int r, Mode mode, int m) {
  if (n < 0 || r < 0) throw DomainError("oracle needs n, r >= 0");
  const int size = n + r;
  check_enumeration_size(size);
  const RowKey key{n, r, static_cast<int>(mode), m};
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = row_cache().find(key); it != row_cache().end()) {
      return it->second;
    }
  }
  std::vector<std::uint64_t> by_cycles(size + 1, 0);
  if (size == 0) {
    by_cycles[0] = 1;
  } else {
    // Partition by the image of the first element; partitions are independent.
    std::vector<std::future<std::vector<std::uint64_t>>> parts;
    for (int first = 0; first < size; ++first) {
      parts.push_back(std::async(size >= 7 ? std::launch::async
                                           : std::launch::deferred,
                                 count_partition, size, r, mode, m, first));
    }
    for (auto& part : parts) {
      const auto counts = part.get();
      for (int c = 0; c <= size; ++c) by_cycles[c] += counts[c];
    }
  }
  std::vector<ExactInt> row(n + 1, ExactInt(0));
  for (int k = 0; k <= n; ++k) {
    row[k] = static_cast<unsigned long>(by_cycles[k + r]);
  }
  std::lock_guard lock(cache_mutex());
  row_cache().emplace(key, row);
  return row;
}

ExactInt oracle_triangle(int n, int r, int k, Mode mode, int m) {
  if (k < 0 || k > n) {
    check_enumeration_size(n + r);
    return 0;
  }
  return oracle_row(n, r, mode, m)[k];
}

ExactInt oracle_total(int n, int r, Mode mode, int m) {
  ExactInt total = 0;
  for (const auto& v : oracle_row(n, r, mode, m)) total += v;
  return total;
}

std::vector<ExactInt> oracle_row_reference(int n, int r, Mode mode, int m) {
  std::vector<ExactInt> row(n + 1, ExactInt(0));
  enumerate_signed(n + r, [&](const SignedPermutation& sigma) {
    const CycleDecomposition d = cycle_decompose(sigma);
    if (!specials_separated(d, r)) return;
    for (const auto& c : d.cycles) {
      if (!window_ok(c, mode, m)) return;
    }
    const long k = static_cast<long>(d.count()) - r;
    if (k >= 0 && k <= n) row[k] += 1;
  });
  return row;
}

}  // namespace typeb::perm
