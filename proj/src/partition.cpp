#include "cochar/partition.hpp"

#include <numeric>
#include <sstream>

#include "cochar/errors.hpp"

namespace cochar {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw argument_error("negative partition part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw argument_error("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 0) throw argument_error("negative part index");
  return i < length() ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j)
    for (int i = 0; i < length(); ++i)
      if (parts_[i] > j) ++conj[j];
  return Partition(std::move(conj));
}

Int Partition::hook_dimension() const {
  Int hooks = 1;
  Partition conj = conjugate();
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j)
      hooks *= parts_[i] - j + conj.part(j) - i - 1;
  return factorial(size()) / hooks;
}

ExpKey Partition::t_key(int d) const {
  if (length() > d)
    throw dimension_error("partition has more than " + std::to_string(d) +
                          " parts");
  std::vector<int> exps(d, 0);
  for (int i = 0; i < length(); ++i) exps[i] = parts_[i];
  return key_from(exps);
}

ExpKey Partition::v_key(int d) const {
  if (length() > d)
    throw dimension_error("partition has more than " + std::to_string(d) +
                          " parts");
  std::vector<int> exps(d, 0);
  for (int i = 0; i < d; ++i) exps[i] = part(i) - part(i + 1);
  return key_from(exps);
}

Partition Partition::from_t_key(ExpKey k, int d) {
  return Partition(key_to_vector(k, d));
}

Partition Partition::from_v_key(ExpKey k, int d) {
  std::vector<int> parts(d, 0);
  int acc = 0;
  for (int i = d - 1; i >= 0; --i) {
    acc += key_get(k, i);
    parts[i] = acc;
  }
  return Partition(std::move(parts));
}

bool Partition::operator<(const Partition& o) const {
  int sa = size(), sb = o.size();
  if (sa != sb) return sa < sb;
  return o.parts_ < parts_;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream out;
  for (int i = 0; i < length(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  return out.str();
}

namespace {

void enumerate_rec(int n, int max_parts, int max_part, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (max_parts == 0) return;
  for (int first = std::min(n, max_part); first >= 1; --first) {
    cur.push_back(first);
    enumerate_rec(n - first, max_parts - 1, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_parts) {
  if (n < 0) throw argument_error("negative partition size");
  if (max_parts < 0) throw argument_error("negative part bound");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(n, max_parts, n, cur, out);
  return out;
}

}  // namespace cochar
