#include "homlab/hudson.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace homlab {

bool is_homaloidal(const PlaneType& t) {
  for (int m : t.mults)
    if (m < 0) return false;
  return t.degree >= 1 && t.mult_sum() == 3LL * t.degree - 3 &&
         t.mult_square_sum() == static_cast<long long>(t.degree) * t.degree - 1;
}

std::optional<int> is_sub_homaloidal(const MultiplicitySet& m) {
  long long sum = m.sum();
  if (sum < 3 || sum % 3 != 0) return std::nullopt;
  long long s = sum / 3 + 1;
  if (m.square_sum() != s * (s - 1)) return std::nullopt;
  return static_cast<int>(s);
}

bool is_exceptional(const PlaneType& t) {
  for (int m : t.mults)
    if (m < 0) return false;
  return t.mult_sum() == 3LL * t.degree - 1 &&
         t.mult_square_sum() == static_cast<long long>(t.degree) * t.degree + 1;
}

PlaneType doubled(const MultiplicitySet& m) {
  auto s = is_sub_homaloidal(m);
  if (!s) throw std::invalid_argument("doubled: input is not sub-homaloidal");
  std::vector<int> dm(m.mults);
  for (int& v : dm) v *= 2;
  return PlaneType(2 * *s - 1, std::move(dm));
}

std::optional<MultiplicitySet> halved(const PlaneType& t) {
  if (t.degree % 2 == 0) return std::nullopt;
  std::vector<int> half;
  for (int m : t.mults) {
    if (m == 0) continue;
    if (m < 0 || m % 2 != 0) return std::nullopt;
    half.push_back(m / 2);
  }
  return MultiplicitySet(std::move(half));
}

PlaneType quadratic_transform(const PlaneType& t) {
  std::vector<int> m = t.mults;
  while (m.size() < 3) m.push_back(0);
  int d = t.degree;
  int m1 = m[0], m2 = m[1], m3 = m[2];
  m[0] = d - m2 - m3;
  m[1] = d - m1 - m3;
  m[2] = d - m1 - m2;
  PlaneType out;
  out.degree = 2 * d - m1 - m2 - m3;
  out.mults = std::move(m);
  std::sort(out.mults.begin(), out.mults.end(), std::greater<int>());
  return out;
}

namespace {

bool has_negative(const PlaneType& t) {
  return !t.mults.empty() && t.mults.back() < 0;
}

bool all_zero(const PlaneType& t) {
  for (int m : t.mults)
    if (m != 0) return false;
  return true;
}

TransformChain run_chain(const PlaneType& start,
                         const std::function<bool(const PlaneType&)>& is_terminal,
                         int step_bound) {
  TransformChain chain;
  chain.steps.push_back(start);
  PlaneType cur = start;
  while (true) {
    if (is_terminal(cur)) {
      chain.proper = true;
      return chain;
    }
    if (static_cast<int>(chain.steps.size()) > step_bound) {
      chain.reason = "chain exceeded the step bound without terminating";
      return chain;
    }
    PlaneType next = quadratic_transform(cur);
    chain.steps.push_back(next);
    if (is_terminal(next)) {
      chain.proper = true;
      return chain;
    }
    if (has_negative(next)) {
      chain.reason = "negative multiplicity at " + to_string(next.stripped());
      return chain;
    }
    if (next.degree <= 0) {
      chain.reason = "non-positive degree at " + to_string(next.stripped());
      return chain;
    }
    if (next.degree >= cur.degree) {
      chain.reason = "degree did not decrease at " + to_string(next.stripped());
      return chain;
    }
    cur = std::move(next);
  }
}

}  // namespace

TransformChain hudson_test(const PlaneType& t) {
  if (!is_homaloidal(t)) throw std::invalid_argument("hudson_test: input is not homaloidal");
  auto terminal = [](const PlaneType& x) { return x.degree == 1 && all_zero(x); };
  return run_chain(t, terminal, t.degree + 1);
}

TransformChain exceptional_proper_test(const PlaneType& t) {
  if (!is_exceptional(t))
    throw std::invalid_argument("exceptional_proper_test: input is not exceptional");
  auto terminal = [](const PlaneType& x) {
    if (x.degree != 0) return false;
    int negs = 0;
    for (int m : x.mults) {
      if (m == -1) ++negs;
      else if (m != 0) return false;
    }
    return negs == 1;
  };
  return run_chain(t, terminal, t.degree + 2);
}

namespace {

void enumerate_two_moment(long long sum, long long sq, int cap,
                          std::vector<int>& prefix,
                          std::vector<std::vector<int>>& out) {
  if (sum == 0) {
    if (sq == 0) out.push_back(prefix);
    return;
  }
  int hi = static_cast<int>(std::min<long long>(cap, sum));
  for (int m = hi; m >= 1; --m) {
    long long m2 = static_cast<long long>(m) * m;
    if (m2 > sq) continue;
    long long rs = sum - m, rq = sq - m2;
    // parts <= m: square sum between rs (all ones) and m*rs
    if (rq < rs || rq > static_cast<long long>(m) * rs) continue;
    prefix.push_back(m);
    enumerate_two_moment(rs, rq, m, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PlaneType> enumerate_homaloidal(int d, bool proper_only, int max_degree) {
  if (d < 2 || d > max_degree)
    throw std::out_of_range("enumerate_homaloidal: degree out of range [2, " +
                            std::to_string(max_degree) + "]");
  std::vector<std::vector<int>> vecs;
  std::vector<int> prefix;
  enumerate_two_moment(3LL * d - 3, static_cast<long long>(d) * d - 1, d - 1, prefix, vecs);
  std::vector<PlaneType> out;
  out.reserve(vecs.size());
  for (auto& v : vecs) {
    PlaneType t(d, std::move(v));
    if (proper_only && !hudson_test(t).proper) continue;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<MultiplicitySet> enumerate_sub_homaloidal(int s) {
  if (s < 2) throw std::out_of_range("enumerate_sub_homaloidal: s must be >= 2");
  std::vector<std::vector<int>> vecs;
  std::vector<int> prefix;
  enumerate_two_moment(3LL * (s - 1), static_cast<long long>(s) * (s - 1), s - 1, prefix, vecs);
  std::vector<MultiplicitySet> out;
  out.reserve(vecs.size());
  for (auto& v : vecs) out.emplace_back(std::move(v));
  return out;
}

namespace {

std::vector<int> family_mults(int head, std::initializer_list<std::pair<int, int>> tail) {
  std::vector<int> m{head};
  for (auto [value, count] : tail)
    for (int i = 0; i < count; ++i) m.push_back(value);
  return m;
}

}  // namespace

std::vector<PlaneType> classify_family(int d, int gap) {
  std::vector<PlaneType> out;
  switch (gap) {
    case 1:
      if (d < 2) throw std::invalid_argument("classify_family: gap 1 needs d >= 2");
      out.emplace_back(d, family_mults(d - 1, {{1, 2 * d - 2}}));
      break;
    case 2:
      if (d < 4) throw std::invalid_argument("classify_family: gap 2 needs d >= 4");
      out.emplace_back(d, family_mults(d - 2, {{2, d - 2}, {1, 3}}));
      break;
    case 3: {
      if (d < 6) throw std::invalid_argument("classify_family: gap 3 needs d >= 6");
      int t = d / 3;
      switch (d % 3) {
        case 0:
          out.emplace_back(d, family_mults(d - 3, {{3, 2 * t - 2}, {2, 1}, {1, 4}}));
          out.emplace_back(d, family_mults(d - 3, {{3, 2 * t - 3}, {2, 4}, {1, 1}}));
          break;
        case 1:
          out.emplace_back(d, family_mults(d - 3, {{3, 2 * t - 1}, {1, 5}}));
          out.emplace_back(d, family_mults(d - 3, {{3, 2 * t - 2}, {2, 3}, {1, 2}}));
          break;
        case 2:
          out.emplace_back(d, family_mults(d - 3, {{3, 2 * t - 1}, {2, 2}, {1, 3}}));
          out.emplace_back(d, family_mults(d - 3, {{3, 2 * t - 2}, {2, 5}}));
          break;
      }
      break;
    }
    case 4: {
      if (d < 7) throw std::invalid_argument("classify_family: gap 4 needs d >= 7");
      if (d == 7) out.emplace_back(d, family_mults(3, {{3, 3}, {2, 3}}));
      if (d == 8) out.emplace_back(d, family_mults(4, {{3, 5}, {1, 2}}));
      if (d == 10) out.emplace_back(d, family_mults(6, {{3, 7}}));
      if (d >= 8 && d % 2 == 0)
        out.emplace_back(d, family_mults(d - 4, {{4, (d - 4) / 2}, {2, 3}, {1, 3}}));
      if (d >= 9 && d % 4 == 1)
        out.emplace_back(d, family_mults(d - 4, {{4, (d - 3) / 2}, {1, 7}}));
      if (d >= 9 && d % 2 == 1)
        out.emplace_back(d, family_mults(d - 4, {{4, (d - 7) / 2}, {3, 3}, {2, 3}}));
      // mixed 3s and 4s: only the chains that bottom out at an even count of
      // 4-entries descend to a proper type
      for (int r3 : {1, 3, 5})
        if (d % 2 == 0 && d >= r3 + 7 && (d - r3 - 3) % 4 == 0)
          out.emplace_back(d,
                           family_mults(d - 4, {{4, (d - r3 - 3) / 2}, {3, r3}, {1, 7 - r3}}));
      break;
    }
    default:
      throw std::invalid_argument("classify_family: gap must be 1, 2, 3 or 4");
  }
  std::sort(out.begin(), out.end(), [](const PlaneType& a, const PlaneType& b) {
    return a.mults > b.mults;  // lexicographically decreasing
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace homlab
