#include "homlab/plane_type.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace homlab {

PlaneType::PlaneType(int d, std::vector<int> m) : degree(d), mults(std::move(m)) {
  std::sort(mults.begin(), mults.end(), std::greater<int>());
}

PlaneType PlaneType::stripped() const {
  PlaneType t;
  t.degree = degree;
  for (int m : mults)
    if (m != 0) t.mults.push_back(m);
  std::sort(t.mults.begin(), t.mults.end(), std::greater<int>());
  return t;
}

long long PlaneType::mult_sum() const {
  long long s = 0;
  for (int m : mults) s += m;
  return s;
}

long long PlaneType::mult_square_sum() const {
  long long s = 0;
  for (int m : mults) s += static_cast<long long>(m) * m;
  return s;
}

MultiplicitySet::MultiplicitySet(std::vector<int> m) : mults(std::move(m)) {
  for (int v : mults)
    if (v < 1) throw std::invalid_argument("MultiplicitySet: entries must be >= 1");
  std::sort(mults.begin(), mults.end(), std::greater<int>());
}

long long MultiplicitySet::sum() const {
  long long s = 0;
  for (int m : mults) s += m;
  return s;
}

long long MultiplicitySet::square_sum() const {
  long long s = 0;
  for (int m : mults) s += static_cast<long long>(m) * m;
  return s;
}

namespace {

int parse_int(const std::string& s, std::size_t& i, const char* what) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParseError(std::string("expected ") + what, start);
  long long v = 0;
  for (std::size_t k = start; k < i; ++k) {
    v = v * 10 + (s[k] - '0');
    if (v > 1'000'000) throw ParseError(std::string(what) + " out of range", start);
  }
  return static_cast<int>(v);
}

std::vector<int> parse_mult_list(const std::string& s, std::size_t& i) {
  std::vector<int> mults;
  while (i < s.size()) {
    int m = parse_int(s, i, "multiplicity");
    if (m < 1) throw ParseError("multiplicity must be >= 1", i);
    int rep = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      rep = parse_int(s, i, "exponent");
      if (rep < 1 || rep > 10'000) throw ParseError("exponent out of range", i);
    }
    for (int k = 0; k < rep; ++k) mults.push_back(m);
    if (i < s.size()) {
      if (s[i] != ',') throw ParseError("expected ','", i);
      ++i;
      if (i == s.size()) throw ParseError("trailing ','", i);
    }
  }
  return mults;
}

std::string format_mults(const std::vector<int>& mults) {
  std::string out;
  std::size_t i = 0;
  while (i < mults.size()) {
    std::size_t j = i;
    while (j < mults.size() && mults[j] == mults[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(mults[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

PlaneType parse_plane_type(const std::string& literal) {
  std::size_t i = 0;
  int d = parse_int(literal, i, "degree");
  if (d < 1) throw ParseError("degree must be >= 1", 0);
  if (i >= literal.size() || literal[i] != ';') throw ParseError("expected ';'", i);
  ++i;
  return PlaneType(d, parse_mult_list(literal, i));
}

std::string to_string(const PlaneType& t) {
  return std::to_string(t.degree) + ";" + format_mults(t.mults);
}

MultiplicitySet parse_multiplicity_set(const std::string& literal) {
  std::size_t i = 0;
  auto mults = parse_mult_list(literal, i);
  if (mults.empty()) throw ParseError("empty multiplicity set", 0);
  return MultiplicitySet(mults);
}

std::string to_string(const MultiplicitySet& m) { return format_mults(m.mults); }

}  // namespace homlab
