#include "klcells/lambda.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klcells {

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& s) {
  auto parse_int = [&](const std::string& t) -> std::int64_t {
    if (t.empty()) throw std::invalid_argument("empty number in '" + s + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    if (pos != t.size()) throw std::invalid_argument("not a rational number: '" + s + "'");
    return v;
  };
  auto slash = s.find('/');
  std::int64_t p = parse_int(s.substr(0, slash));
  std::int64_t q = slash == std::string::npos ? 1 : parse_int(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  if (q < 0) p = -p, q = -q;
  std::int64_t g = std::gcd(p, q);
  return {p / g, q / g};
}

std::string fraction_string(std::int64_t p, std::int64_t q) {
  std::int64_t g = std::gcd(p, q);
  if (g > 1) p /= g, q /= g;
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

Lambda::Lambda(const RootDatum& d, const Vec& num, std::int64_t den) : dim_(d.dim()), tag_(d.tag()) {
  if (den <= 0) throw std::invalid_argument("Lambda: denominator must be positive");
  std::int64_t g = den;
  for (int i = 0; i < dim_; ++i) {
    num_[i] = pos_mod(num[i], den);
    g = std::gcd(g, num_[i]);
  }
  for (int i = 0; i < dim_; ++i) num_[i] /= g;
  den_ = den / g;
}

Lambda Lambda::parse(const RootDatum& d, const std::vector<std::string>& coords, const std::string& tau) {
  const int r = d.rank();
  std::vector<std::pair<std::int64_t, std::int64_t>> fr;
  if (coords.size() == 1 && r > 1 && parse_fraction(coords[0]).first == 0) {
    fr.assign(r, {0, 1});
  } else {
    if (static_cast<int>(coords.size()) != r)
      throw std::invalid_argument("lambda needs " + std::to_string(r) + " coordinates, got " +
                                  std::to_string(coords.size()));
    for (const auto& c : coords) fr.push_back(parse_fraction(c));
  }
  auto t = parse_fraction(tau);
  if (d.case_flag() == CaseFlag::A && t.first != 0) throw std::invalid_argument("tau must be 0 in case A");
  if (d.case_flag() == CaseFlag::B) fr.push_back(t);
  std::int64_t den = 1;
  for (auto [p, q] : fr) den = std::lcm(den, q);
  Vec num{};
  for (std::size_t i = 0; i < fr.size(); ++i) num[i] = fr[i].first * (den / fr[i].second);
  return Lambda(d, num, den);
}

std::int64_t Lambda::pair_num(const Vec& y) const { return pos_mod(dot(y, num_, dim_), den_); }

std::pair<std::int64_t, std::int64_t> Lambda::tau(const RootDatum& d) const {
  if (d.case_flag() == CaseFlag::A) return {0, 1};
  std::int64_t p = num_[d.rank()];
  std::int64_t g = std::gcd(p, den_);
  return {p / g, den_ / g};
}

std::vector<std::string> Lambda::coordinate_strings() const {
  std::vector<std::string> out;
  for (int i = 0; i < dim_; ++i) out.push_back(fraction_string(num_[i], den_));
  return out;
}

std::string Lambda::to_string() const {
  std::ostringstream out;
  out << "(";
  auto cs = coordinate_strings();
  for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << cs[i];
  out << ")";
  return out.str();
}

Lambda act(const WeylElement& w, const Lambda& lambda) {
  if (w.tag() != lambda.tag()) throw std::invalid_argument("act: element and point belong to different root data");
  Vec y = w.act_vprime(lambda.num_);
  Lambda out = lambda;
  // w is unimodular, so the reduced denominator is unchanged.
  for (int i = 0; i < lambda.dim_; ++i) out.num_[i] = pos_mod(y[i], lambda.den_);
  return out;
}

}  // namespace klcells
