#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "momentcone/errors.hpp"

namespace momentcone {

// Exact arbitrary-precision rational scalar. All chamber/cone/polytope
// computations run over this type; no floating point on the exact side.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatVec = Vector<Rational>;
using RatMat = Matrix<Rational>;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline Eigen::VectorXd to_double_vec(const RatVec& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

// Parses "3", "-4", "3/2", "-19/2". Whitespace around the token is ignored.
inline Rational parse_rational(const std::string& token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw parameter_error("empty rational literal");
  std::size_t pos = 0;
  auto digits = [&](bool sign_ok) {
    if (sign_ok && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (!digits(true)) throw parameter_error("bad rational literal: " + token);
  if (pos < s.size()) {
    if (s[pos] != '/' ) throw parameter_error("bad rational literal: " + token);
    std::size_t den_start = ++pos;
    if (!digits(false) || pos != s.size())
      throw parameter_error("bad rational literal: " + token);
    if (s.substr(den_start) == std::string(pos - den_start, '0'))
      throw parameter_error("zero denominator: " + token);
  }
  return Rational(s);
}

// Parses a comma-separated list of exact fractions, e.g. "3/2,1".
inline RatVec parse_rational_vector(const std::string& text) {
  std::vector<Rational> vals;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      vals.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  vals.push_back(parse_rational(cur));
  RatVec v(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) v[i] = vals[i];
  return v;
}

inline std::string str(const Rational& x) { return x.str(); }

inline std::string str(const RatVec& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  out += ")";
  return out;
}

inline RatVec rat_vec(std::initializer_list<Rational> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline RatVec unit_vec(Eigen::Index dim, Eigen::Index i, const Rational& scale = 1) {
  RatVec v = RatVec::Zero(dim);
  v[i] = scale;
  return v;
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

using RatVecSet = std::set<RatVec, RatVecLess>;

// Scales v by a positive rational so that all entries are coprime integers.
// Zero vectors are returned unchanged.
inline RatVec integer_primitive(const RatVec& v) {
  BigInt l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    l = lcm(l, denominator(v[i]));
  BigInt g = 0;
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[i] = v[i] * Rational(l);
    g = gcd(g, numerator(out[i]));
  }
  if (g == 0) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] /= Rational(g);
  return out;
}

}  // namespace momentcone
