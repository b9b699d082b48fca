#pragma once

#include <initializer_list>
#include <vector>

#include "hopf/binform.hpp"

namespace hopf_test {

/* integer form literal: bform(2, {0, 1, 0}) is s*t, coefficient k on s^k t^(d-k) */
inline hopf::BinaryForm bform(int degree, std::initializer_list<long long> coeffs) {
  std::vector<hopf::Rational> c;
  for (long long v : coeffs) c.emplace_back(v);
  return hopf::BinaryForm(degree, c);
}

inline hopf::Rational rat(long long n, long long d = 1) {
  return hopf::Rational(hopf::Int(n), hopf::Int(d));
}

inline hopf::ProjPoint pp(long long a, long long b) {
  return hopf::ProjPoint(hopf::Int(a), hopf::Int(b));
}

}  // namespace hopf_test
