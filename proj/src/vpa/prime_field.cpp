// Copyright 2026 The probeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "probeq/vpa/prime_field.hpp"

#include <algorithm>
#include <cmath>

namespace probeq {

Field64::Elem Field64::from_rational(const Rational& r) const {
  const mpz_class m(static_cast<unsigned long>(p_));
  mpz_class num = r.numerator() % m, den = r.denominator() % m;
  if (num < 0) num += m;
  if (den == 0) throw Error(ErrorCode::kBadPrime, "prime " + std::to_string(p_) + " divides a denominator");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class v = num * inv % m;
  return static_cast<Elem>(v.get_ui());
}

FieldBig::Elem FieldBig::from_rational(const Rational& r) const {
  mpz_class num = r.numerator() % p_, den = r.denominator() % p_;
  if (num < 0) num += p_;
  if (den == 0) throw Error(ErrorCode::kBadPrime, "prime divides a denominator");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
  return num * inv % p_;
}

mpz_class random_in_dyadic_range(std::size_t bits, Rng& rng) {
  mpz_class x = 0;
  std::size_t filled = 0;
  while (filled < bits) {
    const std::size_t take = std::min<std::size_t>(64, bits - filled);
    std::uint64_t word = rng.next();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    mpz_class w;
    mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    x <<= take;
    x += w;
    filled += take;
  }
  mpz_class top = 1;
  top <<= bits;
  return top + x;
}

mpz_class sample_prime(std::size_t bits, Rng& rng) {
  for (;;) {
    mpz_class x = random_in_dyadic_range(bits, rng);
    if (mpz_probab_prime_p(x.get_mpz_t(), 64) > 0) return x;
  }
}

std::size_t prime_bits_for(long double numerator_bits) {
  if (!(numerator_bits >= 1)) numerator_bits = 1;
  const long double need = std::ceil(std::log2(numerator_bits)) + 6;
  return std::max<std::size_t>(kField64MaxBits, static_cast<std::size_t>(need));
}

}  // namespace probeq
