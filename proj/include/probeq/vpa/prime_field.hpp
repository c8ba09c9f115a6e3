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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "probeq/error.hpp"
#include "probeq/numerics/rational.hpp"
#include "probeq/numerics/rng.hpp"

namespace probeq {

/// Z/p for a prime p < 2^63.
class Field64 {
 public:
  using Elem = std::uint64_t;
  explicit Field64(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
  }
  bool is_zero(Elem a) const { return a == 0; }
  /// Residue of a rational; throws kBadPrime when p divides the denominator.
  Elem from_rational(const Rational& r) const;
  std::string str(Elem a) const { return std::to_string(a); }
  std::string modulus_str() const { return std::to_string(p_); }

 private:
  std::uint64_t p_;
};

/// Z/p for an arbitrary-size prime p.
class FieldBig {
 public:
  using Elem = mpz_class;
  explicit FieldBig(mpz_class p) : p_(std::move(p)) {}

  const mpz_class& modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const {
    Elem s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem s = a - b;
    if (s < 0) s += p_;
    return s;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem s = a * b;
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), p_.get_mpz_t());
    return s;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem from_rational(const Rational& r) const;
  std::string str(const Elem& a) const { return a.get_str(); }
  std::string modulus_str() const { return p_.get_str(); }

 private:
  mpz_class p_;
};

/// Uniform random integer in [2^bits, 2^(bits+1)).
mpz_class random_in_dyadic_range(std::size_t bits, Rng& rng);
/// Samples uniformly from [2^bits, 2^(bits+1)) until a probable prime is hit
/// (Miller–Rabin, 64 rounds).
mpz_class sample_prime(std::size_t bits, Rng& rng);

/// Largest `bits` for which Field64 can hold primes from [2^bits, 2^(bits+1)).
inline constexpr std::size_t kField64MaxBits = 62;

/// Prime size making a non-zero integer of at most `numerator_bits` bits
/// survive one random prime with probability ≥ 1/2: such an integer has at
/// most numerator_bits/b prime factors ≥ 2^b, while the range holds at least
/// 2^b/(2b) primes.
std::size_t prime_bits_for(long double numerator_bits);

struct ModularTrials {
  bool equal = true;
  std::size_t trials_run = 0;
  std::size_t bad_primes = 0;
  std::size_t prime_bits = 0;
  std::string distinguishing_prime;
};

/// Runs `trials` independent prime trials. `compare(field)` returns whether
/// the two sides agree modulo the field's prime; kBadPrime from it causes a
/// resample that does not count as a trial.
template <class Compare>
ModularTrials run_prime_trials(std::size_t bits, std::size_t trials, std::uint64_t seed,
                               Compare&& compare) {
  ModularTrials out;
  out.prime_bits = bits;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::derive(seed, streams::kPrime, t);
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt > 1000) throw Error(ErrorCode::kBadPrime, "no usable prime found");
      const mpz_class p = sample_prime(bits, rng);
      try {
        bool same;
        if (bits <= kField64MaxBits) {
          same = compare(Field64(p.get_ui()));
        } else {
          same = compare(FieldBig(p));
        }
        ++out.trials_run;
        if (!same) {
          out.equal = false;
          out.distinguishing_prime = p.get_str();
          return out;
        }
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBadPrime) throw;
        ++out.bad_primes;
      }
    }
  }
  return out;
}

}  // namespace probeq
