// Copyright 2026 The ssevault Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <vector>

#include "ssevault/bytes.hpp"
#include "ssevault/rng.hpp"

namespace ssevault {

// Public parameters of the discrete-log chameleon hash: a safe subgroup
// setup with p = kq + 1, g of prime order q, and y = g^xi mod p.
struct ChameleonParams {
  mpz_class p, q, g, y;

  bool operator==(const ChameleonParams&) const = default;
};

struct ChameleonTrapdoor {
  mpz_class xi;
};

struct ChameleonKeyPair {
  ChameleonParams params;
  ChameleonTrapdoor trapdoor;
};

ChameleonKeyPair ch_setup(unsigned lambda_q, unsigned lambda_p, DetRng& rng);

// H(x, r) = g^x * y^r mod p. Inputs are reduced mod q.
mpz_class ch_hash(const ChameleonParams& params, const mpz_class& x, const mpz_class& r);

// Given (x, r) and a target digest input x2, returns r2 with
// H(x2, r2) == H(x, r). Requires the trapdoor xi.
mpz_class ch_forge(const ChameleonParams& params, const ChameleonTrapdoor& td,
                   const mpz_class& x, const mpz_class& x2, const mpz_class& r);

// Structural validity: p and q prime, q | p - 1, g and y of order q.
bool ch_validate(const ChameleonParams& params);
bool ch_validate(const ChameleonParams& params, const ChameleonTrapdoor& td);

Bytes ch_params_serialize(const ChameleonParams& params);
ChameleonParams ch_params_deserialize(ByteView data);

// Fixed-base modular exponentiation: a 4-bit comb table over one base.
// Worthwhile for g and y, which are fixed for the lifetime of the system.
class FixedBaseWindow {
 public:
  FixedBaseWindow() = default;
  FixedBaseWindow(const mpz_class& base, const mpz_class& p, size_t max_exp_bits);

  mpz_class pow(const mpz_class& exp) const;

 private:
  static constexpr unsigned kWindowBits = 4;
  mpz_class p_;
  size_t positions_ = 0;
  std::vector<mpz_class> table_;  // positions_ x 15, digit d at [pos * 15 + d - 1]
};

// Bundles the parameters with comb tables for g and y; one per long-lived
// party, shared across every hash evaluation.
class ChameleonEvaluator {
 public:
  explicit ChameleonEvaluator(const ChameleonParams& params);

  mpz_class hash(const mpz_class& x, const mpz_class& r) const;
  const ChameleonParams& params() const { return params_; }

 private:
  ChameleonParams params_;
  FixedBaseWindow pow_g_, pow_y_;
};

}  // namespace ssevault
