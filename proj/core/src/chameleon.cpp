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

#include "ssevault/chameleon.hpp"

#include <stdexcept>

#include "ssevault/bignum.hpp"

namespace ssevault {

namespace {

constexpr int kMillerRabinRounds = 30;
constexpr uint8_t kParamsTag = 0x01;

bool is_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kMillerRabinRounds) != 0;
}

mpz_class random_bits(DetRng& rng, unsigned bits) {
  Bytes raw = rng.bytes((bits + 7) / 8);
  mpz_class v = mpz_from_bytes(raw);
  // Clamp to exactly `bits` bits with the top bit set.
  mpz_class mask = (mpz_class(1) << bits) - 1;
  v &= mask;
  mpz_setbit(v.get_mpz_t(), bits - 1);
  return v;
}

}  // namespace

ChameleonKeyPair ch_setup(unsigned lambda_q, unsigned lambda_p, DetRng& rng) {
  if (lambda_q < 8 || lambda_p <= lambda_q + 8) {
    throw std::invalid_argument("bad chameleon security parameters");
  }
  mpz_class q;
  do {
    q = random_bits(rng, lambda_q);
    mpz_setbit(q.get_mpz_t(), 0);
  } while (!is_prime(q));

  mpz_class p, k;
  unsigned k_bits = lambda_p - lambda_q;
  for (;;) {
    k = random_bits(rng, k_bits);
    mpz_clrbit(k.get_mpz_t(), 0);
    p = k * q + 1;
    if (mpz_sizeinbase(p.get_mpz_t(), 2) == lambda_p && is_prime(p)) break;
  }

  mpz_class exp = (p - 1) / q;
  mpz_class g;
  do {
    mpz_class h = sample_scalar(rng, p - 1) + 1;  // [2, p-1]
    mpz_powm(g.get_mpz_t(), h.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  } while (g == 1);

  mpz_class xi = sample_scalar(rng, q);
  mpz_class y;
  mpz_powm(y.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t(), p.get_mpz_t());
  return {ChameleonParams{p, q, g, y}, ChameleonTrapdoor{xi}};
}

mpz_class ch_hash(const ChameleonParams& params, const mpz_class& x, const mpz_class& r) {
  mpz_class xm = x % params.q;
  mpz_class rm = r % params.q;
  if (xm < 0) xm += params.q;
  if (rm < 0) rm += params.q;
  mpz_class gx, yr;
  mpz_powm(gx.get_mpz_t(), params.g.get_mpz_t(), xm.get_mpz_t(), params.p.get_mpz_t());
  mpz_powm(yr.get_mpz_t(), params.y.get_mpz_t(), rm.get_mpz_t(), params.p.get_mpz_t());
  return gx * yr % params.p;
}

mpz_class ch_forge(const ChameleonParams& params, const ChameleonTrapdoor& td,
                   const mpz_class& x, const mpz_class& x2, const mpz_class& r) {
  // x + xi * r == x2 + xi * r2 (mod q), solved for r2.
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), td.xi.get_mpz_t(), params.q.get_mpz_t()) == 0) {
    throw std::invalid_argument("trapdoor not invertible mod q");
  }
  mpz_class r2 = (inv * (x - x2) + r) % params.q;
  if (r2 < 0) r2 += params.q;
  return r2;
}

bool ch_validate(const ChameleonParams& params) {
  if (params.p < 5 || params.q < 3) return false;
  if (!is_prime(params.p) || !is_prime(params.q)) return false;
  if ((params.p - 1) % params.q != 0) return false;
  auto order_q = [&](const mpz_class& v) {
    if (v <= 1 || v >= params.p) return false;
    mpz_class t;
    mpz_powm(t.get_mpz_t(), v.get_mpz_t(), params.q.get_mpz_t(), params.p.get_mpz_t());
    return t == 1;
  };
  return order_q(params.g) && order_q(params.y);
}

bool ch_validate(const ChameleonParams& params, const ChameleonTrapdoor& td) {
  if (!ch_validate(params)) return false;
  if (td.xi <= 0 || td.xi >= params.q) return false;
  mpz_class y;
  mpz_powm(y.get_mpz_t(), params.g.get_mpz_t(), td.xi.get_mpz_t(), params.p.get_mpz_t());
  return y == params.y;
}

Bytes ch_params_serialize(const ChameleonParams& params) {
  ByteWriter w;
  w.u8(kParamsTag);
  w.lp16(mpz_to_bytes(params.p));
  w.lp16(mpz_to_bytes(params.q));
  w.lp16(mpz_to_bytes(params.g));
  w.lp16(mpz_to_bytes(params.y));
  return w.take();
}

ChameleonParams ch_params_deserialize(ByteView data) {
  ByteReader r(data);
  if (r.u8() != kParamsTag) throw std::runtime_error("bad chameleon params tag");
  ChameleonParams params;
  params.p = mpz_from_bytes(r.lp16());
  params.q = mpz_from_bytes(r.lp16());
  params.g = mpz_from_bytes(r.lp16());
  params.y = mpz_from_bytes(r.lp16());
  r.expect_done();
  return params;
}

FixedBaseWindow::FixedBaseWindow(const mpz_class& base, const mpz_class& p,
                                 size_t max_exp_bits)
    : p_(p), positions_((max_exp_bits + kWindowBits - 1) / kWindowBits) {
  table_.resize(positions_ * 15);
  mpz_class cur = base % p;
  for (size_t pos = 0; pos < positions_; ++pos) {
    table_[pos * 15] = cur;
    for (int d = 2; d <= 15; ++d) {
      table_[pos * 15 + d - 1] = table_[pos * 15 + d - 2] * cur % p_;
    }
    // Advance the radix: cur <- cur^16.
    for (unsigned i = 0; i < kWindowBits; ++i) cur = cur * cur % p_;
  }
}

mpz_class FixedBaseWindow::pow(const mpz_class& exp) const {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  size_t bits = exp == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (bits > positions_ * kWindowBits) throw std::invalid_argument("exponent too wide");
  mpz_class acc = 1;
  for (size_t pos = 0; pos * kWindowBits < bits; ++pos) {
    unsigned digit = 0;
    for (unsigned b = 0; b < kWindowBits; ++b) {
      if (mpz_tstbit(exp.get_mpz_t(), pos * kWindowBits + b)) digit |= 1u << b;
    }
    if (digit != 0) acc = acc * table_[pos * 15 + digit - 1] % p_;
  }
  return acc;
}

ChameleonEvaluator::ChameleonEvaluator(const ChameleonParams& params)
    : params_(params),
      pow_g_(params.g, params.p, mpz_sizeinbase(params.q.get_mpz_t(), 2)),
      pow_y_(params.y, params.p, mpz_sizeinbase(params.q.get_mpz_t(), 2)) {}

mpz_class ChameleonEvaluator::hash(const mpz_class& x, const mpz_class& r) const {
  mpz_class xm = x % params_.q;
  mpz_class rm = r % params_.q;
  if (xm < 0) xm += params_.q;
  if (rm < 0) rm += params_.q;
  return pow_g_.pow(xm) * pow_y_.pow(rm) % params_.p;
}

}  // namespace ssevault
