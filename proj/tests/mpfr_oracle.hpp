#pragma once

// Independent directed-rounding brackets from MPFR, used as oracles for the
// enclosure code.

#include <mpfr.h>

#include <functional>

#include "seqproof/core.hpp"

namespace oracle {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

  seqproof::BigRational to_rational() {
    seqproof::BigRational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

// Runs `eval(out, rounding)` once rounding down and once rounding up.
inline seqproof::RationalInterval bracket(mpfr_prec_t prec, const std::function<void(mpfr_ptr, mpfr_rnd_t)>& eval) {
  Mpfr lo(prec), hi(prec);
  eval(lo.get(), MPFR_RNDD);
  eval(hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

inline void set_z(mpfr_ptr out, const seqproof::BigInt& z, mpfr_rnd_t rnd) { mpfr_set_z(out, z.get_mpz_t(), rnd); }

// sum_{j=l}^{m} log2 j, via log2 of the exact product.
inline seqproof::RationalInterval log2_sum(unsigned long l, unsigned long m, mpfr_prec_t prec = 256) {
  seqproof::BigInt product = 1;
  for (unsigned long j = l; j <= m; ++j) product *= j;
  return bracket(prec, [&](mpfr_ptr out, mpfr_rnd_t rnd) {
    set_z(out, product, rnd);
    mpfr_log2(out, out, rnd);
  });
}

// sum_{j=l}^{m} cbrt j with each term and each addition rounded the same way.
inline seqproof::RationalInterval cbrt_sum(unsigned long l, unsigned long m, mpfr_prec_t prec = 256) {
  return bracket(prec, [&](mpfr_ptr out, mpfr_rnd_t rnd) {
    Mpfr term(prec);
    mpfr_set_ui(out, 0, rnd);
    for (unsigned long j = l; j <= m; ++j) {
      mpfr_set_ui(term.get(), j, rnd);
      mpfr_cbrt(term.get(), term.get(), rnd);
      mpfr_add(out, out, term.get(), rnd);
    }
  });
}

}  // namespace oracle
