#!/usr/bin/env python3
"""Rebuild fixtures/bfiles/ from first-principles definitions.

The sandbox that produced these fixtures had no route to oeis.org, so every
b-file here is recomputed from the sequence's defining property, written
in b-file format, and accompanied by a .note sidecar giving the definition,
the offset used and the alignment against the library's own indexing.
Run `seqproof oeis fetch <id> --online` to obtain the upstream file.
"""

import argparse
import itertools
import math
import pathlib
from fractions import Fraction

import gmpy2


def a005251(count):
    a = [0, 1, 1, 1]
    while len(a) < count:
        a.append(a[-1] + a[-2] + a[-4])
    return 0, a[:count]


def a000071(count):
    fib = [0, 1]
    while len(fib) < count + 2:
        fib.append(fib[-1] + fib[-2])
    return 1, [fib[n] - 1 for n in range(1, count + 1)]


def a132344(count):
    return 0, [n * 2 ** (n // 2) for n in range(count)]


def a128135(count):
    return 1, [(2 * j + 1) * 2 ** (j - 1) for j in range(1, count + 1)]


def a294172(count):
    def best(n):
        return max(sum((n - i + 1) * (1 + (i + k) % n) for i in range(1, n + 1)) for k in range(1, n + 1))

    return 1, [best(n) for n in range(1, count + 1)]


def a112884(count):
    return 1, [math.comb(2**n, 2 ** (n - 1)).bit_length() for n in range(1, count + 1)]


def a136269(count):
    # floor(sum_{j<=10^n} j^(1/3)) from fixed-point integer cube roots:
    # sum floor(cbrt(j) 2^p) undercounts by < 10^n, so the floor is decided
    # unless the fractional part sits within 10^n 2^-p of an integer.
    out = []
    for n in range(count):
        m = 10**n
        p = 64
        scale = 1 << (3 * p)
        s = sum(int(gmpy2.iroot(gmpy2.mpz(j) * scale, 3)[0]) for j in range(1, m + 1))
        lo, hi = Fraction(s, 1 << p), Fraction(s + m, 1 << p)
        assert math.floor(lo) == math.floor(hi), n
        out.append(math.floor(lo))
    return 0, out


def a345318(count):
    def median(v):
        v = sorted(v)
        h = len(v) // 2
        return v[h] if len(v) % 2 else Fraction(v[h - 1] + v[h], 2)

    out = []
    for n in range(1, count + 1):
        sq = [k * k for k in range(1, n + 1)]
        med = median(sq)
        mad = median([abs(x - med) for x in sq])
        twice = 2 * mad
        assert twice.denominator == 1, n
        out.append(int(twice))
    return 1, out


def a309878(count):
    re, im, out = 0, 0, []
    for n in range(count):
        if n > 0:
            re, im = (n + re) - im, (n + re) + im
        out.append(re)
    return 0, out


def a294139(count):
    def term(n):
        return sum(2 * k * k + 2 * (n - k) ** 2 + k * (n - k) for k in range(1, (n - 1) // 2 + 1))

    return 1, [term(n) for n in range(1, count + 1)]


def a307684(count):
    def term(n):
        return sum(i * k * (n - i - k) for k in range(1, n // 3 + 1) for i in range(k, (n - k) // 2 + 1))

    return 1, [term(n) for n in range(1, count + 1)]


def a371835(rows):
    out = []
    for n in range(rows):
        for k in range(n + 1):
            r = range(-k, k + 1)
            out.append(sum(1 for x, y, z in itertools.product(r, r, r) if abs(x) + abs(y) + abs(z) <= n))
    return 0, out


def a248982(count):
    fib = [1, 2]
    used, seq, total = set(), [], 0
    for n in range(1, count + 1):
        t = 0
        while True:
            while t >= len(fib):
                fib.append(fib[-1] + fib[-2])
            c = n * fib[t] - total
            if c >= 1 and c not in used:
                break
            t += 1
        used.add(c)
        seq.append(c)
        total += c
    return 1, seq


# id -> (generator, size, definition, alignment vs. the library's indexing)
FIXTURES = {
    "A005251": (a005251, 60, "a(n) = a(n-1) + a(n-2) + a(n-4), a(0..3) = 0, 1, 1, 1",
                "binary words of length n avoiding z,z+1,z counted from n = 0 equal a(n+3): shift +3"),
    "A000071": (a000071, 60, "a(n) = F(n) - 1 with F(1) = F(2) = 1",
                "binary words of length n avoiding z,z,z+1 counted from n = 0 equal a(n+3): shift +3"),
    "A132344": (a132344, 120, "a(n) = n 2^floor(n/2)",
                "partial sums of the greedy power-of-2-average sequence, s_n = a(n): shift 0"),
    "A128135": (a128135, 80, "a(j) = (2j+1) 2^(j-1), j >= 1",
                "even-indexed greedy power-of-2-average terms, a_{2j} = a(j): shift 0"),
    "A294172": (a294172, 120, "max over 1 <= k <= n of sum_i (n-i+1)(1 + ((i+k) mod n))",
                "cyclic self-convolution maximum indexed from n = 1: shift 0"),
    "A112884": (a112884, 18, "bit length of binomial(2^n, 2^(n-1))", "indexed from n = 1: shift 0"),
    "A136269": (a136269, 7, "floor(sum_{j=1}^{10^n} j^(1/3))", "indexed from n = 0: shift 0"),
    "A345318": (a345318, 300, "median absolute deviation of {k^2 : 1 <= k <= n}, times 2",
                "shift 0; scale 2: the library's a_n is the MAD of the squares and a(n) = 2 a_n, compared via the scaled oracle"),
    "A309878": (a309878, 150, "Re(b_n), b_0 = 0, b_n = (n + b_{n-1})(1 + i)", "indexed from n = 0: shift 0"),
    "A294139": (a294139, 250, "sum_{k=1}^{floor((n-1)/2)} (2k^2 + 2(n-k)^2 + k(n-k))", "indexed from n = 1: shift 0"),
    "A307684": (a307684, 250, "sum_{k=1}^{floor(n/3)} sum_{i=k}^{floor((n-k)/2)} i k (n-i-k)",
                "indexed from n = 1: shift 0"),
    "A371835": (a371835, 14, "triangle T(n,k), 0 <= k <= n: points of Z^3 with |x|_1 <= n and |x|_inf <= k",
                "read by rows from n = 0: shift 0"),
    "A248982": (a248982, 300, "a(1) = 1; a(n) least unused positive integer making the mean of a(1..n) a Fibonacci number",
                "indexed from n = 1: shift 0"),
}


def write_fixture(out_dir, oeis_id, gen, size, definition, alignment):
    offset, terms = gen(size)
    stem = "b" + oeis_id[1:]
    lines = [f"# {oeis_id}: reconstructed offline from its definition by tools/make_fixtures.py", f"# {definition}"]
    lines += [f"{offset + i} {v}" for i, v in enumerate(terms)]
    (out_dir / f"{stem}.txt").write_text("\n".join(lines) + "\n")
    note = [
        f"id: {oeis_id}",
        "source: reconstructed offline (no network); not a verbatim upstream b-file",
        f"definition: {definition}",
        f"offset: {offset}",
        f"terms: {len(terms)}",
        f"alignment: {alignment}",
    ]
    (out_dir / f"{stem}.note").write_text("\n".join(note) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "bfiles")
    parser.add_argument("ids", nargs="*", help="subset of ids to rebuild")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for oeis_id, spec in FIXTURES.items():
        if args.ids and oeis_id not in args.ids:
            continue
        write_fixture(args.out, oeis_id, *spec)
        print(oeis_id)


if __name__ == "__main__":
    main()
