"""Integer-level reference implementations.

Nothing here imports the package's code machinery: numbers are factored
by trial division and the predicates are evaluated from their defining
equations over plain ints.  Only small values are in reach, which is the
point of the toy table.
"""
from functools import lru_cache


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i, ok in enumerate(sieve) if ok]


PRIMES = primes_upto(2000)


def exponents(n):
    """Exponents of 2, 3, 5, ... up to the last prime dividing n; None if n has
    a prime factor beyond the table."""
    if n < 1:
        return None
    out = []
    for p in PRIMES:
        if n == 1:
            return out
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append(e)
    return out if n == 1 else None


def seq_int(exps):
    v = 1
    for p, e in zip(PRIMES, exps):
        v *= p ** e
    return v


def is_seq(n):
    """Gapless prime-power product, at least one factor."""
    ex = exponents(n)
    return bool(ex) and all(e > 0 for e in ex)


def lh(n):
    ex = exponents(n)
    return sum(1 for e in ex if e > 0)


def comp(n, i):
    ex = exponents(n)
    return ex[i] if i < len(ex) else 0


def star(a, b):
    """Mendelson's juxtaposition of two sequence numbers."""
    k = lh(a)
    v = a
    for i, e in enumerate(exponents(b)):
        v *= PRIMES[k + i] ** e
    return v


# -- toy calculus: A 1, ( 3, ) 5, ~ 9, -> 11 -----------------------------------

TOY_SYMBOLS = {1: "A", 3: "(", 5: ")", 9: "~", 11: "->"}


def toy_gd(n):
    ex = exponents(n)
    return bool(ex) and all(e in TOY_SYMBOLS for e in ex)


def _wff_end(s, i):
    """End index of a wff starting at i, or -1."""
    if i >= len(s):
        return -1
    if s[i] == "A":
        return i + 1
    if s[i] != "(":
        return -1
    if i + 1 < len(s) and s[i + 1] == "~":
        j = _wff_end(s, i + 2)
        return j + 1 if j != -1 and j < len(s) and s[j] == ")" else -1
    j = _wff_end(s, i + 1)
    if j == -1 or j >= len(s) or s[j] != "->":
        return -1
    k = _wff_end(s, j + 1)
    return k + 1 if k != -1 and k < len(s) and s[k] == ")" else -1


def toy_fml(n):
    if not toy_gd(n):
        return False
    s = [TOY_SYMBOLS[e] for e in exponents(n)]
    return _wff_end(s, 0) == len(s)


def toy_ax(n):
    return n == 2  # the code of the one-symbol expression A


def toy_mp(x, y, z):
    if not (toy_gd(x) and toy_gd(z)):
        return False
    return y == star(star(star(star(8, x), 2 ** 11), z), 32)


def toy_evbl(n):
    return False  # no variables in the toy language


def toy_gen(x, y):
    return any(toy_evbl(v) and toy_gd(x)
               and y == star(star(star(star(star(star(8, 8), 2 ** 13), v), 32), x), 32)
               for v in range(2, y))


@lru_cache(maxsize=None)
def toy_prf(x):
    """Bounded-quantifier reading, u, v, z, w < x.

    Two prunings that keep the truth value: x = u * 2^v forces u | x, and
    (u)_w is 0 (not a formula) once w reaches lh(u).
    """
    if x < 2:
        return False
    for w in range(x):
        if 2 ** w > x:
            break
        if x == 2 ** w and toy_ax(w):
            return True
    for u in range(2, x):
        if x % u or not is_seq(u) or not toy_prf(u):
            continue
        k = lh(u)
        for v in range(1, x):
            cand = u * PRIMES[k] ** v
            if cand > x:
                break
            if cand != x:
                continue
            if toy_ax(v):
                return True
            ws = range(min(x, k))
            if any(toy_fml(comp(u, w)) and toy_gen(comp(u, w), v) for w in ws):
                return True
            if any(toy_fml(comp(u, z)) and toy_fml(comp(u, w)) and toy_mp(comp(u, z), comp(u, w), v)
                   for z in ws for w in ws):
                return True
    return False


def neg_int(v):
    """2^3 * 2^9 * v * 2^5 over integers."""
    return star(star(star(8, 2 ** 9), v), 32)


# -- sb over integers, default table ------------------------------------------

def sb_int(e, var_code, n, zero=15, succ=19):
    """Put the numeral n for every occurrence of the variable symbol.

    Only valid for formulas without quantifiers over that variable, which
    is all the callers pass.
    """
    out = []
    for c in exponents(e):
        if c == var_code:
            out.extend([zero] + [succ] * n)
        else:
            out.append(c)
    return seq_int(out)
