"""Independent reference numbers for the bundled 10-record evaluation corpus.

Recomputes per-record SARI (set reading, orders 1..4) and the unigram/bigram
perplexity means from raw counts, using direct products rather than logs.
Prints values to paste into crates/core/tests/evaluation.rs.
"""
import pathlib
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parent.parent / "crates/core/data/fixtures"


def read(name):
    return [l.split() for l in (ROOT / name).read_text().splitlines()]


def ngrams(toks, n):
    return {tuple(toks[i:i + n]) for i in range(len(toks) - n + 1)}


def ratio_or_convention(num, den, sys_empty, ref_empty):
    if sys_empty and ref_empty:
        return Fraction(1)
    if sys_empty or ref_empty:
        return Fraction(0)
    return Fraction(num, den)


def f1(sys, ref):
    if not sys and not ref:
        return Fraction(1)
    if not sys or not ref:
        return Fraction(0)
    hit = len(sys & ref)
    if hit == 0:
        return Fraction(0)
    p, r = Fraction(hit, len(sys)), Fraction(hit, len(ref))
    return 2 * p * r / (p + r)


def sari(i, o, refs):
    longest = max(len(x) for x in [i, o] + refs)
    total, orders = Fraction(0), 0
    for n in range(1, 5):
        if n > longest:
            break
        I, O = ngrams(i, n), ngrams(o, n)
        R = [ngrams(r, n) for r in refs]
        union = set().union(*R)
        inter = set(R[0]).intersection(*R[1:])
        add = f1(O - I, union - I)
        keep = f1(O & I, I & inter)
        dsys, dref = I - O, I - union
        delete = ratio_or_convention(len(dsys & dref), len(dsys), not dsys, not dref)
        total += add + keep + delete
        orders += 1
    return total / (3 * orders)


def lm(lines):
    uni, bi = {}, {}
    for l in lines:
        for t in l:
            uni[t] = uni.get(t, 0) + 1
        for a, b in zip(l, l[1:]):
            bi[(a, b)] = bi.get((a, b), 0) + 1
    V, N = len(uni), sum(uni.values())
    floor = Fraction(1, V * N)
    pu = lambda w: Fraction(uni[w], V) if w in uni else floor
    pb = lambda v, w: Fraction(bi[(v, w)], uni[v]) if (v, w) in bi else floor
    return pu, pb


def pp1(pu, s):
    prod = Fraction(1)
    for w in s:
        prod *= pu(w)
    return float(prod) ** (-1.0 / len(s))


def pp2(pu, pb, s):
    prod = pu(s[0])
    for v, w in zip(s, s[1:]):
        prod *= pb(v, w)
    return float(prod) ** (-1.0 / len(s))


def main():
    corpus = [l for l in read("corpus.txt") if l]
    pu, pb = lm(corpus)
    orig, system = read("eval/orig.txt"), read("eval/system.txt")
    refs = [read("eval/ref0.txt"), read("eval/ref1.txt")]
    scores = [sari(i, o, [r[k] for r in refs]) for k, (i, o) in enumerate(zip(orig, system))]
    for s in scores:
        print(f"sari {float(s)!r}")
    print(f"mean_sari {float(sum(scores) / len(scores))!r}")
    for phi in (0.0, 0.5):
        mo = sum((1 - phi) * pp1(pu, s) + phi * pp2(pu, pb, s) for s in orig) / len(orig)
        ms = sum((1 - phi) * pp1(pu, s) + phi * pp2(pu, pb, s) for s in system) / len(system)
        print(f"phi {phi} mean_orig {mo!r} mean_simp {ms!r} decrease {100 * (mo - ms) / mo!r}")


if __name__ == "__main__":
    main()
