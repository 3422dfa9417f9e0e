"""Composition and shuffle combinatorics: the block-increasing and
block-maxima-descending permutation sets attached to a composition, and the
brute-force verification of the unique-factorization bijection.

Permutations are tuples p with p[k] = image of k+1, i.e. 1-based values in
0-based storage; composition of maps is (s . t)(u) = s(t(u)).
"""

from __future__ import annotations

from itertools import permutations
from math import factorial

from .report import CheckReport


def compositions(k: int) -> list[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to k."""
    if k == 0:
        return [()]
    out = []

    def rec(rest, cur):
        if rest == 0:
            out.append(tuple(cur))
            return
        for part in range(1, rest + 1):
            cur.append(part)
            rec(rest - part, cur)
            cur.pop()

    rec(k, [])
    return out


def partial_sums(parts) -> list[int]:
    sums = [0]
    for p in parts:
        sums.append(sums[-1] + p)
    return sums


def _blocks(parts) -> list[range]:
    sums = partial_sums(parts)
    return [range(sums[t] + 1, sums[t + 1] + 1) for t in range(len(parts))]


def is_block_increasing(perm, parts) -> bool:
    """perm increases inside every block of the composition."""
    for block in _blocks(parts):
        vals = [perm[u - 1] for u in block]
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
    return True


def is_ridge(perm, parts) -> bool:
    """Block maxima carry descending values and dominate their own block."""
    blocks = _blocks(parts)
    maxima = [perm[block[-1] - 1] for block in blocks]
    if any(a <= b for a, b in zip(maxima, maxima[1:])):
        return False
    for block, mx in zip(blocks, maxima):
        if any(perm[u - 1] > mx for u in block):
            return False
    return True


def enumerate_shuffles(k: int, parts, which: str) -> list[tuple[int, ...]]:
    """Exact enumeration of the block-increasing or ridge permutation set."""
    if sum(parts) != k:
        raise ValueError("composition must sum to k")
    test = {"block-increasing": is_block_increasing, "ridge": is_ridge}[which]
    return [p for p in permutations(range(1, k + 1)) if test(p, parts)]


def compose(s, t) -> tuple[int, ...]:
    """(s . t)(u) = s(t(u))."""
    return tuple(s[t[u] - 1] for u in range(len(s)))


def identity_perm(k: int) -> tuple[int, ...]:
    return tuple(range(1, k + 1))


def inverse_perm(p) -> tuple[int, ...]:
    out = [0] * len(p)
    for u, v in enumerate(p):
        out[v - 1] = u + 1
    return tuple(out)


def check_shuffle_counts(k: int) -> CheckReport:
    """|block-increasing set| is the multinomial coefficient."""
    rep = CheckReport("symcomb")
    ok = True
    detail = ""
    for parts in compositions(k):
        count = len(enumerate_shuffles(k, parts, "block-increasing"))
        expect = factorial(k)
        for p in parts:
            expect //= factorial(p)
        if count != expect:
            ok = False
            detail = f"composition {parts}: {count} != {expect}"
            break
    rep.add("shuffle_multinomial_count", {"k": k}, ok, detail)
    return rep


def check_sym_gps(k: int, parts_filter=None) -> CheckReport:
    """For every composition and every permutation sigma, the pairs
    (t, t') with

        t block-increasing for (p1, k - p1),   t' a permutation of the
        later positions, block-increasing on each later block,
        sigma(t(p1)) = k,   sigma . t . t' in the ridge set,

    map bijectively onto {t'' block-increasing : sigma . t'' ridge}
    via (t, t') -> t . t'.  Verified by brute force."""
    rep = CheckReport("symcomb")
    perms = list(permutations(range(1, k + 1)))
    ok = True
    detail = ""
    cases = 0
    for parts in compositions(k):
        if parts_filter is not None and not parts_filter(parts):
            continue
        p1 = parts[0]
        sums = partial_sums(parts)

        def later_increasing(p):
            for t in range(1, len(parts)):
                vals = [p[u - 1] for u in range(sums[t] + 1, sums[t + 1] + 1)]
                if any(a > b for a, b in zip(vals, vals[1:])):
                    return False
            return True

        first_two = (p1, k - p1) if k > p1 else (p1,)
        taus_by_image: dict[int, list] = {}
        for t in perms:
            if is_block_increasing(t, first_two):
                taus_by_image.setdefault(t[p1 - 1], []).append(t)
        tau_primes = [
            t for t in perms
            if all(t[u] == u + 1 for u in range(p1)) and later_increasing(t)
        ]
        block_incr = [t for t in perms if is_block_increasing(t, parts)]
        for sigma in perms:
            target = {
                t2 for t2 in block_incr if is_ridge(compose(sigma, t2), parts)
            }
            produced: dict = {}
            well_defined = True
            v = inverse_perm(sigma)[k - 1]  # need t(p1) = sigma^{-1}(k)
            for t in taus_by_image.get(v, ()):
                for tp in tau_primes:
                    prod = compose(t, tp)
                    if not is_ridge(compose(sigma, prod), parts):
                        continue
                    if prod not in target:
                        well_defined = False
                    produced[prod] = produced.get(prod, 0) + 1
            cases += 1
            if (
                not well_defined
                or set(produced) != target
                or any(c != 1 for c in produced.values())
            ):
                ok = False
                detail = f"k={k} composition {parts} sigma {sigma}"
                break
        if not ok:
            break
    rep.add("sym_gps_bijection", {"k": k, "cases": cases}, ok, detail)
    return rep
