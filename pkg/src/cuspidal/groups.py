"""Finite presentations: van Kampen, Tietze moves, abelianization,
Todd-Coxeter coset enumeration, and brute-force homomorphism counts.

Words are tuples of nonzero signed generator indices, as in braids.py.
Presentation identity is never decided syntactically; groups are compared
through finite-quotient fingerprints (abelianization, coset order,
homomorphism counts into small symmetric groups).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .braids import artin_action, free_reduce, word_inverse
from .linalg import invariant_factors

OVERFLOW = "overflow"


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple
    relators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        rels = []
        for r in self.relators:
            r = free_reduce(r)
            if not r:
                continue
            for g in r:
                if g == 0 or abs(g) > len(self.generator_names):
                    raise ValueError(f"relator letter {g} out of range")
            rels.append(tuple(r))
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def n_generators(self):
        return len(self.generator_names)

    def to_json(self):
        return {"generators": list(self.generator_names),
                "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["generators"]), tuple(tuple(r) for r in data["relators"]))


def _cyclic_reduce_word(word):
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def _cyclic_variants(word):
    variants = set()
    for w in (tuple(word), word_inverse(word)):
        for k in range(max(len(w), 1)):
            variants.add(w[k:] + w[:k])
    return variants


def same_relator(r1, r2):
    """Equality of relators up to cyclic rotation and inversion."""
    return tuple(r2) in _cyclic_variants(tuple(r1))


def _dedupe_relators(relators):
    out = []
    for r in relators:
        r = _cyclic_reduce_word(r)
        if not r:
            continue
        if any(same_relator(r, s) for s in out):
            continue
        out.append(r)
    return out


# -- van Kampen ----------------------------------------------------------------

def van_kampen(factors, n, generator_names=None):
    """Presentation of the complement group from a braid monodromy factorization.

    One generator per strand; for every factor beta and generator x the
    relator x^-1 * beta(x), freely reduced, trivial ones dropped.
    """
    names = tuple(generator_names) if generator_names else tuple(
        f"x{i}" for i in range(1, n + 1))
    if len(names) != n:
        raise ValueError("need one generator name per strand")
    relators = []
    for factor in factors:
        if factor.n_strands != n:
            raise ValueError("factor strand count differs from n")
        for i in range(1, n + 1):
            image = artin_action(factor, (i,))
            relators.append(free_reduce((-i,) + image))
    return Presentation(names, tuple(_dedupe_relators(relators)))


def add_projective_relation(p):
    """Append the product of all generators (the boundary relation)."""
    if p.n_generators != 4:
        raise ValueError("the projective relation expects the 4-generator setup")
    word = tuple(range(1, p.n_generators + 1))
    return Presentation(p.generator_names, p.relators + (word,))


# -- abelianization --------------------------------------------------------------

def abelianization(p):
    """Invariant factors of the abelianized group; 0 marks a free factor."""
    rows = []
    for r in p.relators:
        row = [0] * p.n_generators
        for g in r:
            row[abs(g) - 1] += 1 if g > 0 else -1
        rows.append(row)
    return invariant_factors(rows, p.n_generators)


# -- Todd-Coxeter -----------------------------------------------------------------

def _tc_alphabet(p):
    """Relators in the 2g letter alphabet d with inv(d) = d ^ 1."""
    def enc(g):
        return 2 * (abs(g) - 1) + (0 if g > 0 else 1)

    rels = [tuple(enc(g) for g in r) for r in p.relators]
    for d in range(0, 2 * p.n_generators, 2):
        rels.append((d, d ^ 1))
        rels.append((d ^ 1, d))
    return rels


def _tc_run(p, max_cosets):
    """Coset enumeration of the trivial subgroup (HLT with coincidences).

    Returns (labels, neighbors) on success or None on overflow; live cosets
    are the fixed points of labels.
    """
    ncols = 2 * p.n_generators
    rels = _tc_alphabet(p)
    labels = [0]
    neighbors = [[None] * ncols]

    def find(c):
        while labels[c] != c:
            labels[c] = labels[labels[c]]
            c = labels[c]
        return c

    def unify(c1, c2):
        stack = [(c1, c2)]
        while stack:
            a, b = stack.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            labels[b] = a
            for d in range(ncols):
                nb = neighbors[b][d]
                if nb is None:
                    continue
                na = neighbors[a][d]
                if na is None:
                    neighbors[a][d] = nb
                else:
                    stack.append((na, nb))

    def follow_step(c, d):
        c = find(c)
        if neighbors[c][d] is None:
            if len(neighbors) >= max_cosets:
                raise _Overflow
            labels.append(len(neighbors))
            neighbors.append([None] * ncols)
            neighbors[c][d] = len(neighbors) - 1
        return find(neighbors[c][d])

    class _Overflow(Exception):
        pass

    try:
        c = 0
        while c < len(neighbors):
            if find(c) != c:
                c += 1
                continue
            for rel in rels:
                if find(c) != c:
                    break  # c died during processing
                here = c
                for d in rel:
                    here = follow_step(here, d)
                unify(here, c)
            c += 1
    except _Overflow:
        return None
    return labels, neighbors


def todd_coxeter(p, max_cosets=100000):
    """Group order by coset enumeration, or the string 'overflow'."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    result = _tc_run(p, max_cosets)
    if result is None:
        return OVERFLOW
    labels, _ = result
    return sum(1 for c, l in enumerate(labels) if c == l)


def coset_action(p, max_cosets=100000):
    """Permutation action of the generators on the cosets (the regular action).

    Returns (order, perms) with perms[k] the 0-based permutation tuple of
    generator k+1; raises on overflow.  The completed table is verified:
    every relator acts trivially.
    """
    result = _tc_run(p, max_cosets)
    if result is None:
        raise RuntimeError(f"coset enumeration overflowed at {max_cosets}")
    labels, neighbors = result

    def find(c):
        while labels[c] != c:
            c = labels[c]
        return c

    live = sorted(c for c, l in enumerate(labels) if c == l)
    index = {c: i for i, c in enumerate(live)}
    perms = []
    for g in range(p.n_generators):
        col = 2 * g
        perm = []
        for c in live:
            target = neighbors[c][col]
            if target is None:
                raise RuntimeError("incomplete coset table")
            perm.append(index[find(target)])
        perms.append(tuple(perm))
    for r in p.relators:
        for start in range(len(live)):
            here = start
            for g in r:
                here = perms[abs(g) - 1][here] if g > 0 else perms[abs(g) - 1].index(here)
            if here != start:
                raise RuntimeError("coset table is not closed under a relator")
    return len(live), perms


def perm_word(word, perms, point):
    """Apply a word in permutation images to a point."""
    here = point
    for g in word:
        p = perms[abs(g) - 1]
        here = p[here] if g > 0 else p.index(here)
    return here


# -- homomorphism enumeration ------------------------------------------------------

def _perm_mul(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def _perm_inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _word_satisfied(word, images, ident):
    acc = ident
    for g in word:
        acc = _perm_mul(acc, images[abs(g) - 1] if g > 0 else _perm_inv(images[abs(g) - 1]))
    return acc == ident


def _transitive(images, n):
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for p in images:
            for y in (p[x], _perm_inv(p)[x]):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return len(seen) == n


def count_homs(p, n):
    """Number of homomorphisms into S_n (backtracking with relator pruning)."""
    pool = list(itertools.permutations(range(n)))
    return sum(1 for _ in _search_homs(p, n, [pool] * p.n_generators, transitive=False))


def _search_homs(p, n, pools, transitive):
    ident = tuple(range(n))
    by_support = [[] for _ in range(p.n_generators + 1)]
    for r in p.relators:
        by_support[max(abs(g) for g in r)].append(r)

    def recurse(depth, images):
        if depth == p.n_generators:
            if not transitive or _transitive(images, n):
                yield tuple(images)
            return
        for cand in pools[depth]:
            images.append(cand)
            if all(_word_satisfied(r, images, ident) for r in by_support[depth + 1]):
                yield from recurse(depth + 1, images)
            images.pop()

    yield from recurse(0, [])


def enumerate_homs_to_sym(p, n, transpositions=True, transitive=True):
    """Homomorphism classes into S_n under simultaneous conjugation.

    With the default constraints the images must all be transpositions and
    generate a transitive subgroup.  Returns (classes, tuple_count) where
    classes maps a canonical image tuple to its representative and
    tuple_count is the raw number of satisfying tuples before conjugacy
    reduction.
    """
    if n > 6:
        raise ValueError("brute force is meant for n <= 6")
    if transpositions:
        pool = []
        for a, b in itertools.combinations(range(n), 2):
            q = list(range(n))
            q[a], q[b] = q[b], q[a]
            pool.append(tuple(q))
    else:
        pool = list(itertools.permutations(range(n)))
    sym = list(itertools.permutations(range(n)))
    found = list(_search_homs(p, n, [pool] * p.n_generators, transitive))
    classes = {}
    for images in found:
        canon = min(
            tuple(_perm_mul(_perm_mul(_perm_inv(s), g), s) for g in images)
            for s in sym)
        classes.setdefault(canon, images)
    return classes, len(found)


# -- Tietze simplification -----------------------------------------------------------

def _substitute(word, gen, expression):
    out = []
    for g in word:
        if abs(g) == gen:
            out.extend(expression if g > 0 else word_inverse(expression))
        else:
            out.append(g)
    return free_reduce(out)


def _try_shorten(r, s):
    """Shorten relator r using relator s (subword longer than half of s)."""
    L = len(s)
    if L < 2:
        return None
    best = None
    doubled = {}
    for variant in (tuple(s), word_inverse(s)):
        doubled[variant] = variant + variant
    for k in range(len(r)):
        rot = r[k:] + r[:k]
        for variant, dd in doubled.items():
            for wlen in range(L, L // 2, -1):
                for start in range(L):
                    w = dd[start:start + wlen]
                    idx = _find_subword(rot, w)
                    if idx < 0:
                        continue
                    tail = dd[start + wlen:start + L]
                    cand = _cyclic_reduce_word(
                        rot[:idx] + word_inverse(tail) + rot[idx + wlen:])
                    if len(cand) < len(r) and (best is None or len(cand) < len(best)):
                        best = cand
    return best


def _find_subword(word, sub):
    if not sub or len(sub) > len(word):
        return -1
    for i in range(len(word) - len(sub) + 1):
        if word[i:i + len(sub)] == sub:
            return i
    return -1


def tietze_simplify(p, budget=200):
    """Eliminate redundant generators and shorten relators.

    Generators defined by a relator in which they occur exactly once are
    substituted away; relators are shortened against each other by
    replacing long shared subwords.  Deterministic order, never increases
    the generator count.  Returns (presentation, budget_exhausted).
    """
    names = list(p.generator_names)
    relators = _dedupe_relators(p.relators)
    steps = 0
    while steps < budget:
        steps += 1
        changed = False
        # generator elimination, smallest defining relator first; when a
        # relator defines several generators, drop the highest-numbered one
        for r in sorted(relators, key=len):
            target = None
            for gen in range(len(names), 0, -1):
                occurrences = sum(1 for g in r if abs(g) == gen)
                if occurrences == 1:
                    target = gen
                    break
            if target is None:
                continue
            k = next(i for i, g in enumerate(r) if abs(g) == target)
            rot = r[k:] + r[:k]
            expr = word_inverse(rot[1:]) if rot[0] > 0 else tuple(rot[1:])
            new_relators = []
            for other in relators:
                if other is r:
                    continue
                new_relators.append(_substitute(other, target, expr))
            relators = _dedupe_relators(
                [_renumber_word(w, target) for w in new_relators])
            names = names[:target - 1] + names[target:]
            changed = True
            break
        if changed:
            continue
        # relator-against-relator shortening
        for i, r in enumerate(relators):
            for j, s in enumerate(relators):
                if i == j or len(s) > len(r):
                    continue
                shorter = _try_shorten(r, s)
                if shorter is not None:
                    relators = _dedupe_relators(
                        relators[:i] + [shorter] + relators[i + 1:])
                    changed = True
                    break
            if changed:
                break
        if not changed:
            return Presentation(tuple(names), tuple(relators)), False
    return Presentation(tuple(names), tuple(relators)), True


def _renumber_word(word, gen):
    out = []
    for g in word:
        a = abs(g)
        if a == gen:
            raise ValueError("eliminated generator survived substitution")
        if a > gen:
            a -= 1
        out.append(a if g > 0 else -a)
    return tuple(out)


# -- fingerprints ---------------------------------------------------------------------

def fingerprint(p, max_cosets=20000):
    """Isomorphism-invariant snapshot used to compare presentations.

    (abelianization, coset order or 'overflow', #homs to S3,
     #transposition-transitive classes into S4)
    """
    classes, _ = enumerate_homs_to_sym(p, 4, transpositions=True, transitive=True)
    return (tuple(abelianization(p)),
            todd_coxeter(p, max_cosets),
            count_homs(p, 3),
            len(classes))
