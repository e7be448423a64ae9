"""Desk-scale Jack symmetric functions and character evaluation.

The deformed power-sum inner product <p_lam, p_mu> = delta * z_lam *
alpha^{l(lam)} makes the Jack basis the unique orthogonal family that is
dominance-triangular over the monomial basis, so Gram-Schmidt along any
linear extension of dominance produces it.  Coefficients are kept in the
power-sum basis throughout; theta_{1^n} = 1 fixes the normalization.

This module also carries the independent alpha = 1 oracle (symmetric-group
characters via Murnaghan-Nakayama), literal transcriptions of the closed
multirectangular polynomials for the first three characters, and the
special-value identities at alpha in {1, 2, 1/2} that tie characters to
map sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .algebra import SQRT2, MultiPoly, Sqrt2
from .diagrams import Partition, YoungDiagram, normalized_embeddings
from .enumeration import conservative_maps
from .maps import bicolored_graph
from .oriented import OrientedMap, bicolored_graph_oriented

Scalar = Union[Fraction, Sqrt2]

JACK_SIZE_GUARD = 6


class JackGuardError(ValueError):
    pass


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, maxpart), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(d, d, ())
    return tuple(out)


def z_of(parts: Sequence[int]) -> int:
    mult: dict[int, int] = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    out = 1
    for i, m in mult.items():
        out *= i ** m * math.factorial(m)
    return out


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    out = [0] * parts[0]
    for p in parts:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff a is dominated by b (same size)."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


@lru_cache(maxsize=None)
def _p_in_exponents(d: int):
    """Full expansion of each p_mu (mu |- d) in d variables.

    Returns {mu: {sorted exponent tuple: integer coefficient}}; the
    coefficient of m_lam in p_mu is the entry at the exponent tuple lam
    padded with zeros.
    """
    out = {}
    for mu in partitions_of(d):
        poly = {(0,) * d: 1}
        for part in mu:
            nxt: dict[tuple[int, ...], int] = {}
            for exps, c in poly.items():
                for i in range(d):
                    e = list(exps)
                    e[i] += part
                    key = tuple(e)
                    nxt[key] = nxt.get(key, 0) + c
            poly = nxt
        out[mu] = poly
    return out


@lru_cache(maxsize=None)
def _m_to_p(d: int) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
    """Expansion of each monomial symmetric function in the p basis.

    Obtained by inverting the (p -> m) coefficient matrix over the
    partitions of d; exact Gaussian elimination.
    """
    parts = list(partitions_of(d))
    index = {lam: i for i, lam in enumerate(parts)}
    k = len(parts)
    p_exp = _p_in_exponents(d)
    # matrix[i][j] = coefficient of m_{parts[j]} in p_{parts[i]}
    mat = [[Fraction(0)] * k for _ in range(k)]
    for i, mu in enumerate(parts):
        poly = p_exp[mu]
        for lam in parts:
            key = tuple(sorted(lam + (0,) * (d - len(lam)), reverse=True))
            c = poly.get(key)
            if c:
                mat[i][index[lam]] = Fraction(c)
    # invert: solve mat^T x = e_lam for each lam, i.e. m_lam = sum x_mu p_mu
    aug = [[mat[j][i] for j in range(k)] + [Fraction(int(i == c)) for c in range(k)]
           for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pc = aug[col][col]
        aug[col] = [x / pc for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = {}
    for j, lam in enumerate(parts):
        out[lam] = {parts[i]: aug[i][k + j] for i in range(k)
                    if aug[i][k + j] != 0}
    return out


def _inner(f: dict, g: dict, alpha: Fraction) -> Fraction:
    total = Fraction(0)
    for mu, c in f.items():
        d = g.get(mu)
        if d:
            total += c * d * z_of(mu) * alpha ** len(mu)
    return total


def _extensions(d: int):
    """Two linear extensions of dominance order (increasing)."""
    parts = partitions_of(d)
    ext1 = sorted(parts)  # lexicographic refines dominance
    ext2 = sorted(parts, key=conjugate, reverse=True)
    return ext1, ext2


@lru_cache(maxsize=None)
def _jack_family(d: int, alpha: Fraction, extension: int = 0):
    """theta tables for all |lam| = d at a fixed alpha: {lam: {mu: theta}}."""
    if alpha <= 0:
        raise JackGuardError("alpha must be positive")
    order = _extensions(d)[extension]
    m_in_p = _m_to_p(d)
    basis: dict[tuple[int, ...], dict] = {}
    norms: dict[tuple[int, ...], Fraction] = {}
    for lam in order:
        v = dict(m_in_p[lam])
        for kappa in basis:
            c = _inner(v, basis[kappa], alpha) / norms[kappa]
            if c:
                for mu, x in basis[kappa].items():
                    v[mu] = v.get(mu, Fraction(0)) - c * x
        v = {mu: c for mu, c in v.items() if c != 0}
        basis[lam] = v
        norms[lam] = _inner(v, v, alpha)
    ones = (1,) * d
    out = {}
    for lam, v in basis.items():
        scale = v[ones]
        out[lam] = {mu: c / scale for mu, c in v.items()}
    return out


def jack_in_p(lam, alpha, force: bool = False,
              extension: int = 0) -> dict[tuple[int, ...], Fraction]:
    """All theta coefficients of one Jack function: J_lam = sum theta_mu p_mu.

    The table covers every partition mu of |lam|, explicit zeros included.
    """
    lam = tuple(Partition(lam).parts)
    alpha = Fraction(alpha)
    if sum(lam) > JACK_SIZE_GUARD and not force:
        raise JackGuardError(f"|lambda| = {sum(lam)} exceeds the guard "
                             f"({JACK_SIZE_GUARD})")
    sparse = _jack_family(sum(lam), alpha, extension)[lam]
    return {mu: sparse.get(mu, Fraction(0))
            for mu in partitions_of(sum(lam))}


def jack_inner_product(f: dict, g: dict, alpha) -> Fraction:
    return _inner(f, g, Fraction(alpha))


@dataclass(frozen=True)
class JackParams:
    """Deformation data: alpha > 0 and a square root A with A^2 = alpha."""

    alpha: Fraction
    A: Scalar

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if not isinstance(self.A, Sqrt2):
            object.__setattr__(self, "A", Fraction(self.A))
        if self.A * self.A != self.alpha:
            raise ValueError("A^2 must equal alpha")

    @classmethod
    def from_A(cls, a: Scalar) -> "JackParams":
        a = a if isinstance(a, Sqrt2) else Fraction(a)
        alpha = a * a
        if isinstance(alpha, Sqrt2):
            alpha = alpha.to_fraction()
        return cls(alpha, a)


def ch(pi, lam, params: JackParams, force: bool = False) -> Scalar:
    """Normalized Jack character Ch_pi(lambda) at a concrete parameter.

    A^{l(pi)-|pi|} * binom(|lam|-|pi|+m_1(pi), m_1(pi)) * z_pi *
    theta_{pi u 1^(|lam|-|pi|)}(lam); zero when |lam| < |pi|.  The A-power
    takes the sign branch from ``params``.
    """
    pi = Partition(pi)
    lam = Partition(lam) if not isinstance(lam, Partition) else lam
    if lam.size < pi.size:
        return params.A * 0
    rho = tuple(sorted(pi.parts + (1,) * (lam.size - pi.size), reverse=True))
    theta = jack_in_p(lam.parts, params.alpha,
                      force=force).get(rho, Fraction(0))
    m1 = pi.mult(1)
    binom = math.comb(lam.size - pi.size + m1, m1)
    return params.A ** (pi.length - pi.size) * (binom * pi.z * theta)


# -- independent alpha = 1 oracle: symmetric-group characters ---------------


@lru_cache(maxsize=None)
def sn_character(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """chi^lam(rho) by Murnaghan-Nakayama border-strip recursion."""
    lam = tuple(p for p in lam if p)
    rho = tuple(p for p in rho if p)
    if sum(lam) != sum(rho):
        raise ValueError("lambda and rho must have equal size")
    if not lam:
        return 1
    r = rho[0]
    rest = rho[1:]
    size = len(lam)
    betas = [lam[i] + (size - 1 - i) for i in range(size)]
    bset = set(betas)
    total = 0
    for b in betas:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in betas if nb < x < b)
        new_betas = sorted((x for x in betas if x != b), reverse=True)
        new_betas.append(nb)
        new_betas.sort(reverse=True)
        new_lam = tuple(new_betas[j] - (size - 1 - j) for j in range(size))
        total += (-1) ** height * sn_character(new_lam, rest)
    return total


def sn_dimension(lam) -> int:
    lam = tuple(Partition(lam).parts)
    return sn_character(lam, (1,) * sum(lam))


def normalized_sn_character(pi, lam) -> Fraction:
    """The alpha = 1 character normalization: (n)_{|pi|} chi/dim."""
    pi = Partition(pi)
    lam = Partition(lam)
    if lam.size < pi.size:
        return Fraction(0)
    rho = tuple(sorted(pi.parts + (1,) * (lam.size - pi.size), reverse=True))
    falling = math.factorial(lam.size) // math.factorial(lam.size - pi.size)
    return Fraction(falling * sn_character(lam.parts, rho),
                    sn_dimension(lam.parts))


# -- closed multirectangular polynomials for Ch_1, Ch_2, Ch_3 ---------------


def stanley_ch_poly(n: int, ell: int) -> MultiPoly:
    """The closed polynomial in (gamma; p_1..p_ell; q_1..q_ell) for Ch_n."""
    if n not in (1, 2, 3):
        raise ValueError("closed form available only for n in {1, 2, 3}")
    g = MultiPoly.variable("g")
    p = [None] + [MultiPoly.variable(f"p{i}") for i in range(1, ell + 1)]
    q = [None] + [MultiPoly.variable(f"q{i}") for i in range(1, ell + 1)]
    idx = range(1, ell + 1)
    if n == 1:
        out = MultiPoly()
        for i in idx:
            out = out + p[i] * q[i]
        return out
    if n == 2:
        out = MultiPoly()
        for i in idx:
            out = out + p[i] * q[i] * (q[i] - p[i] + g)
        for i in idx:
            for j in idx:
                if i < j:
                    out = out - 2 * (p[i] * p[j] * q[j])
        return out
    out = MultiPoly()
    for i in idx:
        bracket = (q[i] * q[i] - 3 * (p[i] * q[i]) + p[i] * p[i]
                   + 3 * (g * (q[i] - p[i])) + 2 * (g * g) + 1)
        out = out + p[i] * q[i] * bracket
    for i in idx:
        for j in idx:
            if i < j:
                out = out - 3 * (p[i] * p[j] * q[j]
                                 * ((q[i] - p[i] + g) + (q[j] - p[j] + g)))
    for i in idx:
        for j in idx:
            for k in idx:
                if i < j < k:
                    out = out + 6 * (p[i] * p[j] * p[k] * q[k])
    return out


def ch_stanley(n: int, gamma, P: Sequence, Q: Sequence):
    """(full value, top-homogeneous value) of the closed Ch_n polynomial."""
    if len(P) != len(Q):
        raise ValueError("P and Q must have the same length")
    ell = len(P)
    poly = stanley_ch_poly(n, ell)
    assignment = {"g": Fraction(gamma)}
    for i, (pv, qv) in enumerate(zip(P, Q), start=1):
        assignment[f"p{i}"] = Fraction(pv)
        assignment[f"q{i}"] = Fraction(qv)
    return (poly.evaluate(assignment),
            poly.homogeneous_part(n + 1).evaluate(assignment))


# -- special-value identities (Stanley formulas) ----------------------------


def _face_permutation(pi: Partition) -> tuple[int, ...]:
    img = []
    offset = 0
    for part in pi.parts:
        img.extend(list(range(offset + 1, offset + part)) + [offset])
        offset += part
    return tuple(img)


def oriented_face_type_maps(pi):
    """All oriented maps whose faces are one fixed polygon collection.

    With the face permutation w of cycle type pi fixed, these are exactly
    the factorizations sigma2 o sigma1 = w, one map per choice of sigma1.
    """
    from itertools import permutations as iperm

    pi = Partition(pi)
    w = _face_permutation(pi)
    k = pi.size
    for s1 in iperm(range(k)):
        inv1 = [0] * k
        for i, v in enumerate(s1):
            inv1[v] = i
        s2 = tuple(w[inv1[i]] for i in range(k))
        yield OrientedMap(s1, s2)


def stanley_special(pi, lam, alpha, force: bool = False):
    """(character oracle value, map-sum value) at alpha in {1, 2, 1/2}.

    alpha = 1: signed embedding sum over oriented maps with face-type pi.
    alpha = 2 (A = sqrt2) and 1/2 (A = 1/sqrt2): weighted embedding sums
    over non-oriented conservative maps of face-type pi, computed exactly
    in Q[sqrt(2)].
    """
    pi = Partition(pi)
    lam = Partition(lam)
    alpha = Fraction(alpha)
    if pi.size + pi.length > 6 and not force:
        raise JackGuardError("|pi| + l(pi) exceeds the guard (6)")
    if lam.size > JACK_SIZE_GUARD and not force:
        raise JackGuardError("|lambda| exceeds the guard (6)")
    diagram = YoungDiagram(lam.parts)
    sign = -1 if pi.length % 2 else 1

    if alpha == 1:
        a = Fraction(1)
        oracle = ch(pi.parts, lam, JackParams.from_A(a), force=force)
        total = Fraction(0)
        for om in oriented_face_type_maps(pi):
            total += normalized_embeddings(bicolored_graph_oriented(om),
                                           diagram, a)
        return oracle, sign * total

    if alpha == 2:
        a = SQRT2
        base = Sqrt2(0, Fraction(-1, 2))  # -1/sqrt2
    elif alpha == Fraction(1, 2):
        a = Sqrt2(0, Fraction(1, 2))  # 1/sqrt2
        base = Sqrt2(0, Fraction(1, 2))
    else:
        raise ValueError("alpha must be one of 1, 2, 1/2")

    oracle = ch(pi.parts, lam, JackParams.from_A(a), force=force)
    total = a * 0
    for m in conservative_maps(pi.parts):
        graph = bicolored_graph(m)
        v = graph.blacks + graph.whites
        weight = base ** (pi.size + pi.length - v)
        total = total + weight * normalized_embeddings(graph, diagram, a)
    mapsum = sign * total
    if isinstance(oracle, Sqrt2) and not isinstance(mapsum, Sqrt2):
        mapsum = Sqrt2.of(mapsum)
    return oracle, mapsum
