"""Critical orbit, Markov partition, and the associated integer matrices.

A kneading word of period n determines n orbit points given symbolically by
the shifts of the periodic kneading sequence.  Sorting them in the signed
order yields the partition of the invariant interval cut at the turning
point, and from the ordering permutation every matrix of the K-group
computation is assembled: the cyclic shift, the ordering permutation, the
interval-boundary difference, their product eta, the signed diagonal pieces,
the transition matrix, and the unimodular transforms that relate the two
chain-level descriptions.

Everything here is exact integer (or exact rational) arithmetic; no floats.
"""

from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass

import numpy as np

from .intlinalg import (
    as_int_matrix,
    eye_int,
    is_unimodular,
    solve_rational,
    to_int_matrix,
    zeros_int,
)
from .symbolic import (
    DomainError,
    KneadingWord,
    Order,
    Symbol,
    SymbolSeq,
    is_admissible,
    mt_compare,
)


class ConstructionError(RuntimeError):
    """An internal invariant of the matrix construction failed."""


@dataclass(frozen=True)
class OrbitModel:
    """The critical orbit in symbolic form.

    ``points[i]`` is the itinerary of the (i+1)-st image of the turning
    point, i.e. the kneading sequence shifted ``i`` times.  ``rho`` lists
    the 1-based orbit indices in spatial order (``rho[0]`` is the leftmost
    point).  ``nL`` and ``nR`` count the partition intervals strictly left
    and right of the turning point; ``nL + nR = n - 1``.
    """

    word: KneadingWord
    points: tuple[SymbolSeq, ...]
    rho: tuple[int, ...]
    nL: int
    nR: int

    @property
    def n(self) -> int:
        return self.word.n

    def position(self, i: int) -> int:
        """Spatial rank (1-based) of orbit point ``i`` (1-based)."""
        return self.rho.index(i) + 1


def build_orbit(w: KneadingWord) -> OrbitModel:
    """Sort the orbit points of a kneading word into spatial order.

    Inadmissible words are accepted with a warning: the constructions
    below remain formally defined, but the K-group theorems only cover
    admissible input.
    """
    n = w.n
    if n < 2:
        raise DomainError("orbit construction requires period >= 2")
    if not is_admissible(w):
        warnings.warn(
            f"word {w} is not admissible; matrix constructions proceed formally",
            stacklevel=2,
        )
    seq = w.sequence()
    points = tuple(seq.shift(i) for i in range(n))
    depth = 2 * n

    def cmp(i: int, j: int) -> int:
        return int(mt_compare(points[i - 1], points[j - 1], depth))

    rho = tuple(sorted(range(1, n + 1), key=functools.cmp_to_key(cmp)))
    for k in range(n - 1):
        if cmp(rho[k], rho[k + 1]) != Order.LT:
            raise ConstructionError(
                f"orbit points {rho[k]} and {rho[k + 1]} of {w} do not compare strictly"
            )

    nL = sum(1 for s in w.symbols[:-1] if s is Symbol.L)
    nR = sum(1 for s in w.symbols[:-1] if s is Symbol.R)
    # The turning point is the n-th orbit point and splits the partition.
    if rho[nL] != n:
        raise ConstructionError("turning point is not at spatial rank nL+1")
    return OrbitModel(word=w, points=points, rho=rho, nL=nL, nR=nR)


@dataclass(frozen=True)
class TheoremMatrices:
    """The full matrix family of one kneading word.

    Shapes: ``omega``, ``pi``, ``gamma``, ``theta``, ``Y``, ``thetaprime``
    are n x n; ``phi`` and ``eta`` are (n-1) x n; ``inc`` is n x (n-1);
    ``A``, ``alpha``, ``beta``, ``X``, ``Aprime`` are (n-1) x (n-1).
    """

    omega: np.ndarray
    pi: np.ndarray
    phi: np.ndarray
    eta: np.ndarray
    A: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    theta: np.ndarray
    Y: np.ndarray
    inc: np.ndarray
    X: np.ndarray
    Aprime: np.ndarray
    thetaprime: np.ndarray


def build_matrices(m: OrbitModel) -> TheoremMatrices:
    """Assemble every matrix of the construction from the ordered orbit.

    ``alpha`` is obtained by solving an exact rational system and must come
    out integral; ``X`` (the top square block of the transpose of ``eta``)
    must be unimodular; and the transpose of ``eta`` must factor as
    ``Y @ inc @ X``.  Failure of any of these is a bug, not bad input, and
    raises :class:`ConstructionError`.
    """
    n = m.n
    eps = m.word.values()

    omega = zeros_int(n, n)
    for i in range(n - 1):
        omega[i, i + 1] = 1
    omega[n - 1, 0] = 1

    pi = zeros_int(n, n)
    for k in range(n):
        pi[k, m.rho[k] - 1] = 1

    phi = zeros_int(n - 1, n)
    for k in range(n - 1):
        phi[k, k] = -1
        phi[k, k + 1] = 1

    eta = phi @ pi

    # Diagonal carries the symbol values, last column their negatives; the
    # two clauses overlap at (n, n) and agree because the final value is 0.
    if eps[-1] != 0:
        raise ConstructionError("final symbol value must be 0")
    gamma = zeros_int(n, n)
    for i in range(n):
        gamma[i, i] = eps[i]
    for i in range(n - 1):
        gamma[i, n - 1] = -eps[i]

    theta = gamma @ omega

    beta = zeros_int(n - 1, n - 1)
    for k in range(n - 1):
        beta[k, k] = 1 if k < m.nL else -1

    # alpha = (eta omega eta^T) (eta eta^T)^{-1}, solved exactly over Q.
    S = eta @ eta.T
    B = eta @ omega @ eta.T
    alpha = to_int_matrix(solve_rational(S, B.T).T)

    A = beta @ alpha

    Y = eye_int(n)
    for j in range(n - 1):
        Y[n - 1, j] = -1

    inc = zeros_int(n, n - 1)
    for k in range(n - 1):
        inc[k, k] = 1

    etaT = eta.T.copy()
    X = as_int_matrix(etaT[: n - 1, :])
    if not is_unimodular(X):
        raise ConstructionError("top block of eta-transpose is not unimodular")
    if not np.array_equal(etaT, Y @ inc @ X):
        raise ConstructionError("eta-transpose does not factor as Y inc X")

    Xinv = to_int_matrix(solve_rational(X, eye_int(n - 1)))
    Yinv = to_int_matrix(solve_rational(Y, eye_int(n)))
    Aprime = X @ A.T @ Xinv
    thetaprime = Yinv @ theta.T @ Y

    return TheoremMatrices(
        omega=omega,
        pi=pi,
        phi=phi,
        eta=eta,
        A=A,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        theta=theta,
        Y=Y,
        inc=inc,
        X=X,
        Aprime=Aprime,
        thetaprime=thetaprime,
    )


def transition_matrix(m: OrbitModel) -> np.ndarray:
    """0-1 interval-covering matrix, built independently of ``build_matrices``.

    Interval k sits between the k-th and (k+1)-st orbit points in spatial
    order.  One application of the map sends each orbit point to its orbit
    successor and is monotone on either side of the turning point (the
    partition is cut exactly there), so the image of interval k is the
    interval spanned by the successors of its two endpoints; entry (k, j)
    is 1 iff that span covers interval j.  Purely combinatorial: only the
    ordering permutation is consulted, never numeric orbits.
    """
    n = m.n
    pos = {orbit: rank for rank, orbit in enumerate(m.rho, start=1)}
    A = zeros_int(n - 1, n - 1)
    for k in range(1, n):
        u = pos[m.rho[k - 1] % n + 1]
        v = pos[m.rho[k] % n + 1]
        lo, hi = min(u, v), max(u, v)
        for j in range(lo, hi):
            A[k - 1, j - 1] = 1
    return A
