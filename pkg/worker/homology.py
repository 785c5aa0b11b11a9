"""Reduced simplicial homology ranks over F_p.

Only Betti-number vanishing is certified here; fundamental groups are not
computed, so every "connectivity" value in this module is homological.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from shared.constants import PRIME_MAX
from worker.simplicial import (
    SimplicialComplex,
    configuration_complex,
    connectivity_lower_bound,
    euler_characteristic,
    f_vector,
)

logger = logging.getLogger(__name__)

EMPTY_COMPLEX_CONNECTIVITY = -2


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    factor = 3
    while factor * factor <= p:
        if p % factor == 0:
            return False
        factor += 2
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p > PRIME_MAX:
        raise ValueError(f"prime {p} exceeds the supported maximum {PRIME_MAX}")


@dataclass(frozen=True, eq=False)
class MatrixModP:
    p: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        _check_prime(self.p)
        entries = np.asarray(self.entries, dtype=np.int64)
        if entries.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        object.__setattr__(self, "entries", entries % self.p)

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    def __matmul__(self, other: "MatrixModP") -> "MatrixModP":
        if other.p != self.p:
            raise ValueError("matrices over different fields")
        return MatrixModP(self.p, (self.entries @ other.entries) % self.p)

    def is_zero(self) -> bool:
        return not self.entries.any()


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers up to the last nonvanishing degree (always at least b~_0)."""

    p: int
    reduced_betti: tuple[int, ...]
    dimension: int

    @property
    def reduced_euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.reduced_betti))

    @property
    def all_vanishing(self) -> bool:
        return not any(self.reduced_betti)

    def render(self) -> str:
        return " ".join(["betti", str(self.p), *(str(b) for b in self.reduced_betti)])


def boundary_matrix(K: SimplicialComplex, k: int, p: int) -> MatrixModP:
    """Matrix of d_k from k-chains to (k-1)-chains; d_0 is the augmentation."""
    _check_prime(p)
    if not 0 <= k <= K.dimension:
        raise ValueError(f"boundary degree {k} outside [0, {K.dimension}]")
    columns = K.faces(k)
    if k == 0:
        return MatrixModP(p, np.ones((1, len(columns)), dtype=np.int64))
    row_index = K.index_of(k - 1)
    entries = np.zeros((len(row_index), len(columns)), dtype=np.int64)
    for j, face in enumerate(columns):
        for i in range(len(face)):
            entries[row_index[face[:i] + face[i + 1 :]], j] = 1 if i % 2 == 0 else -1
    return MatrixModP(p, entries)


def rank_mod_p(matrix: MatrixModP) -> int:
    """Gaussian elimination over F_p, pivoting on the first nonzero entry."""
    p = matrix.p
    a = matrix.entries.copy()
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.flatnonzero(a[rank:, col])
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inverse = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inverse) % p
        below = rank + 1 + np.flatnonzero(a[rank + 1 :, col])
        if below.size:
            a[below] = (a[below] - np.outer(a[below, col], a[rank])) % p
        rank += 1
    return rank


def betti_numbers(K: SimplicialComplex, p: int) -> BettiProfile:
    if K.is_empty:
        raise ValueError("reduced Betti numbers are undefined for the empty complex")
    counts = f_vector(K)
    ranks = [rank_mod_p(boundary_matrix(K, k, p)) for k in range(K.dimension + 1)]
    ranks.append(0)
    betti = [counts[k] - ranks[k] - ranks[k + 1] for k in range(K.dimension + 1)]
    while len(betti) > 1 and betti[-1] == 0:
        betti.pop()
    profile = BettiProfile(p=p, reduced_betti=tuple(betti), dimension=K.dimension)
    if profile.reduced_euler != euler_characteristic(K) - 1:
        raise RuntimeError(f"reduced Euler relation violated over F_{p}: {betti}")
    return profile


def connectivity_from_profile(profile: BettiProfile) -> int:
    """Largest h with b~_i = 0 for all i <= h; top dimension when all vanish."""
    for k, b in enumerate(profile.reduced_betti):
        if b:
            return k - 1
    return profile.dimension


def homological_connectivity(K: SimplicialComplex, p: int, allow_empty: bool = False) -> int:
    if K.is_empty:
        if not allow_empty:
            raise ValueError("connectivity is undefined for the empty complex")
        logger.warning("empty_complex_connectivity", extra={"value": EMPTY_COMPLEX_CONNECTIVITY})
        return EMPTY_COMPLEX_CONNECTIVITY
    return connectivity_from_profile(betti_numbers(K, p))


@dataclass(frozen=True)
class ConnectivityCertificate:
    sizes: tuple[int, ...]
    caps: tuple[int, ...]
    r: int
    d: int
    lower_bound: int
    connectivity: dict[int, int] = field(default_factory=dict)
    acyclic: dict[int, bool] = field(default_factory=dict)

    @property
    def target(self) -> int:
        return (self.d + 1) * (self.r - 1)

    @property
    def meets_bound(self) -> bool:
        return all(
            self.acyclic[p] or conn >= self.lower_bound for p, conn in self.connectivity.items()
        )

    @property
    def clears_target(self) -> bool:
        return self.lower_bound + 2 > self.target

    def render(self) -> list[str]:
        lines = [
            f"configuration sizes={','.join(map(str, self.sizes))} "
            f"caps={','.join(map(str, self.caps))} r={self.r} d={self.d}",
            f"lower_bound {self.lower_bound} target {self.target} "
            f"clears_target {'yes' if self.clears_target else 'no'}",
        ]
        for p, conn in sorted(self.connectivity.items()):
            shown = "acyclic" if self.acyclic[p] else str(conn)
            status = "PASS" if self.acyclic[p] or conn >= self.lower_bound else "FAIL"
            lines.append(f"prime {p} hconn {shown} {status}")
        return lines


def certify_configuration(
    sizes: Sequence[int],
    caps: Sequence[int],
    r: int,
    d: int,
    primes: Sequence[int],
) -> ConnectivityCertificate:
    """Compare the homological connectivity of the configuration complex with its predicted bound."""
    complex_ = configuration_complex(sizes, caps, r)
    bound = connectivity_lower_bound(sizes, caps, r)
    connectivity: dict[int, int] = {}
    acyclic: dict[int, bool] = {}
    for p in primes:
        profile = betti_numbers(complex_, p)
        connectivity[p] = connectivity_from_profile(profile)
        acyclic[p] = profile.all_vanishing
    return ConnectivityCertificate(
        sizes=tuple(sizes),
        caps=tuple(caps),
        r=r,
        d=d,
        lower_bound=bound,
        connectivity=connectivity,
        acyclic=acyclic,
    )
