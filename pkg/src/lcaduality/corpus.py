"""Small exhaustive corpora of algebras, pairs, triples and spaces."""

from __future__ import annotations

import random
from itertools import combinations

from . import topo
from .ba import Ideal, Powerset, is_dense_subset
from .contact import ContactTriple, from_atom_relation, is_lca
from .ideals import Pseudolattice
from .topo import FinSpace


def _order(items: list, seed: int | None) -> list:
    """Sampling order only; every member is still visited."""
    if seed is not None:
        random.Random(seed).shuffle(items)
    return items


def powerset_ideals(n: int) -> list[Ideal]:
    """All ideals of Powerset(n); each is the down-set of one element."""
    A = Powerset(n)
    return [Ideal(A, A.down(a)) for a in A.elements]


def dense_pairs(max_atoms: int, seed: int | None = None) -> list[tuple]:
    out = []
    for n in range(max_atoms + 1):
        A = Powerset(n)
        out += [(A, I) for I in powerset_ideals(n) if is_dense_subset(A, I)]
    return _order(out, seed)


def r_generated(max_atoms: int = 3, seed: int | None = None) -> list[ContactTriple]:
    """Triples on Powerset(n) with contact generated by a reflexive symmetric
    relation on atoms, every element bounded."""
    out = []
    for n in range(max_atoms + 1):
        A = Powerset(n)
        off = list(combinations(range(n), 2))
        for k in range(len(off) + 1):
            for R in combinations(off, k):
                T = from_atom_relation(A, R, name=f"R{n}:{list(R)}")
                out.append(T)
    return _order(out, seed)


def lca_corpus(max_atoms: int = 3, seed: int | None = None) -> list[ContactTriple]:
    return [T for T in r_generated(max_atoms, seed) if is_lca(T)]


def spaces(max_points: int, seed: int | None = None, start: int = 0) -> list[FinSpace]:
    out = []
    for n in range(start, max_points + 1):
        out += topo.all_topologies(n)
    return _order(out, seed)


def zero_dimensional(max_points: int, seed: int | None = None) -> list[FinSpace]:
    out = []
    for n in range(max_points + 1):
        out += topo.partition_topologies(n)
    return _order(out, seed)


def discrete_spaces(max_points: int) -> list[FinSpace]:
    return [topo.discrete(n) for n in range(max_points + 1)]


def pseudolattices(max_atoms: int = 3) -> list[Pseudolattice]:
    """Powersets, their ideals viewed as pseudolattices, and short chains."""
    out = []
    for n in range(max_atoms + 1):
        A = Powerset(n)
        out.append(Pseudolattice.from_algebra(A))
        for I in powerset_ideals(n):
            if not I.is_whole:
                out.append(Pseudolattice.from_ideal(A, I))
    out += [Pseudolattice.chain(k) for k in range(1, 5)]
    return out
