"""Exhaustive enumeration of connecting sets, censuses and verification sweeps."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator, Optional

from . import oracle
from .dihedral import (
    balanced_neighbor_test,
    block_decompose,
    char_poly_factorization,
    determinant_identity_check,
    dihedral_singularity,
    prime_order_constant,
    walk_polynomials,
    walk_polynomials_via_matrix,
    walk_polynomials_via_walks,
    is_prime,
)
from .errors import StructureError
from .group import ConnectingSet, GroupKind, build_cayley_graph, generates
from .polynomial import divides
from .report import check

CSV_COLUMNS = ["n", "groupKind", "set", "isGenerating", "edgeCount", "verdict", "dividingD"]
DEFAULT_BOUNDS = {"cyclic": 24, "dihedral": 10}


def inverse_classes(kind: GroupKind, n: int) -> list[tuple[str, tuple[int, ...]]]:
    """Inverse-closed classes of non-identity elements, in bitmask order.

    Rotation pairs {a^k, a^-k} come first, then (dihedral) each reflection
    a^j b on its own.
    """
    classes = [("r", tuple(sorted({k, n - k}))) for k in range(1, n // 2 + 1)]
    if kind == "dihedral":
        classes += [("f", (j,)) for j in range(n)]
    return classes


def connecting_set_from_mask(kind: GroupKind, n: int, mask: int) -> ConnectingSet:
    rot: set[int] = set()
    ref: set[int] = set()
    for bit, (tag, members) in enumerate(inverse_classes(kind, n)):
        if mask >> bit & 1:
            (rot if tag == "r" else ref).update(members)
    return ConnectingSet(n, kind, frozenset(rot), frozenset(ref), require_generating=False)


def subset_count(kind: GroupKind, n: int) -> int:
    return 1 << len(inverse_classes(kind, n))


def enumerate_connecting_sets(kind: GroupKind, n: int) -> Iterator[ConnectingSet]:
    """Every symmetric identity-free subset, including empty and non-generating ones."""
    for mask in range(subset_count(kind, n)):
        yield connecting_set_from_mask(kind, n, mask)


def _pool_map(fn, items, jobs: int):
    if jobs <= 1:
        return list(map(fn, items))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields in submission order, so output stays deterministic
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


@dataclass
class CensusRow:
    n: int
    group_kind: str
    set: str
    is_generating: bool
    edge_count: int
    verdict: str
    dividing_d: list[int]
    oracle_determinant: Optional[int] = None

    def csv_fields(self) -> list:
        row = [
            self.n,
            self.group_kind,
            self.set,
            str(self.is_generating).lower(),
            self.edge_count,
            self.verdict,
            " ".join(map(str, self.dividing_d)),
        ]
        if self.oracle_determinant is not None:
            row.append(self.oracle_determinant)
        return row


def _census_row(args) -> CensusRow:
    kind, n, mask, with_oracle = args
    H = connecting_set_from_mask(kind, n, mask)
    rep = check(H, with_oracle=with_oracle)
    return CensusRow(
        n=n,
        group_kind=kind,
        set=H.to_text(),
        is_generating=generates(kind, n, H.elements),
        edge_count=H.group_order() * len(H) // 2,
        verdict=rep.verdict,
        dividing_d=rep.dividing_d,
        oracle_determinant=rep.oracle_determinant,
    )


@dataclass
class CensusSummary:
    kind: str
    n: int
    total: int
    singular: int
    singular_generating: int
    oracle_singular: Optional[int] = None


def census(kind: GroupKind, n: int, jobs: int = 1, with_oracle: bool = False) -> list[CensusRow]:
    if n < 3:
        raise ValueError("n must be at least 3")
    items = [(kind, n, mask, with_oracle) for mask in range(subset_count(kind, n))]
    return _pool_map(_census_row, items, jobs)


def summarize(kind: GroupKind, n: int, rows: list[CensusRow]) -> CensusSummary:
    s = CensusSummary(
        kind=kind,
        n=n,
        total=len(rows),
        singular=sum(r.verdict == "singular" for r in rows),
        singular_generating=sum(r.verdict == "singular" and r.is_generating for r in rows),
    )
    if rows and all(r.oracle_determinant is not None for r in rows):
        s.oracle_singular = sum(r.oracle_determinant == 0 for r in rows)
    return s


def rows_to_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = list(CSV_COLUMNS)
    if rows and rows[0].oracle_determinant is not None:
        header.append("oracleDeterminant")
    w.writerow(header)
    for r in rows:
        w.writerow(r.csv_fields())
    return buf.getvalue()


def rows_to_json(rows: list[CensusRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=1)


# --- verification sweeps -------------------------------------------------


def mutated_divides(p, q) -> bool:
    """Deliberately broken divisibility: only tests linear cyclotomics.

    Used to check that a verification sweep actually catches a bad criterion.
    """
    return p.degree == 1 and divides(p, q)


@dataclass
class Counterexample:
    n: int
    set: str
    check: str
    criterion_verdict: str
    oracle_determinant: Optional[int]
    detail: str = ""


@dataclass
class VerifyResult:
    kind: str
    max_n: int
    checked: int = 0
    failures: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _verify_one(args) -> list[Counterexample]:
    kind, n, mask, mutate = args
    H = connecting_set_from_mask(kind, n, mask)
    div: Callable = mutated_divides if mutate else divides
    rep = check(H, with_oracle=True, divides=div)
    out = []

    def fail(name, detail=""):
        out.append(Counterexample(n, H.to_text(), name, rep.verdict, rep.oracle_determinant, detail))

    if not rep.agreement:
        fail("verdict")
    if kind == "cyclic":
        if rep.predicted_nullity != rep.oracle_nullity:
            fail("nullity", f"predicted {rep.predicted_nullity}, oracle {rep.oracle_nullity}")
        return out

    G = build_cayley_graph(H)
    A = G.matrix()
    try:
        D = block_decompose(G)
    except StructureError as e:
        fail("block-structure", str(e))
        return out
    plus, minus = char_poly_factorization(D)
    if plus * minus != oracle.exact_char_poly(A):
        fail("char-factorization")
    if not determinant_identity_check(D, A):
        fail("determinant-identity")
    w1, w2, w3 = walk_polynomials(H), walk_polynomials_via_matrix(D), walk_polynomials_via_walks(G)
    if not w1 == w2 == w3:
        fail("walk-polynomials", f"pairs {w1}, matrix {w2}, walks {w3}")
    singular = dihedral_singularity(H, divides=div).singular
    if balanced_neighbor_test(H) and not singular:
        fail("balanced-split")
    if is_prime(n) and not balanced_neighbor_test(H) and (prime_order_constant(H) is not None) != singular:
        fail("prime-order")
    return out


def verify(kind: GroupKind, max_n: int, jobs: int = 1, mutate: bool = False, min_n: int = 3) -> VerifyResult:
    """Compare the cyclotomic verdict with the exact oracle on every subset, n in [min_n, max_n]."""
    items = [(kind, n, mask, mutate) for n in range(min_n, max_n + 1) for mask in range(subset_count(kind, n))]
    result = VerifyResult(kind, max_n, checked=len(items))
    for fails in _pool_map(_verify_one, items, jobs):
        result.failures.extend(fails)
    return result
