"""Single-graph singularity checks and the serializable report."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional

from . import oracle
from .circulant import circulant_singularity
from .dihedral import dihedral_singularity
from .group import ConnectingSet, build_cayley_graph
from .polynomial import IntPolynomial, divides

SINGULAR = "singular"
NONSINGULAR = "nonsingular"


def cyclic_psi(H: ConnectingSet) -> IntPolynomial:
    """Associated polynomial of Cay(C_n, H): sum of x^k over a^k in H."""
    return IntPolynomial.from_exponents(H.rotations)


@dataclass
class SingularityReport:
    group_kind: str
    n: int
    connecting_set: str
    verdict: str
    dividing_d: list[int]
    tested_polynomial: IntPolynomial
    # cyclic: nullity of the graph itself; dihedral: None
    predicted_nullity: Optional[int] = None
    # dihedral only: nullity of M^2 - N^2
    block_nullity: Optional[int] = None
    oracle_determinant: Optional[int] = None
    oracle_nullity: Optional[int] = None
    agreement: Optional[bool] = None

    @property
    def singular(self) -> bool:
        return self.verdict == SINGULAR

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tested_polynomial"] = self.tested_polynomial.to_json()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> SingularityReport:
        d = dict(d)
        d["tested_polynomial"] = IntPolynomial.from_json(d["tested_polynomial"])
        return cls(**d)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> SingularityReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        poly_name = "Psi" if self.group_kind == "cyclic" else "Psi' - Psi''"
        lines = [
            f"group:      {self.group_kind} n={self.n}",
            f"set:        {self.connecting_set}",
            f"verdict:    {self.verdict}",
            f"{poly_name}: {self.tested_polynomial}",
            f"Phi_d | poly for d in: {self.dividing_d or 'none'}",
        ]
        if self.predicted_nullity is not None:
            lines.append(f"nullity:    {self.predicted_nullity}")
        if self.block_nullity is not None:
            lines.append(f"block nullity (M^2 - N^2): {self.block_nullity}")
        if self.oracle_determinant is not None:
            lines.append(f"oracle det: {self.oracle_determinant}")
            lines.append(f"oracle nullity: {self.oracle_nullity}")
            lines.append(f"agreement:  {'yes' if self.agreement else 'NO'}")
        return "\n".join(lines)


def check(H: ConnectingSet, with_oracle: bool = False, divides=divides) -> SingularityReport:
    """Decide singularity of Cay(G, H) by the cyclotomic criterion.

    With ``with_oracle`` the adjacency matrix is also built and its exact
    determinant and nullity recorded alongside an agreement flag.
    """
    if H.kind == "cyclic":
        v = circulant_singularity(cyclic_psi(H), H.n, divides=divides)
        report = SingularityReport(
            group_kind=H.kind,
            n=H.n,
            connecting_set=H.to_text(),
            verdict=SINGULAR if v.singular else NONSINGULAR,
            dividing_d=list(v.dividing),
            tested_polynomial=v.polynomial,
            predicted_nullity=v.nullity,
        )
    else:
        dv = dihedral_singularity(H, divides=divides)
        report = SingularityReport(
            group_kind=H.kind,
            n=H.n,
            connecting_set=H.to_text(),
            verdict=SINGULAR if dv.singular else NONSINGULAR,
            dividing_d=list(dv.test.dividing),
            tested_polynomial=dv.delta,
            block_nullity=dv.block_nullity,
        )
    if with_oracle:
        A = build_cayley_graph(H).matrix()
        report.oracle_determinant = oracle.exact_determinant(A)
        report.oracle_nullity = oracle.nullity(A)
        report.agreement = report.singular == (report.oracle_determinant == 0)
    return report
