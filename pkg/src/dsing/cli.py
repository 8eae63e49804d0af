"""Command line interface.

    dsing check KIND N SET [--oracle] [--json] [--allow-nongenerating]
    dsing census KIND N [--out PATH] [--format csv|json] [--max-n K] [--jobs K] [--oracle]
    dsing verify KIND MAX_N [--jobs K]
    dsing spectrum KIND N SET [--json] [--allow-nongenerating]

Exit codes: 0 nonsingular / success, 10 singular (check only),
1 verification disagreement, 64 usage error, 65 invalid connecting set.
"""
from __future__ import annotations

import json
import os
import sys
from dataclasses import asdict

import click

from . import census as census_mod
from . import oracle
from .dihedral import block_decompose, char_poly_factorization
from .errors import ConnectingSetError
from .group import GROUP_KINDS, build_cayley_graph, parse_connecting_set
from .polynomial import evaluate_at_unit_roots
from .report import check, cyclic_psi

EXIT_NONSINGULAR = 0
EXIT_DISAGREEMENT = 1
EXIT_SINGULAR = 10
EXIT_USAGE = 64
EXIT_DATAERR = 65

CONDITION_NAMES = {
    "i": "condition (i): H must equal its set of inverses",
    "ii": "condition (ii): H must not contain the identity",
    "iii": "condition (iii): H must generate the group",
    "parse": "syntax",
}

kind_arg = click.argument("kind", type=click.Choice(GROUP_KINDS))
n_arg = click.argument("n", type=click.IntRange(min=3))


def _load_set(kind, n, text, allow_nongenerating):
    try:
        return parse_connecting_set(text, n, kind, require_generating=not allow_nongenerating)
    except ConnectingSetError as e:
        click.echo(f"error: invalid connecting set ({CONDITION_NAMES[e.condition]}): {e}", err=True)
        raise click.exceptions.Exit(EXIT_DATAERR)


@click.group()
def cli():
    """Singularity of Cayley graphs of cyclic and dihedral groups."""


@cli.command("check")
@kind_arg
@n_arg
@click.argument("set_text", metavar="SET")
@click.option("--oracle", "with_oracle", is_flag=True, help="Cross-check with an exact determinant.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--allow-nongenerating", is_flag=True)
def check_cmd(kind, n, set_text, with_oracle, as_json, allow_nongenerating):
    """Decide whether Cay(G, SET) is singular."""
    H = _load_set(kind, n, set_text, allow_nongenerating)
    report = check(H, with_oracle=with_oracle)
    click.echo(report.to_json(indent=1) if as_json else report.to_text())
    if report.agreement is False:
        click.echo("error: cyclotomic verdict disagrees with the exact determinant", err=True)
    raise click.exceptions.Exit(EXIT_SINGULAR if report.singular else EXIT_NONSINGULAR)


def _census_bound(kind: str, override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get("DS_MAX_N")
    if env:
        return int(env)
    return census_mod.DEFAULT_BOUNDS[kind]


@cli.command("census")
@kind_arg
@n_arg
@click.option("--out", type=click.Path(dir_okay=False, writable=True), help="Write rows here instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--max-n", type=int, default=None, help="Override the size bound (also DS_MAX_N).")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--oracle", "with_oracle", is_flag=True, help="Add an exact determinant column.")
def census_cmd(kind, n, out, fmt, max_n, jobs, with_oracle):
    """Classify every symmetric identity-free subset of the group."""
    bound = _census_bound(kind, max_n)
    if n > bound:
        k = len(census_mod.inverse_classes(kind, n))
        click.echo(
            f"error: n={n} exceeds the {kind} census bound {bound}; this census would classify "
            f"2^{k} = {1 << k} subsets. Pass --max-n or set DS_MAX_N to proceed.",
            err=True,
        )
        raise click.exceptions.Exit(EXIT_USAGE)
    rows = census_mod.census(kind, n, jobs=jobs, with_oracle=with_oracle)
    text = census_mod.rows_to_csv(rows) if fmt == "csv" else census_mod.rows_to_json(rows)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    s = census_mod.summarize(kind, n, rows)
    msg = f"{kind} n={n}: {s.total} subsets, {s.singular} singular ({s.singular_generating} generating)"
    if s.oracle_singular is not None:
        msg += f", oracle singular {s.oracle_singular}"
    click.echo(msg, err=out is None)


@cli.command("verify")
@kind_arg
@click.argument("max_n", type=click.IntRange(min=3))
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--inject-bug", is_flag=True, hidden=True, help="Use a broken divisibility test (harness self-test).")
def verify_cmd(kind, max_n, jobs, inject_bug):
    """Check every verdict and structural identity against the exact oracle."""
    res = census_mod.verify(kind, max_n, jobs=jobs, mutate=inject_bug)
    if res.ok:
        click.echo(f"{kind} n=3..{max_n}: all {res.checked} subsets agree")
        return
    click.echo(f"{kind} n=3..{max_n}: {len(res.failures)} failure(s) among {res.checked} subsets", err=True)
    click.echo("first counterexample:", err=True)
    click.echo(json.dumps(asdict(res.failures[0]), indent=1), err=True)
    raise click.exceptions.Exit(EXIT_DISAGREEMENT)


def _clean(values) -> list[float]:
    return [0.0 if abs(v) < 1e-9 else v for v in values]


def _fmt_floats(values) -> str:
    return ", ".join(f"{v:.6g}" for v in values)


@cli.command("spectrum")
@kind_arg
@n_arg
@click.argument("set_text", metavar="SET")
@click.option("--json", "as_json", is_flag=True)
@click.option("--allow-nongenerating", is_flag=True)
def spectrum_cmd(kind, n, set_text, as_json, allow_nongenerating):
    """Exact characteristic polynomial(s) and approximate eigenvalues."""
    H = _load_set(kind, n, set_text, allow_nongenerating)
    G = build_cayley_graph(H)
    if kind == "cyclic":
        char = oracle.exact_char_poly(G.matrix())
        # eigenvalues of a symmetric circulant are Psi(w^j), all real
        eig = _clean(sorted((z.real for z in evaluate_at_unit_roots(cyclic_psi(H), n)), reverse=True))
        data = {"char": char.to_json(), "eigenvalues": eig}
        lines = [f"char(A) = {char}", f"eigenvalues ~ {_fmt_floats(eig)}"]
    else:
        import numpy as np

        D = block_decompose(G)
        plus, minus = char_poly_factorization(D)
        m, k = np.array(D.M.expand()), np.array(D.N.expand())
        eig_plus = _clean(sorted(np.linalg.eigvalsh(m + k).tolist(), reverse=True))
        eig_minus = _clean(sorted(np.linalg.eigvalsh(m - k).tolist(), reverse=True))
        char = plus * minus
        data = {
            "char_plus": plus.to_json(),
            "char_minus": minus.to_json(),
            "char": char.to_json(),
            "eigenvalues_plus": eig_plus,
            "eigenvalues_minus": eig_minus,
        }
        lines = [
            f"char(M+N) = {plus}",
            f"char(M-N) = {minus}",
            f"char(A)   = {char}",
            f"eigenvalues(M+N) ~ {_fmt_floats(eig_plus)}",
            f"eigenvalues(M-N) ~ {_fmt_floats(eig_minus)}",
        ]
    click.echo(json.dumps(data, indent=1) if as_json else "\n".join(lines))


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="dsing", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(main())
