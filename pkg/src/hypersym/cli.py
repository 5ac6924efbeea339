"""Command-line entry point: ``hypersym <subcommand> ...``.

Every subcommand writes one JSON document (or CSV for ``matrices --format
csv``) to stdout; ``parse`` and ``generate`` emit the plain hypergraph file
format so their output can be fed back in.  Exit status is 0 on success, 2 on invalid input
(including a rejected partition), 3 when a search cap is exceeded and 1 for
any other library error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import kernels
from .corpus import HyperflowerParams, hyperflower, random_hypergraph
from .errors import HypersymError, NotOrbitPartition, PartitionInvalid, SearchCapExceeded, ValidationError
from .hypermodel import OrientedHypergraph, dumps, load, sign_function, sigma_transform
from .matrices import laplacians
from .quotient import (
    VertexPartition,
    check_equitable,
    orbit_vertex_partition,
    quotient_matrices,
    quotient_network,
    signed_spectral_split,
    spectral_split,
)
from .signedsym import signed_automorphism_group, signed_redundancy
from .spectra import TOL_EIG, hypergraph_spectrum
from .symmetry import DEFAULT_KIND, KINDS, automorphism_group, classify_pair, orbits

SCHEMA = "hypersym/1"
DECIMALS = 12


def fnum(x: float) -> float:
    """Round to 12 decimals and drop negative zero, so reports are byte-stable."""
    r = round(float(x), DECIMALS)
    return 0.0 if r == 0 else r


def rational(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def fmatrix(m: np.ndarray) -> list:
    return [[fnum(x) if np.issubdtype(m.dtype, np.floating) else int(x) for x in row] for row in m]


def emit(doc: dict, out=None) -> None:
    out = sys.stdout if out is None else out
    out.write(json.dumps({"schema": SCHEMA, **doc}, indent=2, ensure_ascii=False) + "\n")


def _graph(args) -> OrientedHypergraph:
    return load(args.file, allow_multi=args.allow_multi)


def _summary(g: OrientedHypergraph) -> dict:
    return {"n": g.n, "m": g.m, "labels": list(g.labels)}


# -- report builders ------------------------------------------------------------


def spectrum_report(g: OrientedHypergraph, tol: float = TOL_EIG) -> dict:
    spec = hypergraph_spectrum(g, tol)
    return {
        "eigenvalues": [fnum(x) for x in spec.eigenvalues],
        "multiplicities": [{"eigenvalue": fnum(lam), "mult": k} for lam, k in spec.distinct()],
        "eigenfunctions": [
            {lab: fnum(x) for lab, x in zip(g.labels, spec.eigenfunctions[:, k])} for k in range(len(spec))
        ],
    }


def pairs_report(g: OrientedHypergraph) -> list:
    out = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            rel = classify_pair(g, g.labels[i], g.labels[j])
            if rel != {"none"}:
                out.append({"pair": [g.labels[i], g.labels[j]], "relations": sorted(rel)})
    return out


def group_report(g: OrientedHypergraph, kind: str) -> dict:
    grp = automorphism_group(g, kind)
    orb = orbits(grp)
    return {
        "kind": kind,
        "order": grp.order,
        "generators": [p.format(g.labels) for p in grp.generators],
        "factors": [
            {"support": sorted(g.labels[i] for i in f.support), "order": f.order} for f in grp.factors
        ],
        "fixed_points": [g.labels[i] for i in sorted(grp.fixed_points)],
        "orbits": orb.named(g.labels),
        "redundancy": rational(orb.redundancy),
        "redundancy_decimal": fnum(float(orb.redundancy)),
    }


def signed_report(g: OrientedHypergraph, kind: str, sigma_cap: int | None, threads: int) -> dict:
    res = signed_redundancy(g, kind, sign_cap=sigma_cap, workers=threads)
    return {
        "kind": kind,
        "r_unsigned": rational(res.r_unsigned),
        "r_signed": rational(res.r_signed),
        "r_signed_decimal": fnum(float(res.r_signed)),
        "sigma": list(res.sigma),
        "order": res.group.order,
        "generators": [p.format(g.labels) for p in res.group.generators],
        "signed_orbits": res.orbits.signed_named(g.labels),
        "examined": res.examined,
    }


def _parse_partition(g: OrientedHypergraph, text: str) -> VertexPartition:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PartitionInvalid(f"partition is not valid JSON: {exc}") from None
    if not isinstance(raw, list) or not all(isinstance(p, list) for p in raw):
        raise PartitionInvalid("partition must be a JSON list of lists of vertex labels")
    return VertexPartition(tuple(tuple(g.index(v) for v in p) for p in raw), g.n)


def _parse_sigma(g: OrientedHypergraph, text: str) -> tuple:
    """Either a comma list of +1/-1 values or a comma list of labels to negate."""
    items = [s.strip() for s in text.split(",") if s.strip()]
    if items and all(s in ("1", "+1", "-1") for s in items) and len(items) == g.n:
        return tuple(int(s) for s in items)
    return sign_function(g, items)


def quotient_report(
    g: OrientedHypergraph,
    part: VertexPartition | None = None,
    sigma: tuple | None = None,
    kind: str = DEFAULT_KIND,
    tol: float = TOL_EIG,
) -> dict:
    target = g if sigma is None else sigma_transform(g, sigma)
    part = orbit_vertex_partition(target, kind) if part is None else part
    q, qsym = quotient_matrices(laplacians(target).symmetrised, part)
    net = quotient_network(target, part)
    split = spectral_split(g, part, tol=tol, kind=kind) if sigma is None else signed_spectral_split(
        g, sigma, part, tol=tol, kind=kind
    )
    doc = {
        "parts": [[g.labels[i] for i in p] for p in part.parts],
        "Q": fmatrix(q),
        "Qsym": fmatrix(qsym),
        "network": {
            "nodes": list(net.nodes),
            "edges": [{"source": a, "target": b, "weight": fnum(w)} for a, b, w in net.edges],
        },
        "quotient_eigenvalues": [fnum(x) for x in split.quotient_spectrum.eigenvalues],
        "split": [
            {"eigenvalue": fnum(r.eigenvalue), "mult": r.mult, "quotient_mult": r.quotient_mult,
             "zerosum_mult": r.zerosum_mult}
            for r in split.rows
        ],
    }
    if sigma is not None:
        doc["sigma"] = list(sigma)
    return doc


def analyze(g: OrientedHypergraph, kind: str = DEFAULT_KIND, sigma_cap: int | None = None,
            threads: int = 1, tol: float = TOL_EIG) -> dict:
    signed = signed_report(g, kind, sigma_cap, threads)
    sigma = tuple(signed["sigma"])
    return {
        "input": _summary(g),
        "spectrum": spectrum_report(g, tol),
        "pairs": pairs_report(g),
        "automorphisms": [group_report(g, k) for k in KINDS],
        "signed": signed,
        "quotient": quotient_report(g, kind=kind, tol=tol),
        "signed_quotient": quotient_report(g, sigma=sigma, kind=kind, tol=tol),
    }


# -- subcommands ----------------------------------------------------------------


def cmd_parse(args):
    """Validate and write the hypergraph in its JSON file format."""
    g = _graph(args)
    text = dumps(g) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_matrices(args):
    g = _graph(args)
    bundle = laplacians(g)
    names = ["I", "D", "A", "delta", "L", "Lsym"] if args.which == "all" else [args.which]
    if args.format == "csv":
        if len(names) != 1:
            raise ValidationError("CSV output needs a single --which matrix")
        m = bundle.get(names[0])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = [h.name for h in g.edges] if names[0] == "I" else list(g.labels)
        w.writerow([""] + header)
        for lab, row in zip(g.labels, fmatrix(m)):
            w.writerow([lab] + row)
        sys.stdout.write(buf.getvalue())
        return
    emit({"input": _summary(g), "matrices": {k: fmatrix(bundle.get(k)) for k in names}})


def cmd_spectrum(args):
    g = _graph(args)
    emit({"input": _summary(g), "spectrum": spectrum_report(g, args.tol)})


def cmd_pairs(args):
    g = _graph(args)
    emit({"input": _summary(g), "pairs": pairs_report(g)})


def cmd_aut(args):
    g = _graph(args)
    kinds = KINDS if args.kind == "all" else (args.kind,)
    emit({"input": _summary(g), "automorphisms": [group_report(g, k) for k in kinds]})


def cmd_signed_aut(args):
    g = _graph(args)
    if args.sigma:
        sigma = _parse_sigma(g, args.sigma)
        grp = signed_automorphism_group(g, sigma, args.kind)
        orb = grp.orbits()
        doc = {
            "kind": args.kind,
            "sigma": list(sigma),
            "order": grp.order,
            "generators": [p.format(g.labels) for p in grp.generators],
            "signed_orbits": orb.signed_named(g.labels),
            "redundancy": rational(orb.redundancy),
        }
    else:
        doc = signed_report(g, args.kind, args.sigma_cap, args.threads)
    emit({"input": _summary(g), "signed": doc})


def cmd_quotient(args):
    g = _graph(args)
    sigma = None
    if args.sigma:
        sigma = _parse_sigma(g, args.sigma)
    elif args.signed:
        sigma = signed_redundancy(g, args.kind, sign_cap=args.sigma_cap, workers=args.threads).sigma
    part = None
    if args.partition:
        part = _parse_partition(g, args.partition)
        target = g if sigma is None else sigma_transform(g, sigma)
        orbit = orbit_vertex_partition(target, args.kind)
        if set(part.parts) != set(orbit.parts):
            if not args.unchecked_partition:
                raise NotOrbitPartition("partition is not the orbit partition; pass --unchecked-partition")
            if not check_equitable(laplacians(target).symmetrised, part):
                raise NotOrbitPartition("partition is not equitable")
    emit({"input": _summary(g), "quotient": quotient_report(g, part, sigma, args.kind, args.tol)})


def cmd_generate(args):
    if args.family == "hyperflower":
        g = hyperflower(HyperflowerParams(args.l, args.t, args.core), flip_one=args.flip_one)
    else:
        g = random_hypergraph(args.n, args.m, args.max_card, args.seed)
    sys.stdout.write(dumps(g) + "\n")


def cmd_analyze(args):
    g = _graph(args)
    emit(analyze(g, args.kind, args.sigma_cap, args.threads, args.tol))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypersym", description=__doc__.splitlines()[0])
    parser.add_argument("--allow-multi", action="store_true", help="accept repeated hyperedges")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for the sign search")
    parser.add_argument("--version", action="version", version=f"%(prog)s ({kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", type=Path, help=".json hypergraph or .rxn reaction list")
        p.set_defaults(func=func)
        return p

    p = with_file("parse", cmd_parse, "validate a .json or .rxn file and write it as JSON")
    p.add_argument("-o", "--output", type=Path, help="write here instead of stdout")
    p = with_file("matrices", cmd_matrices, "incidence, degree, adjacency and Laplacian matrices")
    p.add_argument("--which", choices=["I", "D", "A", "delta", "L", "Lsym", "all"], default="all")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p = with_file("spectrum", cmd_spectrum, "normalised Laplacian spectrum")
    p.add_argument("--tol", type=float, default=TOL_EIG)
    with_file("pairs", cmd_pairs, "duplicate, twin and anti- pairs")
    p = with_file("aut", cmd_aut, "automorphism groups")
    p.add_argument("--kind", choices=list(KINDS) + ["all"], default="all")
    for name, func, help in (
        ("signed-aut", cmd_signed_aut, "signed automorphisms and signed redundancy"),
        ("quotient", cmd_quotient, "quotient matrices, network and spectral split"),
        ("analyze", cmd_analyze, "full report"),
    ):
        p = with_file(name, func, help)
        p.add_argument("--kind", choices=list(KINDS), default=DEFAULT_KIND)
        p.add_argument("--sigma-cap", type=int, default=None, help="largest n for the sign search")
        if name != "signed-aut":
            p.add_argument("--tol", type=float, default=TOL_EIG)
        if name != "analyze":
            p.add_argument("--sigma", help="comma list of +1/-1 per vertex, or labels to negate")
        if name == "quotient":
            p.add_argument("--signed", action="store_true", help="use the minimising sign function")
            p.add_argument("--partition", help='JSON list of label lists, e.g. [["a","b"],["c"]]')
            p.add_argument("--unchecked-partition", action="store_true",
                           help="accept a non-orbit partition (equitability is still checked)")

    p = sub.add_parser("generate", help="emit a generated hypergraph")
    gen = p.add_subparsers(dest="family", required=True)
    hf = gen.add_parser("hyperflower")
    hf.add_argument("--l", type=int, required=True)
    hf.add_argument("--t", type=int, required=True)
    hf.add_argument("--core", type=int, required=True)
    hf.add_argument("--flip-one", action="store_true")
    rnd = gen.add_parser("random")
    rnd.add_argument("--n", type=int, required=True)
    rnd.add_argument("--m", type=int, required=True)
    rnd.add_argument("--max-card", type=int, default=3)
    rnd.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except SearchCapExceeded as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, NotOrbitPartition, FileNotFoundError) as exc:
        code = getattr(exc, "code", "io.not_found")
        print(f"error [{code}]: {exc}", file=sys.stderr)
        return 2
    except HypersymError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
