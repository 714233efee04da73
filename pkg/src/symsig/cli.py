"""Command-line front end.

Subcommands: signature, sympow, chartable, lattice, bundles, verify.
Group specs use the singularity naming: A:m (cyclic of order m+1), D:n
(binary dihedral BD_n), E6, E7, E8, and cyclic:n:a for the diagonal group
1/n(1,a).  All numeric output is exact (rationals as p/q); identical argv
yields byte-identical output.  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from symsig import _kernel
from symsig.characters import irreducible_table
from symsig.cyclotomic import format_value
from symsig.groups import (
    BadSpec,
    BinaryDihedral,
    BinaryIcosahedral,
    BinaryOctahedral,
    BinaryTetrahedral,
    Cyclic,
    CyclicOneNA,
    GroupSpec,
    make_group,
)
from symsig import bundles as bundle_ops
from symsig import lattice as lattice_ops
from symsig import polyverify
from symsig import signature as signature_ops
from symsig import sympow as sympow_ops


def parse_group_spec(text: str) -> GroupSpec:
    """A:m | D:n | E6 | E7 | E8 | cyclic:n:a."""
    parts = text.split(":")
    try:
        if parts[0] == "A" and len(parts) == 2:
            return Cyclic(int(parts[1]) + 1)
        if parts[0] == "D" and len(parts) == 2:
            return BinaryDihedral(int(parts[1]))
        if text == "E6":
            return BinaryTetrahedral()
        if text == "E7":
            return BinaryOctahedral()
        if text == "E8":
            return BinaryIcosahedral()
        if parts[0] == "cyclic" and len(parts) == 3:
            return CyclicOneNA(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise BadSpec(f"bad group spec {text!r}: {exc}") from exc
    raise BadSpec(f"bad group spec {text!r}")


def _load_config(path: str) -> dict[str, str]:
    out = {}
    with open(path) as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise BadSpec(f"bad config line {line!r}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _emit(report: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(report)
    else:
        sys.stdout.write(report)


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(str(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


# -- subcommands ----------------------------------------------------------------


def _cmd_signature(args) -> tuple[int, str]:
    spec = parse_group_spec(args.group)
    build = (
        signature_ops.differential_signature_estimate
        if args.variant == "differential"
        else signature_ops.signature_estimate
    )
    focus = 0 if args.module == "all" else int(args.module)
    if args.variant == "differential":
        series = build(spec, qmax=args.qmax, irr_index=focus)
    else:
        series = build(spec, focus, args.qmax)
    indices = range(len(series.dims)) if args.module == "all" else [focus]
    if args.format == "json":
        payload = {
            "meta": {
                "identity": "cumulative multiplicity ratio of each module in the "
                "reflexive symmetric powers tends to dim/|G|",
                "group": args.group,
                "order": series.group_order,
                "variant": series.variant,
                "kernel_backend": _kernel.BACKEND,
            },
            "rows": [
                {"q": q, "beta": series.betas[q], "alpha": series.alphas[q]}
                for q in range(series.qmax + 1)
            ],
            "summary": [
                {
                    "module": series.labels[i],
                    "target": str(series.target(i)),
                    "final_ratio": str(series.final_ratio(i)),
                    "abs_error": float(series.abs_error(i)),
                }
                for i in indices
            ],
        }
        return 0, _json(payload)
    header = ["q", "beta"] + [f"alpha_{series.labels[i]}" for i in indices] + [
        f"ratio_{series.labels[i]}" for i in indices
    ]
    ratio_cols = {i: series.cumulative_ratios(i) for i in indices}
    rows = [
        [q, series.betas[q]]
        + [series.alphas[q][i] for i in indices]
        + [ratio_cols[i][q] for i in indices]
        for q in range(series.qmax + 1)
    ]
    return 0, _csv(header, rows)


def _cmd_sympow(args) -> tuple[int, str]:
    spec = parse_group_spec(args.group)
    group = make_group(spec)
    methods = [args.method]
    if args.verify_all:
        methods = ["recurrence", "monomial", "springer"]
        if not group.determinant_flag:
            methods.remove("recurrence")
        if group.diagonal_weights is not None:
            methods.append("eigen")
    rows = []
    seen = {}
    for method in methods:
        mults = sympow_ops.multiplicities(group, args.q, method)
        seen[method] = mults
        rows.append({"method": method, "q": args.q, "multiplicities": mults})
    if args.verify_all and len({tuple(m) for m in seen.values()}) != 1:
        return 1, _json({"error": "methods disagree", "rows": rows})
    payload = {
        "meta": {
            "identity": "multiplicities of the irreducibles in the q-th symmetric "
            "power of the fundamental representation",
            "group": args.group,
            "labels": list(irreducible_table(group).labels),
        },
        "rows": rows,
    }
    return 0, _json(payload)


def _format_table_value(value) -> str:
    if value.is_rational():
        return str(value.as_fraction())
    return format_value(value).replace(" ", "")


def _cmd_chartable(args) -> tuple[int, str]:
    spec = parse_group_spec(args.group)
    group = make_group(spec)
    table = irreducible_table(group)
    sizes = group.class_sizes()
    orders = [group.elements[rep].order for rep, _ in group.classes]
    cells = [
        [_format_table_value(chi.values[c]) for c in range(group.n_classes)]
        for chi in table.irreducibles
    ]
    if args.format == "json":
        payload = {
            "meta": {
                "identity": "irreducible character table; rows are orthonormal "
                "and squared dimensions sum to the group order",
                "group": args.group,
                "order": group.order,
                "conductor": group.conductor,
            },
            "class_sizes": sizes,
            "class_orders": orders,
            "rows": [
                {"label": label, "values": row}
                for label, row in zip(table.labels, cells)
            ],
        }
        return 0, _json(payload)
    if args.format == "csv":
        header = ["label"] + [f"c{c}" for c in range(group.n_classes)]
        rows = [["size"] + sizes, ["order"] + orders]
        rows += [[label] + row for label, row in zip(table.labels, cells)]
        return 0, _csv(header, rows)
    width = max(
        len(s) for row in cells for s in row
    )
    width = max(width, 5)
    label_w = max(len(s) for s in table.labels + ("size", "order"))
    lines = [
        f"group {args.group}; order {group.order}; {group.n_classes} classes; "
        f"z = zeta_{group.conductor}"
    ]
    lines.append(" ".join(["size".ljust(label_w)] + [str(s).rjust(width) for s in sizes]))
    lines.append(" ".join(["order".ljust(label_w)] + [str(o).rjust(width) for o in orders]))
    for label, row in zip(table.labels, cells):
        lines.append(" ".join([label.ljust(label_w)] + [s.rjust(width) for s in row]))
    return 0, "\n".join(lines) + "\n"


def _cmd_lattice(args) -> tuple[int, str]:
    rep = lattice_ops.WeightRep(args.n, (1, args.a))
    rows = lattice_ops.slice_count_series(rep, args.qmax)
    t = args.t % args.n
    header = ["q", "alpha", "beta", "cum_ratio"]
    body = []
    num = 0
    den = 0
    for q in range(args.qmax + 1):
        num += rows[q][t]
        den += q + 1
        body.append([q, rows[q][t], q + 1, Fraction(num, den)])
    if args.format == "json":
        payload = {
            "meta": {
                "identity": "slice counts of weight-t monomials; cumulative ratio "
                "tends to 1/n for faithful weights",
                "n": args.n,
                "a": args.a,
                "t": t,
                "index": lattice_ops.kernel_lattice(rep, t).index,
            },
            "rows": [
                {"q": r[0], "alpha": r[1], "beta": r[2], "cum_ratio": str(r[3])}
                for r in body
            ],
        }
        return 0, _json(payload)
    return 0, _csv(header, body)


def _cmd_bundles(args) -> tuple[int, str]:
    if args.bundle_cmd == "tq":
        total = bundle_ops.tensor_power_syz(args.q)
        meta = {
            "identity": "tensor power of the plane syzygy bundle in normal form",
            "q": args.q,
        }
    elif args.bundle_cmd == "sym":
        if args.input == "f2":
            total = bundle_ops.sym_power(
                bundle_ops.BundleSum.of(bundle_ops.atiyah_bundle(2)), args.q
            )
        else:
            total = bundle_ops.differential_sym_sequence(args.q)[args.q]
        meta = {
            "identity": "symmetric power decomposition",
            "q": args.q,
            "input": args.input,
        }
    else:  # frk
        f = bundle_ops.weierstrass_cubic(*_parse_curve(args.curve))
        low, up, cert = bundle_ops.frk_report(args.q, f)
        payload = {
            "meta": {
                "identity": "certified bounds for the free rank of the q-th "
                "symmetric power of the plane syzygy bundle",
                "q": args.q,
                "curve": args.curve,
            },
            "lower_bound": low,
            "upper_bound": up,
            "certificate": cert,
        }
        return 0, _json(payload)
    rank, degree, slope = bundle_ops.rank_degree_slope(total)
    payload = {
        "meta": dict(meta, rank=rank, degree=degree, slope=str(slope)),
        "rows": total.describe(),
    }
    return 0, _json(payload)


def _parse_curve(text: str) -> tuple[Fraction, Fraction]:
    try:
        a, b = text.split(",")
        return Fraction(a), Fraction(b)
    except ValueError as exc:
        raise BadSpec(f"bad curve {text!r}; expected 'a,b'") from exc


def _cmd_verify(args) -> tuple[int, str]:
    if args.all:
        specs = list(polyverify.ALL_FIXTURE_SPECS)
    elif args.singularity:
        specs = [parse_group_spec(args.singularity)]
    else:
        raise BadSpec("verify needs --singularity or --all")
    reports = []
    failures = 0
    for spec in specs:
        datum = polyverify.fixture(spec)
        try:
            checks = polyverify.verify_all(datum)
            reports.append({"singularity": datum.name, "ok": True, "checks": checks})
        except (polyverify.VerificationFailed, polyverify.NotFundamental) as exc:
            failures += 1
            reports.append({"singularity": datum.name, "ok": False, "error": str(exc)})
    payload = {
        "meta": {
            "identity": "invariance, syzygy, and equivariance identities; the "
            "syzygy representation is character-equal to the fundamental one",
        },
        "rows": reports,
    }
    return (1 if failures else 0), _json(payload)


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symsig",
        description="Exact symmetric-signature computations for quotient singularities.",
    )
    parser.add_argument("--config", help="key=value file with per-flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signature", help="cumulative multiplicity ratio series")
    p.add_argument("--group", required=True)
    p.add_argument("--module", default="0", help="irreducible index or 'all'")
    p.add_argument("--qmax", type=int, default=None)
    p.add_argument("--variant", choices=["symmetric", "differential"], default="symmetric")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_signature)

    p = sub.add_parser("sympow", help="multiplicities of one symmetric power")
    p.add_argument("--group", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["auto", "recurrence", "monomial", "eigen", "springer"],
        default="auto",
    )
    p.add_argument("--verify-all", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sympow)

    p = sub.add_parser("chartable", help="irreducible character table")
    p.add_argument("--group", required=True)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_chartable)

    p = sub.add_parser("lattice", help="weighted slice counts and their ratio")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--qmax", type=int, default=1000)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("bundles", help="bundle calculus on the elliptic curve")
    bundle_sub = p.add_subparsers(dest="bundle_cmd", required=True)
    tq = bundle_sub.add_parser("tq", help="tensor power of the syzygy bundle")
    tq.add_argument("--q", type=int, required=True)
    tq.add_argument("--out")
    sym = bundle_sub.add_parser("sym", help="symmetric power")
    sym.add_argument("--q", type=int, required=True)
    sym.add_argument("--input", choices=["f2", "omega"], default="f2")
    sym.add_argument("--out")
    frk = bundle_sub.add_parser("frk", help="free-rank bounds")
    frk.add_argument("--q", type=int, required=True)
    frk.add_argument("--curve", default="1,0", help="Weierstrass parameters a,b")
    frk.add_argument("--out")
    p.set_defaults(func=_cmd_bundles)

    p = sub.add_parser("verify", help="invariance/syzygy/equivariance fixtures")
    p.add_argument("--singularity", help="A:n | D:n | E6 | E7 | E8")
    p.add_argument("--all", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: list[str]) -> int:
    """Parse, execute one subcommand, and emit its report."""
    parser = build_parser()
    # apply config-file defaults before the real parse
    if "--config" in argv:
        probe, _ = parser.parse_known_args(argv)
        if probe.config:
            config = _load_config(probe.config)
            argv = list(argv)
            sub_index = next(
                (k for k, a in enumerate(argv) if not a.startswith("--") and a != probe.config),
                None,
            )
            for key, value in config.items():
                flag = f"--{key}"
                if flag not in argv and sub_index is not None:
                    argv += [flag, value]
    try:
        args = parser.parse_args(argv)
    except BadSpec as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    try:
        code, report = args.func(args)
    except BadSpec as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, AssertionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    _emit(report, getattr(args, "out", None))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
