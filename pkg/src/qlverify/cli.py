"""Batch driver: run verification suites over parameter matrices and emit
deterministic TSV or JSON reports.

Exit codes: 0 when nothing failed, 1 when any check failed, 2 on usage
errors.  Output is byte-identical across runs with the same flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from .curves import DEFAULT_MAX_FIELD_SIZE, KummerCover, verify_l_identities
from .dirichlet import (
    all_subgroups,
    predict_k_ratio,
    quotient_is_cyclic,
    verify_norm_identity_numberfield,
    verify_order_identity,
)
from .ffqlc import CyclicCharacter, InducedRepFF, verify_induced_ff, verify_main_theorem_ff
from .numtheory import prime_power_decomposition
from .report import VerificationReport


def run_ffqlc(q_list, m_max: int, k_max: int) -> VerificationReport:
    """verify_main_theorem_ff over all (q, m <= m_max, characters of C_m,
    k <= k_max), plus a small deterministic sample of induced sums."""
    report = VerificationReport()
    for q in q_list:
        for m in range(1, m_max + 1):
            for a in range(m):
                for k in range(1, k_max + 1):
                    report.extend(verify_main_theorem_ff(q, m, CyclicCharacter(m, a), k))
    for q in q_list:
        samples = []
        if m_max >= 4:
            samples.append(InducedRepFF(4, ((1, 0, 1), (2, 1, 1), (4, 1, 1))))
        if m_max >= 6:
            samples.append(InducedRepFF(6, ((2, 1, 1), (3, 1, 2), (6, 1, 1))))
        for rep in samples:
            for k in range(1, min(k_max, 2) + 1):
                report.extend(verify_induced_ff(q, rep, k))
    return report


def run_curves(specs, order=None, max_field_size=DEFAULT_MAX_FIELD_SIZE) -> VerificationReport:
    report = VerificationReport()
    for spec in specs:
        cover = KummerCover(int(spec["p"]), int(spec["d"]), tuple(int(c) for c in spec["f"]))
        report.extend(verify_l_identities(cover, order, max_field_size))
    return report


DEFAULT_COVERS = (
    {"p": 3, "d": 2, "f": [0, 1]},
    {"p": 5, "d": 4, "f": [0, 1]},
    {"p": 7, "d": 3, "f": [1, 1]},
)


def run_dirichlet(n_max: int, order_max: int, fields=()) -> VerificationReport:
    """Norm and order identities over all (N <= n_max, subgroups with -1
    and cyclic quotient), plus the rational predictions for every field in
    the matrix.  Explicit field specs {"modulus": N, "subgroup": [...]}
    are run in addition to the matrix."""
    report = VerificationReport()
    matrix = []
    for N in range(1, n_max + 1):
        minus_one = (N - 1) % N
        for H in all_subgroups(N):
            if minus_one in H and quotient_is_cyclic(N, H):
                matrix.append((N, H))
    matrix.extend(
        (int(spec["modulus"]), frozenset(int(a) for a in spec["subgroup"]))
        for spec in fields
    )
    for N, H in matrix:
        for n in range(1, order_max + 1):
            report.extend(verify_norm_identity_numberfield(N, H, n))
        for k in range(2, 2 * order_max + 2):
            report.extend(verify_order_identity(N, H, k))
        _, pred = predict_k_ratio(N, H, 1)
        report.extend(pred)
    return report


def _parse_q_list(text: str) -> list[int]:
    out = []
    for piece in text.split(","):
        q = int(piece)
        prime_power_decomposition(q)  # raises ValueError on bad input
        out.append(q)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlverify",
        description="exact cross-checks of L-value / K-group identities",
    )
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")
    parser.add_argument("--out", help="write the report to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ff = sub.add_parser("ffqlc", help="finite-field main-theorem matrix")
    p_ff.add_argument("--q", default="2", help="comma-separated prime powers")
    p_ff.add_argument("--m-max", type=int, default=6)
    p_ff.add_argument("--k-max", type=int, default=3)

    p_curves = sub.add_parser("curves", help="Kummer-cover L-series identities")
    p_curves.add_argument("--spec", action="append", default=None,
                          help='inline JSON like {"p":3,"d":2,"f":[0,1]} or a path to a JSON list')
    p_curves.add_argument("--order", type=int, default=None,
                          help="series truncation order (default 2*(deg f + 3))")
    p_curves.add_argument("--max-field-size", type=int, default=DEFAULT_MAX_FIELD_SIZE)

    p_dir = sub.add_parser("dirichlet", help="abelian number-field identities")
    p_dir.add_argument("--N-max", type=int, default=12)
    p_dir.add_argument("--n-max", type=int, default=2)
    p_dir.add_argument("--field", action="append", default=[],
                       help='extra field spec like {"modulus":5,"subgroup":[1,4]}')
    return parser


def _load_cover_specs(args) -> list[dict]:
    if not args.spec:
        return [dict(s) for s in DEFAULT_COVERS]
    specs = []
    for text in args.spec:
        stripped = text.strip()
        if stripped.startswith("{") or stripped.startswith("["):
            loaded = json.loads(stripped)
        else:
            with open(text) as fh:
                loaded = json.load(fh)
        specs.extend(loaded if isinstance(loaded, list) else [loaded])
    return specs


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ffqlc":
            report = run_ffqlc(_parse_q_list(args.q), args.m_max, args.k_max)
        elif args.command == "curves":
            report = run_curves(_load_cover_specs(args), args.order, args.max_field_size)
        else:
            fields = [json.loads(text) for text in args.field]
            report = run_dirichlet(args.N_max, args.n_max, fields)
    except (ValueError, OSError, KeyError) as exc:
        parser.exit(2, f"usage error: {exc!r}\n")
    text = report.to_json() if args.format == "json" else report.to_tsv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
