"""Command-line interface: build rings, query spectra, run property checks,
replay the full verification suite over a corpus, export JSON/DOT.

Exit codes: 0 success / all checks pass, 1 a checked property is false or a
suite entry fails, 2 usage or validation error, 3 a cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .classify import (
    a_conditions,
    analyze_ring,
    is_w_ring,
    star_condition,
    verify_theorems,
)
from .corpus import default_corpus, load_corpus
from .ideals import DEFAULT_IDEAL_CAP
from .report import build_report, dot_ideal_lattice, dot_specialization
from .rings import (
    DEFAULT_ELEMENT_CAP,
    CapExceededError,
    QuotSpec,
    RingSpecError,
    unit_and_nilpotent_flags,
)
from .spectra import Spectrum
from .topology import is_quasi_compact, is_sober, is_spectral, is_supercompact
from .topology import is_irreducible as topo_is_irreducible
from .topology import separation_axioms
from .zsymbolic import (
    NotACoverError,
    ZPrimaryIdeal,
    ZxZPrimaryIdeal,
    a2_failure_witness_z,
    closure_z,
    extract_finite_subcover_z,
    prim_zxz_closure,
    v_rad_z,
    v_z,
)

CHECK_PROPERTIES = (
    "t0",
    "t1",
    "t2",
    "sober",
    "spectral",
    "irreducible",
    "supercompact",
    "quasi-compact",
    "base",
    "local",
    "field",
    "p-ring",
    "w-ring",
    "star",
    "a2",
)


def _globals_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", metavar="PATH", help="write output to a file")
    p.add_argument("--max-elements", type=int, default=DEFAULT_ELEMENT_CAP)
    p.add_argument("--max-ideals", type=int, default=DEFAULT_IDEAL_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=1000, help="sample count for non-exhaustive checks")
    p.add_argument("--corpus", metavar="PATH", help="corpus file (verify-paper)")
    return p


def build_arg_parser() -> argparse.ArgumentParser:
    shared = _globals_parser()
    parser = argparse.ArgumentParser(prog="primspec", parents=[shared])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[shared], help="ring summary")
    p.add_argument("spec")
    p = sub.add_parser("ideals", parents=[shared], help="ideal inventory")
    p.add_argument("spec")
    p = sub.add_parser("prim", parents=[shared], help="primary spectrum")
    p.add_argument("spec")
    p = sub.add_parser("spec", parents=[shared], help="prime spectrum")
    p.add_argument("spec")
    p = sub.add_parser("check", parents=[shared], help="check one property")
    p.add_argument("property", choices=CHECK_PROPERTIES)
    p.add_argument("spec")
    sub.add_parser(
        "verify-paper",
        parents=[shared],
        help="run the full verification suite over the corpus",
    )
    p = sub.add_parser("export", parents=[shared], help="JSON report or DOT graph")
    p.add_argument("spec")
    p.add_argument(
        "--graph",
        choices=("report", "ideal-lattice", "specialization"),
        default="report",
    )
    p = sub.add_parser("z", parents=[shared], help="symbolic spectrum of Z")
    zsub = p.add_subparsers(dest="zcommand", required=True)
    q = zsub.add_parser("vrad", parents=[shared])
    q.add_argument("n", type=int)
    q = zsub.add_parser("v", parents=[shared])
    q.add_argument("n", type=int)
    q = zsub.add_parser("closure", parents=[shared])
    q.add_argument("p", type=int)
    q.add_argument("k", type=int, nargs="?", default=1)
    q = zsub.add_parser("subcover", parents=[shared])
    q.add_argument("r", type=int)
    q.add_argument("s", type=int, nargs="+")
    q = zsub.add_parser("a2-witness", parents=[shared])
    q.add_argument("p", type=int)
    q = zsub.add_parser("zxz-closure", parents=[shared])
    q.add_argument("side", choices=("left", "right"))
    q.add_argument("p", type=int)
    q.add_argument("k", type=int, nargs="?", default=1)
    return parser


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_json(args, payload) -> None:
    _emit(args, json.dumps(payload, indent=2))


def _analyze(args):
    return analyze_ring(args.spec, args.max_elements, args.max_ideals)


def cmd_info(args) -> int:
    a = _analyze(args)
    cls = a.classification
    units = sum(
        1 for r in range(a.ring.size) if unit_and_nilpotent_flags(a.ring, r)[0]
    )
    nilpotents = a.lattice.mask(a.lattice.nilradical_id()).bit_count()
    payload = {
        "spec": str(a.spec),
        "elements": a.ring.size,
        "characteristic": a.ring.characteristic(),
        "units": units,
        "nilpotents": nilpotents,
        "ideals": len(a.lattice),
        "prim_points": len(a.prim.points),
        "spec_points": len(a.primes.points),
        "is_field": cls.is_field,
        "is_local": cls.is_local,
        "is_p_ring": cls.is_p_ring,
        "is_w_ring": cls.is_w_ring,
        "galois_ring": isinstance(a.spec, QuotSpec) and a.spec.is_galois_ring(),
    }
    if args.json:
        _emit_json(args, payload)
    else:
        _emit(args, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return 0


def cmd_ideals(args) -> int:
    a = _analyze(args)
    lat = a.lattice
    rows = [
        {
            "id": i,
            "gens": lat.render(i),
            "proper": lat.proper[i],
            "prime": lat.prime[i],
            "maximal": lat.maximal[i],
            "primary": lat.primary[i],
            "radical": lat.render(lat.radical_ids[i]),
        }
        for i in range(len(lat))
    ]
    if args.json:
        _emit_json(args, rows)
        return 0
    lines = [f"{len(lat)} ideals of {a.ring.label}"]
    for row in rows:
        flags = "".join(
            ch if row[key] else "-"
            for ch, key in (("P", "prime"), ("M", "maximal"), ("Q", "primary"))
        )
        lines.append(
            f"  [{row['id']}] {row['gens']}  {flags}  radical={row['radical']}"
        )
    _emit(args, "\n".join(lines))
    return 0


def _spectrum_text(spectrum: Spectrum, title: str) -> str:
    lines = [f"{title}: {len(spectrum.points)} points"]
    lines.append(
        "  points: " + ", ".join(spectrum.render_point(p) for p in range(len(spectrum.points)))
    )
    lines.append(f"  closed sets ({len(spectrum.closed_sets)}):")
    for idx, closed in enumerate(spectrum.closed_sets):
        gens = ", ".join(
            spectrum.lattice.render(i) for i in sorted(spectrum.generating_ideals[idx])
        )
        lines.append(f"    {spectrum.render_point_set(closed)}  from {gens}")
    return "\n".join(lines)


def cmd_prim(args) -> int:
    a = _analyze(args)
    if args.json:
        from .report import spectrum_block

        _emit_json(args, spectrum_block(a.prim))
    else:
        _emit(args, _spectrum_text(a.prim, f"Prim({a.ring.label})"))
    return 0


def cmd_spec(args) -> int:
    a = _analyze(args)
    if args.json:
        from .report import spectrum_block

        _emit_json(args, spectrum_block(a.primes))
    else:
        _emit(args, _spectrum_text(a.primes, f"Spec({a.ring.label})"))
    return 0


def cmd_check(args) -> int:
    a = _analyze(args)
    topo = a.prim.topology()
    cls = a.classification
    prop = args.property
    detail = None
    if prop in ("t0", "t1", "t2"):
        sep = separation_axioms(topo)
        value = getattr(sep, prop)
        detail = f"witness {sep.witness}" if not value else None
    elif prop == "sober":
        value = is_sober(topo)
    elif prop == "spectral":
        value = is_spectral(topo, a.prim.basic_open_family())
    elif prop == "irreducible":
        value, wit = topo_is_irreducible(topo)
        detail = None if value else f"witness {wit}"
    elif prop == "supercompact":
        value, wit = is_supercompact(topo)
        detail = None if value else f"covering family {wit}"
    elif prop == "quasi-compact":
        chosen = is_quasi_compact(topo, a.prim.all_points(), a.prim.basic_open_family())
        value = True
        detail = f"subcover of {len(chosen)} basic opens"
    elif prop == "base":
        value, wit = a.prim.is_base()
        detail = None if value else f"open {sorted(wit)} not a union of basics"
    elif prop == "local":
        value = cls.is_local
    elif prop == "field":
        value = cls.is_field
    elif prop == "p-ring":
        value = cls.is_p_ring
    elif prop == "w-ring":
        value, wit = is_w_ring(a.lattice)
        if value is None:
            raise CapExceededError(wit or "Prim too large for the exhaustive scan")
        detail = wit
    elif prop == "star":
        value, wit = star_condition(a.lattice, a.prim)
        detail = wit
    else:  # a2
        ids = list(range(len(a.lattice)))
        orig = a_conditions(a.lattice, ids, "A2_original", seed=args.seed)
        radf = a_conditions(a.lattice, ids, "A2_radical_form", seed=args.seed)
        value = orig.a2 and radf.a2
        detail = orig.witness or radf.witness
    label = prop.upper() if prop.startswith("t") and len(prop) == 2 else prop
    if args.json:
        _emit_json(
            args,
            {"spec": str(a.spec), "property": prop, "value": value, "detail": detail},
        )
    else:
        text = f"{label}: {str(value).lower()}"
        if detail:
            text += f"  ({detail})"
        _emit(args, text)
    return 0 if value else 1


def _suite_for_entry(entry, args):
    started = time.perf_counter()
    report = verify_theorems(
        entry.spec_text,
        seed=args.seed,
        closure_samples=args.sample,
        max_elements=entry.max_elements or args.max_elements,
        max_ideals=entry.max_ideals or args.max_ideals,
    )
    elapsed = (time.perf_counter() - started) * 1000
    return report, elapsed


def cmd_verify_paper(args) -> int:
    entries = load_corpus(args.corpus, args.max_elements) if args.corpus else default_corpus()
    with ThreadPoolExecutor(max_workers=min(8, max(1, len(entries)))) as pool:
        results = list(pool.map(lambda e: _suite_for_entry(e, args), entries))
    total_fail = 0
    rows = []
    for entry, (report, elapsed) in zip(entries, results):
        failed = report.failures()
        passed = sum(1 for e in report.entries if e.passed and e.applicable)
        na = sum(1 for e in report.entries if not e.applicable)
        total_fail += len(failed)
        rows.append(
            {
                "spec": entry.spec_text,
                "passed": passed,
                "not_applicable": na,
                "failed": [
                    {"id": e.entry_id, "witness": e.witness} for e in failed
                ],
                "timing_ms": round(elapsed, 3),
            }
        )
    if args.json:
        _emit_json(
            args,
            {
                "corpus_size": len(entries),
                "all_passed": total_fail == 0,
                "rings": rows,
            },
        )
    else:
        lines = []
        for row in rows:
            status = "PASS" if not row["failed"] else "FAIL"
            lines.append(
                f"{status}  {row['spec']:28s} {row['passed']:3d} passed"
                + (f", {row['not_applicable']} n/a" if row["not_applicable"] else "")
            )
            for failure in row["failed"]:
                lines.append(f"      failed {failure['id']}: {failure['witness']}")
        lines.append(
            f"{len(rows)} rings checked, "
            + ("all entries passed" if total_fail == 0 else f"{total_fail} failures")
        )
        _emit(args, "\n".join(lines))
    return 0 if total_fail == 0 else 1


def cmd_export(args) -> int:
    started = time.perf_counter()
    a = _analyze(args)
    if args.graph == "ideal-lattice":
        _emit(args, dot_ideal_lattice(a.lattice))
        return 0
    if args.graph == "specialization":
        _emit(args, dot_specialization(a.prim))
        return 0
    report = verify_theorems(a, seed=args.seed, closure_samples=args.sample)
    payload = build_report(
        a,
        report,
        seed=args.seed,
        max_elements=args.max_elements,
        max_ideals=args.max_ideals,
        timing_ms=(time.perf_counter() - started) * 1000,
    )
    _emit_json(args, payload)
    return 0


def cmd_z(args) -> int:
    if args.zcommand == "vrad":
        variety = v_rad_z(args.n)
        if args.json:
            _emit_json(
                args,
                {
                    "n": args.n,
                    "all_points": variety.all_points,
                    "families": sorted(variety.families),
                    "includes_zero": variety.includes_zero,
                },
            )
        else:
            _emit(args, str(variety))
        return 0
    if args.zcommand == "v":
        primes = v_z(args.n)
        if args.json:
            _emit_json(args, {"n": args.n, "primes": primes})
        elif primes is None:
            _emit(args, "Spec(Z)")
        elif primes:
            _emit(args, "{" + ", ".join(f"({p})" for p in primes) + "}")
        else:
            _emit(args, "∅")
        return 0
    if args.zcommand == "closure":
        ideal = ZPrimaryIdeal(None) if args.p == 0 else ZPrimaryIdeal(args.p, args.k)
        variety = closure_z(ideal)
        if args.json:
            _emit_json(
                args,
                {
                    "ideal": str(ideal),
                    "all_points": variety.all_points,
                    "families": sorted(variety.families),
                    "includes_zero": variety.includes_zero,
                },
            )
        else:
            _emit(args, str(variety))
        return 0
    if args.zcommand == "subcover":
        cert = extract_finite_subcover_z(args.r, args.s)
        if args.json:
            _emit_json(
                args,
                {
                    "r": cert.r,
                    "delta": list(cert.delta),
                    "exponent": cert.exponent,
                    "coefficients": list(cert.coefficients),
                    "verified": cert.verify(),
                },
            )
        else:
            _emit(args, f"delta: {list(cert.delta)}\ncertificate: {cert}")
        return 0
    if args.zcommand == "a2-witness":
        witness = a2_failure_witness_z(args.p)
        if args.json:
            _emit_json(
                args,
                {
                    "p": witness.p,
                    "radical_of_intersection": str(witness.radical_of_intersection),
                    "intersection_of_radicals": str(witness.intersection_of_radicals),
                    "sides_equal": witness.sides_equal,
                },
            )
        else:
            _emit(args, str(witness))
        return 0
    ideal = ZxZPrimaryIdeal(
        args.side, ZPrimaryIdeal(None) if args.p == 0 else ZPrimaryIdeal(args.p, args.k)
    )
    closure = prim_zxz_closure(ideal)
    if args.json:
        _emit_json(
            args,
            {
                "ideal": str(ideal),
                "side": closure.side,
                "prime": closure.p,
                "rendered": str(closure),
            },
        )
    else:
        _emit(args, str(closure))
    return 0


_COMMANDS = {
    "info": cmd_info,
    "ideals": cmd_ideals,
    "prim": cmd_prim,
    "spec": cmd_spec,
    "check": cmd_check,
    "verify-paper": cmd_verify_paper,
    "export": cmd_export,
    "z": cmd_z,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RingSpecError, NotACoverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
