"""Command-line surface.

Every verb emits a report with the same skeleton: verb echo, ring
fingerprint, and a verb-specific payload.  The structured (json) form is
the machine contract and is byte-deterministic for identical inputs; the
text form is a human rendering of the same payload plus timing.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .checks import check_suite
from .modules import (
    ModuleError,
    parse_module_spec,
    regular_module,
    submodule_lattice,
)
from .monoform import MonoformError, is_monoform, monoform_filtration
from .rings import (
    BUILTIN_PREFIXES,
    CapExceededError,
    DEFAULT_ORDER_CAP,
    FiniteRing,
    RingError,
    parse_ring_document,
    parse_ring_spec,
)
from .serre import enumerate_serre, hasse_dot, inclusion_edges
from .spectrum import (
    SpectrumError,
    associated_atoms,
    atom_spectrum,
    atom_support,
)

VERBS = (
    "validate", "ideals", "spectrum", "monoform", "support",
    "ass", "filtration", "serre", "check",
)


class DomainError(Exception):
    pass


def _load_ring(source: str, order_cap: int) -> FiniteRing:
    head = source.split(":", 1)[0]
    if head in BUILTIN_PREFIXES:
        return parse_ring_spec(source, order_cap=order_cap)
    path = Path(source)
    if not path.exists():
        raise DomainError(f"ring file {source!r} does not exist")
    return parse_ring_document(path.read_bytes(), order_cap=order_cap)


def _ideal_list(ring: FiniteRing) -> list[list[int]]:
    return [sorted(s) for s in submodule_lattice(regular_module(ring))]


def _payload(args, ring: FiniteRing) -> dict:
    verb = args.verb
    if verb == "validate":
        return {"valid": True, "order": ring.order, "one": ring.one}
    if verb == "ideals":
        ideals = _ideal_list(ring)
        return {"count": len(ideals), "ideals": ideals}
    if verb == "spectrum":
        spec = atom_spectrum(ring)
        return {
            "atom_count": len(spec.atoms),
            "comonoform_count": len(spec.comonoform_ideals()),
            "atoms": [
                {
                    "id": atom.id,
                    "canonical_rep": sorted(atom.canonical_rep),
                    "members": [sorted(m) for m in atom.members],
                }
                for atom in spec.atoms
            ],
        }
    if verb == "monoform":
        module = parse_module_spec(ring, args.module)
        return {"module": args.module, "monoform": is_monoform(module)}
    if verb == "support":
        spec = atom_spectrum(ring)
        module = parse_module_spec(ring, args.module)
        atoms = sorted(atom_support(spec, module))
        return {
            "module": args.module,
            "atoms": atoms,
            "reps": [sorted(spec.atoms[a].canonical_rep) for a in atoms],
        }
    if verb == "ass":
        spec = atom_spectrum(ring)
        module = parse_module_spec(ring, args.module)
        atoms = sorted(associated_atoms(spec, module))
        return {
            "module": args.module,
            "atoms": atoms,
            "reps": [sorted(spec.atoms[a].canonical_rep) for a in atoms],
        }
    if verb == "filtration":
        module = parse_module_spec(ring, args.module)
        filt = monoform_filtration(module)
        return {
            "module": args.module,
            "chain": [sorted(c) for c in filt.chain],
            "labels": [sorted(l) for l in filt.labels],
        }
    if verb == "serre":
        spec = atom_spectrum(ring)
        subs = enumerate_serre(spec)
        return {
            "count": len(subs),
            "subcategories": [
                {
                    "open_set": sorted(s.open_set),
                    "generators": [sorted(q) for q in s.generators],
                }
                for s in subs
            ],
            "edges": inclusion_edges(subs),
        }
    if verb == "check":
        return check_suite(ring)
    raise AssertionError(f"unhandled verb {verb}")


def _render_text(report: dict, elapsed: float) -> str:
    lines = [f"verb: {report['verb']}",
             f"ring: order {report['ring']['order']}, "
             f"hash {report['ring']['hash'][:12]}"]
    payload = report["result"]
    verb = report["verb"]
    if verb == "validate":
        lines.append("ring is valid")
    elif verb == "ideals":
        lines.append(f"{payload['count']} right ideals:")
        lines += [f"  {ideal}" for ideal in payload["ideals"]]
    elif verb == "spectrum":
        lines.append(
            f"{payload['atom_count']} atoms from "
            f"{payload['comonoform_count']} comonoform right ideals"
        )
        for atom in payload["atoms"]:
            lines.append(
                f"  atom {atom['id']}: rep {atom['canonical_rep']}, "
                f"class {atom['members']}"
            )
    elif verb == "monoform":
        lines.append(
            f"module {payload['module']}: "
            f"{'monoform' if payload['monoform'] else 'not monoform'}"
        )
    elif verb in ("support", "ass"):
        kind = "atom support" if verb == "support" else "associated atoms"
        lines.append(f"{kind} of {payload['module']}: {payload['atoms']}")
        for a, rep in zip(payload["atoms"], payload["reps"]):
            lines.append(f"  atom {a}: R/{rep}")
    elif verb == "filtration":
        lines.append(f"filtration of {payload['module']}:")
        for i, step in enumerate(payload["chain"]):
            lines.append(f"  L{i} = {step}")
        for i, label in enumerate(payload["labels"]):
            lines.append(f"  factor {i + 1} = R/{label}")
    elif verb == "serre":
        lines.append(f"{payload['count']} Serre subcategories:")
        for i, s in enumerate(payload["subcategories"]):
            gens = ", ".join(f"R/{q}" for q in s["generators"]) or "(zero)"
            lines.append(f"  [{i}] open {s['open_set']}: <{gens}>")
        lines.append(f"covering edges: {payload['edges']}")
    elif verb == "check":
        for prop in payload["properties"]:
            mark = "PASS" if prop["passed"] else "FAIL"
            extra = (
                f"  witness: {prop['witness']}"
                if not prop["passed"] and "witness" in prop else ""
            )
            lines.append(f"  {mark} {prop['property']}{extra}")
        lines.append("all passed" if payload["passed"] else "FAILURES above")
    if report.get("cap_warnings"):
        lines += [f"warning: {w}" for w in report["cap_warnings"]]
    lines.append(f"elapsed: {elapsed:.3f}s")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atomspec",
        description="Atom spectra and Serre subcategories of finite rings",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    needs_module = {"monoform", "support", "ass", "filtration"}
    for verb in VERBS:
        p = sub.add_parser(verb)
        p.add_argument("--ring", required=True,
                       help="builtin spec (zmod:n, tri2:p, mat:k:p, "
                            "prod:a,b) or path to a ring file")
        if verb in needs_module:
            p.add_argument("--module", required=True,
                           help="module spec: regular | quot:<ids> | "
                                "cyclic:<x> | sub:<ids> | sum:<spec>+<spec>")
        p.add_argument("--format", choices=("text", "json", "graph"),
                       default="text")
        p.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP)
        p.add_argument("--max-lattice", type=int, default=1 << 20)
    return parser


def run(argv=None) -> tuple[int, dict]:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "graph" and args.verb != "serre":
        parser.error("--format graph is only available for 'serre'")
    start = time.monotonic()
    try:
        ring = _load_ring(args.ring, args.max_order)
        report = {
            "verb": args.verb,
            "ring": {"order": ring.order, "hash": ring.content_hash()},
            "result": _payload(args, ring),
            "cap_warnings": [],
        }
    except (RingError, ModuleError, MonoformError, SpectrumError,
            CapExceededError, DomainError) as exc:
        report = {
            "verb": args.verb,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        if args.format == "json":
            print(json.dumps(report, sort_keys=True, separators=(",", ":")))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1, report
    elapsed = time.monotonic() - start
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    elif args.format == "graph":
        spec = atom_spectrum(ring)
        sys.stdout.write(hasse_dot(enumerate_serre(spec)))
    else:
        sys.stdout.write(_render_text(report, elapsed))
    exit_code = 0
    if args.verb == "check" and not report["result"]["passed"]:
        exit_code = 1
    return exit_code, report


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
