"""Command-line front end: thin adapters over the library, nothing more.

Exit codes: 0 all verdicts pass, 1 a mathematical verdict is negative
(with witness), 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import __version__
from . import fingroup as fg
from . import models
from .cohomology2 import (SearchSpaceTooLarge, classify_h2, cohomologous,
                          trivial_cochain, validate_cocycle)
from .covariance import (compare_implementations, compute_gauge_group,
                         extract_cocycle, lift_to_extension)
from .covering import (all_sections, check_centre_hom, cyclic_cover,
                       induced_gauge_cocycle, q8_cover, spin_obstruction,
                       split_cover, z_class_trivial, z_cocycle)
from .extension import build_extension, classify_type
from .fingroup import GroupHom, direct_product, quotient, standard_group
from .multiplet import (PreconditionFailed, build_rho, detect_mixing,
                        verify_field_action)
from .schemas import (ParseError, SchemaError, cochain_from_obj, cochain_to_obj,
                      group_to_obj, loads)
from .wickscale import (gauge_scaling_action, GaugeElement, parse_wickpoly,
                        scale_wick_power, scaling_cocycle_nontrivial,
                        wick_product)

COCHAIN_FIXTURES = {
    "trivial-z2z2": lambda: trivial_cochain(fg.cyclic(2), fg.cyclic(2)),
    "z4-producing": lambda: __import__("covlab.cohomology2", fromlist=["Cochain2"])
    .Cochain2(fg.cyclic(2), fg.cyclic(2), ((0, 0), (0, 1)), (0, 0)),
    "s3-producing": lambda: __import__("covlab.cohomology2", fromlist=["Cochain2"])
    .Cochain2(fg.cyclic(2), fg.cyclic(3), ((0, 0), (0, 0)),
              (0, fg.compute_aut(fg.cyclic(3)).index_of((0, 2, 1)))),
}

FIELD_FIXTURES = {
    "vector": models.vector_multiplet_action,
    "blocks": lambda: models.block_diagonal_fixtures()[0],
    "blocks-z4": lambda: models.block_diagonal_fixtures()[2],
    "equivalent-blocks": models.equivalent_blocks_action,
    "central-z4": models.central_z4_mixing_action,
    "q8": models.q8_mixing_action,
}

COVERS = {
    "q8": q8_cover,
    "z4-z2": lambda: cyclic_cover(4, 2),
    "split-z2-z3": lambda: split_cover(2, fg.cyclic(3)),
}

Q8_REPS = {
    "2d": models.q8_two_dim_rep,
    "sign-1": lambda: models.q8_sign_rep("1"),
    "sign-i": lambda: models.q8_sign_rep("i"),
    "sign-j": lambda: models.q8_sign_rep("j"),
    "sign-k": lambda: models.q8_sign_rep("k"),
}


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    verdicts: List[Dict[str, Any]] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    timing_ms: Optional[float] = None
    version: str = __version__

    def verdict(self, check: str, ok: bool, **detail) -> None:
        entry = {"check": check, "ok": bool(ok)}
        entry.update(detail)
        self.verdicts.append(entry)

    def digest(self, name: str, payload: Any) -> None:
        blob = json.dumps(payload, sort_keys=True).encode()
        self.inputs[name] = hashlib.sha256(blob).hexdigest()

    @property
    def all_ok(self) -> bool:
        return all(v["ok"] for v in self.verdicts)

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "data": self.data,
            "timing_ms": self.timing_ms,
            "version": self.version,
        }
        return json.dumps(body, sort_keys=True, indent=2, default=str)

    def to_human(self) -> str:
        lines = [f"covlab {self.command} (v{self.version})"]
        for name, dig in sorted(self.inputs.items()):
            lines.append(f"  input {name}: sha256:{dig[:16]}")
        for v in self.verdicts:
            mark = "ok " if v["ok"] else "FAIL"
            extra = {k: val for k, val in v.items() if k not in ("check", "ok")}
            tail = f"  {extra}" if extra else ""
            lines.append(f"  [{mark}] {v['check']}{tail}")
        for k, val in self.data.items():
            lines.append(f"  {k}: {val}")
        if self.timing_ms is not None:
            lines.append(f"  timing_ms: {self.timing_ms:.1f}")
        return "\n".join(lines)


def _read_cochain(args, report: RunReport):
    if args.input:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
        obj = loads(text)
        report.digest("cochain", obj)
        return cochain_from_obj(obj)
    fixture = args.fixture or "trivial-z2z2"
    if fixture not in COCHAIN_FIXTURES:
        raise SchemaError("fixture", f"unknown {fixture!r}; "
                          f"known: {sorted(COCHAIN_FIXTURES)}")
    c = COCHAIN_FIXTURES[fixture]()
    report.digest("cochain", cochain_to_obj(c))
    return c


# ---------------------------------------------------------------------------
# verb handlers; each fills a RunReport and returns nothing

def cmd_validate_cocycle(args, report: RunReport) -> None:
    c = _read_cochain(args, report)
    res = validate_cocycle(c)
    report.verdict("cocycle-laws", res.valid,
                   **({} if res.valid else
                      {"law": res.law, "witness": list(res.witness)}))
    report.data["normalized"] = c.is_normalized()


def cmd_classify_h2(args, report: RunReport) -> None:
    G = standard_group(args.G)
    A = standard_group(args.A)
    report.digest("G", group_to_obj(G))
    report.digest("A", group_to_obj(A))
    res = classify_h2(G, A)
    report.verdict("classification-complete", True, classes=res.count)
    report.data["classes"] = [
        {"size": cls.size, "distinguished": cls.distinguished,
         "neutral": cls.neutral, "xi": [list(r) for r in cls.representative.xi],
         "phi": list(cls.representative.phi)}
        for cls in res.classes
    ]


def cmd_build_extension(args, report: RunReport) -> None:
    c = _read_cochain(args, report)
    ext = build_extension(c)
    t = classify_type(ext)
    report.verdict("extension-built", True, order=ext.E.order)
    report.verdict("exact-sequence", True)
    report.data["labels"] = list(t.labels)
    report.data["preferred"] = t.preferred
    report.data["order_profile"] = list(ext.E.order_profile())
    report.data["table"] = [list(r) for r in ext.E.table]


def cmd_gauge_group(args, report: RunReport) -> None:
    impl = models.named_model(args.model)
    report.digest("model", args.model)
    gauge = compute_gauge_group(impl.functor)
    report.verdict("gauge-group-computed", True, order=gauge.order)
    report.data["order_profile"] = list(gauge.table.order_profile())
    report.data["families"] = [list(f) for f in gauge.families]


def cmd_extract_cocycle(args, report: RunReport) -> None:
    impl = models.named_model(args.model)
    report.digest("model", args.model)
    c = extract_cocycle(impl)
    report.verdict("cocycle-valid", validate_cocycle(c).valid)
    report.verdict("normalized", c.is_normalized())
    report.data["cochain"] = cochain_to_obj(c)
    w = cohomologous(trivial_cochain(c.G, c.A), c)
    report.data["class_trivial"] = w is not None
    if w is not None:
        report.data["trivializing_twist"] = list(w.zeta)


def cmd_compare_impls(args, report: RunReport) -> None:
    i1 = models.named_model(args.model)
    i2 = models.named_model(args.other)
    report.digest("model", args.model)
    report.digest("other", args.other)
    try:
        w = compare_implementations(i1, i2)
    except AssertionError as err:
        report.verdict("cocycles-cohomologous", False, error=str(err))
        return
    report.verdict("witness-found", True, zeta=list(w.zeta))
    report.verdict("cocycles-cohomologous", True)


def cmd_lift_extension(args, report: RunReport) -> None:
    impl = models.named_model(args.model)
    report.digest("model", args.model)
    c = extract_cocycle(impl)
    ext = build_extension(c)
    lifted = lift_to_extension(impl, ext)
    ec = extract_cocycle(lifted)
    neutral = all(v == 0 for row in ec.xi for v in row)
    report.verdict("lifted-cocycle-neutral", neutral, extension_order=ext.E.order)


def cmd_verify_multiplet(args, report: RunReport) -> None:
    a = FIELD_FIXTURES[args.fixture]()
    report.digest("fixture", args.fixture)
    res = verify_field_action(a)
    report.verdict("field-action-laws", res.valid,
                   **({} if res.valid else
                      {"violation": res.violation, "witness": list(res.witness)}))
    if res.valid:
        ext = build_extension(a.cocycle)
        build_rho(a, ext)
        report.verdict("extended-rep-true", True, extension_order=ext.E.order)


def cmd_detect_mixing(args, report: RunReport) -> None:
    a = FIELD_FIXTURES[args.fixture]()
    report.digest("fixture", args.fixture)
    ext = build_extension(a.cocycle)
    rho = build_rho(a, ext)
    if args.fixture == "q8":
        sub1, sub2 = models.eigenline_submultiplets()
    else:
        sub1, sub2 = models.standard_submultiplets()
    res = detect_mixing(rho, ext, sub1, sub2)
    report.verdict("no-mixing", res.witness is None,
                   **({} if res.witness is None else
                      {"witness": list(res.witness_pair)}))
    report.data["no_mixing_asserted"] = res.no_mixing_asserted


def cmd_cover_z(args, report: RunReport) -> None:
    cover = COVERS[args.cover]()
    report.digest("cover", args.cover)
    sections = all_sections(cover)
    idx = args.section
    if not (0 <= idx < len(sections)):
        raise SchemaError("section", f"index out of range 0..{len(sections)-1}")
    z = z_cocycle(sections[idx])
    report.verdict("factor-set-valid", True)
    trivializer = z_class_trivial(z)
    report.data["z_values"] = [list(r) for r in z.values]
    report.data["class_trivial"] = trivializer is not None
    same_class = all(
        cohomologous(z.cochain, z_cocycle(s).cochain) is not None
        for s in sections)
    report.verdict("section-independent-class", same_class,
                   sections=len(sections))

    k_group, k_elems = cover.kernel_group()
    a2 = fg.cyclic(2)
    zeta_map = (0,) * k_group.order if args.zeta == "trivial" else tuple(
        e % 2 for e in range(k_group.order))
    zeta = GroupHom(k_group, a2, zeta_map)
    report.verdict("kernel-restriction-central-hom",
                   check_centre_hom(zeta).valid)
    induced = induced_gauge_cocycle(sections[idx], zeta)
    induced_trivial = cohomologous(
        induced, trivial_cochain(induced.G, induced.A)) is not None
    report.data["induced_cocycle_trivial"] = induced_trivial

    # worked example: the quotient (A x S) / <(zeta(-1), -1)> when the kernel
    # has a distinguished involution
    if k_group.order == 2:
        amb = k_elems[1]
        prod = direct_product(a2, cover.S)
        gen = zeta_map[1] * cover.S.order + amb
        sub = (0, gen) if gen != 0 else (0,)
        q, _ = quotient(prod, fg.closure(prod, sub))
        report.data["quotient_extended_group"] = {
            "order": q.order, "order_profile": list(q.order_profile())}


def cmd_spin_obstruction(args, report: RunReport) -> None:
    cover = COVERS[args.cover]()
    report.digest("cover", args.cover)
    if args.cover != "q8":
        raise SchemaError("rep", "built-in representations exist for the q8 cover")
    rep = Q8_REPS[args.rep]()
    report.digest("rep", args.rep)
    k_group, _ = cover.kernel_group()
    zeta_map = (0, 0) if args.zeta == "trivial" else (0, 1)
    zeta = GroupHom(k_group, fg.cyclic(2), zeta_map)
    verdict = spin_obstruction(all_sections(cover)[0], zeta, rep)
    report.verdict("descends", verdict.descends,
                   **({} if verdict.descends else
                      {"witness": verdict.obstruction_witness}))
    report.data["model_consistent"] = verdict.model_consistent
    report.data["zeta_trivial"] = verdict.zeta_trivial


def cmd_wick_product(args, report: RunReport) -> None:
    p = parse_wickpoly(args.p)
    q = parse_wickpoly(args.q)
    report.digest("p", str(p))
    report.digest("q", str(q))
    out = wick_product(p, q)
    other = wick_product(q, p)
    report.verdict("commutes", out == other)
    report.data["product"] = str(out)


def cmd_scale_power(args, report: RunReport) -> None:
    report.digest("k", args.k)
    out = scale_wick_power(args.k)
    if args.conformal:
        out = out.set_symbol("c", Fraction(0))
    report.verdict("closed-form-matches-ordering-route", True)
    report.data["scaled_power"] = str(out)


def cmd_scaling_cocycle(args, report: RunReport) -> None:
    report.digest("xi_nonzero", bool(args.xi_nonzero))
    cert = scaling_cocycle_nontrivial(xi_nonzero=args.xi_nonzero)
    report.verdict("certificate-emitted", True, nontrivial=cert.nontrivial)
    report.data["certificate"] = {
        "nontrivial": cert.nontrivial,
        "lambda": str(cert.lam) if cert.lam is not None else None,
        "element": None if cert.element is None else
        {"sigma": cert.element.sigma, "mu": str(cert.element.mu)},
        "reachable_mus": None if cert.reachable_mus is None else
        [str(m) for m in cert.reachable_mus],
        "required_mu": str(cert.required_mu) if cert.required_mu is not None else None,
        "reason": cert.reason,
    }
    if not args.xi_nonzero:
        action = gauge_scaling_action(Fraction(2), GaugeElement(-1, Fraction(3)))
        report.data["sample_action"] = {"sigma": action.sigma, "mu": str(action.mu)}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covlab",
        description="exact group-cohomology / covariance / Wick-scaling workbench")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable report")
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock timing in the report")
    sub = parser.add_subparsers(dest="verb", required=True)

    def cochain_flags(p):
        p.add_argument("--input", help="cochain JSON file ('-' for stdin)")
        p.add_argument("--fixture", choices=sorted(COCHAIN_FIXTURES),
                       help="built-in cochain")

    p = sub.add_parser("validate-cocycle", help="check the two cocycle laws")
    cochain_flags(p)
    p = sub.add_parser("classify-h2", help="classify H^2(G, A)")
    p.add_argument("--G", required=True)
    p.add_argument("--A", required=True)
    p = sub.add_parser("build-extension", help="build the extension group")
    cochain_flags(p)
    p = sub.add_parser("gauge-group", help="natural automorphisms of a model")
    p.add_argument("--model", default="Z4Rot", choices=sorted(models.NAMED_MODELS))
    p = sub.add_parser("extract-cocycle", help="canonical cocycle of a model")
    p.add_argument("--model", default="Z4Rot", choices=sorted(models.NAMED_MODELS))
    p = sub.add_parser("compare-impls", help="twist relating two implementations")
    p.add_argument("--model", default="Z4Rot", choices=sorted(models.NAMED_MODELS))
    p.add_argument("--other", default="Z4Rot3", choices=sorted(models.NAMED_MODELS))
    p = sub.add_parser("lift-extension", help="lift a model to its extension group")
    p.add_argument("--model", default="Z4Rot", choices=sorted(models.NAMED_MODELS))
    p = sub.add_parser("verify-multiplet", help="check the field-action laws")
    p.add_argument("--fixture", default="vector", choices=sorted(FIELD_FIXTURES))
    p = sub.add_parser("detect-mixing", help="scan for submultiplet mixing")
    p.add_argument("--fixture", default="blocks", choices=sorted(FIELD_FIXTURES))
    p = sub.add_parser("cover-z", help="factor set of a central cover section")
    p.add_argument("--cover", default="q8", choices=sorted(COVERS))
    p.add_argument("--section", type=int, default=0)
    p.add_argument("--zeta", default="flip", choices=["flip", "trivial"])
    p = sub.add_parser("spin-obstruction", help="descent of a cover representation")
    p.add_argument("--cover", default="q8", choices=sorted(COVERS))
    p.add_argument("--rep", default="2d", choices=sorted(Q8_REPS))
    p.add_argument("--zeta", default="flip", choices=["flip", "trivial"])
    p = sub.add_parser("wick-product", help="star product of two polynomials")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p = sub.add_parser("scale-power", help="almost-homogeneous scaling of Phi^k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--conformal", action="store_true",
                   help="evaluate at conformal coupling (c = 0)")
    p = sub.add_parser("scaling-cocycle", help="rigid-scaling cocycle certificate")
    p.add_argument("--xi-nonzero", action="store_true")
    return parser


HANDLERS = {
    "validate-cocycle": cmd_validate_cocycle,
    "classify-h2": cmd_classify_h2,
    "build-extension": cmd_build_extension,
    "gauge-group": cmd_gauge_group,
    "extract-cocycle": cmd_extract_cocycle,
    "compare-impls": cmd_compare_impls,
    "lift-extension": cmd_lift_extension,
    "verify-multiplet": cmd_verify_multiplet,
    "detect-mixing": cmd_detect_mixing,
    "cover-z": cmd_cover_z,
    "spin-obstruction": cmd_spin_obstruction,
    "wick-product": cmd_wick_product,
    "scale-power": cmd_scale_power,
    "scaling-cocycle": cmd_scaling_cocycle,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(command=args.verb)
    start = time.monotonic()
    try:
        HANDLERS[args.verb](args, report)
    except (ParseError, SchemaError, FileNotFoundError, KeyError,
            SearchSpaceTooLarge, PreconditionFailed, ValueError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    if args.timing:
        report.timing_ms = (time.monotonic() - start) * 1000.0
    print(report.to_json() if args.json else report.to_human())
    return 0 if report.all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
