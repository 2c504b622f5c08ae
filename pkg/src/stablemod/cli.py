"""Command-line interface.

Every command is a deterministic function of (document, flags, seed).
Machine-readable output is requested with --json; its serialization is
canonical (sorted keys), so identical invocations produce byte-identical
output.  Exit codes are documented in --help.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import (
    CyclicQuiverError,
    DocumentError,
    NonCommutingMorphismError,
    NonPrimeModulusError,
    PreconditionError,
    StablemodError,
    TooLargeError,
    UnknownCheckIdError,
)
from . import document as docmod
from .rep import hom_basis
from .stability import condition_report, is_stable, stable_part
from .stabcat import (
    is_stable_epi,
    is_stable_mono,
    phom_basis,
    stable_cokernel,
    stable_cokernel_pushout,
    stable_factor_through,
    stable_hom_dim,
    stable_iso,
    stable_kernel,
)
from .verify import CHECK_IDS, InstanceSpec, random_document, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOCUMENT = 3
EXIT_UNKNOWN_NAME = 4
EXIT_PRECONDITION = 5

_EPILOG = """\
exit codes:
  0  success (verify: all checks passed)
  1  verify: at least one check failed
  2  usage error (bad flags or arguments)
  3  document error (syntax, shapes, modulus, cyclic quiver, commuting squares)
  4  unknown name (representation, morphism, quiver or check id)
  5  precondition violated (e.g. pushout cokernel on a non-mono)
"""


def _matrices(maps) -> list:
    return [m.to_lists() for m in maps]


def _emit(payload: dict, as_json: bool, human_lines) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in human_lines:
            print(line)


def _load(path: str) -> docmod.Document:
    with open(path, "r", encoding="utf-8") as fh:
        return docmod.parse(fh.read())


def _cmd_stable_part(args) -> int:
    doc = _load(args.document)
    rep = doc.representation(args.representation)
    dec = stable_part(rep)
    payload = {
        "module_dims": list(rep.dims),
        "stable_dims": list(dec.stable_part.dims),
        "projective_dims": list(dec.projective_part.dims),
        "extracted_vertices": list(dec.extracted_vertices),
        "include_stable": _matrices(dec.include_stable.vertex_maps),
        "project_stable": _matrices(dec.project_stable.vertex_maps),
        "include_projective": _matrices(dec.include_projective.vertex_maps),
        "project_projective": _matrices(dec.project_projective.vertex_maps),
    }
    _emit(payload, args.json, [
        f"module dims:          {tuple(rep.dims)}",
        f"stable part dims:     {tuple(dec.stable_part.dims)}",
        f"projective part dims: {tuple(dec.projective_part.dims)} "
        f"(indecomposables at vertices {list(dec.extracted_vertices)})",
        f"stable inclusion:     {_matrices(dec.include_stable.vertex_maps)}",
        f"stable projection:    {_matrices(dec.project_stable.vertex_maps)}",
    ])
    return EXIT_OK


def _cmd_hom(args) -> int:
    doc = _load(args.document)
    src = doc.representation(args.source)
    tgt = doc.representation(args.target)
    hb = hom_basis(src, tgt)
    payload = {
        "dimension": hb.dim,
        "basis": [_matrices(f.vertex_maps) for f in hb.basis],
    }
    lines = [f"dim Hom = {hb.dim}"]
    for k, f in enumerate(hb.basis):
        lines.append(f"basis[{k}]: {_matrices(f.vertex_maps)}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_stable_hom(args) -> int:
    doc = _load(args.document)
    src = doc.representation(args.source)
    tgt = doc.representation(args.target)
    hb = hom_basis(src, tgt)
    ph = phom_basis(src, tgt)
    payload = {
        "hom_dimension": hb.dim,
        "projectively_trivial_dimension": ph.dim,
        "stable_hom_dimension": stable_hom_dim(src, tgt),
    }
    _emit(payload, args.json, [
        f"dim Hom            = {hb.dim}",
        f"dim PHom           = {ph.dim}",
        f"dim stable Hom     = {payload['stable_hom_dimension']}",
    ])
    return EXIT_OK


def _cmd_coker(args) -> int:
    doc = _load(args.document)
    f = doc.morphism(args.morphism)
    coker = stable_cokernel(f)
    payload = {
        "cokernel_dims": list(coker.rep.dims),
        "projection": _matrices(coker.projection.representative.vertex_maps),
        "projection_is_stable_epi": is_stable_epi(
            coker.projection.representative),
    }
    lines = [
        f"stable cokernel dims: {tuple(coker.rep.dims)}",
        f"projection: {_matrices(coker.projection.representative.vertex_maps)}",
    ]
    if f.is_injective() and is_stable(f.target):
        po = stable_cokernel_pushout(f)
        agree = (stable_iso(coker.rep, po.rep).found
                 and stable_factor_through(
                     po.projection.representative,
                     coker.projection.representative) is not None
                 and stable_factor_through(
                     coker.projection.representative,
                     po.projection.representative) is not None)
        payload["pushout_crosscheck"] = {
            "applies": True,
            "object_dims": list(po.rep.dims),
            "agrees": agree,
        }
        lines.append(f"pushout cross-check: object dims {tuple(po.rep.dims)}, "
                     f"{'agrees' if agree else 'DISAGREES'}")
    else:
        payload["pushout_crosscheck"] = {"applies": False}
        lines.append("pushout cross-check: preconditions not met (skipped)")
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_ker(args) -> int:
    doc = _load(args.document)
    f = doc.morphism(args.morphism)
    ker = stable_kernel(f)
    payload = {
        "kernel_dims": list(ker.rep.dims),
        "inclusion": _matrices(ker.inclusion.representative.vertex_maps),
    }
    _emit(payload, args.json, [
        f"stable kernel dims: {tuple(ker.rep.dims)}",
        f"inclusion: {_matrices(ker.inclusion.representative.vertex_maps)}",
    ])
    return EXIT_OK


def _cmd_is_epi(args) -> int:
    doc = _load(args.document)
    verdict = is_stable_epi(doc.morphism(args.morphism))
    _emit({"stable_epi": verdict}, args.json,
          ["stable epi" if verdict else "not a stable epi"])
    return EXIT_OK


def _cmd_is_mono(args) -> int:
    doc = _load(args.document)
    verdict = is_stable_mono(doc.morphism(args.morphism))
    _emit({"stable_mono": verdict}, args.json,
          ["stable mono" if verdict else "not a stable mono"])
    return EXIT_OK


def _cmd_lemma41(args) -> int:
    doc = _load(args.document)
    report = condition_report(doc.algebra)
    payload = report.to_dict()
    lines = [
        f"(iv) every indecomposable injective stable:  "
        f"{'holds' if report.injectives_stable else 'fails'} "
        f"{list(report.injective_stable_by_vertex)}",
        f"(v)  no nontrivial projective injective:     "
        f"{'holds' if report.no_projective_injective else 'fails'} "
        f"pairs={[list(p) for p in report.projective_injective_pairs]}",
        f"(vi) every indecomposable projective costable: "
        f"{'holds' if report.projectives_costable else 'fails'} "
        f"{list(report.projective_costable_by_vertex)}",
        f"implication consistency: {'ok' if report.implications_ok else 'VIOLATED'}",
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_verify(args) -> int:
    spec = InstanceSpec(quiver=args.quiver, p=args.p, max_dim=args.maxdim,
                        samples=args.samples, seed=args.seed)
    checks = args.checks if args.checks else None
    reports = run_suite(spec, checks)
    if args.json:
        payload = {
            "spec": {"quiver": args.quiver, "p": args.p, "maxdim": args.maxdim,
                     "samples": args.samples, "seed": args.seed},
            "reports": [r.to_dict(machine=True) for r in reports],
            "all_passed": all(r.passed for r in reports),
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            print(f"{status}  {r.check_id:34s} {r.pass_count}/{r.instance_count}"
                  f"  ({r.wall_time:.2f}s)")
            if r.first_counterexample and not r.passed:
                print("  counterexample document:")
                for line in r.first_counterexample.splitlines():
                    print("    " + line)
        print("all checks passed" if all(r.passed for r in reports)
              else "SOME CHECKS FAILED")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _cmd_gen(args) -> int:
    doc = random_document(args.quiver, args.p, args.maxdim, args.seed,
                          count=args.count)
    sys.stdout.write(docmod.serialize(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablemod",
        description="Exact computations in the stable module category of "
                    "finite acyclic quiver algebras over prime fields.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true",
                       help="machine-readable output (canonical JSON)")
        return p

    p = add("stable-part", _cmd_stable_part,
            "maximal projective summand split of a representation")
    p.add_argument("document")
    p.add_argument("representation")

    p = add("hom", _cmd_hom, "dimension and basis of a hom space")
    p.add_argument("document")
    p.add_argument("source")
    p.add_argument("target")

    p = add("stable-hom", _cmd_stable_hom, "stable hom dimensions")
    p.add_argument("document")
    p.add_argument("source")
    p.add_argument("target")

    p = add("coker", _cmd_coker,
            "stable cokernel (with pushout cross-check when applicable)")
    p.add_argument("document")
    p.add_argument("morphism")

    p = add("ker", _cmd_ker, "stable kernel")
    p.add_argument("document")
    p.add_argument("morphism")

    p = add("is-epi", _cmd_is_epi, "stable-category epimorphism test")
    p.add_argument("document")
    p.add_argument("morphism")

    p = add("is-mono", _cmd_is_mono, "stable-category monomorphism test")
    p.add_argument("document")
    p.add_argument("morphism")

    p = add("lemma41", _cmd_lemma41,
            "per-algebra ring-condition report (projective injectives etc.)")
    p.add_argument("document")

    p = add("verify", _cmd_verify, "run verification check suites")
    p.add_argument("--quiver", choices=["A2", "A3", "Kronecker"], default="A2")
    p.add_argument("--p", type=int, default=2, help="prime field modulus")
    p.add_argument("--maxdim", type=int, default=3,
                   help="max vertex dimension of sampled representations")
    p.add_argument("--samples", type=int, default=25,
                   help="instances per check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", nargs="*", metavar="CHECK-ID",
                   help=f"subset of: {', '.join(CHECK_IDS)}")

    p = add("gen", _cmd_gen, "emit a random document (for replay and fuzzing)")
    p.add_argument("--quiver", choices=["A2", "A3", "Kronecker"], default="A2")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--maxdim", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=3,
                   help="number of random representations")

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOCUMENT
    except (DocumentError, NonPrimeModulusError, CyclicQuiverError,
            NonCommutingMorphismError) as exc:
        print(f"document error: {exc}", file=sys.stderr)
        return EXIT_DOCUMENT
    except (KeyError, UnknownCheckIdError) as exc:
        print(f"unknown name: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    except (PreconditionError, TooLargeError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except StablemodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
