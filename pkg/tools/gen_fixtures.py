#!/usr/bin/env python3
"""Regenerate the shipped fixture documents (canonical serialization).

Each fixture carries the named indecomposables of its algebra over F_2 plus
the inclusion/projection morphisms the test suite and CLI examples use.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from stablemod.document import Document, serialize
from stablemod.linalg import FieldSpec, Matrix
from stablemod.projectives import injective, projective, regular_module, simple
from stablemod.quiver import build_algebra, named_quiver
from stablemod.rep import Morphism, Representation, direct_sum

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "stablemod" / "fixtures"

F2 = FieldSpec(2)


def base_document(quiver_name):
    algebra = build_algebra(named_quiver(quiver_name), F2)
    doc = Document(algebra)
    for v in range(algebra.vertex_count):
        doc.representations[f"P{v}"] = projective(algebra, v)
        doc.representations[f"I{v}"] = injective(algebra, v)
        doc.representations[f"S{v}"] = simple(algebra, v)
    doc.representations["R"] = regular_module(algebra)
    return algebra, doc


def a2_document():
    alg, doc = base_document("A2")
    doc.representations["S0_plus_P0"] = direct_sum(
        [doc.representations["S0"], doc.representations["P0"]]).rep
    doc.morphisms["socle_P1_P0"] = Morphism(
        doc.representations["P1"], doc.representations["P0"],
        [Matrix(F2, 1, 0, []), Matrix(F2, 1, 1, [1])])
    doc.morphisms["quot_P0_S0"] = Morphism(
        doc.representations["P0"], doc.representations["S0"],
        [Matrix(F2, 1, 1, [1]), Matrix(F2, 0, 1, [])])
    return doc


def a3_document():
    alg, doc = base_document("A3")
    doc.morphisms["inc_S1_I1"] = Morphism(
        doc.representations["S1"], doc.representations["I1"],
        [Matrix(F2, 1, 0, []), Matrix(F2, 1, 1, [1]), Matrix(F2, 0, 0, [])])
    doc.morphisms["proj_I1_S0"] = Morphism(
        doc.representations["I1"], doc.representations["S0"],
        [Matrix(F2, 1, 1, [1]), Matrix(F2, 0, 1, []), Matrix(F2, 0, 0, [])])
    doc.morphisms["inc_P1_P0"] = Morphism(
        doc.representations["P1"], doc.representations["P0"],
        [Matrix(F2, 1, 0, []), Matrix(F2, 1, 1, [1]), Matrix(F2, 1, 1, [1])])
    doc.morphisms["inc_P2_P0"] = Morphism(
        doc.representations["P2"], doc.representations["P0"],
        [Matrix(F2, 1, 0, []), Matrix(F2, 1, 0, []), Matrix(F2, 1, 1, [1])])
    return doc


def kronecker_document():
    alg, doc = base_document("Kronecker")
    doc.representations["R0"] = Representation(
        alg, (1, 1), [Matrix(F2, 1, 1, [1]), Matrix(F2, 1, 1, [0])])
    doc.morphisms["inc_P1_R0"] = Morphism(
        doc.representations["P1"], doc.representations["R0"],
        [Matrix(F2, 1, 0, []), Matrix(F2, 1, 1, [1])])
    return doc


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, builder in (("A2", a2_document), ("A3", a3_document),
                          ("kronecker", kronecker_document)):
        path = OUT / f"{name}.json"
        path.write_text(serialize(builder()), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
