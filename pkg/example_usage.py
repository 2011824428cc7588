#!/usr/bin/env python3
"""
Example Usage of the Weak Fano Workbench
========================================

This script shows how to use the workbench as a library: Euler
characteristics, the exceptional collection, resolutions, the weak Fano
gates and Kronecker stability.
"""

import sys
import os

# Add the repository root to the Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src import bundles, exccol, fano, kronecker, resolve  # noqa: E402
from src.config import WorkbenchConfig  # noqa: E402
from src.report import build_report  # noqa: E402


def example_euler_characteristics():
    """Euler characteristics and pairings on the quintic threefold."""
    print("=" * 60)
    print("🧮 Euler Characteristics")
    print("=" * 60)

    catalog = bundles.Catalog(degree=5)
    for name in ["O", "O(1)", "R", "Q", "Q^v", "I_l"]:
        print(f"  chi({name}) = {bundles.chi(catalog.get(name))}")

    e = bundles.normalized_bundle(0, 4)
    print(f"  chi(Q(-1), E(0,4)) = "
          f"{bundles.chi_pair(catalog.get('Q(-1)'), e)}")


def example_exceptional_collection():
    """The Gram matrix, a mutation and a Serre operator."""
    print("\n" + "=" * 60)
    print("🧱 Exceptional Collection")
    print("=" * 60)

    collection = exccol.ExceptionalCollection()
    gram = collection.gram()
    for i in range(gram.size):
        print("  " + " ".join(f"{gram[i, j]:3d}" for j in range(gram.size)))

    q_dual = collection.to_kclass(collection.catalog.get("Q^v"))
    print(f"\n  [Q^v] = {q_dual}")
    print(f"  S_B([Q^v]) = {collection.serre_sub(range(1, 4), q_dual)}")


def example_resolutions():
    """Validate the resolutions of every case."""
    print("\n" + "=" * 60)
    print("📐 Resolutions")
    print("=" * 60)

    suite = resolve.full_suite()
    for result in suite.results:
        mark = "✅" if result.passed else "❌"
        print(f"  {mark} ({result.case_id}) {result.description}")
    print(f"\n  {suite.passed}/{len(suite.results)} resolutions pass")


def example_weak_fano_gates():
    """Anti-canonical numbers and the admissible table per degree."""
    print("\n" + "=" * 60)
    print("🔬 Weak Fano Gates")
    print("=" * 60)

    for d in range(1, 6):
        table = sorted(fano.admissible_indecomposable(d))
        print(f"  d = {d}: {table}")

    v = fano.verdict(5, -1, 4)
    print(f"\n  (-K)^4 for E(-1,4) on V5 = {v.anti_k4}, "
          f"failed gates: {v.failed}")


def example_kronecker():
    """Stability of a few (2, 2) representations."""
    print("\n" + "=" * 60)
    print("🔗 Kronecker Quiver")
    print("=" * 60)

    sl2 = kronecker.KroneckerRep.from_lists([
        [[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]],
        [[0, 0], [0, 0]], [[0, 0], [0, 0]],
    ])
    verdict = kronecker.stability(sl2)
    print(f"  sl2: semistable={verdict.semistable}, "
          f"stable={verdict.stable}, "
          f"quadric rank={kronecker.quadric_rank(sl2)}")

    for k, rep in enumerate(kronecker.random_representations(6, seed=3)):
        verdict = kronecker.stability(rep)
        subs = [tuple(w.sub) for w in verdict.witnesses]
        print(f"  sample {k}: stable={verdict.stable} witnesses={subs}")


def example_report():
    """Build a small report and print its summary."""
    print("\n" + "=" * 60)
    print("📋 Verification Report")
    print("=" * 60)

    report = build_report(WorkbenchConfig(sample_count=24))
    print(f"  {report.passed} claims pass, {report.failed} fail")


def main():
    """Run all examples."""
    example_euler_characteristics()
    example_exceptional_collection()
    example_resolutions()
    example_weak_fano_gates()
    example_kronecker()
    example_report()


if __name__ == "__main__":
    main()
