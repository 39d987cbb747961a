#!/usr/bin/env python3
"""Benchmark the compiled Groebner kernel against the pure-Python fallback.

Runs the package's real basis workloads (fixed-locus ideal, the two chart
eliminations, a smoothness certificate) plus seeded random systems on both
backends, asserts the outputs agree exactly, and prints a timing table.

Usage: python benchmarks/compare_backends.py [--repeat N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import time

from godeaux.backend import available_backends
from godeaux.derivations import fixed_locus_ideal
from godeaux.fixtures import load_fixtures
from godeaux.groebner import buchberger, jacobian_smoothness, ring_map_kernel
from godeaux.rings import DEGREVLEX, PolyRing, Polynomial
from godeaux.suite import SuiteContext


def _random_system(seed: int, nvars: int, ngens: int, max_degree: int,
                   terms: int) -> list[Polynomial]:
    rng = random.Random(seed)
    ring = PolyRing(tuple(f"x{i}" for i in range(nvars)), 5, DEGREVLEX)
    gens = []
    for _ in range(ngens):
        poly_terms = {}
        for _ in range(terms):
            exp = [0] * nvars
            for _ in range(rng.randrange(max_degree + 1)):
                exp[rng.randrange(nvars)] += 1
            poly_terms[tuple(exp)] = rng.randrange(1, 5)
        gens.append(ring.from_terms(poly_terms))
    return [g for g in gens if not g.is_zero()]


def _workloads():
    fx = load_fixtures()
    ctx = SuiteContext(fx, seed=1, budget=None, backend_name=None)
    ring = fx.presentation_ring

    def fixed_locus(backend):
        return buchberger(fixed_locus_ideal(fx.field),
                          backend_name=backend).polynomials

    def elimination_x3(backend):
        kp = ring_map_kernel(ring, ctx.chart_field("x3").ring,
                             ctx.adjunction_images("x3"),
                             backend_name=backend)
        return (kp.generators, kp.pairs_processed)

    def elimination_x2(backend):
        kp = ring_map_kernel(ring, ctx.chart_field("x2").ring,
                             ctx.adjunction_images("x2"),
                             backend_name=backend)
        return (kp.generators, kp.pairs_processed)

    def smoothness_x3(backend):
        cert = jacobian_smoothness(list(fx.presentation_rels), 2,
                                   backend_name=backend)
        return (cert.verdict, cert.pairs_processed)

    yield "fixed-locus ideal basis", fixed_locus
    yield "chart-x3 elimination", elimination_x3
    yield "chart-x2 elimination (seeded)", elimination_x2
    yield "chart-x3 smoothness certificate", smoothness_x3

    for nvars, ngens, terms, label in ((4, 4, 5, "small"),
                                       (5, 5, 6, "medium"),
                                       (6, 5, 6, "large")):
        def random_case(backend, nvars=nvars, ngens=ngens, terms=terms):
            gens = _random_system(20260817, nvars, ngens, 3, terms)
            gb = buchberger(gens, backend_name=backend)
            return (gb.polynomials, gb.pairs_processed)
        yield f"random system ({label}: {nvars} vars, {ngens} gens)", \
            random_case


def _best_time(fn, backend: str, repeat: int):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(backend)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per workload (best time wins)")
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled backend unavailable; nothing to compare")
        return 1

    header = f"{'workload':<44} {'pure':>10} {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    total_pure = total_compiled = 0.0
    for name, fn in _workloads():
        t_pure, r_pure = _best_time(fn, "pure", args.repeat)
        t_comp, r_comp = _best_time(fn, "compiled", args.repeat)
        assert r_pure == r_comp, f"backend mismatch on {name}"
        total_pure += t_pure
        total_compiled += t_comp
        speedup = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"{name:<44} {t_pure:>9.4f}s {t_comp:>9.4f}s {speedup:>8.1f}x")
    speedup = total_pure / total_compiled if total_compiled else float("inf")
    print("-" * len(header))
    print(f"{'total':<44} {total_pure:>9.4f}s {total_compiled:>9.4f}s "
          f"{speedup:>8.1f}x")
    print("\nresults identical across backends on every workload")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
