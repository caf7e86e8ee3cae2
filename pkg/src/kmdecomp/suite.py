"""Seeded self-checks of the algebraic laws the library relies on.

Each check returns ``(passed, detail)``; :func:`run_lemmas` runs them all
with a fixed seed and is deterministic apart from the timings.
"""

import itertools
import random
import time
from collections import deque

from .coxeter import GCM, WeylElement, find_straight_candidate, finite_type_catalog, finite_type_minors, is_straight
from .decomp import (
    DiagVerdict,
    NucleusVerdict,
    SqrtVerdict,
    birkhoff,
    cartan,
    diag_test,
    hole_witness,
    iwasawa,
    nucleus_member,
    polar,
    sl2_sqrt,
)
from .dynkin import Diagram, min_spherical_cover
from .errors import NotSymmetrizableError, OutsideBigCellError
from .involution import SubsetTag, ThetaSpec, check_theta_on_T, is_member, random_k_element, tau, theta
from .matgrp import GroupElement, Matrix, mul, random_bounded_element, random_group_element, random_torus_element
from .ring import LaurentPoly, Ring

RINGS = (Ring.Q, Ring.QI, Ring.LAURENT_Q, Ring.LAURENT_QI)


def _twist_laws(rng, samples):
    for ring in RINGS:
        spec = ThetaSpec.for_ring(ring)
        for _ in range(samples):
            n = rng.randint(2, 3)
            g = random_group_element(rng, ring, n)
            h = random_group_element(rng, ring, n)
            k = random_k_element(rng, ring, n)
            t = tau(spec, g)
            if theta(spec, theta(spec, g)) != g:
                return False, f"theta not involutive over {ring.value}"
            if theta(spec, mul(g, h)) != mul(theta(spec, g), theta(spec, h)):
                return False, f"theta not multiplicative over {ring.value}"
            if not is_member(spec, SubsetTag.Q, t):
                return False, f"tau(g) not theta-symmetric over {ring.value}"
            if not is_member(spec, SubsetTag.K, k) or tau(spec, mul(g, k)) != t:
                return False, f"tau(gk) != tau(g) over {ring.value}"
            if tau(spec, t) != mul(t, t):
                return False, f"tau(tau(g)) != tau(g)^2 over {ring.value}"
    return True, f"{samples} samples per ring"


def _torus(rng, samples):
    for ring in RINGS:
        spec = ThetaSpec.for_ring(ring)
        for _ in range(samples):
            t = random_torus_element(rng, ring, rng.randint(2, 4))
            if not check_theta_on_T(spec, t):
                return False, f"theta|T differs from sigma-inverse over {ring.value}"
    for n in range(2, 6):
        spec = ThetaSpec.for_ring(Ring.Q)
        for signs in itertools.product((1, -1), repeat=n):
            if signs.count(-1) % 2:
                continue
            m = GroupElement.diag(Ring.Q, signs)
            if not is_member(spec, SubsetTag.M, m):
                return False, f"{signs} is not in M"
            if is_member(spec, SubsetTag.A, m) != all(s == 1 for s in signs):
                return False, f"M and A meet in {signs}"
    return True, "theta|T and M cap A = 1 for n <= 5"


def _iwasawa(rng, samples, tol=1e-10):
    for _ in range(samples):
        g = random_bounded_element(rng, 3)
        f1, f2 = iwasawa(g, tol=tol), iwasawa(g, tol=tol)
        if not f1.verified:
            return False, f"residuals {f1.residual}, {f1.orthogonality}"
        if (f1.a_squared, f1.u) != (f2.a_squared, f2.u):
            return False, "exact factors changed between runs"
        if not f1.u.is_upper_triangular() or not f1.u.has_unit_diagonal():
            return False, "u is not in U+"
    return True, f"{samples} elements of SL_3(Q)"


def _birkhoff(rng, samples):
    done = 0
    for ring in RINGS:
        for _ in range(samples):
            g = random_group_element(rng, ring, rng.randint(2, 3))
            for order in ("+-", "-+"):
                try:
                    birkhoff(g, order=order)
                except OutsideBigCellError:
                    continue
                done += 1
    return True, f"{done} factorizations recomposed exactly"


def _cartan_polar(rng, samples, tol=1e-8):
    for _ in range(samples):
        g = random_bounded_element(rng, 2)
        c, p = cartan(g, tol), polar(g, tol)
        if not (c.verified and p.verified):
            return False, f"cartan {c.residual}, polar {p.residual}"
    return True, f"{samples} elements of SL_2(Q)"


def _hole():
    for n in range(1, 6):
        hole_witness(n)
    w = hole_witness(1)
    d, s = diag_test(w.v), sl2_sqrt(w.v)
    if d.verdict is not DiagVerdict.NOT_DIAGONALIZABLE or s.verdict is not SqrtVerdict.NO_ROOT:
        return False, "the two non-diagonalizability routes disagree"
    if d.obstruction != LaurentPoly({-1: 1, 0: 4, 1: 1}) or s.obstruction != LaurentPoly({-1: 1, 0: 6, 1: 1}):
        return False, "unexpected obstruction polynomials"
    if nucleus_member(w.v, w.u).verdict is not NucleusVerdict.NOT_IN_NUCLEUS:
        return False, "witness classified inside the nucleus"
    return True, "closed form for n = 1..5, both routes agree"


def _spherical_nucleus(rng, samples):
    spec = ThetaSpec.for_ring(Ring.Q)
    for _ in range(samples):
        g = random_bounded_element(rng, 3)
        cert = nucleus_member(tau(spec, g), g)
        if cert.verdict is not NucleusVerdict.IN_NUCLEUS:
            return False, f"residuals {cert.residuals}"
    return True, f"{samples} square-root chains of depth 8"


def bfs_lengths(gcm, limit=10_000):
    """Minimal word length of every element reachable within ``limit`` elements."""
    one = WeylElement.identity(gcm)
    gens = [WeylElement.from_word(gcm, [i]) for i in range(1, gcm.n + 1)]
    seen = {one.matrix: 0}
    queue = deque([one])
    while queue and len(seen) < limit:
        w = queue.popleft()
        for s in gens:
            v = w * s
            if v.matrix not in seen:
                seen[v.matrix] = seen[w.matrix] + 1
                queue.append(v)
    return seen


def _coxeter():
    for name, order in (("A2", 6), ("B2", 8), ("G2", 12)):
        gcm = GCM.of_type(name)
        table = bfs_lengths(gcm)
        if len(table) != order:
            return False, f"|W({name})| = {len(table)}"
        for m, ell in table.items():
            if WeylElement(gcm, (), m).length() != ell:
                return False, f"descent length differs from BFS in {name}"
    prof = is_straight(WeylElement.from_word(GCM.of_type("~A1"), [1, 2]), 20)
    if prof.profile != tuple(range(2, 41, 2)):
        return False, f"affine A1 profile {prof.profile}"
    if find_straight_candidate(GCM.of_type("~A2")) is None:
        return False, "no straight element found in affine A2"
    return True, "A2, B2, G2 exhaustive; affine A1 straight to n = 20"


def _finite_routes():
    checked = 0
    for n in (2, 3):
        pairs = list(itertools.combinations(range(n), 2))
        options = [(0, 0), (-1, -1), (-1, -2), (-2, -1), (-1, -3), (-3, -1), (-2, -2), (-1, -4), (-1, -5)]
        for choice in itertools.product(options, repeat=len(pairs)):
            a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
            for (i, j), (x, y) in zip(pairs, choice):
                a[i][j], a[j][i] = x, y
            gcm = GCM(a)
            try:
                minors = finite_type_minors(gcm)
            except NotSymmetrizableError:
                continue
            if minors != finite_type_catalog(gcm):
                return False, f"routes disagree on {a}"
            checked += 1
    return True, f"{checked} matrices of rank 2 and 3"


def _covers(rng, samples):
    for _ in range(samples):
        n = rng.randint(2, 6)
        bonds = {(i, j): rng.choice((0, 0, 1, 1, 2, 3, 4)) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        d = Diagram.from_bonds(n, bonds)
        cover = min_spherical_cover(d)
        best = n
        for labels in itertools.product(range(n), repeat=n):
            if any(labels[v] > max(labels[:v], default=-1) + 1 for v in range(n)):
                continue
            parts = {}
            for v, b in enumerate(labels):
                parts.setdefault(b, []).append(v + 1)
            if len(parts) < best and all(d.is_spherical(p) for p in parts.values()):
                best = len(parts)
        if best != cover.r:
            return False, f"cover {cover.r} != exhaustive {best} for {bonds}"
    return True, f"{samples} random diagrams against exhaustive search"


def _round_trip(rng, samples):
    for ring in RINGS:
        for _ in range(samples):
            g = random_group_element(rng, ring, 3)
            if GroupElement.from_json(g.to_json()) != g:
                return False, f"JSON round trip failed over {ring.value}"
            if Matrix.from_json(g.matrix.to_json()) != g.matrix:
                return False, f"matrix round trip failed over {ring.value}"
    return True, f"{samples} elements per ring"


def lemma_checks(seed=0, scale=1):
    """Name and zero-argument callable of every check, seeded from ``seed``."""
    rng = random.Random(seed)
    s = max(1, int(scale))
    return [
        ("twist laws", lambda: _twist_laws(rng, 10 * s)),
        ("torus and M cap A", lambda: _torus(rng, 10 * s)),
        ("refined Iwasawa", lambda: _iwasawa(rng, 20 * s)),
        ("Birkhoff recomposition", lambda: _birkhoff(rng, 5 * s)),
        ("Cartan and polar", lambda: _cartan_polar(rng, 20 * s)),
        ("non-diagonalizable witness", _hole),
        ("spherical nucleus", lambda: _spherical_nucleus(rng, 5 * s)),
        ("Coxeter length and straightness", _coxeter),
        ("finite-type routes", _finite_routes),
        ("spherical coverings", lambda: _covers(rng, 10 * s)),
        ("JSON round trip", lambda: _round_trip(rng, 5 * s)),
    ]


def run_lemmas(seed=0, scale=1):
    results = []
    for name, check in lemma_checks(seed, scale):
        start = time.perf_counter()
        try:
            ok, detail = check()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append({"check": name, "passed": ok, "detail": detail, "seconds": round(time.perf_counter() - start, 3)})
    return results
