"""Compare the compiled kernels with their pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row reports the best-of-``repeat`` wall time per call and the speedup.
"""

import argparse
import random
import timeit

import numpy as np

from kmdecomp import _kernels
from kmdecomp.coxeter import GCM, WeylElement
from kmdecomp.dynkin import Diagram


def _jacobi_case(n):
    rng = np.random.default_rng(n)
    x = rng.normal(size=(n, n))
    a = x + x.T
    return f"jacobi_eigh n={n}", lambda impl: impl.jacobi_eigh(a, 1e-12, 100)


def _descent_case(name, word_len):
    gcm = GCM.of_type(name) if not name.startswith("hyp") else GCM([[2, -1, -1], [-1, 2, -2], [-1, -2, 2]])
    rng = random.Random(word_len)
    word = [rng.randint(1, gcm.n) for _ in range(word_len)]
    w = WeylElement.from_word(gcm, word)
    rows = [list(r) for r in w.matrix]
    return f"descent_length {name} |word|={word_len}", lambda impl: impl.descent_length([r[:] for r in rows], gcm.entries)


def _cover_case(n, seed):
    rng = random.Random(seed)
    bonds = {(i, j): rng.choice((0, 0, 0, 1, 1, 2, 4)) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    table = bytes(Diagram.from_bonds(n, bonds).finite_table())
    return f"cover_search n={n}", lambda impl: impl.cover_search(table, n, 1)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = _kernels.backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the Python backend is available")
    cases = [
        _jacobi_case(4),
        _jacobi_case(16),
        _jacobi_case(48),
        _descent_case("~A2", 60),
        _descent_case("hyp3", 30),
        _cover_case(10, 1),
        _cover_case(12, 2),
    ]
    print(f"{'kernel':40s} {'python':>12s} {'compiled':>12s} {'speedup':>8s}")
    for label, fn in cases:
        times = {}
        for name, impl in backends.items():
            number = 1
            while timeit.timeit(lambda: fn(impl), number=number) < 0.05:
                number *= 2
            times[name] = min(timeit.repeat(lambda: fn(impl), number=number, repeat=args.repeat)) / number
        py = times["python"]
        comp = times.get("compiled")
        comp_s = f"{comp * 1e3:10.3f}ms" if comp else "         n/a"
        speed = f"{py / comp:7.1f}x" if comp else "     n/a"
        print(f"{label:40s} {py * 1e3:10.3f}ms {comp_s} {speed}")


if __name__ == "__main__":
    main()
