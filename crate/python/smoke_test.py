"""Smoke test for the kpath Python extension.

Build and install first:

    maturin build --release -m crates/py/Cargo.toml
    pip install target/wheels/kpath-*.whl

then run ``python python/smoke_test.py``.
"""

import json
from itertools import permutations

import kpath


def brute_count(n, edges, k):
    adj = {(u, v) for u, v in edges} | {(v, u) for u, v in edges}
    seqs = sum(
        all((p[i], p[i + 1]) in adj for i in range(k - 1))
        for p in permutations(range(n), k)
    )
    return seqs // 2 if k >= 2 else seqs


def main():
    k3 = kpath.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert (k3.n, k3.edge_count, k3.directed) == (3, 3, False)
    assert kpath.Graph.parse(k3.to_edge_list()).edges() == k3.edges()

    assert kpath.count_paths(k3, 3) == 3
    assert kpath.sub_path(k3, 3) == 3
    assert kpath.inj_path(k3, 3) == 6
    assert kpath.hom_path(k3, 3) == 12
    assert kpath.colorful_walk_count(k3, [1, 2, 3], 3) == 6
    assert kpath.col_inj(k3, [1, 2, 3], 3) == 6
    assert kpath.count(k3, 5).count == 0

    petersen_edges = [(i, (i + 1) % 5) for i in range(5)]
    petersen_edges += [(i, i + 5) for i in range(5)]
    petersen_edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    petersen = kpath.Graph(10, petersen_edges)
    for k in range(1, 6):
        expected = brute_count(10, petersen_edges, k)
        assert kpath.sub_path(petersen, k) == expected, k
        assert kpath.count(petersen, k, algo="dfs").count == expected

    big = kpath.Graph(40, [(i, i + 1) for i in range(39)])
    assert kpath.hom_path(big, 30) > 2**30 and isinstance(kpath.hom_path(big, 30), int)

    for algo in ["dfs", "color-coding", "divide-color", "count-ie", "count-colorful", "algebraic"]:
        r = kpath.decide(petersen, 6, algo=algo, seed=7, witness=True)
        assert r.is_yes and r.decision == "YES", algo
        assert r.algorithm == algo
        if r.witness is not None:
            assert len(set(r.witness)) == 6
        again = json.loads(kpath.decide(petersen, 6, algo=algo, seed=7, witness=True).to_json())
        first = json.loads(r.to_json())
        first.pop("wall_time"), again.pop("wall_time")
        assert first == again, algo

    empty = kpath.Graph(6, [])
    assert kpath.decide(empty, 4, algo="algebraic").decision == "NO"

    f = kpath.Field(4)
    assert f.degree == 4 and f.order == 16
    for a in range(1, 16):
        assert f.mul(a, f.inv(a)) == 1
    assert f.inv(0) is None

    for bad in [
        lambda: kpath.Graph(2, [(0, 2)]),
        lambda: kpath.Graph(2, [(1, 1)]),
        lambda: kpath.Graph.parse("3 2 undirected\n0 1\n"),
        lambda: kpath.decide(k3, 3, algo="nosuch"),
        lambda: kpath.count(k3, 3, algo="appendix-a", colors=[1, 2]),
        lambda: kpath.sub_path(k3, 0),
        lambda: f.mul(16, 1),
    ]:
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    results = kpath.verify(max_n=4, graphs=30, seed=1)
    assert results and all(passed for _, passed, _ in results), results

    print(f"kpath smoke test passed ({len(results)} verify checks)")


if __name__ == "__main__":
    main()
