"""The thirteen acceptance criteria, each under its wall-clock budget.

Every criterion starts from cold caches.  One ``PASS``/``FAIL`` line per
criterion is printed at the end of the pytest run (see ``conftest``), or
directly when this file is executed as a script.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest

from hopfgraph import characters as ch
from hopfgraph import tutte_identities as ti
from hopfgraph.corpus import (
    DEFAULT_SEED,
    connected_corpus,
    corpus,
    designated_multigraphs,
    random_multigraphs,
    trees,
)
from hopfgraph.hopf import GraphSum, antipode_flats, antipode_linear, antipode_takeuchi, hopf_axiom_check
from hopfgraph.matroid import acyclic_orientations_bruteforce, count_spanning_trees_bruteforce
from hopfgraph.multigraph import (
    Multigraph,
    complete,
    components,
    cycle,
    delete_edges,
    format_graph,
    path,
    rank,
    star,
)
from hopfgraph.polynomial import Poly
from hopfgraph.qsym import QSymElement, compositions, m_product, pi, psi, vandermonde_check
from hopfgraph.reciprocity import (
    A009775_PREFIX,
    a009775_closed_form,
    arrangements,
    coclique_sum,
    derangements,
    egf_series,
    reciprocity_check,
    reciprocity_closed_form,
    signed_reciprocity_check,
    zeta_power_xi,
)
from hopfgraph.tutte import rank_nullity_from_tutte, rank_nullity_poly, swap_tutte_rank_nullity, tutte
from hopfgraph.verify import clear_caches

RESULTS: dict[int, tuple[bool, float, float, str]] = {}

CORPUS = corpus(5) + designated_multigraphs()


def first_failure(graphs, pred):
    for G in graphs:
        if not pred(G):
            return format_graph(G)
    return None


# -- criteria -----------------------------------------------------------------

def c1_antipode():
    graphs = CORPUS + random_multigraphs(200, n_max=5, e_max=7, seed=DEFAULT_SEED)
    bad = first_failure(graphs, lambda G: antipode_flats(G) == antipode_takeuchi(G))
    bad = bad or first_failure(graphs, hopf_axiom_check)
    bad = bad or first_failure(graphs, lambda G: antipode_linear(antipode_linear(GraphSum.of(G))) == GraphSum.of(G))
    return bad is None, f"{len(graphs)} graphs" if bad is None else bad


def c2_stanley():
    zinv = ch.power(ch.zeta(), -1)
    bad = first_failure(CORPUS, lambda G: zinv(G) == (-1) ** G.n * len(acyclic_orientations_bruteforce(G)))
    return bad is None, f"{len(CORPUS)} graphs" if bad is None else bad


def c3_a009775():
    flats_vals = [ch.inverse_via_flats(ch.is_acyclic, complete(n)) for n in range(1, 9)]
    closed = [a009775_closed_form(n) for n in range(1, 9)]
    listed = list(A009775_PREFIX[:8])
    return flats_vals == closed == listed, ", ".join(map(str, flats_vals))


def c4_cycles():
    inv = ch.power(ch.alpha(), -1)
    vals = [inv(cycle(n)) for n in range(3, 9)]
    return vals == [(-1) ** n + 1 for n in range(3, 9)], ", ".join(map(str, vals))


def c5_degree_chromatic():
    k = Poly.gen()
    ok = ch.degree_chromatic(path(4), 2) == k**4 - 2 * k**2 + k
    ok &= ch.degree_chromatic(star(3), 2) == k**4 - 3 * k**2 + 2 * k
    count = 0
    for n in range(3, 8):
        for T in trees(n):
            P = ch.degree_chromatic(T, 2)
            count += 1
            ok &= P.coeff(n) == 1 and P.coeff(n - 1) == 0
            ok &= P.coeff(n - 2) == -sum(comb(d, 2) for d in T.degrees())
    return ok, f"Z, Y and {count} trees"


def c6_tutte_char():
    xs, ys, ks = (-2, -1, 0, 2, 3), tuple(range(-2, 4)), tuple(range(-3, 6))
    graphs = corpus(5) + [complete(6), cycle(6)]
    for G in graphs:
        if not ti.tutte_char_identity_check(G, xs, ys, ks):
            return False, f"theorem at {format_graph(G)}"
        if not ti.two_formula_check(G, ys, ks):
            return False, f"x=2 form at {format_graph(G)}"
        if not ti.zero_formula_check(G, ys, ks):
            return False, f"x=0 form at {format_graph(G)}"
        if not ti.inverse_corollary_check(G, ys):
            return False, f"k=-1 corollary at {format_graph(G)}"
    return True, f"{len(graphs)} graphs x {len(xs) * len(ys) * len(ks)} points"


def c7_recipe():
    pts = ti.recipe_points(20)
    ok = len(pts) == 20
    ok &= all(ti.recipe_edgeless_check(n, pts) for n in range(5))
    for G in designated_multigraphs():
        loops = [i for i, (u, v) in enumerate(G.edges) if u == v]
        if loops:
            ok &= ti.recipe_loop_check(G, loops[0], pts)
    for G in (complete(3), complete(4), cycle(4), Multigraph(3, ((0, 1), (0, 1), (1, 2), (0, 2)))):
        ok &= ti.recipe_deletion_contraction_check(G, 0, pts)
    for G in (path(4), star(3), Multigraph(4, ((0, 1), (1, 2), (2, 0), (2, 3)))):
        bridge = next(i for i in range(G.e) if components(delete_edges(G, [i])) > components(G))
        ok &= ti.recipe_cut_edge_check(G, bridge, pts)
    return ok, "20 points per instance"


def c8_t32():
    graphs = connected_corpus(5)
    bad = first_failure(graphs, lambda G: (lambda a, b: a == b)(*ti.t32_identity(G)))
    return bad is None, f"{len(graphs)} connected graphs" if bad is None else bad


def c9_complete():
    ok = all(tutte(complete(n))(k + 1, 0) == Fraction(factorial(n + k - 1), factorial(k))
             for n in range(1, 8) for k in range(1, 6))
    ok &= all(tutte(complete(n))(k + 1, 2) == ti.kn_multinomial_sum(n, k, lambda a: Fraction(2) ** comb(a, 2))
              for n in range(1, 8) for k in range(1, 5))
    return ok, "n <= 7"


def c10_rho1():
    # R_H(1, y) = y^loops(H); looped graphs carry that factor, loopless ones give k^n
    bad = first_failure(CORPUS, lambda G: ti.limit_x1_check(G, (-1, 0, 2), range(-3, 6)))
    loopless = sum(1 for G in CORPUS if not G.has_loop())
    return bad is None, f"{loopless} loopless + {len(CORPUS) - loopless} looped" if bad is None else bad


def c11_qsym():
    graphs = corpus(5)
    bad = first_failure(graphs, lambda G: pi(psi(G, ch.zeta())) == ch.poly_in_k(ch.zeta(), G))
    if bad:
        return False, bad
    comps = [c for n in range(7) for c in compositions(n)]
    for a, b in product(comps, repeat=2):
        if sum(a) + sum(b) <= 6 and pi(m_product(a, b)) != pi(QSymElement.M(a)) * pi(QSymElement.M(b)):
            return False, f"Pi not multiplicative at {a}, {b}"
    ok = all(vandermonde_check(l, range(-3, 6), range(-3, 6)) for l in range(7))
    return ok, f"{len(graphs)} graphs, weight <= 6"


def c12_xi_suite():
    for n, m in product(range(8), repeat=2):
        lhs, rhs = reciprocity_check(n, m)
        if not (lhs == rhs == reciprocity_closed_form(n, m) and signed_reciprocity_check(n, m)):
            return False, f"reciprocity at n={n}, m={m}"
    for n in range(9):
        if zeta_power_xi(-1, 1, complete(n)) != (-1) ** n * derangements(n):
            return False, f"derangements at n={n}"
        if zeta_power_xi(-1, -1, complete(n)) != (-1) ** n * arrangements(n):
            return False, f"arrangements at n={n}"
    for c, k in product((-1, 1, 2), range(-2, 4)):
        target = egf_series(c, k, 8).egf_values()
        if any(zeta_power_xi(k, c, complete(n)) != target[n] for n in range(9)):
            return False, f"EGF at c={c}, k={k}"
    for c in (-1, 1, 2):
        conv = ch.convolve(ch.zeta(), ch.xi(c))
        bad = first_failure(corpus(5), lambda G: conv(G) == coclique_sum(G, c))
        if bad:
            return False, f"cocliques c={c} at {bad}"
    return True, "reciprocity, signed, D_n, A_n, EGF, cocliques"


def c13_engines():
    graphs = CORPUS + random_multigraphs(100, n_max=5, e_max=10, seed=DEFAULT_SEED + 1)
    bad = first_failure(graphs, lambda G: rank_nullity_from_tutte(G) == rank_nullity_poly(G))
    bad = bad or first_failure(graphs, lambda G: swap_tutte_rank_nullity(rank_nullity_poly(G), rank(G)) == tutte(G))
    bad = bad or first_failure(graphs, lambda G: tutte(G)(1, 1) == count_spanning_trees_bruteforce(G))
    bad = bad or first_failure(graphs, lambda G: tutte(G)(2, 0) == len(acyclic_orientations_bruteforce(G)))
    return bad is None, f"{len(graphs)} graphs" if bad is None else bad


CRITERIA = [
    (1, "antipode: flats = Takeuchi, Hopf axiom, involution", c1_antipode, 60),
    (2, "Stanley: zeta^-1(G) = (-1)^n a(G)", c2_stanley, 10),
    (3, "A009775 prefix via flats and closed form", c3_a009775, 30),
    (4, "alpha^-1(C_n) = (-1)^n + 1", c4_cycles, 5),
    (5, "degree-chromatic examples and tree leading terms", c5_degree_chromatic, 30),
    (6, "Tutte-character theorem and its x=2, x=0, k=-1 forms", c6_tutte_char, 300),
    (7, "recipe base cases", c7_recipe, 30),
    (8, "T(3,2) subset-sum identity", c8_t32, 10),
    (9, "complete-graph Tutte identities", c9_complete, 60),
    (10, "rho_{1,y}^k(G) = k^n", c10_rho1, 10),
    (11, "QSym bridge", c11_qsym, 60),
    (12, "xi_c reciprocity, derangements, EGF, cocliques", c12_xi_suite, 60),
    (13, "engine cross-checks", c13_engines, 120),
]


def evaluate(number: int) -> tuple[bool, float, float, str]:
    _, _, fn, limit = CRITERIA[number - 1]
    clear_caches()
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    RESULTS[number] = (bool(ok) and elapsed < limit, elapsed, limit, detail)
    return RESULTS[number]


def line_for(number: int) -> str:
    title = CRITERIA[number - 1][1]
    ok, elapsed, limit, detail = RESULTS[number]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({elapsed:.2f}s / {limit}s; {detail})"


def summary_lines() -> list[str]:
    return [line_for(number) for number, *_ in CRITERIA if number in RESULTS]


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number):
    ok, elapsed, limit, detail = evaluate(number)
    print(line_for(number))
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"
    assert ok, f"criterion {number} failed: {detail}"


if __name__ == "__main__":
    for number, *_ in CRITERIA:
        evaluate(number)
        print(line_for(number), flush=True)
