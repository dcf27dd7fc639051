"""Named verification suites.

Each suite is a function ``(VerifyConfig) -> list[Check]``.  A :class:`Check`
names one identity instance and, on failure, the graph (or parameter point)
that broke it.  Reports are sorted so ``verify all`` is byte-reproducible.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Callable, Iterable, Optional

from . import characters as ch
from .corpus import (
    DEFAULT_SEED,
    connected_corpus,
    corpus,
    designated_multigraphs,
    random_multigraphs,
    trees,
)
from .hopf import (
    GraphSum,
    antipode_flats,
    antipode_linear,
    antipode_takeuchi,
    hopf_axiom_check,
)
from .matroid import acyclic_orientations_bruteforce, count_spanning_trees_bruteforce
from .multigraph import (
    Multigraph,
    complete,
    components,
    cycle,
    delete_edges,
    disjoint_union,
    format_graph,
    path,
    rank,
    star,
)
from .polynomial import Poly
from .qsym import compositions, m_product, pi, psi, vandermonde_check, zeta_q, QSymElement
from .reciprocity import (
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
from .tutte import rank_nullity_from_tutte, rank_nullity_poly, swap_tutte_rank_nullity, tutte
from .tutte_identities import (
    inverse_corollary_check,
    kn_multinomial_sum,
    limit_x1_check,
    recipe_cut_edge_check,
    recipe_deletion_contraction_check,
    recipe_edgeless_check,
    recipe_loop_check,
    recipe_points,
    t32_identity,
    tau_kn_power_check,
    tau_kn_power_corrected,
    tutte_char_failures,
    tutte_from_P,
    two_formula_check,
    zero_formula_check,
)


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = DEFAULT_SEED
    random_antipode: int = 200
    random_engines: int = 100
    corpus_n_max: int = 5
    x_grid: tuple = (-2, -1, 0, 2, 3)
    y_grid: tuple = (-2, -1, 0, 1, 2, 3)
    k_grid: tuple = tuple(range(-3, 6))
    jobs: int = 1


@dataclass
class Check:
    suite: str
    identity: str
    passed: bool
    counterexample: Optional[str] = None
    detail: str = ""

    def sort_key(self):
        return (self.suite, self.identity, self.counterexample or "", self.detail)


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> dict:
        suites: dict[str, list[int]] = {}
        for c in self.checks:
            tally = suites.setdefault(c.suite, [0, 0])
            tally[0] += c.passed
            tally[1] += 1
        return {s: {"passed": p, "total": t} for s, (p, t) in sorted(suites.items())}

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "summary": self.summary(),
            "failures": [asdict(c) for c in sorted(self.failures(), key=Check.sort_key)],
            "checks": len(self.checks),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _check_all(suite: str, identity: str, graphs: Iterable[Multigraph], pred: Callable) -> Check:
    """One :class:`Check` that fails on the first graph violating ``pred``."""
    count = 0
    for G in graphs:
        count += 1
        if not pred(G):
            return Check(suite, identity, False, format_graph(G))
    return Check(suite, identity, True, detail=f"{count} graphs")


def _full_corpus(cfg: VerifyConfig) -> list[Multigraph]:
    return corpus(cfg.corpus_n_max) + designated_multigraphs()


# -- suites -------------------------------------------------------------------

def suite_antipode(cfg: VerifyConfig) -> list[Check]:
    graphs = _full_corpus(cfg) + random_multigraphs(cfg.random_antipode, 5, 7, cfg.seed)
    s = "antipode"
    return [
        _check_all(s, "flats == takeuchi", graphs, lambda G: antipode_flats(G) == antipode_takeuchi(G)),
        _check_all(s, "m(S x I)Delta == u eps", graphs, hopf_axiom_check),
        _check_all(s, "S^2 == id", graphs, lambda G: antipode_linear(antipode_linear(GraphSum.of(G))) == GraphSum.of(G)),
    ]


def suite_stanley(cfg: VerifyConfig) -> list[Check]:
    zinv = ch.power(ch.zeta(), -1)
    return [
        _check_all(
            "stanley",
            "zeta^-1(G) == (-1)^n a(G), brute-force a",
            _full_corpus(cfg),
            lambda G: zinv(G) == (-1) ** G.n * len(acyclic_orientations_bruteforce(G)),
        )
    ]


def suite_a009775(cfg: VerifyConfig) -> list[Check]:
    out = []
    inv = ch.power(ch.alpha(), -1)
    for n in range(1, 9):
        listed = A009775_PREFIX[n - 1]
        flats_val = ch.inverse_via_flats(ch.is_acyclic, complete(n))
        conv_val = inv(complete(n))
        closed = a009775_closed_form(n)
        ok = flats_val == conv_val == closed == listed
        out.append(Check("a009775", f"alpha^-1(K_{n}) == {listed}", ok, None if ok else f"K{n}",
                         f"flats={flats_val} antipode={conv_val} closed={closed}"))
    for n in range(9, len(A009775_PREFIX) + 1):
        ok = a009775_closed_form(n) == A009775_PREFIX[n - 1]
        out.append(Check("a009775", f"closed form n={n}", ok, None if ok else f"K{n}"))
    return out


def suite_cycles(cfg: VerifyConfig) -> list[Check]:
    inv = ch.power(ch.alpha(), -1)
    out = []
    for n in range(3, 9):
        val = inv(cycle(n))
        ok = val == (-1) ** n + 1
        out.append(Check("cycles", f"alpha^-1(C_{n}) == (-1)^n + 1", ok, None if ok else f"C{n}", str(val)))
    return out


def _leading_correction_ok(T: Multigraph, m: int) -> bool:
    P = ch.degree_chromatic(T, m)
    degs = T.degrees()
    expected = -sum(comb(d, m) for d in degs)
    lower = all(P.coeff(T.n - j) == 0 for j in range(1, m))
    return P.coeff(T.n) == 1 and lower and P.coeff(T.n - m) == expected


def suite_degree_chromatic(cfg: VerifyConfig) -> list[Check]:
    k = Poly.gen()
    s = "degree-chromatic"
    out = []
    for name, G, expected in (
        ("Z", path(4), k**4 - 2 * k**2 + k),
        ("Y", star(3), k**4 - 3 * k**2 + 2 * k),
    ):
        got = ch.degree_chromatic(G, 2)
        ok = got == expected
        out.append(Check(s, f"P_2({name}) == {expected}", ok, None if ok else format_graph(G), str(got)))
    for n in range(3, 8):
        for m in range(2, n):
            out.append(_check_all(s, f"trees n={n} m={m}: [k^(n-m)] == -sum C(d,m)", trees(n),
                                  lambda T, m=m: _leading_correction_ok(T, m)))
    # at m = 1 the sum of degrees is 2(n-1) while the chromatic coefficient is -(n-1)
    out.append(_check_all(s, "trees m=1: [k^(n-1)] == -(n-1)", [T for n in range(2, 8) for T in trees(n)],
                          lambda T: ch.degree_chromatic(T, 1).coeff(T.n - 1) == -(T.n - 1)))
    out.append(_check_all(s, "m=1 is the chromatic polynomial", corpus(4),
                          lambda G: ch.degree_chromatic(G, 1) == ch.poly_in_k(ch.zeta(), G)))
    return out


def _tutte_char_graphs(cfg: VerifyConfig) -> list[Multigraph]:
    return corpus(cfg.corpus_n_max) + [complete(6), cycle(6), disjoint_union(star(3), cycle(3))]


def _tutte_char_graph_checks(G: Multigraph, cfg: VerifyConfig) -> list[Check]:
    s = "tutte-char"
    g = format_graph(G)
    out = []
    bad = next(tutte_char_failures(G, cfg.x_grid, cfg.y_grid, cfg.k_grid), None)
    out.append(Check(s, "rho^k == k^c (x-1)^rk T((k+x-1)/(x-1), y)", bad is None,
                     None if bad is None else g, "" if bad is None else f"(x,y,k)={bad[:3]}"))
    ok = two_formula_check(G, cfg.y_grid, cfg.k_grid)
    out.append(Check(s, "tau_{2,y}^k == k^c T(k+1, y)", ok, None if ok else g))
    ok = zero_formula_check(G, cfg.y_grid, cfg.k_grid)
    out.append(Check(s, "(tilde tau_{0,y})^k == k^c (-1)^rk T(1-k, y)", ok, None if ok else g))
    ok = inverse_corollary_check(G, cfg.y_grid)
    out.append(Check(s, "(tilde tau_{0,y})^-1 == bar tau_{2,y}", ok, None if ok else g))
    return out


def _merge(checks: list[Check]) -> list[Check]:
    """Collapse per-graph checks of the same identity into one check per identity."""
    merged: dict[tuple[str, str], Check] = {}
    counts: dict[tuple[str, str], int] = {}
    for c in checks:
        key = (c.suite, c.identity)
        counts[key] = counts.get(key, 0) + 1
        if key not in merged or (merged[key].passed and not c.passed):
            merged[key] = c
    out = []
    for key, c in sorted(merged.items()):
        if c.passed:
            c = Check(c.suite, c.identity, True, detail=f"{counts[key]} graphs")
        out.append(c)
    return out


def _tutte_char_worker(args) -> list[Check]:
    G, cfg = args
    return _tutte_char_graph_checks(G, cfg)


def suite_tutte_char(cfg: VerifyConfig) -> list[Check]:
    graphs = _tutte_char_graphs(cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            parts = list(pool.map(_tutte_char_worker, [(G, cfg) for G in graphs]))
    else:
        parts = [_tutte_char_graph_checks(G, cfg) for G in graphs]
    return _merge([c for part in parts for c in part])


def _recipe_instances():
    loops = [G for G in designated_multigraphs() if G.has_loop()]
    dc = [complete(3), cycle(4), Multigraph(3, ((0, 1), (0, 1), (1, 2), (0, 2))), complete(4)]
    bridges = [path(4), star(3), Multigraph(4, ((0, 1), (1, 2), (2, 0), (2, 3)))]
    return loops, dc, bridges


def suite_recipe(cfg: VerifyConfig) -> list[Check]:
    s = "recipe"
    pts = recipe_points(20)
    out = []
    for n in range(0, 5):
        ok = recipe_edgeless_check(n, pts)
        out.append(Check(s, f"P(E_{n}) == k^{n}", ok, None if ok else f"E{n}"))
    loops, dc, bridges = _recipe_instances()
    for G in loops:
        i = next(i for i, (u, v) in enumerate(G.edges) if u == v)
        ok = recipe_loop_check(G, i, pts)
        out.append(Check(s, "loop: P(G) == y P(G - l)", ok, None if ok else format_graph(G), format_graph(G)))
    for G in dc:
        ok = recipe_deletion_contraction_check(G, 0, pts)
        out.append(Check(s, "P(G) == P(G-e) + (x-1) P(G/e)", ok, None if ok else format_graph(G), format_graph(G)))
    for G in bridges:
        i = next(i for i in range(G.e) if components(delete_edges(G, [i])) > components(G))
        ok = recipe_cut_edge_check(G, i, pts)
        out.append(Check(s, "cut edge: P(G) == (k+x-1)/k P(G-e)", ok, None if ok else format_graph(G), format_graph(G)))
    recover = [complete(3), cycle(4), star(3), Multigraph(2, ((0, 1), (0, 1)))]
    out.append(_check_all(s, "T(x,y) recovered from P_{2,y}, P_{0,y} and P_{(k+x-1)/(x-1),y}", recover,
                          lambda G: tutte_from_P(G, (-1, 0, 3, Fraction(1, 2)), (-1, 0, 2))))
    return out


def suite_t32(cfg: VerifyConfig) -> list[Check]:
    def ok(G):
        a, b = t32_identity(G)
        return a == b

    return [_check_all("t32", "T(3,2) == sum_U 2^(e(U)+e(U^c)-1)", connected_corpus(cfg.corpus_n_max), ok)]


def suite_complete(cfg: VerifyConfig) -> list[Check]:
    s = "complete"
    out = []
    bad = [(n, k) for n in range(1, 8) for k in range(1, 6)
           if tutte(complete(n))(k + 1, 0) != Fraction(factorial(n + k - 1), factorial(k))]
    out.append(Check(s, "T_{K_n}(k+1, 0) == (n+k-1)!/k!", not bad,
                     None if not bad else f"K{bad[0][0]}", "" if not bad else f"k={bad[0][1]}"))
    bad = [(n, k) for n in range(1, 8) for k in range(1, 5)
           if tutte(complete(n))(k + 1, 2) != kn_multinomial_sum(n, k, lambda a: Fraction(2) ** comb(a, 2))]
    out.append(Check(s, "T_{K_n}(k+1, 2) == multinomial sum of 2^C(a,2)", not bad,
                     None if not bad else f"K{bad[0][0]}", "" if not bad else f"k={bad[0][1]}"))
    bad = [(n, k, y) for n in range(1, 7) for k in range(1, 5) for y in (-1, 0, 2)
           if not tau_kn_power_check(n, k, 2, y)]
    out.append(Check(s, "x=2: T_{K_n}(k+1, y) == tau_{2,y}^k(K_n)/k", not bad,
                     None if not bad else f"K{bad[0][0]}"))
    bad = [(n, k, x) for n in range(1, 6) for k in range(1, 4) for x in (-1, 3, Fraction(1, 2))
           if not tau_kn_power_corrected(n, k, x, 2)]
    out.append(Check(s, "K_n expansion with empty blocks of rank 0", not bad,
                     None if not bad else f"K{bad[0][0]}"))
    return out


def suite_rho1(cfg: VerifyConfig) -> list[Check]:
    graphs = _full_corpus(cfg)

    def pred(G):
        return limit_x1_check(G, (-1, 0, 2), range(-3, 6))

    return [
        _check_all("rho1", "rho_{1,y}^k(G) == k^n, loopless", [G for G in graphs if not G.has_loop()], pred),
        _check_all("rho1", "rho_{1,y}^k(G) == k^n y^loops", [G for G in graphs if G.has_loop()], pred),
    ]


def suite_qsym(cfg: VerifyConfig) -> list[Check]:
    s = "qsym"
    graphs = corpus(cfg.corpus_n_max)
    out = []
    for name, zeta in (("zeta", ch.zeta()), ("xi_2", ch.xi(2)), ("tau_{2,0}", ch.tau(2, 0))):
        out.append(_check_all(s, f"Pi(Psi(G, {name})) == poly_in_k", graphs,
                              lambda G, z=zeta: pi(psi(G, z)) == ch.poly_in_k(z, G)))
    bad = None
    for w in range(0, 7):
        for wa in range(w + 1):
            for a, b in product(compositions(wa), compositions(w - wa)):
                if pi(m_product(a, b)) != pi(QSymElement.M(a)) * pi(QSymElement.M(b)):
                    bad = (a, b)
    out.append(Check(s, "Pi(M_a M_b) == Pi(M_a) Pi(M_b), weight <= 6", bad is None,
                     None if bad is None else str(bad)))
    grid = range(-3, 5)
    ok = all(vandermonde_check(l, grid, grid) for l in range(7))
    out.append(Check(s, "sum_j C(x,j) C(y,l-j) == C(x+y,l), l <= 6", ok))
    bad = [a for n in range(6) for a in compositions(n)
           if zeta_q(QSymElement.M(a)) != pi(QSymElement.M(a))(1)]
    out.append(Check(s, "zeta_Q == eps_1 o Pi", not bad, None if not bad else str(bad[0])))
    return out


def suite_reciprocity(cfg: VerifyConfig) -> list[Check]:
    s = "reciprocity"
    bad = None
    for n, m in product(range(8), repeat=2):
        lhs, rhs = reciprocity_check(n, m)
        if not lhs == rhs == reciprocity_closed_form(n, m):
            bad = (n, m)
            break
    out = [Check(s, "(zeta^n * xi_1)(K_m) == (zeta^m * xi_1)(K_n)", bad is None,
                 None if bad is None else f"n,m={bad}")]
    bad = next(((n, m) for n, m in product(range(8), repeat=2) if not signed_reciprocity_check(n, m)), None)
    out.append(Check(s, "(zeta^n * xi_-1)(K_m) == (-1)^(n+m) (zeta^m * xi_-1)(K_n)", bad is None,
                     None if bad is None else f"n,m={bad}"))
    return out


def suite_derangements(cfg: VerifyConfig) -> list[Check]:
    s = "derangements"
    out = []
    for n in range(9):
        K = complete(n)
        ok = zeta_power_xi(-1, 1, K) == (-1) ** n * derangements(n)
        out.append(Check(s, f"(zeta^-1 * xi_1)(K_{n}) == (-1)^n D_n", ok, None if ok else f"K{n}"))
        ok = zeta_power_xi(-1, -1, K) == (-1) ** n * arrangements(n)
        out.append(Check(s, f"(zeta^-1 * xi_-1)(K_{n}) == (-1)^n A_n", ok, None if ok else f"K{n}"))
    return out


def suite_egf(cfg: VerifyConfig) -> list[Check]:
    out = []
    for c, k in product((-1, 1, 2), range(-2, 4)):
        target = egf_series(c, k, 8).egf_values()
        bad = next((n for n in range(9) if zeta_power_xi(k, c, complete(n)) != target[n]), None)
        out.append(Check("egf", f"n![x^n] e^({c}x)(1+x)^{k} == (zeta^{k} * xi_{c})(K_n)", bad is None,
                         None if bad is None else f"K{bad}"))
    return out


def suite_cocliques(cfg: VerifyConfig) -> list[Check]:
    out = []
    for c in (-1, 1, 2):
        conv = ch.convolve(ch.zeta(), ch.xi(c))
        out.append(_check_all("cocliques", f"(zeta * xi_{c})(G) == sum_Q {c}^(n-|Q|)",
                              corpus(cfg.corpus_n_max), lambda G, c=c, f=conv: f(G) == coclique_sum(G, c)))
    return out


def suite_engines(cfg: VerifyConfig) -> list[Check]:
    s = "engines"
    graphs = _full_corpus(cfg) + random_multigraphs(cfg.random_engines, 5, 10, cfg.seed + 1)
    return [
        _check_all(s, "R from T == subset-expanded R", graphs,
                   lambda G: rank_nullity_from_tutte(G) == rank_nullity_poly(G)),
        _check_all(s, "T from R == deletion-contraction T", graphs,
                   lambda G: swap_tutte_rank_nullity(rank_nullity_poly(G), rank(G)) == tutte(G)),
        _check_all(s, "T(1,1) == spanning-forest brute count", graphs,
                   lambda G: tutte(G)(1, 1) == count_spanning_trees_bruteforce(G)),
        _check_all(s, "T(2,0) == acyclic-orientation brute count", [G for G in graphs if not G.has_loop()],
                   lambda G: tutte(G)(2, 0) == len(acyclic_orientations_bruteforce(G))),
    ]


def tilde_witness() -> tuple[Multigraph, str, str, Fraction, Fraction]:
    """A graph and two characters on which ``tilde`` fails to be multiplicative for convolution."""
    pairs = (("zeta", ch.zeta), ("alpha", ch.alpha), ("xi:2", lambda: ch.xi(2)))
    for G in corpus(4):
        for (na, fa), (nb, fb) in product(pairs, repeat=2):
            a, b = fa(), fb()
            lhs = ch.tilde(ch.convolve(a, b))(G)
            rhs = ch.convolve(ch.tilde(a), ch.tilde(b))(G)
            if lhs != rhs:
                return G, na, nb, lhs, rhs
    raise AssertionError("no witness found")


def suite_groups(cfg: VerifyConfig) -> list[Check]:
    s = "groups"
    graphs = corpus(4)
    z, a, x2 = ch.zeta(), ch.alpha(), ch.xi(2)
    out = [
        _check_all(s, "(phi*psi)*chi == phi*(psi*chi)", graphs,
                   lambda G: ch.convolve(ch.convolve(z, a), x2)(G) == ch.convolve(z, ch.convolve(a, x2))(G)),
        _check_all(s, "phi*psi == psi*phi", graphs, lambda G: ch.convolve(z, a)(G) == ch.convolve(a, z)(G)),
        _check_all(s, "phi*phi^-1 == eps", graphs, lambda G: ch.convolve(a, ch.power(a, -1))(G) == ch.eps()(G)),
        _check_all(s, "bar(phi*psi) == bar phi * bar psi", graphs,
                   lambda G: ch.bar(ch.convolve(z, a))(G) == ch.convolve(ch.bar(z), ch.bar(a))(G)),
    ]
    G, na, nb, lhs, rhs = tilde_witness()
    out.append(Check(s, "tilde is not a convolution automorphism (witness)", True, None,
                     f"{format_graph(G)}; phi={na}; psi={nb}; {lhs} != {rhs}"))
    omegas = [("edgeless", lambda G: G.e == 0), ("acyclic", ch.is_acyclic)]
    for H in (complete(2), complete(3), path(3), star(3)):
        omegas.append((f"{format_graph(H)}-free", lambda G, H=H: not ch.contains_subgraph(G, H)))
    for name, member in omegas:
        inv = ch.power(ch.psi_omega(name, member), -1)
        out.append(_check_all(s, f"inverse_via_flats == antipode inverse [{name}]", corpus(cfg.corpus_n_max),
                              lambda G, m=member, i=inv: ch.inverse_via_flats(m, G) == i(G)))
    for c, d in ((-2, 3), (Fraction(1, 2), -1), (1, 1)):
        out.append(_check_all(s, f"xi_{c} * xi_{d} == xi_{c + d}", corpus(cfg.corpus_n_max),
                              lambda G, c=c, d=d: ch.convolve(ch.xi(c), ch.xi(d))(G) == ch.xi(Fraction(c) + d)(G)))
    return out


def clear_caches() -> None:
    """Drop every process-level memo (Tutte, antipode, canonical keys, induced subgraphs)."""
    from . import hopf, multigraph, tutte as tutte_mod

    tutte_mod.clear_cache()
    for fn in (hopf._key_product, hopf.antipode_terms, hopf._antipode_flats_cached,
               hopf._antipode_recursive_cached, hopf._antipode_of_key,
               multigraph._induced, multigraph._canonical_cached):
        fn.cache_clear()


SUITES: dict[str, Callable[[VerifyConfig], list[Check]]] = {
    "antipode": suite_antipode,
    "stanley": suite_stanley,
    "a009775": suite_a009775,
    "cycles": suite_cycles,
    "degree-chromatic": suite_degree_chromatic,
    "tutte-char": suite_tutte_char,
    "recipe": suite_recipe,
    "t32": suite_t32,
    "complete": suite_complete,
    "rho1": suite_rho1,
    "qsym": suite_qsym,
    "reciprocity": suite_reciprocity,
    "derangements": suite_derangements,
    "egf": suite_egf,
    "cocliques": suite_cocliques,
    "engines": suite_engines,
    "groups": suite_groups,
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> Report:
    cfg = cfg or VerifyConfig()
    if name == "all":
        names = sorted(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}, all")
    checks: list[Check] = []
    for n in names:
        checks.extend(SUITES[n](cfg))
    return Report(sorted(checks, key=Check.sort_key))
