"""Acceptance criteria 1-10, one pass/fail line each (printed in the terminal summary)."""

import contextlib
import io
import itertools
import json
import time
from decimal import Decimal

import pytest

import conftest
from pisano_legendre import graphs, survey
from pisano_legendre import labeling as L
from pisano_legendre.cache import ClassificationCache
from pisano_legendre.cli import main
from pisano_legendre.numtheory import (
    classify,
    fib_mod,
    lambda_partition,
    legendre_symbol,
    order_of_apparition,
    pisano_period,
)
from pisano_legendre.reproduce import PUBLISHED_THETA_0, PUBLISHED_ZETA_01

from oracles import squares_mod


def report(n, ok, detail):
    conftest.ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
    assert ok, detail


def best_of(fn, repeat=200):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    assert code == 0, argv
    return buf.getvalue()


# --- 1 ---------------------------------------------------------------------------

def test_criterion_1_legendre_row_p3():
    def run():
        part = lambda_partition(3, (0, 1))
        return part.legendre_row(), classify(3, (0, 1)).k

    row, k = run()
    t = best_of(run)
    ok = row == [0, 1, 1, -1, 0, -1, -1, 1] and k == -2 and t < 1e-3
    report(1, ok, f"row={row}, k={k}, best {t * 1e3:.3f} ms (< 1 ms)")


# --- 2 ---------------------------------------------------------------------------

def test_criterion_2_worked_example():
    g = graphs.cycle(3)
    f = L.VertexLabeling(g, (0, 1, 2))

    def run():
        return L.edge_labels(f, 5, (7, 4)), L.evaluate(f, 5, (7, 4))

    values, s = run()
    t = best_of(run)
    # edges of C3 in order u1u2, u1u3, u2u3
    ok = (g.edges == ((0, 1), (0, 2), (1, 2)) and tuple(values) == (1, 0, 0)
          and (s.e0, s.e1) == (2, 1) and s.cordial and t < 1e-3)
    report(2, ok, f"edge values {tuple(values)}, (e0,e1)=({s.e0},{s.e1}), "
                  f"cordial={s.cordial}, best {t * 1e3:.3f} ms (< 1 ms)")


# --- 3 ---------------------------------------------------------------------------

def test_criterion_3_theta_table():
    t0 = time.perf_counter()
    bad, flagged = [], None
    for pair, published in PUBLISHED_THETA_0.items():
        got = survey.theta_prefix(pair, 0, 10, 300)
        if len(published) == 11:
            flagged = (pair, got)
            if got != list(published[:10]):
                bad.append(pair)
        elif got != list(published):
            bad.append(pair)
    t = time.perf_counter() - t0
    ok = not bad and flagged is not None and flagged[0] == (-3, -7) and t < 30
    report(3, ok, f"10 rows, mismatches {bad}, flagged row {flagged[0]} first ten "
                  f"{flagged[1]}, {t:.2f} s (< 30 s)")


# --- 4 ---------------------------------------------------------------------------

def test_criterion_4_zeta_table(tmp_path):
    cache_path = tmp_path / "pl.jsonl"
    t0 = time.perf_counter()
    cold = {k: survey.zeta((0, 1), k, 20000, cache=ClassificationCache(cache_path))
            for k in (0, 42)}
    t_cold = time.perf_counter() - t0
    cache = ClassificationCache(cache_path)
    t0 = time.perf_counter()
    found = {}
    for k in sorted(PUBLISHED_ZETA_01):
        e = survey.zeta((0, 1), k, 20000, cache=cache)
        found[k] = e.prime if e else None
    t = time.perf_counter() - t0
    wrong = {k: (found[k], p) for k, p in PUBLISHED_ZETA_01.items()
             if k != -2 and found[k] != p}
    seven = classify(7, (0, 1)).k
    discrepancy = found[-2] == 3 and PUBLISHED_ZETA_01[-2] == 7 and seven == -2
    ok = not wrong and discrepancy and cold[42].prime == 14969 and t < 300
    report(4, ok, f"{len(PUBLISHED_ZETA_01) - 1} entries match; k=-2 computed {found[-2]} "
                  f"vs listed 7 (7 is ({seven})-PL, cell discrepant); mismatches {wrong}; "
                  f"{t:.2f} s with cache, {t_cold:.2f} s cold")


# --- 5 ---------------------------------------------------------------------------

def theorem_suite():
    """Every construction the criterion lists, with its expected e0 - e1."""
    cases = []
    for q in (1, 2):
        cases += [(L.label_path(11, (0, 1), q), 0), (L.label_star(11, (0, 1), q), 0),
                  (L.label_wheel(11, (0, 1), q), 0)]
    for g in (graphs.path(2), graphs.path(3), graphs.cycle(3)):
        cases.append((L.label_cycle_product(11, (0, 1), g, "tensor"), 0))
        for op in ("lexicographic", "cartesian", "strong"):
            cases.append((L.label_cycle_product(31, (0, 1), g, op), 0))
    for eps in (-1, 0, 1):
        g = graphs.connected_graph(32, 32 * 15 + eps, seed=100 + eps)
        cases.append((L.label_corona_path(41, (0, 1), g), eps))
        g = graphs.connected_graph(9, 9 + eps, seed=200 + eps)
        cases.append((L.label_corona(11, (0, 1), g, graphs.empty(9)), eps))
        g = graphs.connected_graph(29, 58 + eps, seed=300 + eps)
        cases.append((L.label_corona(31, (0, 1), g, graphs.cycle(29)), eps))
    return cases


def test_criterion_5_constructions():
    t0 = time.perf_counter()
    failures = []
    cases = theorem_suite()
    for c, eps in cases:
        s = L.evaluate(c.labeling, c.p, c.pair)
        if not (s.cordial and s == c.predicted and s.e0 - s.e1 == eps == c.epsilon):
            failures.append((c.theorem, c.p, s, c.predicted, eps))
    t = time.perf_counter() - t0
    ok = not failures and t < 120
    report(5, ok, f"{len(cases)} constructions cordial with (e0,e1) equal to the closed form, "
                  f"failures {failures}, {t:.2f} s (< 2 min)")


# --- 6 ---------------------------------------------------------------------------

def test_criterion_6_join_window():
    t0 = time.perf_counter()
    hs = [graphs.empty(9)] * 9
    candidates = [graphs.empty(9), graphs.complete(9), graphs.path(9), graphs.cycle(9)]
    candidates += [graphs.connected_graph(9, m, seed=m) for m in range(8, 37)]
    messages = []
    accepted = 0
    for g in candidates:
        try:
            L.label_join(11, (0, 1), g, hs)
            accepted += 1
        except L.PreconditionError as exc:
            messages.append(str(exc))
    t = time.perf_counter() - t0
    cites = all("size window [80, 82]" in m and "0..36" in m for m in messages)
    ok = accepted == 0 and cites and t < 1
    report(6, ok, f"{len(candidates)} graphs g of order 9 rejected, message "
                  f"'{messages[0]}', {t * 1e3:.1f} ms (< 1 s)")


# --- 7 ---------------------------------------------------------------------------

def test_criterion_7_properties():
    t0 = time.perf_counter()
    checked = 0
    failures = []

    def expect(cond, what):
        nonlocal checked
        checked += 1
        if not cond:
            failures.append(what)

    pairs = [(0, 1), (2, 1), (7, 4), (-2, 7), (-9, -21)]
    for p in survey.odd_primes_upto(499):
        for pair in pairs:
            part = lambda_partition(p, pair)
            rec = classify(p, pair)
            per = pisano_period(pair, p)
            expect(sum(part.counts) == per == rec.period, ("sum", p, pair))
            expect(rec.counts == part.counts, ("routes", p, pair))
            expect(2 * rec.l_plus == per + rec.k, ("identity", p, pair))
            expect(2 * rec.l_minus == per - rec.k - 2 * rec.l_zero, ("minus", p, pair))
            expect((rec.k - per) % 2 == 0, ("parity", p, pair))
            for m in range(0, 51, 7):
                for n in range(1, 4):
                    expect(fib_mod(m + n * per, pair, p) == fib_mod(m, pair, p),
                           ("periodic", p, pair, m, n))
        rec = classify(p, (0, 1))
        z = order_of_apparition(p)
        expect(rec.k % 2 == 0, ("even", p))
        expect(rec.l_zero == rec.period // z and rec.period % z == 0, ("apparition", p))
        expect(rec.l_zero in (1, 2, 4), ("zeros", p))
        expect((rec.l_zero == 4) == (z % 2 == 1), ("odd z", p))
    for p in survey.odd_primes_upto(99):
        squares = squares_mod(p)
        for a in range(p):
            expect(legendre_symbol(a, p) == (0 if a == 0 else 1 if a in squares else -1),
                   ("qr", a, p))
            for b in range(p):
                expect(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p),
                       ("mult", a, b, p))
    for p in survey.odd_primes_upto(999):
        expect(legendre_symbol(2, p) == (1 if p % 8 in (1, 7) else -1), ("two", p))
    t = time.perf_counter() - t0
    ok = not failures and t < 60
    report(7, ok, f"{checked} property checks, {len(failures)} failures, {t:.2f} s (< 1 min)")


# --- 8 ---------------------------------------------------------------------------

def small_graphs():
    """Family and operation graphs of order <= 7."""
    out = []
    out += [graphs.path(n) for n in range(1, 8)]
    out += [graphs.cycle(n) for n in range(3, 8)]
    out += [graphs.star(n) for n in range(2, 8)]
    out += [graphs.wheel(n) for n in range(4, 8)]
    out += [graphs.complete(n) for n in range(1, 8)]
    out += [graphs.empty(n) for n in range(1, 8)]
    pieces = [graphs.path(1), graphs.path(2), graphs.path(3), graphs.cycle(3), graphs.star(4)]
    for g1, g2 in itertools.product(pieces, repeat=2):
        if g1.order + g2.order <= 7:
            out += [graphs.union([g1, g2]), graphs.join(g1, g2)]
        if g1.order * (1 + g2.order) <= 7:
            out.append(graphs.corona(g1, g2))
        if g1.order * g2.order <= 7:
            out += [make(g1, g2) for make in graphs.PRODUCTS.values()]
    return out


def constructions_for(p, pair):
    """Every construction whose hypotheses hold at (p, pair) for small inputs."""
    small_connected = [graphs.path(n) for n in range(1, 5)] + [graphs.cycle(3), graphs.star(4)]
    attempts = []
    for q in (1, 2):
        attempts += [lambda q=q: L.label_path(p, pair, q), lambda q=q: L.label_star(p, pair, q),
                     lambda q=q: L.label_wheel(p, pair, q)]
    for g in small_connected:
        for op in graphs.PRODUCTS:
            attempts.append(lambda g=g, op=op: L.label_cycle_product(p, pair, g, op))
        attempts.append(lambda g=g: L.label_corona_path(p, pair, g))
    per = classify(p, pair).period
    for g in (graphs.path(per - 1), graphs.empty(per - 1)):
        attempts.append(lambda g=g: L.label_corona(p, pair, g, graphs.empty(per - 1)))
        attempts.append(lambda g=g: L.label_join(p, pair, g, [graphs.empty(per - 1)] * (per - 1)))
    built = []
    for attempt in attempts:
        try:
            built.append(attempt())
        except L.PreconditionError:
            pass
    return built


def test_criterion_8_oracle_cross_check():
    t0 = time.perf_counter()
    instances = applicable = 0
    failures = []
    for p, pair in itertools.product((3, 5, 7), ((0, 1), (7, 4))):
        for c in constructions_for(p, pair):
            if c.labeling.graph.order <= 7:
                applicable += 1
                if L.brute_force_flc_search(c.labeling.graph, p, pair, cap=7) is None:
                    failures.append(("oracle", c.theorem, p, pair))
        for g in small_graphs():
            instances += 1
            s = L.evaluate(L.VertexLabeling(g, tuple(range(g.order))), p, pair)
            if s.e0 + s.e1 != g.size:
                failures.append(("total", g, p, pair))
            found = L.brute_force_flc_search(g, p, pair, cap=7)
            if found is not None:
                s = L.evaluate(found, p, pair)
                if s.e0 + s.e1 != g.size or not s.cordial:
                    failures.append(("found", g, p, pair))
    # no hypothesis holds at p <= 7, so also cross-check where constructions do apply
    extra = 0
    for c in (L.label_path(11, (0, 1)), L.label_star(11, (0, 1))):
        extra += 1
        if L.brute_force_flc_search(c.labeling.graph, 11, (0, 1), cap=11) is None:
            failures.append(("oracle", c.theorem, 11))
    t = time.perf_counter() - t0
    ok = not failures and t < 120
    report(8, ok, f"{instances} graph instances, e0+e1=size on all; {applicable} instances "
                  f"with a theorem applicable at p in {{3,5,7}} (all hypotheses fail there), "
                  f"{extra} supplementary p=11 oracle checks; failures {failures}; {t:.2f} s")


# --- 9 ---------------------------------------------------------------------------

def test_criterion_9_figure_data():
    t0 = time.perf_counter()
    fig2 = json.loads(cli("plotdata", "--figure", "2", "--c", "0.055", "--format", "json",
                          "--no-cache"))
    below = [pt for pt in fig2["points"]
             if not Decimal(pt["prime"]) > Decimal("0.055") * pt["k"] ** 2]
    flags = all(pt["above"] for pt in fig2["points"])
    fig6 = json.loads(cli("plotdata", "--figure", "6", "--format", "json", "--no-cache"))
    non_monotone = []
    for s in fig6["series"]:
        counts = [pt["count"] for pt in s["points"]]
        if any(x > y for x, y in zip(counts, counts[1:])):
            non_monotone.append((s["a"], s["b"]))
    t = time.perf_counter() - t0
    ok = (not below and flags and len(fig6["series"]) == 5 and not non_monotone and t < 300)
    report(9, ok, f"figure 2: {len(fig2['points'])} points, {len(below)} at or below "
                  f"0.055k^2; figure 6: 5 series, non-monotone {non_monotone}; {t:.2f} s")


# --- 10 --------------------------------------------------------------------------

def machine_outputs(scan_flags):
    out = {}
    for pair, _ in PUBLISHED_THETA_0.items():
        out[("theta", pair)] = cli("theta", "--a", str(pair[0]), "--b", str(pair[1]),
                                   "--count", "10", "--bound", "300", "--format", "csv",
                                   *scan_flags)
    out["zeta"] = cli("zeta", "--k-min", "-42", "--k-max", "42", "--bound", "20000",
                      "--format", "csv", *scan_flags)
    out["table2"] = cli("tables", "--which", "2", "--format", "csv", *scan_flags)
    for spec in ("path:2", "path:3", "cycle:3"):
        out[("tensor", spec)] = cli("label", "--theorem", "product", "--op", "tensor",
                                    "--p", "11", "--g", spec, "--format", "json")
        for op in ("lexicographic", "cartesian", "strong"):
            out[(op, spec)] = cli("label", "--theorem", "product", "--op", op, "--p", "31",
                                  "--g", spec, "--format", "json")
    for q in ("1", "2"):
        for t in ("path", "star", "wheel"):
            out[(t, q)] = cli("label", "--theorem", t, "--p", "11", "--q", q, "--format", "json")
    for eps in (-1, 0, 1):
        out[("cp", eps)] = cli("label", "--theorem", "corona-path", "--p", "41",
                               "--g", f"random:32:{480 + eps}:{eps + 5}", "--format", "json")
        out[("c11", eps)] = cli("label", "--theorem", "corona", "--p", "11",
                                "--g", f"random:9:{9 + eps}:{eps + 5}", "--h", "empty:9",
                                "--format", "json")
        out[("c31", eps)] = cli("label", "--theorem", "corona", "--p", "31",
                                "--g", f"random:29:{58 + eps}:{eps + 5}", "--h", "cycle:29",
                                "--format", "json")
    for fmt in ("csv", "json"):
        out[("fig2", fmt)] = cli("plotdata", "--figure", "2", "--c", "0.055", "--format", fmt,
                                 *scan_flags)
        out[("fig6", fmt)] = cli("plotdata", "--figure", "6", "--format", fmt, *scan_flags)
    return out


def test_criterion_10_determinism(tmp_path):
    t0 = time.perf_counter()
    cache = str(tmp_path / "det.jsonl")
    runs = {
        "cache, 1 worker": machine_outputs(["--cache", cache, "--workers", "1"]),
        "warm cache, 1 worker": machine_outputs(["--cache", cache, "--workers", "1"]),
        "no cache, 1 worker": machine_outputs(["--no-cache", "--workers", "1"]),
        "no cache, 3 workers": machine_outputs(["--no-cache", "--workers", "3"]),
    }
    reference = runs["no cache, 1 worker"]
    differing = [(name, key) for name, outs in runs.items()
                 for key in reference if outs[key] != reference[key]]
    t = time.perf_counter() - t0
    ok = not differing
    report(10, ok, f"{len(reference)} outputs x {len(runs)} configurations byte-identical, "
                   f"differences {differing}, {t:.2f} s")


@pytest.fixture(autouse=True, scope="module")
def _no_env_cache():
    mp = pytest.MonkeyPatch()
    mp.delenv("PISANO_LEGENDRE_CACHE", raising=False)
    yield
    mp.undo()
