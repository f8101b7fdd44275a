"""Corpus-driven cross-validation of every claim the package computes.

Each check ties one documented invariant to executable form: it receives a
per-graph context (lazily cached intermediate results), decides whether it
applies, and reports mismatches as (expected, got) pairs. The runner
streams a corpus, aggregates pass/fail/skip counts per check, and collects
failing graphs as graph6 one-liners so every red result reproduces from a
single line.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from . import _kernels
from .corpus import CorpusSpec, iter_corpus
from .graphs import (
    Graph,
    component_masks,
    induced_subgraph,
    is_connected,
    is_two_edge_connected,
    is_unicyclic,
    line_graph,
    to_graph6,
)
from .limits import INTERP_MAX_N, MSTAT_ORACLE_MAX_N, SACHS_MAX_N
from .matching import (
    gallai_edmonds,
    is_factor_critical,
    m_statistic,
    m_statistic_oracle,
    maximum_matching,
)
from .nullity import (
    per_nullity_structural,
    unicyclic_nullity,
    unicyclic_zero_check,
    zero_nullity_characterization,
)
from .permanental import (
    max_sachs_subgraph,
    per_nullity_oracle,
    perm_polynomial_interpolation,
    perm_polynomial_sachs,
)


class _Ctx:
    """Per-graph cache shared by all checks."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.masks = g.masks
        self.full = (1 << g.n) - 1

    @cached_property
    def graph6(self) -> str:
        return to_graph6(self.g)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def nu(self) -> int:
        return _kernels.matching_size(self.masks, self.n)

    @cached_property
    def dec(self):
        return gallai_edmonds(self.g)

    @cached_property
    def report(self):
        return per_nullity_structural(self.g)

    @cached_property
    def eta_oracle(self) -> int | None:
        if self.n > SACHS_MAX_N:
            return None
        return per_nullity_oracle(self.g)

    @cached_property
    def poly_sachs(self):
        return perm_polynomial_sachs(self.g)


Failure = tuple[str, str, str]  # check name, expected, got
Check = Callable[[_Ctx], "list[Failure] | None"]


def _fail(check: str, expected: object, got: object) -> Failure:
    return check, str(expected), str(got)


def check_oracle_equivalence(ctx: _Ctx) -> list[Failure] | None:
    """Structural nullity equals the polynomial oracle's."""
    if ctx.eta_oracle is None:
        return None
    s = ctx.report.eta_structural
    if s != ctx.eta_oracle:
        return [_fail("oracle_equivalence", ctx.eta_oracle, s)]
    return []


def check_sachs_vs_interpolation(ctx: _Ctx) -> list[Failure] | None:
    """The two polynomial routes agree coefficient for coefficient."""
    if ctx.n > INTERP_MAX_N:
        return None
    a = perm_polynomial_interpolation(ctx.g).coeffs
    b = ctx.poly_sachs.coeffs
    if a != b:
        return [_fail("sachs_vs_interpolation", list(b), list(a))]
    return []


def check_ge_soundness(ctx: _Ctx) -> list[Failure] | None:
    """The four structural clauses of the exposure decomposition."""
    out: list[Failure] = []
    dec = ctx.dec
    masks, n = ctx.masks, ctx.n
    comp_ms = [vs.mask for vs in dec.d_components]
    for cm in comp_ms:
        cn = cm.bit_count()
        if cn % 2 == 0:
            out.append(_fail("ge_soundness", "odd component", cn))
            continue
        want = (cn - 1) // 2
        for v in range(n):
            if (cm >> v) & 1:
                if _kernels.matching_size(masks, n, cm ^ (1 << v)) != want:
                    out.append(
                        _fail("ge_soundness", "factor-critical component", v)
                    )
                    break
    c_mask = dec.c.mask
    if 2 * _kernels.matching_size(masks, n, c_mask) != c_mask.bit_count():
        out.append(_fail("ge_soundness", "perfectly matchable C", "defect"))
    mate = maximum_matching(ctx.g).mate
    for cm in comp_ms:
        # covered-within-component vertex count; near-perfect leaves one out
        inside = sum(
            1 for v in range(n)
            if (cm >> v) & 1 and mate[v] >= 0 and (cm >> mate[v]) & 1
        )
        if inside != cm.bit_count() - 1:
            out.append(_fail("ge_soundness", "near-perfect inside component", inside))
    for v in dec.c.sorted():
        if mate[v] < 0 or not (c_mask >> mate[v]) & 1:
            out.append(_fail("ge_soundness", "C matched within C", v))
            break
    hit = []
    d_mask = dec.d.mask
    for b in dec.b.sorted():
        if mate[b] < 0 or not (d_mask >> mate[b]) & 1:
            out.append(_fail("ge_soundness", "B matched into D", b))
            continue
        k = next(i for i, cm in enumerate(comp_ms) if (cm >> mate[b]) & 1)
        hit.append(k)
    if len(hit) != len(set(hit)):
        out.append(_fail("ge_soundness", "distinct components per B vertex", hit))
    want_nu = (n - len(comp_ms) + len(dec.b)) // 2
    if ctx.nu != want_nu or (n - len(comp_ms) + len(dec.b)) % 2:
        out.append(_fail("ge_soundness", f"nu == {want_nu}", ctx.nu))
    return out


def check_d_by_enumeration(ctx: _Ctx) -> list[Failure] | None:
    """The exposable set equals the union of exposed vertices over all
    maximum matchings, independently of the vertex-deletion criterion."""
    if ctx.n > MSTAT_ORACLE_MAX_N:
        return None
    _, _, _, _, exposed = _kernels.mstat_scan(ctx.masks, ctx.n, 0, [])
    d = ctx.dec.d.mask
    if exposed != d:
        return [_fail("d_by_enumeration", bin(d), bin(exposed))]
    return []


def check_m_stat_equivalence(ctx: _Ctx) -> list[Failure] | None:
    """Structural coverage statistic equals the enumeration oracle."""
    if not ctx.connected or ctx.n > MSTAT_ORACLE_MAX_N:
        return None
    s = m_statistic(ctx.g, ctx.dec).value
    o = m_statistic_oracle(ctx.g)
    if s != o:
        return [_fail("m_stat_equivalence", o, s)]
    return []


def check_m_stat_positive(ctx: _Ctx) -> list[Failure] | None:
    """No perfect matching plus a large exposable component forces >= 1."""
    if not ctx.connected:
        return None
    if 2 * ctx.nu == ctx.n or not ctx.dec.f:
        return None
    m = m_statistic(ctx.g, ctx.dec).value
    if m < 1:
        return [_fail("m_stat_positive", ">= 1", m)]
    return []


def check_zero_nullity_char(ctx: _Ctx) -> list[Failure] | None:
    """Characterization verdict matches nullity-is-zero by oracle."""
    if not ctx.connected or ctx.n < 2 or ctx.eta_oracle is None:
        return None
    verdict, _ = zero_nullity_characterization(ctx.g)
    if verdict != (ctx.eta_oracle == 0):
        return [_fail("zero_nullity_char", ctx.eta_oracle == 0, verdict)]
    return []


def check_unicyclic_sandwich(ctx: _Ctx) -> list[Failure] | None:
    """One-cycle graphs: deficiency minus one <= nullity <= deficiency."""
    if not is_unicyclic(ctx.g):
        return None
    eta = ctx.report.eta_structural
    lo, hi = ctx.n - 2 * ctx.nu - 1, ctx.n - 2 * ctx.nu
    if not lo <= eta <= hi:
        return [_fail("unicyclic_sandwich", f"in [{lo}, {hi}]", eta)]
    return []


def check_unicyclic_thm(ctx: _Ctx) -> list[Failure] | None:
    """Closed form and zero test agree with the engine and the oracle."""
    if not is_unicyclic(ctx.g):
        return None
    out = []
    un = unicyclic_nullity(ctx.g)
    eta = ctx.report.eta_structural
    if un != eta:
        out.append(_fail("unicyclic_thm", eta, un))
    if ctx.eta_oracle is not None and un != ctx.eta_oracle:
        out.append(_fail("unicyclic_thm", ctx.eta_oracle, un))
    zc = unicyclic_zero_check(ctx.g)
    if zc != (eta == 0):
        out.append(_fail("unicyclic_thm", eta == 0, zc))
    return out


def check_line_graph_nullity(ctx: _Ctx) -> list[Failure] | None:
    """Line graphs of connected graphs have nullity zero or one."""
    if not ctx.connected or ctx.n < 2:
        return None
    lg, _ = line_graph(ctx.g)
    eta = per_nullity_structural(lg).eta_structural
    out = []
    if eta not in (0, 1):
        out.append(_fail("line_graph_nullity", "0 or 1", eta))
    # oracle spot-check only while the line graph stays cheap; dense line
    # graphs blow up subgraph enumeration long before the n = 20 guard
    if lg.n <= 10:
        lo = per_nullity_oracle(lg)
        if lo != eta:
            out.append(_fail("line_graph_nullity", lo, eta))
    return out


def check_line_graph_matching(ctx: _Ctx) -> list[Failure] | None:
    """Edge parity decides line-graph matchability, as predicted."""
    if not ctx.connected or ctx.n < 2:
        return None
    from .nullity import line_graph_matching_check

    m = ctx.g.edge_count()
    rep = line_graph_matching_check(ctx.g)
    out = []
    if rep.lg_perfect != (m % 2 == 0):
        out.append(_fail("line_graph_matching", m % 2 == 0, rep.lg_perfect))
    if m % 2 == 1 and not rep.lg_near_perfect:
        out.append(_fail("line_graph_matching", "near-perfect", False))
    if m % 2 == 1 and m >= 3 and is_two_edge_connected(ctx.g):
        if not rep.lg_factor_critical:
            out.append(_fail("line_graph_matching", "factor-critical", False))
    return out


def check_factor_critical_zero(ctx: _Ctx) -> list[Failure] | None:
    """Factor-critical graphs on >= 3 vertices have nullity zero and a
    spanning maximum witness. K1 is excluded: it satisfies the deletion
    definition vacuously but has nullity 1, having no odd cycle to cover
    its single vertex."""
    if ctx.n < 3 or not ctx.connected or ctx.n % 2 == 0:
        return None
    if not is_factor_critical(ctx.g):
        return None
    out = []
    if ctx.report.eta_structural != 0:
        out.append(_fail("factor_critical_zero", 0, ctx.report.eta_structural))
    if ctx.eta_oracle is not None:
        if ctx.eta_oracle != 0:
            out.append(_fail("factor_critical_zero", 0, ctx.eta_oracle))
        cov = max_sachs_subgraph(ctx.g).order
        if cov != ctx.n:
            out.append(_fail("factor_critical_zero", f"covers {ctx.n}", cov))
    return out


def check_sign_pattern(ctx: _Ctx) -> list[Failure] | None:
    """Monic, zero second coefficient, alternating-or-zero signs."""
    if ctx.n > SACHS_MAX_N:
        return None
    c = ctx.poly_sachs.coeffs
    out = []
    if c[0] != 1:
        out.append(_fail("sign_pattern", 1, c[0]))
    if ctx.n >= 1 and c[1] != 0:
        out.append(_fail("sign_pattern", 0, c[1]))
    for k, v in enumerate(c):
        if (-1) ** k * v < 0:
            out.append(_fail("sign_pattern", f"sign (-1)^{k}", v))
    return out


def check_component_additivity(ctx: _Ctx) -> list[Failure] | None:
    """Polynomial multiplies and nullity adds over components."""
    if ctx.n > INTERP_MAX_N:
        return None
    comps = component_masks(ctx.masks, ctx.full)
    if len(comps) <= 1:
        return None
    prod = [1]
    eta_sum = 0
    for cm in comps:
        sub, _ = induced_subgraph(
            ctx.g, [v for v in range(ctx.n) if (cm >> v) & 1]
        )
        sp = perm_polynomial_sachs(sub)
        eta_sum += sp.nullity()
        prod = _poly_mul(prod, list(sp.coeffs))
    out = []
    if tuple(prod) != ctx.poly_sachs.coeffs:
        out.append(
            _fail("component_additivity", list(ctx.poly_sachs.coeffs), prod)
        )
    if eta_sum != ctx.report.eta_structural:
        out.append(
            _fail("component_additivity", eta_sum, ctx.report.eta_structural)
        )
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def check_max_sachs_consistency(ctx: _Ctx) -> list[Failure] | None:
    """Nullity equals vertex count minus the maximum witness order, and the
    witness really is a disjoint edge/cycle union inside the graph."""
    if ctx.n > SACHS_MAX_N or ctx.eta_oracle is None:
        return None
    s = max_sachs_subgraph(ctx.g)
    out = []
    if ctx.n - s.order != ctx.eta_oracle:
        out.append(
            _fail("max_sachs_consistency", ctx.eta_oracle, ctx.n - s.order)
        )
    seen = 0
    ok = True
    for u, v in s.edges:
        if not ctx.g.has_edge(u, v) or seen & ((1 << u) | (1 << v)):
            ok = False
        seen |= (1 << u) | (1 << v)
    for cyc in s.cycles:
        vs = cyc.vertices
        cyc_mask = 0
        for u in vs:
            cyc_mask |= 1 << u
        if seen & cyc_mask or cyc_mask.bit_count() != len(vs):
            ok = False
        seen |= cyc_mask
        for i, u in enumerate(vs):
            if not ctx.g.has_edge(u, vs[(i + 1) % len(vs)]):
                ok = False
    if not ok or seen != s.covered.mask:
        out.append(_fail("max_sachs_consistency", "valid witness", "invalid"))
    return out


def check_matching_defect_equality(ctx: _Ctx) -> list[Failure] | None:
    """Nullity hits the deficiency exactly when a perfect matching exists
    or no two exposable vertices are adjacent, per component."""
    out = []
    for rep in ctx.report.components:
        cm = rep.vertices.mask
        cn = cm.bit_count()
        nu, d = _nu_d(ctx, cm)
        d_has_edge = any(
            ctx.masks[v] & d & ~((1 << (v + 1)) - 1)
            for v in range(ctx.n)
            if (d >> v) & 1
        )
        lhs = rep.eta == cn - 2 * nu
        rhs = (2 * nu == cn) or not d_has_edge
        if lhs != rhs:
            out.append(_fail("matching_defect_equality", rhs, lhs))
    return out


def _nu_d(ctx: _Ctx, cm: int) -> tuple[int, int]:
    from .matching import _d_mask

    return _d_mask(ctx.masks, ctx.n, cm)


def check_f_empty_equivalence(ctx: _Ctx) -> list[Failure] | None:
    """No order->=3 exposable component iff no edge joins exposable vertices."""
    d = ctx.dec.d.mask
    d_has_edge = any(
        ctx.masks[v] & d & ~((1 << (v + 1)) - 1)
        for v in range(ctx.n)
        if (d >> v) & 1
    )
    f_empty = not ctx.dec.f
    if f_empty != (not d_has_edge):
        return [_fail("f_empty_equivalence", not d_has_edge, f_empty)]
    return []


def check_nullity_upper_bound(ctx: _Ctx) -> list[Failure] | None:
    """0 <= nullity <= n, and <= n - 2 once there is any edge."""
    eta = ctx.report.eta_structural
    if not 0 <= eta <= ctx.n:
        return [_fail("nullity_upper_bound", f"in [0, {ctx.n}]", eta)]
    if ctx.g.edge_count() > 0 and ctx.n >= 2 and eta > ctx.n - 2:
        return [_fail("nullity_upper_bound", f"<= {ctx.n - 2}", eta)]
    return []


CHECKS: dict[str, Check] = {
    "oracle_equivalence": check_oracle_equivalence,
    "sachs_vs_interpolation": check_sachs_vs_interpolation,
    "ge_soundness": check_ge_soundness,
    "d_by_enumeration": check_d_by_enumeration,
    "m_stat_equivalence": check_m_stat_equivalence,
    "m_stat_positive": check_m_stat_positive,
    "zero_nullity_char": check_zero_nullity_char,
    "unicyclic_sandwich": check_unicyclic_sandwich,
    "unicyclic_thm": check_unicyclic_thm,
    "line_graph_nullity": check_line_graph_nullity,
    "line_graph_matching": check_line_graph_matching,
    "factor_critical_zero": check_factor_critical_zero,
    "sign_pattern": check_sign_pattern,
    "component_additivity": check_component_additivity,
    "max_sachs_consistency": check_max_sachs_consistency,
    "matching_defect_equality": check_matching_defect_equality,
    "f_empty_equivalence": check_f_empty_equivalence,
    "nullity_upper_bound": check_nullity_upper_bound,
}

FAILURE_CAP = 100


@dataclass
class CheckStats:
    passed: int = 0
    failed: int = 0
    skipped: int = 0


@dataclass
class VerifyResult:
    corpus: dict
    graphs: int
    checks: dict[str, CheckStats]
    failures: list[tuple[str, str, str, str]]  # graph6, check, expected, got
    truncated: bool

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.checks.values())

    def to_json_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "graphs": self.graphs,
            "checks": {
                name: {
                    "passed": s.passed,
                    "failed": s.failed,
                    "skipped": s.skipped,
                }
                for name, s in sorted(self.checks.items())
            },
            "failures": [
                {"graph6": g6, "check": c, "expected": e, "got": got}
                for g6, c, e, got in self.failures
            ],
            "truncated": self.truncated,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    def to_table(self) -> str:
        lines = []
        width = max((len(n) for n in self.checks), default=5)
        lines.append(f"graphs checked: {self.graphs}")
        for name in sorted(self.checks):
            s = self.checks[name]
            verdict = "FAIL" if s.failed else "ok"
            lines.append(
                f"  {name:<{width}}  pass={s.passed:<8} fail={s.failed:<6} "
                f"skip={s.skipped:<8} {verdict}"
            )
        for g6, check, expected, got in self.failures:
            lines.append(f"  FAIL {check} on {g6}: expected {expected}, got {got}")
        if self.truncated:
            lines.append(f"  (failure list capped at {FAILURE_CAP})")
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)


def _run_checks_on(
    g: Graph, names: Sequence[str]
) -> tuple[dict[str, tuple[int, int, int]], list[tuple[str, str, str, str]]]:
    ctx = _Ctx(g)
    counts: dict[str, tuple[int, int, int]] = {}
    failures: list[tuple[str, str, str, str]] = []
    for name in names:
        res = CHECKS[name](ctx)
        if res is None:
            counts[name] = (0, 0, 1)
        elif res:
            counts[name] = (0, 1, 0)
            for check, expected, got in res:
                failures.append((ctx.graph6, check, expected, got))
        else:
            counts[name] = (1, 0, 0)
    return counts, failures


_worker_names: tuple[str, ...] = ()


def _pool_init(names: tuple[str, ...]) -> None:
    global _worker_names
    _worker_names = names


def _pool_run(payload: tuple[int, tuple[int, ...]]):
    n, masks = payload
    g = Graph._from_masks_trusted(n, masks)
    return _run_checks_on(g, _worker_names)


def thread_budget() -> int:
    """Worker process count: PERNULL_THREADS if set, else serial."""
    raw = os.environ.get("PERNULL_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_verification(
    spec: CorpusSpec,
    checks: Iterable[str],
    *,
    unsafe_override_guards: bool = False,
) -> VerifyResult:
    """Stream the corpus and evaluate the named checks on every graph.

    Serial by default; set PERNULL_THREADS > 1 to fan graphs out over that
    many worker processes (counts are order-independent and failures are
    sorted before reporting, so results do not depend on scheduling).
    """
    names = tuple(sorted(set(checks)))
    if not names:
        raise ValueError("no checks requested")
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
    stats = {name: CheckStats() for name in names}
    failures: list[tuple[str, str, str, str]] = []
    total = 0
    overflow = False
    stream = iter_corpus(spec, unsafe_override_guards=unsafe_override_guards)

    def absorb(counts, fails):
        nonlocal total, overflow
        total += 1
        for name, (p, f, s) in counts.items():
            st = stats[name]
            st.passed += p
            st.failed += f
            st.skipped += s
        for item in fails:
            if len(failures) < 4 * FAILURE_CAP:
                failures.append(item)
            else:
                overflow = True

    workers = thread_budget()
    if workers > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(
            workers, initializer=_pool_init, initargs=(names,)
        ) as pool:
            payloads = ((g.n, g.masks) for g in stream)
            for counts, fails in pool.imap(_pool_run, payloads, chunksize=64):
                absorb(counts, fails)
    else:
        for g in stream:
            absorb(*_run_checks_on(g, names))

    failures.sort()
    truncated = overflow or len(failures) > FAILURE_CAP
    return VerifyResult(
        corpus=spec.describe(),
        graphs=total,
        checks=stats,
        failures=failures[:FAILURE_CAP],
        truncated=truncated,
    )
