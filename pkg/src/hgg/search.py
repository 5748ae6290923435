"""Bounded search for unipotent root-group elements among short words.

Words are built level by level from the atoms a, b, c and q1 = b a^-1 and
their inverses.  Level d adds, for words u, v of level d - 1, the product
u v, the commutator comm(u, v) and the powers u^k with 2 <= |k| <= d + 1
(k = -1 as inv(u)).  Every level is put in the canonical order (shorter
text first, then lexicographic) before anything is evaluated, and the node
budget truncates that ordered list, so the outcome does not depend on how
the evaluation is spread over worker processes.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import cyclotomic as cy
from .certify import Certificate, VerificationReport, verify_certificate
from .cyclotomic import ParameterVector
from .hyperbolic import HyperbolicBasis, adapted_basis, conjugate_generators
from .invariant_form import form_via_orbit
from .exactmat import Convention, RationalMatrix, commutator, companion, is_unipotent, power
from .rootgroups import classify_unipotent, in_highest_root_group, in_second_highest_root_group
from .words import parse_program

Q1_LET = "let q1 = b inv(a);"


@dataclass(frozen=True)
class Budget:
    max_depth: int = 2
    max_entry_bits: int = 512
    max_nodes: int = 20000


@dataclass(frozen=True)
class Hit:
    word: str
    value: Fraction

    def program_text(self) -> str:
        return f"{Q1_LET} return {self.word}"


@dataclass
class SearchResult:
    highest: Hit | None
    second: Hit | None
    nodes: int
    depth_reached: int
    certificate: Certificate | None = None

    @property
    def found(self) -> bool:
        return self.certificate is not None


def _order(text: str) -> tuple[int, str]:
    return (len(text), text)


def _wrap(text: str) -> str:
    # operands of juxtaposition and ^ need parentheses unless they are one token
    if text.replace("_", "").isalnum() or (text.endswith(")") and _balanced_call(text)):
        return text
    return f"({text})"


def _balanced_call(text: str) -> bool:
    """True for a single call such as inv(...) or comm(...)."""
    head = text.split("(", 1)[0]
    if head not in ("inv", "comm"):
        return False
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i < len(text) - 1 and i >= len(head):
            return False
    return True


def _eval_task(task):
    """Evaluate one candidate; returns (text, matrix) or (text, None) when pruned."""
    text, op, left, right, k, convention, bits = task
    if op == "mul":
        m = left @ right
    elif op == "comm":
        m = commutator(left, right, convention)
    else:
        m = power(left, k)
    if m.max_entry_bits() > bits:
        return text, None
    return text, m


def _evaluate(tasks, jobs: int):
    if jobs > 1 and len(tasks) > 64:
        size = max(1, len(tasks) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_eval_task, tasks, chunksize=size))
    return [_eval_task(t) for t in tasks]


def _atoms(a, b, c) -> dict[str, RationalMatrix]:
    q1 = b @ a.inverse()
    base = {"a": a, "b": b, "c": c, "q1": q1}
    out = dict(base)
    for name, m in base.items():
        out[f"inv({name})"] = m.inverse()
    return out


def enumerate_words(a: RationalMatrix, b: RationalMatrix, c: RationalMatrix, budget: Budget,
                    convention: Convention = Convention.FORWARD, jobs: int = 1):
    """Yield (level, text, matrix) for every distinct matrix reached, in canonical order.

    Distinct words with equal matrices are reported once, under the smallest
    text.  Stops when max_nodes evaluations have been spent.
    """
    seen: dict[tuple, str] = {}
    nodes = 0
    level_words: list[tuple[str, RationalMatrix]] = []
    for text, m in sorted(_atoms(a, b, c).items(), key=lambda kv: _order(kv[0])):
        if nodes >= budget.max_nodes:
            return
        nodes += 1
        key = m.canonical_key()
        if key in seen or m.max_entry_bits() > budget.max_entry_bits:
            continue
        seen[key] = text
        level_words.append((text, m))
        yield 1, text, m
    for depth in range(2, budget.max_depth + 1):
        cands = []
        for tu, mu in level_words:
            for tv, mv in level_words:
                cands.append((f"{_wrap(tu)} {_wrap(tv)}", "mul", mu, mv, 0))
                if tu != tv:
                    cands.append((f"comm({tu}, {tv})", "comm", mu, mv, 0))
            if not tu.startswith("inv("):
                cands.append((f"inv({tu})", "pow", mu, None, -1))
            for k in range(2, depth + 2):
                cands.append((f"{_wrap(tu)}^{k}", "pow", mu, None, k))
                cands.append((f"{_wrap(tu)}^-{k}", "pow", mu, None, -k))
        cands.sort(key=lambda t: _order(t[0]))
        room = budget.max_nodes - nodes
        if room <= 0:
            return
        cands = cands[:room]
        nodes += len(cands)
        tasks = [(t, op, l, r, k, convention, budget.max_entry_bits) for t, op, l, r, k in cands]
        fresh = []
        for text, m in _evaluate(tasks, jobs):
            if m is None:
                continue
            key = m.canonical_key()
            if key in seen:
                continue
            seen[key] = text
            fresh.append((text, m))
            yield depth, text, m
        level_words = level_words + fresh


def search_certificates(a: RationalMatrix, b: RationalMatrix, c: RationalMatrix, lambda1,
                        lambda2, budget: Budget = Budget(),
                        convention: Convention = Convention.FORWARD, jobs: int = 1,
                        alpha: ParameterVector | None = None,
                        beta: ParameterVector | None = None,
                        basis_matrix: RationalMatrix | None = None,
                        label: str = "search") -> SearchResult:
    """Smallest words landing in U_{t1^2} and U_{t1 t2}.

    The search stops at the end of the first level where both targets have
    a hit.  A Certificate is built only when both are found and alpha, beta
    are given to anchor it.
    """
    best: dict[str, Hit] = {}
    nodes = 0
    depth_reached = 0
    if budget.max_nodes <= 0:
        return SearchResult(None, None, 0, 0)
    for depth, text, m in enumerate_words(a, b, c, budget, convention, jobs):
        if depth > depth_reached and len(best) == 2:
            break
        depth_reached = depth
        nodes += 1
        if not is_unipotent(m):
            continue
        y = in_highest_root_group(m)
        if y is not None and ("q1" not in best or _order(text) < _order(best["q1"].word)):
            best["q1"] = Hit(text, y)
        x = in_second_highest_root_group(m, lambda1, lambda2)
        if x is not None and ("q2" not in best or _order(text) < _order(best["q2"].word)):
            best["q2"] = Hit(text, x)
    res = SearchResult(best.get("q1"), best.get("q2"), nodes, depth_reached)
    if res.highest and res.second and alpha is not None and beta is not None:
        prog = parse_program(f"{Q1_LET} return {res.highest.word}, {res.second.word}")
        res.certificate = Certificate(label, alpha, beta, convention, prog, basis_matrix)
    return res


def unipotent_census(a: RationalMatrix, b: RationalMatrix, c: RationalMatrix, depth: int,
                     budget: Budget | None = None,
                     convention: Convention = Convention.FORWARD) -> list[tuple[str, str]]:
    """(word, classification) for every distinct unipotent matrix up to depth."""
    budget = budget or Budget(max_depth=depth)
    out = []
    for _, text, m in enumerate_words(a, b, c, Budget(depth, budget.max_entry_bits,
                                                      budget.max_nodes), convention):
        if is_unipotent(m):
            out.append((text, classify_unipotent(m)))
    return out


def adapted_generators(alpha: ParameterVector, beta: ParameterVector
                       ) -> tuple[RationalMatrix, RationalMatrix, RationalMatrix, HyperbolicBasis]:
    """a, b, c conjugated into the transvection-adapted hyperbolic basis."""
    f, _ = cy.params_to_poly(alpha)
    g, _ = cy.params_to_poly(beta)
    big_a, big_b = companion(f), companion(g)
    omega = form_via_orbit(big_a, big_b)
    hb = adapted_basis(big_a, big_b, omega)
    a, b, c = conjugate_generators(big_a, big_b, hb.X, omega)
    return a, b, c, hb


def verify_hit(hit: Hit, alpha: ParameterVector, beta: ParameterVector,
               basis_matrix: RationalMatrix, target: str = "q1",
               convention: Convention = Convention.FORWARD) -> bool:
    """Re-run a single search hit through the certifier.

    The hit is placed in the slot it claims (q1 or q2); the other slot is
    filled with the identity, so only the matching membership stage can
    pass and the check is that it passes with the same parameter value.
    """
    if target == "q1":
        ret = f"{hit.word}, ()"
    else:
        ret = f"(), {hit.word}"
    prog = parse_program(f"{Q1_LET} return {ret}")
    rep: VerificationReport = verify_certificate(
        Certificate("hit", alpha, beta, convention, prog, basis_matrix))
    if target == "q1":
        return rep.stages.get("q1-membership", False) and rep.y == hit.value
    # the identity in the q1 slot stops the pipeline at q1-membership, after
    # q2 has been evaluated in the certificate's own basis
    return (rep.q2 is not None and rep.lambdas is not None
            and in_second_highest_root_group(rep.q2, *rep.lambdas[:2]) == hit.value)

