"""Lower-bound hosts K_{a,b} + planted high-girth graph, with TP_4-freeness certificates.

Reduction used by the certificate.  Let the host be K_{a,b} with a graph P
planted inside the a-part.  The b-part spans no edges, so in any copy of
TP_4 the vertices landing in the b-part form an independent set I of TP_4,
and the remaining vertices span TP_4 - I inside the a-part, i.e. inside P
(padded with the a-part's unused isolated vertices).  Conversely, given an
independent set I with |I| <= b, |TP_4 - I| <= a and an embedding of
TP_4 - I into padded P, sending I anywhere into the b-part completes a copy
of TP_4, because every a-part/b-part pair is an edge.  So TP_4 embeds in the
host iff some admissible I has TP_4 - I contained in padded P.

Every remainder TP_4 - I contains a cycle (checked, not assumed), so if the
girth of P exceeds the largest remainder girth g_max, no remainder fits.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceeded, ConstructionInvalid
from .formats import decode_graph6, encode_graph6
from .generators import greedy_high_girth, high_girth_bipartite, triangular_pyramid
from .graph import INFINITE, MAX_VERTICES, Graph, girth, induced_subgraph, iter_bits
from .subiso import DEFAULT_BUDGET, Embedding, find_embedding, independent_set_masks, verify_embedding
from .turan import h

GIRTH_GAP = "GIRTH_GAP"
EXHAUSTIVE_PATTERNS = "EXHAUSTIVE_PATTERNS"
CERTIFIED = "CERTIFIED"
REFUTED = "REFUTED"
UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class ReducedPatterns:
    """Girth of TP_4 - I for every independent set I of TP_4 (keyed by bitmask)."""

    girths: dict
    g_max: float
    acyclic: tuple[int, ...]

    def remainder(self, mask: int) -> tuple[Graph, tuple[int, ...]]:
        tp4 = triangular_pyramid(4).graph
        return induced_subgraph(tp4, (v for v in range(tp4.n) if not mask >> v & 1))


def _is_forest(g: Graph) -> bool:
    return girth(g) == INFINITE


@lru_cache(maxsize=1)
def reduced_pattern_girths() -> ReducedPatterns:
    tp4 = triangular_pyramid(4).graph
    girths = {}
    acyclic = []
    for mask in independent_set_masks(tp4):
        rest, _ = induced_subgraph(tp4, (v for v in range(tp4.n) if not mask >> v & 1))
        gi = girth(rest)
        girths[mask] = gi
        if gi == INFINITE:
            acyclic.append(mask)
    cyclic = [g for m, g in girths.items() if g != INFINITE]
    g_max = INFINITE if acyclic else max(cyclic)
    return ReducedPatterns(girths, g_max, tuple(acyclic))


def assemble_host(a: int, b: int, planted: Graph) -> Graph:
    """K_{a,b} (parts 0..a-1 and a..a+b-1) with ``planted`` on vertices 0..planted.n-1."""
    if planted.n > a:
        raise ValueError(f"planted graph on {planted.n} vertices does not fit in a part of size {a}")
    if a + b > MAX_VERTICES:
        raise ValueError(f"host on {a + b} vertices exceeds {MAX_VERTICES}")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    rows = [right | (planted.rows[v] if v < planted.n else 0) for v in range(a)]
    rows += [left] * b
    return Graph(a + b, rows)


@dataclass
class PyramidFreeCertificate:
    method: str
    g_host: float
    g_max: float
    checked_patterns: int
    verdict: str
    embedding: Embedding | None = None
    undecided_patterns: int = 0

    def to_json(self) -> dict:
        def num(x):
            return "INFINITE" if x == INFINITE else int(x)

        return {
            "method": self.method,
            "g_host": num(self.g_host),
            "g_max": num(self.g_max),
            "checked_patterns": self.checked_patterns,
            "verdict": self.verdict,
            "undecided_patterns": self.undecided_patterns,
            "embedding": list(self.embedding.mapping) if self.embedding else None,
        }


def pyramid_free_certificate(a: int, b: int, planted: Graph,
                             budget: int = DEFAULT_BUDGET) -> PyramidFreeCertificate:
    """Decide TP_4-freeness of K_{a,b} with ``planted`` inside the a-part."""
    if planted.n > a:
        raise ValueError(f"planted graph on {planted.n} vertices does not fit in a part of size {a}")
    red = reduced_pattern_girths()
    g_host = girth(planted)
    admissible = [m for m in red.girths if m.bit_count() <= b and 15 - m.bit_count() <= a]
    blocking_acyclic = [m for m in red.acyclic if m in set(admissible)]
    if red.g_max != INFINITE and g_host > red.g_max and not blocking_acyclic:
        return PyramidFreeCertificate(GIRTH_GAP, g_host, red.g_max, len(admissible), CERTIFIED)

    padded = Graph(a, list(planted.rows) + [0] * (a - planted.n))
    undecided = 0
    checked = 0
    for mask in admissible:
        rest, old = red.remainder(mask)
        checked += 1
        try:
            emb = find_embedding(rest, padded, budget)
        except BudgetExceeded:
            undecided += 1
            continue
        if emb is None:
            continue
        tp4 = triangular_pyramid(4).graph
        mapping = [-1] * tp4.n
        for x, hv in enumerate(emb.mapping):
            mapping[old[x]] = hv
        for i, v in enumerate(iter_bits(mask)):
            mapping[v] = a + i
        full = Embedding(tp4, assemble_host(a, b, planted), tuple(mapping))
        ok, why = verify_embedding(full)
        if not ok:  # pragma: no cover - guarded by the reduction argument
            raise ConstructionInvalid(f"reconstructed TP_4 embedding failed verification: {why}")
        return PyramidFreeCertificate(EXHAUSTIVE_PATTERNS, g_host, red.g_max, checked,
                                      REFUTED, full, undecided)
    verdict = UNDECIDED if undecided else CERTIFIED
    return PyramidFreeCertificate(EXHAUSTIVE_PATTERNS, g_host, red.g_max, checked, verdict,
                                  None, undecided)


@dataclass(frozen=True)
class Algebraic:
    q: int

    def describe(self) -> dict:
        return {"strategy": "algebraic", "q": self.q}


@dataclass(frozen=True)
class Greedy:
    gmin: int = 8
    seed: int = 0

    def describe(self) -> dict:
        return {"strategy": "greedy", "gmin": self.gmin, "seed": self.seed}


def parse_strategy(text: str) -> Algebraic | Greedy:
    """``algebraic:Q`` or ``greedy:GMIN:SEED``."""
    parts = text.strip().lower().split(":")
    try:
        if parts[0] == "algebraic" and len(parts) == 2:
            return Algebraic(int(parts[1]))
        if parts[0] == "greedy" and len(parts) in (2, 3):
            return Greedy(int(parts[1]), int(parts[2]) if len(parts) == 3 else 0)
    except ValueError:
        pass
    raise ValueError(f"unrecognised strategy {text!r}; use algebraic:Q or greedy:GMIN:SEED")


@dataclass
class ConstructionManifest:
    n: int
    a: int
    b: int
    planted: dict
    planted_graph6: str
    total_edges: int
    excess: int
    certificate: PyramidFreeCertificate | None
    substitution: str | None = None
    extra: dict = field(default_factory=dict)

    def planted_graph(self) -> Graph:
        return decode_graph6(self.planted_graph6)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "planted": self.planted,
            "planted_graph6": self.planted_graph6,
            "total_edges": self.total_edges,
            "excess": self.excess,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "substitution": self.substitution,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "ConstructionManifest":
        return cls(
            n=data["n"], a=data["a"], b=data["b"], planted=data["planted"],
            planted_graph6=data["planted_graph6"], total_edges=data["total_edges"],
            excess=data["excess"], certificate=None, substitution=data.get("substitution"),
        )


def lower_bound_graph(n: int, strategy: Algebraic | Greedy,
                      budget: int = DEFAULT_BUDGET) -> tuple[Graph, ConstructionManifest]:
    """K_{ceil(n/2), floor(n/2)} with a high-girth graph planted in the larger part.

    Raises ConstructionInvalid if the attached certificate finds a TP_4.
    """
    a, b = (n + 1) // 2, n // 2
    substitution = None
    if isinstance(strategy, Algebraic):
        q = strategy.q
        if 2 * q ** 3 > a:
            raise ValueError(f"algebraic q={q} needs 2q^3 = {2 * q ** 3} <= ceil(n/2) = {a}")
        try:
            planted, _, _ = high_girth_bipartite(q)
        except ConstructionInvalid as exc:
            planted = greedy_high_girth(2 * q ** 3, 8, 0)
            substitution = f"algebraic q={q} rejected ({exc}); greedy gmin=8 seed=0 used instead"
    elif isinstance(strategy, Greedy):
        if strategy.gmin < 8:
            raise ValueError(f"greedy strategy needs gmin >= 8 (got {strategy.gmin})")
        planted = greedy_high_girth(a, strategy.gmin, strategy.seed)
    else:
        raise TypeError(f"unknown strategy {strategy!r}")
    host = assemble_host(a, b, planted)
    cert = pyramid_free_certificate(a, b, planted, budget)
    if cert.verdict == REFUTED:
        raise ConstructionInvalid("lower-bound candidate contains TP_4")
    manifest = ConstructionManifest(
        n=n, a=a, b=b, planted=strategy.describe(), planted_graph6=encode_graph6(planted),
        total_edges=host.edge_count, excess=host.edge_count - h(n), certificate=cert,
        substitution=substitution,
    )
    return host, manifest


def certify_manifest(manifest: ConstructionManifest,
                     budget: int = DEFAULT_BUDGET) -> PyramidFreeCertificate:
    """Re-derive the certificate from the manifest's parts and planted graph."""
    return pyramid_free_certificate(manifest.a, manifest.b, manifest.planted_graph(), budget)
