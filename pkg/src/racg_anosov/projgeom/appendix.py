"""
Exact certificates that two specific wall pairs never strongly nest: one in the group of the
square-plus-point nerve ("fig-a1", word (bd)^k e (ac)^k) for the Vinberg domain, one in the
group of the "fig-a2" nerve (word t1 t3 t2 e d1 d2) valid in every reflection domain.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Iterable, List, Optional
import sympy as sp
from loguru import logger

from ..racg import builtin_system, normalize, support
from ..walls import Wall, make_wall, walls_of, gamma_of
from ..vinberg import SimplicialRep, build_rep, random_fully_nondegenerate
from ..core.context import RunContext
from ..core.errors import CertificationFailure, DomainError
from .exact_lp import in_cone
from .wall_geometry import Point, projective_point, column, wall_geometry
from .halfcone import NestingProbeReport, MARGIN_DECAY, halfcone_approx, halfspaces_nest, nesting_probe
from .sigma import sigma_polytope

CASES = ("a1", "a2")
DEFAULT_DEPTHS = {"a1": 6, "a2": 5}
DEFAULT_SEED = 1


@dataclass
class Incidence:
    name: str
    holds: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "detail": self.detail}


@dataclass
class CertificationReport:
    case: str
    word: str
    outer: Wall
    inner: Wall
    gamma: str = ""
    incidences: List[Incidence] = field(default_factory=list)
    witnesses: List[Point] = field(default_factory=list)
    probe: Optional[NestingProbeReport] = None
    cartan: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return bool(self.incidences) and all(i.holds for i in self.incidences)

    def check(self, name: str, holds: bool, detail: str = "") -> bool:
        self.incidences.append(Incidence(name, bool(holds), detail))
        if not holds: logger.warning(f"appendix {self.case}: incidence '{name}' failed {detail}")
        return holds

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "certified": self.certified,
            "word": self.word,
            "outer": self.outer.to_dict(),
            "inner": self.inner.to_dict(),
            "gamma": self.gamma,
            "incidences": [i.to_dict() for i in self.incidences],
            "witnesses": [[str(x) for x in w] for w in self.witnesses],
            "probe": self.probe.to_dict() if self.probe else None,
            "cartan": self.cartan,
        }

    def rows(self) -> list:
        return self.probe.rows() if self.probe else []


def fixed_subspace(rep: SimplicialRep, elements: Iterable) -> List[Point]:
    """basis of the common kernel of ρ(g) - id, each vector scaled by its first nonzero entry"""
    I = sp.eye(rep.d)
    stacked = sp.Matrix.vstack(*(rep.evaluate(g) - I for g in elements))
    return [projective_point(v) for v in stacked.nullspace()]


def in_span(basis: List[Point], x) -> bool:
    if not basis: return all(v == 0 for v in x)
    B = sp.Matrix.hstack(*(column(b) for b in basis))
    return B.rank() == B.row_join(column(x)).rank()


def _fixed_by(rep: SimplicialRep, g, x) -> bool:
    return rep.evaluate(g) * column(x) == column(x)


def _default_rep(sys, seed: int) -> SimplicialRep:
    RunContext.record_seed("cartan", seed)
    return build_rep(random_fully_nondegenerate(sys, seed))


def _finish(report: CertificationReport, rep: SimplicialRep, W: Wall, Wp: Wall, depth: int) -> CertificationReport:
    """the probe on the witnesses must decay, with every witness margin exactly zero"""
    probe = nesting_probe(rep, W, Wp, depth, witnesses=report.witnesses)
    report.probe = probe
    report.check("nesting probe reports margin decay", probe.relation == MARGIN_DECAY, probe.relation)
    report.check("witness margins are exactly zero at every depth", all(r.min_margin == 0 for r in probe.records),
                 ", ".join(str(r.min_margin) for r in probe.records))
    if not report.certified:
        failed = [i.name for i in report.incidences if not i.holds]
        raise CertificationFailure(f"appendix {report.case} not certified, failing: {failed}", report=report)
    logger.success(f"appendix {report.case} certified for {report.word}")
    return report


def certify_a1(k: int = 1, depth: int = DEFAULT_DEPTHS["a1"], rep: Optional[SimplicialRep] = None, seed: int = DEFAULT_SEED) -> CertificationReport:
    if k < 1: raise DomainError(f"k must be at least 1, got {k}")
    sys = builtin_system("fig-a1")
    rep = rep or _default_rep(sys, seed)
    if rep.system != sys: raise DomainError("case a1 needs a representation of the fig-a1 group")
    if rep.cartan.det() == 0: raise DomainError("case a1 needs a nonsingular Cartan matrix")
    a, b, c, d, e = (sys.index(x) for x in "abcde")
    letters = (b, d) * k + (e,) + (a, c) * k
    w = normalize(sys, letters)
    walls, _ = walls_of(sys, w)
    W, Wp = walls[0], walls[-1]
    report = CertificationReport("a1", str(w), W, Wp, cartan=rep.cartan.to_rows())

    # (i) γ(W, W') has full support
    gamma = gamma_of(sys, W, Wp)
    report.gamma = str(gamma)
    report.check("outer wall is W(b)", W == make_wall(sys, (), b), str(W))
    report.check("inner wall is (bd)^k e (ac)^(k-1) a·W(c)", Wp == make_wall(sys, letters[:-1], c), str(Wp))
    report.check("γ(W, W') equals the word", gamma == w, report.gamma)
    report.check("γ(W, W') has full support", support(gamma) == frozenset(range(sys.n)), str(sorted(sys.names(support(gamma)))))
    # (ii) Hs₊(W') ⊂ Hs₊(W)
    report.check("Hs₊(W') ⊂ Hs₊(W)", halfspaces_nest(sys, W, Wp))
    # (iii) exact witnesses: the edge (bd)^k·F_{a,c,e} of the polygon in H_{a,c}
    report.check("a and c do not commute", not sys.commute(a, c))
    h_ac = fixed_subspace(rep, [(a,), (c,)])
    report.check("H_{a,c} has dimension n - 2", len(h_ac) == sys.n - 2, str(len(h_ac)))
    report.check("polar of b lies in H_{a,c}", in_span(h_ac, rep.vectors[b]))
    corners = rep.simplex_vertices()
    M = rep.evaluate((b, d) * k)
    report.witnesses = [projective_point(M * corners[b]), projective_point(M * corners[d])]
    geom_p = wall_geometry(rep, Wp)
    face = halfcone_approx(rep, Wp, 1, 0).generators[1:]
    depth0 = halfcone_approx(rep, W, 1, 0).generators
    triangle = [rep.vectors[b], corners[d], corners[e]]
    for name, x in zip(("(bd)^k·vertex(b)", "(bd)^k·vertex(d)"), report.witnesses):
        report.check(f"{name} is fixed by a and c", _fixed_by(rep, (a,), x) and _fixed_by(rep, (c,), x))
        report.check(f"{name} lies in H_{{a,c}}", in_span(h_ac, x))
        report.check(f"{name} lies on W'", geom_p.evaluate(x) == 0)
        report.check(f"{name} is a face vertex of W' at depth 0", x in face)
        report.check(f"{name} lies in cone(v_b, vertex(d), vertex(e))", in_cone(triangle, x))
        report.check(f"{name} lies in the depth-0 half-cone of W", in_cone(depth0, x))
    # (iv) the probe
    return _finish(report, rep, W, Wp, depth)


def certify_a2(depth: int = DEFAULT_DEPTHS["a2"], rep: Optional[SimplicialRep] = None, seed: int = DEFAULT_SEED) -> CertificationReport:
    sys = builtin_system("fig-a2")
    rep = rep or _default_rep(sys, seed)
    if rep.system != sys: raise DomainError("case a2 needs a representation of the fig-a2 group")
    t1, t2, t3, d1, d2, e = (sys.index(x) for x in ("t1", "t2", "t3", "d1", "d2", "e"))
    letters = (t1, t3, t2, e, d1, d2)
    w = normalize(sys, letters)
    walls, _ = walls_of(sys, w)
    W, Wp = walls[0], walls[-1]
    report = CertificationReport("a2", str(w), W, Wp, cartan=rep.cartan.to_rows())

    gamma = gamma_of(sys, W, Wp)
    report.gamma = str(gamma)
    report.check("outer wall is W(t1)", W == make_wall(sys, (), t1), str(W))
    report.check("inner wall is t1t3t2ed1·W(d2)", Wp == make_wall(sys, letters[:-1], d2), str(Wp))
    report.check("γ(W, W') equals the word", gamma == w, report.gamma)
    report.check("γ(W, W') has full support", support(gamma) == frozenset(range(sys.n)), str(sorted(sys.names(support(gamma)))))
    report.check("Hs₊(W') ⊂ Hs₊(W)", halfspaces_nest(sys, W, Wp))

    # Σ_T is a hexagon in P(V_T); its edge Σ_{t1,t3} is fixed by D ∪ E
    hexagon = sigma_polytope(rep, (t1, t2, t3))
    report.check("Σ_{t1,t2,t3} is a hexagon", len(hexagon.vertices) == 6, str(len(hexagon.vertices)))
    edge = sigma_polytope(rep, (t1, t3))
    report.check("Σ_{t1,t3} is a segment", len(edge.vertices) == 2, str(len(edge.vertices)))
    report.check("Σ_{t1,t3} endpoints are hexagon vertices", all(p in hexagon.vertices for p in edge.vertices))
    h_de = fixed_subspace(rep, [(d1,), (d2,), (e,)])
    for p in edge.vertices:
        report.check("Σ_{t1,t3} endpoint is fixed by d1, d2 and e", all(_fixed_by(rep, (s,), p) for s in (d1, d2, e)))
        report.check("Σ_{t1,t3} endpoint lies in H_{D∪E}", in_span(h_de, p))
    M = rep.evaluate((t1, t3, t2))
    report.witnesses = [projective_point(M * column(p)) for p in edge.vertices]
    geom_p = wall_geometry(rep, Wp)
    face = halfcone_approx(rep, Wp, 1, 0).generators[1:]
    depth0 = halfcone_approx(rep, W, 1, 0).generators
    for i, q in enumerate(report.witnesses, 1):
        report.check(f"t1t3t2·p{i} lies on W'", geom_p.evaluate(q) == 0)
        report.check(f"t1t3t2·p{i} lies in the depth-0 face cone of W'", in_cone(face, q))
        report.check(f"t1t3t2·p{i} lies in the depth-0 half-cone of W", in_cone(depth0, q))
    return _finish(report, rep, W, Wp, depth)


def appendix_certify(case: str, k: int = 1, depth: Optional[int] = None, rep: Optional[SimplicialRep] = None, seed: int = DEFAULT_SEED) -> CertificationReport:
    case = case.lower()
    if case not in CASES: raise DomainError(f"unknown appendix case '{case}', expected one of {list(CASES)}")
    depth = DEFAULT_DEPTHS[case] if depth is None else depth
    if case == "a1": return certify_a1(k, depth, rep, seed)
    return certify_a2(depth, rep, seed)
