"""The inequality battery: pairwise density comparisons that certify
monochromatic-density lower bounds, plus the small rational functions used
by the doubled-wheel bounds.

Reports are one-sided unless marked as identities.  A report can be
not-applicable (a hypothesis failed or a precondition is outside range),
which is a distinct outcome from a violated inequality.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .decomposition import find_triangle_decomposition
from .density import m, t_hom, t_signed
from .graphs import (
    Graph,
    apex_add,
    canonical_form,
    catalog,
    connected_bipartite_up_to_5,
    pendant_attach,
)
from .graphons import SignedStepGraphon, StepGraphon

INEQ_TOL = 1e-9
IDENTITY_TOL = 1e-12


def _exact_num(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _fmt(x):
    if isinstance(x, Fraction):
        return str(x)
    return "%.12g" % float(x)


@dataclass
class InequalityReport:
    name: str
    lhs: object
    rhs: object
    holds: bool
    applicable: bool = True
    identity: bool = False
    witness: object = None
    detail: str = ""

    @property
    def slack(self):
        return self.lhs - self.rhs

    def tsv_row(self) -> str:
        status = "true" if self.holds else "false"
        if not self.applicable:
            status = "na"
        return "\t".join(
            [self.name, status, _fmt(self.slack), _fmt(self.lhs), _fmt(self.rhs)]
        )


def format_reports(reports) -> str:
    lines = ["name\tholds\tslack\tlhs\trhs"]
    lines += [r.tsv_row() for r in reports]
    return "\n".join(lines) + "\n"


def _ge(name, lhs, rhs, w=None, tol=INEQ_TOL, detail=""):
    if _exact_num(lhs) and _exact_num(rhs):
        holds = lhs >= rhs
    else:
        holds = lhs - rhs >= -tol
    return InequalityReport(name, lhs, rhs, holds, witness=w, detail=detail)


def _identity(name, lhs, rhs, w=None, tol=IDENTITY_TOL, detail=""):
    if _exact_num(lhs) and _exact_num(rhs):
        holds = lhs == rhs
    else:
        holds = abs(lhs - rhs) <= tol
    return InequalityReport(name, lhs, rhs, holds, identity=True, witness=w, detail=detail)


def _na(name, w=None, detail=""):
    return InequalityReport(name, 0, 0, holds=True, applicable=False, witness=w, detail=detail)


def check_goodman(w: StepGraphon, tol=IDENTITY_TOL) -> InequalityReport:
    """Triangle density identity: m(K3) = (3/2) m(path-2) - 1/2, exactly."""
    lhs = m(catalog("k3"), w)
    half_ = Fraction(1, 2) if _exact_num(lhs) else 0.5
    rhs = 3 * m(catalog("k1,2"), w) * half_ - half_
    return _identity("goodman", lhs, rhs, w, tol)


def check_holder(h: Graph, j: Graph, f: Graph, k: int, l: int, w: StepGraphon,
                 tol=INEQ_TOL, name=None) -> InequalityReport:
    """If t_h >= t_j^l / t_f^(k-1) holds in both colours, then
    m_h >= 2^(k-l) m_j^l / m_f^(k-1).  Hypotheses are tested first; a failed
    hypothesis or m_f = 0 gives a not-applicable report."""
    assert l >= k >= 1, "exponents must satisfy l >= k >= 1"
    name = name or f"holder[k={k},l={l}]"
    for side, wk in (("", w), ("complement", w.one_minus())):
        th, tj, tf = t_hom(h, wk), t_hom(j, wk), t_hom(f, wk)
        # multiplicative form avoids dividing by a vanishing t_f
        lhs, rhs = th * tf ** (k - 1), tj ** l
        if not _ge("hyp", lhs, rhs, tol=tol).holds:
            return _na(name, w, detail=f"hypothesis failed in {side or 'first'} colour")
    mh, mj, mf = m(h, w), m(j, w), m(f, w)
    if mf <= 0:
        return _na(name, w, detail="m of the denominator graph vanishes")
    two = Fraction(2) if _exact_num(mh) and _exact_num(mj) and _exact_num(mf) else 2.0
    rhs = two ** (k - l) * mj ** l / mf ** (k - 1)
    return _ge(name, mh, rhs, w, tol)


def check_jtree_bound(h: Graph, w: StepGraphon, tol=INEQ_TOL) -> InequalityReport:
    """t_h >= t_triangle^phi / t_edge^kappa for a graph glued from triangles."""
    rep = find_triangle_decomposition(h)
    if rep is None:
        return _na("jtree", w, detail="not glued from triangles")
    t_edge = t_hom(catalog("k2"), w)
    t_tri = t_hom(catalog("k3"), w)
    th = t_hom(h, w)
    name = f"jtree[phi={rep.phi},kappa={rep.kappa}]"
    if t_edge <= 0:
        return _ge(name, th * t_edge ** rep.kappa, t_tri ** rep.phi, w, tol,
                   detail="multiplicative form, edge density vanishes")
    return _ge(name, th, t_tri ** rep.phi / t_edge ** rep.kappa, w, tol)


def check_tritree_chain(h: Graph, w: StepGraphon, tol=INEQ_TOL, prefix="tritree"):
    """Full commonality chain for a triangle-glued graph: the two-colour
    density hypotheses, then m_h >= 2^(kappa+1-phi) m_K3^phi >= 2^(1-e)."""
    rep = find_triangle_decomposition(h)
    if rep is None:
        return [_na(prefix, w, detail="not glued from triangles")]
    k3, k2 = catalog("k3"), catalog("k2")
    out = [check_jtree_bound(h, w, tol)]
    out[0].name = f"{prefix}:density"
    mid = check_holder(h, k3, k2, rep.kappa + 1, rep.phi, w, tol, name=f"{prefix}:holder")
    out.append(mid)
    mh = m(h, w)
    target = Fraction(2) ** (1 - h.e)
    if not _exact_num(mh):
        target = float(target)
    out.append(_ge(f"{prefix}:common", mh, target, w, tol))
    return out


def check_addtree_bound(t: Graph, u: int, h: Graph, v: int, w: StepGraphon,
                        tol=INEQ_TOL):
    """Commonality of a triangle-glued graph with a pendant tree attached,
    provided the tree has at most kappa edges."""
    rep = find_triangle_decomposition(h)
    if rep is None:
        return [_na("addtree", w, detail="base graph not glued from triangles")]
    if t.e > rep.kappa:
        return [_na("addtree", w,
                    detail=f"tree has {t.e} edges, budget is kappa={rep.kappa}")]
    glued = pendant_attach(t, u, h, v)
    k3, k2 = catalog("k3"), catalog("k2")
    out = []
    for side, wk in (("density", w), ("density-complement", w.one_minus())):
        tg = t_hom(glued, wk)
        te = t_hom(k2, wk)
        tt = t_hom(k3, wk)
        name = f"addtree:{side}"
        if te <= 0:
            out.append(_ge(name, tg * te ** (rep.kappa - t.e), tt ** rep.phi, w, tol,
                           detail="multiplicative form"))
        else:
            out.append(_ge(name, tg, tt ** rep.phi / te ** (rep.kappa - t.e), w, tol))
    mg = m(glued, w)
    target = Fraction(2) ** (1 - glued.e)
    if not _exact_num(mg):
        target = float(target)
    out.append(_ge("addtree:common", mg, target, w, tol))
    return out


DIAMOND_C_MAX_EXACT = Fraction(19, 100)


def check_diamond_lemma(w: StepGraphon, c, tol=INEQ_TOL) -> InequalityReport:
    """m_diamond - 1/16 >= c (m_C4 - 1/8) for small nonnegative c."""
    exact = w.exact and _exact_num(c)
    if exact:
        assert 0 <= c <= DIAMOND_C_MAX_EXACT, "exact mode accepts c up to 19/100"
    else:
        c = float(c)
        assert 0 <= c <= (3 - math.sqrt(5)) / 4 + 1e-15, "c outside [0, (3-sqrt5)/4]"
    md = m(catalog("diamond"), w)
    mc4 = m(catalog("c4"), w)
    if exact:
        lhs = md - Fraction(1, 16)
        rhs = c * (mc4 - Fraction(1, 8))
    else:
        lhs = float(md) - 1.0 / 16
        rhs = c * (float(mc4) - 1.0 / 8)
    return _ge(f"diamond-lemma[c={_fmt(c)}]", lhs, rhs, w, tol)


def check_k3plus_cs(u: SignedStepGraphon, tol=INEQ_TOL):
    """Cauchy-Schwarz on the signed kernel: the tailed-triangle contraction
    squared is at most the product of the cherry and 4-cycle contractions,
    both of which are nonnegative."""
    star = t_signed(catalog("k1,2"), u)
    c4 = t_signed(catalog("c4"), u)
    tail = t_signed(catalog("k3plus"), u)
    zero = Fraction(0) if _exact_num(star) else 0.0
    return [
        _ge("k3plus-cs:star-nonneg", star, zero, u, tol),
        _ge("k3plus-cs:c4-nonneg", c4, zero, u, tol),
        _ge("k3plus-cs", star * c4, tail * tail, u, tol),
    ]


def beachball_h(k: int, c, x):
    """Lower-bound curve for the doubled wheel over a 2k-cycle, as a function
    of x = sqrt(m_diamond).  Rational in x; exact for Fraction inputs."""
    assert k >= 1
    assert x >= Fraction(1, 4), "defined for x >= 1/4"
    den = (2 * x + 1) ** (2 * k - 2) * (16 * x * x - 1 + 2 * c)
    assert den > 0, "pole in the denominator"
    return 16 * 3 ** (2 * k - 2) * c * x ** (4 * k) / den


def beachball_p(k: int, x):
    """Cubic controlling monotone growth of the doubled-wheel curve."""
    return 112 * k * x ** 3 + (112 * k - 56) * x ** 2 - (5 * k + 5) * x - 5 * k


def beachball_p_shifted(k: int, x):
    """Same cubic recentred at 1/4; coefficients there are positive for k >= 2."""
    if _exact_num(x):
        y = x - Fraction(1, 4)
        tail = Fraction(10 * k - 19, 4)
    else:
        y = x - 0.25
        tail = (10 * k - 19) / 4.0
    return 112 * k * y ** 3 + (196 * k - 56) * y ** 2 + (72 * k - 33) * y + tail


def beachball_p_positive_on_grid(k: int, lo=Fraction(1, 4), hi=Fraction(4),
                                 step=Fraction(1, 64)) -> bool:
    x = Fraction(lo)
    while x <= hi:
        if beachball_p(k, x) <= 0:
            return False
        x += step
    return True


def check_beachball_chain(k: int, w: StepGraphon, c=Fraction(1, 7), tol=INEQ_TOL):
    """m of the doubled wheel over C_{2k}: first against the diamond-power
    ratio, then against the explicit curve at x = sqrt(m_diamond)."""
    assert k >= 2
    ball = catalog(f"beachball:{k}")
    md = m(catalog("diamond"), w)
    mstar = m(catalog("k1,2"), w)
    mc4 = m(catalog("c4"), w)
    mb = m(ball, w)
    out = []
    if mstar <= 0 or mc4 <= 0:
        out.append(_na(f"beachball{2 * k}:ratio", w, detail="denominator vanishes"))
    else:
        out.append(_ge(f"beachball{2 * k}:ratio", mb,
                       md ** (2 * k) / (mstar ** (2 * k - 2) * mc4), w, tol))
    # floating sqrt can land a hair under 1/4 when m_diamond sits at its minimum
    x = max(math.sqrt(float(md)), 0.25)
    out.append(_ge(f"beachball{2 * k}:curve", float(mb), beachball_h(k, float(c), x), w, tol))
    return out


def _ten_list():
    return {canonical_form(g) for g in connected_bipartite_up_to_5()}


def check_apex_lemma(h: Graph, w: StepGraphon, tol=INEQ_TOL) -> InequalityReport:
    """m(h plus one dominating vertex) >= 2^(-v) m(h), for h in the list of
    connected bipartite graphs on up to five vertices."""
    if canonical_form(h) not in _ten_list():
        raise ValueError("apex bound is only claimed for the ten small connected bipartite graphs")
    lhs = m(apex_add(h, 1), w)
    mh = m(h, w)
    scale = Fraction(2) ** (-h.n)
    if not (_exact_num(lhs) and _exact_num(mh)):
        scale = float(scale)
    return _ge(f"apex[v={h.n},e={h.e}]", lhs, scale * mh, w, tol)


def check_apex_chain(h: Graph, a: int, w: StepGraphon, tol=INEQ_TOL):
    """Chain for a dominating vertices: m_(h+a) >= m_(h+1)^a / m_h^(a-1)
    and then m_(h+a) >= 2^(1 - e(h) - a v(h))."""
    assert a >= 1
    if canonical_form(h) not in _ten_list():
        raise ValueError("apex bound is only claimed for the ten small connected bipartite graphs")
    mh = m(h, w)
    m1 = m(apex_add(h, 1), w)
    ma = m(apex_add(h, a), w)
    out = []
    if mh <= 0:
        out.append(_na("apex-chain:intermediate", w, detail="m of the base vanishes"))
    else:
        out.append(_ge("apex-chain:intermediate", ma, m1 ** a / mh ** (a - 1), w, tol))
    target = Fraction(2) ** (1 - h.e - a * h.n)
    if not _exact_num(ma):
        target = float(target)
    out.append(_ge("apex-chain:final", ma, target, w, tol))
    return out


def standard_battery(w: StepGraphon, tol=INEQ_TOL):
    """Every check in the module against one kernel."""
    out = [check_goodman(w)]
    for name in ("jst", "diamond", "k1,1,3"):
        out += check_tritree_chain(catalog(name), w, tol, prefix=f"tritree:{name}")
    out.append(check_holder(catalog("diamond"), catalog("k3"), catalog("k2"), 2, 2, w, tol,
                            name="holder:diamond"))
    d = catalog("diamond")
    out += check_addtree_bound(catalog("k2"), 0, d, 2, w, tol)
    out += check_addtree_bound(catalog("k2"), 0, d, 0, w, tol)
    out += check_addtree_bound(catalog("k1,3"), 0, catalog("k1,1,4"), 0, w, tol)
    out.append(check_diamond_lemma(w, Fraction(1, 7), tol))
    out.append(check_diamond_lemma(w, (3 - math.sqrt(5)) / 4, tol))
    out += check_k3plus_cs(w.signed(), tol)
    for h in connected_bipartite_up_to_5():
        out.append(check_apex_lemma(h, w, tol))
    out += check_apex_chain(catalog("c4"), 2, w, tol)
    out += check_apex_chain(catalog("k2,3"), 1, w, tol)
    out += check_apex_chain(catalog("k2"), 3, w, tol)
    out += check_beachball_chain(2, w, Fraction(1, 7), tol)
    out += check_beachball_chain(3, w, Fraction(1, 7), tol)
    return out
