"""Relation suites: machine verification of every defining and auxiliary
relation on degree-bounded monomial bases.

Every check is exact: a suite passes only when the residual operator
annihilates every basis monomial of total degree up to the bound.  On
failure the first failing monomial (in the canonical graded order) and
the full residual polynomial are recorded as a witness.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .scalars import RingElem, qpow, qnum
from . import superpoly as sp
from .operators import (LinForm, OpExpr, graded_commutator,
                        op_eq_on_basis)
from .algebra import build_root_data, build_quantum, build_classical, \
    build_xminus


class RankTooSmall(Exception):
    """No applicable instance at this rank."""


@dataclass
class SuiteResult:
    id: str
    instances: int
    status: str                 # "pass" | "fail" | "vacuous"
    witness: str | None = None
    millis: int = 0

    def to_dict(self, timings=True):
        d = {"id": self.id, "instances": self.instances,
             "status": self.status, "witness": self.witness}
        if timings:
            d["millis"] = self.millis
        return d


@dataclass
class VerificationReport:
    M: int
    N: int
    mode: str
    variant: str
    degree: int
    nmax: int
    suites: list = field(default_factory=list)

    @property
    def ok(self):
        return all(s.status != "fail" for s in self.suites)

    def to_dict(self, timings=True):
        return {
            "algebra": {"M": self.M, "N": self.N},
            "mode": self.mode,
            "variant": self.variant,
            "degree": self.degree,
            "nmax": self.nmax,
            "suites": [s.to_dict(timings) for s in self.suites],
            "pass": self.ok,
        }

    def to_json(self, timings=True):
        return json.dumps(self.to_dict(timings), indent=2) + "\n"

    def to_text(self):
        lines = ["relation suites for (M,N)=(%d,%d) variant=%s mode=%s degree=%d"
                 % (self.M, self.N, self.variant, self.mode, self.degree)]
        for s in self.suites:
            line = "  %-12s %-8s instances=%-4d %dms" % (
                s.id, s.status.upper(), s.instances, s.millis)
            lines.append(line)
            if s.witness:
                lines.append("    witness: " + s.witness)
        lines.append("overall: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


class _Suite:
    """Accumulates instance checks for one relation family."""

    def __init__(self, tag, degree):
        self.tag = tag
        self.degree = degree
        self.instances = 0
        self.witness = None
        self.t0 = time.monotonic()

    def check(self, label, lhs, rhs):
        self.instances += 1
        if self.witness is not None:
            return
        ok, wit = op_eq_on_basis(lhs, rhs, self.degree)
        if not ok:
            mono, residual = wit
            self.witness = "%s at monomial %s: residual %s" % (
                label, sp.mono_render(lhs.cs, mono),
                sp.poly_render(lhs.cs, residual))

    def result(self):
        millis = int((time.monotonic() - self.t0) * 1000)
        status = ("vacuous" if self.instances == 0
                  else "fail" if self.witness else "pass")
        return SuiteResult(self.tag, self.instances, status,
                           self.witness, millis)


def _scalar_op(cs, c):
    return OpExpr.scalar(cs, c)


# ---------------------------------------------------------------------------
# Cartan / commutation relations
# ---------------------------------------------------------------------------

def check_cartan_relations(gens, degree):
    data, cs = gens.data, gens.cs
    K = data.K
    results = []
    if gens.quantum:
        s = _Suite("Q20", degree)
        for i in range(1, K + 1):
            for j in range(i + 1, K + 1):
                s.check("i=%d,j=%d" % (i, j),
                        gens.t[i] @ gens.t[j], gens.t[j] @ gens.t[i])
        results.append(s.result())
        for tag, fam, sgn in (("Q21", gens.e, 1), ("Q22", gens.f, -1)):
            s = _Suite(tag, degree)
            for i in range(1, K + 1):
                for j in range(1, K + 1):
                    lhs = gens.t[i] @ fam[j] @ gens.t_inv(i)
                    rhs = fam[j].scale(qpow(sgn * data.a(i, j)))
                    s.check("i=%d,j=%d" % (i, j), lhs, rhs)
            results.append(s.result())
        s = _Suite("Q23", degree)
        for i in range(1, K + 1):
            for j in range(1, K + 1):
                lhs = graded_commutator(gens.e[i], gens.f[j])
                if i == j:
                    rhs = OpExpr.term(cs, (("qnum", gens.t_form[i]),))
                else:
                    rhs = OpExpr.zero(cs)
                s.check("i=%d,j=%d" % (i, j), lhs, rhs)
        results.append(s.result())
    else:
        s = _Suite("C1", degree)
        for i in range(1, K + 1):
            for j in range(i + 1, K + 1):
                s.check("i=%d,j=%d" % (i, j),
                        graded_commutator(gens.t[i], gens.t[j]),
                        OpExpr.zero(cs))
        results.append(s.result())
        for tag, fam, sgn in (("C2", gens.e, 1), ("C3", gens.f, -1)):
            s = _Suite(tag, degree)
            for i in range(1, K + 1):
                for j in range(1, K + 1):
                    lhs = graded_commutator(gens.t[i], fam[j])
                    rhs = fam[j].scale(RingElem.from_rational(sgn * data.a(i, j)))
                    s.check("i=%d,j=%d" % (i, j), lhs, rhs)
            results.append(s.result())
        s = _Suite("C4", degree)
        for i in range(1, K + 1):
            for j in range(1, K + 1):
                lhs = graded_commutator(gens.e[i], gens.f[j])
                rhs = gens.t[i] if i == j else OpExpr.zero(cs)
                s.check("i=%d,j=%d" % (i, j), lhs, rhs)
        results.append(s.result())
    return results


# ---------------------------------------------------------------------------
# Serre relations
# ---------------------------------------------------------------------------

def check_serre(gens, degree):
    data, cs = gens.data, gens.cs
    K = data.K
    odd = data.M + 1
    results = []
    quantum = gens.quantum
    qm1 = qpow(-1)
    qp1 = qpow(1)

    tag = "QSerreA" if quantum else "CSerreA"
    s = _Suite(tag, degree)
    for fam, name in ((gens.e, "e"), (gens.f, "f")):
        for j in range(1, K + 1):
            if j == odd:
                continue
            for i in range(1, K + 1):
                if i == j or abs(data.a(i, j)) != 1:
                    continue
                inner = graded_commutator(fam[j], fam[i], qm1 if quantum else None)
                lhs = graded_commutator(fam[j], inner, qp1 if quantum else None)
                s.check("%s:j=%d,i=%d" % (name, j, i), lhs, OpExpr.zero(cs))
    results.append(s.result())

    tag = "QSerreOdd" if quantum else "CSerreOdd"
    s = _Suite(tag, degree)
    if data.M >= 1 and data.N >= 1:
        for fam, name in ((gens.e, "e"), (gens.f, "f")):
            inner = graded_commutator(fam[odd], fam[odd - 1],
                                      qm1 if quantum else None)
            mid = graded_commutator(fam[odd + 1], inner,
                                    qp1 if quantum else None)
            lhs = graded_commutator(fam[odd], mid)
            s.check(name, lhs, OpExpr.zero(cs))
    results.append(s.result())

    # nilpotency of the odd generators; implicit in the Z2 grading and
    # reported apart so a failure cannot masquerade as a Serre failure
    s = _Suite("OddNil", degree)
    for fam, name in ((gens.e, "e"), (gens.f, "f")):
        s.check(name + "^2", fam[odd] @ fam[odd], OpExpr.zero(cs))
    results.append(s.result())
    return results


# ---------------------------------------------------------------------------
# auxiliary root-vector relations
# ---------------------------------------------------------------------------

def check_aux(gens, degree, nmax=3):
    data, cs = gens.data, gens.cs
    K = data.K
    nu = data.nu
    X = {}
    for l in range(1, K + 1):
        for m in range(l, K + 1):
            X[(l, m)] = build_xminus(gens, l, m)
    results = []
    if gens.quantum:
        s = _Suite("AuxQ39", degree)
        for j in range(1, K + 1):
            for i in range(j + 1, K + 1):
                lhs = graded_commutator(gens.e[i], X[(j, i)])
                rhs = X[(j, i - 1)].compose(gens.t[i])
                if nu[i] < 0:
                    rhs = rhs.scale(RingElem.from_rational(-1))
                s.check("i=%d,j=%d" % (i, j), lhs, rhs)
        results.append(s.result())

        s = _Suite("AuxQ40", degree)
        for i in range(1, K + 1):
            for j in range(i + 1, K + 1):
                lhs = graded_commutator(gens.e[i], X[(i, j)])
                rhs = gens.t_inv(i).compose(X[(i + 1, j)])
                rhs = rhs.scale(RingElem.from_rational(-nu[i + 1]))
                s.check("i=%d,j=%d" % (i, j), lhs, rhs)
        results.append(s.result())

        s = _Suite("AuxQ41", degree)
        for j in range(1, K + 1):
            for i in range(j + 1, K + 1):
                base = X[(j, i - 1)]
                # powers of an odd root vector vanish, so the power law
                # is only meaningful for even ones beyond n = 1
                top = nmax if base.parity() == 0 else 1
                for n in range(1, top + 1):
                    xn = base.power(n)
                    lhs = gens.f[i] @ xn
                    rhs = xn.compose(gens.f[i]).scale(qpow(-n * nu[i])) \
                        + base.power(n - 1).compose(X[(j, i)]).scale(qnum(n))
                    s.check("i=%d,j=%d,n=%d" % (i, j, n), lhs, rhs)
        results.append(s.result())

        s = _Suite("AuxQ42", degree)
        for j in range(1, K + 1):
            for i in range(j + 1, K + 1):
                s.check("f_i:i=%d,j=%d" % (i, j),
                        graded_commutator(gens.f[i], X[(j, i)], qpow(nu[i + 1])),
                        OpExpr.zero(cs))
                s.check("f_j:i=%d,j=%d" % (i, j),
                        graded_commutator(gens.f[j], X[(j, i)], qpow(-nu[j])),
                        OpExpr.zero(cs))
                for k in range(j + 1, i):
                    s.check("f_k:i=%d,j=%d,k=%d" % (i, j, k),
                            graded_commutator(gens.f[k], X[(j, i)]),
                            OpExpr.zero(cs))
        results.append(s.result())
    else:
        s = _Suite("AuxC16", degree)
        for j in range(1, K + 1):
            for i in range(j + 1, K + 1):
                lhs = graded_commutator(gens.e[i], X[(j, i)])
                rhs = X[(j, i - 1)].scale(RingElem.from_rational(nu[i]))
                s.check("i=%d,j=%d" % (i, j), lhs, rhs)
        results.append(s.result())

        s = _Suite("AuxC17", degree)
        for i in range(1, K + 1):
            for j in range(i + 1, K + 1):
                lhs = graded_commutator(gens.e[i], X[(i, j)])
                rhs = X[(i + 1, j)].scale(RingElem.from_rational(-nu[i + 1]))
                s.check("i=%d,j=%d" % (i, j), lhs, rhs)
        results.append(s.result())

        s = _Suite("AuxC18", degree)
        for j in range(1, K + 1):
            for i in range(j + 1, K + 1):
                lhs = graded_commutator(gens.f[i], X[(j, i - 1)])
                s.check("i=%d,j=%d" % (i, j), lhs, X[(j, i)])
        results.append(s.result())

        s = _Suite("AuxC19", degree)
        for j in range(1, K + 1):
            for i in range(j + 1, K + 1):
                s.check("f_i:i=%d,j=%d" % (i, j),
                        graded_commutator(gens.f[i], X[(j, i)]),
                        OpExpr.zero(cs))
                s.check("f_j:i=%d,j=%d" % (i, j),
                        graded_commutator(gens.f[j], X[(j, i)]),
                        OpExpr.zero(cs))
                for k in range(j + 1, i):
                    s.check("f_k:i=%d,j=%d,k=%d" % (i, j, k),
                            graded_commutator(gens.f[k], X[(j, i)]),
                            OpExpr.zero(cs))
        results.append(s.result())
    return results


# ---------------------------------------------------------------------------
# weight conjugation of root vectors
# ---------------------------------------------------------------------------

def check_weight_conjugation(gens, degree):
    data, cs = gens.data, gens.cs
    K = data.K
    s = _Suite("WeightConj", degree)
    for i in range(1, K + 1):
        for l in range(1, K + 1):
            for m in range(l, K + 1):
                x = build_xminus(gens, l, m)
                total = sum(data.a(i, r) for r in range(l, m + 1))
                if gens.quantum:
                    lhs = gens.t[i] @ x
                    rhs = x.compose(gens.t[i]).scale(qpow(-total))
                else:
                    lhs = graded_commutator(gens.t[i], x)
                    rhs = x.scale(RingElem.from_rational(-total))
                s.check("i=%d,l=%d,m=%d" % (i, l, m), lhs, rhs)
    return [s.result()]


# ---------------------------------------------------------------------------
# coordinate-level helper identities ([M]x = x[M+1], ...)
# ---------------------------------------------------------------------------

def check_heisenberg(cs, degree):
    s = _Suite("Heis", degree)
    for pos, (l, m) in enumerate(cs.coords):
        label = "(%d,%d)" % (l, m)
        mf = LinForm({pos: 1})
        num = OpExpr.term(cs, (("qnum", mf),))
        num_p1 = OpExpr.term(cs, (("qnum", mf.shift(1)),))
        num_m1 = OpExpr.term(cs, (("qnum", mf.shift(-1)),))
        xop = OpExpr.term(cs, (("x", pos),))
        dop = OpExpr.term(cs, (("D", pos),))
        s.check("53" + label, num @ xop, xop @ num_p1)
        s.check("54" + label, num @ dop, dop @ num_m1)
        if cs.odd[pos]:
            s.check("56" + label, dop @ xop + xop @ dop, OpExpr.identity(cs))
        else:
            s.check("55" + label, dop @ xop - xop @ dop, num_p1 - num)
    return [s.result()]


# ---------------------------------------------------------------------------
# highest-weight behaviour of the realization
# ---------------------------------------------------------------------------

def check_highest_weight(gens):
    data, cs = gens.data, gens.cs
    s = _Suite("HighestWeight", 0)
    one = sp.poly_one()
    for i in range(1, data.K + 1):
        s.instances += 1
        img = gens.e[i].apply(one)
        if img and s.witness is None:
            s.witness = "e_%d does not annihilate 1: %s" % (
                i, sp.poly_render(cs, img))
    for i in range(1, data.K + 1):
        s.instances += 1
        img = gens.t[i].apply(one)
        if gens.quantum:
            if gens.weights is None:
                expect = qpow(0, {i: 1})
            else:
                expect = qpow(gens.weights[i - 1])
        else:
            if gens.weights is None:
                expect = RingElem.monomial(0, {i: 1})
            else:
                expect = RingElem.from_rational(gens.weights[i - 1])
        want = sp.poly_scale(one, expect)
        if not sp.poly_eq(img, want) and s.witness is None:
            s.witness = ("t_%d on 1 gave %s, expected %s" % (
                i, sp.poly_render(cs, img), sp.poly_render(cs, want))
                if gens.quantum else
                "h_%d on 1 gave %s, expected %s" % (
                    i, sp.poly_render(cs, img), sp.poly_render(cs, want)))
    return [s.result()]


# ---------------------------------------------------------------------------
# full run
# ---------------------------------------------------------------------------

def run_full(M, N, mode="symbolic", degree=3, nmax=2, variant="prop3",
             weights=None):
    """Build the algebra and run every applicable suite.

    ``mode`` is "symbolic" (weight markers) or "integer" (requires
    ``weights``, a list of M+N+1 integers).
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if mode not in ("symbolic", "integer"):
        raise ValueError("mode must be symbolic or integer")
    if mode == "integer":
        if weights is None or len(weights) != M + N + 1:
            raise ValueError("integer mode needs %d weights" % (M + N + 1))
    else:
        weights = None
    data = build_root_data(M, N)
    if variant == "classical":
        gens = build_classical(data, weights)
    else:
        gens = build_quantum(data, weights, variant)
    report = VerificationReport(M, N, mode, variant, degree, nmax)
    report.suites += check_cartan_relations(gens, degree)
    report.suites += check_serre(gens, degree)
    report.suites += check_aux(gens, degree, nmax)
    report.suites += check_weight_conjugation(gens, degree)
    report.suites += check_heisenberg(gens.cs, degree)
    report.suites += check_highest_weight(gens)
    return report
